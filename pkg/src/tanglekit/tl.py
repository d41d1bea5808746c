"""Temperley-Lieb algebras over the field of rational functions in A.

Elements are exact linear combinations of crossingless matchings of
boundary points (some on a top edge, some on a bottom edge), with
stacking as multiplication: gluing two diagrams concatenates their
strands and converts every closed loop into a factor of
delta = -A^2 - A^-2.  On top of that engine the module builds the
Jones-Wenzl projectors, their loop and bubble evaluations, the basis
of the four-cluster subspace used for cabled 2-tangles, and the
expansion of a cabled, projector-dressed rational tangle over that
basis together with the resulting ratio invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import oracle
from .ring import LaurentPoly, RatFunc, poly_exact_div, poly_lcm
from .tangles import (
    CORNERS,
    PlanarTangleDiagram,
    RationalTangle,
    TwistWord,
    cable_diagram,
    cabled_crossing_grid,
    curl_diagram,
    rational_to_diagram,
    to_twist_word,
)

__all__ = [
    "MAX_PROJECTOR_STRANDS",
    "TLElement",
    "JonesWenzl",
    "QuantumCoeffs",
    "catalan",
    "enumerate_matchings",
    "identity_element",
    "e_generator",
    "unit_element",
    "tl_multiply",
    "compose",
    "tensor",
    "trace_close",
    "rotate_cw",
    "rotate_ccw",
    "state_sum",
    "tile_element",
    "kink_element",
    "add_bottom_twist",
    "add_right_twist",
    "projector_frame",
    "colored_element",
    "jones_wenzl",
    "quantum_coeffs",
    "bni_basis",
    "colored_expand",
    "colored_ratios",
]

#: Largest strand count for which Jones-Wenzl projectors are built.
MAX_PROJECTOR_STRANDS = 6

_DELTA = LaurentPoly({2: -1, -2: -1})


def _as_ratfunc(c) -> RatFunc:
    out = RatFunc._coerce(c)
    if out is NotImplemented:
        raise TypeError(f"cannot use {type(c).__name__} as a coefficient")
    return out


# ---------------------------------------------------------------------------
# Crossingless matchings
# ---------------------------------------------------------------------------
#
# A matching on (top, bottom) points is stored as a partner tuple over
# the flat index space 0..top-1 (top edge, left to right) followed by
# top..top+bottom-1 (bottom edge, left to right).  Around the disk the
# points appear in the order: top row left to right, then bottom row
# right to left.

def catalan(n: int) -> int:
    """Number of crossingless matchings on n + n points."""
    return comb(2 * n, n) // (n + 1)


def _boundary_cycle(top: int, bottom: int):
    return list(range(top)) + list(range(top + bottom - 1, top - 1, -1))


def _is_planar_matching(partner, top: int, bottom: int) -> bool:
    stack = []
    for p in _boundary_cycle(top, bottom):
        if stack and stack[-1] == partner[p]:
            stack.pop()
        else:
            stack.append(p)
    return not stack


def enumerate_matchings(top: int, bottom: int = None) -> list:
    """All crossingless matchings on the given boundary, as partner tuples."""
    if bottom is None:
        bottom = top
    m = top + bottom
    if m % 2:
        return []
    seq = _boundary_cycle(top, bottom)

    def rec(points):
        if not points:
            yield ()
            return
        a = points[0]
        for idx in range(1, len(points), 2):
            b = points[idx]
            for inner in rec(points[1:idx]):
                for outer in rec(points[idx + 1:]):
                    yield ((a, b),) + inner + outer

    out = []
    for pairs in rec(seq):
        partner = [0] * m
        for a, b in pairs:
            partner[a], partner[b] = b, a
        out.append(tuple(partner))
    return out


# ---------------------------------------------------------------------------
# Elements
# ---------------------------------------------------------------------------

class TLElement:
    """Linear combination of crossingless matchings with RatFunc weights.

    top and bottom give the number of boundary points on each edge; the
    terms dict maps partner tuples to nonzero coefficients.
    """

    __slots__ = ("top", "bottom", "terms")

    def __init__(self, top: int, bottom: int, terms=None):
        self.top = int(top)
        self.bottom = int(bottom)
        m = self.top + self.bottom
        clean = {}
        if terms:
            for partner, c in terms.items():
                c = _as_ratfunc(c)
                if c.is_zero:
                    continue
                partner = tuple(partner)
                if len(partner) != m or any(
                    partner[partner[i]] != i or partner[i] == i for i in range(m)
                ):
                    raise ValueError(f"not a perfect matching of {m} points: {partner}")
                if not _is_planar_matching(partner, self.top, self.bottom):
                    raise ValueError(f"matching is not crossingless: {partner}")
                clean[partner] = c
        self.terms = clean

    # -- structure ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, partner) -> RatFunc:
        return self.terms.get(tuple(partner), RatFunc.zero())

    def __eq__(self, other) -> bool:
        if not isinstance(other, TLElement):
            return NotImplemented
        return (
            self.top == other.top
            and self.bottom == other.bottom
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.top, self.bottom, frozenset(self.terms.items())))

    # -- linear operations ------------------------------------------------

    def _require_same_shape(self, other):
        if self.top != other.top or self.bottom != other.bottom:
            raise ValueError(
                f"size mismatch: ({self.top},{self.bottom}) vs "
                f"({other.top},{other.bottom})"
            )

    def __add__(self, other) -> "TLElement":
        if not isinstance(other, TLElement):
            return NotImplemented
        self._require_same_shape(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, RatFunc.zero()) + c
            if s.is_zero:
                out.pop(k, None)
            else:
                out[k] = s
        result = TLElement(self.top, self.bottom)
        result.terms = out
        return result

    def __neg__(self) -> "TLElement":
        result = TLElement(self.top, self.bottom)
        result.terms = {k: -c for k, c in self.terms.items()}
        return result

    def __sub__(self, other) -> "TLElement":
        if not isinstance(other, TLElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "TLElement":
        c = _as_ratfunc(c)
        result = TLElement(self.top, self.bottom)
        if not c.is_zero:
            result.terms = {k: v * c for k, v in self.terms.items()}
        return result

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            parts.append(f"({self.terms[k]})*{k}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"TLElement({self.top},{self.bottom}: {self})"


def _wire(top: int, bottom: int, pairs) -> TLElement:
    """Single crossingless diagram with coefficient one from point pairs."""
    partner = [0] * (top + bottom)
    for a, b in pairs:
        partner[a], partner[b] = b, a
    return TLElement(top, bottom, {tuple(partner): RatFunc.one()})


def identity_element(n: int) -> TLElement:
    return _wire(n, n, [(j, n + j) for j in range(n)])


def e_generator(n: int, i: int) -> TLElement:
    """The hook generator joining neighbours i, i+1 (1-indexed) in TL_n."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"hook index {i} outside 1..{n - 1}")
    pairs = [(i - 1, i), (n + i - 1, n + i)]
    pairs += [(j, n + j) for j in range(n) if j not in (i - 1, i)]
    return _wire(n, n, pairs)


def unit_element(n: int, kind: str) -> TLElement:
    """The crossingless 2-tangle with n-fold cabled strands, in TL_2n.

    kind "inf" is the two vertical cables (the identity matching) and
    kind "0" the two horizontal ones (nested top caps and bottom cups).
    """
    m = 2 * n
    if kind == "inf":
        return identity_element(m)
    if kind == "0":
        pairs = [(k, m - 1 - k) for k in range(n)]
        pairs += [(m + k, 2 * m - 1 - k) for k in range(n)]
        return _wire(m, m, pairs)
    raise ValueError(f"unknown crossingless tangle {kind!r}")


# ---------------------------------------------------------------------------
# The glue engine
# ---------------------------------------------------------------------------
#
# Gluing is done over a common denominator: an element is split into a
# dict of LaurentPoly numerators plus one shared denominator, the whole
# double loop then runs in plain polynomial arithmetic, and each output
# coefficient is reduced exactly once at the end.  Exact gcd reduction
# of rational functions is by far the dominant cost, so keeping it out
# of the inner loop is what makes projector-sized products feasible.

_ONE_POLY = LaurentPoly.one()
_delta_lp_powers = [_ONE_POLY]


def _delta_lp(k: int) -> LaurentPoly:
    while len(_delta_lp_powers) <= k:
        _delta_lp_powers.append(_delta_lp_powers[-1] * _DELTA)
    return _delta_lp_powers[k]


class _Split:
    """Internal form of an element: polynomial numerators / one denominator."""

    __slots__ = ("top", "bottom", "terms", "den")

    def __init__(self, top, bottom, terms, den):
        self.top = top
        self.bottom = bottom
        self.terms = terms
        self.den = den


def _split(x: TLElement) -> _Split:
    den = _ONE_POLY
    for c in x.terms.values():
        if c.den.coeffs != _ONE_POLY.coeffs and c.den.coeffs != den.coeffs:
            den = c.den if den.coeffs == _ONE_POLY.coeffs else poly_lcm(den, c.den)
    if den.coeffs == _ONE_POLY.coeffs:
        terms = {k: c.num for k, c in x.terms.items()}
    else:
        terms = {
            k: c.num * poly_exact_div(den, c.den) for k, c in x.terms.items()
        }
    return _Split(x.top, x.bottom, terms, den)


def _unsplit(s: _Split) -> TLElement:
    result = TLElement(s.top, s.bottom)
    if s.den.coeffs == _ONE_POLY.coeffs:
        result.terms = {
            k: RatFunc(v, _ONE_POLY) for k, v in s.terms.items() if not v.is_zero
        }
    else:
        result.terms = {}
        for k, v in s.terms.items():
            if not v.is_zero:
                c = RatFunc.normalized(v, s.den)
                if not c.is_zero:
                    result.terms[k] = c
    return result


def _compose_split(x: _Split, y: _Split) -> _Split:
    acc = {}
    for ma, ca in x.terms.items():
        for mb, cb in y.terms.items():
            m, loops = _glue_matchings(ma, mb, x.top, x.bottom, y.bottom)
            c = ca * cb
            if loops:
                c = c * _delta_lp(loops)
            prev = acc.get(m)
            acc[m] = c if prev is None else prev + c
    return _Split(x.top, y.bottom, acc, x.den * y.den)


def _tensor_split(x: _Split, y: _Split) -> _Split:
    top = x.top + y.top
    bottom = x.bottom + y.bottom

    def remap_x(i):
        return i if i < x.top else top + (i - x.top)

    def remap_y(i):
        return x.top + i if i < y.top else top + x.bottom + (i - y.top)

    acc = {}
    for ma, ca in x.terms.items():
        base = [0] * (top + bottom)
        for i, j in enumerate(ma):
            base[remap_x(i)] = remap_x(j)
        for mb, cb in y.terms.items():
            partner = list(base)
            for i, j in enumerate(mb):
                partner[remap_y(i)] = remap_y(j)
            key = tuple(partner)
            c = ca * cb
            prev = acc.get(key)
            acc[key] = c if prev is None else prev + c
    return _Split(top, bottom, acc, x.den * y.den)


def _trace_split(s: _Split) -> RatFunc:
    m = s.top
    total = LaurentPoly.zero()
    for partner, coeff in s.terms.items():
        visited = [False] * (2 * m)
        cycles = 0
        for st in range(2 * m):
            if visited[st]:
                continue
            cycles += 1
            cur = st
            while not visited[cur]:
                visited[cur] = True
                j = partner[cur]
                visited[j] = True
                cur = j + m if j < m else j - m
        total = total + coeff * _delta_lp(cycles)
    return RatFunc.normalized(total, s.den)


def _glue_matchings(a, b, p: int, q: int, r: int):
    """Stack matching a (p top, q bottom) over b (q top, r bottom).

    Returns the induced matching on (p, r) and the number of closed
    loops trapped in the middle layer.
    """
    total = p + r
    partner = [-1] * total
    seen = [False] * q
    for start in range(total):
        if partner[start] != -1:
            continue
        if start < p:
            in_a, pt = True, start
        else:
            in_a, pt = False, q + (start - p)
        while True:
            if in_a:
                nxt = a[pt]
                if nxt < p:
                    end = nxt
                    break
                seen[nxt - p] = True
                in_a, pt = False, nxt - p
            else:
                nxt = b[pt]
                if nxt >= q:
                    end = p + (nxt - q)
                    break
                seen[nxt] = True
                in_a, pt = True, p + nxt
        partner[start] = end
        partner[end] = start
    loops = 0
    for m0 in range(q):
        if seen[m0]:
            continue
        loops += 1
        m = m0
        while not seen[m]:
            seen[m] = True
            m1 = a[p + m] - p
            seen[m1] = True
            m = b[m1]
    return tuple(partner), loops


def compose(x: TLElement, y: TLElement) -> TLElement:
    """Stack x above y, joining x's bottom points to y's top points."""
    if x.bottom != y.top:
        raise ValueError(
            f"size mismatch: cannot join a {x.bottom}-point bottom "
            f"to a {y.top}-point top"
        )
    return _unsplit(_compose_split(_split(x), _split(y)))


def tl_multiply(x: TLElement, y: TLElement, n: int = None) -> TLElement:
    """Product in TL_n by diagram stacking (x above y)."""
    if n is not None:
        for z in (x, y):
            if z.top != n or z.bottom != n:
                raise ValueError(
                    f"size mismatch: expected an element of TL_{n}, "
                    f"got shape ({z.top},{z.bottom})"
                )
    return compose(x, y)


def tensor(x: TLElement, y: TLElement) -> TLElement:
    """Place x and y side by side (x on the left)."""
    return _unsplit(_tensor_split(_split(x), _split(y)))


def trace_close(x: TLElement) -> RatFunc:
    """Close top point k onto bottom point k inside the disk.

    Every resulting loop is contractible, so the value is a sum of
    coefficients times powers of the loop scalar.
    """
    if x.top != x.bottom:
        raise ValueError("trace closure needs equal top and bottom counts")
    return _trace_split(_split(x))


# ---------------------------------------------------------------------------
# Quarter-turn rotation of 2-tangle elements
# ---------------------------------------------------------------------------
#
# A cabled 2-tangle with n strands per corner lives in TL_2n with the
# top row reading NW cluster then NE cluster (left to right) and the
# bottom row SW then SE.  Rotating the disk a quarter turn clockwise
# permutes the four clusters (NW->NE->SE->SW->NW); it is a planar
# isotopy, so it permutes matchings without touching coefficients.

def _rotate_cw_map(n: int):
    m = 2 * n
    phi = [0] * (2 * m)
    for k in range(n):
        phi[k] = n + k                      # NW -> NE
        phi[n + k] = 2 * m - 1 - k          # NE -> SE, order reversed
        phi[m + k] = n - 1 - k              # SW -> NW, order reversed
        phi[m + n + k] = m + k              # SE -> SW
    return phi


def _apply_point_map(x: TLElement, phi) -> TLElement:
    acc = {}
    for partner, coeff in x.terms.items():
        out = [0] * len(partner)
        for i, j in enumerate(partner):
            out[phi[i]] = phi[j]
        acc[tuple(out)] = coeff
    result = TLElement(x.top, x.bottom)
    result.terms = acc
    return result


def _require_cabled_square(x: TLElement) -> int:
    if x.top != x.bottom or x.top % 2:
        raise ValueError("rotation needs a 2-tangle element with even width")
    return x.top // 2


def rotate_cw(x: TLElement) -> TLElement:
    """Quarter turn clockwise of a cabled 2-tangle element."""
    n = _require_cabled_square(x)
    return _apply_point_map(x, _rotate_cw_map(n))


def rotate_ccw(x: TLElement) -> TLElement:
    """Quarter turn counterclockwise (inverse of rotate_cw)."""
    n = _require_cabled_square(x)
    phi = _rotate_cw_map(n)
    inv = [0] * len(phi)
    for i, j in enumerate(phi):
        inv[j] = i
    return _apply_point_map(x, inv)


# ---------------------------------------------------------------------------
# State sums of planar diagrams
# ---------------------------------------------------------------------------

def _cluster_labels(d: PlanarTangleDiagram):
    """Top and bottom label lists for a 2-tangle or cabled boundary."""
    labels = [lab for lab, _ in d.boundary]
    if set(labels) == set(CORNERS):
        return ["NW", "NE"], ["SW", "SE"]
    clusters = {c: [] for c in CORNERS}
    for lab in labels:
        corner, sep, idx = lab.partition(":")
        if not sep or corner not in clusters:
            return None
        clusters[corner].append((int(idx), lab))
    # cable indices count left to right as seen from outside the disk,
    # which is right to left in the usual north-up view of every corner
    ordered = {
        c: [lab for _, lab in sorted(v, reverse=True)] for c, v in clusters.items()
    }
    return ordered["NW"] + ordered["NE"], ordered["SW"] + ordered["SE"]


def _braid_labels(d: PlanarTangleDiagram):
    tops, bottoms = [], []
    for lab, _ in d.boundary:
        if lab.startswith("t"):
            tops.append((int(lab[1:]), lab))
        elif lab.startswith("b"):
            bottoms.append((int(lab[1:]), lab))
        else:
            return None
    return [lab for _, lab in sorted(tops)], [lab for _, lab in sorted(bottoms)]


def state_sum(d: PlanarTangleDiagram, top_labels=None, bottom_labels=None):
    """Evaluate a diagram by smoothing enumeration.

    Closed diagrams evaluate in the annulus and return an
    AnnulusElement; diagrams with boundary expand over crossingless
    matchings of their boundary points and return a TLElement.  The
    top/bottom reading of the boundary is inferred for 2-tangle corner
    labels (cabled or not) and t*/b* braid labels, or may be forced by
    passing explicit label lists.
    """
    if not d.boundary:
        from .annulus import AnnulusElement

        return AnnulusElement.from_laurent_map(oracle.closure_coefficients(d))
    if top_labels is None or bottom_labels is None:
        split = _cluster_labels(d) or _braid_labels(d)
        if split is None:
            raise ValueError("cannot infer a top/bottom reading of the boundary")
        top_labels, bottom_labels = split
    raw = oracle.matchings_of_diagram(d, top_labels, bottom_labels)
    terms = {k: RatFunc.from_laurent(v) for k, v in raw.items()}
    return TLElement(len(top_labels), len(bottom_labels), terms)


_tile_cache = {}


def tile_element(n: int, sign: int) -> TLElement:
    """Two n-cables crossing once, as an element of TL_2n.

    Precomputed by a 2^(n^2) state sum of the cabled crossing grid and
    cached; composition chains of these tiles replace the infeasible
    one-shot state sum of a whole cabled tangle.
    """
    key = (n, 1 if sign > 0 else -1)
    if key not in _tile_cache:
        _tile_cache[key] = state_sum(cabled_crossing_grid(n, key[1]))
    return _tile_cache[key]


_kink_cache = {}


def kink_element(n: int, sign: int) -> TLElement:
    """An n-cable making one kink, as an element of TL_n."""
    key = (n, 1 if sign > 0 else -1)
    if key not in _kink_cache:
        _kink_cache[key] = state_sum(curl_diagram(n, key[1]))
    return _kink_cache[key]


def add_bottom_twist(x: TLElement, s: int) -> TLElement:
    """Append one bottom half twist (sign s) to a cabled 2-tangle element."""
    n = _require_cabled_square(x)
    return compose(x, tile_element(n, s))


def add_right_twist(x: TLElement, s: int) -> TLElement:
    """Append one right half twist (sign s) to a cabled 2-tangle element.

    Realized by a quarter turn: rotated clockwise, the right side of
    the tangle becomes its bottom, and the rotated twist tile carries
    the opposite sign.
    """
    n = _require_cabled_square(x)
    return rotate_ccw(compose(rotate_cw(x), tile_element(n, -s)))


# ---------------------------------------------------------------------------
# Jones-Wenzl projectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JonesWenzl:
    """The projector on n strands: idempotent and killed by every hook."""

    n: int
    element: TLElement


_delta_polys = [LaurentPoly.one(), _DELTA]


def _delta_poly(k: int) -> LaurentPoly:
    """Loop value of the closed k-strand projector (Chebyshev recurrence)."""
    while len(_delta_polys) <= k:
        _delta_polys.append(_DELTA * _delta_polys[-1] - _delta_polys[-2])
    return _delta_polys[k]


_jw_cache = {}


def _projector(n: int) -> TLElement:
    if n > MAX_PROJECTOR_STRANDS:
        raise ValueError(
            f"projector on {n} strands exceeds the bound {MAX_PROJECTOR_STRANDS}"
        )
    if n not in _jw_cache:
        if n == 0:
            result = TLElement(0, 0, {(): RatFunc.one()})
        elif n == 1:
            result = identity_element(1)
        else:
            prev = _projector(n - 1)
            wide = tensor(prev, identity_element(1))
            hook = e_generator(n, n - 1)
            ratio = RatFunc.normalized(_delta_poly(n - 2), _delta_poly(n - 1))
            result = wide - compose(compose(wide, hook), wide).scale(ratio)
        _jw_cache[n] = result
    return _jw_cache[n]


_jw_split_cache = {}


def _projector_split(n: int) -> _Split:
    if n not in _jw_split_cache:
        _jw_split_cache[n] = _split(_projector(n))
    return _jw_split_cache[n]


def jones_wenzl(n: int) -> JonesWenzl:
    """Projector on n strands, built by peeling one strand at a time."""
    if n < 1:
        raise ValueError("projector needs at least one strand")
    return JonesWenzl(n, _projector(n))


_frame_split_cache = {}


def _frame_split(n: int) -> _Split:
    if n not in _frame_split_cache:
        s = _projector_split(n)
        _frame_split_cache[n] = _tensor_split(s, s)
    return _frame_split_cache[n]


def projector_frame(n: int) -> TLElement:
    """Two side-by-side n-strand projectors in TL_2n."""
    return _unsplit(_frame_split(n))


# ---------------------------------------------------------------------------
# Loop, bubble, and kink coefficients
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuantumCoeffs:
    """Closed evaluations attached to a pair (n, i) with 0 <= i <= n.

    delta is the value of a closed n-strand projector loop, theta the
    value of the two-vertex bubble whose three edges carry n, n, and 2i
    strands, and mu the framing unit picked up by a projector-dressed
    kink, (-1)^n A^(-n^2-2n).
    """

    delta: RatFunc
    theta: RatFunc
    mu: LaurentPoly


def _pinch_wires(n: int, i: int):
    """Wiring diagrams narrowing two n-cables to a 2i-cable and back.

    narrow: top 2n points (two n-cables side by side), bottom 2i.  The
    n-i facing innermost strands of the two cables turn and join each
    other in nested arcs; the outer i strands of each cable continue
    down.  widen is the vertical mirror.
    """
    m, w = 2 * n, 2 * i
    narrow_pairs = [(n - 1 - p, n + p) for p in range(n - i)]
    narrow_pairs += [(j, m + j) for j in range(i)]
    narrow_pairs += [(m - i + j, m + i + j) for j in range(i)]
    widen_pairs = [(w + n - 1 - p, w + n + p) for p in range(n - i)]
    widen_pairs += [(j, w + j) for j in range(i)]
    widen_pairs += [(i + j, w + m - i + j) for j in range(i)]
    return _wire(m, w, narrow_pairs), _wire(w, m, widen_pairs)


def quantum_coeffs(n: int, i: int) -> QuantumCoeffs:
    """Loop, bubble, and kink coefficients for colors (n, 2i)."""
    if not 0 <= i <= n:
        raise ValueError(f"edge color index {i} outside 0..{n}")
    delta = _trace_split(_projector_split(n))
    narrow, widen = _pinch_wires(n, i)
    bubble = _compose_split(
        _compose_split(_split(widen), _frame_split(n)), _split(narrow)
    )
    theta = _trace_split(_compose_split(_projector_split(2 * i), bubble))
    mu = LaurentPoly.monomial(-n * n - 2 * n, 1 if n % 2 == 0 else -1)
    return QuantumCoeffs(delta=delta, theta=theta, mu=mu)


# ---------------------------------------------------------------------------
# The four-cluster basis
# ---------------------------------------------------------------------------

_bni_cache = {}


def bni_basis(n: int) -> list:
    """Basis of the cabled 2-tangle subspace of TL_2n, one element per
    through-color 2i.

    Element i routes each side cable through an n-strand projector and
    pinches them together across a horizontal 2i-strand bridge wearing
    its own projector; i runs from 0 (cables joined left and right,
    nothing across) to n (full bridge).  Built upright and then turned
    a quarter turn so the bridge runs horizontally.
    """
    if 2 * n > MAX_PROJECTOR_STRANDS:
        raise ValueError(
            f"cable width {n} needs a projector on {2 * n} strands, "
            f"beyond the bound {MAX_PROJECTOR_STRANDS}"
        )
    if n not in _bni_cache:
        frame = _frame_split(n)
        basis = []
        for i in range(n + 1):
            narrow, widen = _pinch_wires(n, i)
            core = _compose_split(
                _compose_split(_split(narrow), _projector_split(2 * i)),
                _split(widen),
            )
            upright = _compose_split(_compose_split(frame, core), frame)
            basis.append(rotate_cw(_unsplit(upright)))
        _bni_cache[n] = basis
    return _bni_cache[n]


# ---------------------------------------------------------------------------
# Colored expansion of 2-tangles
# ---------------------------------------------------------------------------

def _word_element(word: TwistWord, n: int) -> TLElement:
    x = unit_element(n, word.start)
    for kind, s in word.moves:
        x = add_right_twist(x, s) if kind == "R" else add_bottom_twist(x, s)
    return x


def _diagram_element(d: PlanarTangleDiagram, n: int) -> TLElement:
    cabled = cable_diagram(d, n) if n > 1 else d
    return state_sum(cabled)


def colored_element(t, n: int) -> TLElement:
    """The n-cabled, projector-dressed 2-tangle as an element of TL_2n.

    Rational tangles are replayed twist by twist through precomputed
    crossing tiles; raw diagrams are cabled and fed to the state-sum
    enumerator.  Either way both open strands end up dressed with an
    n-strand projector (the projector absorbs its own copies, so where
    along the strand it sits does not matter).
    """
    if 2 * n > MAX_PROJECTOR_STRANDS:
        raise ValueError(
            f"cable width {n} needs a projector on {2 * n} strands, "
            f"beyond the bound {MAX_PROJECTOR_STRANDS}"
        )
    if isinstance(t, PlanarTangleDiagram):
        base = _diagram_element(t, n)
    else:
        word = t if isinstance(t, TwistWord) else to_twist_word(t)
        base = _word_element(word, n)
    frame = _frame_split(n)
    return _unsplit(_compose_split(frame, _compose_split(_split(base), frame)))


def _solve_in_span(columns, target):
    """Exact coordinates of target in the span of the given elements."""
    keys = set(target.terms)
    for col in columns:
        keys.update(col.terms)
    keys = sorted(keys)
    rows = [
        [col.terms.get(k, RatFunc.zero()) for col in columns]
        + [target.terms.get(k, RatFunc.zero())]
        for k in keys
    ]
    width = len(columns)
    pivot_row_of = {}
    r = 0
    for j in range(width):
        piv = next((i for i in range(r, len(rows)) if not rows[i][j].is_zero), None)
        if piv is None:
            raise ValueError("basis failure: singular system")
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][j].inverse()
        rows[r] = [c * inv for c in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][j].is_zero:
                f = rows[i][j]
                rows[i] = [c - f * d for c, d in zip(rows[i], rows[r])]
        pivot_row_of[j] = r
        r += 1
    for i in range(r, len(rows)):
        if not rows[i][-1].is_zero:
            raise ValueError("basis failure: element outside the basis span")
    return [rows[pivot_row_of[j]][-1] for j in range(width)]


def colored_expand(t, n: int) -> list:
    """Coordinates of the n-cabled, projector-dressed tangle over bni_basis."""
    return _solve_in_span(bni_basis(n), colored_element(t, n))


def colored_ratios(gammas: list) -> list:
    """Quotients of the colored coordinates by the top one.

    Dividing by the last coordinate kills the framing unit a kink
    multiplies the whole list by, leaving honest isotopy invariants.
    When the top coordinate vanishes the list is normalized by the last
    nonzero one instead (a projective reading, flagged by a warning).
    """
    gammas = [_as_ratfunc(g) for g in gammas]
    k = next((j for j in range(len(gammas) - 1, -1, -1) if not gammas[j].is_zero), None)
    if k is None:
        raise ValueError("zero skein element")
    if k != len(gammas) - 1:
        import warnings

        warnings.warn(
            "top colored coordinate vanishes; normalizing by the last nonzero one",
            stacklevel=2,
        )
    top = gammas[k]
    return [g / top for g in gammas[:k]]


# ---------------------------------------------------------------------------
# Convenience for tests and callers
# ---------------------------------------------------------------------------

def tangle_element(t: RationalTangle, n: int = 1) -> TLElement:
    """Undressed cabled 2-tangle element (no projectors)."""
    if isinstance(t, PlanarTangleDiagram):
        return _diagram_element(t, n)
    word = t if isinstance(t, TwistWord) else to_twist_word(t)
    return _word_element(word, n)


def random_element(rng, n: int, max_terms: int = 3) -> TLElement:
    """Small random element of TL_n for property tests."""
    pool = enumerate_matchings(n, n)
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        m = pool[rng.randrange(len(pool))]
        c = LaurentPoly.monomial(rng.randint(-2, 2), Fraction(rng.randint(-3, 3)))
        terms[m] = terms.get(m, RatFunc.zero()) + c
    return TLElement(n, n, terms)
