"""Skein of the annulus and solid-torus closures of rational tangles.

A 2-tangle closes into the solid torus by joining its two top corners
around the core and likewise its two bottom corners.  The resulting
skein element is a polynomial in z, the zero-framed core parallel; this
module provides that closure at three levels (bracket coordinates,
Temperley-Lieb elements, raw diagrams through the oracle), conversion
to the Chebyshev basis, fraction-based classification of the closures,
and the colored closure with its ratio invariants.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from . import oracle, tl
from .bracket import BracketVec2, bracket_vector, c_invariant
from .rationals import ExtRational, parity
from .ring import LaurentPoly, RatFunc
from .tangles import (
    PlanarTangleDiagram,
    RationalTangle,
    clasp_double,
    clasp_single,
    left_linking_number,
)

__all__ = [
    "AnnulusElement",
    "HomotopyType",
    "SolidTorusRationalLink",
    "chebyshev_convert",
    "chebyshev_polynomial",
    "closure_bracket",
    "colored_closure",
    "counterexample_check",
    "CounterexampleReport",
    "element_closure",
    "fraction_from_closure",
    "gamma_ratio_invariants",
    "homotopy_type",
    "link_fraction",
    "links_equivalent",
    "solid_torus_closure",
]

_DELTA = LaurentPoly({2: -1, -2: -1})
_DELTA_RF = RatFunc.from_laurent(_DELTA)


def _as_ratfunc(c) -> RatFunc:
    out = RatFunc._coerce(c)
    if out is NotImplemented:
        raise TypeError(f"cannot use {type(c).__name__} as a coefficient")
    return out


# ---------------------------------------------------------------------------
# Elements of the annulus skein
# ---------------------------------------------------------------------------

class AnnulusElement:
    """Polynomial in the core curve z with RatFunc coefficients.

    z^k stands for k parallel essential circles; the coefficients dict
    maps k to a nonzero coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for k, c in coeffs.items():
                if k < 0:
                    raise ValueError("negative power of the core curve")
                c = _as_ratfunc(c)
                if not c.is_zero:
                    clean[int(k)] = c
        self.coeffs = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "AnnulusElement":
        return cls()

    @classmethod
    def from_laurent_map(cls, coeffs) -> "AnnulusElement":
        return cls({k: RatFunc.from_laurent(p) for k, p in coeffs.items()})

    @classmethod
    def core_power(cls, k: int, coeff=1) -> "AnnulusElement":
        return cls({k: coeff})

    @classmethod
    def from_chebyshev(cls, coords) -> "AnnulusElement":
        """Assemble an element from Chebyshev coordinates (low to high)."""
        total = cls.zero()
        for i, c in enumerate(coords):
            total = total + chebyshev_polynomial(i).scale(c)
        return total

    # -- structure ------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero element has no degree")
        return max(self.coeffs)

    def coefficient(self, k: int) -> RatFunc:
        return self.coeffs.get(k, RatFunc.zero())

    def __eq__(self, other) -> bool:
        if not isinstance(other, AnnulusElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other) -> "AnnulusElement":
        if not isinstance(other, AnnulusElement):
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, RatFunc.zero()) + c
            if s.is_zero:
                out.pop(k, None)
            else:
                out[k] = s
        result = AnnulusElement()
        result.coeffs = out
        return result

    def __neg__(self) -> "AnnulusElement":
        result = AnnulusElement()
        result.coeffs = {k: -c for k, c in self.coeffs.items()}
        return result

    def __sub__(self, other) -> "AnnulusElement":
        if not isinstance(other, AnnulusElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "AnnulusElement":
        c = _as_ratfunc(c)
        result = AnnulusElement()
        if not c.is_zero:
            result.coeffs = {k: v * c for k, v in self.coeffs.items()}
        return result

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in sorted(self.coeffs, reverse=True):
            c = self.coeffs[k]
            if k == 0:
                parts.append(f"({c})")
            else:
                var = "z" if k == 1 else f"z^{k}"
                parts.append(var if c == RatFunc.one() else f"({c})*{var}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"AnnulusElement({self})"


# ---------------------------------------------------------------------------
# Chebyshev basis
# ---------------------------------------------------------------------------

_chebyshev_cache = [{0: 1}, {1: 1}]


def _chebyshev_coeffs(k: int) -> dict:
    """Integer z-coefficients of S_k via S_{k+1} = z*S_k - S_{k-1}."""
    while len(_chebyshev_cache) <= k:
        prev, last = _chebyshev_cache[-2], _chebyshev_cache[-1]
        nxt = {e + 1: c for e, c in last.items()}
        for e, c in prev.items():
            s = nxt.get(e, 0) - c
            if s:
                nxt[e] = s
            else:
                del nxt[e]
        _chebyshev_cache.append(nxt)
    return _chebyshev_cache[k]


def chebyshev_polynomial(k: int) -> AnnulusElement:
    """The basis element S_k as a polynomial in z."""
    return AnnulusElement({e: RatFunc.from_scalar(c) for e, c in _chebyshev_coeffs(k).items()})


def chebyshev_convert(e: AnnulusElement) -> list:
    """Coordinates of an element in the basis S_0, S_1, ..., S_deg.

    Back-substitution from the top degree down; each S_k is monic of
    degree k, so the conversion is exact and round-trips.
    """
    if e.is_zero:
        return []
    work = dict(e.coeffs)
    coords = [RatFunc.zero()] * (max(work) + 1)
    for k in range(len(coords) - 1, -1, -1):
        c = work.get(k)
        if c is None:
            continue
        coords[k] = c
        for exp, s in _chebyshev_coeffs(k).items():
            v = work.get(exp, RatFunc.zero()) - c * s
            if v.is_zero:
                work.pop(exp, None)
            else:
                work[exp] = v
    return coords


# ---------------------------------------------------------------------------
# Solid-torus closure
# ---------------------------------------------------------------------------

def _closure_bonds(m: int):
    """Bond partner and traversal winding for closing a width-m element.

    Top point p joins top point m-1-p over the core (west to east is
    winding +1) and bottom point m+p joins bottom point 2m-1-p.
    """
    to = {}
    w = {}
    for p in range(m // 2):
        pairs = ((p, m - 1 - p), (m + p, 2 * m - 1 - p))
        for a, b in pairs:
            to[a], w[a] = b, 1
            to[b], w[b] = a, -1
    return to, w


def element_closure(x) -> AnnulusElement:
    """Close a 2-tangle element of TL_2n around the annulus core.

    Every matching strand becomes part of a circle alternating through
    closure bonds; a circle of total winding 0 is contractible (factor
    delta) and winding +-1 makes one essential circle (factor z).
    """
    if x.top != x.bottom or x.top % 2:
        raise ValueError("closure needs a 2-tangle element with even width")
    m = x.top
    bond_to, bond_w = _closure_bonds(m)
    delta = RatFunc.from_laurent(_DELTA)
    out = AnnulusElement.zero()
    for partner, coeff in x.terms.items():
        visited = [False] * (2 * m)
        contractible = 0
        essential = 0
        for start in range(2 * m):
            if visited[start]:
                continue
            winding = 0
            cur = start
            while not visited[cur]:
                visited[cur] = True
                j = partner[cur]
                visited[j] = True
                winding += bond_w[j]
                cur = bond_to[j]
            if winding == 0:
                contractible += 1
            else:
                if abs(winding) != 1:
                    raise AssertionError(
                        f"embedded circle with winding {winding} cannot occur"
                    )
                essential += 1
        term = coeff
        for _ in range(contractible):
            term = term * delta
        out = out + AnnulusElement.core_power(essential, term)
    return out


def closure_bracket(t) -> AnnulusElement:
    """Solid-torus closure in the z basis.

    For a rational tangle (or twist word) with bracket coordinates
    (alpha, beta) the closure is alpha*delta + beta*z^2: the vertical
    part closes into two nested contractible circles' worth delta, the
    horizontal part into two essential circles.  Diagram inputs go
    through the state-sum oracle instead.
    """
    if isinstance(t, PlanarTangleDiagram):
        closed = t if not t.boundary else oracle.annular_closure(t)
        return AnnulusElement.from_laurent_map(oracle.closure_coefficients(closed))
    vec = bracket_vector(t)
    return AnnulusElement(
        {0: RatFunc.from_laurent(vec.alpha * _DELTA), 2: RatFunc.from_laurent(vec.beta)}
    )


# ---------------------------------------------------------------------------
# Rational links in the solid torus
# ---------------------------------------------------------------------------

class HomotopyType(Enum):
    """The three homotopy classes of a rational-tangle closure."""

    TWO_COMPONENT = "TWO_COMPONENT"
    TRIVIAL_KNOT = "TRIVIAL_KNOT"
    WINDING_KNOT = "WINDING_KNOT"


_PARITY_TO_TYPE = {
    "o/e": HomotopyType.TWO_COMPONENT,
    "e/o": HomotopyType.TRIVIAL_KNOT,
    "o/o": HomotopyType.WINDING_KNOT,
}


@dataclass(frozen=True)
class SolidTorusRationalLink:
    """The closure of a rational tangle around the annulus core."""

    source: RationalTangle


def solid_torus_closure(t: RationalTangle) -> SolidTorusRationalLink:
    return SolidTorusRationalLink(t)


def link_fraction(link: SolidTorusRationalLink) -> ExtRational:
    """The fraction of the closed link, a complete isotopy invariant."""
    return link.source.fraction


def fraction_from_closure(e: AnnulusElement) -> ExtRational:
    """Recover the fraction from closure coordinates alone.

    Divides the z^0 coefficient by delta to undo the closure of the
    vertical part, then evaluates the same ratio invariant used for
    open tangles at the special point.
    """
    alpha = (e.coefficient(0) / _DELTA_RF).as_laurent()
    beta = e.coefficient(2).as_laurent()
    return c_invariant(BracketVec2(alpha, beta))


def links_equivalent(a: SolidTorusRationalLink, b: SolidTorusRationalLink) -> bool:
    """Isotopy of closures is decided by fraction equality."""
    return link_fraction(a) == link_fraction(b)


def homotopy_type(link: SolidTorusRationalLink) -> HomotopyType:
    """Homotopy class of the closure, read off the fraction's parity."""
    return _PARITY_TO_TYPE[parity(link_fraction(link))]


# ---------------------------------------------------------------------------
# Colored closures
# ---------------------------------------------------------------------------

def colored_closure(t, n: int) -> AnnulusElement:
    """Closure of the n-cabled, projector-dressed tangle.

    Expands the colored tangle over the through-color basis and closes
    basis element i into (theta(n,n,2i)/Delta_2i) * S_2i.
    """
    gammas = tl.colored_expand(t, n)
    total = AnnulusElement.zero()
    for i, g in enumerate(gammas):
        if g.is_zero:
            continue
        q = tl.quantum_coeffs(n, i)
        bridge = RatFunc.from_laurent(tl._delta_poly(2 * i))
        total = total + chebyshev_polynomial(2 * i).scale(g * q.theta / bridge)
    return total


def gamma_ratio_invariants(e: AnnulusElement) -> list:
    """Chebyshev coordinates divided by the top one.

    The quotients are invariant under the framing unit a kink
    multiplies the closure by.
    """
    coords = chebyshev_convert(e)
    if not coords:
        raise ValueError("zero skein element")
    top = coords[-1]
    return [c / top for c in coords[:-1]]


# ---------------------------------------------------------------------------
# The non-rational counterexample
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CounterexampleReport:
    """Evidence that fraction-style closure invariants cannot classify
    general 2-tangles: two clasp tangles with different left linking
    numbers whose closures are equal in the annulus skein."""

    llk_single: int
    llk_double: int
    tangles_distinguished: bool
    closure_single: AnnulusElement
    closure_double: AnnulusElement
    closures_equal: bool


def counterexample_check() -> CounterexampleReport:
    single, double = clasp_single(), clasp_double()
    llk_s = left_linking_number(single)
    llk_d = left_linking_number(double)
    closure_s = closure_bracket(single)
    closure_d = closure_bracket(double)
    return CounterexampleReport(
        llk_single=llk_s,
        llk_double=llk_d,
        tangles_distinguished=llk_s != llk_d,
        closure_single=closure_s,
        closure_double=closure_d,
        closures_equal=closure_s == closure_d,
    )
