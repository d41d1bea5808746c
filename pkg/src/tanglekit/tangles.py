"""Two-string tangles: rational tangles as twist words, and general
planar tangle diagrams for the brute-force evaluator.

Diagram model
-------------
A diagram is a 4-valent plane graph with optional boundary points.
We store it as half-edges ("ends", small integers):

* each crossing owns four ends, listed counterclockwise with the
  understrand occupying entries 0 and 2;
* each boundary point owns one end and carries a label (the corner
  names NW, NE, SW, SE for a 2-tangle, or port names for cabled
  pieces);
* arcs join ends in pairs; an arc may carry an integer winding weight,
  the signed number of times its traversal (first end to second end)
  crosses a fixed ray out of the annulus puncture.  Weights matter only
  for diagrams drawn in the annulus.

Crossing sign convention: a crossing is positive when its overstrand
has positive slope; with counterclockwise ends and the understrand at
entries 0 and 2, the sign is +1 exactly when the understrand exits one
counterclockwise step after the overstrand exits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rationals import ExtRational, TwistVector, continued_fraction

__all__ = [
    "RationalTangle",
    "TwistWord",
    "PlanarTangleDiagram",
    "build_rational",
    "tangle_add",
    "tangle_negate",
    "tangle_invert",
    "to_twist_word",
    "rational_to_diagram",
    "diagram_zero",
    "diagram_infinity",
    "connectivity",
    "components",
    "left_linking_number",
    "clasp_single",
    "clasp_double",
    "clasp_around_right",
    "cabled_crossing_grid",
    "curl_diagram",
    "cable_diagram",
    "random_twist_vector",
]

CORNERS = ("NW", "NE", "SW", "SE")

TYPE_0 = "TYPE_0"
TYPE_INF = "TYPE_INF"
TYPE_1 = "TYPE_1"


# ---------------------------------------------------------------------------
# Rational tangles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RationalTangle:
    """A rational tangle presented by a twist vector; tv None means the
    infinity tangle (two vertical strands)."""

    tv: TwistVector | None

    @classmethod
    def infinity(cls) -> "RationalTangle":
        return cls(None)

    @classmethod
    def from_entries(cls, *entries) -> "RationalTangle":
        return cls(TwistVector(tuple(entries)))

    @property
    def is_infinity(self) -> bool:
        return self.tv is None

    @property
    def fraction(self) -> ExtRational:
        if self.tv is None:
            return ExtRational.infinity()
        return continued_fraction(self.tv)

    def __str__(self) -> str:
        return "[inf]" if self.tv is None else str(self.tv)


def build_rational(tv) -> RationalTangle:
    if not isinstance(tv, TwistVector):
        tv = TwistVector(tuple(tv))
    return RationalTangle(tv)


def tangle_add(t: RationalTangle, n: int) -> RationalTangle:
    """Add the integer tangle [n] on the right: fraction goes to F + n.

    Sums of two general rational tangles are usually not rational, so
    only integer summands are accepted.
    """
    if not isinstance(n, int):
        raise ValueError("sum of rational tangles need not be rational")
    if t.is_infinity:
        return t
    entries = list(t.tv.entries)
    entries[-1] += n
    return RationalTangle(TwistVector(tuple(entries)))


def tangle_negate(t: RationalTangle) -> RationalTangle:
    """Mirror image: fraction goes to -F."""
    if t.is_infinity:
        return t
    return RationalTangle(TwistVector(tuple(-a for a in t.tv.entries)))


def tangle_invert(t: RationalTangle) -> RationalTangle:
    """Diagonal flip: fraction goes to 1/F.

    On twist vectors this appends an outermost 0 (or removes one),
    since 0 + 1/F is exactly the reciprocal.
    """
    if t.is_infinity:
        return RationalTangle.from_entries(0)
    entries = list(t.tv.entries)
    if entries[-1] == 0:
        entries.pop()
        if not entries:
            return RationalTangle.infinity()
    else:
        entries.append(0)
    return RationalTangle(TwistVector(tuple(entries)))


# ---------------------------------------------------------------------------
# Twist words
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwistWord:
    """A sequence of elementary twists applied to a start tangle.

    start is "0" or "inf"; each move is ("R", s) for a half twist added
    on the right or ("B", s) for one added at the bottom, s = +-1.
    """

    start: str
    moves: tuple

    def fraction(self) -> ExtRational:
        value = ExtRational.zero() if self.start == "0" else ExtRational.infinity()
        for kind, s in self.moves:
            value = value + s if kind == "R" else value.bottom_twist(s)
        return value


def to_twist_word(t: RationalTangle) -> TwistWord:
    """Twist word realizing the tangle, innermost entry applied first.

    Entries sharing the parity of the last position become horizontal
    (right) twist regions, the others vertical (bottom) regions.  The
    start tangle is [0] for odd vector length and [inf] for even
    length, which keeps the replayed fraction equal to the continued
    fraction of the vector.
    """
    if t.is_infinity:
        return TwistWord("inf", ())
    entries = t.tv.entries
    m = len(entries)
    moves = []
    for k, a in enumerate(entries, start=1):
        kind = "R" if (m - k) % 2 == 0 else "B"
        s = 1 if a > 0 else -1
        moves.extend([(kind, s)] * abs(a))
    return TwistWord("0" if m % 2 == 1 else "inf", tuple(moves))


# ---------------------------------------------------------------------------
# Planar diagrams
# ---------------------------------------------------------------------------

class PlanarTangleDiagram:
    """Immutable 4-valent diagram with labeled boundary points.

    free_loops lists crossingless closed strands by winding number;
    they arise when a closure joins up strands that meet no crossing.
    """

    __slots__ = ("crossings", "arcs", "boundary", "free_loops")

    def __init__(self, crossings, arcs, boundary, free_loops=()):
        self.crossings = tuple(tuple(c) for c in crossings)
        self.arcs = tuple(
            (arc[0], arc[1], arc[2] if len(arc) == 3 else 0) for arc in arcs
        )
        self.boundary = tuple(tuple(p) for p in boundary)
        self.free_loops = tuple(free_loops)
        ends = [e for c in self.crossings for e in c]
        ends += [e for _, e in self.boundary]
        if len(set(ends)) != len(ends):
            raise ValueError("an end may appear in only one crossing or boundary slot")
        arc_ends = [e for a, b, _ in self.arcs for e in (a, b)]
        if sorted(arc_ends) != sorted(ends):
            raise ValueError("arcs must pair up exactly the crossing and boundary ends")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def num_ends(self) -> int:
        """One past the largest end id (ids need not be contiguous)."""
        return 1 + max((max(a, b) for a, b, _ in self.arcs), default=-1)

    def boundary_end(self, label: str) -> int:
        for lab, e in self.boundary:
            if lab == label:
                return e
        raise KeyError(label)

    def arc_maps(self):
        """Return (partner map, signed winding weight leaving each end)."""
        nxt = {}
        wgt = {}
        for a, b, w in self.arcs:
            nxt[a], nxt[b] = b, a
            wgt[a], wgt[b] = w, -w
        return nxt, wgt

    # -- JSON interchange ---------------------------------------------------

    def to_json(self) -> dict:
        """Edge-list form: each arc becomes a named edge, each crossing
        lists its four incident edges counterclockwise plus a flag; "+"
        means the strand through the first and third entries is the
        understrand, "-" the one through the second and fourth.  Winding
        weights are per edge, oriented from the edge's first appearance
        in the scan (crossings in order, then boundary) to its second.
        """
        edge_of_end = {}
        for idx, (a, b, _) in enumerate(self.arcs):
            edge_of_end[a] = idx
            edge_of_end[b] = idx
        crossings = [
            [f"e{edge_of_end[e]}" for e in c] + ["+"] for c in self.crossings
        ]
        boundary = {lab: f"e{edge_of_end[e]}" for lab, e in self.boundary}
        first_seen = {}
        scan = [e for c in self.crossings for e in c] + [e for _, e in self.boundary]
        for e in scan:
            first_seen.setdefault(edge_of_end[e], e)
        winding = {}
        for idx, (a, b, w) in enumerate(self.arcs):
            if w:
                winding[f"e{idx}"] = w if first_seen[idx] == a else -w
        out = {"crossings": crossings, "boundary": boundary, "winding": winding}
        if self.free_loops:
            out["free_loops"] = list(self.free_loops)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "PlanarTangleDiagram":
        counter = 0
        slots = []  # (edge name, end id) in scan order
        crossings = []
        for entry in data.get("crossings", []):
            *edges, flag = entry
            if len(edges) != 4 or flag not in ("+", "-"):
                raise ValueError(f"bad crossing entry: {entry!r}")
            ends = []
            for name in edges:
                slots.append((name, counter))
                ends.append(counter)
                counter += 1
            if flag == "-":
                ends = ends[1:] + ends[:1]
            crossings.append(tuple(ends))
        boundary = []
        for lab, name in data.get("boundary", {}).items():
            slots.append((name, counter))
            boundary.append((lab, counter))
            counter += 1
        by_edge = {}
        for name, end in slots:
            by_edge.setdefault(name, []).append(end)
        winding = data.get("winding", {})
        arcs = []
        for name, ends in by_edge.items():
            if len(ends) != 2:
                raise ValueError(f"edge {name} must appear exactly twice")
            arcs.append((ends[0], ends[1], int(winding.get(name, 0))))
        return cls(crossings, arcs, boundary, data.get("free_loops", ()))


# ---------------------------------------------------------------------------
# Building rational tangle diagrams
# ---------------------------------------------------------------------------

def diagram_zero() -> PlanarTangleDiagram:
    """The 0-tangle: two horizontal strands."""
    return PlanarTangleDiagram(
        [], [(0, 1), (2, 3)], [("NW", 0), ("NE", 1), ("SW", 2), ("SE", 3)]
    )


def diagram_infinity() -> PlanarTangleDiagram:
    """The infinity tangle: two vertical strands."""
    return PlanarTangleDiagram(
        [], [(0, 2), (1, 3)], [("NW", 0), ("NE", 1), ("SW", 2), ("SE", 3)]
    )


def _attach(live, arcs, corner, port):
    """Connect the dangling strand at a corner to the given end.

    live[corner] is either a real end (emit the arc now) or a marker
    ("pair", other) meaning the strand currently runs straight across
    to the other corner; then the port becomes the other corner's
    dangling end and the arc is emitted when that side attaches.
    """
    v = live[corner]
    if isinstance(v, int):
        arcs.append((v, port, 0))
    else:
        live[v[1]] = port


def rational_to_diagram(t: RationalTangle) -> PlanarTangleDiagram:
    """Crossing diagram realizing the twist word of the tangle.

    Boundary ends 0..3 are NW, NE, SW, SE; each move appends one
    crossing on the east side (R) or the south side (B).
    """
    word = to_twist_word(t)
    crossings = []
    arcs = []
    counter = 4  # ends 0..3 are the boundary corners
    if word.start == "0":
        live = {"NW": ("pair", "NE"), "NE": ("pair", "NW"),
                "SW": ("pair", "SE"), "SE": ("pair", "SW")}
    else:
        live = {"NW": ("pair", "SW"), "SW": ("pair", "NW"),
                "NE": ("pair", "SE"), "SE": ("pair", "NE")}
    for kind, s in word.moves:
        x = (counter, counter + 1, counter + 2, counter + 3)
        counter += 4
        crossings.append(x)
        if kind == "R":
            # counterclockwise with the understrand at entries 0 and 2
            if s > 0:
                w_top, w_bot, e_bot, e_top = x
            else:
                w_bot, e_bot, e_top, w_top = x
            _attach(live, arcs, "NE", w_top)
            _attach(live, arcs, "SE", w_bot)
            live["NE"], live["SE"] = e_top, e_bot
        else:
            if s > 0:
                n_left, s_left, s_right, n_right = x
            else:
                s_left, s_right, n_right, n_left = x
            _attach(live, arcs, "SW", n_left)
            _attach(live, arcs, "SE", n_right)
            live["SW"], live["SE"] = s_left, s_right
    for corner, end in (("NW", 0), ("NE", 1), ("SW", 2), ("SE", 3)):
        _attach(live, arcs, corner, end)
    boundary = [("NW", 0), ("NE", 1), ("SW", 2), ("SE", 3)]
    return PlanarTangleDiagram(crossings, arcs, boundary)


# ---------------------------------------------------------------------------
# Strand tracing: connectivity, components, linking numbers
# ---------------------------------------------------------------------------

def components(d: PlanarTangleDiagram):
    """Trace the strands of a diagram (ignoring over/under).

    Returns a list of dicts, one per strand, with keys:
      "boundary": tuple of boundary labels hit (empty for closed),
      "passes": tuple of (crossing index, entry slot, exit slot).
    Open strands are traced starting from boundary points in the order
    listed; closed strands afterwards, in crossing order.
    """
    nxt, _ = d.arc_maps()
    slot_of = {}
    for ci, c in enumerate(d.crossings):
        for s, e in enumerate(c):
            slot_of[e] = (ci, s)
    label_of = {e: lab for lab, e in d.boundary}
    seen = set()
    out = []

    def trace(start, closed):
        labels = [] if closed else [label_of[start]]
        passes = []
        cur = start
        while True:
            seen.add(cur)
            other = nxt[cur]
            seen.add(other)
            if other in label_of:
                labels.append(label_of[other])
                break
            ci, s_in = slot_of[other]
            s_out = (s_in + 2) % 4
            passes.append((ci, s_in, s_out))
            cur = d.crossings[ci][s_out]
            if closed and cur == start:
                break
        return {"boundary": tuple(labels), "passes": tuple(passes)}

    for lab, e in d.boundary:
        if e not in seen:
            out.append(trace(e, closed=False))
    for c in d.crossings:
        for e in c:
            if e not in seen:
                out.append(trace(e, closed=True))
    for _ in d.free_loops:
        out.append({"boundary": (), "passes": ()})
    return out


def connectivity(d: PlanarTangleDiagram) -> str:
    """How the four corners pair through the tangle: TYPE_0 for NW-NE,
    TYPE_INF for NW-SW, TYPE_1 for NW-SE."""
    for comp in components(d):
        labs = comp["boundary"]
        if "NW" in labs:
            other = labs[0] if labs[1] == "NW" else labs[1]
            return {"NE": TYPE_0, "SW": TYPE_INF, "SE": TYPE_1}[other]
    raise ValueError("diagram has no strand through the NW corner")


def _crossing_sign(pass_a, pass_b):
    """Sign of a crossing from its two directed passes, one per strand.

    Each pass is (entry slot, exit slot); the understrand uses slots
    0 and 2.  Positive when the understrand exits one counterclockwise
    step after the overstrand exits.
    """
    if pass_a[1] in (0, 2):
        under_out, over_out = pass_a[1], pass_b[1]
    else:
        under_out, over_out = pass_b[1], pass_a[1]
    return 1 if under_out == (over_out + 1) % 4 else -1


def left_linking_number(d: PlanarTangleDiagram) -> int:
    """Total linking of the closed components with the left strand.

    The diagram must have exactly two open strands, one through NW-SW
    and one through NE-SE, plus at least one closed component.  Each
    closed component contributes half the absolute sum of the signs of
    its crossings with the left (NW-SW) strand, which makes the result
    independent of orientation choices.
    """
    comps = components(d)
    open_comps = [c for c in comps if c["boundary"]]
    closed_comps = [c for c in comps if not c["boundary"]]
    pairings = sorted(frozenset(c["boundary"]) for c in open_comps)
    if (
        len(open_comps) != 2
        or not closed_comps
        or pairings != sorted([frozenset({"NW", "SW"}), frozenset({"NE", "SE"})])
    ):
        raise ValueError("left linking number undefined for this diagram")
    left = next(c for c in open_comps if "NW" in c["boundary"])
    left_passes = {ci: (s_in, s_out) for ci, s_in, s_out in left["passes"]}
    total = 0
    for comp in closed_comps:
        signed = 0
        for ci, s_in, s_out in comp["passes"]:
            if ci in left_passes:
                signed += _crossing_sign((s_in, s_out), left_passes[ci])
        if signed % 2 != 0:
            raise ValueError("odd crossing count between strands")
        total += abs(signed) // 2
    return total


# ---------------------------------------------------------------------------
# Clasp-shaped diagrams (two vertical strands plus a closed loop)
# ---------------------------------------------------------------------------

def clasp_single() -> PlanarTangleDiagram:
    """Closed loop clasping the left strand once, circling the right twice.

    The loop hooks the left strand with one clasp (two same-sign
    crossings, turning back west of the strand) and then passes around
    the right strand twice, the second pass nested outside the first.
    Left linking number 1.  Its annular closure is isotopic to the
    closure of clasp_double(): sliding a clasp along the closed-up
    strand carries it around the annulus core and off the left strand,
    where it reappears as the extra turn around the right strand.  The
    two diagrams keep equal closure brackets while their left linking
    numbers differ.
    """
    # ends: 0..3 corners, then each quad in (S, E, N, W) creation order
    def quad(base):
        return {"S": base, "E": base + 1, "N": base + 2, "W": base + 3}

    l1, l2 = quad(4), quad(8)
    r1, r2, r3, r4 = quad(12), quad(16), quad(20), quad(24)
    crossings = [
        (l1["S"], l1["E"], l1["N"], l1["W"]),  # left strand under, loop east
        (l2["E"], l2["N"], l2["W"], l2["S"]),  # loop under, heading west
        (r1["S"], r1["E"], r1["N"], r1["W"]),  # right strand under
        (r2["E"], r2["N"], r2["W"], r2["S"]),  # loop under
        (r3["S"], r3["E"], r3["N"], r3["W"]),  # right strand under
        (r4["E"], r4["N"], r4["W"], r4["S"]),  # loop under
    ]
    arcs = [
        # left strand NW -> SW through the clasp
        (0, l1["N"]), (l1["S"], l2["N"]), (l2["S"], 2),
        # right strand NE -> SE through the double wrap
        (1, r1["N"]), (r1["S"], r2["N"]), (r2["S"], r3["N"]),
        (r3["S"], r4["N"]), (r4["S"], 3),
        # the loop
        (l1["W"], l2["W"]),  # clasp tip west of the left strand
        (l1["E"], r3["W"]),  # upper connector across the middle
        (l2["E"], r4["W"]),  # lower connector across the middle
        (r3["E"], r2["E"]),  # inner east turn of the first wrap
        (r2["W"], r1["W"]),  # west arc linking the two wraps
        (r1["E"], r4["E"]),  # outer east turn of the second wrap
    ]
    boundary = [("NW", 0), ("NE", 1), ("SW", 2), ("SE", 3)]
    return PlanarTangleDiagram(crossings, arcs, boundary)


def clasp_double() -> PlanarTangleDiagram:
    """Closed loop clasping the left strand twice, circling the right once.

    The loop snakes down the left strand forming two stacked clasps
    (four same-sign crossings, turnbacks alternating west, east, west),
    then passes around the right strand once before closing up.  Left
    linking number 2.  See clasp_single() for the isotopy that makes
    the annular closures of the two diagrams match.
    """
    def quad(base):
        return {"S": base, "E": base + 1, "N": base + 2, "W": base + 3}

    q1, q2, q3, q4 = quad(4), quad(8), quad(12), quad(16)
    s1, s2 = quad(20), quad(24)
    crossings = [
        (q1["S"], q1["E"], q1["N"], q1["W"]),  # left strand under, loop east
        (q2["E"], q2["N"], q2["W"], q2["S"]),  # loop under, heading west
        (q3["S"], q3["E"], q3["N"], q3["W"]),  # left strand under
        (q4["E"], q4["N"], q4["W"], q4["S"]),  # loop under
        (s1["S"], s1["E"], s1["N"], s1["W"]),  # right strand under
        (s2["E"], s2["N"], s2["W"], s2["S"]),  # loop under
    ]
    arcs = [
        # left strand NW -> SW through all four clasp crossings
        (0, q1["N"]), (q1["S"], q2["N"]), (q2["S"], q3["N"]),
        (q3["S"], q4["N"]), (q4["S"], 2),
        # right strand NE -> SE through the single wrap
        (1, s1["N"]), (s1["S"], s2["N"]), (s2["S"], 3),
        # the loop
        (q1["W"], q2["W"]),  # upper clasp tip
        (q2["E"], q3["E"]),  # serpentine middle arc east of the left strand
        (q3["W"], q4["W"]),  # lower clasp tip
        (q1["E"], s1["W"]),  # upper connector to the right strand
        (q4["E"], s2["W"]),  # lower connector
        (s1["E"], s2["E"]),  # east turn around the right strand
    ]
    boundary = [("NW", 0), ("NE", 1), ("SW", 2), ("SE", 3)]
    return PlanarTangleDiagram(crossings, arcs, boundary)


def clasp_around_right() -> PlanarTangleDiagram:
    """Closed loop circling only the right strand; left linking zero."""
    def quad(base):
        return {"S": base, "E": base + 1, "N": base + 2, "W": base + 3}

    s1, s2 = quad(4), quad(8)
    crossings = [
        (s1["S"], s1["E"], s1["N"], s1["W"]),  # loop over right strand
        (s2["E"], s2["N"], s2["W"], s2["S"]),  # loop under right strand
    ]
    arcs = [
        (0, 2),                                  # left strand untouched
        (1, s1["N"]), (s1["S"], s2["N"]), (s2["S"], 3),
        (s1["E"], s2["E"]), (s2["W"], s1["W"]),
    ]
    boundary = [("NW", 0), ("NE", 1), ("SW", 2), ("SE", 3)]
    return PlanarTangleDiagram(crossings, arcs, boundary)


# ---------------------------------------------------------------------------
# Cabled pieces: n x n crossing grids and curls
# ---------------------------------------------------------------------------

def _grid(n, sign, base=0):
    """n x n grid of crossings for two n-strand cables crossing once.

    One cable runs south to north through the columns, the other east
    to west through the rows.  For sign +1 the vertical cable passes
    under.  Returns (crossings, arcs, ports) where ports maps side name
    S/E/N/W to the list of ends along that side (S and N indexed by
    column left to right, E and W by row top to bottom).
    """
    crossings = []
    arcs = []
    end = {}
    counter = base
    for i in range(n):
        for j in range(n):
            s, e, nn, w = counter, counter + 1, counter + 2, counter + 3
            counter += 4
            end[i, j] = {"S": s, "E": e, "N": nn, "W": w}
            if sign > 0:
                crossings.append((s, e, nn, w))    # vertical strand under
            else:
                crossings.append((e, nn, w, s))    # horizontal strand under
    for i in range(n):
        for j in range(n):
            if i > 0:
                arcs.append((end[i, j]["N"], end[i - 1, j]["S"], 0))
            if j + 1 < n:
                arcs.append((end[i, j]["E"], end[i, j + 1]["W"], 0))
    ports = {
        "S": [end[n - 1, j]["S"] for j in range(n)],
        "N": [end[0, j]["N"] for j in range(n)],
        "E": [end[i, n - 1]["E"] for i in range(n)],
        "W": [end[i, 0]["W"] for i in range(n)],
    }
    return crossings, arcs, ports, counter


def cabled_crossing_grid(n: int, sign: int) -> PlanarTangleDiagram:
    """Two n-strand cables crossing once, as a 2n-point braid piece.

    Boundary labels t0..t{2n-1} (top, left to right) and b0..b{2n-1}
    (bottom).  The cable entering at the bottom left leaves at the top
    right passing over for sign +1 (under for -1).
    """
    crossings, arcs, ports, counter = _grid(n, sign)
    boundary = []
    # bottom left cluster = grid W side, bottom right = grid S side,
    # top left = grid N side, top right = grid E side
    for k in range(n):
        boundary.append((f"b{k}", counter))
        arcs.append((ports["W"][k], counter, 0))
        counter += 1
    for j in range(n):
        boundary.append((f"b{n + j}", counter))
        arcs.append((ports["S"][j], counter, 0))
        counter += 1
    for j in range(n):
        boundary.append((f"t{j}", counter))
        arcs.append((ports["N"][j], counter, 0))
        counter += 1
    for i in range(n):
        boundary.append((f"t{n + i}", counter))
        arcs.append((ports["E"][i], counter, 0))
        counter += 1
    return PlanarTangleDiagram(crossings, arcs, boundary)


def curl_diagram(n: int, sign: int) -> PlanarTangleDiagram:
    """An n-strand cable making one kink, as an n-point braid piece.

    The cable enters at the bottom (b0..b{n-1}), loops once through an
    n x n self-crossing grid, and exits at the top (t0..t{n-1}).  For
    sign +1 the single-strand kink evaluates to -1/A^3, the direction
    the cabling correction factor tracks; sign -1 gives its inverse.
    """
    crossings, arcs, ports, counter = _grid(n, sign)
    # nested corner arcs on the upper right: grid top port j turns back
    # into grid right port n-1-j
    for j in range(n):
        arcs.append((ports["N"][j], ports["E"][n - 1 - j], 0))
    boundary = []
    for j in range(n):
        boundary.append((f"b{j}", counter))
        arcs.append((ports["S"][j], counter, 0))
        counter += 1
    # exiting westward then turning up reverses the row order
    for j in range(n):
        boundary.append((f"t{j}", counter))
        arcs.append((ports["W"][n - 1 - j], counter, 0))
        counter += 1
    return PlanarTangleDiagram(crossings, arcs, boundary)


def cable_diagram(d: PlanarTangleDiagram, n: int) -> PlanarTangleDiagram:
    """Replace every strand by n parallel copies (blackboard framing).

    Crossings become n x n grids, arcs become n parallel arcs carrying
    the same winding weight, and each boundary point becomes n points
    labeled "<label>:<k>" ordered left to right as seen from outside
    the diagram with north up.
    """
    crossings = []
    arcs = []
    counter = 0
    # counterclockwise port lists around each original crossing
    cross_ports = []
    for c in d.crossings:
        gc, ga, ports, counter = _grid(n, +1, base=counter)
        crossings.extend(gc)
        arcs.extend(ga)
        cross_ports.append({
            0: ports["S"],
            1: list(reversed(ports["E"])),
            2: list(reversed(ports["N"])),
            3: ports["W"],
        })
    slot_of = {}
    for ci, c in enumerate(d.crossings):
        for s, e in enumerate(c):
            slot_of[e] = (ci, s)
    boundary = []
    bports = {}
    for lab, e in d.boundary:
        ends = list(range(counter, counter + n))
        counter += n
        # counterclockwise around the disk: reversed left-to-right on
        # the north side, straight on the south side
        if lab.startswith("N"):
            order = list(reversed(ends))
        else:
            order = list(ends)
        bports[e] = order
        for k, new_end in enumerate(ends):
            boundary.append((f"{lab}:{k}", new_end))

    def ccw_ports(e):
        if e in slot_of:
            ci, s = slot_of[e]
            return cross_ports[ci][s]
        return bports[e]

    for a, b, w in d.arcs:
        pa, pb = ccw_ports(a), ccw_ports(b)
        for k in range(n):
            arcs.append((pa[k], pb[n - 1 - k], w))
    return PlanarTangleDiagram(crossings, arcs, boundary)


# ---------------------------------------------------------------------------
# Random tangles for property tests
# ---------------------------------------------------------------------------

def random_twist_vector(rng, max_len=6, max_entry=4) -> TwistVector:
    """Random twist vector; only the first and last entries may be zero."""
    m = rng.randint(1, max_len)
    entries = []
    for k in range(m):
        allow_zero = k == 0 or k == m - 1
        choices = [a for a in range(-max_entry, max_entry + 1) if a != 0 or allow_zero]
        entries.append(rng.choice(choices))
    return TwistVector(tuple(entries))
