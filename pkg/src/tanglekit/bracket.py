"""Bracket state vectors of rational tangles via twist transfer maps.

Every 2-tangle expands over the two crossingless tangles as
<T> = alpha.<vertical pair> + beta.<horizontal pair>; for rational
tangles the pair (alpha, beta) is computed by replaying the twist word
through four fixed 2x2 matrices, one per elementary twist.  This is
the fast path; the brute-force smoothing enumerator recomputes the
same pair independently for verification.
"""

from __future__ import annotations

from dataclasses import dataclass

from .rationals import ExtRational
from .ring import LaurentPoly, RatFunc, Zeta8, eval_zeta8
from .tangles import RationalTangle, TwistWord, to_twist_word

__all__ = [
    "BracketVec2",
    "bracket_vector",
    "mirror_transport",
    "ratio_invariant",
    "c_invariant",
]


@dataclass(frozen=True)
class BracketVec2:
    """Bracket coordinates (alpha, beta) of a 2-tangle: alpha multiplies
    the vertical-strands tangle, beta the horizontal-strands tangle."""

    alpha: LaurentPoly
    beta: LaurentPoly

    def __str__(self) -> str:
        return f"alpha = {self.alpha}; beta = {self.beta}"


_A = LaurentPoly.monomial(1)
_Ainv = LaurentPoly.monomial(-1)
_A3 = LaurentPoly.monomial(3)
_A3inv = LaurentPoly.monomial(-3)


def _step(alpha, beta, kind, s):
    if kind == "R":
        if s > 0:
            return -_A3 * alpha + _A * beta, _Ainv * beta
        return -_A3inv * alpha + _Ainv * beta, _A * beta
    if s > 0:
        return _A * alpha, _Ainv * alpha - _A3inv * beta
    return _Ainv * alpha, _A * alpha - _A3 * beta


def bracket_vector(t) -> BracketVec2:
    """Bracket coordinates of a rational tangle (or a raw twist word)."""
    word = t if isinstance(t, TwistWord) else to_twist_word(t)
    if word.start == "0":
        alpha, beta = LaurentPoly.zero(), LaurentPoly.one()
    else:
        alpha, beta = LaurentPoly.one(), LaurentPoly.zero()
    for kind, s in word.moves:
        alpha, beta = _step(alpha, beta, kind, s)
    return BracketVec2(alpha, beta)


def mirror_transport(v: BracketVec2, op: str) -> BracketVec2:
    """Push a tangle symmetry through the bracket coordinates.

    "negate" is the mirror image (A -> 1/A in both coordinates);
    "invert" is the diagonal flip, which additionally swaps the two
    crossingless tangles.
    """
    alpha = v.alpha.invert_variable()
    beta = v.beta.invert_variable()
    if op == "negate":
        return BracketVec2(alpha, beta)
    if op == "invert":
        return BracketVec2(beta, alpha)
    raise ValueError(f"unknown symmetry {op!r}")


def ratio_invariant(v: BracketVec2):
    """The bracket ratio alpha/beta as a reduced rational function.

    Returns None to signal the value infinity (beta = 0); raises if
    both coordinates vanish.
    """
    if v.beta.is_zero:
        if v.alpha.is_zero:
            raise ValueError("degenerate bracket: both coordinates vanish")
        return None
    return RatFunc.normalized(v.alpha, v.beta)


_MINUS_ZETA2 = -Zeta8.generator_power(2)


def c_invariant(v: BracketVec2) -> ExtRational:
    """Fraction of the tangle recovered from its bracket coordinates.

    Evaluates both coordinates at the primitive eighth root of unity
    and forms -zeta^2 alpha(zeta) / beta(zeta), which lands in the
    rationals extended by infinity.
    """
    za = eval_zeta8(v.alpha)
    zb = eval_zeta8(v.beta)
    if zb.is_zero:
        if za.is_zero:
            raise ValueError("indeterminate fraction: bracket vanishes at the root")
        return ExtRational.infinity()
    c = _MINUS_ZETA2 * za * zb.inverse()
    r = c.as_rational()
    if r is None:
        raise ArithmeticError("bracket ratio is not rational at the root")
    return ExtRational(r.numerator, r.denominator)
