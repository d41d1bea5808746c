"""Exact scalar arithmetic for skein computations.

Three towers, each immutable and canonical so that ``==`` is true value
equality:

* ``LaurentPoly``: sparse Laurent polynomials in one variable ``A`` with
  ``Fraction`` coefficients.
* ``RatFunc``: the fraction field of ``LaurentPoly`` with a normalized
  representative (denominator an integer-primitive ordinary polynomial
  with positive constant term, coprime to the numerator).
* ``Zeta8``: the quotient ring Q[A] / (A^4 + 1), i.e. rational
  combinations of an eighth root of unity.  Used to evaluate bracket
  ratios at the special point where the ratio becomes a number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "Zeta8",
    "eval_zeta8",
]


# ---------------------------------------------------------------------------
# Laurent polynomials
# ---------------------------------------------------------------------------

class LaurentPoly:
    """A sparse Laurent polynomial: dict {exponent: nonzero Fraction}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for e, c in coeffs.items():
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c:
                    clean[int(e)] = c
        self.coeffs = clean

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPoly":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp: int, coeff=1) -> "LaurentPoly":
        return cls({exp: coeff})

    @classmethod
    def from_scalar(cls, c) -> "LaurentPoly":
        return cls({0: c})

    @classmethod
    def variable(cls) -> "LaurentPoly":
        """The generator A."""
        return cls({1: 1})

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return max(self.coeffs)

    def constant_value(self):
        """Return the Fraction value if constant, else None."""
        if not self.coeffs:
            return Fraction(0)
        if self.coeffs.keys() == {0}:
            return self.coeffs[0]
        return None

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.from_scalar(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __add__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.from_scalar(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        result = LaurentPoly.__new__(LaurentPoly)
        result.coeffs = out
        return result

    __radd__ = __add__

    def __sub__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.from_scalar(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly.zero()
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        result = LaurentPoly.__new__(LaurentPoly)
        result.coeffs = out
        return result

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by A^k."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def invert_variable(self) -> "LaurentPoly":
        """Substitute A -> A^-1 (the mirror-image substitution)."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer
        coefficients.  Zero polynomial has content 1."""
        if not self.coeffs:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.coeffs.values():
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "A" if e == 1 else f"A^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


# ---------------------------------------------------------------------------
# Ordinary-polynomial helpers (dicts with min exponent 0)
# ---------------------------------------------------------------------------

def _poly_divmod(a: dict, b: dict):
    """Long division of ordinary polynomials given as exponent dicts."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = dict(a)
    db = max(b)
    lead = b[db]
    q = {}
    while a and max(a) >= db:
        da = max(a)
        f = a[da] / lead
        q[da - db] = f
        for e, c in b.items():
            k = e + da - db
            s = a.get(k, 0) - f * c
            if s:
                a[k] = s
            else:
                a.pop(k, None)
    return q, a


def _poly_gcd(a: dict, b: dict) -> dict:
    """Monic gcd over Q of two ordinary polynomials."""
    a, b = dict(a), dict(b)
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    if not a:
        return {}
    lead = a[max(a)]
    return {e: c / lead for e, c in a.items()}


def poly_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Quotient a / b when b divides a exactly; raises otherwise."""
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero:
        return LaurentPoly.zero()
    sa, sb = a.min_exp(), b.min_exp()
    q, r = _poly_divmod(
        {e - sa: c for e, c in a.coeffs.items()},
        {e - sb: c for e, c in b.coeffs.items()},
    )
    if r:
        raise ValueError("division is not exact")
    return LaurentPoly({e + sa - sb: c for e, c in q.items()})


def poly_lcm(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """A least common multiple of two Laurent polynomials (up to units)."""
    if a.is_zero or b.is_zero:
        raise ZeroDivisionError("lcm with zero polynomial")
    sa, sb = a.min_exp(), b.min_exp()
    g = _poly_gcd(
        {e - sa: c for e, c in a.coeffs.items()},
        {e - sb: c for e, c in b.coeffs.items()},
    )
    return a * poly_exact_div(b, LaurentPoly({e + sb: c for e, c in g.items()}))


# ---------------------------------------------------------------------------
# Rational functions
# ---------------------------------------------------------------------------

_ONE_COEFFS = {0: Fraction(1)}


def _is_poly_one(p: LaurentPoly) -> bool:
    return p.coeffs == _ONE_COEFFS


@dataclass(frozen=True)
class RatFunc:
    """A quotient of Laurent polynomials in canonical form.

    Canonical representative: the denominator is an ordinary polynomial
    (minimum exponent 0) with coprime integer coefficients and positive
    constant term; numerator and denominator have no common polynomial
    factor.  Any leftover power of A sits on the numerator.
    """

    num: LaurentPoly
    den: LaurentPoly

    @staticmethod
    def normalized(num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            return RatFunc(LaurentPoly.zero(), LaurentPoly.one())
        if _is_poly_one(den):
            return RatFunc(num, den)
        sn, sd = num.min_exp(), den.min_exp()
        n = {e - sn: c for e, c in num.coeffs.items()}
        d = {e - sd: c for e, c in den.coeffs.items()}
        g = _poly_gcd(n, d)
        if g and (len(g) > 1 or 0 not in g):
            n, rn = _poly_divmod(n, g)
            d, rd = _poly_divmod(d, g)
            assert not rn and not rd, "gcd division must be exact"
        dpoly = LaurentPoly(d)
        scale = dpoly.content()
        if dpoly.coeffs[dpoly.min_exp()] < 0:
            scale = -scale
        n = {e + sn - sd: c / scale for e, c in n.items()}
        d = {e: c / scale for e, c in d.items()}
        return RatFunc(LaurentPoly(n), LaurentPoly(d))

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(LaurentPoly.zero(), LaurentPoly.one())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(LaurentPoly.one(), LaurentPoly.one())

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> "RatFunc":
        return cls(p, LaurentPoly.one())

    @classmethod
    def from_scalar(cls, c) -> "RatFunc":
        return cls.normalized(LaurentPoly.from_scalar(c), LaurentPoly.one())

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __bool__(self) -> bool:
        return not self.num.is_zero

    def as_laurent(self) -> LaurentPoly:
        """Return the numerator if the denominator is 1, else raise."""
        if self.den == LaurentPoly.one():
            return self.num
        raise ValueError(f"not a Laurent polynomial: {self}")

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, LaurentPoly):
            return RatFunc.from_laurent(x)
        if isinstance(x, (int, Fraction)):
            return RatFunc.from_scalar(x)
        return NotImplemented

    def __add__(self, other) -> "RatFunc":
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if _is_poly_one(self.den) and _is_poly_one(other.den):
            return RatFunc(self.num + other.num, self.den)
        return RatFunc.normalized(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if _is_poly_one(self.den) and _is_poly_one(other.den):
            return RatFunc(self.num * other.num, self.den)
        return RatFunc.normalized(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc.normalized(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        other = RatFunc._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def inverse(self) -> "RatFunc":
        return RatFunc.one() / self

    # -- rendering ----------------------------------------------------------

    def __str__(self) -> str:
        if self.den == LaurentPoly.one():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self})"


# ---------------------------------------------------------------------------
# The cyclotomic quotient Q[A] / (A^4 + 1)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Zeta8:
    """An element c0 + c1*z + c2*z^2 + c3*z^3 with z^4 = -1."""

    coords: tuple

    @staticmethod
    def of(c0=0, c1=0, c2=0, c3=0) -> "Zeta8":
        return Zeta8((Fraction(c0), Fraction(c1), Fraction(c2), Fraction(c3)))

    @classmethod
    def zero(cls) -> "Zeta8":
        return cls.of()

    @classmethod
    def one(cls) -> "Zeta8":
        return cls.of(1)

    @classmethod
    def generator_power(cls, k: int) -> "Zeta8":
        """z^k for any integer k, using z^4 = -1 and z^-1 = -z^3."""
        k %= 8
        sign = 1 if k < 4 else -1
        coords = [Fraction(0)] * 4
        coords[k % 4] = Fraction(sign)
        return cls(tuple(coords))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "Zeta8") -> "Zeta8":
        return Zeta8(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Zeta8") -> "Zeta8":
        return Zeta8(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Zeta8":
        return Zeta8(tuple(-a for a in self.coords))

    def __mul__(self, other) -> "Zeta8":
        if isinstance(other, (int, Fraction)):
            return Zeta8(tuple(a * other for a in self.coords))
        out = [Fraction(0)] * 4
        for i, a in enumerate(self.coords):
            if not a:
                continue
            for j, b in enumerate(other.coords):
                if not b:
                    continue
                k = i + j
                if k < 4:
                    out[k] += a * b
                else:
                    out[k - 4] -= a * b
        return Zeta8(tuple(out))

    __rmul__ = __mul__

    def galois(self, k: int) -> "Zeta8":
        """Apply the field map z -> z^k (k odd)."""
        out = [Fraction(0)] * 4
        for i, a in enumerate(self.coords):
            if not a:
                continue
            e = (i * k) % 8
            if e < 4:
                out[e] += a
            else:
                out[e - 4] -= a
        return Zeta8(tuple(out))

    def inverse(self) -> "Zeta8":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero")
        conj = self.galois(3) * self.galois(5) * self.galois(7)
        norm = self * conj
        rat = norm.as_rational()
        assert rat is not None and rat != 0, "norm must be a nonzero rational"
        return conj * (1 / rat)

    def as_rational(self):
        """Return the Fraction value if the element is rational, else None."""
        c0, c1, c2, c3 = self.coords
        if c1 == 0 and c2 == 0 and c3 == 0:
            return c0
        return None

    def __str__(self) -> str:
        names = ["1", "z", "z^2", "z^3"]
        parts = [f"{c}*{n}" for c, n in zip(self.coords, names) if c]
        return " + ".join(parts) if parts else "0"


def eval_zeta8(p: LaurentPoly) -> Zeta8:
    """Ring map sending A to an eighth root of unity (A^4 -> -1)."""
    total = Zeta8.zero()
    for e, c in p.coeffs.items():
        total = total + Zeta8.generator_power(e) * c
    return total
