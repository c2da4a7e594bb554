"""Rational functions in the x-block and y-polynomials over them.

RatFunc is a quotient num/den of two x-only polynomials.  Equality is by
cross-multiplication (num1*den2 == num2*den1), so no multivariate gcd is
ever required for correctness; a cheap normalization (monic denominator,
cancellation when the division happens to be exact) keeps the common
conformal-factor cases tidy.

RatPoly is a polynomial in the y variables with RatFunc coefficients.  It
is the coefficient field used to extract 1-forms by exact division of a
y-senior polynomial by another (divide_exact_qx), where quotients of
x-polynomials arise naturally.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .poly import MultiPoly, divide_exact


class RatFunc:
    """Quotient of two x-only polynomials; the denominator is nonzero."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.const(num.n, 1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.is_y_free() or not den.is_y_free():
            raise ValueError("rational functions must be y-free")
        num._require_same(den)
        if num.is_zero():
            den = MultiPoly.const(num.n, 1)
        else:
            exact = divide_exact(num, den)
            if exact is not None:
                num, den = exact, MultiPoly.const(num.n, 1)
            _, lc = den.leading()
            if lc != 1:
                inv = 1 / lc
                num = num * inv
                den = den * inv
        self.num = num
        self.den = den

    @classmethod
    def const(cls, n: int, value) -> RatFunc:
        return cls(MultiPoly.const(n, value))

    @property
    def n(self) -> int:
        return self.num.n

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: RatFunc) -> RatFunc:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RatFunc) -> RatFunc:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den)

    def __mul__(self, other) -> RatFunc:
        if isinstance(other, (int, Fraction)):
            return RatFunc(self.num * other, self.den)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RatFunc) -> RatFunc:
        if not isinstance(other, RatFunc):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFunc.const(self.n, other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def evaluate(self, xs: Iterable) -> Fraction:
        """Exact value at a rational x-point; the denominator must not vanish there."""
        zeros = (Fraction(0),) * self.n
        den_val = self.den.evaluate(xs, zeros)
        if den_val == 0:
            raise ZeroDivisionError("denominator vanishes at the evaluation point")
        return self.num.evaluate(xs, zeros) / den_val

    def __str__(self) -> str:
        if self.den == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFunc({self!s})"


class RatPoly:
    """Polynomial in y1..yn with RatFunc coefficients, keyed by y-exponent tuple."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple[int, ...], RatFunc] | None = None):
        self.n = n
        clean: dict[tuple[int, ...], RatFunc] = {}
        if terms:
            for yexp, coeff in terms.items():
                if not coeff.is_zero():
                    clean[yexp] = coeff
        self.terms = clean

    @classmethod
    def from_multipoly(cls, p: MultiPoly) -> RatPoly:
        out: dict[tuple[int, ...], RatFunc] = {}
        for yexp in p.y_monomials():
            out[yexp] = RatFunc(p.coefficient_of_y(yexp))
        return cls(p.n, out)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, yexp: tuple[int, ...]) -> RatFunc:
        return self.terms.get(yexp, RatFunc.const(self.n, 0))

    def homogeneous_y_degree(self) -> int | None:
        if not self.terms:
            raise ValueError("zero polynomial has no homogeneous degree")
        degrees = {sum(yexp) for yexp in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.n != other.n:
            return False
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for yexp in sorted(self.terms, key=lambda e: (sum(e), e), reverse=True):
            mono = "*".join(
                f"y{i}^{e}" if e > 1 else f"y{i}"
                for i, e in enumerate(yexp, start=1)
                if e
            )
            coeff = str(self.terms[yexp])
            if not mono:
                pieces.append(coeff)
            elif coeff == "1":
                pieces.append(mono)
            else:
                pieces.append(f"({coeff})*{mono}" if "/" in coeff or " " in coeff else f"{coeff}*{mono}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"RatPoly({self!s})"


def _ydeg_key(yexp: tuple[int, ...]) -> tuple:
    return (sum(yexp), yexp)


def divide_exact_qx(num: MultiPoly, den: MultiPoly) -> RatPoly | None:
    """Exact quotient of num by den over the rational functions in x.

    Treats both polynomials as elements of Q(x)[y] and eliminates leading
    y-monomials in graded-lex order; the x-content of each term becomes a
    RatFunc coefficient.  Returns the quotient when den divides num over
    this field, otherwise None.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    num._require_same(den)
    n = num.n
    den_terms = {yexp: RatFunc(den.coefficient_of_y(yexp)) for yexp in den.y_monomials()}
    lead_y = max(den_terms, key=_ydeg_key)
    lead_coeff = den_terms[lead_y]
    rem = {yexp: RatFunc(num.coefficient_of_y(yexp)) for yexp in num.y_monomials()}
    quotient: dict[tuple[int, ...], RatFunc] = {}
    while rem:
        y_r = max(rem, key=_ydeg_key)
        dm = tuple(a - b for a, b in zip(y_r, lead_y))
        if any(e < 0 for e in dm):
            return None
        factor = rem[y_r] / lead_coeff
        quotient[dm] = quotient.get(dm, RatFunc.const(n, 0)) + factor
        for y_d, c_d in den_terms.items():
            key = tuple(a + b for a, b in zip(dm, y_d))
            updated = rem.get(key, RatFunc.const(n, 0)) - factor * c_d
            if updated.is_zero():
                rem.pop(key, None)
            else:
                rem[key] = updated
    return RatPoly(n, quotient)
