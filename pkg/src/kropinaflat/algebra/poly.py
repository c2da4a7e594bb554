"""Exact sparse polynomial arithmetic over the split variable blocks x1..xn, y1..yn.

A polynomial is stored as a dict mapping monomials to nonzero Fraction
coefficients, so identity testing is exact and canonical: two polynomials
are equal iff their term maps are equal.  A monomial is a pair of exponent
tuples ``(yexp, xexp)``, one entry per variable in each block.

The canonical term order is graded-lex with the y-block senior to the
x-block: compare total y-degree, then y-exponents lexicographically, then
total x-degree, then x-exponents.  Keeping the y-block senior makes the
leading y-monomial of a fiberwise homogeneous polynomial independent of its
x-coefficients, which exact division relies on.

The zero polynomial has an empty term map and prints as "0".
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping

# (y exponents, x exponents), one entry per variable in each block.
Monomial = tuple[tuple[int, ...], tuple[int, ...]]

_ZERO = Fraction(0)


def monomial_key(mono: Monomial) -> tuple:
    """Sort key realizing the canonical order (y-senior graded-lex)."""
    yexp, xexp = mono
    return (sum(yexp), yexp, sum(xexp), xexp)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return (
        tuple(i + j for i, j in zip(a[0], b[0])),
        tuple(i + j for i, j in zip(a[1], b[1])),
    )


def _mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """a / b componentwise, or None if any exponent would go negative."""
    yexp = tuple(i - j for i, j in zip(a[0], b[0]))
    xexp = tuple(i - j for i, j in zip(a[1], b[1]))
    if any(e < 0 for e in yexp) or any(e < 0 for e in xexp):
        return None
    return (yexp, xexp)


def _as_scalar(value) -> Fraction | None:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    return None


class MultiPoly:
    """Sparse exact-rational polynomial in Q[x1..xn, y1..yn].

    Values are immutable after construction; all operations return new
    polynomials, so instances are safe to share between threads.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Monomial, Fraction] | None = None):
        if n < 1:
            raise ValueError(f"need at least one variable per block, got n={n}")
        self.n = n
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c != 0:
                    clean[mono] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> MultiPoly:
        return cls(n)

    @classmethod
    def const(cls, n: int, value) -> MultiPoly:
        c = Fraction(value)
        if c == 0:
            return cls(n)
        unit = ((0,) * n, (0,) * n)
        return cls(n, {unit: c})

    @classmethod
    def var_x(cls, n: int, i: int) -> MultiPoly:
        """The variable x_i, 1-based."""
        _check_index(n, i)
        xexp = [0] * n
        xexp[i - 1] = 1
        return cls(n, {((0,) * n, tuple(xexp)): Fraction(1)})

    @classmethod
    def var_y(cls, n: int, i: int) -> MultiPoly:
        """The variable y_i, 1-based."""
        _check_index(n, i)
        yexp = [0] * n
        yexp[i - 1] = 1
        return cls(n, {(tuple(yexp), (0,) * n): Fraction(1)})

    # -- predicates and views ---------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_y_free(self) -> bool:
        return all(sum(mono[0]) == 0 for mono in self.terms)

    def is_x_free(self) -> bool:
        return all(sum(mono[1]) == 0 for mono in self.terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending canonical order (leading term first)."""
        return sorted(self.terms.items(), key=lambda kv: monomial_key(kv[0]), reverse=True)

    def leading(self) -> tuple[Monomial, Fraction]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        mono = max(self.terms, key=monomial_key)
        return mono, self.terms[mono]

    def y_degree(self) -> int:
        """Largest total y-degree over all terms (0 for the zero polynomial)."""
        return max((sum(m[0]) for m in self.terms), default=0)

    def x_degree(self) -> int:
        return max((sum(m[1]) for m in self.terms), default=0)

    def max_var_degree(self) -> int:
        deg = 0
        for yexp, xexp in self.terms:
            deg = max(deg, max(yexp, default=0), max(xexp, default=0))
        return deg

    def homogeneous_y_degree(self) -> int | None:
        """Common y-degree of all terms, or None if inhomogeneous.

        Raises ValueError on the zero polynomial, which has no degree.
        """
        if not self.terms:
            raise ValueError("zero polynomial has no homogeneous degree")
        degrees = {sum(m[0]) for m in self.terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def coefficient_of_y(self, yexp: tuple[int, ...]) -> MultiPoly:
        """The x-polynomial multiplying the given y-monomial."""
        out = {}
        for (ye, xe), c in self.terms.items():
            if ye == yexp:
                out[((0,) * self.n, xe)] = c
        return MultiPoly(self.n, out)

    def y_monomials(self) -> set[tuple[int, ...]]:
        return {ye for ye, _ in self.terms}

    # -- arithmetic --------------------------------------------------------

    def _require_same(self, other: MultiPoly) -> None:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: n={self.n} vs n={other.n}")

    def __add__(self, other) -> MultiPoly:
        scalar = _as_scalar(other)
        if scalar is not None:
            other = MultiPoly.const(self.n, scalar)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._require_same(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, _ZERO) + coeff
            if c == 0:
                out.pop(mono, None)
            else:
                out[mono] = c
        return MultiPoly(self.n, out)

    __radd__ = __add__

    def __sub__(self, other) -> MultiPoly:
        scalar = _as_scalar(other)
        if scalar is not None:
            other = MultiPoly.const(self.n, scalar)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._require_same(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            c = out.get(mono, _ZERO) - coeff
            if c == 0:
                out.pop(mono, None)
            else:
                out[mono] = c
        return MultiPoly(self.n, out)

    def __rsub__(self, other) -> MultiPoly:
        return (-self) + other

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> MultiPoly:
        scalar = _as_scalar(other)
        if scalar is not None:
            if scalar == 0:
                return MultiPoly(self.n)
            return MultiPoly(self.n, {m: c * scalar for m, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._require_same(other)
        if not self.terms or not other.terms:
            return MultiPoly(self.n)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[Monomial, Fraction] = {}
        for mono_a, ca in a.items():
            for mono_b, cb in b.items():
                mono = _mono_mul(mono_a, mono_b)
                c = out.get(mono, _ZERO) + ca * cb
                if c == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = c
        return MultiPoly(self.n, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> MultiPoly:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"polynomial powers need a nonnegative integer, got {exponent!r}")
        result = MultiPoly.const(self.n, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        scalar = _as_scalar(other)
        if scalar is not None:
            return self.terms == MultiPoly.const(self.n, scalar).terms
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None  # mutable dict inside; equality is by value

    # -- calculus ----------------------------------------------------------

    def diff_x(self, i: int) -> MultiPoly:
        """Exact partial derivative with respect to x_i (1-based)."""
        _check_index(self.n, i)
        k = i - 1
        out: dict[Monomial, Fraction] = {}
        for (yexp, xexp), c in self.terms.items():
            e = xexp[k]
            if e == 0:
                continue
            nxexp = xexp[:k] + (e - 1,) + xexp[k + 1:]
            mono = (yexp, nxexp)
            nc = out.get(mono, _ZERO) + c * e
            if nc == 0:
                out.pop(mono, None)
            else:
                out[mono] = nc
        return MultiPoly(self.n, out)

    def diff_y(self, i: int) -> MultiPoly:
        """Exact partial derivative with respect to y_i (1-based)."""
        _check_index(self.n, i)
        k = i - 1
        out: dict[Monomial, Fraction] = {}
        for (yexp, xexp), c in self.terms.items():
            e = yexp[k]
            if e == 0:
                continue
            nyexp = yexp[:k] + (e - 1,) + yexp[k + 1:]
            mono = (nyexp, xexp)
            nc = out.get(mono, _ZERO) + c * e
            if nc == 0:
                out.pop(mono, None)
            else:
                out[mono] = nc
        return MultiPoly(self.n, out)

    def euler_contract_y(self) -> MultiPoly:
        """Sum over i of y_i * d/dy_i, computed termwise.

        Each monomial is an eigenvector of the contraction with eigenvalue
        equal to its total y-degree, so no products are formed.
        """
        out = {}
        for mono, c in self.terms.items():
            d = sum(mono[0])
            if d:
                out[mono] = c * d
        return MultiPoly(self.n, out)

    # -- evaluation --------------------------------------------------------

    def evaluate(self, xs: Iterable, ys: Iterable) -> Fraction:
        """Exact value at a rational point (xs, ys)."""
        xvals = [Fraction(v) for v in xs]
        yvals = [Fraction(v) for v in ys]
        if len(xvals) != self.n or len(yvals) != self.n:
            raise ValueError(f"point has wrong dimension for n={self.n}")
        total = Fraction(0)
        for (yexp, xexp), c in self.terms.items():
            term = c
            for e, v in zip(yexp, yvals):
                if e:
                    term *= v ** e
            for e, v in zip(xexp, xvals):
                if e:
                    term *= v ** e
            total += term
        return total

    def evaluate_abs(self, xs: Iterable, ys: Iterable) -> Fraction:
        """Sum of |coeff| * |point|^exponent over all terms.

        Upper bound for |evaluate| that measures how much cancellation the
        point induces; used to keep numeric sample points well conditioned.
        """
        xvals = [abs(Fraction(v)) for v in xs]
        yvals = [abs(Fraction(v)) for v in ys]
        total = Fraction(0)
        for (yexp, xexp), c in self.terms.items():
            term = abs(c)
            for e, v in zip(yexp, yvals):
                if e:
                    term *= v ** e
            for e, v in zip(xexp, xvals):
                if e:
                    term *= v ** e
            total += term
        return total

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"MultiPoly(n={self.n}, {to_text(self)!r})"


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"variable index {i} out of range 1..{n}")


def to_text(p: MultiPoly) -> str:
    """Canonical text form, parseable by the expression grammar.

    Terms appear in descending canonical order; within a term the x
    variables print before the y variables, all with explicit '*' and '^'.
    """
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for (yexp, xexp), coeff in p.sorted_terms():
        vars_part = []
        for idx, e in enumerate(xexp, start=1):
            if e == 1:
                vars_part.append(f"x{idx}")
            elif e > 1:
                vars_part.append(f"x{idx}^{e}")
        for idx, e in enumerate(yexp, start=1):
            if e == 1:
                vars_part.append(f"y{idx}")
            elif e > 1:
                vars_part.append(f"y{idx}^{e}")
        mag = abs(coeff)
        if not vars_part:
            body = str(mag)
        elif mag == 1:
            body = "*".join(vars_part)
        else:
            body = "*".join([str(mag)] + vars_part)
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append((" + " if coeff > 0 else " - ") + body)
    return "".join(pieces)


def divide_exact(num: MultiPoly, den: MultiPoly) -> MultiPoly | None:
    """Exact quotient of num by den over the rationals, or None.

    Runs leading-term elimination in the canonical order.  Returns q with
    num = q * den when den divides num exactly; otherwise None.  The
    quotient is unique because Q[x, y] is an integral domain.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    num._require_same(den)
    lt_mono, lt_coeff = den.leading()
    quotient: dict[Monomial, Fraction] = {}
    rem = dict(num.terms)
    while rem:
        mono_r = max(rem, key=monomial_key)
        dm = _mono_div(mono_r, lt_mono)
        if dm is None:
            return None
        c = rem[mono_r] / lt_coeff
        quotient[dm] = quotient.get(dm, _ZERO) + c
        for mono_d, cd in den.terms.items():
            mm = _mono_mul(dm, mono_d)
            nc = rem.get(mm, _ZERO) - c * cd
            if nc == 0:
                rem.pop(mm, None)
            else:
                rem[mm] = nc
    return MultiPoly(num.n, quotient)


# Deterministic witness grid: 1, -1, 2, -2, 1/2, -1/2, 3, -3, 1/3, ...
def _grid_value(i: int) -> Fraction:
    k = i // 4 + 1
    pick = i % 4
    if pick == 0:
        return Fraction(k)
    if pick == 1:
        return Fraction(-k)
    if pick == 2:
        return Fraction(1, k + 1)
    return Fraction(-1, k + 1)


def find_nonzero_point(p: MultiPoly) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]] | None:
    """Deterministic small rational point where p does not vanish.

    Iterates growing shells of the grid {1, -1, 2, -2, 1/2, ...} over all
    2n coordinates.  A nonzero polynomial cannot vanish on a grid larger
    than its per-variable degree, so the search terminates; None only for
    the zero polynomial.
    """
    if p.is_zero():
        return None
    n = p.n
    limit = p.max_var_degree() + 2
    values = [_grid_value(i) for i in range(limit)]
    for size in range(1, limit + 1):
        for combo in itertools.product(range(size), repeat=2 * n):
            if size > 1 and max(combo) != size - 1:
                continue  # only the new shell; smaller tuples were tried
            xs = tuple(values[c] for c in combo[:n])
            ys = tuple(values[c] for c in combo[n:])
            if p.evaluate(xs, ys) != 0:
                return xs, ys
    raise AssertionError("grid exhausted for a nonzero polynomial")  # pragma: no cover
