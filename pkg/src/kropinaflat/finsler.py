"""m-th root metric objects and their exact derived quantities.

The base object is a fiberwise degree-m homogeneous polynomial A(x, y)
together with a 1-form beta = b_i(x) y^i.  From A we derive first and
second fiber derivatives, x-derivatives, and their y-contractions, all as
exact polynomials, and verify the unconditional contraction identities

    y^i A_i = m A            y^i A_ij = (m-1) A_j

plus the denominator-cleared inverse identities built from the adjugate of
(A_ij).  Irreducibility of A is a hypothesis of the flatness theorems; it
is tracked as a refutation-only status, never proved.
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra.poly import MultiPoly, divide_exact
from .reports import FAILS, HOLDS, INCONCLUSIVE, Condition, ConditionReport
from .algebra.powerexpr import PowerExpr

ASSERTED = "asserted"
HEURISTICALLY_CONSISTENT = "heuristically_consistent"
REDUCIBLE = "reducible_witness"


@dataclass
class IrreducibilityStatus:
    kind: str  # one of ASSERTED, HEURISTICALLY_CONSISTENT, REDUCIBLE
    factor: MultiPoly | None = None
    detail: str | None = None

    def __str__(self) -> str:
        if self.kind == REDUCIBLE:
            return f"{self.kind}({self.factor})"
        return self.kind


class SymmetricTensor:
    """Symmetric rank-m tensor with x-only polynomial entries.

    Entries are keyed by sorted index tuples (1-based, i1 <= ... <= im), so
    symmetry holds by construction; missing tuples are zero.
    """

    def __init__(self, n: int, m: int, entries: dict[tuple[int, ...], MultiPoly] | None = None):
        self.n = n
        self.m = m
        self.entries: dict[tuple[int, ...], MultiPoly] = {}
        for idx, value in (entries or {}).items():
            self.set(idx, value)

    def set(self, idx: tuple[int, ...], value: MultiPoly) -> None:
        if len(idx) != self.m:
            raise ValueError(f"index tuple {idx} has length != m={self.m}")
        if any(not 1 <= i <= self.n for i in idx):
            raise ValueError(f"index tuple {idx} out of range 1..{self.n}")
        if not value.is_y_free():
            raise ValueError("tensor entries must not depend on y")
        key = tuple(sorted(idx))
        if value.is_zero():
            self.entries.pop(key, None)
        else:
            self.entries[key] = value

    def get(self, idx: tuple[int, ...]) -> MultiPoly:
        return self.entries.get(tuple(sorted(idx)), MultiPoly.zero(self.n))


def _multiplicity(idx: tuple[int, ...]) -> int:
    counts: dict[int, int] = {}
    for i in idx:
        counts[i] = counts.get(i, 0) + 1
    result = math.factorial(len(idx))
    for c in counts.values():
        result //= math.factorial(c)
    return result


def tensor_to_polynomial(tensor: SymmetricTensor) -> MultiPoly:
    """Full symmetric contraction with y, with multinomial multiplicities."""
    n = tensor.n
    total = MultiPoly.zero(n)
    for idx, entry in tensor.entries.items():
        y_mono = MultiPoly.const(n, 1)
        for i in idx:
            y_mono = y_mono * MultiPoly.var_y(n, i)
        total = total + entry * y_mono * _multiplicity(idx)
    return total


def polynomial_to_tensor(a: MultiPoly, m: int) -> SymmetricTensor:
    """Polarization: a_{i1..im} = (1/m!) d^m A / dy_{i1}..dy_{im}."""
    if a.is_zero():
        raise ValueError("zero polynomial defines no tensor")
    if a.homogeneous_y_degree() != m:
        raise ValueError(f"polynomial is not y-homogeneous of degree {m}")
    n = a.n
    tensor = SymmetricTensor(n, m)
    inv_mfact = Fraction(1, math.factorial(m))
    for idx in itertools.combinations_with_replacement(range(1, n + 1), m):
        entry = a
        for i in idx:
            entry = entry.diff_y(i)
        tensor.set(idx, entry * inv_mfact)
    return tensor


class MthRootMetric:
    """F = A^(1/m) with A fiberwise homogeneous of degree m >= 3.

    Irreducibility of A is either asserted by the caller or probed lazily
    by a refutation-only heuristic; see irreducibility_heuristic().
    """

    def __init__(self, n: int, m: int, a: MultiPoly, assert_irreducible: bool = False):
        if n < 2:
            raise ValueError(f"dimension must be at least 2, got n={n}")
        if m < 3:
            raise ValueError(f"root order must satisfy m > 2, got m={m}")
        if a.n != n:
            raise ValueError(f"polynomial block size {a.n} != n={n}")
        if a.is_zero():
            raise ValueError("metric polynomial must be nonzero")
        if a.homogeneous_y_degree() != m:
            raise ValueError(f"metric polynomial must be y-homogeneous of degree m={m}")
        self.n = n
        self.m = m
        self.a = a
        self._irreducibility: IrreducibilityStatus | None = (
            IrreducibilityStatus(ASSERTED, detail="asserted by caller")
            if assert_irreducible
            else None
        )

    @property
    def irreducibility(self) -> IrreducibilityStatus:
        if self._irreducibility is None:
            self._irreducibility = irreducibility_heuristic(self)
        return self._irreducibility


class OneForm:
    """beta = b_i(x) y^i with x-only polynomial components, not identically zero."""

    def __init__(self, components: list[MultiPoly]):
        if not components:
            raise ValueError("one-form needs at least one component")
        n = components[0].n
        if len(components) != n:
            raise ValueError(f"one-form needs n={n} components, got {len(components)}")
        for b in components:
            b._require_same(components[0])
            if not b.is_y_free():
                raise ValueError("one-form components must not depend on y")
        if all(b.is_zero() for b in components):
            raise ValueError("one-form must not vanish identically")
        self.n = n
        self.b = list(components)

    @classmethod
    def from_poly(cls, beta: MultiPoly) -> OneForm:
        if beta.is_zero():
            raise ValueError("one-form must not vanish identically")
        if beta.homogeneous_y_degree() != 1:
            raise ValueError("one-form must be y-homogeneous of degree 1")
        n = beta.n
        components = []
        for i in range(1, n + 1):
            yexp = tuple(1 if j == i else 0 for j in range(1, n + 1))
            components.append(beta.coefficient_of_y(yexp))
        return cls(components)

    def as_poly(self) -> MultiPoly:
        total = MultiPoly.zero(self.n)
        for i, b in enumerate(self.b, start=1):
            total = total + b * MultiPoly.var_y(self.n, i)
        return total


@dataclass
class DerivedQuantities:
    """All first-layer derived polynomials of (A, beta).

    a_0l[l] is the y^l-derivative of the x-derivatives contracted with y,
    sum_k d(A_{x^k})/dy^l * y^k, so that d(A_0)/dy^l = A_{x^l} + A_0l[l].
    """

    a_i: list[MultiPoly]
    a_ij: list[list[MultiPoly]]
    a_xl: list[MultiPoly]
    a_0: MultiPoly
    a_0l: list[MultiPoly]
    beta_xl: list[MultiPoly]
    beta_0: MultiPoly
    beta_0l: list[MultiPoly]


def derive(metric: MthRootMetric, beta: OneForm) -> DerivedQuantities:
    if metric.n != beta.n:
        raise ValueError(f"dimension mismatch: metric n={metric.n}, one-form n={beta.n}")
    n = metric.n
    a = metric.a
    ys = [MultiPoly.var_y(n, i) for i in range(1, n + 1)]

    a_i = [a.diff_y(i) for i in range(1, n + 1)]
    a_ij = [[a_i[i].diff_y(j + 1) for j in range(n)] for i in range(n)]
    a_xl = [a.diff_x(l) for l in range(1, n + 1)]

    a_0 = MultiPoly.zero(n)
    for k in range(n):
        a_0 = a_0 + a_xl[k] * ys[k]

    a_0l = []
    for l in range(1, n + 1):
        acc = MultiPoly.zero(n)
        for k in range(n):
            acc = acc + a_xl[k].diff_y(l) * ys[k]
        a_0l.append(acc)

    beta_poly = beta.as_poly()
    beta_xl = [beta_poly.diff_x(l) for l in range(1, n + 1)]
    beta_0 = MultiPoly.zero(n)
    for k in range(n):
        beta_0 = beta_0 + beta_xl[k] * ys[k]

    beta_0l = []
    for l in range(n):
        acc = MultiPoly.zero(n)
        for k in range(n):
            acc = acc + beta.b[l].diff_x(k + 1) * ys[k]
        beta_0l.append(acc)

    return DerivedQuantities(
        a_i=a_i,
        a_ij=a_ij,
        a_xl=a_xl,
        a_0=a_0,
        a_0l=a_0l,
        beta_xl=beta_xl,
        beta_0=beta_0,
        beta_0l=beta_0l,
    )


def verify_euler_identities(metric: MthRootMetric) -> ConditionReport:
    """Exact check of y^i A_i = m A and y^i A_ij = (m-1) A_j for each j."""
    n, m, a = metric.n, metric.m, metric.a
    ys = [MultiPoly.var_y(n, i) for i in range(1, n + 1)]
    a_i = [a.diff_y(i) for i in range(1, n + 1)]

    report = ConditionReport(name="euler-identities")

    lhs = MultiPoly.zero(n)
    for k in range(n):
        lhs = lhs + ys[k] * a_i[k]
    diff = lhs - a * m
    if diff.is_zero():
        report.conditions.append(Condition("y^i*A_i = m*A", HOLDS))
    else:
        report.conditions.append(Condition("y^i*A_i = m*A", FAILS, witness=str(diff)))

    violations = []
    for j in range(n):
        lhs2 = MultiPoly.zero(n)
        for i in range(n):
            lhs2 = lhs2 + ys[i] * a.diff_y(i + 1).diff_y(j + 1)
        diff2 = lhs2 - a_i[j] * (m - 1)
        if not diff2.is_zero():
            violations.append(f"j={j + 1}: {diff2}")
    if violations:
        report.conditions.append(
            Condition("y^i*A_ij = (m-1)*A_j", FAILS, witness="; ".join(violations))
        )
    else:
        report.conditions.append(Condition("y^i*A_ij = (m-1)*A_j", HOLDS))
    return report


def _determinant(mat: list[list[MultiPoly]]) -> MultiPoly:
    size = len(mat)
    n = mat[0][0].n
    if size == 1:
        return mat[0][0]
    total = MultiPoly.zero(n)
    for col in range(size):
        minor = [row[:col] + row[col + 1:] for row in mat[1:]]
        term = mat[0][col] * _determinant(minor)
        total = total + term if col % 2 == 0 else total - term
    return total


def _adjugate(mat: list[list[MultiPoly]]) -> list[list[MultiPoly]]:
    size = len(mat)
    adj = [[None] * size for _ in range(size)]
    for r in range(size):
        for c in range(size):
            minor = [
                [mat[i][j] for j in range(size) if j != c]
                for i in range(size)
                if i != r
            ]
            cof = _determinant(minor) if size > 1 else MultiPoly.const(mat[0][0].n, 1)
            if (r + c) % 2 == 1:
                cof = -cof
            adj[c][r] = cof  # transpose of the cofactor matrix
    return adj


def verify_inverse_identities(metric: MthRootMetric) -> ConditionReport:
    """Denominator-cleared inverse identities via adjugate and determinant.

    Checks (m-1) * adj(A_ij) . A_i = det * y^j componentwise and
    (m-1) * A_i A_j adj^{ij} = m * det * A.  Inconclusive when det(A_ij)
    vanishes identically or n exceeds the exact-adjugate bound of 3.
    """
    n, m, a = metric.n, metric.m, metric.a
    report = ConditionReport(name="inverse-identities")
    if n > 3:
        report.conditions.append(
            Condition(
                "adjugate identities",
                INCONCLUSIVE,
                detail=f"exact adjugate check restricted to n <= 3, got n={n}",
            )
        )
        return report

    a_i = [a.diff_y(i) for i in range(1, n + 1)]
    a_ij = [[a_i[i].diff_y(j + 1) for j in range(n)] for i in range(n)]
    det = _determinant(a_ij)
    if det.is_zero():
        report.conditions.append(
            Condition("adjugate identities", INCONCLUSIVE, detail="det(A_ij) = 0 identically")
        )
        report.derived_facts["determinant"] = "0"
        return report
    adj = _adjugate(a_ij)
    ys = [MultiPoly.var_y(n, i) for i in range(1, n + 1)]

    violations = []
    for j in range(n):
        lhs = MultiPoly.zero(n)
        for i in range(n):
            lhs = lhs + adj[j][i] * a_i[i]
        diff = lhs * (m - 1) - det * ys[j]
        if not diff.is_zero():
            violations.append(f"j={j + 1}: {diff}")
    if violations:
        report.conditions.append(
            Condition("(m-1)*adj.A_i = det*y^j", FAILS, witness="; ".join(violations))
        )
    else:
        report.conditions.append(Condition("(m-1)*adj.A_i = det*y^j", HOLDS))

    double = MultiPoly.zero(n)
    for i in range(n):
        for j in range(n):
            double = double + a_i[i] * a_i[j] * adj[i][j]
    diff2 = double * (m - 1) - det * a * m
    if diff2.is_zero():
        report.conditions.append(Condition("(m-1)*A_i*A_j*adj^ij = m*det*A", HOLDS))
    else:
        report.conditions.append(
            Condition("(m-1)*A_i*A_j*adj^ij = m*det*A", FAILS, witness=str(diff2))
        )
    return report


@dataclass
class FundamentalTensorNormalized:
    """g_hat_ij = m*A*A_ij + (2-m)*A_i*A_j together with its prefactor,
    so that g_ij = prefactor * g_hat_ij."""

    g_hat: list[list[MultiPoly]]
    prefactor: PowerExpr


def fundamental_tensor(metric: MthRootMetric) -> FundamentalTensorNormalized:
    n, m, a = metric.n, metric.m, metric.a
    a_i = [a.diff_y(i) for i in range(1, n + 1)]
    g_hat = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(a * a_i[i].diff_y(j + 1) * m + a_i[i] * a_i[j] * (2 - m))
        g_hat.append(row)
    prefactor = PowerExpr.single(
        m,
        a,
        MultiPoly.const(n, 1),
        MultiPoly.const(n, Fraction(1, m * m)),
        Fraction(2, m) - 2,
        0,
    )
    return FundamentalTensorNormalized(g_hat=g_hat, prefactor=prefactor)


def minkowski_sufficient(metric: MthRootMetric) -> bool:
    """True iff A has no x-dependence in this chart (sufficient for locally
    Minkowskian; False is not a disproof)."""
    return all(metric.a.diff_x(l).is_zero() for l in range(1, metric.n + 1))


# -- irreducibility heuristic ------------------------------------------------

def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """All rational roots of sum coeffs[i] t^i, by the rational root theorem."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if not coeffs:
        return []
    roots = []
    if coeffs[0] == 0:
        roots.append(Fraction(0))
        while coeffs and coeffs[0] == 0:
            coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return roots
    scale = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * scale) for c in coeffs]
    lead, const = abs(ints[-1]), abs(ints[0])

    def divisors(v: int) -> list[int]:
        out = []
        d = 1
        while d * d <= v:
            if v % d == 0:
                out.append(d)
                out.append(v // d)
            d += 1
        return out

    def value_at(t: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(ints):
            acc = acc * t + c
        return acc

    seen = set(roots)
    for p in divisors(const):
        for q in divisors(lead):
            for candidate in (Fraction(p, q), Fraction(-p, q)):
                if candidate not in seen and value_at(candidate) == 0:
                    seen.add(candidate)
                    roots.append(candidate)
    return roots


def _normalized_linear_form(n: int, coeffs: list[Fraction]) -> MultiPoly | None:
    nonzero = [c for c in coeffs if c != 0]
    if not nonzero:
        return None
    scale = 1 / nonzero[0]
    form = MultiPoly.zero(n)
    for i, c in enumerate(coeffs, start=1):
        if c != 0:
            form = form + MultiPoly.var_y(n, i) * (c * scale)
    return form


def irreducibility_heuristic(metric: MthRootMetric) -> IrreducibilityStatus:
    """Refutation-only evidence about irreducibility of A, never a proof.

    Searches a small integer grid of constant-coefficient y-linear factors
    (verified by exact division), then restricts A to deterministic and
    seeded rational lines in y at rational x-points and rational-root-tests
    the resulting univariate polynomials, lifting any root to a candidate
    linear factor that is again verified by division.  A verified factor
    refutes irreducibility; otherwise the status is heuristically
    consistent with it.
    """
    if metric._irreducibility is not None and metric._irreducibility.kind == ASSERTED:
        return metric._irreducibility
    n, a = metric.n, metric.a

    tried: set[frozenset] = set()

    def try_form(coeffs: list[Fraction]) -> MultiPoly | None:
        form = _normalized_linear_form(n, coeffs)
        if form is None:
            return None
        key = frozenset(form.terms.items())
        if key in tried:
            return None
        tried.add(key)
        if divide_exact(a, form) is not None:
            return form
        return None

    for combo in itertools.product(range(-2, 3), repeat=n):
        factor = try_form([Fraction(c) for c in combo])
        if factor is not None:
            return IrreducibilityStatus(REDUCIBLE, factor=factor, detail="grid linear factor")

    rng = random.Random(0x5EED)
    x_points = [tuple(Fraction(0) for _ in range(n)), tuple(Fraction(1) for _ in range(n))]
    x_points += [
        tuple(Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(n))
        for _ in range(3)
    ]
    root_seen = False
    for xs in x_points:
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                # Restrict to the line y = t e_i + e_j and read off the
                # univariate coefficients exactly.
                coeffs = [Fraction(0)] * (metric.m + 1)
                for (yexp, xexp), c in a.terms.items():
                    if any(e and k + 1 not in (i, j) for k, e in enumerate(yexp)):
                        continue
                    value = c
                    for k, e in enumerate(xexp):
                        if e:
                            value *= xs[k] ** e
                    coeffs[yexp[i - 1]] += value
                for root in _rational_roots(coeffs):
                    root_seen = True
                    candidate = [Fraction(0)] * n
                    candidate[i - 1] = Fraction(1)
                    candidate[j - 1] = -root
                    factor = try_form(candidate)
                    if factor is not None:
                        return IrreducibilityStatus(
                            REDUCIBLE, factor=factor, detail="line-restriction root lift"
                        )
    detail = (
        "no verified factor; some line restrictions had rational roots"
        if root_seen
        else "no grid factor and no rational roots on sampled line restrictions"
    )
    return IrreducibilityStatus(HEURISTICALLY_CONSISTENT, detail=detail)
