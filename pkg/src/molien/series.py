"""Molien series: generating-function expansion and the three-way cross-check.

The series coefficients are computed three independent ways and compared:

* series -- average the truncated reciprocals of det(id - lambda*T_g),
* trace  -- the trace of the degree-d Reynolds matrix,
* rank   -- the size of the explicitly computed invariant basis.

Their degree-by-degree agreement is the content of Molien's 1897 formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from molien.errors import BackendError, ConsistencyError, ValidationError
from molien.groups import FiniteMatrixGroup
from molien.invariants import (
    INTEGER_ROUNDING_TOLERANCE,
    invariant_basis,
    invariant_dimension,
    reynolds_matrix,
)
from molien.matrices import UnivariatePoly, det_one_minus_lambda, poly_divmod, poly_gcd
from molien.scalars import ScalarBackend


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series coefficients c_0..c_order over one scalar backend."""

    order: int
    coeffs: tuple
    backend: ScalarBackend

    def __post_init__(self):
        if len(self.coeffs) != self.order + 1:
            raise ValidationError("series must carry exactly order+1 coefficients")

    def coefficient(self, k: int):
        return self.coeffs[k]


@dataclass
class MolienReport:
    """Cross-verification record for the coefficients a_0..a_D."""

    max_degree: int
    group_order: int
    coefficients: list[int]
    per_method: dict[str, list[int]] = field(default_factory=dict)
    agreement: list[bool] = field(default_factory=list)

    def all_agree(self) -> bool:
        return all(self.agreement)


def series_reciprocal(p: UnivariatePoly, order: int) -> TruncatedSeries:
    """Invert a polynomial with constant term 1 as a power series mod lambda^(order+1).

    Uses the recurrence q_0 = 1, q_k = -sum_{j=1..min(k, deg p)} p_j q_{k-j}.
    """
    backend = p.backend
    if p.is_zero() or not backend.eq(p.coeffs[0], backend.one):
        raise ValidationError("series reciprocal needs constant term 1")
    if order < 0:
        raise ValidationError("series order must be nonnegative")
    coeffs = [backend.one]
    for k in range(1, order + 1):
        acc = backend.zero
        for j in range(1, min(k, p.degree) + 1):
            acc = acc + p.coeffs[j] * coeffs[k - j]
        coeffs.append(-acc)
    return TruncatedSeries(order, tuple(coeffs), backend)


def averaged_reciprocal_series(
    group: FiniteMatrixGroup, order: int, conjugate_elements: bool = False
) -> TruncatedSeries:
    """(1/|G|) sum over g of 1/det(id - lambda*T_g), truncated at the order.

    With conjugate_elements=True the sum runs over the entrywise
    conjugates (the first induced matrices) instead; because the sum runs
    over the whole group, the result is the same, which is tested.
    """
    backend = group.backend
    acc = [backend.zero] * (order + 1)
    for element in group.elements:
        matrix = element.entrywise_conj() if conjugate_elements else element
        expansion = series_reciprocal(det_one_minus_lambda(matrix), order)
        acc = [a + c for a, c in zip(acc, expansion.coeffs)]
    factor = backend.coerce(Fraction(1, group.order))
    return TruncatedSeries(order, tuple(c * factor for c in acc), backend)


def _series_integers(series: TruncatedSeries) -> list[int]:
    backend = series.backend
    out = []
    for d, coeff in enumerate(series.coeffs):
        if backend.is_exact:
            if not coeff.is_integer():
                raise ConsistencyError(f"series coefficient at degree {d} is not an integer: {coeff!r}")
            value = int(coeff.re)
        else:
            nearest = round(coeff.real)
            if abs(coeff - nearest) > INTEGER_ROUNDING_TOLERANCE:
                raise ConsistencyError(
                    f"series coefficient at degree {d} is {coeff!r}, "
                    f"not within {INTEGER_ROUNDING_TOLERANCE} of an integer"
                )
            value = nearest
        if value < 0:
            raise ConsistencyError(f"series coefficient at degree {d} is negative: {value}")
        out.append(value)
    return out


def molien_series(group: FiniteMatrixGroup, max_degree: int) -> MolienReport:
    """Molien coefficients a_0..a_D from the generating-function formula."""
    series = averaged_reciprocal_series(group, max_degree)
    values = _series_integers(series)
    if values[0] != 1:
        raise ConsistencyError(f"constant coefficient must be 1, got {values[0]}")
    return MolienReport(
        max_degree=max_degree,
        group_order=group.order,
        coefficients=values,
        per_method={"series": values},
        agreement=[True] * (max_degree + 1),
    )


def molien_rational(group: FiniteMatrixGroup) -> tuple[UnivariatePoly, UnivariatePoly]:
    """The Molien series as a reduced rational function (exact backend only).

    Combines the per-element reciprocals over the common denominator
    prod_g det(id - lambda*T_g), then removes the monic polynomial GCD and
    scales so the denominator has constant term 1.
    """
    backend = group.backend
    if not backend.is_exact:
        raise BackendError("molien_rational requires the exact backend")
    dets = [det_one_minus_lambda(element) for element in group.elements]
    order = group.order
    one = UnivariatePoly.one(backend)
    prefix = [one]
    for p in dets:
        prefix.append(prefix[-1] * p)
    suffix = [one]
    for p in reversed(dets):
        suffix.append(suffix[-1] * p)
    suffix.reverse()
    denominator = prefix[order]
    numerator = None
    for g in range(order):
        cofactor = prefix[g] * suffix[g + 1]
        numerator = cofactor if numerator is None else numerator + cofactor
    numerator = numerator.scale(Fraction(1, order))

    common = poly_gcd(numerator, denominator)
    if common.degree > 0:
        numerator, rem_n = poly_divmod(numerator, common)
        denominator, rem_d = poly_divmod(denominator, common)
        if not (rem_n.is_zero() and rem_d.is_zero()):
            raise ConsistencyError("polynomial GCD failed to divide exactly")
    constant = denominator.coefficient(0)
    if not constant:
        raise ConsistencyError("reduced denominator has zero constant term")
    numerator = numerator.scale(backend.one / constant)
    denominator = denominator.scale(backend.one / constant)
    for poly in (numerator, denominator):
        for coeff in poly.coeffs:
            if not coeff.is_real():
                raise ConsistencyError(f"rational form has non-real coefficient {coeff!r}")
    return numerator, denominator


def expand_rational(
    numerator: UnivariatePoly, denominator: UnivariatePoly, order: int
) -> TruncatedSeries:
    """Series expansion of numerator/denominator with denominator(0) = 1."""
    inverse = series_reciprocal(denominator, order)
    backend = numerator.backend
    coeffs = []
    for k in range(order + 1):
        acc = backend.zero
        for j in range(0, min(k, numerator.degree) + 1):
            acc = acc + numerator.coefficient(j) * inverse.coeffs[k - j]
        coeffs.append(acc)
    return TruncatedSeries(order, tuple(coeffs), backend)


def cross_check(group: FiniteMatrixGroup, max_degree: int) -> MolienReport:
    """Verify series, trace, and rank coefficients against each other.

    Disagreement is reported through the agreement flags, never raised;
    consistency errors (non-integer traces or coefficients) do propagate.
    """
    report = molien_series(group, max_degree)
    trace_values = []
    rank_values = []
    for d in range(max_degree + 1):
        reynolds = reynolds_matrix(group, d)
        trace_values.append(invariant_dimension(reynolds))
        rank_values.append(len(invariant_basis(group, d, reynolds=reynolds)))
    series_values = report.per_method["series"]
    report.per_method["trace"] = trace_values
    report.per_method["rank"] = rank_values
    report.agreement = [
        series_values[d] == trace_values[d] == rank_values[d]
        for d in range(max_degree + 1)
    ]
    return report


def molien_coefficients(group: FiniteMatrixGroup, max_degree: int) -> list[int]:
    """Convenience accessor for the plain coefficient list a_0..a_D."""
    return molien_series(group, max_degree).coefficients
