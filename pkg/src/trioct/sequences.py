"""Third-order linear recurrence families and their scalar identities.

A family is parameterized by coefficients (r, s, t) and initial values
(v0, v1, v2): term(n) = r*term(n-1) + s*term(n-2) + t*term(n-3).  Everything
here is exact; only nonnegative indices are defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import (
    EXACT_VARIANTS,
    RegimeError,
    Scalar,
    VariantError,
    one,
    variant_of,
    zero,
)


@dataclass(frozen=True)
class RecurrenceParams:
    """Coefficients and initial values of one recurrence family.

    All six fields must share one exact scalar variant (int or Fraction).
    """

    r: int | Fraction
    s: int | Fraction
    t: int | Fraction
    v0: int | Fraction
    v1: int | Fraction
    v2: int | Fraction

    def __post_init__(self) -> None:
        kinds = {variant_of(f) for f in self.fields()}
        if len(kinds) != 1:
            raise VariantError("all six parameters must share one scalar variant")
        kind = kinds.pop()
        if kind not in EXACT_VARIANTS:
            raise VariantError(f"parameters must be exact scalars, not {kind}")

    def fields(self) -> tuple[Scalar, ...]:
        return (self.r, self.s, self.t, self.v0, self.v1, self.v2)

    @property
    def variant(self) -> str:
        return variant_of(self.r)

    @property
    def delta(self) -> int | Fraction:
        """r + s + t - 1, the divisor of the closed-form prefix sums."""
        return self.r + self.s + self.t - 1

    def as_rational(self) -> "RecurrenceParams":
        return RecurrenceParams(*(Fraction(f) for f in self.fields()))


PRESETS: dict[str, RecurrenceParams] = {
    "tribonacci": RecurrenceParams(1, 1, 1, 0, 1, 1),
    "padovan": RecurrenceParams(0, 1, 1, 0, 1, 0),
    "narayana": RecurrenceParams(1, 0, 1, 0, 1, 1),
    "third_order_jacobsthal": RecurrenceParams(1, 1, 2, 0, 1, 1),
}

PRESET_NAMES = tuple(PRESETS)


def preset_lookup(name: str) -> RecurrenceParams:
    try:
        return PRESETS[name]
    except KeyError:
        known = ", ".join(PRESET_NAMES)
        raise ValueError(f"unknown preset {name!r}; expected one of: {known}") from None


def _check_index(n: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"sequence index must be a nonnegative integer, got {n!r}")


def _iterate(params: RecurrenceParams, seeds: tuple[Scalar, Scalar, Scalar], n: int) -> Scalar:
    a, b, c = seeds
    if n == 0:
        return a
    if n == 1:
        return b
    for _ in range(n - 2):
        a, b, c = b, c, params.r * c + params.s * b + params.t * a
    return c


def seq_term(params: RecurrenceParams, n: int) -> Scalar:
    """Exact n-th term by forward iteration; seeds returned verbatim."""
    _check_index(n)
    return _iterate(params, (params.v0, params.v1, params.v2), n)


def u_term(params: RecurrenceParams, n: int) -> Scalar:
    """The companion family with seeds (0, 1, r) under the same recurrence."""
    _check_index(n)
    kind = params.variant
    return _iterate(params, (zero(kind), one(kind), params.r), n)


def companion_identity(params: RecurrenceParams, n: int) -> tuple[Scalar, Scalar]:
    """Expand term(n+1) through companion terms; returns (lhs, rhs), equal exactly.

    rhs = v2*U(n) + (s*v1 + t*v0)*U(n-1) + t*v1*U(n-2), needing n >= 2.
    """
    if n < 2:
        raise ValueError("the companion expansion needs n >= 2")
    lhs = seq_term(params, n + 1)
    rhs = (
        params.v2 * u_term(params, n)
        + (params.s * params.v1 + params.t * params.v0) * u_term(params, n - 1)
        + params.t * params.v1 * u_term(params, n - 2)
    )
    return lhs, rhs


def prefix_sum(params: RecurrenceParams, n: int) -> Scalar:
    """Direct summation oracle: term(0) + ... + term(n), exact."""
    _check_index(n)
    total = zero(params.variant)
    a, b, c = params.v0, params.v1, params.v2
    for k in range(n + 1):
        total += a
        a, b, c = b, c, params.r * c + params.s * b + params.t * a
    return total


def _sum_constant(r: Scalar, s: Scalar, params: RecurrenceParams) -> Scalar:
    # constant term that collapses the telescoped prefix sum
    return (r + s - 1) * params.v0 + (r - 1) * params.v1 - params.v2


def partial_sum_formula(params: RecurrenceParams, n: int) -> Fraction:
    """Closed form for the prefix sum term(0)+...+term(n), exact rational.

    (term(n+2) + (1-r)*term(n+1) + t*term(n) + (r+s-1)*v0 + (r-1)*v1 - v2) / delta.
    The (r+s-1)*v0 sign is the verified one; see partial_sum_formula_uncorrected
    for the misprinted variant this replaces.  Undefined when delta == 0.
    """
    return _partial_sum(params, n, _sum_constant(params.r, params.s, params))


def partial_sum_formula_uncorrected(params: RecurrenceParams, n: int) -> Fraction:
    """The same closed form with the (r-s-1)*v0 constant some tables print.

    Kept only to demonstrate the misprint: it fails whenever s*v0 != 0
    (witness r=s=t=1, v=(1,0,0), n=0).  Use partial_sum_formula.
    """
    wrong = (params.r - params.s - 1) * params.v0 + (params.r - 1) * params.v1 - params.v2
    return _partial_sum(params, n, wrong)


def _partial_sum(params: RecurrenceParams, n: int, constant: Scalar) -> Fraction:
    _check_index(n)
    d = params.delta
    if not d:
        raise RegimeError(
            "r + s + t - 1 is zero: the closed-form prefix sum is undefined; "
            "use prefix_sum instead"
        )
    total = (
        seq_term(params, n + 2)
        + (1 - params.r) * seq_term(params, n + 1)
        + params.t * seq_term(params, n)
        + constant
    )
    return Fraction(total) / Fraction(d)
