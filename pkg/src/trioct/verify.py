"""Batch verification of every identity the library implements.

The suite runs each identity over a grid of parameter sets and indices and
aggregates pass/fail counts and worst residuals into a machine-readable
report.  Identities that hold term by term are compared with exact
equality (tolerance zero); root-based closed forms are compared against
the exact terms with per-category relative tolerances.  Parameter sets
that fall outside an identity's hypotheses (delta = 0 for the sum
formulas, a nonpositive discriminant for anything root-based) are counted
as skipped, not failed.

Aggregation is order-independent (sums and maxima), so checks could be
evaluated in any order or concurrently without changing the report.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from .genfunc import build_gf, gf_expand, gf_numerator
from .octonion import Octonion
from .octseq import OctSequenceContext, sum_correction
from .scalars import RegimeError, Scalar
from .sequences import (
    PRESET_NAMES,
    RecurrenceParams,
    partial_sum_formula,
    partial_sum_formula_uncorrected,
    preset_lookup,
    prefix_sum,
    companion_identity,
)

EXACT_CATEGORIES = (
    "recurrence",
    "companion_identity",
    "scalar_sum",
    "octonion_sum",
    "genfunc_table",
    "genfunc_roundtrip",
    "sum_table",
    "shift_formula",
)
NUMERIC_CATEGORIES = ("binet_scalar", "binet_octonion", "norm_formula", "quad_approx")
CATEGORIES = EXACT_CATEGORIES + NUMERIC_CATEGORIES

DEFAULT_TOLERANCES: dict[str, float] = {
    "binet_scalar": 1e-8,
    "binet_octonion": 1e-8,
    "norm_formula": 1e-6,
    "quad_approx": 1e-8,
}

# index windows inside which each floating closed form is contracted to hold
NUMERIC_WINDOWS = {
    "binet_scalar": 40,
    "binet_octonion": 40,
    "norm_formula": 25,
    "quad_approx": 30,
}

# Tabulated reference values for the four named presets, kept independent of
# the code paths they check.  Numerator coefficient tuples are ascending
# powers per basis slot e0..e7.
REFERENCE_GENFUNC_TABLE: dict[str, tuple[tuple[int, ...], ...]] = {
    "tribonacci": (
        (0, 1), (1,), (1, 1, 1), (2, 2, 1), (4, 3, 2), (7, 6, 4), (13, 11, 7), (24, 20, 13),
    ),
    "padovan": (
        (0, 1), (1,), (0, 1, 1), (1, 1), (1, 1, 1), (1, 2, 1), (2, 2, 1), (2, 3, 2),
    ),
    "narayana": (
        (0, 1), (1,), (1, 0, 1), (1, 1, 1), (2, 1, 1), (3, 1, 2), (4, 2, 3), (6, 3, 4),
    ),
    "third_order_jacobsthal": (
        (0, 1), (1,), (1, 1, 1), (2, 3, 2), (5, 4, 4), (9, 9, 10), (18, 19, 18), (37, 36, 36),
    ),
}

# Known misprints in the tabulated reference: slot -> the exact computation.
# The computed value is authoritative; a mismatch exactly here is recorded
# as an erratum, anywhere else it is a failure.
GENFUNC_MISPRINTS: dict[tuple[str, int], tuple[int, ...]] = {
    ("third_order_jacobsthal", 2): (1, 1, 2),
}

# Constant octonions the tabulated summation formulas subtract.
REFERENCE_SUM_CONSTANTS: dict[str, tuple[int, ...]] = {
    "tribonacci": (1, 1, 3, 5, 9, 17, 31, 57),
    "padovan": (1, 1, 2, 2, 3, 4, 5, 7),
    "narayana": (1, 1, 2, 3, 4, 6, 9, 13),
    "third_order_jacobsthal": (1, 1, 4, 7, 13, 28, 55, 109),
}

# Tabulated shapes of the summation formulas, one callable per preset.
_SumForm = Callable[[OctSequenceContext, int, Octonion], Octonion]
REFERENCE_SUM_FORMS: dict[str, _SumForm] = {
    "tribonacci": lambda ctx, n, c: (
        ctx.oct_term(n + 2).as_rational() + ctx.oct_term(n).as_rational() - c
    ) * Fraction(1, 2),
    "padovan": lambda ctx, n, c: ctx.oct_term(n + 5).as_rational() - c,
    "narayana": lambda ctx, n, c: ctx.oct_term(n + 3).as_rational() - c,
    "third_order_jacobsthal": lambda ctx, n, c: (
        ctx.oct_term(n + 2).as_rational()
        + ctx.oct_term(n).as_rational() * Fraction(2)
        - c
    ) * Fraction(1, 3),
}

# Tabulated shift-convolution coefficient triples (applied to O(n+2), O(n+1),
# O(n)), written in terms of the preset's own terms.
_ShiftPattern = Callable[[Callable[[int], Scalar], int], tuple[Scalar, Scalar, Scalar]]
REFERENCE_SHIFT_PATTERNS: dict[str, _ShiftPattern] = {
    "tribonacci": lambda f, m: (f(m - 1), f(m - 2) + f(m - 3), f(m - 2)),
    "padovan": lambda f, m: (f(m - 1), f(m), f(m - 2)),
    "narayana": lambda f, m: (f(m - 1), f(m - 3), f(m - 2)),
    "third_order_jacobsthal": lambda f, m: (f(m - 1), f(m - 2) + 2 * f(m - 3), 2 * f(m - 2)),
}

_SIGN_WITNESS = RecurrenceParams(1, 1, 1, 1, 0, 0)


@dataclass(frozen=True)
class SuiteConfig:
    """Grid and tolerances for one suite run."""

    presets: tuple[str, ...] = PRESET_NAMES
    extra_params: tuple[RecurrenceParams, ...] = ()
    random_sets: int = 0
    n_max: int = 40
    m_max: int = 20
    seed: int = 0
    tolerances: Mapping[str, float] = field(default_factory=dict)
    sum_constants_override: Mapping[str, tuple[int, ...]] | None = None

    def __post_init__(self) -> None:
        for name in self.presets:
            preset_lookup(name)
        if self.n_max < 3:
            raise ValueError("n_max must be >= 3")
        if self.m_max < 3:
            raise ValueError("m_max must be >= 3")
        if self.random_sets < 0:
            raise ValueError("random_sets must be >= 0")
        for key, tol in self.tolerances.items():
            if key not in NUMERIC_CATEGORIES:
                raise ValueError(f"unknown tolerance key {key!r}")
            if tol <= 0:
                raise ValueError(f"tolerance for {key!r} must be positive")
        if self.sum_constants_override:
            for name, comps in self.sum_constants_override.items():
                preset_lookup(name)
                if len(comps) != 8:
                    raise ValueError("sum-constant overrides need 8 components")

    def tolerance(self, category: str) -> float:
        return dict(DEFAULT_TOLERANCES, **self.tolerances)[category]

    def sum_constant(self, preset: str) -> tuple[int, ...]:
        if self.sum_constants_override and preset in self.sum_constants_override:
            return tuple(self.sum_constants_override[preset])
        return REFERENCE_SUM_CONSTANTS[preset]


@dataclass
class CategoryResult:
    run: int = 0
    failed: int = 0
    skipped: int = 0
    max_abs_residual: float = 0.0
    max_rel_residual: float = 0.0

    def record_exact(self, ok: bool, abs_residual: float = 0.0, rel_residual: float = 0.0) -> None:
        self.run += 1
        if not ok:
            self.failed += 1
            self.max_abs_residual = max(self.max_abs_residual, abs_residual)
            self.max_rel_residual = max(self.max_rel_residual, rel_residual)

    def record_numeric(self, abs_residual: float, rel_residual: float, tol: float) -> None:
        self.run += 1
        self.max_abs_residual = max(self.max_abs_residual, abs_residual)
        self.max_rel_residual = max(self.max_rel_residual, rel_residual)
        if rel_residual > tol:
            self.failed += 1

    def skip(self, count: int = 1) -> None:
        self.skipped += count

    def merge(self, other: "CategoryResult") -> None:
        self.run += other.run
        self.failed += other.failed
        self.skipped += other.skipped
        self.max_abs_residual = max(self.max_abs_residual, other.max_abs_residual)
        self.max_rel_residual = max(self.max_rel_residual, other.max_rel_residual)


@dataclass
class VerificationReport:
    categories: dict[str, CategoryResult]
    errata: list[str]
    seed: int

    @property
    def total_failures(self) -> int:
        return sum(c.failed for c in self.categories.values())

    def to_json_dict(self) -> dict:
        return {
            "categories": {
                name: {
                    "run": c.run,
                    "failed": c.failed,
                    "skipped": c.skipped,
                    "max_rel_residual": c.max_rel_residual,
                }
                for name, c in self.categories.items()
            },
            "errata": list(self.errata),
            "seed": self.seed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = []
        width = max(len(name) for name in self.categories)
        for name, c in self.categories.items():
            lines.append(
                f"{name:<{width}}  run={c.run:<6d} failed={c.failed:<4d} "
                f"skipped={c.skipped:<4d} max_rel_residual={c.max_rel_residual:.3e}"
            )
        for note in self.errata:
            lines.append(f"erratum: {note}")
        lines.append(f"seed: {self.seed}")
        verdict = "PASS" if self.total_failures == 0 else "FAIL"
        lines.append(f"result: {verdict} ({self.total_failures} failures)")
        return "\n".join(lines) + "\n"


def make_random_params(rng: random.Random) -> RecurrenceParams:
    """One random integer parameter set: coefficients in [-5, 5], seeds in [-3, 3]."""
    return RecurrenceParams(
        rng.randint(-5, 5),
        rng.randint(-5, 5),
        rng.randint(-5, 5),
        rng.randint(-3, 3),
        rng.randint(-3, 3),
        rng.randint(-3, 3),
    )


def _oct_residuals(approx: Octonion, exact: Octonion) -> tuple[float, float]:
    """Componentwise (max abs, max scaled) residual against the exact value."""
    max_abs = 0.0
    max_rel = 0.0
    for a, e in zip(approx.components, exact.components):
        diff = abs(complex(a) - complex(e))
        max_abs = max(max_abs, diff)
        max_rel = max(max_rel, diff / max(1.0, abs(complex(e))))
    return max_abs, max_rel


def _exact_oct_pair(result: CategoryResult, lhs: Octonion, rhs: Octonion) -> None:
    if lhs == rhs:
        result.record_exact(True)
    else:
        abs_r, rel_r = _oct_residuals(lhs.as_complex(), rhs.as_complex())
        result.record_exact(False, abs_r, rel_r)


def _exact_scalar_pair(result: CategoryResult, lhs: Scalar, rhs: Scalar) -> None:
    if lhs == rhs:
        result.record_exact(True)
    else:
        diff = abs(complex(float(lhs)) - complex(float(rhs)))
        result.record_exact(False, diff, diff / max(1.0, abs(float(rhs))))


def run_suite(config: SuiteConfig) -> VerificationReport:
    """Run every identity over the configured grid; deterministic given seed."""
    rng = random.Random(config.seed)
    cases: list[tuple[str | None, RecurrenceParams]] = [
        (name, preset_lookup(name)) for name in config.presets
    ]
    cases += [(None, p) for p in config.extra_params]
    cases += [(None, make_random_params(rng)) for _ in range(config.random_sets)]

    results = {name: CategoryResult() for name in CATEGORIES}
    for preset, params in cases:
        ctx = OctSequenceContext(params)
        _run_exact(preset, ctx, results, config)
        if preset is None:
            for name in NUMERIC_CATEGORIES:
                results[name].skip()
        else:
            _run_numeric(ctx, results, config)

    errata = [
        _sign_erratum_note(cases, config),
        _genfunc_erratum_note(),
    ]
    return VerificationReport(categories=results, errata=errata, seed=config.seed)


def _run_exact(
    preset: str | None,
    ctx: OctSequenceContext,
    results: dict[str, CategoryResult],
    config: SuiteConfig,
) -> None:
    params = ctx.params
    n_max = config.n_max

    res = results["recurrence"]
    for n in range(1, n_max + 1):
        lhs, rhs = ctx.recurrence_check(n)
        _exact_oct_pair(res, lhs, rhs)

    res = results["companion_identity"]
    for n in range(2, n_max + 1):
        lhs, rhs = companion_identity(params, n)
        _exact_scalar_pair(res, lhs, rhs)

    if params.delta == 0:
        results["scalar_sum"].skip()
        results["octonion_sum"].skip()
    else:
        res = results["scalar_sum"]
        for n in range(n_max + 1):
            _exact_scalar_pair(res, partial_sum_formula(params, n), prefix_sum(params, n))
        res = results["octonion_sum"]
        running = Octonion.zero(params.variant)
        for n in range(n_max + 1):
            running = running + ctx.oct_term(n)
            _exact_oct_pair(res, ctx.sum_octonions(n), running.as_rational())

    _run_genfunc_table(preset, ctx, results["genfunc_table"])

    res = results["genfunc_roundtrip"]
    count = min(n_max + 1, 50)
    for n, coeff in enumerate(gf_expand(build_gf(ctx), count)):
        _exact_oct_pair(res, coeff, ctx.oct_term(n))

    _run_sum_table(preset, ctx, results["sum_table"], config)

    res = results["shift_formula"]
    for m in range(3, config.m_max + 1):
        for n in range(min(n_max, 50) + 1):
            lhs, rhs = ctx.shift_formula(n, m)
            _exact_oct_pair(res, lhs, rhs)
        if preset is not None:
            pattern = REFERENCE_SHIFT_PATTERNS[preset](ctx.seq, m)
            ours = (
                ctx.useq(m - 1),
                params.s * ctx.useq(m - 2) + params.t * ctx.useq(m - 3),
                params.t * ctx.useq(m - 2),
            )
            for tabulated, computed in zip(pattern, ours):
                _exact_scalar_pair(res, tabulated, computed)


def _run_genfunc_table(preset: str | None, ctx: OctSequenceContext, res: CategoryResult) -> None:
    if preset is None:
        res.skip()
        return
    numerator = gf_numerator(ctx)
    for slot in range(8):
        computed = numerator.slot_coefficients(slot)
        tabulated = REFERENCE_GENFUNC_TABLE[preset][slot]
        misprint = GENFUNC_MISPRINTS.get((preset, slot))
        if misprint is not None:
            # the tabulated entry is a known misprint: the computation must
            # reproduce the corrected coefficients, not the printed ones
            res.record_exact(computed == misprint and computed != tabulated)
        else:
            res.record_exact(computed == tabulated)


def _run_sum_table(
    preset: str | None,
    ctx: OctSequenceContext,
    res: CategoryResult,
    config: SuiteConfig,
) -> None:
    if preset is None:
        res.skip()
        return
    constant = Octonion(tuple(Fraction(c) for c in config.sum_constant(preset)))
    _exact_oct_pair(res, sum_correction(ctx.params), -constant)
    form = REFERENCE_SUM_FORMS[preset]
    running = Octonion.zero(ctx.params.variant)
    for n in range(config.n_max + 1):
        running = running + ctx.oct_term(n)
        _exact_oct_pair(res, form(ctx, n, constant), running.as_rational())


def _run_numeric(
    ctx: OctSequenceContext,
    results: dict[str, CategoryResult],
    config: SuiteConfig,
) -> None:
    try:
        roots = ctx.roots
    except RegimeError:
        for name in NUMERIC_CATEGORIES:
            results[name].skip()
        return

    res = results["binet_scalar"]
    tol = config.tolerance("binet_scalar")
    for n in range(min(config.n_max, NUMERIC_WINDOWS["binet_scalar"]) + 1):
        for which, exact in (("v", ctx.seq(n)), ("u", ctx.useq(n))):
            approx = ctx.binet_term(n, which)
            diff = abs(approx - complex(float(exact)))
            res.record_numeric(diff, diff / max(1.0, abs(float(exact))), tol)

    res = results["binet_octonion"]
    tol = config.tolerance("binet_octonion")
    for n in range(min(config.n_max, NUMERIC_WINDOWS["binet_octonion"]) + 1):
        abs_r, rel_r = _oct_residuals(ctx.oct_binet(n), ctx.oct_term(n).as_complex())
        res.record_numeric(abs_r, rel_r, tol)

    res = results["norm_formula"]
    tol = config.tolerance("norm_formula")
    for n in range(min(config.n_max, NUMERIC_WINDOWS["norm_formula"]) + 1):
        exact = float(ctx.norm_sq(n))
        diff = abs(ctx.norm_formula_complex(n) - exact)
        res.record_numeric(diff, diff / max(1.0, exact), tol)

    res = results["quad_approx"]
    tol = config.tolerance("quad_approx")
    for n in range(min(config.n_max, NUMERIC_WINDOWS["quad_approx"]) + 1):
        for line in ("alpha", "omega1", "omega2"):
            lhs, rhs = ctx.quad_approx(n, line)
            max_abs = max(abs(a - b) for a, b in zip(lhs.components, rhs.components))
            res.record_numeric(max_abs, ctx.quad_residual(n, line), tol)


def _sign_erratum_note(
    cases: list[tuple[str | None, RecurrenceParams]],
    config: SuiteConfig,
) -> str:
    """Diagnostic of the misprinted (r-s-1)*v0 summation constant.

    Counts, over the configured parameter sets plus a fixed witness, how
    many delta != 0 sets the misprinted constant fails on; the corrected
    constant is separately verified by the scalar_sum category.
    """
    n_cap = min(config.n_max, 10)
    sets = [params for _, params in cases] + [_SIGN_WITNESS]
    total = 0
    bad = 0
    for params in sets:
        if params.delta == 0:
            continue
        total += 1
        for n in range(n_cap + 1):
            if partial_sum_formula_uncorrected(params, n) != prefix_sum(params, n):
                bad += 1
                break
    return (
        "summation-constant sign: the (r-s-1)*v0 variant fails on "
        f"{bad} of {total} delta!=0 parameter sets "
        "(witness r=1 s=1 t=1 v0=1 v1=0 v2=0, n=0); "
        "the verified (r+s-1)*v0 form is used throughout"
    )


def _genfunc_erratum_note() -> str:
    return (
        "generating-function table: third_order_jacobsthal slot e2 is "
        "tabulated as 1 + x + x^2 but computes to 1 + x + 2x^2; "
        "the computed coefficients are authoritative"
    )
