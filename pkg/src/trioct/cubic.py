"""Numeric root machinery for the characteristic cubic x^3 - r*x^2 - s*x - t.

Only the positive-discriminant regime is supported: one real root and a
conjugate complex pair.  The sign of the discriminant is always decided in
exact rational arithmetic so a borderline value can never flip the branch;
the floating-point discriminant is carried as a value only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .scalars import RegimeError
from .sequences import RecurrenceParams

# relative |vandermonde| floor below which the roots count as repeated
_SEPARATION_FACTOR = 1e-9


@dataclass(frozen=True)
class CubicRoots:
    """Roots of the characteristic cubic plus the derived closed-form data.

    alpha is the real root; omega1, omega2 the conjugate pair with omega1
    carrying the nonnegative imaginary part (a convention, either choice
    works).  The weights are the initial-value-dependent coefficients that
    attach to each root power in the closed forms; vandermonde is
    (alpha-omega1)*(alpha-omega2)*(omega1-omega2), the factor the norm
    formula divides by.
    """

    alpha: float
    omega1: complex
    omega2: complex
    discriminant: float
    vandermonde: complex
    weight_alpha: complex
    weight_omega1: complex
    weight_omega2: complex


def discriminant_exact(params: RecurrenceParams) -> Fraction:
    """The regime discriminant as an exact rational (used for sign tests)."""
    r, s, t = Fraction(params.r), Fraction(params.s), Fraction(params.t)
    return (
        r**3 * t / 27
        - r**2 * s**2 / 108
        + r * s * t / 6
        - s**3 / 27
        + t**2 / 4
    )


def discriminant(params: RecurrenceParams) -> float:
    """The regime discriminant evaluated in double precision."""
    return float(discriminant_exact(params))


def _real_cbrt(x: float) -> float:
    # sign-preserving real cube root; the radicands are real when disc > 0
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def cubic_roots(params: RecurrenceParams) -> CubicRoots:
    """Solve the characteristic cubic in the one-real-two-complex regime.

    Raises RegimeError when the exact discriminant is <= 0 or when the
    computed roots are too close to repeated for the closed forms to be
    well conditioned.
    """
    disc = discriminant_exact(params)
    if disc <= 0:
        raise RegimeError(
            f"discriminant {disc} <= 0: need one real and two conjugate "
            "complex roots"
        )
    r = float(params.r)
    s = float(params.s)
    t = float(params.t)
    base = r**3 / 27 + r * s / 6 + t / 2
    sq = math.sqrt(float(disc))
    big = _real_cbrt(base + sq)
    small = _real_cbrt(base - sq)
    alpha = r / 3 + big + small
    re = r / 3 - (big + small) / 2
    im = math.sqrt(3.0) / 2 * (big - small)  # big >= small, so im >= 0
    omega1 = complex(re, im)
    omega2 = complex(re, -im)

    a = complex(alpha)
    vandermonde = (a - omega1) * (a - omega2) * (omega1 - omega2)
    scale = (1.0 + max(abs(r), abs(s), abs(t))) ** 3
    if abs(vandermonde) < _SEPARATION_FACTOR * scale:
        raise RegimeError("roots are numerically repeated; closed forms rejected")

    v0 = complex(float(params.v0))
    v1 = complex(float(params.v1))
    v2 = complex(float(params.v2))
    weight_alpha = v2 - (omega1 + omega2) * v1 + (omega1 * omega2) * v0
    weight_omega1 = v2 - (a + omega2) * v1 + (a * omega2) * v0
    weight_omega2 = v2 - (a + omega1) * v1 + (a * omega1) * v0

    return CubicRoots(
        alpha=alpha,
        omega1=omega1,
        omega2=omega2,
        discriminant=float(disc),
        vandermonde=vandermonde,
        weight_alpha=weight_alpha,
        weight_omega1=weight_omega1,
        weight_omega2=weight_omega2,
    )


def binet_scalar(roots: CubicRoots, n: int, which: str = "v") -> complex:
    """Closed-form n-th term from root powers.

    which="v" uses the family weights stored in `roots`; which="u" is the
    companion family (weights reduce to pure root powers).  The result is
    complex with a tiny imaginary residue; the real part approximates the
    exact integer/rational term.
    """
    if n < 0:
        raise ValueError("sequence index must be nonnegative")
    a = complex(roots.alpha)
    w1, w2 = roots.omega1, roots.omega2
    den_a = (a - w1) * (a - w2)
    den_1 = (a - w1) * (w1 - w2)
    den_2 = (a - w2) * (w1 - w2)
    if which == "v":
        return (
            roots.weight_alpha * a**n / den_a
            - roots.weight_omega1 * w1**n / den_1
            + roots.weight_omega2 * w2**n / den_2
        )
    if which == "u":
        return a ** (n + 1) / den_a - w1 ** (n + 1) / den_1 + w2 ** (n + 1) / den_2
    raise ValueError(f"which must be 'v' or 'u', got {which!r}")


def newton_refine_real_root(params: RecurrenceParams, start: float, sweeps: int = 60) -> float:
    """Independent polishing of a real root of x^3 - r*x^2 - s*x - t.

    Plain Newton iteration from `start`; used as an oracle against the
    closed-form construction, not by it.
    """
    r = float(params.r)
    s = float(params.s)
    t = float(params.t)
    x = start
    for _ in range(sweeps):
        f = ((x - r) * x - s) * x - t
        df = (3 * x - 2 * r) * x - s
        if df == 0:
            break
        step = f / df
        x -= step
        if abs(step) <= 1e-16 * max(1.0, abs(x)):
            break
    return x
