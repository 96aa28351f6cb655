"""Octonion lifts of third-order recurrence sequences and their identities.

The lift of a family at index n is the octonion whose components are the
eight consecutive exact terms (term(n), ..., term(n+7)).  Identities that
hold term by term (recurrence, prefix sums, index shifts) are computed in
exact arithmetic; only the root-based closed forms (Binet, norm, quadratic
approximation) use floating point.

An OctSequenceContext is built once and then read-only, so identity checks
for different n may run concurrently over a shared context.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cubic import CubicRoots, binet_scalar, cubic_roots
from .octonion import Octonion
from .scalars import RegimeError, Scalar, as_complex, one, zero
from .sequences import RecurrenceParams, seq_term


def power_octonion(x: complex) -> Octonion:
    """The complex octonion with component l equal to x**l (l = 0..7)."""
    x = complex(x)
    return Octonion(tuple(x**l for l in range(8)))


def sum_correction(params: RecurrenceParams) -> Octonion:
    """The constant octonion closing the prefix-sum formula, exact rational.

    Component l is lam - delta*(term(0)+...+term(l-1)) with
    lam = (r+s-1)*v0 + (r-1)*v1 - v2 (empty sum at l = 0).
    """
    lam = Fraction((params.r + params.s - 1) * params.v0 + (params.r - 1) * params.v1 - params.v2)
    d = Fraction(params.delta)
    comps = []
    running = Fraction(0)
    for l in range(8):
        comps.append(lam - d * running)
        running += Fraction(seq_term(params, l))
    return Octonion(tuple(comps))


class OctSequenceContext:
    """Exact term cache plus (lazily) the cubic-root data for one family."""

    def __init__(self, params: RecurrenceParams):
        self.params = params
        kind = params.variant
        self._v: list[Scalar] = [params.v0, params.v1, params.v2]
        self._u: list[Scalar] = [zero(kind), one(kind), params.r]
        self._roots: CubicRoots | None = None

    @property
    def roots(self) -> CubicRoots:
        """Cubic-root data for the family; RegimeError outside disc > 0."""
        if self._roots is None:
            self._roots = cubic_roots(self.params)
        return self._roots

    def _extend(self, cache: list[Scalar], n: int) -> Scalar:
        if n < 0:
            raise ValueError("sequence index must be nonnegative")
        r, s, t = self.params.r, self.params.s, self.params.t
        while len(cache) <= n:
            cache.append(r * cache[-1] + s * cache[-2] + t * cache[-3])
        return cache[n]

    def seq(self, n: int) -> Scalar:
        """Exact n-th term of the family (cached)."""
        return self._extend(self._v, n)

    def useq(self, n: int) -> Scalar:
        """Exact n-th companion term, seeds (0, 1, r) (cached)."""
        return self._extend(self._u, n)

    # -- the lift and its exact identities ---------------------------------

    def oct_term(self, n: int) -> Octonion:
        """Octonion with components (term(n), ..., term(n+7)), exact."""
        self._extend(self._v, n + 7)
        return Octonion(tuple(self._v[n : n + 8]))

    def norm_sq(self, n: int) -> Scalar:
        """Exact squared norm of the lift: sum of the eight squared terms."""
        return self.oct_term(n).norm_sq()

    def norm(self, n: int) -> float:
        """Euclidean norm of the lift as a double."""
        return math.sqrt(float(self.norm_sq(n)))

    def recurrence_check(self, n: int) -> tuple[Octonion, Octonion]:
        """(r*O(n+1) + s*O(n) + t*O(n-1), O(n+2)) for n >= 1; equal exactly."""
        if n < 1:
            raise ValueError("the lifted recurrence is stated for n >= 1")
        p = self.params
        lhs = (
            self.oct_term(n + 1) * p.r
            + self.oct_term(n) * p.s
            + self.oct_term(n - 1) * p.t
        )
        return lhs, self.oct_term(n + 2)

    def oct_prefix_sum(self, n: int) -> Octonion:
        """Direct summation oracle O(0) + ... + O(n), exact rational."""
        total = Octonion.zero(self.params.variant)
        for k in range(n + 1):
            total = total + self.oct_term(k)
        return total.as_rational()

    def sum_octonions(self, n: int) -> Octonion:
        """Closed form for O(0) + ... + O(n), exact rational.

        (O(n+2) + (1-r)*O(n+1) + t*O(n) + sum_correction) / delta; undefined
        when delta == 0.
        """
        d = self.params.delta
        if not d:
            raise RegimeError(
                "r + s + t - 1 is zero: the octonion prefix-sum formula is "
                "undefined; use oct_prefix_sum instead"
            )
        r = Fraction(self.params.r)
        t = Fraction(self.params.t)
        total = (
            self.oct_term(n + 2).as_rational()
            + self.oct_term(n + 1).as_rational() * (1 - r)
            + self.oct_term(n).as_rational() * t
            + sum_correction(self.params)
        )
        return total * (1 / Fraction(d))

    def shift_formula(self, n: int, m: int) -> tuple[Octonion, Octonion]:
        """Index-shift convolution: O(n+m) from O(n), O(n+1), O(n+2).

        rhs = U(m-1)*O(n+2) + (s*U(m-2) + t*U(m-3))*O(n+1) + t*U(m-2)*O(n)
        with U the companion family; needs m >= 3 (U at negative indices is
        undefined).  Returns (lhs, rhs), equal exactly.
        """
        if m < 3:
            raise RegimeError("the shift convolution is stated for m >= 3")
        if n < 0:
            raise ValueError("sequence index must be nonnegative")
        p = self.params
        u1, u2, u3 = self.useq(m - 1), self.useq(m - 2), self.useq(m - 3)
        lhs = self.oct_term(n + m)
        rhs = (
            self.oct_term(n + 2) * u1
            + self.oct_term(n + 1) * (p.s * u2 + p.t * u3)
            + self.oct_term(n) * (p.t * u2)
        )
        return lhs, rhs

    # -- root-based closed forms (floating point) ---------------------------

    def oct_binet(self, n: int) -> Octonion:
        """Closed form of the lift from root powers, complex variant.

        Componentwise it approximates oct_term(n); scalars commute with the
        basis, so each root contributes weight * power_octonion(root) *
        root**n over the usual root-difference denominators.
        """
        ro = self.roots
        a = complex(ro.alpha)
        w1, w2 = ro.omega1, ro.omega2
        den_a = (a - w1) * (a - w2)
        den_1 = (a - w1) * (w1 - w2)
        den_2 = (a - w2) * (w1 - w2)
        return (
            power_octonion(a) * (ro.weight_alpha * a**n / den_a)
            - power_octonion(w1) * (ro.weight_omega1 * w1**n / den_1)
            + power_octonion(w2) * (ro.weight_omega2 * w2**n / den_2)
        )

    def binet_term(self, n: int, which: str = "v") -> complex:
        """Scalar closed form (see cubic.binet_scalar) for this context."""
        return binet_scalar(self.roots, n, which)

    def norm_formula_complex(self, n: int) -> complex:
        """Closed form of norm_sq(n) before dropping the imaginary residue.

        Exposed so callers can inspect how much imaginary part the floating
        evaluation leaked; norm_formula() returns the real part.
        """
        ro = self.roots
        a = complex(ro.alpha)
        w1, w2 = ro.omega1, ro.omega2
        wa, wq, wr = ro.weight_alpha, ro.weight_omega1, ro.weight_omega2
        d12 = w1 - w2
        da1 = a - w1
        da2 = a - w2

        def even_powers(x: complex) -> complex:
            return sum(x ** (2 * l) for l in range(8))

        def geometric8(x: complex) -> complex:
            return sum(x**l for l in range(8))

        main = (
            d12**2 * wa**2 * even_powers(a) * a ** (2 * n)
            + da2**2 * wq**2 * even_powers(w1) * w1 ** (2 * n)
            + da1**2 * wr**2 * even_powers(w2) * w2 ** (2 * n)
        )
        # cross terms carry the signs of the squared three-term expansion:
        # the alpha/omega2 pair enters positively, so it is subtracted inside
        # the bracket below (the whole bracket is then subtracted twice)
        cross = (
            d12 * da2 * wa * wq * geometric8(a * w1) * (a * w1) ** n
            - d12 * da1 * wa * wr * geometric8(a * w2) * (a * w2) ** n
            + da1 * da2 * wq * wr * geometric8(w1 * w2) * (w1 * w2) ** n
        )
        return (main - 2 * cross) / ro.vandermonde**2

    def norm_formula(self, n: int) -> float:
        """Closed form of the squared norm as a double."""
        return self.norm_formula_complex(n).real

    def _quad_parts(self, n: int, which_root: str) -> tuple[Octonion, tuple[Octonion, Octonion, Octonion]]:
        ro = self.roots
        lines = {
            "alpha": (ro.weight_alpha, complex(ro.alpha)),
            "omega1": (ro.weight_omega1, ro.omega1),
            "omega2": (ro.weight_omega2, ro.omega2),
        }
        try:
            weight, x = lines[which_root]
        except KeyError:
            raise ValueError(
                f"which_root must be one of {tuple(lines)}, got {which_root!r}"
            ) from None
        s = as_complex(self.params.s)
        t = as_complex(self.params.t)
        lhs = power_octonion(x) * (weight * x ** (n + 2))
        o_n = self.oct_term(n).as_complex()
        o_n1 = self.oct_term(n + 1).as_complex()
        o_n2 = self.oct_term(n + 2).as_complex()
        return lhs, (o_n2 * (x * x), (o_n1 * s + o_n * t) * x, o_n1 * t)

    def quad_approx(self, n: int, which_root: str) -> tuple[Octonion, Octonion]:
        """Quadratic three-term approximation attached to one root.

        lhs = weight * power_octonion(x) * x**(n+2); rhs = x^2*O(n+2) +
        x*(s*O(n+1) + t*O(n)) + t*O(n+1) with the exact terms promoted to
        complex.  Returns (lhs, rhs); they agree to rounding error.
        """
        lhs, (t1, t2, t3) = self._quad_parts(n, which_root)
        return lhs, t1 + t2 + t3

    def quad_residual(self, n: int, which_root: str) -> float:
        """Worst componentwise residual of the quadratic identity.

        For the conjugate-root lines both sides combine addends comparable
        to the dominant root's n-th power that cancel down to nearly
        nothing, so each component's residual is normalized by the largest
        addend entering it, the natural scale for a cancellation check.
        With exactly represented roots the residual would be zero.
        """
        lhs, (t1, t2, t3) = self._quad_parts(n, which_root)
        worst = 0.0
        for a, b1, b2, b3 in zip(lhs.components, t1.components, t2.components, t3.components):
            scale = max(1.0, abs(a), abs(b1), abs(b2), abs(b3))
            worst = max(worst, abs(a - (b1 + b2 + b3)) / scale)
        return worst
