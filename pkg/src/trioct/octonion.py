"""Octonion algebra over a pluggable scalar variant.

Elements live on the ordered basis (e0, e1, ..., e7) with e0 the identity
and every other basis unit squaring to -1.  Basis products are stored as a
literal signed lookup table so all 64 cases can be audited entry by entry;
the table is validated against its structural invariants at import time.

All values are immutable after construction and every operation is a pure
function, so octonions are safe to share freely between threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .scalars import (
    COMPLEX,
    FIELD_VARIANTS,
    INT,
    RATIONAL,
    Scalar,
    VariantError,
    as_complex,
    as_rational,
    format_scalar,
    one,
    variant_of,
    zero,
)

# e_i * e_j = sign * e_k, written as (sign, k); row i, column j.
_BASIS_PRODUCTS = (
    ((1, 0), (1, 1), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7)),
    ((1, 1), (-1, 0), (1, 3), (-1, 2), (1, 5), (-1, 4), (-1, 7), (1, 6)),
    ((1, 2), (-1, 3), (-1, 0), (1, 1), (1, 6), (1, 7), (-1, 4), (-1, 5)),
    ((1, 3), (1, 2), (-1, 1), (-1, 0), (1, 7), (-1, 6), (1, 5), (-1, 4)),
    ((1, 4), (-1, 5), (-1, 6), (-1, 7), (-1, 0), (1, 1), (1, 2), (1, 3)),
    ((1, 5), (1, 4), (-1, 7), (1, 6), (-1, 1), (-1, 0), (-1, 3), (1, 2)),
    ((1, 6), (1, 7), (1, 4), (-1, 5), (-1, 2), (1, 3), (-1, 0), (-1, 1)),
    ((1, 7), (-1, 6), (1, 5), (1, 4), (-1, 3), (-1, 2), (1, 1), (-1, 0)),
)


@dataclass(frozen=True)
class MultiplicationTable:
    """Signed basis-product lookup: ``e_i * e_j = sign[i][j] * e_index[i][j]``."""

    sign: tuple[tuple[int, ...], ...]
    index: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        """Check the structural invariants of a basis table.

        Identity row and column, imaginary units squaring to -1,
        anti-commutativity off the diagonal, and each row being a signed
        permutation of the basis.
        """
        for j in range(8):
            if self.sign[0][j] != 1 or self.index[0][j] != j:
                raise ValueError(f"row 0 must be the identity, broken at column {j}")
            if self.sign[j][0] != 1 or self.index[j][0] != j:
                raise ValueError(f"column 0 must be the identity, broken at row {j}")
        for i in range(1, 8):
            if self.sign[i][i] != -1 or self.index[i][i] != 0:
                raise ValueError(f"e{i}^2 must be -e0")
            if set(self.index[i]) != set(range(8)):
                raise ValueError(f"row {i} is not a signed permutation of the basis")
        for i in range(1, 8):
            for j in range(1, 8):
                if self.sign[i][j] not in (-1, 1) or not 0 <= self.index[i][j] <= 7:
                    raise ValueError(f"malformed entry at ({i}, {j})")
                if i != j:
                    if self.index[i][j] != self.index[j][i]:
                        raise ValueError(f"index symmetry broken at ({i}, {j})")
                    if self.sign[i][j] != -self.sign[j][i]:
                        raise ValueError(f"anti-commutativity broken at ({i}, {j})")


MULTIPLICATION_TABLE = MultiplicationTable(
    sign=tuple(tuple(s for s, _ in row) for row in _BASIS_PRODUCTS),
    index=tuple(tuple(k for _, k in row) for row in _BASIS_PRODUCTS),
)
MULTIPLICATION_TABLE.validate()

_SIGN = MULTIPLICATION_TABLE.sign
_INDEX = MULTIPLICATION_TABLE.index


def basis_product(i: int, j: int) -> tuple[int, int]:
    """Return ``(sign, index)`` with ``e_i * e_j = sign * e_index``."""
    return _SIGN[i][j], _INDEX[i][j]


class Octonion:
    """An octonion with eight components sharing one scalar variant."""

    __slots__ = ("components", "variant")

    components: tuple[Scalar, ...]
    variant: str

    def __init__(self, components: Iterable[Scalar]):
        comps = tuple(components)
        if len(comps) != 8:
            raise ValueError(f"an octonion needs exactly 8 components, got {len(comps)}")
        kind = variant_of(comps[0])
        for c in comps[1:]:
            if variant_of(c) != kind:
                raise VariantError(
                    f"components mix scalar variants ({kind} with {variant_of(c)})"
                )
        object.__setattr__(self, "components", comps)
        object.__setattr__(self, "variant", kind)

    @classmethod
    def _raw(cls, comps: tuple[Scalar, ...], kind: str) -> "Octonion":
        # internal fast path: comps already validated by construction
        o = object.__new__(cls)
        object.__setattr__(o, "components", comps)
        object.__setattr__(o, "variant", kind)
        return o

    @classmethod
    def zero(cls, variant: str = INT) -> "Octonion":
        return cls._raw((zero(variant),) * 8, variant)

    @classmethod
    def basis(cls, index: int, variant: str = INT) -> "Octonion":
        if not 0 <= index <= 7:
            raise ValueError("basis index must be in 0..7")
        z, u = zero(variant), one(variant)
        return cls._raw(tuple(u if k == index else z for k in range(8)), variant)

    @classmethod
    def from_scalar(cls, value: Scalar) -> "Octonion":
        """Embed a scalar as ``value * e0``."""
        kind = variant_of(value)
        z = zero(kind)
        return cls._raw((value,) + (z,) * 7, kind)

    # -- plumbing ---------------------------------------------------------

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Octonion values are immutable")

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.components)

    def __getitem__(self, index: int) -> Scalar:
        return self.components[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.variant == other.variant and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.variant, self.components))

    def __repr__(self) -> str:
        return f"Octonion({list(self.components)!r})"

    def __bool__(self) -> bool:
        return any(self.components)

    @property
    def real(self) -> Scalar:
        return self.components[0]

    def _require_same(self, other: "Octonion") -> None:
        if self.variant != other.variant:
            raise VariantError(
                f"cannot combine {self.variant} and {other.variant} octonions; "
                "convert explicitly"
            )

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: "Octonion") -> "Octonion":
        if not isinstance(other, Octonion):
            return NotImplemented
        self._require_same(other)
        return Octonion._raw(
            tuple(a + b for a, b in zip(self.components, other.components)),
            self.variant,
        )

    def __sub__(self, other: "Octonion") -> "Octonion":
        if not isinstance(other, Octonion):
            return NotImplemented
        self._require_same(other)
        return Octonion._raw(
            tuple(a - b for a, b in zip(self.components, other.components)),
            self.variant,
        )

    def __neg__(self) -> "Octonion":
        return Octonion._raw(tuple(-a for a in self.components), self.variant)

    def __mul__(self, other: "Octonion | Scalar") -> "Octonion":
        if isinstance(other, Octonion):
            self._require_same(other)
            return self._table_product(other)
        return self.scalar_mul(other)

    def __rmul__(self, other: Scalar) -> "Octonion":
        return self.scalar_mul(other)

    def scalar_mul(self, value: Scalar) -> "Octonion":
        """Central scalar multiple; the scalar must match the variant."""
        if variant_of(value) != self.variant:
            raise VariantError(
                f"scalar variant {variant_of(value)} does not match octonion "
                f"variant {self.variant}"
            )
        return Octonion._raw(tuple(value * a for a in self.components), self.variant)

    def _table_product(self, other: "Octonion") -> "Octonion":
        a, b = self.components, other.components
        acc = [zero(self.variant)] * 8
        for i in range(8):
            ai = a[i]
            if not ai:
                continue
            sign_row, index_row = _SIGN[i], _INDEX[i]
            for j in range(8):
                bj = b[j]
                if not bj:
                    continue
                term = ai * bj
                k = index_row[j]
                acc[k] = acc[k] + term if sign_row[j] > 0 else acc[k] - term
        return Octonion._raw(tuple(acc), self.variant)

    def conjugate(self) -> "Octonion":
        """Keep the real part, negate the seven imaginary components."""
        c = self.components
        return Octonion._raw((c[0],) + tuple(-a for a in c[1:]), self.variant)

    def norm_sq(self) -> Scalar:
        """Sum of squared components; equals the real part of conj(p)*p.

        Defined for real coefficients only: a complex-variant octonion must
        have exactly zero imaginary parts.
        """
        if self.variant == COMPLEX:
            if any(c.imag != 0.0 for c in self.components):
                raise ValueError(
                    "norm_sq needs real coefficients; some imaginary parts are nonzero"
                )
        return sum(c * c for c in self.components)

    def norm(self) -> float:
        """Euclidean norm as a double; complex variant with real entries only."""
        if self.variant != COMPLEX:
            raise VariantError(
                "norm() is only provided for the complex variant; exact variants "
                "stay radical-free, use norm_sq()"
            )
        return math.sqrt(self.norm_sq().real)

    def inverse(self) -> "Octonion":
        """Multiplicative inverse conj(p)/norm_sq(p); field variants only."""
        if self.variant not in FIELD_VARIANTS:
            raise VariantError(
                f"inverse needs a field scalar variant, not {self.variant}; "
                "convert with as_rational()"
            )
        ns = self.norm_sq()
        if not ns:
            raise ZeroDivisionError("the zero octonion has no inverse")
        return self.conjugate().scalar_mul(1 / ns)

    # -- conversions ------------------------------------------------------

    def as_rational(self) -> "Octonion":
        if self.variant == RATIONAL:
            return self
        return Octonion._raw(tuple(as_rational(c) for c in self.components), RATIONAL)

    def as_complex(self) -> "Octonion":
        if self.variant == COMPLEX:
            return self
        return Octonion._raw(tuple(as_complex(c) for c in self.components), COMPLEX)

    def serialize(self) -> tuple[str, ...]:
        """Component strings in e0..e7 order (see `format_scalar`)."""
        return tuple(format_scalar(c) for c in self.components)
