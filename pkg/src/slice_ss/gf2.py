"""Exact linear algebra over the two-element field with bit-packed rows.

Vectors keep all their bits in a single Python int (bit ``i`` is
coordinate ``i``), so a row operation is one word-granular XOR no matter
how long the row is.  Everything here is pure: inputs are never mutated
and equal inputs produce bit-identical outputs.  Canonical forms are
defined by reduced row echelon with pivots chosen in ascending column
order, which is what makes coset representatives deterministic across
runs and backends.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class DimensionError(ValueError):
    """Raised when vector lengths in an operation do not agree."""


def _low_bit(x: int) -> int:
    """Index of the lowest set bit of a nonzero int."""
    return (x & -x).bit_length() - 1


@dataclass(frozen=True)
class Gf2Vector:
    """A vector over GF(2); trailing padding bits beyond `length` are zero."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise DimensionError(f"negative length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise DimensionError("bits outside the declared length")

    @classmethod
    def from_bits(cls, coords: Iterable[int]) -> "Gf2Vector":
        """Build from an iterable of 0/1 coordinates, coordinate 0 first."""
        bits = 0
        n = 0
        for c in coords:
            if c & 1:
                bits |= 1 << n
            n += 1
        return cls(n, bits)

    @classmethod
    def from_string(cls, s: str) -> "Gf2Vector":
        """Parse a string like ``Gf2Vector.from_string("110")`` (coordinate 0 leftmost)."""
        return cls.from_bits(int(ch) for ch in s)

    def bit(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise DimensionError(f"coordinate {i} out of range for length {self.length}")
        return (self.bits >> i) & 1

    def __xor__(self, other: "Gf2Vector") -> "Gf2Vector":
        if self.length != other.length:
            raise DimensionError("length mismatch in vector sum")
        return Gf2Vector(self.length, self.bits ^ other.bits)

    def dot(self, other: "Gf2Vector") -> int:
        if self.length != other.length:
            raise DimensionError("length mismatch in dot product")
        return (self.bits & other.bits).bit_count() & 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> tuple[int, ...]:
        """Indices of the nonzero coordinates, ascending."""
        out = []
        x = self.bits
        while x:
            out.append(_low_bit(x))
            x &= x - 1
        return tuple(out)

    def __str__(self) -> str:
        return "".join(str((self.bits >> i) & 1) for i in range(self.length))


@dataclass(frozen=True)
class Gf2Matrix:
    """A matrix stored as bit-packed rows, all of length `cols`."""

    cols: int
    data: tuple[Gf2Vector, ...]

    def __post_init__(self) -> None:
        for row in self.data:
            if row.length != self.cols:
                raise DimensionError(
                    f"row of length {row.length} in a {self.cols}-column matrix"
                )

    @property
    def rows(self) -> int:
        return len(self.data)

    @classmethod
    def from_rows(cls, rows: Sequence[Gf2Vector]) -> "Gf2Matrix":
        if not rows:
            raise DimensionError("cannot infer column count from an empty row list")
        return cls(rows[0].length, tuple(rows))

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "Gf2Matrix":
        return cls.from_rows([Gf2Vector.from_string(s) for s in rows])

    @classmethod
    def identity(cls, n: int) -> "Gf2Matrix":
        return cls(n, tuple(Gf2Vector(n, 1 << i) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Gf2Matrix":
        return cls(cols, tuple(Gf2Vector(cols) for _ in range(rows)))

    def mat_vec(self, v: Gf2Vector) -> Gf2Vector:
        """Matrix-vector product; result length is the row count."""
        if v.length != self.cols:
            raise DimensionError("vector length does not match column count")
        bits = 0
        for i, row in enumerate(self.data):
            if (row.bits & v.bits).bit_count() & 1:
                bits |= 1 << i
        return Gf2Vector(self.rows, bits)

    def column(self, j: int) -> Gf2Vector:
        if not 0 <= j < self.cols:
            raise DimensionError(f"column {j} out of range")
        bits = 0
        for i, row in enumerate(self.data):
            bits |= ((row.bits >> j) & 1) << i
        return Gf2Vector(self.rows, bits)


def _rref(rows: Iterable[int]) -> list[int]:
    """Reduced row echelon form of bit-packed rows, pivots ascending.

    The result is the canonical basis of the row span: each row's pivot is
    its lowest set bit, pivots are distinct, and no row has a bit at
    another row's pivot.
    """
    basis: dict[int, int] = {}
    for row in rows:
        while row:
            p = _low_bit(row)
            if p in basis:
                row ^= basis[p]
            else:
                for q in list(basis):
                    if (basis[q] >> p) & 1:
                        basis[q] ^= row
                basis[p] = row
                break
    return [basis[p] for p in sorted(basis)]


def rank(m: Gf2Matrix) -> int:
    """GF(2) rank; the input is not modified."""
    return len(_rref(row.bits for row in m.data))


def kernel_basis(m: Gf2Matrix) -> list[Gf2Vector]:
    """Canonical basis of the right kernel {v : m v = 0}.

    One basis vector per free column, in ascending column order; size is
    cols - rank(m).
    """
    ech = _rref(row.bits for row in m.data)
    pivots = [_low_bit(r) for r in ech]
    pivot_set = set(pivots)
    out = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        bits = 1 << f
        for p, row in zip(pivots, ech):
            if (row >> f) & 1:
                bits |= 1 << p
        out.append(Gf2Vector(m.cols, bits))
    return out


def image_basis(m: Gf2Matrix) -> list[Gf2Vector]:
    """Canonical basis of the column span of m (vectors of length m.rows)."""
    cols = []
    for j in range(m.cols):
        bits = 0
        for i, row in enumerate(m.data):
            bits |= ((row.bits >> j) & 1) << i
        cols.append(bits)
    return [Gf2Vector(m.rows, r) for r in _rref(cols)]


def coset_reduce(v: Gf2Vector, subspace_basis: Sequence[Gf2Vector]) -> Gf2Vector:
    """Canonical representative of v modulo the span of `subspace_basis`.

    Two vectors in the same coset reduce to bit-identical outputs, and a
    vector inside the span reduces to zero.  The basis is echelonized
    first, so it need not be in reduced form on entry.
    """
    for b in subspace_basis:
        if b.length != v.length:
            raise DimensionError("basis vector length does not match the input")
    ech = _rref(b.bits for b in subspace_basis)
    bits = v.bits
    for row in ech:
        if (bits >> _low_bit(row)) & 1:
            bits ^= row
    return Gf2Vector(v.length, bits)


def solve(m: Gf2Matrix, b: Gf2Vector) -> Gf2Vector | None:
    """One solution x of m x = b, or None when b is outside the column span."""
    if b.length != m.rows:
        raise DimensionError("right-hand side length does not match row count")
    # Echelonize columns while carrying the combination that produced them.
    ech: dict[int, tuple[int, int]] = {}
    for j in range(m.cols):
        vec = m.column(j).bits
        car = 1 << j
        while vec:
            p = _low_bit(vec)
            if p in ech:
                ev, ec = ech[p]
                vec ^= ev
                car ^= ec
            else:
                ech[p] = (vec, car)
                break
    res = b.bits
    car = 0
    while res:
        p = _low_bit(res)
        if p not in ech:
            return None
        ev, ec = ech[p]
        res ^= ev
        car ^= ec
    return Gf2Vector(m.cols, car)
