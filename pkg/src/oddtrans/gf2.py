"""Exact linear algebra over GF(2) on dense bit-packed matrices.

Rows are stored as arbitrary-precision Python integers acting as bit sets
(bit ``j`` is column ``j``), so a row operation is a single word-level XOR
regardless of width.  All operations are pure functions on immutable
values; nothing here mutates its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class BitVector:
    """A GF(2) vector of length ``size`` packed into a single integer.

    Bits beyond ``size`` must be zero (enforced at construction).
    """

    size: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError("vector length must be nonnegative")
        if self.bits < 0 or self.bits >> self.size:
            raise ValueError("bits set beyond the vector length")

    @classmethod
    def ones(cls, size: int) -> BitVector:
        return cls(size, (1 << size) - 1 if size else 0)

    @classmethod
    def from_support(cls, support: Iterable[int], size: int) -> BitVector:
        bits = 0
        for i in support:
            if not 0 <= i < size:
                raise ValueError(f"index {i} out of range for length {size}")
            bits |= 1 << i
        return cls(size, bits)

    def get(self, i: int) -> int:
        if not 0 <= i < self.size:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if (self.bits >> i) & 1)

    def weight(self) -> int:
        return self.bits.bit_count()


@dataclass(frozen=True)
class BitMatrix:
    """A dense GF(2) matrix; ``data[i]`` packs row ``i``, bit ``j`` is column ``j``."""

    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} packed rows, got {len(self.data)}")
        for i, row in enumerate(self.data):
            if row < 0 or row >> self.cols:
                raise ValueError(f"row {i} has bits set beyond column {self.cols - 1}")

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]], cols: int | None = None) -> BitMatrix:
        """Build from explicit 0/1 entries, one inner sequence per row."""
        if cols is None:
            cols = len(bits[0]) if bits else 0
        packed = []
        for entries in bits:
            if len(entries) != cols:
                raise ValueError("ragged rows")
            row = 0
            for j, bit in enumerate(entries):
                if bit not in (0, 1):
                    raise ValueError(f"entry {bit!r} is not a bit")
                row |= bit << j
            packed.append(row)
        return cls(len(packed), cols, tuple(packed))

    @classmethod
    def from_packed(cls, packed: Iterable[int], cols: int) -> BitMatrix:
        data = tuple(packed)
        return cls(len(data), cols, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> BitMatrix:
        return cls(rows, cols, (0,) * rows)

    def get(self, r: int, c: int) -> int:
        if not (0 <= r < self.rows and 0 <= c < self.cols):
            raise IndexError((r, c))
        return (self.data[r] >> c) & 1

    def row(self, r: int) -> BitVector:
        return BitVector(self.cols, self.data[r])

    def to_bits(self) -> list[list[int]]:
        return [[(row >> j) & 1 for j in range(self.cols)] for row in self.data]


def _rref(rows: Iterable[int]) -> dict[int, int]:
    """Reduced row echelon form of packed rows, as ``{pivot bit: row}``.

    Pivoting is on the first (lowest) set bit of each reduced row.  The
    returned rows satisfy the invariant that every pivot bit occurs in
    exactly one of them, so a particular solution can be read off directly
    with all free variables at zero.
    """
    pivots: dict[int, int] = {}
    for row in rows:
        cur = row
        for bit, pivot_row in pivots.items():
            if cur & bit:
                cur ^= pivot_row
        if cur:
            low = cur & -cur
            for bit in pivots:
                if pivots[bit] & low:
                    pivots[bit] ^= cur
            pivots[low] = cur
    return pivots


def rank(m: BitMatrix) -> int:
    """GF(2) row rank, computed by elimination on a working copy."""
    return len(_rref(m.data))


def matvec(m: BitMatrix, x: BitVector) -> BitVector:
    """Matrix-vector product over GF(2)."""
    if x.size != m.cols:
        raise ValueError(f"vector length {x.size} != column count {m.cols}")
    out = 0
    for i, row in enumerate(m.data):
        out |= ((row & x.bits).bit_count() & 1) << i
    return BitVector(m.rows, out)


def solve(m: BitMatrix, b: BitVector) -> BitVector | None:
    """One solution of ``m @ x = b`` over GF(2), or None when inconsistent.

    Free variables are set to zero, which makes the returned solution
    deterministic.  The solution is re-checked by multiplication before it
    is returned.
    """
    if b.size != m.rows:
        raise ValueError(f"right-hand side length {b.size} != row count {m.rows}")
    aug_bit = 1 << m.cols
    pivots = _rref(
        row | (aug_bit if (b.bits >> i) & 1 else 0) for i, row in enumerate(m.data)
    )
    if aug_bit in pivots:
        return None
    bits = 0
    for low, row in pivots.items():
        if row & aug_bit:
            bits |= low
    x = BitVector(m.cols, bits)
    if matvec(m, x) != b:  # pragma: no cover - elimination guarantees this
        raise AssertionError("solver produced a non-solution")
    return x


def solution_count(m: BitMatrix, b: BitVector) -> int:
    """Exact number of solutions of ``m @ x = b`` over GF(2).

    This is ``2 ** (cols - rank)`` when the system is consistent and zero
    otherwise; the result is an exact arbitrary-precision integer.
    """
    if b.size != m.rows:
        raise ValueError(f"right-hand side length {b.size} != row count {m.rows}")
    if solve(m, b) is None:
        return 0
    return 1 << (m.cols - rank(m))


def nullspace_dim(m: BitMatrix) -> int:
    """Dimension of the solution space of ``m @ x = 0`` (cols minus rank)."""
    return m.cols - rank(m)


def nullspace_basis(m: BitMatrix) -> list[BitVector]:
    """A basis of the right nullspace of ``m`` over GF(2).

    One basis vector per free column: the free variable is set, and each
    pivot variable carries the matching coefficient of its reduced row.
    """
    pivots = _rref(m.data)
    pivot_bits = set(pivots)
    basis: list[BitVector] = []
    for j in range(m.cols):
        free = 1 << j
        if free in pivot_bits:
            continue
        bits = free
        for low, row in pivots.items():
            if row & free:
                bits |= low
        vec = BitVector(m.cols, bits)
        if matvec(m, vec).bits:  # pragma: no cover - elimination guarantees this
            raise AssertionError("nullspace vector fails m @ v = 0")
        basis.append(vec)
    return basis


def transpose(m: BitMatrix) -> BitMatrix:
    out = [0] * m.cols
    for i, row in enumerate(m.data):
        while row:
            low = row & -row
            out[low.bit_length() - 1] |= 1 << i
            row ^= low
    return BitMatrix(m.cols, m.rows, tuple(out))
