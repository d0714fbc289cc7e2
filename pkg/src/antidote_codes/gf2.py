"""Dense GF(2) vectors and matrices backed by Python int bitsets.

Coordinate ``i`` (1-based) of a vector lives in bit ``i - 1`` of its int.
A matrix stores one int per row, so entry ``(i, j)`` is bit ``j - 1`` of
row ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple


class DimensionError(ValueError):
    """Operands have incompatible lengths or shapes."""


def bits_from_indices(indices: Iterable[int]) -> int:
    out = 0
    for i in indices:
        out |= 1 << (i - 1)
    return out


def indices_from_bits(bits: int) -> Tuple[int, ...]:
    out = []
    pos = 1
    while bits:
        if bits & 1:
            out.append(pos)
        bits >>= 1
        pos += 1
    return tuple(out)


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 1:
            raise DimensionError(f"vector length must be >= 1, got {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits exceed vector length")

    @classmethod
    def zeros(cls, length: int) -> "BitVector":
        return cls(length, 0)

    @classmethod
    def unit(cls, length: int, k: int) -> "BitVector":
        if not 1 <= k <= length:
            raise IndexError(f"coordinate {k} outside 1..{length}")
        return cls(length, 1 << (k - 1))

    @classmethod
    def from_indices(cls, length: int, indices: Iterable[int]) -> "BitVector":
        indices = list(indices)
        for i in indices:
            if not 1 <= i <= length:
                raise IndexError(f"coordinate {i} outside 1..{length}")
        return cls(length, bits_from_indices(indices))

    @classmethod
    def from_list(cls, values: Sequence[int]) -> "BitVector":
        bits = 0
        for pos, v in enumerate(values):
            if v not in (0, 1):
                raise ValueError(f"entry {v!r} is not a bit")
            if v:
                bits |= 1 << pos
        return cls(len(values), bits)

    def __getitem__(self, i: int) -> int:
        if not 1 <= i <= self.length:
            raise IndexError(f"coordinate {i} outside 1..{self.length}")
        return (self.bits >> (i - 1)) & 1

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise DimensionError(f"length {self.length} vs {other.length}")
        return BitVector(self.length, self.bits ^ other.bits)

    def __iter__(self) -> Iterator[int]:
        for pos in range(self.length):
            yield (self.bits >> pos) & 1

    def support(self) -> Tuple[int, ...]:
        return indices_from_bits(self.bits)

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def to_list(self) -> List[int]:
        return list(self)


class BitMatrix:
    """Immutable ``nrows x ncols`` matrix over GF(2); indices are 1-based."""

    __slots__ = ("nrows", "ncols", "_rows", "_cols")

    def __init__(self, nrows: int, ncols: int, row_bits: Iterable[int]):
        rows = tuple(int(r) for r in row_bits)
        if nrows < 1 or ncols < 0:
            raise DimensionError(f"bad shape {nrows}x{ncols}")
        if len(rows) != nrows:
            raise DimensionError(f"expected {nrows} rows, got {len(rows)}")
        for r in rows:
            if r < 0 or r >> ncols:
                raise ValueError("row has bits beyond the column count")
        self.nrows = nrows
        self.ncols = ncols
        self._rows = rows
        self._cols: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        if not rows:
            raise DimensionError("matrix needs at least one row")
        ncols = len(rows[0])
        packed = []
        for row in rows:
            if len(row) != ncols:
                raise DimensionError("ragged rows")
            bits = 0
            for pos, v in enumerate(row):
                if v not in (0, 1):
                    raise ValueError(f"entry {v!r} is not a bit")
                if v:
                    bits |= 1 << pos
            packed.append(bits)
        return cls(len(rows), ncols, packed)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[int | BitVector]) -> "BitMatrix":
        """Build from column bitsets (bit ``i - 1`` is row ``i``)."""
        rows = [0] * nrows
        for j, col in enumerate(columns):
            if isinstance(col, BitVector):
                if col.length != nrows:
                    raise DimensionError(f"column {j + 1} has length {col.length}, want {nrows}")
                col = col.bits
            if col < 0 or col >> nrows:
                raise ValueError(f"column {j + 1} has bits beyond row {nrows}")
            i = 0
            while col:
                if col & 1:
                    rows[i] |= 1 << j
                col >>= 1
                i += 1
        return cls(nrows, len(columns), rows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, (1 << i for i in range(n)))

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, [0] * nrows)

    @classmethod
    def ones(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, [(1 << ncols) - 1] * nrows)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def row_bits(self) -> Tuple[int, ...]:
        return self._rows

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise IndexError(f"entry ({i}, {j}) outside {self.nrows}x{self.ncols}")
        return (self._rows[i - 1] >> (j - 1)) & 1

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self._rows[i - 1])

    def _columns(self) -> Tuple[int, ...]:
        # computed once; the matrix is immutable
        if self._cols is None:
            cols = [0] * self.ncols
            for i, r in enumerate(self._rows):
                while r:
                    low = r & -r
                    cols[low.bit_length() - 1] |= 1 << i
                    r ^= low
            self._cols = tuple(cols)
        return self._cols

    def column_bits(self, j: int) -> int:
        if not 1 <= j <= self.ncols:
            raise IndexError(f"column {j} outside 1..{self.ncols}")
        return self._columns()[j - 1]

    def column(self, j: int) -> BitVector:
        return BitVector(self.nrows, self.column_bits(j))

    def columns(self) -> List[int]:
        return list(self._columns())

    def transpose(self) -> "BitMatrix":
        if self.ncols == 0:
            raise DimensionError("cannot transpose a matrix with no columns")
        return BitMatrix(self.ncols, self.nrows, self.columns())

    def delete_column(self, j: int) -> "BitMatrix":
        if not 1 <= j <= self.ncols:
            raise IndexError(f"column {j} outside 1..{self.ncols}")
        low = (1 << (j - 1)) - 1
        rows = [(r & low) | ((r >> j) << (j - 1)) for r in self._rows]
        return BitMatrix(self.nrows, self.ncols - 1, rows)

    def rank(self) -> int:
        return rank_of_rows(self._rows)

    def to_lists(self) -> List[List[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self._rows]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.nrows, self.ncols, self._rows))

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"


class XorBasis:
    """Incremental row-space basis with O(1) undo of the last insertion.

    Slot ``b`` holds the basis vector whose highest set bit is ``b``.
    """

    __slots__ = ("_slot", "_stack")

    def __init__(self, width: int):
        self._slot = [0] * width
        self._stack: List[int] = []

    def reduce(self, v: int) -> int:
        slot = self._slot
        while v:
            b = v.bit_length() - 1
            w = slot[b]
            if not w:
                return v
            v ^= w
        return 0

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def push(self, v: int) -> bool:
        """Insert ``v``; return True if the rank grew. Always pair with :meth:`pop`."""
        r = self.reduce(v)
        if r:
            b = r.bit_length() - 1
            self._slot[b] = r
            self._stack.append(b)
            return True
        self._stack.append(-1)
        return False

    def pop(self) -> None:
        b = self._stack.pop()
        if b >= 0:
            self._slot[b] = 0

    def __len__(self) -> int:
        return sum(1 for b in self._stack if b >= 0)


def rank_of_rows(rows: Iterable[int]) -> int:
    """GF(2) rank of a collection of int bitsets."""
    pivots: dict[int, int] = {}
    for v in rows:
        while v:
            b = v.bit_length() - 1
            w = pivots.get(b)
            if w is None:
                pivots[b] = v
                break
            v ^= w
    return len(pivots)


def rank(m: BitMatrix) -> int:
    return m.rank()


def xor_sum(vs: Sequence[BitVector]) -> BitVector:
    if not vs:
        raise ValueError("xor_sum needs at least one vector to fix the length")
    length = vs[0].length
    acc = 0
    for v in vs:
        if v.length != length:
            raise DimensionError(f"length {v.length} vs {length}")
        acc ^= v.bits
    return BitVector(length, acc)


def solve_membership(target: BitVector, basis: Sequence[BitVector]) -> Optional[Tuple[int, ...]]:
    """Return 1-based positions of ``basis`` vectors XOR-summing to ``target``.

    Elimination runs over ``basis`` in order with the leftmost coordinate as
    pivot, so the returned combination is reproducible. ``None`` if
    ``target`` is outside the span.
    """
    for v in basis:
        if v.length != target.length:
            raise DimensionError(f"length {v.length} vs {target.length}")
    # pivot (lowest set bit) -> (reduced vector, combination mask over basis positions)
    table: dict[int, Tuple[int, int]] = {}
    for pos, v in enumerate(basis):
        vec, combo = v.bits, 1 << pos
        while vec:
            low = vec & -vec
            hit = table.get(low)
            if hit is None:
                table[low] = (vec, combo)
                break
            vec ^= hit[0]
            combo ^= hit[1]
    vec, combo = target.bits, 0
    while vec:
        low = vec & -vec
        hit = table.get(low)
        if hit is None:
            return None
        vec ^= hit[0]
        combo ^= hit[1]
    return indices_from_bits(combo)
