"""Bit-packed linear algebra over GF(2).

Matrices keep their rows packed little-endian into ``uint64`` words: bit ``j``
of a row lives in word ``j // 64`` at position ``j % 64``.  Vectors are
packed into a single Python integer.  Neither packing is observable through
the public API.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

WORD = 64


def _n_words(n_bits: int) -> int:
    return max(1, -(-n_bits // WORD))


def pack_rows(dense: np.ndarray) -> np.ndarray:
    """Pack a 2-D 0/1 array into ``(rows, words)`` uint64."""
    dense = np.asarray(dense, dtype=bool)
    rows, cols = dense.shape
    width = _n_words(cols) * WORD
    padded = np.zeros((rows, width), dtype=bool)
    padded[:, :cols] = dense
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64).reshape(rows, width // WORD)


def unpack_rows(words: np.ndarray, cols: int) -> np.ndarray:
    rows = words.shape[0]
    as_bytes = np.ascontiguousarray(words.astype("<u8")).view(np.uint8).reshape(rows, -1)
    return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :cols].astype(np.uint8)


def _bits_to_int(bits: np.ndarray) -> int:
    packed = np.packbits(np.asarray(bits, dtype=bool), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


@dataclass(frozen=True)
class Gf2Vector:
    """A vector over GF(2) of fixed length, packed into an int."""

    len: int
    bits: int = 0

    def __post_init__(self):
        if self.len < 0:
            raise ValueError(f"negative length {self.len}")
        # coordinates past len never take part in comparisons
        object.__setattr__(self, "bits", self.bits & ((1 << self.len) - 1))

    @classmethod
    def zeros(cls, n: int) -> Gf2Vector:
        return cls(n, 0)

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> Gf2Vector:
        arr = np.fromiter((int(v) & 1 for v in values), dtype=np.uint8)
        return cls(len(arr), _bits_to_int(arr))

    @classmethod
    def unit(cls, n: int, i: int) -> Gf2Vector:
        if not 0 <= i < n:
            raise IndexError(f"coordinate {i} out of range for length {n}")
        return cls(n, 1 << i)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.len:
            raise IndexError(f"coordinate {i} out of range for length {self.len}")
        return (self.bits >> i) & 1

    def __iter__(self):
        return (self[i] for i in range(self.len))

    def __len__(self) -> int:
        return self.len

    def __add__(self, other: Gf2Vector) -> Gf2Vector:
        return add(self, other)

    def to_array(self) -> np.ndarray:
        raw = self.bits.to_bytes(-(-self.len // 8) or 1, "little")
        return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[: self.len]

    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def support(self) -> list[int]:
        return [i for i in range(self.len) if (self.bits >> i) & 1]

    def __repr__(self) -> str:
        return f"Gf2Vector({''.join(str(b) for b in self)})"


def add(u: Gf2Vector, v: Gf2Vector) -> Gf2Vector:
    if u.len != v.len:
        raise ValueError(f"dimension mismatch: {u.len} != {v.len}")
    return Gf2Vector(u.len, u.bits ^ v.bits)


@dataclass(frozen=True, eq=False)
class Gf2Matrix:
    rows: int
    cols: int
    data: np.ndarray = field(repr=False)

    def __post_init__(self):
        expected = (self.rows, _n_words(self.cols))
        if self.data.shape != expected:
            raise ValueError(f"packed data has shape {self.data.shape}, expected {expected}")
        self.data.setflags(write=False)

    @classmethod
    def from_dense(cls, dense) -> Gf2Matrix:
        arr = np.asarray(dense, dtype=np.uint8) & 1
        if arr.ndim != 2:
            raise ValueError("expected a 2-D array")
        return cls(arr.shape[0], arr.shape[1], pack_rows(arr))

    @classmethod
    def from_rows(cls, rows: Sequence[Gf2Vector], cols: int | None = None) -> Gf2Matrix:
        if cols is None:
            if not rows:
                raise ValueError("cannot infer column count from an empty row list")
            cols = rows[0].len
        dense = np.zeros((len(rows), cols), dtype=np.uint8)
        for i, r in enumerate(rows):
            if r.len != cols:
                raise ValueError(f"row {i} has length {r.len}, expected {cols}")
            dense[i] = r.to_array()
        return cls.from_dense(dense)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        return cls.from_dense(np.eye(n, dtype=np.uint8))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Gf2Matrix:
        return cls(rows, cols, np.zeros((rows, _n_words(cols)), dtype=np.uint64))

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def to_dense(self) -> np.ndarray:
        return unpack_rows(self.data, self.cols)

    def row(self, i: int) -> Gf2Vector:
        return Gf2Vector(self.cols, _bits_to_int(self.to_dense()[i]))

    def transpose(self) -> Gf2Matrix:
        return Gf2Matrix.from_dense(self.to_dense().T)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return int((self.data[i, j // WORD] >> np.uint64(j % WORD)) & np.uint64(1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Gf2Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.data, other.data))

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data.tobytes()))


def _pack_vector(v: Gf2Vector) -> np.ndarray:
    n = _n_words(v.len)
    return np.frombuffer(v.bits.to_bytes(n * 8, "little"), dtype="<u8").astype(np.uint64)


def matvec(M: Gf2Matrix, v: Gf2Vector) -> Gf2Vector:
    if v.len != M.cols:
        raise ValueError(f"dimension mismatch: matrix has {M.cols} columns, vector has length {v.len}")
    if M.rows == 0:
        return Gf2Vector(0)
    counts = np.bitwise_count(M.data & _pack_vector(v)).sum(axis=1)
    return Gf2Vector(M.rows, _bits_to_int(counts & 1))


@dataclass(frozen=True)
class Echelon:
    """Row-reduced form of a matrix: the reduced rows and their pivot columns."""

    data: np.ndarray
    cols: int
    pivots: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _eliminate(data: np.ndarray, cols: int, reduced: bool) -> Echelon:
    A = data.copy()
    n_rows = A.shape[0]
    pivots: list[int] = []
    r = 0
    for col in range(cols):
        if r == n_rows:
            break
        w = col // WORD
        mask = np.uint64(1 << (col % WORD))
        below = np.flatnonzero(A[r:, w] & mask)
        if below.size == 0:
            continue
        p = r + int(below[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        scope = A[:, w] if reduced else A[r:, w]
        hits = np.flatnonzero(scope & mask)
        if not reduced:
            hits = hits + r
        hits = hits[hits != r]
        if hits.size:
            A[hits, w:] ^= A[r, w:]
        pivots.append(col)
        r += 1
    return Echelon(A[:r], cols, tuple(pivots))


def row_echelon(M: Gf2Matrix) -> Echelon:
    """Forward elimination, leftmost nonzero pivot at each step."""
    return _eliminate(M.data, M.cols, reduced=False)


def rref(M: Gf2Matrix) -> Echelon:
    return _eliminate(M.data, M.cols, reduced=True)


def rank(M: Gf2Matrix) -> int:
    return row_echelon(M).rank


def nullity(M: Gf2Matrix) -> int:
    return M.cols - rank(M)


def nullspace_basis(M: Gf2Matrix) -> list[Gf2Vector]:
    """Canonical basis of ker M.

    One vector per free column of the reduced row echelon form, with a 1 in
    that column and the pivot entries filled by back-substitution.  Vectors
    come out ordered by their free column.
    """
    ech = rref(M)
    pivot_set = set(ech.pivots)
    free = [c for c in range(M.cols) if c not in pivot_set]
    if not free:
        return []
    reduced = unpack_rows(ech.data, M.cols) if ech.rank else np.zeros((0, M.cols), np.uint8)
    pivots = np.asarray(ech.pivots, dtype=np.intp)
    basis = []
    for f in free:
        bits = np.zeros(M.cols, dtype=np.uint8)
        bits[f] = 1
        if ech.rank:
            bits[pivots[reduced[:, f] == 1]] = 1
        basis.append(Gf2Vector(M.cols, _bits_to_int(bits)))
    return basis


def span_rank(vectors: Sequence[Gf2Vector], length: int) -> int:
    if not vectors:
        return 0
    return rank(Gf2Matrix.from_rows(vectors, length))


def in_span(v: Gf2Vector, vectors: Sequence[Gf2Vector]) -> bool:
    if v.is_zero():
        return True
    return span_rank(list(vectors) + [v], v.len) == span_rank(vectors, v.len)


def same_span(a: Sequence[Gf2Vector], b: Sequence[Gf2Vector], length: int) -> bool:
    """Mutual membership: each set lies in the span of the other."""
    ra, rb = span_rank(a, length), span_rank(b, length)
    return ra == rb == span_rank(list(a) + list(b), length)


def solve(M: Gf2Matrix, b: Gf2Vector) -> Gf2Vector | None:
    """One solution of ``M x = b``, or None when the system is inconsistent."""
    if b.len != M.rows:
        raise ValueError(f"dimension mismatch: matrix has {M.rows} rows, right side has length {b.len}")
    aug = np.hstack([M.to_dense(), b.to_array()[:, None]])
    ech = rref(Gf2Matrix.from_dense(aug))
    if M.cols in ech.pivots:
        return None
    reduced = unpack_rows(ech.data, M.cols + 1)
    x = np.zeros(M.cols, dtype=np.uint8)
    for i, p in enumerate(ech.pivots):
        x[p] = reduced[i, M.cols]
    return Gf2Vector(M.cols, _bits_to_int(x))
