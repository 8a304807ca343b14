"""Dense linear algebra over GF(2).

A row (or any bit-vector) is a Python ``int``: bit ``j`` is the entry in
column ``j``.  CPython stores ints as arrays of machine words, so XOR of two
rows is a word-parallel operation and no explicit word packing is needed.

Echelon forms use the *lowest* set bit of a row as its pivot.  Reduced
row-echelon forms are canonical: rows are sorted by increasing pivot column
and every pivot column is zero outside its own row.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence


def parity(v: int) -> int:
    return v.bit_count() & 1


def bits(v: int, length: int) -> list[int]:
    return [(v >> j) & 1 for j in range(length)]


def from_bits(entries: Iterable[int]) -> int:
    v = 0
    for j, b in enumerate(entries):
        if b & 1:
            v |= 1 << j
    return v


def _low(v: int) -> int:
    return (v & -v).bit_length() - 1


def _reduced_echelon(rows: Iterable[int]) -> list[int]:
    """Canonical RREF of the row space spanned by ``rows``."""
    pivots: dict[int, int] = {}
    for v in rows:
        while v:
            p = _low(v)
            r = pivots.get(p)
            if r is None:
                pivots[p] = v
                break
            v ^= r
    # back-substitution, highest pivot first so the rows used are already reduced
    mask = 0
    for p in sorted(pivots, reverse=True):
        r = pivots[p]
        hits = r & mask
        while hits:
            r ^= pivots[_low(hits)]
            hits = r & mask
        pivots[p] = r
        mask |= 1 << p
    return [pivots[p] for p in sorted(pivots)]


@dataclass(frozen=True)
class BitMatrix:
    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.rows) != self.nrows:
            raise ValueError(f"expected {self.nrows} rows, got {len(self.rows)}")
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond the column count")

    # constructors

    @classmethod
    def from_rows(cls, rows: Sequence[int], ncols: int) -> "BitMatrix":
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], ncols: int | None = None) -> "BitMatrix":
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        return cls(len(entries), ncols, tuple(from_bits(r) for r in entries))

    @classmethod
    def from_columns(cls, columns: Sequence[int], nrows: int) -> "BitMatrix":
        return cls.from_rows(columns, nrows).transpose()

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "BitMatrix":
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def random(cls, nrows: int, ncols: int, rng: random.Random, density: float = 0.5) -> "BitMatrix":
        if density == 0.5:
            rows = tuple(rng.getrandbits(ncols) if ncols else 0 for _ in range(nrows))
        else:
            rows = tuple(
                from_bits(1 if rng.random() < density else 0 for _ in range(ncols))
                for _ in range(nrows)
            )
        return cls(nrows, ncols, rows)

    # basic structure

    def to_lists(self) -> list[list[int]]:
        return [bits(r, self.ncols) for r in self.rows]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                j = _low(r)
                cols[j] |= 1 << i
                r &= r - 1
        return BitMatrix(self.ncols, self.nrows, tuple(cols))

    def columns(self) -> list[int]:
        return list(self.transpose().rows)

    def mul_vec(self, v: int) -> int:
        out = 0
        for i, r in enumerate(self.rows):
            if parity(r & v):
                out |= 1 << i
        return out

    def __matmul__(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch: {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        out = []
        for r in self.rows:
            acc = 0
            while r:
                j = _low(r)
                acc ^= other.rows[j]
                r &= r - 1
            out.append(acc)
        return BitMatrix(self.nrows, other.ncols, tuple(out))

    def __add__(self, other: "BitMatrix") -> "BitMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")
        return BitMatrix(self.nrows, self.ncols, tuple(a ^ b for a, b in zip(self.rows, other.rows)))

    def __pow__(self, k: int) -> "BitMatrix":
        if self.nrows != self.ncols:
            raise ValueError("power of a non-square matrix")
        out = BitMatrix.identity(self.nrows)
        for _ in range(k):
            out = out @ self
        return out

    def kron(self, other: "BitMatrix") -> "BitMatrix":
        """Kronecker product; index ``(i, k)`` maps to ``i * other.n + k``."""
        rows = []
        for r in self.rows:
            for s in other.rows:
                acc = 0
                rr = r
                while rr:
                    j = _low(rr)
                    acc |= s << (j * other.ncols)
                    rr &= rr - 1
                rows.append(acc)
        return BitMatrix(self.nrows * other.nrows, self.ncols * other.ncols, tuple(rows))

    def hstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return BitMatrix(
            self.nrows,
            self.ncols + other.ncols,
            tuple(a | (b << self.ncols) for a, b in zip(self.rows, other.rows)),
        )

    def vstack(self, other: "BitMatrix") -> "BitMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return BitMatrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def __str__(self) -> str:
        return "\n".join("".join(str(b) for b in bits(r, self.ncols)) for r in self.rows)


def rref(m: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row-echelon form (zero rows last, shape kept) and the pivot columns."""
    red = _reduced_echelon(m.rows)
    piv = [_low(r) for r in red]
    return BitMatrix(m.nrows, m.ncols, tuple(red) + (0,) * (m.nrows - len(red))), piv


def rank(m: BitMatrix) -> int:
    return len(_reduced_echelon(m.rows))


@dataclass(frozen=True)
class Subspace:
    """A subspace of GF(2)^ambient_dim held by its canonical RREF basis."""

    ambient_dim: int
    basis: BitMatrix

    def __post_init__(self) -> None:
        if self.basis.ncols != self.ambient_dim:
            raise ValueError("basis width differs from ambient dimension")

    @classmethod
    def span(cls, vectors: Iterable[int], ambient_dim: int) -> "Subspace":
        red = _reduced_echelon(vectors)
        return cls(ambient_dim, BitMatrix(len(red), ambient_dim, tuple(red)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, BitMatrix.zeros(0, ambient_dim))

    @classmethod
    def whole(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, BitMatrix.identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.nrows

    @property
    def vectors(self) -> tuple[int, ...]:
        return self.basis.rows

    @property
    def pivots(self) -> list[int]:
        return [_low(r) for r in self.basis.rows]

    def reduce(self, v: int) -> int:
        """Remainder of ``v`` after clearing every pivot column of the basis."""
        for r in self.basis.rows:
            if (v >> _low(r)) & 1:
                v ^= r
        return v

    def __contains__(self, v: int) -> bool:
        return self.reduce(v) == 0

    def issubspace(self, other: "Subspace") -> bool:
        return all(v in other for v in self.vectors)

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_ambient(self, other)
        return Subspace.span(self.vectors + other.vectors, self.ambient_dim)

    def __and__(self, other: "Subspace") -> "Subspace":
        return intersect(self, other)


def _check_ambient(u: Subspace, v: Subspace) -> None:
    if u.ambient_dim != v.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {u.ambient_dim} != {v.ambient_dim}")


def kernel_basis(m: BitMatrix) -> Subspace:
    """Canonical basis of ``{v : m v = 0}``."""
    red = _reduced_echelon(m.rows)
    piv = [_low(r) for r in red]
    pivset = set(piv)
    vecs = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = 1 << f
        for r, p in zip(red, piv):
            if (r >> f) & 1:
                v |= 1 << p
        vecs.append(v)
    return Subspace.span(vecs, m.ncols)


def image(m: BitMatrix) -> Subspace:
    """Column space of ``m`` inside GF(2)^nrows."""
    return Subspace.span(m.transpose().rows, m.nrows)


def solve(m: BitMatrix, b: int) -> int | None:
    """Some ``x`` with ``m x = b``, or ``None`` when the system is inconsistent."""
    if b >> m.nrows:
        raise ValueError("right-hand side longer than the row count")
    aug_bit = 1 << m.ncols
    rows = [r | (aug_bit if (b >> i) & 1 else 0) for i, r in enumerate(m.rows)]
    x = 0
    for r in _reduced_echelon(rows):
        p = _low(r)
        if p == m.ncols:
            return None
        if r & aug_bit:
            x |= 1 << p
    return x


def intersect(u: Subspace, v: Subspace) -> Subspace:
    """Zassenhaus intersection: eliminate on rows ``(u|u)`` and ``(v|0)``."""
    _check_ambient(u, v)
    d = u.ambient_dim
    rows = [a | (a << d) for a in u.vectors] + list(v.vectors)
    low_mask = (1 << d) - 1
    out = [r >> d for r in _reduced_echelon(rows) if not r & low_mask]
    return Subspace.span(out, d)
