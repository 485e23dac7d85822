"""Exact integer linear algebra: Hermite normal form, rank, kernels and lattices.

Everything here works on Python ints, so there is no overflow and no rounding.
Rows are stored sparsely (column -> value) while eliminating, because the
matrices produced by face maps and bracket spans are mostly zeros.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

Row = Tuple[int, ...]
_Sparse = Dict[int, int]


@dataclass(frozen=True)
class IntMatrix:
    nrows: int
    ncols: int
    rows: Tuple[Row, ...]

    def __post_init__(self):
        if len(self.rows) != self.nrows:
            raise ValueError("row count does not match nrows")
        for r in self.rows:
            if len(r) != self.ncols:
                raise ValueError("row length does not match ncols")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], ncols: Optional[int] = None) -> "IntMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        return cls(len(rows), ncols, rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "IntMatrix":
        return cls(nrows, ncols, tuple((0,) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, k: int) -> "IntMatrix":
        return cls(k, k, tuple(tuple(int(i == j) for j in range(k)) for i in range(k)))

    def transpose(self) -> "IntMatrix":
        return IntMatrix(self.ncols, self.nrows,
                         tuple(tuple(r[j] for r in self.rows) for j in range(self.ncols)))

    def stack(self, other: "IntMatrix") -> "IntMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column counts differ")
        return IntMatrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def apply(self, v: Sequence[int]) -> Row:
        """Matrix-vector product M·v."""
        if len(v) != self.ncols:
            raise ValueError("vector length does not match ncols")
        return tuple(sum(a * b for a, b in zip(r, v) if a) for r in self.rows)

    def to_json(self) -> str:
        return json.dumps([[str(x) for x in r] for r in self.rows])


MatrixLike = Union[IntMatrix, Sequence[Sequence[int]]]


def _as_matrix(M: MatrixLike, ncols: Optional[int] = None) -> IntMatrix:
    if isinstance(M, IntMatrix):
        return M
    return IntMatrix.from_rows(M, ncols)


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (g, s, t) with g = s*a + t*b = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _sparse(row: Sequence[int]) -> _Sparse:
    return {j: x for j, x in enumerate(row) if x}


def _combine(a: int, u: _Sparse, b: int, v: _Sparse) -> _Sparse:
    """a*u + b*v with zero entries dropped."""
    out = {j: a * x for j, x in u.items()} if a else {}
    if b:
        for j, x in v.items():
            y = out.get(j, 0) + b * x
            if y:
                out[j] = y
            else:
                out.pop(j, None)
    return {j: x for j, x in out.items() if x}


class _Echelon:
    """Incremental row-style Hermite normal form over the integers."""

    def __init__(self):
        self.pivots: Dict[int, _Sparse] = {}

    def insert(self, v: _Sparse) -> None:
        while v:
            c = min(v)
            b = v[c]
            p = self.pivots.get(c)
            if p is None:
                self.pivots[c] = v if b > 0 else {j: -x for j, x in v.items()}
                return
            a = p[c]
            if b % a == 0:
                v = _combine(1, v, -(b // a), p)
                continue
            g, s, t = xgcd(a, b)
            self.pivots[c] = _combine(s, p, t, v)
            v = _combine(a // g, v, -(b // g), p)

    def rows(self, ncols: int) -> Tuple[Row, ...]:
        cols = sorted(self.pivots)
        rows = [dict(self.pivots[c]) for c in cols]
        # reduce above pivots, left to right, so earlier pivot columns stay reduced
        for s, c in enumerate(cols):
            pc = rows[s][c]
            for r in range(s):
                x = rows[r].get(c, 0)
                q = x // pc
                if q:
                    rows[r] = _combine(1, rows[r], -q, rows[s])
        out = []
        for r in rows:
            dense = [0] * ncols
            for j, x in r.items():
                dense[j] = x
            out.append(tuple(dense))
        return tuple(out)


def hnf(M: MatrixLike, ncols: Optional[int] = None) -> IntMatrix:
    """Row Hermite normal form of the row lattice of ``M``.

    Zero rows are dropped; pivots are positive and the entries above each
    pivot lie in ``[0, pivot)``.
    """
    M = _as_matrix(M, ncols)
    ech = _Echelon()
    for r in M.rows:
        ech.insert(_sparse(r))
    rows = ech.rows(M.ncols)
    return IntMatrix(len(rows), M.ncols, rows)


def rank_rational(M: MatrixLike, ncols: Optional[int] = None) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    M = _as_matrix(M, ncols)
    a = [list(r) for r in M.rows]
    nr, nc = M.nrows, M.ncols
    rank = 0
    prev = 1
    for c in range(nc):
        piv = next((i for i in range(rank, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, nr):
            f = a[i][c]
            row_i, row_r = a[i], a[rank]
            for j in range(c, nc):
                row_i[j] = (p * row_i[j] - f * row_r[j]) // prev
        prev = p
        rank += 1
        if rank == nr:
            break
    return rank


@dataclass(frozen=True)
class IntegerLattice:
    """A sublattice of Z^dim, stored by its row Hermite normal form basis.

    The basis is canonical, so ``==`` is lattice equality.
    """

    dim: int
    basis: Tuple[Row, ...]

    @classmethod
    def from_rows(cls, dim: int, rows: Iterable[Sequence[int]]) -> "IntegerLattice":
        ech = _Echelon()
        for r in rows:
            if len(r) != dim:
                raise ValueError(f"vector of length {len(r)} in a lattice of dimension {dim}")
            ech.insert(_sparse(r))
        return cls(dim, ech.rows(dim))

    @classmethod
    def from_sparse(cls, dim: int, rows: Iterable[Dict[int, int]]) -> "IntegerLattice":
        """Build from rows given as {column: value} maps."""
        ech = _Echelon()
        for r in rows:
            ech.insert({j: x for j, x in r.items() if x})
        return cls(dim, ech.rows(dim))

    @classmethod
    def zero(cls, dim: int) -> "IntegerLattice":
        return cls(dim, ())

    @classmethod
    def full(cls, dim: int) -> "IntegerLattice":
        return cls(dim, IntMatrix.identity(dim).rows)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __add__(self, other: "IntegerLattice") -> "IntegerLattice":
        return lattice_sum(self, other)

    def __contains__(self, v: Sequence[int]) -> bool:
        return lattice_contains(self, v)

    def is_saturated(self) -> bool:
        """True iff the lattice equals its rational span intersected with Z^dim."""
        if not self.basis:
            return True
        M = IntMatrix(len(self.basis), self.dim, self.basis)
        return lattice_equal(self, kernel_lattice(kernel_lattice(M).as_matrix()))

    def as_matrix(self) -> IntMatrix:
        return IntMatrix(len(self.basis), self.dim, self.basis)


def kernel_lattice(M: MatrixLike, ncols: Optional[int] = None) -> IntegerLattice:
    """The saturated lattice {v in Z^ncols : M v = 0}.

    Row-reduces [M^T | I]; the rows whose left block vanishes carry a
    unimodular-transform basis of the integer kernel.
    """
    M = _as_matrix(M, ncols)
    r, m = M.nrows, M.ncols
    ech = _Echelon()
    for j in range(m):
        v = {i: M.rows[i][j] for i in range(r) if M.rows[i][j]}
        v[r + j] = 1
        ech.insert(v)
    kern = []
    for c, row in ech.pivots.items():
        if c >= r:
            kern.append({j - r: x for j, x in row.items()})
    ech2 = _Echelon()
    for v in kern:
        ech2.insert(v)
    return IntegerLattice(m, ech2.rows(m))


def lattice_sum(A: IntegerLattice, B: IntegerLattice) -> IntegerLattice:
    if A.dim != B.dim:
        raise ValueError("lattices live in different dimensions")
    return IntegerLattice.from_rows(A.dim, A.basis + B.basis)


def lattice_equal(A: IntegerLattice, B: IntegerLattice) -> bool:
    if A.dim != B.dim:
        raise ValueError("lattices live in different dimensions")
    return A.basis == B.basis


def lattice_contains(A: IntegerLattice, v: Sequence[int]) -> bool:
    if len(v) != A.dim:
        raise ValueError("vector dimension does not match the lattice")
    v = list(v)
    for row in A.basis:
        c = next(j for j, x in enumerate(row) if x)
        if any(v[:c]):
            return False
        x = v[c]
        if x % row[c]:
            return False
        q = x // row[c]
        if q:
            for j in range(c, A.dim):
                v[j] -= q * row[j]
    return not any(v)


def lattice_witness(A: IntegerLattice, B: IntegerLattice) -> Optional[Row]:
    """A basis vector of one lattice missing from the other, or None if equal."""
    for v in A.basis:
        if not lattice_contains(B, v):
            return v
    for v in B.basis:
        if not lattice_contains(A, v):
            return v
    return None
