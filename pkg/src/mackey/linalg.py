"""Exact linear algebra over the rationals.

Vectors are dense lists of Fraction; subspaces are stored as reduced
row-echelon bases so membership tests and quotient coordinates are cheap.
Action matrices of tensor modules are column-sparse (a matrix unit moves a
basis word to at most one other word per tensor slot), so those get a small
sparse type of their own.

No floating point anywhere: ranks and kernels here feed socle and
essentiality decisions, which are meaningless under rounding.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vec = list[Fraction]

ZERO = Fraction(0)
ONE = Fraction(1)


class OperationCancelled(Exception):
    """Raised when a long computation observes a cancelled token."""


class CancelToken:
    """Cooperative cancellation flag threaded through long-running ranks."""

    __slots__ = ("_cancelled",)

    def __init__(self):
        self._cancelled = False

    def cancel(self) -> None:
        self._cancelled = True

    @property
    def cancelled(self) -> bool:
        return self._cancelled

    def check(self) -> None:
        if self._cancelled:
            raise OperationCancelled("computation cancelled")


def _check(cancel: CancelToken | None) -> None:
    if cancel is not None:
        cancel.check()


def zero_vec(n: int) -> Vec:
    return [ZERO] * n


def vec(values: Iterable) -> Vec:
    return [Fraction(v) for v in values]


def unit_vec(n: int, i: int) -> Vec:
    v = zero_vec(n)
    v[i] = ONE
    return v


def add_scaled(target: Vec, source: Sequence[Fraction], c: Fraction) -> None:
    """target += c * source, in place."""
    if c == 0:
        return
    for i, s in enumerate(source):
        if s:
            target[i] += c * s


def rref(rows: Iterable[Sequence[Fraction]], cancel: CancelToken | None = None
         ) -> tuple[list[Vec], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    echelon: list[Vec] = []
    pivots: list[int] = []
    for row in rows:
        _check(cancel)
        r = list(row)
        for e, p in zip(echelon, pivots):
            if r[p]:
                add_scaled(r, e, -r[p])
        lead = next((j for j, x in enumerate(r) if x), None)
        if lead is None:
            continue
        pv = r[lead]
        if pv != 1:
            r = [x / pv for x in r]
        for e, p in zip(echelon, pivots):
            if e[lead]:
                add_scaled(e, r, -e[lead])
        # keep pivot columns sorted so bases are canonical
        at = next((k for k, p in enumerate(pivots) if p > lead), len(pivots))
        echelon.insert(at, r)
        pivots.insert(at, lead)
    return echelon, pivots


def rank(rows: Iterable[Sequence[Fraction]], cancel: CancelToken | None = None) -> int:
    return len(rref(rows, cancel)[0])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int,
              cancel: CancelToken | None = None) -> list[Vec]:
    """Basis of {x : R x = 0} where the rows of R are the given functionals."""
    echelon, pivots = rref(rows, cancel)
    pivot_set = set(pivots)
    basis = []
    for j in range(ncols):
        if j in pivot_set:
            continue
        v = zero_vec(ncols)
        v[j] = ONE
        for e, p in zip(echelon, pivots):
            if e[j]:
                v[p] = -e[j]
        basis.append(v)
    return basis


class Subspace:
    """A subspace of Q^n held as a reduced row-echelon basis."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, vectors: Iterable[Sequence[Fraction]] = (),
                 cancel: CancelToken | None = None):
        self.ambient = ambient
        self.basis, self.pivots = rref(vectors, cancel)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence[Fraction]) -> Vec:
        """Residual of v modulo this subspace (zero iff v is a member)."""
        r = list(v)
        for e, p in zip(self.basis, self.pivots):
            if r[p]:
                add_scaled(r, e, -r[p])
        return r

    def contains(self, v: Sequence[Fraction]) -> bool:
        return not any(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def coordinates(self, v: Sequence[Fraction]) -> Vec:
        """Coefficients of v in this basis; raises if v is not a member."""
        coords = [v[p] for p in self.pivots]
        r = list(v)
        for e, c in zip(self.basis, coords):
            if c:
                add_scaled(r, e, -c)
        if any(r):
            raise ValueError("vector not in subspace")
        return coords

    def sum_with(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, list(self.basis) + list(other.basis))

    def intersection(self, other: "Subspace") -> "Subspace":
        """Standard kernel construction on stacked coefficient vectors."""
        a, b = self.basis, other.basis
        if not a or not b:
            return Subspace(self.ambient)
        # coefficients (y, z) with y.A = z.B, i.e. [A^T | -B^T] (y,z)^T = 0
        rows = []
        for j in range(self.ambient):
            rows.append([ai[j] for ai in a] + [-bi[j] for bi in b])
        combos = nullspace(rows, len(a) + len(b))
        vecs = []
        for combo in combos:
            w = zero_vec(self.ambient)
            for c, ai in zip(combo[: len(a)], a):
                add_scaled(w, ai, c)
            vecs.append(w)
        return Subspace(self.ambient, vecs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and self.ambient == other.ambient
                and self.basis == other.basis)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def full_space(n: int) -> Subspace:
    return Subspace(n, [unit_vec(n, i) for i in range(n)])


class SparseMatrix:
    """Square column-sparse matrix of Fractions: cols[j] = {i: M[i][j]}."""

    __slots__ = ("dim", "cols")

    def __init__(self, dim: int, cols: dict[int, dict[int, Fraction]] | None = None):
        self.dim = dim
        self.cols: dict[int, dict[int, Fraction]] = {}
        if cols:
            for j, col in cols.items():
                clean = {i: Fraction(v) for i, v in col.items() if v}
                if clean:
                    self.cols[j] = clean

    @classmethod
    def from_entries(cls, dim: int, entries: Iterable[tuple[int, int, Fraction]]
                     ) -> "SparseMatrix":
        """Build from (row, col, value) triples, summing duplicates."""
        cols: dict[int, dict[int, Fraction]] = {}
        for i, j, v in entries:
            col = cols.setdefault(j, {})
            col[i] = col.get(i, ZERO) + v
        return cls(dim, cols)

    @classmethod
    def diagonal(cls, values: Sequence) -> "SparseMatrix":
        vals = [Fraction(v) for v in values]
        return cls(len(vals), {j: {j: v} for j, v in enumerate(vals) if v})

    def apply(self, v: Sequence[Fraction]) -> Vec:
        out = zero_vec(self.dim)
        for j, col in self.cols.items():
            x = v[j]
            if x:
                for i, m in col.items():
                    out[i] += m * x
        return out

    def entry(self, i: int, j: int) -> Fraction:
        return self.cols.get(j, {}).get(i, ZERO)

    def is_zero(self) -> bool:
        return not self.cols

    def is_diagonal(self) -> bool:
        return all(set(col) <= {j} for j, col in self.cols.items())

    def diagonal_entries(self) -> Vec:
        return [self.entry(j, j) for j in range(self.dim)]

    def compose(self, other: "SparseMatrix") -> "SparseMatrix":
        """self @ other."""
        cols: dict[int, dict[int, Fraction]] = {}
        for j, col in other.cols.items():
            acc: dict[int, Fraction] = {}
            for k, v in col.items():
                for i, m in self.cols.get(k, {}).items():
                    acc[i] = acc.get(i, ZERO) + m * v
            acc = {i: v for i, v in acc.items() if v}
            if acc:
                cols[j] = acc
        return SparseMatrix(self.dim, cols)

    def scaled(self, c) -> "SparseMatrix":
        c = Fraction(c)
        return SparseMatrix(self.dim, {j: {i: c * v for i, v in col.items()}
                                       for j, col in self.cols.items()})

    def add(self, other: "SparseMatrix") -> "SparseMatrix":
        cols = {j: dict(col) for j, col in self.cols.items()}
        for j, col in other.cols.items():
            acc = cols.setdefault(j, {})
            for i, v in col.items():
                acc[i] = acc.get(i, ZERO) + v
        return SparseMatrix(self.dim, cols)

    def sub(self, other: "SparseMatrix") -> "SparseMatrix":
        return self.add(other.scaled(-1))

    def commutator(self, other: "SparseMatrix") -> "SparseMatrix":
        return self.compose(other).sub(other.compose(self))

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix) or self.dim != other.dim:
            return False
        return self.cols == other.cols

    def to_dense_rows(self) -> list[Vec]:
        rows = [zero_vec(self.dim) for _ in range(self.dim)]
        for j, col in self.cols.items():
            for i, v in col.items():
                rows[i][j] = v
        return rows


def format_rational(x: Fraction) -> str:
    """Plain-text exchange format: always p/q."""
    return f"{x.numerator}/{x.denominator}"


def dump_matrix(rows: Iterable[Sequence[Fraction]]) -> str:
    """One row per line, entries space-separated as p/q."""
    return "\n".join(" ".join(format_rational(Fraction(x)) for x in row)
                     for row in rows)
