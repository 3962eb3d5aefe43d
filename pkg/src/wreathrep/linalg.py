"""Sparse matrices and row reduction over exact (or complex) scalars.

Matrices act on column vectors: ``M[r, c]`` is the coefficient of basis vector ``r``
in the image of basis vector ``c``.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping

from .scalars import DEFAULT_TOL, is_exact, is_zero, residual


class SparseMatrix:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: dict[int, dict[int, object]] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else {}

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "SparseMatrix":
        return cls(nrows, nrows if ncols is None else ncols)

    @classmethod
    def from_dense(cls, dense) -> "SparseMatrix":
        nrows = len(dense)
        ncols = len(dense[0]) if nrows else 0
        m = cls(nrows, ncols)
        for r, row in enumerate(dense):
            for c, x in enumerate(row):
                m.set(r, c, x)
        return m

    def get(self, r: int, c: int):
        return self.rows.get(r, {}).get(c, 0)

    def set(self, r: int, c: int, x) -> None:
        if is_exact(x) and not x:
            row = self.rows.get(r)
            if row is not None:
                row.pop(c, None)
                if not row:
                    del self.rows[r]
            return
        self.rows.setdefault(r, {})[c] = x

    def add_to(self, r: int, c: int, x) -> None:
        row = self.rows.setdefault(r, {})
        y = row.get(c, 0) + x
        if is_exact(y) and not y:
            del row[c]
            if not row:
                del self.rows[r]
        else:
            row[c] = y

    def entries(self):
        for r, row in self.rows.items():
            for c, x in row.items():
                yield r, c, x

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def to_dense(self) -> list[list]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for r, c, x in self.entries():
            out[r][c] = x
        return out

    def transpose(self) -> "SparseMatrix":
        t = SparseMatrix(self.ncols, self.nrows)
        for r, c, x in self.entries():
            t.rows.setdefault(c, {})[r] = x
        return t

    def conj_transpose(self) -> "SparseMatrix":
        from .scalars import conj

        t = SparseMatrix(self.ncols, self.nrows)
        for r, c, x in self.entries():
            t.rows.setdefault(c, {})[r] = conj(x)
        return t

    def scale(self, s) -> "SparseMatrix":
        m = SparseMatrix(self.nrows, self.ncols)
        for r, c, x in self.entries():
            m.set(r, c, s * x)
        return m

    def __neg__(self) -> "SparseMatrix":
        return self.scale(-1)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        self._check_shape(other)
        m = SparseMatrix(self.nrows, self.ncols, {r: dict(row) for r, row in self.rows.items()})
        for r, c, x in other.entries():
            m.add_to(r, c, x)
        return m

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + (-other)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        out: dict[int, dict[int, object]] = {}
        orows = other.rows
        for r, row in self.rows.items():
            acc: dict[int, object] = {}
            for k, x in row.items():
                orow = orows.get(k)
                if not orow:
                    continue
                for c, y in orow.items():
                    acc[c] = acc.get(c, 0) + x * y
            acc = {c: v for c, v in acc.items() if not (is_exact(v) and not v)}
            if acc:
                out[r] = acc
        return SparseMatrix(self.nrows, other.ncols, out)

    def apply(self, vec: Mapping[int, object]) -> dict[int, object]:
        out: dict[int, object] = {}
        cols = self.transpose().rows
        for c, y in vec.items():
            for r, x in cols.get(c, {}).items():
                out[r] = out.get(r, 0) + x * y
        return {r: v for r, v in out.items() if not (is_exact(v) and not v)}

    def trace(self):
        return sum((row.get(r, 0) for r, row in self.rows.items()), 0)

    def _check_shape(self, other: "SparseMatrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("shape mismatch")

    def max_residual(self, other: "SparseMatrix") -> float:
        self._check_shape(other)
        worst = 0.0
        keys = {(r, c) for r, c, _ in self.entries()} | {(r, c) for r, c, _ in other.entries()}
        for r, c in keys:
            worst = max(worst, residual(self.get(r, c), other.get(r, c)))
        return worst

    def equals(self, other: "SparseMatrix", tol: float = DEFAULT_TOL) -> bool:
        return self.max_residual(other) <= tol

    def block(self, rows: Iterable[int], cols: Iterable[int]) -> list[list]:
        return [[self.get(r, c) for c in cols] for r in rows]

    def __repr__(self) -> str:
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"


class Echelon:
    """Incrementally maintained reduced row echelon basis of a span of sparse vectors.

    Vectors are dicts ``key -> scalar``; keys only need to be hashable. Pivot keys are
    taken in insertion order, so results are deterministic for deterministic input.
    Float scalars are compared against ``tol``.
    """

    def __init__(self, tol: float = DEFAULT_TOL):
        self.tol = tol
        self.basis: dict[Hashable, dict] = {}

    def __len__(self) -> int:
        return len(self.basis)

    def reduce(self, vec: Mapping) -> dict:
        v = {k: x for k, x in vec.items() if not is_zero(x, self.tol)}
        for p in [k for k in v if k in self.basis]:
            coef = v.get(p, 0)
            if is_zero(coef, self.tol):
                v.pop(p, None)
                continue
            for k, x in self.basis[p].items():
                y = v.get(k, 0) - coef * x
                if is_zero(y, self.tol):
                    v.pop(k, None)
                else:
                    v[k] = y
        return v

    def add(self, vec: Mapping) -> bool:
        """Add ``vec`` to the span; return True if it was independent."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = max(v, key=lambda k: abs(complex(v[k]))) if not all(is_exact(x) for x in v.values()) else next(iter(v))
        inv = 1 / v[pivot]
        v = {k: x * inv for k, x in v.items()}
        v[pivot] = 1
        for q, row in self.basis.items():
            coef = row.get(pivot)
            if coef is None:
                continue
            for k, x in v.items():
                y = row.get(k, 0) - coef * x
                if is_zero(y, self.tol):
                    row.pop(k, None)
                else:
                    row[k] = y
        self.basis[pivot] = v
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def rank(vectors: Iterable[Mapping], tol: float = DEFAULT_TOL) -> int:
    ech = Echelon(tol)
    for v in vectors:
        ech.add(v)
    return len(ech)


def nullspace_dimension(equations: Iterable[Mapping], variables: Iterable[Hashable]) -> int:
    """Dimension of {x : sum_k eq[k] x[k] = 0 for every equation} over the given variables."""
    nvars = len(set(variables))
    return nvars - rank(equations)
