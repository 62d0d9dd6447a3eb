"""Dense matrices over a finite field.

Entries are kept as integer reps in row-major tuples; indexing with
``M[i, j]`` returns a :class:`FieldElement`.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .galois import GF, FieldElement


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows", "_rref")

    def __init__(self, field: GF, rows: Iterable[Sequence], ncols: int | None = None):
        rows = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        for row in rows:
            if len(row) != ncols:
                raise ValueError(f"ragged rows: expected width {ncols}, got {len(row)}")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows
        self._rref = None

    @classmethod
    def _trusted(cls, field: GF, rows, ncols: int) -> Matrix:
        # rows already validated reps; skip coercion
        m = cls.__new__(cls)
        m.field = field
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = ncols
        m._rref = None
        return m

    @classmethod
    def zeros(cls, field: GF, nrows: int, ncols: int) -> Matrix:
        return cls._trusted(field, [[0] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field: GF, n: int) -> Matrix:
        return cls._trusted(field, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, idx) -> FieldElement:
        i, j = idx
        return FieldElement(self.field, self.rows[i][j])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    __hash__ = None

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.nrows}x{self.ncols})"

    def __str__(self):
        if not self.nrows:
            return f"0 x {self.ncols} matrix"
        cells = [[self.field.render(x) for x in row] for row in self.rows]
        widths = [max(len(r[j]) for r in cells) for j in range(self.ncols)]
        return "\n".join(
            "| " + " ".join(c.ljust(w) for c, w in zip(r, widths)) + " |" for r in cells
        )

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    # products -----------------------------------------------------------

    def _check(self, other: Matrix):
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def transpose(self) -> Matrix:
        cols = [[row[j] for row in self.rows] for j in range(self.ncols)]
        return Matrix._trusted(self.field, cols, self.nrows)

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def vecmat(self, v: Sequence) -> tuple[int, ...]:
        """Row vector times matrix, ``v @ M``."""
        F = self.field
        v = [F.coerce(x) for x in v]
        if len(v) != self.nrows:
            raise ValueError(f"vector of length {len(v)} against {self.nrows} rows")
        acc = [0] * self.ncols
        for c, row in zip(v, self.rows):
            if c:
                acc = F.axpy(acc, c, row)
        return tuple(acc)

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix._trusted(self.field, [other.vecmat(row) for row in self.rows], other.ncols)

    # elimination --------------------------------------------------------

    def rref(self) -> tuple[Matrix, int, tuple[int, ...]]:
        """Reduced row echelon form, rank and pivot columns.

        The pivot in each column is the first nonzero entry at or below the
        current row, so the result is reproducible.
        """
        if self._rref is not None:
            return self._rref
        F = self.field
        rows = [list(r) for r in self.rows]
        pivots = []
        top = 0
        for col in range(self.ncols):
            if top == len(rows):
                break
            src = next((i for i in range(top, len(rows)) if rows[i][col]), None)
            if src is None:
                continue
            rows[top], rows[src] = rows[src], rows[top]
            rows[top] = F.scale_vec(F.inv(rows[top][col]), rows[top])
            prow = rows[top]
            for i in range(len(rows)):
                c = rows[i][col]
                if i != top and c:
                    rows[i] = F.axpy(rows[i], F.neg(c), prow)
            pivots.append(col)
            top += 1
        R = Matrix._trusted(F, rows, self.ncols)
        result = (R, top, tuple(pivots))
        R._rref = result
        self._rref = result
        return result

    def rank(self) -> int:
        return self.rref()[1]

    def row_basis(self) -> Matrix:
        """Nonzero rows of the RREF."""
        R, rank, _ = self.rref()
        return Matrix._trusted(self.field, R.rows[:rank], self.ncols)

    def nullspace(self) -> Matrix:
        """Rows form a basis of ``{v : M v^T = 0}``, one per free column, ascending."""
        F = self.field
        R, rank, pivots = self.rref()
        free = [j for j in range(self.ncols) if j not in set(pivots)]
        basis = []
        for f in free:
            v = [0] * self.ncols
            v[f] = 1
            for i, pc in enumerate(pivots):
                v[pc] = F.neg(R.rows[i][f])
            basis.append(v)
        return Matrix._trusted(F, basis, self.ncols)

    def row_space_equal(self, other: Matrix) -> bool:
        self._check(other)
        if self.ncols != other.ncols:
            raise ValueError(f"width mismatch: {self.ncols} vs {other.ncols}")
        return self.row_basis().rows == other.row_basis().rows

    # slicing ------------------------------------------------------------

    def columns(self, idx: Sequence[int]) -> Matrix:
        return Matrix._trusted(self.field, [[row[j] for j in idx] for row in self.rows], len(idx))

    def delete_columns(self, idx: Iterable[int]) -> Matrix:
        drop = set(idx)
        keep = [j for j in range(self.ncols) if j not in drop]
        return self.columns(keep)

    def stack(self, other: Matrix) -> Matrix:
        self._check(other)
        if self.ncols != other.ncols:
            raise ValueError(f"width mismatch: {self.ncols} vs {other.ncols}")
        return Matrix._trusted(self.field, self.rows + other.rows, self.ncols)

    # text ---------------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.nrows} {self.ncols}"]
        lines += [" ".join(map(str, row)) for row in self.rows]
        return "\n".join(lines)

    @classmethod
    def from_text(cls, field: GF, text: str) -> Matrix:
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        nrows, ncols = map(int, lines[0].split())
        body = [list(map(int, ln.split())) for ln in lines[1 : 1 + nrows]]
        if len(body) != nrows:
            raise ValueError(f"expected {nrows} rows, found {len(body)}")
        for row in body:
            for x in row:
                if not 0 <= x < field.q:
                    raise ValueError(f"rep {x} out of range for {field!r}")
        return cls(field, body, ncols)
