"""Matrices of polynomials over a shared variable context.

Minor enumeration walks subsets lexicographically and expands determinants
by the first row, memoizing every (row-subset, column-subset) determinant on
the matrix instance.  The cache makes enumerating all minors of several
sizes of one matrix cheap, which the jump-ideal and tangent-cone code
relies on.

Out-of-bounds minor conventions: size <= 0 gives the unit ideal [1]; size
larger than min(rows, cols) gives the zero ideal [].
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Sequence

from .polynomials import Polynomial
from .scalars import Domain


class PolyMatrix:
    __slots__ = ("rows", "cols", "vars", "domain", "entries", "_det_cache")

    def __init__(self, rows: int, cols: int, entries: Sequence[Polynomial],
                 vars: tuple[str, ...] | None = None, domain: Domain | None = None):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        if entries:
            vars = entries[0].vars
            domain = entries[0].domain
            for e in entries:
                if e.vars != vars or e.domain != domain:
                    raise ValueError("matrix entries live in different rings")
        elif vars is None or domain is None:
            raise ValueError("empty matrix needs explicit vars and domain")
        self.rows = rows
        self.cols = cols
        self.vars = tuple(vars)
        self.domain = domain
        self.entries = entries
        self._det_cache: dict = {}

    @classmethod
    def from_rows(cls, rows_of_polys: Sequence[Sequence[Polynomial]],
                  vars=None, domain=None) -> "PolyMatrix":
        nrows = len(rows_of_polys)
        ncols = len(rows_of_polys[0]) if nrows else 0
        flat: list[Polynomial] = []
        for r in rows_of_polys:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(nrows, ncols, flat, vars=vars, domain=domain)

    @classmethod
    def zero(cls, rows: int, cols: int, vars, domain: Domain) -> "PolyMatrix":
        z = Polynomial.zero(vars, domain)
        return cls(rows, cols, [z] * (rows * cols), vars=tuple(vars), domain=domain)

    @classmethod
    def from_scalar_rows(cls, scalar_rows, vars, domain: Domain) -> "PolyMatrix":
        """Constant matrix from domain elements."""
        return cls.from_rows(
            [[Polynomial.constant(x, vars, domain) for x in row] for row in scalar_rows],
            vars=tuple(vars), domain=domain,
        )

    def entry(self, i: int, j: int) -> Polynomial:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[Polynomial]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def map_entries(self, fn: Callable[[Polynomial], Polynomial]) -> "PolyMatrix":
        return PolyMatrix(self.rows, self.cols, [fn(e) for e in self.entries],
                          vars=self.vars, domain=self.domain)

    def truncate(self, order: int) -> "PolyMatrix":
        return self.map_entries(lambda e: e.truncate(order))

    def transpose(self) -> "PolyMatrix":
        entries = [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)]
        return PolyMatrix(self.cols, self.rows, entries, vars=self.vars, domain=self.domain)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        if self.vars != other.vars or self.domain != other.domain:
            raise ValueError("matrices live in different rings")
        out = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = Polynomial.zero(self.vars, self.domain)
                for t in range(self.cols):
                    acc = acc + self.entry(i, t) * other.entry(t, j)
                out.append(acc)
        return PolyMatrix(self.rows, other.cols, out, vars=self.vars, domain=self.domain)

    def block_diag(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.vars != other.vars or self.domain != other.domain:
            raise ValueError("matrices live in different rings")
        z = Polynomial.zero(self.vars, self.domain)
        rows = self.rows + other.rows
        cols = self.cols + other.cols
        out = []
        for i in range(rows):
            for j in range(cols):
                if i < self.rows and j < self.cols:
                    out.append(self.entry(i, j))
                elif i >= self.rows and j >= self.cols:
                    out.append(other.entry(i - self.rows, j - self.cols))
                else:
                    out.append(z)
        return PolyMatrix(rows, cols, out, vars=self.vars, domain=self.domain)

    def evaluate(self, point) -> list[list]:
        return [[self.entry(i, j).evaluate(point) for j in range(self.cols)]
                for i in range(self.rows)]

    def _minor_det(self, row_idx: tuple[int, ...], col_idx: tuple[int, ...]) -> Polynomial:
        key = (row_idx, col_idx)
        cached = self._det_cache.get(key)
        if cached is not None:
            return cached
        n = len(row_idx)
        if n == 1:
            result = self.entry(row_idx[0], col_idx[0])
        else:
            result = Polynomial.zero(self.vars, self.domain)
            rest_rows = row_idx[1:]
            for pos, c in enumerate(col_idx):
                e = self.entry(row_idx[0], c)
                if e.is_zero:
                    continue
                sub = self._minor_det(rest_rows, col_idx[:pos] + col_idx[pos + 1:])
                if sub.is_zero:
                    continue
                term = e * sub
                result = result + (term if pos % 2 == 0 else -term)
        self._det_cache[key] = result
        return result

    def det(self) -> Polynomial:
        if self.rows != self.cols:
            raise ValueError("determinant requires a square matrix")
        if self.rows == 0:
            return Polynomial.constant(1, self.vars, self.domain)
        return self._minor_det(tuple(range(self.rows)), tuple(range(self.cols)))

    def minors_of_size(self, size: int) -> list[Polynomial]:
        """All size x size minors, lex order on (row-set, col-set).

        size <= 0 yields [1] (unit ideal); size > min(rows, cols) yields []
        (zero ideal).
        """
        if size <= 0:
            return [Polynomial.constant(1, self.vars, self.domain)]
        if size > min(self.rows, self.cols):
            return []
        out = []
        for row_idx in combinations(range(self.rows), size):
            for col_idx in combinations(range(self.cols), size):
                out.append(self._minor_det(row_idx, col_idx))
        return out

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
            and self.vars == other.vars
            and self.domain == other.domain
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __str__(self):
        body = "; ".join(
            ", ".join(str(self.entry(i, j)) for j in range(self.cols)) for i in range(self.rows)
        )
        return f"[{body}]"

    def __repr__(self):
        return f"PolyMatrix({self.rows}x{self.cols}: {self})"


def minors_of_size(matrix: PolyMatrix, size: int) -> list[Polynomial]:
    return matrix.minors_of_size(size)


def block_diag(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    return a.block_diag(b)
