"""Exact integer linear algebra: Smith normal form and chain-segment homology.

Matrices carry arbitrary-precision Python integers.  Storage is a sparse map
of nonzero entries behind a dense (rows x cols) contract; boundary matrices of
bar complexes are overwhelmingly zero and a dense layout would not fit in
memory at degree 5.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .abelian import FgAbelianGroup
from .errors import NotAComplex, TooLarge

DEFAULT_ENTRY_LIMIT = 10**6


class IntegerMatrix:
    """Immutable dense-semantics integer matrix with sparse storage."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows, cols, entries=None, *, entry_limit=DEFAULT_ENTRY_LIMIT):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if entry_limit is not None and rows * cols > entry_limit:
            raise TooLarge(
                f"matrix with {rows}x{cols} = {rows * cols} entries exceeds the "
                f"entry-count limit {entry_limit}"
            )
        self.rows = rows
        self.cols = cols
        data = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise ValueError(f"entry index ({i}, {j}) out of range")
                if v != 0:
                    data[(i, j)] = v
        self._data = data

    @classmethod
    def from_rows(cls, rows_list, *, entry_limit=DEFAULT_ENTRY_LIMIT):
        nrows = len(rows_list)
        ncols = len(rows_list[0]) if nrows else 0
        entries = {}
        for i, row in enumerate(rows_list):
            if len(row) != ncols:
                raise ValueError("ragged rows")
            for j, v in enumerate(row):
                if v != 0:
                    entries[(i, j)] = v
        return cls(nrows, ncols, entries, entry_limit=entry_limit)

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, entry_limit=None)

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(i, i): 1 for i in range(n)}, entry_limit=None)

    def get(self, i, j) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError((i, j))
        return self._data.get((i, j), 0)

    def to_rows(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._data.items():
            out[i][j] = v
        return out

    def nonzero_count(self) -> int:
        return len(self._data)

    def is_zero(self) -> bool:
        return not self._data

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(
            self.cols, self.rows,
            {(j, i): v for (i, j), v in self._data.items()},
            entry_limit=None,
        )

    def matmul(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        rows_self: dict[int, dict[int, int]] = {}
        for (i, k), v in self._data.items():
            rows_self.setdefault(i, {})[k] = v
        rows_other: dict[int, dict[int, int]] = {}
        for (k, j), v in other._data.items():
            rows_other.setdefault(k, {})[j] = v
        entries: dict[tuple[int, int], int] = {}
        for i, row in rows_self.items():
            acc: dict[int, int] = {}
            for k, v in row.items():
                brow = rows_other.get(k)
                if not brow:
                    continue
                for j, w in brow.items():
                    acc[j] = acc.get(j, 0) + v * w
            for j, s in acc.items():
                if s != 0:
                    entries[(i, j)] = s
        return IntegerMatrix(self.rows, other.cols, entries, entry_limit=None)

    def __eq__(self, other):
        return (
            isinstance(other, IntegerMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self._data.items())))

    def __repr__(self):
        if self.rows * self.cols <= 64:
            return f"IntegerMatrix({self.to_rows()!r})"
        return f"IntegerMatrix({self.rows}x{self.cols}, {len(self._data)} nonzero)"


@dataclass(frozen=True)
class SmithDecomposition:
    """U @ A @ V = D with U, V unimodular and D = diag(diagonal), d_i | d_{i+1}."""

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix
    diagonal: tuple[int, ...]


def _dense_diagonal(mat: list[list[int]]) -> list[int]:
    """Diagonal of the Smith form of a dense row-list matrix, without transforms.

    Pivot rule: smallest nonzero absolute value, ties by lowest (row, col).
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        # locate pivot in the trailing submatrix
        best = None
        for i in range(t, m):
            row = mat[i]
            for j in range(t, n):
                v = row[j]
                if v != 0:
                    key = (abs(v), i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            break
        _, pi, pj = best
        mat[t], mat[pi] = mat[pi], mat[t]
        if pj != t:
            for row in mat:
                row[t], row[pj] = row[pj], row[t]
        while True:
            if mat[t][t] < 0:
                mat[t] = [-v for v in mat[t]]
            p = mat[t][t]
            dirty = False
            for i in range(t + 1, m):
                if mat[i][t] != 0:
                    q = mat[i][t] // p
                    if q:
                        row_t = mat[t]
                        mat[i] = [a - q * b for a, b in zip(mat[i], row_t)]
                    if mat[i][t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                if mat[t][j] != 0:
                    q = mat[t][j] // p
                    if q:
                        for i in range(t, m):
                            mat[i][j] -= q * mat[i][t]
                    if mat[t][j] != 0:
                        dirty = True
            if dirty:
                # a smaller remainder appeared; pick the new minimum as pivot
                best = None
                for i in range(t, m):
                    for j in range(t, n):
                        v = mat[i][j]
                        if v != 0:
                            key = (abs(v), i, j)
                            if best is None or key < best:
                                best = key
                _, pi, pj = best
                mat[t], mat[pi] = mat[pi], mat[t]
                if pj != t:
                    for row in mat:
                        row[t], row[pj] = row[pj], row[t]
                continue
            # row and column are clear; enforce divisibility
            p = mat[t][t]
            offender = None
            for i in range(t + 1, m):
                row = mat[i]
                for j in range(t + 1, n):
                    if row[j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            mat[t] = [a + b for a, b in zip(mat[t], mat[offender])]
        diag.append(mat[t][t])
        t += 1
    diag += [0] * (min(m, n) - len(diag))
    return diag


def smith_diagonal(A: IntegerMatrix) -> list[int]:
    """Smith diagonal of A (no transform matrices), sparse-aware.

    Unit pivots are eliminated first with a minimum-fill heuristic; whatever
    survives is finished by the dense routine.  The two phases agree because
    each unit elimination splits off an invariant factor 1 by unimodular
    operations.
    """
    rows: dict[int, dict[int, int]] = {}
    colidx: dict[int, set[int]] = {}
    for (i, j), v in A._data.items():
        rows.setdefault(i, {})[j] = v
        colidx.setdefault(j, set()).add(i)

    def fill_score(i, j):
        return (len(rows[i]) - 1) * (len(colidx[j]) - 1)

    heap: list[tuple[int, int, int]] = []
    for i in sorted(rows):
        for j, v in rows[i].items():
            if v in (1, -1):
                heapq.heappush(heap, (fill_score(i, j), i, j))

    ones = 0
    while heap:
        s, i, j = heapq.heappop(heap)
        row = rows.get(i)
        if row is None:
            continue
        v = row.get(j)
        if v not in (1, -1):
            continue
        cur = fill_score(i, j)
        if cur > s and heap and heap[0][0] < cur:
            heapq.heappush(heap, (cur, i, j))
            continue
        # eliminate the pivot: clear column j by row operations, drop row i / col j
        prow = rows.pop(i)
        for jj in prow:
            colidx[jj].discard(i)
        targets = sorted(colidx.get(j, ()))
        for r in targets:
            rrow = rows[r]
            c = rrow.pop(j)
            f = c * v  # multiplier with f * v == c since v is a unit
            for jj, w in prow.items():
                if jj == j:
                    continue
                nv = rrow.get(jj, 0) - f * w
                if nv == 0:
                    if jj in rrow:
                        del rrow[jj]
                        colidx[jj].discard(r)
                else:
                    if jj not in rrow:
                        colidx[jj].add(r)
                    rrow[jj] = nv
                    if nv in (1, -1):
                        heapq.heappush(heap, (fill_score(r, jj), r, jj))
            if not rrow:
                del rows[r]
        colidx.pop(j, None)
        ones += 1

    # dense cleanup of whatever has no unit entries left
    rem_rows = sorted(rows)
    rem_cols = sorted({j for r in rem_rows for j in rows[r]})
    if rem_cols:
        colpos = {j: k for k, j in enumerate(rem_cols)}
        dense = [[0] * len(rem_cols) for _ in rem_rows]
        for k, r in enumerate(rem_rows):
            for j, v in rows[r].items():
                dense[k][colpos[j]] = v
        tail = [d for d in _dense_diagonal(dense) if d != 0]
    else:
        tail = []
    diag = [1] * ones + tail
    diag += [0] * (min(A.rows, A.cols) - len(diag))
    return diag


def rank(A: IntegerMatrix) -> int:
    return sum(1 for d in smith_diagonal(A) if d != 0)


def smith_normal_form(A: IntegerMatrix) -> SmithDecomposition:
    """Full Smith decomposition U @ A @ V = D with unimodular U, V.

    Dense working copy; pivot is the smallest nonzero absolute value with ties
    broken by lowest (row, col), which keeps the output deterministic.
    """
    m, n = A.rows, A.cols
    mat = A.to_rows()
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def swap_rows(a, b):
        if a != b:
            mat[a], mat[b] = mat[b], mat[a]
            U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        if a != b:
            for row in mat:
                row[a], row[b] = row[b], row[a]
            for row in V:
                row[a], row[b] = row[b], row[a]

    def add_row(src, dst, c):
        # row dst += c * row src
        mat[dst] = [a + c * b for a, b in zip(mat[dst], mat[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):
        for row in mat:
            row[dst] += c * row[src]
        for row in V:
            row[dst] += c * row[src]

    def negate_row(i):
        mat[i] = [-v for v in mat[i]]
        U[i] = [-v for v in U[i]]

    def find_pivot(t):
        best = None
        for i in range(t, m):
            row = mat[i]
            for j in range(t, n):
                v = row[j]
                if v != 0:
                    key = (abs(v), i, j)
                    if best is None or key < best:
                        best = key
        return best

    diag = []
    t = 0
    while t < min(m, n):
        best = find_pivot(t)
        if best is None:
            break
        _, pi, pj = best
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            if mat[t][t] < 0:
                negate_row(t)
            p = mat[t][t]
            dirty = False
            for i in range(t + 1, m):
                if mat[i][t] != 0:
                    q = mat[i][t] // p
                    if q:
                        add_row(t, i, -q)
                    if mat[i][t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                if mat[t][j] != 0:
                    q = mat[t][j] // p
                    if q:
                        add_col(t, j, -q)
                    if mat[t][j] != 0:
                        dirty = True
            if dirty:
                best = find_pivot(t)
                _, pi, pj = best
                swap_rows(t, pi)
                swap_cols(t, pj)
                continue
            p = mat[t][t]
            offender = None
            for i in range(t + 1, m):
                row = mat[i]
                for j in range(t + 1, n):
                    if row[j] % p != 0:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            add_row(offender, t, 1)
        diag.append(mat[t][t])
        t += 1
    diag += [0] * (min(m, n) - len(diag))
    return SmithDecomposition(
        U=IntegerMatrix.from_rows(U, entry_limit=None) if m else IntegerMatrix.zero(0, 0),
        D=IntegerMatrix.from_rows(mat, entry_limit=None) if m else IntegerMatrix.zero(0, n),
        V=IntegerMatrix.from_rows(V, entry_limit=None) if n else IntegerMatrix.zero(0, 0),
        diagonal=tuple(diag),
    )


def homology_of_pair(d_in: IntegerMatrix, d_out: IntegerMatrix) -> FgAbelianGroup:
    """ker(d_out) / im(d_in) for a chain segment  C_{n+1} --d_in--> C_n --d_out--> C_{n-1}.

    Requires d_out @ d_in = 0.  The kernel of d_out is a direct summand of the
    middle lattice, so the invariant factors of d_in as a map into that kernel
    equal its invariant factors into the full lattice; the quotient is then
      Z^(dim C_n - rank d_out - rank d_in)  +  sum of Z/d over nonunit Smith
    diagonal entries d of d_in.
    """
    if d_out.cols != d_in.rows:
        raise ValueError(
            f"middle dimensions disagree: d_out has {d_out.cols} columns, "
            f"d_in has {d_in.rows} rows"
        )
    if not d_out.matmul(d_in).is_zero():
        raise NotAComplex("d_out @ d_in is not zero")
    middle = d_out.cols
    r_out = rank(d_out)
    diag_in = smith_diagonal(d_in)
    r_in = sum(1 for d in diag_in if d != 0)
    free = middle - r_out - r_in
    torsion = tuple(d for d in diag_in if d > 1)
    return FgAbelianGroup(free, torsion)
