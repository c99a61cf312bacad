"""Exact sparse linear algebra over Q and Z.

Two workhorses live here:

* :class:`FractionRREF` -- an incremental reduced row echelon form over
  exact rationals, used to compute graded dimensions and to express
  dependent basis symbols in terms of independent ones.

* :func:`coker_normalize` -- given integer relation rows inside Z^n, compute
  the cokernel Z^n / rowspan as an explicit abelian group: free and torsion
  generators (Smith invariant factors) plus the expansion of every original
  basis vector over the new generators.  Elimination prefers unit pivots and
  falls back to a dense Smith normal form on the small residual block, so
  entries stay small on the structured matrices this package produces.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

Row = dict[int, int]
QRow = dict[int, Fraction]


class FractionRREF:
    """Incremental sparse RREF over Fraction, deterministic pivot choice."""

    def __init__(self):
        self._pivot_rows: dict[int, QRow] = {}

    @property
    def rank(self) -> int:
        return len(self._pivot_rows)

    @property
    def pivot_columns(self) -> set[int]:
        return set(self._pivot_rows)

    def reduce(self, row: Mapping[int, Fraction]) -> QRow:
        """Reduce a vector against the current pivots (returns a new dict)."""
        out: QRow = {c: Fraction(v) for c, v in row.items() if v}
        for col in sorted(set(out) & set(self._pivot_rows)):
            coeff = out.get(col)
            if not coeff:
                continue
            for c, v in self._pivot_rows[col].items():
                nv = out.get(c, Fraction(0)) - coeff * v
                if nv:
                    out[c] = nv
                else:
                    out.pop(c, None)
        return out

    def add_row(self, row: Mapping[int, Fraction]) -> bool:
        """Insert a row; returns True when it increased the rank."""
        reduced = self.reduce(row)
        if not reduced:
            return False
        pivot = min(reduced)
        inv = 1 / reduced[pivot]
        normalized = {c: v * inv for c, v in reduced.items()}
        for other in self._pivot_rows.values():
            coeff = other.get(pivot)
            if coeff:
                for c, v in normalized.items():
                    nv = other.get(c, Fraction(0)) - coeff * v
                    if nv:
                        other[c] = nv
                    else:
                        other.pop(c, None)
        self._pivot_rows[pivot] = normalized
        return True

    def expansion(self, column: int) -> QRow:
        """Expansion of a basis vector over the non-pivot columns."""
        row = self._pivot_rows.get(column)
        if row is None:
            return {column: Fraction(1)}
        return {c: -v for c, v in row.items() if c != column}


def rational_rank(rows: Sequence[Mapping[int, Fraction]]) -> int:
    rref = FractionRREF()
    for row in rows:
        rref.add_row(row)
    return rref.rank


def _content_reduced(row: Row) -> Row:
    g = 0
    for v in row.values():
        g = _gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


class FractionFreeEliminator:
    """Row-echelon rank over Z by two-row cross elimination, content-reduced."""

    def __init__(self):
        self._pivots: dict[int, Row] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def add_row(self, row: Mapping[int, int]) -> bool:
        r = {c: int(v) for c, v in row.items() if v}
        while r:
            col = min(r)
            pivot = self._pivots.get(col)
            if pivot is None:
                self._pivots[col] = _content_reduced(r)
                return True
            a, b = pivot[col], r[col]
            g = _gcd(a, b)
            ma, mb = a // g, b // g
            merged: Row = {}
            for c in set(r) | set(pivot):
                v = ma * r.get(c, 0) - mb * pivot.get(c, 0)
                if v:
                    merged[c] = v
            r = _content_reduced(merged)
        return False


def fraction_free_rank(rows: Sequence[Mapping[int, int]]) -> int:
    elim = FractionFreeEliminator()
    for row in rows:
        elim.add_row(row)
    return elim.rank


# ---------------------------------------------------------------------------
# integer side
# ---------------------------------------------------------------------------


@dataclass
class CokerResult:
    """Normal form of Z^ncols / rowspan(rows).

    ``invariants[k]`` describes new generator ``k``: 0 for a free Z summand,
    ``s >= 2`` for a Z/s summand.  ``expansions[c]`` writes the image of the
    original basis vector ``e_c`` over the new generators.  ``matrix_rank``
    is the rank of the input matrix over Q.
    """

    invariants: list[int]
    expansions: list[Row]
    matrix_rank: int

    @property
    def free_rank(self) -> int:
        return sum(1 for s in self.invariants if s == 0)

    @property
    def torsion(self) -> list[int]:
        return [s for s in self.invariants if s > 1]


def _reduce_against(pivot_rows: dict[int, Row], row: Row) -> Row:
    out = dict(row)
    for col in sorted(set(out) & set(pivot_rows)):
        coeff = out.get(col, 0)
        if not coeff:
            continue
        for c, v in pivot_rows[col].items():
            nv = out.get(c, 0) - coeff * v
            if nv:
                out[c] = nv
            else:
                out.pop(c, None)
    return {c: v for c, v in out.items() if v}


def _smith_with_column_ops(matrix: list[list[int]], ncols: int):
    """Dense Smith normal form tracking column operations.

    Returns ``(diag, V)`` where ``diag`` lists the diagonal entries (including
    possible zeros) and ``V`` is unimodular with ``row_span(M V) = row_span(D)``;
    coordinates transform by ``x -> x V``.
    """
    mat = [list(r) for r in matrix]
    nrows = len(mat)
    V = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def swap_cols(a: int, b: int) -> None:
        if a == b:
            return
        for r in mat:
            r[a], r[b] = r[b], r[a]
        for r in V:
            r[a], r[b] = r[b], r[a]

    def add_col(src: int, dst: int, q: int) -> None:
        # column_dst += q * column_src
        if q == 0:
            return
        for r in mat:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    t = 0
    limit = min(nrows, ncols)
    while t < limit:
        # locate the smallest nonzero entry in the trailing block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = mat[i][j]
                if v and (best is None or abs(v) < abs(best[2])):
                    best = (i, j, v)
        if best is None:
            break
        i, j, _ = best
        mat[t], mat[i] = mat[i], mat[t]
        swap_cols(t, j)
        # clear row and column t
        dirty = True
        while dirty:
            dirty = False
            pivot = mat[t][t]
            for i in range(t + 1, nrows):
                if mat[i][t]:
                    q = mat[i][t] // pivot
                    for j in range(t, ncols):
                        mat[i][j] -= q * mat[t][j]
                    if mat[i][t]:
                        mat[t], mat[i] = mat[i], mat[t]
                        dirty = True
                        break
            if dirty:
                continue
            pivot = mat[t][t]
            for j in range(t + 1, ncols):
                if mat[t][j]:
                    q = mat[t][j] // pivot
                    add_col(t, j, -q)
                    if mat[t][j]:
                        swap_cols(t, j)
                        dirty = True
                        break
        pivot = mat[t][t]
        if pivot < 0:
            for j in range(t, ncols):
                mat[t][j] = -mat[t][j]
            pivot = -pivot
        if pivot == 0:
            break
        # enforce divisibility of the trailing block
        fixed = False
        for i in range(t + 1, nrows):
            for j in range(t + 1, ncols):
                if mat[i][j] % pivot:
                    for k in range(t, ncols):
                        mat[t][k] += mat[i][k]
                    fixed = True
                    break
            if fixed:
                break
        if fixed:
            continue
        t += 1
    diag = [mat[k][k] for k in range(t)]
    return diag, V


def coker_normalize(rows: Sequence[Mapping[int, int]], ncols: int) -> CokerResult:
    """Describe Z^ncols modulo the integer span of the given rows."""
    pivot_rows: dict[int, Row] = {}
    pending: list[Row] = [
        {c: int(v) for c, v in row.items() if v} for row in rows
    ]
    pending = [r for r in pending if r]
    changed = True
    while changed:
        changed = False
        leftovers: list[Row] = []
        for raw in pending:
            row = _reduce_against(pivot_rows, raw)
            if not row:
                continue
            unit_cols = [c for c, v in row.items() if v in (1, -1)]
            if unit_cols:
                col = min(unit_cols)
                if row[col] == -1:
                    row = {c: -v for c, v in row.items()}
                for other in pivot_rows.values():
                    coeff = other.get(col)
                    if coeff:
                        for c, v in row.items():
                            nv = other.get(c, 0) - coeff * v
                            if nv:
                                other[c] = nv
                            else:
                                other.pop(c, None)
                pivot_rows[col] = row
                changed = True
            else:
                leftovers.append(row)
        pending = leftovers

    residual = []
    for raw in pending:
        row = _reduce_against(pivot_rows, raw)
        if row:
            residual.append(row)

    res_cols = sorted({c for row in residual for c in row})
    res_pos = {c: k for k, c in enumerate(res_cols)}
    dense = [[row.get(c, 0) for c in res_cols] for row in residual]
    diag, V = _smith_with_column_ops(dense, len(res_cols))

    # assemble new generators: free columns first, then the residual block
    invariants: list[int] = []
    gen_of_free_col: dict[int, int] = {}
    for c in range(ncols):
        if c not in pivot_rows and c not in res_pos:
            gen_of_free_col[c] = len(invariants)
            invariants.append(0)
    res_gen_ids: list[int | None] = []
    for k in range(len(res_cols)):
        d = diag[k] if k < len(diag) else 0
        if d == 1:
            res_gen_ids.append(None)
        else:
            res_gen_ids.append(len(invariants))
            invariants.append(d if d > 1 else 0)

    def normalize(vec: Row) -> Row:
        out: Row = {}
        for g, v in vec.items():
            s = invariants[g]
            if s > 1:
                v %= s
            if v:
                out[g] = v
        return out

    expansions: list[Row] = [dict() for _ in range(ncols)]
    for c, g in gen_of_free_col.items():
        expansions[c] = {g: 1}
    for c, k in res_pos.items():
        vec: Row = {}
        for j in range(len(res_cols)):
            gid = res_gen_ids[j]
            if gid is not None and V[k][j]:
                vec[gid] = vec.get(gid, 0) + V[k][j]
        expansions[c] = normalize(vec)
    for c, row in pivot_rows.items():
        vec: Row = {}
        for other, coeff in row.items():
            if other == c:
                continue
            for g, v in expansions[other].items():
                vec[g] = vec.get(g, 0) - coeff * v
        expansions[c] = normalize(vec)

    matrix_rank = len(pivot_rows) + sum(1 for d in diag if d != 0)
    return CokerResult(invariants=invariants, expansions=expansions, matrix_rank=matrix_rank)


def integer_rank(rows: Sequence[Mapping[int, int]], ncols: int) -> int:
    return coker_normalize(rows, ncols).matrix_rank
