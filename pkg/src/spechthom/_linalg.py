"""Exact dense Gaussian elimination over a FieldConfig.

Matrices are lists of rows; each row is a list of raw coefficient tuples
("vecs") of the field.  Pivots are chosen as the first nonzero entry
scanning down the current column, and zero tests are exact, so ranks and
nullspaces are certificates rather than estimates.
"""

from __future__ import annotations

from .qarith import FieldConfig


def rank_and_nullspace(rows: list[list[tuple]], ncols: int, f: FieldConfig,
                       want_nullspace: bool = False):
    """Row-reduce a matrix and return (rank, nullspace basis or None).

    Nullspace vectors are returned as lists of vecs, one per column, with a
    single free column set to one in each.
    """
    mat = [list(r) for r in rows]
    nrows = len(mat)
    pivot_cols: list[int] = []
    pivot_rows: list[int] = []
    row_at = 0
    for col in range(ncols):
        pivot = None
        for r in range(row_at, nrows):
            if not f.vis_zero(mat[r][col]):
                pivot = r
                break
        if pivot is None:
            continue
        mat[row_at], mat[pivot] = mat[pivot], mat[row_at]
        inv = f.vinv(mat[row_at][col])
        mat[row_at] = [f.vmul(inv, x) for x in mat[row_at]]
        for r in range(nrows):
            if r != row_at:
                c = mat[r][col]
                if not f.vis_zero(c):
                    mat[r] = [f.vsub(x, f.vmul(c, y))
                              for x, y in zip(mat[r], mat[row_at])]
        pivot_cols.append(col)
        pivot_rows.append(row_at)
        row_at += 1
        if row_at == nrows:
            break
    rank = len(pivot_cols)
    if not want_nullspace:
        return rank, None
    free_cols = [c for c in range(ncols) if c not in set(pivot_cols)]
    basis = []
    for fc in free_cols:
        vec = [f.zero] * ncols
        vec[fc] = f.one
        for pr, pc in zip(pivot_rows, pivot_cols):
            vec[pc] = f.vneg(mat[pr][fc])
        basis.append(vec)
    return rank, basis


def matvec(rows: list[list[tuple]], vec: list[tuple], f: FieldConfig):
    """Matrix times column vector, both dense."""
    out = []
    for row in rows:
        acc = f.zero
        for x, v in zip(row, vec):
            if not (f.vis_zero(x) or f.vis_zero(v)):
                acc = f.vadd(acc, f.vmul(x, v))
        out.append(acc)
    return out
