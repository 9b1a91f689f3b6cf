"""The matrix method for homomorphism spaces between cell modules.

For a pair of partitions (lambda, mu) within the method's domain, the space
of module maps is cut out by finitely many linear conditions indexed by
coset-sum operators, one per (d, t).  Relative to the semistandard bases on
both sides those conditions assemble into a single matrix over Z[q, q^-1]
with closed-form entries; after specializing q to a root of unity the
dimension of the homomorphism space is the corank.  The matrix is built
once symbolically and can be specialized to any number of fields.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import _linalg
from .qarith import FieldConfig, FieldElem, LaurentPoly, gauss_binomial
from .tableaux import (Composition, NotApplicableError, Partition,
                       TypedTableau, algorithm_applicable, arrow_relates,
                       dominates, nu_dt, semistandard_tableaux)

__all__ = ["HomMatrix", "HomResult", "NotApplicableError", "entry",
           "build_matrix", "corank", "hom_dim"]


def _binom2(m: int) -> int:
    return m * (m - 1) // 2


def entry(T: TypedTableau, U: TypedTableau, d: int, t: int) -> LaurentPoly:
    """The matrix entry pairing column T (semistandard, type mu) with row
    (d, t, U), as an exact Laurent polynomial.  Zero unless U is an arrow
    target of T."""
    lambda_ = T.shape
    mu = Partition(T.type_.parts)
    if not algorithm_applicable(lambda_, mu):
        raise NotApplicableError(
            f"pair ({lambda_}), ({mu}) outside the matrix method")
    a, b = len(lambda_), len(mu)
    if U.type_ != nu_dt(T.type_, d, t):
        return LaurentPoly.zero()
    if not arrow_relates(T, U, d):
        return LaurentPoly.zero()
    if d >= a:
        out = LaurentPoly.one()
        for j in range(1, a + 1):
            diff = U.cnt(d, j) - T.cnt(d, j)
            out = out * gauss_binomial(U.cnt(d, j), T.cnt(d, j)).shifted(
                T.cnt_below(d, j) * diff)
        return out
    # 1 <= d < a: signed closed form
    s = T.cnt(d + 1, d + 1) - U.cnt(d + 1, d + 1)
    sign = -1 if s % 2 else 1
    exp = -_binom2(s + 1) + U.cnt(d + 1, d + 1) * (
        U.cnt(d, d) - T.cnt(d, d) + U.cnt(d + 1, d + 1) - T.cnt(d + 1, d + 1))
    out = LaurentPoly.monomial(exp, sign)
    out = out * gauss_binomial(U.cnt(d, d) - T.cnt(d + 1, d + 1),
                               T.cnt(d, d) - U.cnt(d + 1, d + 1))
    for j in range(1, d):
        diff = U.cnt(d, j) - T.cnt(d, j)
        out = out * gauss_binomial(U.cnt(d, j), T.cnt(d, j)).shifted(
            T.cnt_below(d, j) * diff)
    for i in range(d + 2, b + 1):
        diff = U.cnt(i, d + 1) - T.cnt(i, d + 1)
        out = out * gauss_binomial(U.cnt(i, d + 1), T.cnt(i, d + 1)).shifted(
            T.cnt_lt(i, d + 1) * diff)
    return out


@dataclass(frozen=True)
class HomMatrix:
    """The symbolic condition matrix for one pair of partitions.

    Columns are indexed by semistandard tableaux of shape lambda and type
    mu in reading-word order; rows by triples (d, t, U) with U semistandard
    of type nu(d, t), ordered by (d, t) then reading word.  Entries are
    stored sparsely over Z[q, q^-1].
    """

    lambda_: Partition
    mu: Partition
    columns: tuple
    rows: tuple
    entries: dict

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.columns))


@functools.lru_cache(maxsize=4096)
def _build_matrix_cached(lam_parts: tuple, mu_parts: tuple) -> HomMatrix:
    lambda_ = Partition(lam_parts)
    mu = Partition(mu_parts)
    if not algorithm_applicable(lambda_, mu):
        raise NotApplicableError(
            f"pair ({lambda_}), ({mu}) outside the matrix method")
    mu_comp = mu.as_composition()
    columns = tuple(semistandard_tableaux(lambda_, mu_comp))
    rows = []
    b = len(mu)
    for d in range(1, b):
        for t in range(1, mu[d] + 1):
            for U in semistandard_tableaux(lambda_, nu_dt(mu_comp, d, t)):
                rows.append((d, t, U))
    entries = {}
    for ci, T in enumerate(columns):
        for ri, (d, t, U) in enumerate(rows):
            val = entry(T, U, d, t)
            if not val.is_zero():
                entries[(ri, ci)] = val
    return HomMatrix(lambda_, mu, columns, tuple(rows), entries)


def build_matrix(lambda_: Partition, mu: Partition) -> HomMatrix:
    """Build (and cache) the symbolic matrix for the pair."""
    if lambda_.n != mu.n:
        raise ValueError("partitions of different n")
    return _build_matrix_cached(lambda_.parts, mu.parts)


@dataclass(frozen=True)
class HomResult:
    """Outcome of a dimension computation: the corank, the field, the
    matrix shape and (optionally) a kernel basis expressed over the column
    tableaux."""

    dim: int
    field: FieldConfig
    matrix_shape: tuple[int, int]
    kernel: list | None = None


def corank(m: HomMatrix, f: FieldConfig,
           want_kernel: bool = False) -> HomResult:
    """Specialize the matrix and compute corank = #columns - rank by exact
    Gaussian elimination; optionally return a kernel basis."""
    nrows, ncols = m.shape
    dense = [[f.zero] * ncols for _ in range(nrows)]
    for (ri, ci), poly in m.entries.items():
        dense[ri][ci] = f.vspecialize(poly)
    rank, null = _linalg.rank_and_nullspace(dense, ncols, f,
                                            want_nullspace=want_kernel)
    kernel = None
    if want_kernel:
        kernel = [[FieldElem(f, v) for v in vec] for vec in null]
    return HomResult(dim=ncols - rank, field=f, matrix_shape=(nrows, ncols),
                     kernel=kernel)


def hom_dim(lambda_: Partition, mu: Partition, f: FieldConfig,
            want_kernel: bool = False) -> HomResult:
    """Dimension of the homomorphism space from the mu-cell module to the
    lambda-cell module over the given field (the semistandard-basis space;
    at e = 2 with lambda not 2-restricted the full Hom space may be
    larger).

    Fast paths: equal partitions give 1; a dominance failure gives 0.
    Otherwise the pair must lie in the matrix method's domain, else
    :class:`NotApplicableError` is raised rather than guessing.
    """
    if lambda_.n != mu.n:
        raise ValueError("partitions of different n")
    if lambda_ == mu:
        kernel = [[FieldElem(f, f.one)]] if want_kernel else None
        return HomResult(dim=1, field=f, matrix_shape=(0, 1), kernel=kernel)
    if not dominates(lambda_, mu):
        return HomResult(dim=0, field=f, matrix_shape=(0, 0),
                         kernel=[] if want_kernel else None)
    m = build_matrix(lambda_, mu)
    return corank(m, f, want_kernel=want_kernel)
