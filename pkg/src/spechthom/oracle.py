"""Brute-force ground truth built from explicit permutation modules.

The permutation module attached to a composition mu has a basis indexed by
row-standard bijective fillings of mu, with the standard three-case action
of the algebra generators.  The cell module of a partition lambda is
realized as the quotient of that module by the right ideal N generated by
the coset-sum elements h_{d,t}; N is computed by seeding with those
elements and closing under all generators while maintaining a sparse
row-echelon basis.  The codimension must come out equal to the number of
standard tableaux, which is checked at construction.

Everything here works over a specialized field, never over the symbolic
ring: the point of the oracle is to validate the symbolic machinery by
independent means at small n.
"""

from __future__ import annotations

import functools
import itertools
import math
import os
from dataclasses import dataclass

from . import _linalg
from .qarith import FieldConfig
from .tableaux import (Composition, Partition, TypedTableau, count_standard,
                       semistandard_tableaux)

__all__ = ["SizeGuardError", "PermModule", "ModuleVector", "SpechtQuotient",
           "perm_module", "apply_h", "specht_quotient", "theta_image",
           "hom_oracle", "coset_reps"]

_MAX_N = 8


class SizeGuardError(ValueError):
    """The requested module is larger than the configured desk-scale bound."""


def _guards() -> tuple[int, int]:
    """(max n, max dimension); SPECHT_HOM_MAX_DIM lifts both."""
    env = os.environ.get("SPECHT_HOM_MAX_DIM")
    if env:
        return (10 ** 9, int(env))
    return (_MAX_N, 10 ** 6)


# -- permutations -------------------------------------------------------

def _compose(u: tuple, v: tuple) -> tuple:
    """Right-to-left application: (u then v), i.e. (uv)(k) = v(u(k))."""
    return tuple(v[u[k] - 1] for k in range(len(u)))


def _inversions(w: tuple) -> int:
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def reduced_word(w: tuple) -> list[int]:
    """A reduced word for w as a product of adjacent transpositions
    s_{i1} ... s_{ik} applied left to right; its length equals the
    inversion number of w."""
    w = list(w)
    inv = _inversions(tuple(w))
    word_rev: list[int] = []
    pos = {v: i for i, v in enumerate(w)}
    while True:
        i = None
        for v in range(1, len(w)):
            if pos[v] > pos[v + 1]:
                i = v
                break
        if i is None:
            break
        # right-multiplying by s_i swaps the values i, i+1
        pi, pj = pos[i], pos[i + 1]
        w[pi], w[pj] = w[pj], w[pi]
        pos[i], pos[i + 1] = pj, pi
        word_rev.append(i)
    word = list(reversed(word_rev))
    if len(word) != inv:
        raise AssertionError("reduced word length differs from inversions")
    return word


def coset_reps(m: int, eta: Composition, n: int) -> list[tuple]:
    """Minimal-length coset representatives attached to the letters
    m+1 .. m+|eta|, as permutations of 1..n (one-line notation).

    A representative corresponds to a row-standard filling of the shape
    eta with those letters: it sends the letters in row-order to the
    letters as placed.
    """
    total = eta.n
    letters = list(range(m + 1, m + total + 1))
    if letters and letters[-1] > n:
        raise ValueError("letter range exceeds n")
    reps = []
    parts = [p for p in eta.parts]

    def distributions(pool: tuple, shape: list[int]):
        if not shape:
            yield ()
            return
        head, *tail = shape
        for choice in itertools.combinations(pool, head):
            rest = tuple(x for x in pool if x not in choice)
            for others in distributions(rest, tail):
                yield (choice,) + others

    for rows in distributions(tuple(letters), parts):
        flat = [x for row in rows for x in row]
        w = list(range(1, n + 1))
        for src, dst in zip(letters, flat):
            w[src - 1] = dst
        reps.append(tuple(w))
    return reps


# -- permutation modules -------------------------------------------------

SAME, UP, DOWN = 0, 1, 2


@dataclass(frozen=True)
class PermModule:
    """The permutation module of a composition, over no field in
    particular: the basis (row-standard bijective fillings) and the
    combinatorial action table are field-independent.

    ``action[i-1][j]`` describes basis vector j under the i-th generator:
    (SAME, j) for q * self, (UP, k) for a plain swap to k, (DOWN, k) for
    q * swap + (q - 1) * self.
    """

    mu: Composition
    fillings: tuple
    index: dict
    action: tuple

    @property
    def dim(self) -> int:
        return len(self.fillings)

    @property
    def n(self) -> int:
        return self.mu.n


def _row_standard_fillings(mu: Composition):
    """Bijective fillings with strictly increasing rows, as row tuples."""
    n = mu.n
    parts = list(mu.parts)

    def rec(pool: tuple, shape: list[int]):
        if not shape:
            yield ()
            return
        head, *tail = shape
        for choice in itertools.combinations(pool, head):
            rest = tuple(x for x in pool if x not in choice)
            for others in rec(rest, tail):
                yield (choice,) + others

    return rec(tuple(range(1, n + 1)), parts)


def _perm_of_filling(mu: Composition, rows: tuple) -> tuple:
    """The permutation sending the row-order filling to ``rows``."""
    n = mu.n
    w = [0] * n
    k = 1
    for row in rows:
        for x in row:
            w[k - 1] = x
            k += 1
    return tuple(w)


@functools.lru_cache(maxsize=256)
def _perm_module_cached(mu_parts: tuple) -> PermModule:
    mu = Composition(mu_parts)
    n = mu.n
    max_n, max_dim = _guards()
    if n > max_n:
        raise SizeGuardError(f"n = {n} exceeds the oracle bound {max_n}")
    dim = math.factorial(n)
    for p in mu.parts:
        dim //= math.factorial(p)
    if dim > max_dim:
        raise SizeGuardError(f"module dimension {dim} exceeds the guard")
    fillings = sorted(_row_standard_fillings(mu),
                      key=lambda rows: (_inversions(_perm_of_filling(mu, rows)),
                                        rows))
    index = {rows: i for i, rows in enumerate(fillings)}
    rowof = []
    for rows in fillings:
        table = {}
        for r, row in enumerate(rows):
            for x in row:
                table[x] = r
        rowof.append(table)
    action = []
    for i in range(1, n):
        col = []
        for j, rows in enumerate(fillings):
            ri, rj = rowof[j][i], rowof[j][i + 1]
            if ri == rj:
                col.append((SAME, j))
            else:
                swapped = tuple(
                    tuple(sorted(x + 1 if x == i else x - 1 if x == i + 1
                                 else x for x in row))
                    for row in rows)
                k = index[swapped]
                col.append((UP, k) if ri < rj else (DOWN, k))
        action.append(tuple(col))
    return PermModule(mu, tuple(fillings), index, tuple(action))


def perm_module(mu: Composition, f: FieldConfig | None = None) -> PermModule:
    """The permutation module of mu.  The field argument is accepted for
    symmetry with the rest of the oracle; the module data itself is
    field-independent."""
    return _perm_module_cached(tuple(mu.parts))


# -- vectors over a field ------------------------------------------------

def _apply_gen(coeffs: dict, module: PermModule, i: int, f: FieldConfig,
               q, qm1) -> dict:
    out: dict = {}
    col = module.action[i - 1]
    for j, c in coeffs.items():
        kind, k = col[j]
        if kind == SAME:
            v = f.vmul(c, q)
            prev = out.get(j)
            v = f.vadd(prev, v) if prev is not None else v
            if f.vis_zero(v):
                out.pop(j, None)
            else:
                out[j] = v
        elif kind == UP:
            prev = out.get(k)
            v = f.vadd(prev, c) if prev is not None else c
            if f.vis_zero(v):
                out.pop(k, None)
            else:
                out[k] = v
        else:
            v = f.vmul(c, q)
            prev = out.get(k)
            v = f.vadd(prev, v) if prev is not None else v
            if f.vis_zero(v):
                out.pop(k, None)
            else:
                out[k] = v
            w = f.vmul(c, qm1)
            prev = out.get(j)
            w = f.vadd(prev, w) if prev is not None else w
            if f.vis_zero(w):
                out.pop(j, None)
            else:
                out[j] = w
    return out


@dataclass
class ModuleVector:
    """A sparse vector over the row-standard basis of a permutation module
    (or over a quotient of it), with exact field coefficients."""

    module: PermModule
    field: FieldConfig
    coeffs: dict

    @classmethod
    def basis_vector(cls, module: PermModule, f: FieldConfig,
                     j: int = 0) -> "ModuleVector":
        return cls(module, f, {j: f.one})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, ModuleVector):
            return NotImplemented
        return (self.module is other.module and self.field == other.field
                and self.coeffs == other.coeffs)

    def apply_gen(self, i: int) -> "ModuleVector":
        f = self.field
        q = f.root
        qm1 = f.vsub(q, f.one)
        return ModuleVector(self.module, f,
                            _apply_gen(self.coeffs, self.module, i, f, q, qm1))

    def apply_word(self, word) -> "ModuleVector":
        f = self.field
        q = f.root
        qm1 = f.vsub(q, f.one)
        coeffs = self.coeffs
        for i in word:
            coeffs = _apply_gen(coeffs, self.module, i, f, q, qm1)
        return ModuleVector(self.module, f, coeffs)

    def add(self, other: "ModuleVector") -> "ModuleVector":
        f = self.field
        out = dict(self.coeffs)
        for j, c in other.coeffs.items():
            prev = out.get(j)
            v = f.vadd(prev, c) if prev is not None else c
            if f.vis_zero(v):
                out.pop(j, None)
            else:
                out[j] = v
        return ModuleVector(self.module, f, out)

    def scale(self, c) -> "ModuleVector":
        f = self.field
        if f.vis_zero(c):
            return ModuleVector(self.module, f, {})
        return ModuleVector(self.module, f,
                            {j: f.vmul(c, x) for j, x in self.coeffs.items()})


def apply_h(v: ModuleVector, m: int, eta: Composition) -> ModuleVector:
    """Apply the coset-sum operator attached to (m, eta): the sum of the
    basis elements indexed by the minimal coset representatives on letters
    m+1 .. m+|eta|."""
    out: dict = {}
    f = v.field
    for w in coset_reps(m, eta, v.module.n):
        word = reduced_word(w)
        piece = v.apply_word(word)
        for j, c in piece.coeffs.items():
            prev = out.get(j)
            s = f.vadd(prev, c) if prev is not None else c
            if f.vis_zero(s):
                out.pop(j, None)
            else:
                out[j] = s
    return ModuleVector(v.module, f, out)


# -- the cell-module quotient ---------------------------------------------

class SpechtQuotient:
    """The cell module of a partition, as an explicit quotient.

    The subspace N (the right ideal generated by the coset-sum elements) is
    held as a sparse row-echelon basis keyed by pivot; the classes of the
    non-pivot basis vectors form a basis of the quotient, and reduction
    against the echelon rows is the projection.  The codimension is checked
    against the standard-tableau count at construction time.
    """

    def __init__(self, lambda_: Partition, f: FieldConfig):
        self.lambda_ = lambda_
        self.field = f
        self.ambient = perm_module(lambda_.as_composition())
        self._rows: dict[int, tuple[dict, tuple]] = {}
        self._build()
        pivots = set(self._rows)
        self.quotient_coords = [j for j in range(self.ambient.dim)
                                if j not in pivots]
        self.coord_index = {j: k for k, j in enumerate(self.quotient_coords)}
        expected = count_standard(lambda_.parts)
        if len(self.quotient_coords) != expected:
            raise AssertionError(
                f"quotient of {lambda_} has dimension "
                f"{len(self.quotient_coords)}, expected {expected}; "
                "this indicates a bug, not bad input")
        self._theta_cache: dict = {}

    # subspace construction

    def _seeds(self) -> list[dict]:
        lam = self.lambda_
        f = self.field
        out = []
        for d in range(1, len(lam)):
            for t in range(1, lam[d] + 1):
                v = ModuleVector.basis_vector(self.ambient, f, 0)
                seed = apply_h(v, lam.prefix(d - 1), Composition((lam[d - 1], t)))
                out.append(seed.coeffs)
        return out

    def _reduce(self, vec: dict) -> dict:
        """Reduce fully against the echelon rows (pivot = max index)."""
        f = self.field
        rows = self._rows
        vec = dict(vec)
        out: dict = {}
        while vec:
            j = max(vec)
            c = vec.pop(j)
            hit = rows.get(j)
            if hit is None:
                out[j] = c
                continue
            row, inv = hit
            factor = f.vmul(c, inv)
            for k, x in row.items():
                if k == j:
                    continue
                prev = vec.get(k)
                v = f.vsub(prev if prev is not None else f.zero,
                           f.vmul(factor, x))
                if f.vis_zero(v):
                    vec.pop(k, None)
                else:
                    vec[k] = v
        return out

    def _build(self):
        f = self.field
        q = f.root
        qm1 = f.vsub(q, f.one)
        n = self.ambient.n
        pending = self._seeds()
        while pending:
            vec = self._reduce(pending.pop())
            if not vec:
                continue
            # the reduced remainder is supported on non-pivot coordinates;
            # its largest one becomes a new pivot
            j = max(vec)
            self._rows[j] = (vec, f.vinv(vec[j]))
            for i in range(1, n):
                pending.append(_apply_gen(vec, self.ambient, i, f, q, qm1))

    # quotient interface

    @property
    def dim(self) -> int:
        return len(self.quotient_coords)

    @property
    def subspace_dim(self) -> int:
        return len(self._rows)

    def project(self, v: ModuleVector) -> ModuleVector:
        """Canonical representative of the class of v: the reduction mod N,
        supported on non-pivot coordinates."""
        return ModuleVector(self.ambient, self.field, self._reduce(v.coeffs))

    def project_dense(self, v: ModuleVector) -> list:
        red = self._reduce(v.coeffs)
        out = [self.field.zero] * self.dim
        for j, c in red.items():
            out[self.coord_index[j]] = c
        return out

    def class_rep(self, coord: int) -> ModuleVector:
        """The basis vector of one quotient coordinate."""
        return ModuleVector.basis_vector(self.ambient, self.field,
                                         self.quotient_coords[coord])

    def theta(self, S: TypedTableau) -> ModuleVector:
        """Projected image of the map indexed by S (see theta_image)."""
        cached = self._theta_cache.get(S)
        if cached is None:
            cached = theta_image(S, self)
            self._theta_cache[S] = cached
        return cached


@functools.lru_cache(maxsize=256)
def _specht_cached(lam_parts: tuple, e: int, p: int) -> SpechtQuotient:
    return SpechtQuotient(Partition(lam_parts), FieldConfig(e, p))


def specht_quotient(lambda_: Partition, f: FieldConfig) -> SpechtQuotient:
    """The cell-module quotient for lambda over the given field, cached."""
    return _specht_cached(lambda_.parts, f.e, f.p)


def _fillings_with_pattern(S: TypedTableau):
    """Bijective row-standard fillings whose row pattern is S: for each
    value i, distribute the letters of the i-th group among the rows with
    the multiplicities S prescribes."""
    a = len(S.shape)
    groups = []
    start = 1
    for i, size in enumerate(S.type_.parts, start=1):
        letters = tuple(range(start, start + size))
        start += size
        groups.append((i, letters))

    def rec(gi: int, rows_acc: tuple):
        if gi == len(groups):
            yield rows_acc
            return
        i, letters = groups[gi]
        mults = [S.cnt(i, j) for j in range(1, a + 1)]

        def distribute(pool: tuple, j: int, acc: tuple):
            if j > a:
                yield acc
                return
            need = mults[j - 1]
            if need == 0:
                yield from distribute(pool, j + 1, acc + ((),))
                return
            for choice in itertools.combinations(pool, need):
                rest = tuple(x for x in pool if x not in choice)
                yield from distribute(rest, j + 1, acc + (choice,))

        for assignment in distribute(letters, 1, ()):
            merged = tuple(rows_acc[j] + assignment[j] for j in range(a))
            yield from rec(gi + 1, merged)

    base = tuple(() for _ in range(a))
    for rows in rec(0, base):
        yield tuple(tuple(sorted(r)) for r in rows)


def theta_image(S: TypedTableau, sq: SpechtQuotient) -> ModuleVector:
    """The image in the quotient of the generator under the map indexed by
    S: the sum over bijective row-standard fillings with row pattern S of
    the generator pushed along the corresponding basis permutation."""
    if S.shape != sq.lambda_:
        raise ValueError("tableau shape does not match the quotient")
    f = sq.field
    # pushing the generator along the basis permutation of a filling lands
    # exactly on that filling's basis vector, so the image is an indicator sum
    total: dict = {}
    for rows in _fillings_with_pattern(S):
        total[sq.ambient.index[rows]] = f.one
    return sq.project(ModuleVector(sq.ambient, f, total))


def _row_stabilizer_gens(mu: Partition) -> list[int]:
    """Generators i such that i and i+1 share a row of the row-order
    filling of mu."""
    out = []
    offset = 0
    for p in mu.parts:
        out.extend(range(offset + 1, offset + p))
        offset += p
    return out


def hom_oracle(mu: Partition, lambda_: Partition,
               f: FieldConfig) -> tuple[int, int]:
    """Dimensions (hom_dim, ehom_dim) of the maps from the mu-cell module
    to the lambda-cell module, computed inside the explicit quotient.

    hom_dim counts quotient vectors killed by every row-stabilizer
    eigenvector condition and every coset-sum operator; ehom_dim counts the
    same solutions restricted to the span of the semistandard map images.
    """
    if mu.n != lambda_.n:
        raise ValueError("partitions of different n")
    sq = specht_quotient(lambda_, f)
    Q = sq.dim
    n = mu.n
    # matrices of the constraint operators on the quotient
    constraints: list[list[list]] = []   # each: Q x Q, rows indexed by input
    q = f.root
    reps = [sq.class_rep(u) for u in range(Q)]
    for i in _row_stabilizer_gens(mu):
        mat = []
        for u in range(Q):
            img = reps[u].apply_gen(i)
            img = img.add(reps[u].scale(f.vneg(q)))
            mat.append(sq.project_dense(img))
        constraints.append(mat)
    b = len(mu)
    for d in range(1, b):
        for t in range(1, mu[d] + 1):
            mat = []
            for u in range(Q):
                img = apply_h(reps[u], mu.prefix(d - 1),
                              Composition((mu[d - 1], t)))
                mat.append(sq.project_dense(img))
            constraints.append(mat)
    # unknown vector x over quotient coordinates; condition rows say
    # sum_u x_u * M[u][w] = 0 for every operator M and output coordinate w
    rows = []
    for mat in constraints:
        for w in range(Q):
            rows.append([mat[u][w] for u in range(Q)])
    rank, _ = _linalg.rank_and_nullspace(rows, Q, f)
    hom_dim = Q - rank
    # restrict to the span of the semistandard map images
    tabs = semistandard_tableaux(lambda_, mu.as_composition())
    thetas = [sq.project_dense(sq.theta(S)) for S in tabs]
    ns = len(tabs)
    if ns == 0:
        return hom_dim, 0
    theta_rank, _ = _linalg.rank_and_nullspace(
        [list(col) for col in zip(*thetas)] if thetas else [], ns, f)
    rows2 = []
    for mat in constraints:
        for w in range(Q):
            rows2.append([
                _dot(f, thetas[s], [mat[u][w] for u in range(Q)])
                for s in range(ns)])
    rank2, _ = _linalg.rank_and_nullspace(rows2, ns, f)
    ehom_dim = (ns - rank2) - (ns - theta_rank)
    return hom_dim, ehom_dim


def _dot(f: FieldConfig, a: list, b: list):
    acc = f.zero
    for x, y in zip(a, b):
        if not (f.vis_zero(x) or f.vis_zero(y)):
            acc = f.vadd(acc, f.vmul(x, y))
    return acc
