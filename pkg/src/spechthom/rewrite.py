"""The q-rewriting calculus on tableau-indexed homomorphisms.

A :class:`HomCombination` is a formal Z[q, q^-1]-linear combination of maps
indexed by row-standard tableaux of a common shape and type; it stands for a
module homomorphism into the corresponding cell module.  Three operations
act on these combinations:

* :func:`expand_h` -- the image of a map under the coset-sum operator that
  moves t units of value d+1 to value d;
* :func:`lemma7_down` / :func:`lemma7_up` -- rewrite one map as a
  combination of maps whose value-d entries have been moved across the
  boundary between rows r and r+1, with explicit q-power and Gaussian
  binomial coefficients;
* :func:`semistandardize` -- drive a combination onto the semistandard
  basis by repeated downward rewrites, giving up after a step budget since
  no termination guarantee is known.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .qarith import LaurentPoly, gauss_binomial
from .tableaux import Composition, Partition, TypedTableau, nu_dt


class Undetermined:
    """Sentinel: the rewriting budget ran out before reaching the
    semistandard basis.  Falsy, unique, and never silently wrong."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self):
        return False

    def __repr__(self):
        return "UNDETERMINED"


UNDETERMINED = Undetermined()


@dataclass(frozen=True)
class HomCombination:
    """A formal combination sum of coeff * Theta_S over row-standard
    tableaux S of one shape and type; zero coefficients are never stored."""

    shape: Partition
    type_: Composition
    terms: dict

    @classmethod
    def build(cls, shape: Partition, type_: Composition,
              terms: dict) -> "HomCombination":
        clean = {}
        for tab, coeff in terms.items():
            if tab.shape != shape or tab.type_ != type_:
                raise ValueError("term with mismatched shape or type")
            if coeff:
                clean[tab] = coeff
        return cls(shape, type_, clean)

    @classmethod
    def single(cls, tab: TypedTableau,
               coeff: LaurentPoly | None = None) -> "HomCombination":
        if coeff is None:
            coeff = LaurentPoly.one()
        return cls.build(tab.shape, tab.type_, {tab: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, tab: TypedTableau) -> LaurentPoly:
        return self.terms.get(tab, LaurentPoly.zero())

    def scaled(self, c: LaurentPoly) -> "HomCombination":
        if c.is_zero():
            return HomCombination(self.shape, self.type_, {})
        return HomCombination(self.shape, self.type_,
                              {t: c * x for t, x in self.terms.items()})

    def __add__(self, other: "HomCombination") -> "HomCombination":
        if (self.shape, self.type_) != (other.shape, other.type_):
            raise ValueError("adding combinations of different shape or type")
        out = dict(self.terms)
        for t, x in other.terms.items():
            s = out.get(t, LaurentPoly.zero()) + x
            if s.is_zero():
                out.pop(t, None)
            else:
                out[t] = s
        return HomCombination(self.shape, self.type_, out)

    def __sub__(self, other: "HomCombination") -> "HomCombination":
        return self + other.scaled(LaurentPoly.from_int(-1))

    def __eq__(self, other):
        if not isinstance(other, HomCombination):
            return NotImplemented
        return (self.shape, self.type_, self.terms) == \
               (other.shape, other.type_, other.terms)

    def support_semistandard(self) -> bool:
        return all(t.is_semistandard() for t in self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for t in sorted(self.terms, key=lambda t: t.reading_word()):
            bits.append(f"({self.terms[t]})*[{t}]")
        return " + ".join(bits)


def _binom2(m: int) -> int:
    """The binomial coefficient m choose 2 (0 for m < 2)."""
    return m * (m - 1) // 2


def expand_h(T: TypedTableau, d: int, t: int) -> HomCombination:
    """Image of the map indexed by T under the (d, t) coset-sum operator.

    The result is a combination over tableaux S obtained from T by turning
    t entries equal to d+1 into d; the term for S carries the coefficient
    prod_j q^(T^d_{>j} * (S^d_j - T^d_j)) * gauss(S^d_j, T^d_j).
    """
    b = len(T.type_)
    if not 1 <= d < b:
        raise ValueError(f"d must satisfy 1 <= d < {b}")
    if not 1 <= t <= T.type_[d]:
        raise ValueError(f"t must satisfy 1 <= t <= {T.type_[d]}")
    a = len(T.shape)
    new_type = nu_dt(T.type_, d, t)
    avail = [T.cnt(d + 1, j) for j in range(1, a + 1)]
    terms: dict[TypedTableau, LaurentPoly] = {}

    def rec(j: int, remaining: int, counts, coeff: LaurentPoly):
        if j > a:
            if remaining == 0:
                S = TypedTableau(T.shape, new_type,
                                 tuple(tuple(r) for r in counts))
                terms[S] = terms.get(S, LaurentPoly.zero()) + coeff
            return
        hi = min(avail[j - 1], remaining)
        for x in range(hi + 1):
            if x == 0:
                rec(j + 1, remaining, counts, coeff)
                continue
            below = T.cnt_below(d, j)
            factor = gauss_binomial(T.cnt(d, j) + x, T.cnt(d, j)).shifted(
                below * x)
            rows = [list(r) for r in counts]
            rows[j - 1][d - 1] += x
            rows[j - 1][d] -= x
            rec(j + 1, remaining - x, rows, coeff * factor)

    rec(1, t, [list(r) for r in T.counts], LaurentPoly.one())
    return HomCombination.build(T.shape, new_type, terms)


def _move_vectors(total: int, caps: list[int]):
    """Vectors g >= 0 with sum(g) = total and g[i] <= caps[i]."""
    b = len(caps)

    def rec(i: int, remaining: int):
        if i == b:
            if remaining == 0:
                yield ()
            return
        tail = sum(caps[i + 1:])
        lo = max(0, remaining - tail)
        for g in range(lo, min(caps[i], remaining) + 1):
            for rest in rec(i + 1, remaining - g):
                yield (g,) + rest

    return rec(0, total)


def lemma7_down(S: TypedTableau, r: int, d: int) -> HomCombination:
    """Rewrite Theta_S by clearing every entry equal to d out of row r+1.

    All value-d entries of row r+1 move up to row r; in exchange, for each
    value i != d, g_i entries of value i move down from row r to row r+1,
    over all vectors g with total S^d_{r+1} and g_i <= S^i_r.  The empty
    sum (no such g) yields the zero combination.  Coefficients live in
    Z[q, q^-1] and may involve negative powers of q.
    """
    a, b = len(S.shape), len(S.type_)
    if not 1 <= r <= a - 1:
        raise ValueError(f"r must satisfy 1 <= r <= {a - 1}")
    if not 1 <= d <= b:
        raise ValueError(f"d must satisfy 1 <= d <= {b}")
    m = S.cnt(d, r + 1)
    if m == 0:
        return HomCombination.single(S)
    sign = -1 if m % 2 else 1
    pref_exp = -_binom2(m + 1) - m * S.cnt_lt(d, r + 1)
    caps = [0 if i == d else S.cnt(i, r) for i in range(1, b + 1)]
    terms: dict[TypedTableau, LaurentPoly] = {}
    for g in _move_vectors(m, caps):
        coeff = LaurentPoly.monomial(pref_exp + sum(g[: d - 1]), sign)
        ok = True
        for i in range(1, b + 1):
            gi = g[i - 1]
            if gi:
                factor = gauss_binomial(S.cnt(i, r + 1) + gi, gi).shifted(
                    gi * S.cnt_lt(i, r + 1))
                coeff = coeff * factor
                if coeff.is_zero():
                    ok = False
                    break
        if not ok:
            continue
        counts = [list(row) for row in S.counts]
        counts[r - 1][d - 1] += m
        counts[r][d - 1] = 0
        for i in range(1, b + 1):
            gi = g[i - 1]
            if gi:
                counts[r - 1][i - 1] -= gi
                counts[r][i - 1] += gi
        U = TypedTableau(S.shape, S.type_, tuple(tuple(row) for row in counts))
        prev = terms.get(U, LaurentPoly.zero()) + coeff
        if prev.is_zero():
            terms.pop(U, None)
        else:
            terms[U] = prev
    return HomCombination(S.shape, S.type_, terms)


def lemma7_up(S: TypedTableau, r: int, d: int) -> HomCombination:
    """Rewrite Theta_S by clearing every entry equal to d out of row r,
    moving them down to row r+1; valid only when rows r and r+1 of the
    shape have equal length."""
    a, b = len(S.shape), len(S.type_)
    if not 1 <= r <= a - 1:
        raise ValueError(f"r must satisfy 1 <= r <= {a - 1}")
    if S.shape[r - 1] != S.shape[r]:
        raise ValueError("rows r and r+1 must have equal length")
    if not 1 <= d <= b:
        raise ValueError(f"d must satisfy 1 <= d <= {b}")
    m = S.cnt(d, r)
    if m == 0:
        return HomCombination.single(S)
    sign = -1 if m % 2 else 1
    pref_exp = -_binom2(m) - m * S.cnt_gt(d, r)
    caps = [0 if i == d else S.cnt(i, r + 1) for i in range(1, b + 1)]
    terms: dict[TypedTableau, LaurentPoly] = {}
    for g in _move_vectors(m, caps):
        coeff = LaurentPoly.monomial(pref_exp - sum(g[: d - 1]), sign)
        for i in range(1, b + 1):
            gi = g[i - 1]
            if gi:
                factor = gauss_binomial(S.cnt(i, r) + gi, gi).shifted(
                    gi * S.cnt_gt(i, r))
                coeff = coeff * factor
        if coeff.is_zero():
            continue
        counts = [list(row) for row in S.counts]
        counts[r][d - 1] += m
        counts[r - 1][d - 1] = 0
        for i in range(1, b + 1):
            gi = g[i - 1]
            if gi:
                counts[r][i - 1] -= gi
                counts[r - 1][i - 1] += gi
        U = TypedTableau(S.shape, S.type_, tuple(tuple(row) for row in counts))
        prev = terms.get(U, LaurentPoly.zero()) + coeff
        if prev.is_zero():
            terms.pop(U, None)
        else:
            terms[U] = prev
    return HomCombination(S.shape, S.type_, terms)


def semistandardize(c: HomCombination, budget: int = 1000):
    """Rewrite a combination onto semistandard tableaux, if possible.

    Repeatedly rewrites the first non-semistandard term (in reading-word
    order) at its topmost column-strictness violation, using
    :func:`lemma7_down` with r one above the violating row and d the
    violating value.  Returns the resulting combination, or
    :data:`UNDETERMINED` if more than ``budget`` rewrite steps would be
    needed.  On success the answer is unique, being coordinates in a basis.
    """
    work = dict(c.terms)
    steps = 0
    while True:
        bad = None
        for tab in sorted(work, key=lambda t: t.reading_word()):
            if not tab.is_semistandard():
                bad = tab
                break
        if bad is None:
            return HomCombination(c.shape, c.type_, work)
        if steps >= budget:
            return UNDETERMINED
        steps += 1
        coeff = work.pop(bad)
        j, i = bad.first_violation()
        repl = lemma7_down(bad, j - 1, i)
        for tab, x in repl.terms.items():
            s = work.get(tab, LaurentPoly.zero()) + coeff * x
            if s.is_zero():
                work.pop(tab, None)
            else:
                work[tab] = s
