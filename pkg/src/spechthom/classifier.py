"""Closed-form dimensions for homomorphism spaces with a two-row target.

Over characteristic zero at a primitive e-th root of unity, the dimension
of the homomorphism space from the mu-cell module into the lambda-cell
module, for lambda with at most two rows and mu_1 >= lambda_2, is always 0
or 1 and is decided by explicit congruence conditions on the parts of mu.
The dispatch runs through mutually exclusive regimes: one-row lambda;
equal first parts (strip the first row and recurse); two- and three-part
mu; mu with at least four parts and third part e-1; and the "good shape"
family, whose candidates are built from mu by gluing all parts equal to
e-1 onto the first two rows.

All congruences are modulo e.  Everything here is a pure function of the
part sequences; agreement with the matrix method is enforced by the test
suite over exhaustive sweeps.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tableaux import Partition

__all__ = ["TwoRowQuery", "GoodShapeData", "residue", "good_shape",
           "classify"]


def residue(m: int, e: int) -> int:
    """The representative of m modulo e lying in [0, e)."""
    if m < 0:
        raise ValueError("residues are taken of nonnegative integers")
    if e < 2:
        raise ValueError("modulus must be at least 2")
    return m % e


@dataclass(frozen=True)
class TwoRowQuery:
    """A classification query: lambda with at most two rows, mu arbitrary
    with mu_1 >= lambda_2, over characteristic zero at quantum
    characteristic e."""

    lambda_: Partition
    mu: Partition
    e: int

    def __post_init__(self):
        if len(self.lambda_) > 2:
            raise ValueError("lambda must have at most two rows")
        if self.lambda_.n != self.mu.n:
            raise ValueError("partitions of different n")
        if self.e < 2:
            raise ValueError("e must be at least 2")
        if self.mu.part(1) < self.lambda_.part(2):
            raise ValueError("requires mu_1 >= lambda_2")


@dataclass(frozen=True)
class GoodShapeData:
    """Outcome of the good-shape test; the derived data (the count of parts
    equal to e-1, the glued two-row partition and the positions of the
    first two exceptional parts) is populated only when the shape is
    good."""

    is_good: bool
    n_e_minus_1: int
    mu_star: tuple | None = None
    alpha: int | None = None
    beta: int | None = None


def _n_k(mu: Partition, k: int) -> int:
    return sum(1 for p in mu.parts if p == k)


def good_shape(mu: Partition, e: int) -> GoodShapeData:
    """Evaluate the good-shape conditions on mu.

    Good shape requires at least four parts, first and second parts
    congruent to -2, third part at most 2e-2, at most two parts from the
    third on avoiding {2e-2, e-1}, and, when parts equal to e-1 exist, at
    most one exceptional part on each side of e-1.
    """
    if e < 2:
        raise ValueError("e must be at least 2")
    b = len(mu)
    n1 = _n_k(mu, e - 1)
    if b < 4:
        return GoodShapeData(False, n1)
    if (mu[0] + 2) % e or (mu[1] + 2) % e:
        return GoodShapeData(False, n1)
    if mu[2] > 2 * e - 2:
        return GoodShapeData(False, n1)
    exceptional = [i for i in range(3, b + 1)
                   if mu[i - 1] not in (2 * e - 2, e - 1)]
    if len(exceptional) > 2:
        return GoodShapeData(False, n1)
    if n1 > 0:
        if sum(1 for i in range(3, b + 1) if mu[i - 1] < e - 1) > 1:
            return GoodShapeData(False, n1)
        if sum(1 for i in range(3, b + 1) if e - 1 < mu[i - 1] < 2 * e - 2) > 1:
            return GoodShapeData(False, n1)
    mu_star = (mu[0] + (n1 + 1) * (e - 1), mu[1] + (n1 - 1) * (e - 1))
    alpha = exceptional[0] if exceptional else b + 1
    later = [i for i in exceptional if i > alpha]
    beta = later[0] if later else b + 1
    return GoodShapeData(True, n1, mu_star, alpha, beta)


def _one_row(mu: tuple, e: int) -> int:
    """lambda a single row."""
    b = len(mu)
    if b <= 1:
        return 1
    if (mu[0] + 1) % e == 0 and all(mu[i] == e - 1 for i in range(1, b - 1)):
        return 1
    return 0


def _two_part(la: tuple, mu: tuple, e: int) -> int:
    """mu with exactly two parts, la_1 > mu_1."""
    if la[0] - mu[0] < e and (mu[0] - la[1] + 1) % e == 0:
        return 1
    return 0


def _three_part(la: tuple, mu: tuple, e: int) -> int:
    """mu with exactly three parts, la_1 > mu_1."""
    la1, la2 = la
    mu1, mu2, mu3 = mu
    if mu2 == e - 1 and (mu1 - la2 + 1) % e == 0 and la2 <= mu3:
        return 1
    if ((mu2 + 1) % e == 0 and (mu1 - la2 + 1) % e == 0 and la2 >= mu3
            and mu3 <= e - 1 and la1 - mu1 < e):
        return 1
    if (mu1 + 2) % e == 0 and mu2 == la2 and mu3 <= e - 1:
        return 1
    if ((mu1 + 2) % e == 0 and mu2 == la2 and mu3 <= 2 * e - 2
            and (la2 + 1) % e > mu3 % e):
        return 1
    if ((mu1 + 2) % e == 0 and mu2 != la2 and la2 > mu3
            and (la1 - mu2 + 1) % e == 0 and mu3 <= e - 1
            and la1 - mu1 < e):
        return 1
    return 0


def _third_part_special(la: tuple, mu: tuple, e: int) -> int:
    """mu with at least four parts and mu_3 = e - 1, la_1 > mu_1."""
    la1, la2 = la
    mu1, mu2 = mu[0], mu[1]
    b = len(mu)
    if mu[b - 2] != e - 1:
        return 0
    if mu2 == e - 1 and (mu1 - la2 + 1) % e == 0:
        return 1
    if ((mu2 + 1) % e == 0 and (mu1 - la2 + 1) % e == 0 and la2 >= mu2
            and la1 < mu1 + mu2 and la1 - mu1 < e):
        return 1
    if ((mu1 + 2) % e == 0 and (la1 - mu2 + 1) % e == 0 and la2 >= mu2
            and la1 < mu1 + mu2 and la1 - mu1 < e):
        return 1
    if ((mu1 + 2) % e == 0 and (mu2 - la2) % e == 0 and la2 >= mu2
            and (mu2 + 1) % e <= la1 - mu1):
        return 1
    return 0


def _mu_part(mu: tuple, i: int) -> int:
    """Part i of mu, 1-based, 0 past the end."""
    return mu[i - 1] if 1 <= i <= len(mu) else 0


def _good_shape_zero(la: tuple, gs: GoodShapeData, mu: tuple, e: int) -> int:
    """Good shape with no part equal to e - 1."""
    mu_a = _mu_part(mu, gs.alpha)
    mu_b = _mu_part(mu, gs.beta)
    star = gs.mu_star
    cand1 = (star[0] + mu_b, star[1] + mu_a)
    cand2 = (star[0] + mu_a - e + 1, star[1] + mu_b + e - 1)
    la_t = tuple(la)
    if e - 1 < mu_b or mu_a < e - 1:
        return 1 if la_t == cand1 else 0
    if 0 < mu_b < e - 1 < mu_a:
        return 1 if la_t in (cand1, cand2) else 0
    if mu_b == 0 and e - 1 < mu_a:
        return 1 if la_t == cand2 else 0
    return 0


def _good_shape_pos(la: tuple, gs: GoodShapeData, mu: tuple, e: int) -> int:
    """Good shape with at least one part equal to e - 1."""
    N = gs.n_e_minus_1
    mu_a = _mu_part(mu, gs.alpha)
    mu_b = _mu_part(mu, gs.beta)
    star = gs.mu_star
    la_t = tuple(la)
    # all k, m >= 0 within the stated bounds
    ks = range(max(0, (mu_b + (N + 1) * (e - 1) - mu_a) // e + 1))
    ms = range(max(0, (mu_a + (N - 1) * (e - 1)) // e + 1))
    if 0 == mu_b <= mu_a < e - 1:
        cand1 = (star[0] + mu_b, star[1] + mu_a + N * (e - 1))
        if la_t == cand1:
            return 1
        for m in ms:
            cand3 = (star[0] + mu_a + (N - 1) * (e - 1) - m * e,
                     star[1] + m * e + e - 1)
            if la_t == cand3:
                return 1
        return 0
    if mu_b < e - 1 < mu_a:
        cand2 = (star[0] + mu_a - e + 1, star[1] + mu_b + (N + 1) * (e - 1))
        if la_t == cand2:
            return 1
        for k in ks:
            cand4 = (star[0] + mu_b + N * (e - 1) - k * e,
                     star[1] + mu_a + k * e)
            if la_t == cand4:
                return 1
        return 0
    return 0


def _classify(la: tuple, mu: tuple, e: int) -> int:
    """Dispatch on plain part tuples; la padded to length two."""
    mu = tuple(p for p in mu if p > 0)
    if len(la) == 1 or la[1] == 0:
        return _one_row(mu, e)
    if not mu or mu[0] > la[0]:
        # dominance fails (or mu is empty while la is not)
        return 0
    if mu[0] == la[0]:
        # equal first parts: the condition matrices for the stripped pair
        # coincide with the original ones
        return _classify((la[1],), mu[1:], e)
    b = len(mu)
    if b == 2:
        return _two_part(la, mu, e)
    if b == 3:
        return _three_part(la, mu, e)
    if mu[2] == e - 1:
        return _third_part_special(la, mu, e)
    gs = good_shape(Partition(mu), e)
    if not gs.is_good:
        return 0
    if gs.n_e_minus_1 == 0:
        return _good_shape_zero(la, gs, mu, e)
    return _good_shape_pos(la, gs, mu, e)


def classify(query: TwoRowQuery) -> int:
    """The dimension (0 or 1) of the homomorphism space for the query."""
    la = query.lambda_.parts
    if len(la) == 0:
        la = (0,)
    return _classify(la if len(la) == 2 else (la[0],), query.mu.parts,
                     query.e)
