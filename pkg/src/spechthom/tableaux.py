"""Partitions, compositions and tableau combinatorics.

Tableaux with repeated entries are represented by their count matrices: for
a shape with a rows and a type with b values, ``counts[j][i]`` is the number
of entries equal to ``i+1`` in row ``j+1``.  For a fixed type, a
row-standard tableau *is* such a matrix with prescribed row and column sums,
so equality, hashing and enumeration are all structural.  Bijective fillings
(every letter once) are kept as actual fillings, since those are what index
permutation-module bases.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass


class NotApplicableError(ValueError):
    """The pair of partitions is outside the matrix method's domain."""


def _parse_parts(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(piece) for piece in text.split(","))


@dataclass(frozen=True)
class Composition:
    """A finite sequence of nonnegative integers; zeros are kept in place."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        if any(x < 0 for x in self.parts):
            raise ValueError(f"negative part in composition {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "Composition":
        return cls(_parse_parts(text))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def prefix(self, k: int) -> int:
        """Sum of the first k parts (k past the end counts everything)."""
        return sum(self.parts[:k])

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers.

    >>> Partition.parse("5,2").n
    7
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        if any(x <= 0 for x in self.parts):
            raise ValueError(f"partition parts must be positive: {self.parts}")
        if any(self.parts[i] < self.parts[i + 1]
               for i in range(len(self.parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {self.parts}")

    @classmethod
    def parse(cls, text: str) -> "Partition":
        return cls(_parse_parts(text))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def part(self, i: int) -> int:
        """The i-th part, 1-based, 0 past the end."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def prefix(self, k: int) -> int:
        return sum(self.parts[:k])

    def as_composition(self) -> Composition:
        return Composition(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition(())
        return Partition(tuple(sum(1 for p in self.parts if p > c)
                               for c in range(self.parts[0])))

    def removable_cells(self):
        """Cells (row, col), 1-based, whose removal leaves a partition."""
        out = []
        for r, p in enumerate(self.parts, start=1):
            if r == len(self.parts) or self.parts[r] < p:
                out.append((r, p))
        return out

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts)


def partitions_of(n: int, max_part: int | None = None):
    """Yield all partitions of n as Partition objects, largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition(())
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield Partition((first,) + rest.parts)


def compositions_of(n: int, num_parts: int | None = None):
    """Yield compositions of n: all positive ones if num_parts is None,
    otherwise all nonnegative ones with exactly num_parts parts."""
    if num_parts is None:
        if n == 0:
            yield Composition(())
            return
        for first in range(1, n + 1):
            for rest in compositions_of(n - first):
                yield Composition((first,) + rest.parts)
    else:
        if num_parts == 0:
            if n == 0:
                yield Composition(())
            return
        for first in range(n + 1):
            for rest in compositions_of(n - first, num_parts - 1):
                yield Composition((first,) + rest.parts)


def dominates(a: Composition | Partition, b: Composition | Partition) -> bool:
    """The dominance order: every prefix sum of a is >= that of b.

    Only defined between sequences with the same total.
    """
    if a.n != b.n:
        raise ValueError(f"dominance needs equal totals: {a.n} != {b.n}")
    total_a = total_b = 0
    for j in range(max(len(a), len(b))):
        total_a += a[j] if j < len(a) else 0
        total_b += b[j] if j < len(b) else 0
        if total_a < total_b:
            return False
    return True


@dataclass(frozen=True)
class FilledTableau:
    """A filling of a shape with positive integers, weakly increasing along
    rows.  Bijective fillings (each of 1..n exactly once) index
    permutation-module bases; those have strictly increasing rows."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if tuple(len(r) for r in self.rows) != self.shape.parts:
            raise ValueError("row lengths do not match the shape")
        for r in self.rows:
            if any(r[i] > r[i + 1] for i in range(len(r) - 1)):
                raise ValueError(f"row not weakly increasing: {r}")

    def is_standard(self) -> bool:
        for j in range(1, len(self.rows)):
            upper, lower = self.rows[j - 1], self.rows[j]
            if any(upper[c] >= lower[c] for c in range(len(lower))):
                return False
        return True

    def __str__(self) -> str:
        return "/".join("".join(str(x) for x in r) for r in self.rows)


def standard_tableaux(shape: Partition) -> list[FilledTableau]:
    """All standard tableaux of the given shape (rows and columns strictly
    increasing), built by placing 1..n at addable corners."""
    n = shape.n
    a = len(shape)
    rows: list[list[int]] = [[] for _ in range(a)]
    out: list[FilledTableau] = []

    def place(k: int):
        if k > n:
            out.append(FilledTableau(shape, tuple(tuple(r) for r in rows)))
            return
        for j in range(a):
            if len(rows[j]) < shape[j] and (j == 0
                                            or len(rows[j - 1]) > len(rows[j])):
                rows[j].append(k)
                place(k + 1)
                rows[j].pop()

    place(1)
    return out


@functools.lru_cache(maxsize=None)
def count_standard(parts: tuple[int, ...]) -> int:
    """Number of standard tableaux, by the removable-cell recurrence."""
    if sum(parts) <= 1:
        return 1
    shape = Partition(parts)
    total = 0
    for (r, _) in shape.removable_cells():
        smaller = list(parts)
        smaller[r - 1] -= 1
        if smaller[r - 1] == 0:
            smaller.pop(r - 1)
        total += count_standard(tuple(smaller))
    return total


@dataclass(frozen=True)
class TypedTableau:
    """A tableau of shape ``shape`` and type ``type_`` stored as its count
    matrix: ``counts[j][i]`` entries equal to i+1 in row j+1.

    The 1-based accessors mirror the usual combinatorial statistics:
    ``cnt(i, j)`` is the number of entries equal to i in row j, and the
    ``cnt_lt`` / ``cnt_gt`` / ``cnt_below`` variants aggregate over value or
    row ranges.  Out-of-range indices contribute zero.
    """

    shape: Partition
    type_: Composition
    counts: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        a, b = len(self.shape), len(self.type_)
        if len(self.counts) != a or any(len(r) != b for r in self.counts):
            raise ValueError("count matrix has the wrong dimensions")
        for j, row in enumerate(self.counts):
            if any(c < 0 for c in row):
                raise ValueError("negative count")
            if sum(row) != self.shape[j]:
                raise ValueError(f"row {j + 1} sums to {sum(row)}, "
                                 f"expected {self.shape[j]}")
        for i in range(b):
            col = sum(row[i] for row in self.counts)
            if col != self.type_[i]:
                raise ValueError(f"value {i + 1} appears {col} times, "
                                 f"expected {self.type_[i]}")

    # -- statistics (all 1-based) -----------------------------------------

    def cnt(self, value: int, row: int) -> int:
        if 1 <= row <= len(self.counts) and 1 <= value <= len(self.type_):
            return self.counts[row - 1][value - 1]
        return 0

    def cnt_lt(self, value: int, row: int) -> int:
        """Entries strictly smaller than ``value`` in ``row``."""
        if not 1 <= row <= len(self.counts):
            return 0
        return sum(self.counts[row - 1][: max(0, min(value - 1, len(self.type_)))])

    def cnt_le(self, value: int, row: int) -> int:
        return self.cnt_lt(value + 1, row)

    def cnt_gt(self, value: int, row: int) -> int:
        """Entries strictly greater than ``value`` in ``row``."""
        if not 1 <= row <= len(self.counts):
            return 0
        return sum(self.counts[row - 1][value:])

    def cnt_below(self, value: int, row: int) -> int:
        """Entries equal to ``value`` in rows strictly below ``row``."""
        return sum(self.counts[j][value - 1]
                   for j in range(row, len(self.counts)))

    def stat(self, values, rows) -> int:
        """Number of entries with value in ``values`` and row in ``rows``;
        indices outside the tableau contribute nothing."""
        total = 0
        for j in rows:
            if 1 <= j <= len(self.counts):
                row = self.counts[j - 1]
                for i in values:
                    if 1 <= i <= len(row):
                        total += row[i - 1]
        return total

    # -- predicates --------------------------------------------------------

    def is_semistandard(self) -> bool:
        """Row-standardness is inherent in the count representation; this
        checks strict increase down columns: for every row j >= 2 and value
        i, the entries <= i in row j must fit strictly under entries
        <= i-1 in row j-1."""
        b = len(self.type_)
        for j in range(2, len(self.counts) + 1):
            cum_above = 0
            cum_here = 0
            for i in range(1, b + 1):
                cum_here += self.counts[j - 1][i - 1]
                if cum_here > cum_above:
                    return False
                cum_above += self.counts[j - 2][i - 1]
        return True

    def first_violation(self) -> tuple[int, int] | None:
        """Topmost row, then smallest value, where column-strictness fails;
        None if semistandard."""
        b = len(self.type_)
        for j in range(2, len(self.counts) + 1):
            cum_above = 0
            cum_here = 0
            for i in range(1, b + 1):
                cum_here += self.counts[j - 1][i - 1]
                if cum_here > cum_above:
                    return (j, i)
                cum_above += self.counts[j - 2][i - 1]
        return None

    def reading_word(self) -> tuple[int, ...]:
        """Entries read along rows, top to bottom.  Tableaux of equal shape
        and type are ordered by this word throughout the library."""
        word = []
        for row in self.counts:
            for i, c in enumerate(row):
                word.extend([i + 1] * c)
        return tuple(word)

    def with_counts(self, counts) -> "TypedTableau":
        new_type = [0] * len(self.type_)
        for row in counts:
            for i, c in enumerate(row):
                new_type[i] += c
        return TypedTableau(self.shape, Composition(tuple(new_type)),
                            tuple(tuple(r) for r in counts))

    def __str__(self) -> str:
        rows = []
        for row in self.counts:
            rows.append("".join(str(i + 1) * c for i, c in enumerate(row)))
        return "/".join(rows)


def tableau_from_rows(shape: Partition, type_: Composition,
                      rows: list[list[int]]) -> TypedTableau:
    """Build a TypedTableau from explicit row contents, e.g.
    ``[[1,1,1,2,3], [2,3]]``."""
    b = len(type_)
    counts = []
    for row in rows:
        vec = [0] * b
        for x in row:
            vec[x - 1] += 1
        counts.append(tuple(vec))
    return TypedTableau(shape, type_, tuple(counts))


def _row_choices(capacity: int, budgets: list[int]):
    """All ways to fill one row: vectors v with sum(v) = capacity and
    0 <= v[i] <= budgets[i]."""
    b = len(budgets)

    def rec(i: int, remaining: int):
        if i == b:
            if remaining == 0:
                yield ()
            return
        tail_max = sum(budgets[i + 1:])
        lo = max(0, remaining - tail_max)
        hi = min(budgets[i], remaining)
        for c in range(lo, hi + 1):
            for rest in rec(i + 1, remaining - c):
                yield (c,) + rest

    return rec(0, capacity)


def row_standard_tableaux(shape: Partition,
                          type_: Composition) -> list[TypedTableau]:
    """All row-standard tableaux of the given shape and type, i.e. all
    count matrices with the prescribed row and column sums."""
    if shape.n != type_.n:
        return []
    b = len(type_)
    out: list[TypedTableau] = []
    rows: list[tuple[int, ...]] = []

    def rec(j: int, budgets: list[int]):
        if j == len(shape):
            out.append(TypedTableau(shape, type_, tuple(rows)))
            return
        for choice in _row_choices(shape[j], budgets):
            rows.append(choice)
            rec(j + 1, [budgets[i] - choice[i] for i in range(b)])
            rows.pop()

    rec(0, list(type_.parts))
    out.sort(key=lambda t: t.reading_word())
    return out


def semistandard_tableaux(shape: Partition,
                          type_: Composition) -> list[TypedTableau]:
    """All semistandard tableaux of the given shape and type, ordered by
    reading word.  Empty unless the shape dominates the type.

    >>> la, mu = Partition.parse("5,2"), Composition.parse("3,2,2")
    >>> [str(t) for t in semistandard_tableaux(la, mu)]
    ['11122/33', '11123/23', '11133/22']
    """
    if shape.n != type_.n:
        return []
    b = len(type_)
    out: list[TypedTableau] = []
    rows: list[tuple[int, ...]] = []

    def rec(j: int, budgets: list[int]):
        if j == len(shape):
            out.append(TypedTableau(shape, type_, tuple(rows)))
            return
        for choice in _row_choices(shape[j], budgets):
            if j > 0:
                # strictness against the previous row, cumulative form
                cum_above = 0
                cum_here = 0
                ok = True
                for i in range(b):
                    cum_here += choice[i]
                    if cum_here > cum_above:
                        ok = False
                        break
                    cum_above += rows[j - 1][i]
                if not ok:
                    continue
            rows.append(choice)
            rec(j + 1, [budgets[i] - choice[i] for i in range(b)])
            rows.pop()

    rec(0, list(type_.parts))
    out.sort(key=lambda t: t.reading_word())
    return out


def superstandard(shape: Partition) -> TypedTableau:
    """The tableau of shape and type both equal to ``shape`` whose row j is
    filled with the value j."""
    a = len(shape)
    counts = tuple(tuple(shape[j] if i == j else 0 for i in range(a))
                   for j in range(a))
    return TypedTableau(shape, shape.as_composition(), counts)


def nu_dt(mu: Composition, d: int, t: int) -> Composition:
    """The type obtained from mu by moving t units from part d+1 to part d
    (1-based d)."""
    if not 1 <= d < len(mu):
        raise ValueError(f"d must satisfy 1 <= d < {len(mu)}, got {d}")
    if not 1 <= t <= mu[d]:
        raise ValueError(f"t must satisfy 1 <= t <= {mu[d]}, got {t}")
    parts = list(mu.parts)
    parts[d - 1] += t
    parts[d] -= t
    return Composition(tuple(parts))


def algorithm_applicable(lambda_: Partition, mu: Partition) -> bool:
    """Whether the matrix method covers the pair: for every 1 <= j < a
    (a the number of rows of lambda), the first j parts of mu must total at
    least the first j-1 parts of lambda plus lambda_{j+1}."""
    if lambda_.n != mu.n:
        raise ValueError("partitions of different n")
    a = len(lambda_)
    for j in range(1, a):
        if mu.prefix(j) < lambda_.prefix(j - 1) + lambda_.part(j + 1):
            return False
    return True


def _arrow_targets_high(T: TypedTableau, d: int, t: int) -> list[TypedTableau]:
    """Targets for d >= a: change t entries d+1 -> d, any rows."""
    a = len(T.shape)
    avail = [T.cnt(d + 1, j) for j in range(1, a + 1)]
    out = []
    for moves in _row_choices(t, avail):
        counts = [list(r) for r in T.counts]
        for j, x in enumerate(moves):
            if x:
                counts[j][d - 1] += x
                counts[j][d] -= x
        out.append(T.with_counts(counts))
    return out


def _arrow_targets_low(T: TypedTableau, d: int, t: int) -> list[TypedTableau]:
    """Targets for d < a, built according to the exchange description:
    for values i != d, d+1 move g_i entries from row d to row d+1; row d+1
    keeps no entry equal to d; entries equal to d elsewhere only increase;
    entries equal to d+1 are determined by row sums."""
    a, b = len(T.shape), len(T.type_)
    others = [i for i in range(1, b + 1) if i not in (d, d + 1)]
    g_ranges = [range(T.cnt(i, d) + 1) for i in others]
    # value-d increments over rows j != d+1; total is t plus whatever was
    # removed from row d+1
    delta_total = t + T.cnt(d, d + 1)
    rows_for_delta = [j for j in range(1, a + 1) if j != d + 1]
    # away from rows d, d+1 the values other than d, d+1 are frozen, so the
    # growth of value d there is capped by the value-(d+1) supply
    delta_caps = [T.shape[j - 1] if j == d else T.cnt(d + 1, j)
                  for j in rows_for_delta]
    out = []
    for gs in itertools.product(*g_ranges):
        base = [list(r) for r in T.counts]
        for i, g in zip(others, gs):
            if g:
                base[d - 1][i - 1] -= g
                base[d][i - 1] += g
        for deltas in _row_choices(delta_total, delta_caps):
            counts = [list(r) for r in base]
            for j, x in zip(rows_for_delta, deltas):
                counts[j - 1][d - 1] += x
            counts[d][d - 1] = 0
            # value d+1 is forced by row sums; reject if out of range
            ok = True
            for j in range(a):
                rest = sum(counts[j]) - counts[j][d]
                forced = T.shape[j] - rest
                if forced < 0 or forced > T.cnt(d + 1, j + 1):
                    ok = False
                    break
                counts[j][d] = forced
            if not ok:
                continue
            U = T.with_counts(counts)
            if U.type_ == nu_dt(T.type_, d, t) and arrow_relates(T, U, d):
                out.append(U)
    uniq = {u: None for u in out}
    return sorted(uniq, key=lambda u: u.reading_word())


def arrow_relates(T: TypedTableau, U: TypedTableau, d: int) -> bool:
    """The arrow condition between a tableau of type mu and one of type
    nu(d, t).  For d >= a it says U agrees with T away from values d, d+1
    and never loses a d; for d < a it is the entrywise condition table."""
    a, b = len(T.shape), len(T.type_)
    if d >= a:
        for j in range(1, a + 1):
            for i in range(1, b + 1):
                tij, uij = T.cnt(i, j), U.cnt(i, j)
                if i == d:
                    if uij < tij:
                        return False
                elif i != d + 1 and uij != tij:
                    return False
        return True
    for j in range(1, a + 1):
        for i in range(1, b + 1):
            tij, uij = T.cnt(i, j), U.cnt(i, j)
            if j == d:
                if i == d:
                    if uij < tij:
                        return False
                elif uij > tij:
                    return False
            elif j == d + 1:
                if i == d:
                    if uij != 0:
                        return False
                elif i == d + 1:
                    if uij > tij:
                        return False
                elif uij < tij:
                    return False
            else:
                if i == d:
                    if uij < tij:
                        return False
                elif i == d + 1:
                    if uij > tij:
                        return False
                elif uij != tij:
                    return False
    return True


def arrows_dt(T: TypedTableau, d: int, t: int) -> list[TypedTableau]:
    """All tableaux U of type nu(d, t) reachable from a semistandard T by
    the (d, t)-arrow.  Requires the matrix method to apply to the pair
    (shape, type); every returned tableau is again semistandard."""
    shape = T.shape
    mu = Partition(T.type_.parts)
    if not algorithm_applicable(shape, mu):
        raise NotApplicableError(
            f"pair ({shape}), ({mu}) outside the matrix method")
    b = len(T.type_)
    if not 1 <= d < b:
        raise ValueError(f"d must satisfy 1 <= d < {b}")
    if not 1 <= t <= T.type_[d]:
        raise ValueError(f"t must satisfy 1 <= t <= {T.type_[d]}")
    if d >= len(shape):
        return sorted(_arrow_targets_high(T, d, t),
                      key=lambda u: u.reading_word())
    return _arrow_targets_low(T, d, t)
