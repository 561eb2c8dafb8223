"""Labeled binary shrubs, forests, and their rise statistics.

A binary shrub is a three-node tree (one root, two leaves) whose root
carries the smallest of its three labels.  A forest of n shrubs is an
ordered sequence whose labels partition {1, ..., 3n}.  Reading each
shrub as the triple (root, left, right) and concatenating gives the
word of the forest, a permutation of {1, ..., 3n}.

Five statistics live here:

* ``ris``  -- ascents of the word itself;
* ``risT`` -- adjacent shrub pairs where every label of the first is
  below every label of the second (total rise);
* ``risB`` -- adjacent pairs with increasing roots (base rise);
* ``risL`` -- adjacent pairs increasing componentwise as triples
  (lexicographic rise);
* ``risA`` -- adjacent pairs where the right leaf of the first is below
  the left leaf of the second (adjacent rise).

The exhaustive enumerator doubles as the ground-truth oracle against
which every closed formula in the package is checked.  All functions
are pure; values are immutable and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterator, Sequence

from .errors import GuardExceeded
from .polynomial import XPoly

#: Default bound on the number of shrubs for exhaustive enumeration.
#: (3*4)!/3**4 is about 5.9 million forests, seconds at desk scale;
#: n = 5 is about 5.4e9 and is refused unless the caller raises the guard.
DEFAULT_MAX_SHRUBS = 4


class RiseKind(str, Enum):
    """The five rise statistics, keyed by their command-line names."""

    WORD = "ris"
    TOTAL = "risT"
    BASE = "risB"
    LEX = "risL"
    ADJACENT = "risA"


#: The four statistics defined by comparing adjacent shrubs.
PAIR_KINDS = (RiseKind.TOTAL, RiseKind.BASE, RiseKind.LEX, RiseKind.ADJACENT)


@dataclass(frozen=True)
class Shrub:
    """One labeled shrub; the root label must be the smallest."""

    root: int
    left: int
    right: int

    def __post_init__(self) -> None:
        labels = (self.root, self.left, self.right)
        if len(set(labels)) != 3:
            raise ValueError(f"shrub labels must be distinct: {labels}")
        if any(v < 1 for v in labels):
            raise ValueError(f"shrub labels must be positive: {labels}")
        if self.root > self.left or self.root > self.right:
            raise ValueError(f"root must carry the smallest label: {labels}")

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.root, self.left, self.right)

    def labels(self) -> frozenset[int]:
        return frozenset(self.triple)


@dataclass(frozen=True)
class Forest:
    """An ordered sequence of shrubs whose labels partition {1..3n}."""

    shrubs: tuple[Shrub, ...]

    def __post_init__(self) -> None:
        if not self.shrubs:
            raise ValueError("a forest needs at least one shrub")
        seen: list[int] = []
        for shrub in self.shrubs:
            seen.extend(shrub.triple)
        n = len(self.shrubs)
        if sorted(seen) != list(range(1, 3 * n + 1)):
            raise ValueError(f"labels must partition 1..{3 * n}: {sorted(seen)}")

    @classmethod
    def from_triples(cls, triples: Sequence[Sequence[int]]) -> "Forest":
        return cls(tuple(Shrub(*t) for t in triples))

    @property
    def size(self) -> int:
        return len(self.shrubs)


def reduction(word: Sequence[int]) -> tuple[int, ...]:
    """Order-isomorphic relabeling of a duplicate-free word onto 1..len.

    >>> reduction((7, 9, 4, 2, 10))
    (3, 4, 2, 1, 5)
    """
    if len(set(word)) != len(word):
        raise ValueError(f"entries must be distinct: {tuple(word)}")
    rank = {v: i + 1 for i, v in enumerate(sorted(word))}
    return tuple(rank[v] for v in word)


def forest_to_perm(forest: Forest) -> tuple[int, ...]:
    """The word of a forest: concatenated (root, left, right) triples."""
    out: list[int] = []
    for shrub in forest.shrubs:
        out.extend(shrub.triple)
    return tuple(out)


def forest_from_perm(word: Sequence[int]) -> Forest:
    """Inverse of :func:`forest_to_perm`; rejects words outside the image."""
    if len(word) == 0 or len(word) % 3 != 0:
        raise ValueError(f"word length must be a positive multiple of 3: {len(word)}")
    n = len(word) // 3
    if sorted(word) != list(range(1, 3 * n + 1)):
        raise ValueError(f"word must use exactly the labels 1..{3 * n}")
    shrubs = []
    for i in range(n):
        root, left, right = word[3 * i : 3 * i + 3]
        if root > left or root > right:
            raise ValueError(
                f"triple {(root, left, right)} at shrub {i + 1} violates the "
                "root-is-smallest condition"
            )
        shrubs.append(Shrub(root, left, right))
    return Forest(tuple(shrubs))


def rises(word: Sequence[int]) -> int:
    """Number of ascent positions i with word[i] < word[i+1]."""
    if len(word) < 1:
        raise ValueError("word must be nonempty")
    return sum(1 for a, b in zip(word, word[1:]) if a < b)


def within_shrub_rises(word: Sequence[int]) -> int:
    """Ascents at 1-indexed positions congruent to 1 or 2 mod 3.

    These are exactly the ascents interior to a shrub triple; boundary
    positions (multiples of 3) are excluded.
    """
    if len(word) == 0 or len(word) % 3 != 0:
        raise ValueError(f"word length must be a positive multiple of 3: {len(word)}")
    return sum(
        1 for i in range(len(word) - 1) if i % 3 != 2 and word[i] < word[i + 1]
    )


def shrub_less(kind: RiseKind | str, f: Shrub, g: Shrub) -> bool:
    """Whether f precedes g under the given adjacent-pair ordering."""
    kind = RiseKind(kind)
    if f.labels() & g.labels():
        raise ValueError("shrubs must be label-disjoint")
    if kind is RiseKind.TOTAL:
        return max(f.triple) < min(g.triple)
    if kind is RiseKind.BASE:
        return f.root < g.root
    if kind is RiseKind.LEX:
        return f.root < g.root and f.left < g.left and f.right < g.right
    if kind is RiseKind.ADJACENT:
        return f.right < g.left
    raise ValueError(f"no pairwise ordering for {kind!r}")


def rise_stat(kind: RiseKind | str, forest: Forest) -> int:
    """Value of the chosen rise statistic on a forest."""
    kind = RiseKind(kind)
    if kind is RiseKind.WORD:
        return rises(forest_to_perm(forest))
    return sum(
        1
        for f, g in zip(forest.shrubs, forest.shrubs[1:])
        if shrub_less(kind, f, g)
    )


def forest_count(n: int) -> int:
    """|forests of n shrubs| = (3n)!/3**n (confirmed by brute count, n <= 3)."""
    count, rem = divmod(factorial(3 * n), 3**n)
    assert rem == 0
    return count


def enumerate_forests(
    n: int,
    *,
    max_shrubs: int = DEFAULT_MAX_SHRUBS,
    first: Shrub | None = None,
) -> Iterator[Forest]:
    """Yield every forest of n shrubs once, in lexicographic word order.

    ``first`` restricts the stream to forests whose first shrub is the
    given one; the streams over all valid first shrubs partition the
    full enumeration, so distribution sums can be merged associatively.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_shrubs:
        raise GuardExceeded(
            f"enumerating {n} shrubs means {forest_count(n)} forests; "
            f"pass max_shrubs={n} to allow it"
        )
    labels = tuple(range(1, 3 * n + 1))
    if first is None:
        prefix: list[Shrub] = []
    else:
        if not first.labels() <= set(labels):
            raise ValueError(f"first shrub labels must lie in 1..{3 * n}")
        labels = tuple(v for v in labels if v not in first.labels())
        prefix = [first]
    yield from _forests_rec(labels, prefix, n)


def _forests_rec(
    remaining: tuple[int, ...], acc: list[Shrub], n: int
) -> Iterator[Forest]:
    if len(acc) == n:
        yield Forest(tuple(acc))
        return
    # remaining is sorted; scanning roots, then left, then right leaves in
    # ascending order makes the stream lexicographic in the forest word.
    for i in range(len(remaining) - 2):
        root = remaining[i]
        larger = remaining[i + 1 :]
        for a in range(len(larger)):
            for b in range(len(larger)):
                if a == b:
                    continue
                rest = remaining[:i] + tuple(
                    v for k, v in enumerate(larger) if k != a and k != b
                )
                acc.append(Shrub(root, larger[a], larger[b]))
                yield from _forests_rec(rest, acc, n)
                acc.pop()


@lru_cache(maxsize=None)
def _distributions(n: int) -> dict[str, tuple[int, ...]]:
    """One exhaustive sweep counting all five statistics at once.

    Works on raw label triples rather than Forest objects; the per-forest
    statistics are the same comparisons as :func:`rise_stat`, checked
    against the object path exhaustively for n <= 3 in the test suite.
    """
    word_counts = [0] * (3 * n)
    pair_counts = {kind: [0] * n for kind in PAIR_KINDS}

    def rec(remaining, depth, pr, pu, pv, racc, tacc, bacc, lacc, aacc):
        if depth == n:
            word_counts[racc] += 1
            pair_counts[RiseKind.TOTAL][tacc] += 1
            pair_counts[RiseKind.BASE][bacc] += 1
            pair_counts[RiseKind.LEX][lacc] += 1
            pair_counts[RiseKind.ADJACENT][aacc] += 1
            return
        for combo in combinations(sorted(remaining), 3):
            root, a, b = combo
            rest = remaining.difference(combo)
            for u, v in ((a, b), (b, a)):
                # root -> left always ascends; left -> right iff u < v
                nr = racc + 1 + (u < v)
                if depth:
                    nr += pv < root
                    nt = tacc + ((pu if pu > pv else pv) < root)
                    nb = bacc + (pr < root)
                    nl = lacc + (pr < root and pu < u and pv < v)
                    na = aacc + (pv < u)
                else:
                    nt = nb = nl = na = 0
                rec(rest, depth + 1, root, u, v, nr, nt, nb, nl, na)

    rec(frozenset(range(1, 3 * n + 1)), 0, 0, 0, 0, 0, 0, 0, 0, 0)
    out = {RiseKind.WORD.value: tuple(word_counts)}
    out.update((kind.value, tuple(pair_counts[kind])) for kind in PAIR_KINDS)
    return out


def rise_distribution(
    kind: RiseKind | str, n: int, *, max_shrubs: int = DEFAULT_MAX_SHRUBS
) -> XPoly:
    """Sum of x**statistic over every forest of n shrubs, by brute force."""
    kind = RiseKind(kind)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n > max_shrubs:
        raise GuardExceeded(
            f"distribution at n={n} sweeps {forest_count(n)} forests; "
            f"pass max_shrubs={n} to allow it"
        )
    return XPoly(_distributions(n)[kind.value])


def min_rise_count(n: int, *, max_shrubs: int = DEFAULT_MAX_SHRUBS) -> int:
    """Number of forests of n shrubs whose word has exactly n ascents.

    n ascents is the floor: every root-to-left-leaf step ascends, so any
    forest word has at least n of them.
    """
    dist = rise_distribution(RiseKind.WORD, n, max_shrubs=max_shrubs)
    assert all(dist.coeff(k) == 0 for k in range(n))
    return dist.coeff(n)
