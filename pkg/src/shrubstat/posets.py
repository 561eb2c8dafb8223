"""Finite posets with a linear-extension counting/enumeration oracle.

A labeling (linear extension) assigns {1..size} bijectively to the
elements so that every cover (u, v) gets label(u) < label(v).  Counting
runs a dynamic program over down-sets keyed by bitmask; enumeration
backtracks and is intended for smaller posets.

Builders are provided for every poset family the package needs: the
boundary-increasing and root-increasing forest posets, the three-row
grid poset of componentwise-increasing forests, and the four
adjacent-chain families (bare, end-capped, start-capped, both).
Elements of the forest-shaped posets are indexed in word positions:
3i is the root of shrub i, 3i+1 its left leaf, 3i+2 its right leaf.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import GuardExceeded

#: Counting guard: widest family instance at desk scale has 14 nodes,
#: and the down-set DP stays cheap well beyond that.
DEFAULT_MAX_COUNT_SIZE = 24
#: Enumeration guard (materializes every labeling).
DEFAULT_MAX_ENUM_SIZE = 12


@dataclass(frozen=True)
class Poset:
    """Ground set 0..size-1 with cover relations (u, v) meaning u < v."""

    size: int
    covers: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError("size must be >= 0")
        for u, v in self.covers:
            if not (0 <= u < self.size and 0 <= v < self.size):
                raise ValueError(f"cover {(u, v)} out of range for size {self.size}")
            if u == v:
                raise ValueError(f"self-loop {(u, v)}")

    @classmethod
    def from_covers(cls, size: int, covers: Iterable[tuple[int, int]]) -> "Poset":
        return cls(size, frozenset(covers))

    def check_labeling(self, labels: tuple[int, ...]) -> bool:
        """Whether labels is a bijection onto 1..size respecting all covers."""
        if sorted(labels) != list(range(1, self.size + 1)):
            return False
        return all(labels[u] < labels[v] for u, v in self.covers)


def _successor_masks(poset: Poset) -> list[int]:
    """Immediate-successor bitmasks; raises ValueError on a cycle."""
    succs = [0] * poset.size
    indeg = [0] * poset.size
    for u, v in poset.covers:
        succs[u] |= 1 << v
        indeg[v] += 1
    # Kahn's algorithm over the cover digraph
    queue = [v for v in range(poset.size) if indeg[v] == 0]
    seen = 0
    while queue:
        u = queue.pop()
        seen += 1
        m = succs[u]
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            indeg[v] -= 1
            if indeg[v] == 0:
                queue.append(v)
    if seen != poset.size:
        raise ValueError("cover relation contains a cycle")
    return succs


def count_linear_extensions(
    poset: Poset, *, max_size: int = DEFAULT_MAX_COUNT_SIZE
) -> int:
    """Exact number of linear extensions, by DP over down-set bitmasks."""
    if poset.size > max_size:
        raise GuardExceeded(
            f"poset has {poset.size} elements; pass max_size={poset.size} to count it"
        )
    succs = _successor_masks(poset)
    memo = {0: 1}

    def ways(mask: int) -> int:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        total = 0
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if succs[v] & mask == 0:  # v is maximal in the down-set
                total += ways(mask ^ low)
        memo[mask] = total
        return total

    return ways((1 << poset.size) - 1)


def enumerate_linear_extensions(
    poset: Poset, *, max_size: int = DEFAULT_MAX_ENUM_SIZE
) -> Iterator[tuple[int, ...]]:
    """Yield every labeling once, sorted lexicographically as label words.

    A labeling is the tuple (label of element 0, ..., label of element
    size-1).
    """
    if poset.size > max_size:
        raise GuardExceeded(
            f"poset has {poset.size} elements; pass max_size={poset.size} "
            "to enumerate it"
        )
    _successor_masks(poset)  # cycle check
    preds = [0] * poset.size
    for u, v in poset.covers:
        preds[v] |= 1 << u

    results: list[tuple[int, ...]] = []
    labels = [0] * poset.size

    def place(next_label: int, placed: int) -> None:
        if next_label > poset.size:
            results.append(tuple(labels))
            return
        for v in range(poset.size):
            if placed & (1 << v) or (preds[v] & placed) != preds[v]:
                continue
            labels[v] = next_label
            place(next_label + 1, placed | (1 << v))
        # labels[v] is overwritten on the next use; no cleanup needed

    place(1, 0)
    results.sort()
    yield from results


def _shrub_covers(n: int) -> list[tuple[int, int]]:
    out = []
    for i in range(n):
        out.append((3 * i, 3 * i + 1))
        out.append((3 * i, 3 * i + 2))
    return out


def build_isf_poset(n: int) -> Poset:
    """Forests whose right leaf precedes the next root (word boundaries ascend)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    covers = _shrub_covers(n)
    covers += [(3 * i + 2, 3 * i + 3) for i in range(n - 1)]
    return Poset.from_covers(3 * n, covers)


def build_ibf_poset(n: int) -> Poset:
    """Forests whose roots increase left to right."""
    if n < 1:
        raise ValueError("n must be >= 1")
    covers = _shrub_covers(n)
    covers += [(3 * i, 3 * i + 3) for i in range(n - 1)]
    return Poset.from_covers(3 * n, covers)


def build_lex_poset(n: int) -> Poset:
    """Componentwise-increasing forests: three rows of n, chained left to
    right, with each root below both of its leaves."""
    if n < 1:
        raise ValueError("n must be >= 1")
    covers = _shrub_covers(n)
    for i in range(n - 1):
        covers += [
            (3 * i, 3 * i + 3),  # root row
            (3 * i + 1, 3 * i + 4),  # left-leaf row
            (3 * i + 2, 3 * i + 5),  # right-leaf row
        ]
    return Poset.from_covers(3 * n, covers)


def build_adjacent_poset(variant: str, n: int) -> Poset:
    """The adjacent-chain poset families.

    ``A``: n shrubs with the right leaf of each below the left leaf of
    the next.  ``E`` adds one extra node above the last right leaf;
    ``S`` adds one extra node below the first left leaf; ``B`` adds
    both.  n = 0 degenerates to the empty poset, a point, a point, and
    a two-chain respectively.
    """
    if variant not in ("A", "E", "S", "B"):
        raise ValueError(f"unknown variant {variant!r}")
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        if variant == "A":
            return Poset.from_covers(0, [])
        if variant in ("E", "S"):
            return Poset.from_covers(1, [])
        return Poset.from_covers(2, [(0, 1)])
    covers = _shrub_covers(n)
    covers += [(3 * i + 2, 3 * i + 4) for i in range(n - 1)]
    size = 3 * n
    if variant == "E":
        covers.append((3 * n - 1, size))
        size += 1
    elif variant == "S":
        covers.append((size, 1))
        size += 1
    elif variant == "B":
        covers.append((size, 1))  # start node below first left leaf
        covers.append((3 * n - 1, size + 1))  # last right leaf below end node
        size += 2
    return Poset.from_covers(size, covers)
