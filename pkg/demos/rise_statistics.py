"""A tour of forests of binary shrubs and their five rise statistics.

A binary shrub is a three-node tree whose root holds the smallest of
its three labels; a forest is an ordered row of shrubs whose labels
partition 1..3n.  Reading each shrub as (root, left, right) and
concatenating gives the forest's word.  This script walks through a
five-shrub example and all five statistics on it.
"""

from shrubstat import (
    Forest,
    RiseKind,
    enumerate_forests,
    forest_from_perm,
    forest_to_perm,
    reduction,
    rise_stat,
)

forest = Forest.from_triples(
    ((5, 12, 9), (6, 13, 15), (1, 4, 10), (7, 11, 8), (2, 14, 3))
)
word = forest_to_perm(forest)

print("A forest of five shrubs, as (root, left, right) triples:")
for i, shrub in enumerate(forest.shrubs, start=1):
    print(f"  shrub {i}: {shrub.triple}")
print(f"\nIts word: {' '.join(map(str, word))}")
print(f"Round trip through the word recovers it: {forest_from_perm(word) == forest}")

print("\nReduction relabels any distinct word onto 1..k, order-isomorphically:")
print(f"  reduction of 7 9 4 2 10 -> {' '.join(map(str, reduction((7, 9, 4, 2, 10))))}")

print("\nThe five statistics on this forest:")
for kind in RiseKind:
    print(f"  {kind.value:5s} = {rise_stat(kind, forest)}")
print("(ris counts ascents of the word; the other four compare adjacent shrubs.)")

print("\nEvery forest of n shrubs exists exactly once in the enumerator.")
for n in (1, 2, 3):
    total = sum(1 for _ in enumerate_forests(n))
    print(f"  n={n}: {total} forests  (= (3n)!/3^n)")

print("\nThe two one-shrub forests and their words:")
for f in enumerate_forests(1):
    print(f"  {f.shrubs[0].triple} -> word {forest_to_perm(f)}")
