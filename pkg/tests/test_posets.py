import pytest

from shrubstat import (
    GuardExceeded,
    Poset,
    RiseKind,
    XPoly,
    build_adjacent_poset,
    build_ibf_poset,
    build_isf_poset,
    build_lex_poset,
    count_linear_extensions,
    enumerate_linear_extensions,
    forest_from_perm,
    ibf,
    ilf,
    linext_seq,
    shrub_less,
    within_rise_poly,
    within_shrub_rises,
)


def chain(k):
    return Poset.from_covers(k, [(i, i + 1) for i in range(k - 1)])


def antichain(k):
    return Poset.from_covers(k, [])


def test_poset_validation():
    with pytest.raises(ValueError):
        Poset.from_covers(2, [(0, 2)])
    with pytest.raises(ValueError):
        Poset.from_covers(2, [(1, 1)])
    with pytest.raises(ValueError):
        Poset.from_covers(-1, [])


def test_cycle_detection():
    cyclic = Poset.from_covers(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(ValueError):
        count_linear_extensions(cyclic)
    with pytest.raises(ValueError):
        list(enumerate_linear_extensions(cyclic))


def test_chain_and_antichain_counts():
    assert count_linear_extensions(chain(7)) == 1
    assert count_linear_extensions(antichain(4)) == 24
    assert count_linear_extensions(antichain(0)) == 1
    assert list(enumerate_linear_extensions(chain(3))) == [(1, 2, 3)]


def test_enumeration_matches_count_and_is_sorted():
    for poset in (
        antichain(3),
        build_isf_poset(2),
        build_ibf_poset(2),
        build_lex_poset(2),
        build_adjacent_poset("B", 1),
    ):
        labelings = list(enumerate_linear_extensions(poset))
        assert len(labelings) == count_linear_extensions(poset)
        assert labelings == sorted(labelings)
        assert len(set(labelings)) == len(labelings)
        assert all(poset.check_labeling(lab) for lab in labelings)


def test_guards():
    with pytest.raises(GuardExceeded):
        count_linear_extensions(antichain(25))
    with pytest.raises(GuardExceeded):
        list(enumerate_linear_extensions(antichain(13)))
    assert count_linear_extensions(chain(30), max_size=30) == 1


def test_adjacent_family_base_counts():
    got = tuple(
        count_linear_extensions(build_adjacent_poset(v, 1)) for v in "AESB"
    )
    assert got == (2, 3, 5, 9)


def test_adjacent_family_degenerate_cases():
    assert count_linear_extensions(build_adjacent_poset("A", 0)) == 1
    assert count_linear_extensions(build_adjacent_poset("E", 0)) == 1
    assert count_linear_extensions(build_adjacent_poset("S", 0)) == 1
    # the two-chain
    b0 = build_adjacent_poset("B", 0)
    assert b0.size == 2 and count_linear_extensions(b0) == 1


def test_adjacent_family_sizes():
    assert build_adjacent_poset("A", 5).size == 15
    assert build_adjacent_poset("E", 5).size == 16
    assert build_adjacent_poset("S", 5).size == 16
    assert build_adjacent_poset("B", 5).size == 17


def test_adjacent_family_matches_recurrences():
    for n in (0, 1, 2, 3):
        for variant, kind in (("A", "LA"), ("E", "LE"), ("S", "LS"), ("B", "LB")):
            got = count_linear_extensions(build_adjacent_poset(variant, n))
            assert got == linext_seq(kind, n), (variant, n)


def test_isf_poset_counts_and_words():
    assert [lab for lab in enumerate_linear_extensions(build_isf_poset(1))] == [
        (1, 2, 3),
        (1, 3, 2),
    ]
    # boundary-increasing words of n shrubs number prod_k (3k - 1)
    assert count_linear_extensions(build_isf_poset(2)) == 2 * 5
    assert count_linear_extensions(build_isf_poset(3)) == 2 * 5 * 8


def test_ibf_poset_counts():
    for n in (1, 2, 3, 4):
        assert count_linear_extensions(build_ibf_poset(n)) == ibf(n)


def test_lex_poset_counts():
    for n in (1, 2, 3, 4):
        assert count_linear_extensions(build_lex_poset(n)) == ilf(n)


def test_labelings_are_increasing_forest_words():
    # reading a labeling in word positions gives a forest that is
    # increasing in the matching order
    for lab in enumerate_linear_extensions(build_ibf_poset(2)):
        forest = forest_from_perm(lab)
        assert shrub_less(RiseKind.BASE, *forest.shrubs)
    for lab in enumerate_linear_extensions(build_lex_poset(2)):
        forest = forest_from_perm(lab)
        assert shrub_less(RiseKind.LEX, *forest.shrubs)
    for lab in enumerate_linear_extensions(build_adjacent_poset("A", 2)):
        forest = forest_from_perm(lab)
        assert shrub_less(RiseKind.ADJACENT, *forest.shrubs)
    for lab in enumerate_linear_extensions(build_isf_poset(2)):
        word = lab
        assert word[2] < word[3]  # right leaf below the next root
        forest_from_perm(word)


def test_within_rise_identity_over_isf_extensions():
    # sum of x^(interior ascents) over boundary-increasing words equals
    # x^n prod (x + 3k - 2)
    for n in (1, 2, 3):
        acc = {}
        for lab in enumerate_linear_extensions(build_isf_poset(n)):
            v = within_shrub_rises(lab)
            acc[v] = acc.get(v, 0) + 1
        dist = XPoly(acc.get(k, 0) for k in range(max(acc) + 1))
        assert dist == within_rise_poly(n)


def test_builder_argument_validation():
    for builder in (build_isf_poset, build_ibf_poset, build_lex_poset):
        with pytest.raises(ValueError):
            builder(0)
    with pytest.raises(ValueError):
        build_adjacent_poset("X", 1)
    with pytest.raises(ValueError):
        build_adjacent_poset("A", -1)
