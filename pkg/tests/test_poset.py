from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from conftest import two_chains, two_pairs
from mwposet.errors import CycleDetected, GroundSetTooLarge, IdealCountCapExceeded
from mwposet.oracle import labeled_posets
from mwposet.poset import (
    antichain,
    automorphisms,
    chain,
    elements_of,
    enumerate_ideals,
    ideal_closure,
    ideal_isomorphic,
    is_automorphism,
    is_complement_isomorphism,
    is_hierarchical,
    is_ideal,
    mask_of,
    maximal_split,
    poset_dual,
    poset_from_covers,
    subposets_isomorphic,
)


@st.composite
def posets(draw, max_n=6):
    """Random posets: a DAG on a random labelling, then closed."""
    n = draw(st.integers(1, max_n))
    order = draw(st.permutations(range(1, n + 1)))
    edges = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
    pairs = [(order[a], order[b]) for a, b in edges if a < b]
    return poset_from_covers(n, pairs)


def brute_isomorphic(P, A, B):
    a, b = elements_of(A), elements_of(B)
    if len(a) != len(b):
        return False
    for image in permutations(b):
        f = dict(zip(a, image))
        if all(P.le(x, y) == P.le(f[x], f[y]) for x in a for y in a):
            return True
    return False


def brute_ideals(P):
    return [m for m in range(1 << P.n) if is_ideal(P, m)]


def test_construction():
    P = two_chains()
    assert P.le(1, 3) and P.le(4, 5) and not P.le(3, 4)
    assert sorted(P.covers) == [(1, 2), (2, 3), (4, 5)]
    A = poset_from_covers(3, [])
    assert A == antichain(3)
    assert all(A.le(i, j) == (i == j) for i in range(1, 4) for j in range(1, 4))
    with pytest.raises(CycleDetected):
        poset_from_covers(2, [(1, 2), (2, 1)])


def test_transitive_input_is_reduced():
    assert poset_from_covers(3, [(1, 2), (2, 3), (1, 3)]) == chain(3)


def test_dual():
    P = two_chains()
    assert poset_dual(poset_dual(P)) == P
    assert poset_dual(antichain(4)) == antichain(4)
    assert poset_dual(chain(3)) == poset_from_covers(3, [(3, 2), (2, 1)])


def test_closure_examples():
    P = two_chains()
    assert ideal_closure(P, mask_of([3])) == mask_of([1, 2, 3])
    assert ideal_closure(P, 0) == 0
    assert ideal_closure(antichain(5), mask_of([2, 4])) == mask_of([2, 4])


def test_two_chains_ideals():
    listed = [
        [], [1], [4], [1, 2], [1, 4], [4, 5], [1, 2, 3], [1, 2, 4], [1, 4, 5],
        [1, 2, 3, 4], [1, 2, 4, 5], [1, 2, 3, 4, 5],
    ]
    assert enumerate_ideals(two_chains()) == tuple(mask_of(x) for x in listed)


def test_ideal_counts():
    for n in range(6):
        assert len(enumerate_ideals(antichain(n))) == 2**n
        assert len(enumerate_ideals(chain(n))) == n + 1
    with pytest.raises(IdealCountCapExceeded):
        enumerate_ideals(antichain(6), cap=10)


@given(posets())
def test_ideals_match_brute_force(P):
    assert sorted(enumerate_ideals(P)) == brute_ideals(P)


@given(posets(), st.integers(0, 63))
def test_closure_properties(P, X):
    X &= P.full
    c = ideal_closure(P, X)
    assert X & ~c == 0
    assert is_ideal(P, c)
    assert ideal_closure(P, c) == c
    for I in enumerate_ideals(P):
        if X & ~I == 0:
            assert c & ~I == 0


@given(posets())
def test_complements_are_dual_ideals(P):
    D = poset_dual(P)
    assert sorted(P.full & ~I for I in enumerate_ideals(P)) == sorted(enumerate_ideals(D))


def test_maximal_split():
    P = two_chains()
    assert maximal_split(P, mask_of([1, 2, 4])) == (mask_of([2, 4]), mask_of([1]))
    assert maximal_split(P, 0) == (0, 0)
    A = antichain(4)
    assert maximal_split(A, mask_of([1, 3])) == (mask_of([1, 3]), 0)


@given(posets())
def test_nonmaximal_part_is_an_ideal(P):
    for I in enumerate_ideals(P):
        M, rest = maximal_split(P, I)
        assert M | rest == I and M & rest == 0
        assert (M != 0) == (I != 0)
        assert is_ideal(P, rest)


def test_automorphism_examples():
    assert automorphisms(two_pairs()) == [(0, 1, 2, 3), (1, 0, 3, 2)]
    assert automorphisms(two_chains()) == [(0, 1, 2, 3, 4)]
    assert sorted(automorphisms(antichain(3))) == sorted(permutations(range(3)))
    with pytest.raises(GroundSetTooLarge):
        automorphisms(antichain(40))


@given(posets(max_n=5))
def test_automorphisms_match_brute_force(P):
    brute = [s for s in permutations(range(P.n)) if is_automorphism(P, s)]
    assert sorted(automorphisms(P)) == brute


def test_ideal_isomorphism_examples():
    P = two_chains()
    assert ideal_isomorphic(P, mask_of([1, 2]), mask_of([4, 5]))
    assert not ideal_isomorphic(P, mask_of([1, 2]), mask_of([1, 4]))
    for I in enumerate_ideals(P):
        assert ideal_isomorphic(P, I, I)


@given(posets(max_n=5))
def test_ideal_isomorphism_matches_brute_force(P):
    ideals = enumerate_ideals(P)
    for A, B in combinations(ideals, 2):
        assert ideal_isomorphic(P, A, B) == brute_isomorphic(P, A, B)


def test_hierarchical_examples():
    assert is_hierarchical(antichain(4))
    assert is_hierarchical(chain(3))
    assert not is_hierarchical(two_chains())
    # ordinal sum {1,2} < {3}
    assert is_hierarchical(poset_from_covers(3, [(1, 3), (2, 3)]))


def brute_complement_iso(P):
    ideals = enumerate_ideals(P)
    return all(
        brute_isomorphic(P, I, J) == brute_isomorphic(P, P.full & ~I, P.full & ~J)
        for I in ideals
        for J in ideals
    )


def test_complement_isomorphism_examples():
    P = two_chains()
    res = is_complement_isomorphism(P)
    assert not res.holds
    assert res.witness == (mask_of([1]), mask_of([4]))
    # the listed pair {1,2} ~ {4,5} is also violating
    a, b = mask_of([1, 2]), mask_of([4, 5])
    assert ideal_isomorphic(P, a, b)
    assert not subposets_isomorphic(P, P.full & ~a, P.full & ~b)
    assert brute_complement_iso(two_pairs())
    assert is_complement_isomorphism(two_pairs()).holds
    assert is_complement_isomorphism(antichain(4)).holds


def test_complement_isomorphism_matches_brute_force():
    for n in range(5):
        for P in labeled_posets(n):
            assert is_complement_isomorphism(P).holds == brute_complement_iso(P)


def test_labeled_poset_counts():
    assert [len(labeled_posets(n)) for n in range(5)] == [1, 1, 3, 19, 219]
