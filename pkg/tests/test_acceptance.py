"""Acceptance gate: one test per criterion, each with its time budget.

Run with ``pytest tests/test_acceptance.py``; the terminal summary prints one
PASS/FAIL line per criterion.
"""

import random
import time
from itertools import product

import pytest

from conftest import named_corpus, two_chains, two_pairs
from mwposet.codes import (
    dual_code,
    generator,
    sphere,
    sphere_size,
    weight_distribution,
)
from mwposet.gf import field_make
from mwposet.macwilliams import (
    char_sum_closed,
    check_macwilliams_type,
    ideal_emptiness_equiv,
    isomorphism_witness_codes,
    krawtchouk,
    one_dim_distributions,
    pq_matrix,
    reciprocity_check,
    stabilizer_identity,
    verify_identity,
)
from mwposet.oracle import all_subspaces, char_sum_brute, definition_check, labeled_posets
from mwposet.poset import (
    antichain,
    automorphisms,
    enumerate_ideals,
    is_complement_isomorphism,
    is_hierarchical,
    mask_of,
    poset_dual,
)
from mwposet.relations import (
    cyclic_subgroup,
    dual_partition,
    partition_aut,
    partition_cardinality,
    partition_from_labels,
    partition_iso,
    partition_singletons,
)


class Budget:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        if exc[0] is None:
            elapsed = time.perf_counter() - self.start
            assert elapsed < self.seconds, f"took {elapsed:.2f}s, budget {self.seconds}s"


def masks(*groups):
    return sorted(sorted(mask_of(x) for x in g) for g in groups)


def blocks(E):
    return sorted(sorted(E.block_masks(b)) for b in range(len(E)))


def small_posets(max_n):
    return [P for n in range(max_n + 1) for P in labeled_posets(n)]


def corpus():
    return small_posets(4) + list(named_corpus().values())


@pytest.mark.criterion(1)
def test_criterion_01_two_chains_listing():
    """1<2<3, 4<5: 12 ideals, 6 cardinality classes, 9 isomorphism classes as listed"""
    with Budget(1):
        P = two_chains()
        listed = [
            [], [1], [4], [1, 2], [1, 4], [4, 5], [1, 2, 3], [1, 2, 4], [1, 4, 5],
            [1, 2, 3, 4], [1, 2, 4, 5], [1, 2, 3, 4, 5],
        ]
        assert enumerate_ideals(P) == tuple(mask_of(x) for x in listed)
        assert blocks(partition_cardinality(P)) == masks(
            [[]],
            [[1], [4]],
            [[1, 2], [1, 4], [4, 5]],
            [[1, 2, 3], [1, 2, 4], [1, 4, 5]],
            [[1, 2, 3, 4], [1, 2, 4, 5]],
            [[1, 2, 3, 4, 5]],
        )
        assert blocks(partition_iso(P)) == masks(
            [[]],
            [[1], [4]],
            [[1, 2], [4, 5]],
            [[1, 4]],
            [[1, 2, 3]],
            [[1, 2, 4], [1, 4, 5]],
            [[1, 2, 3, 4]],
            [[1, 2, 4, 5]],
            [[1, 2, 3, 4, 5]],
        )


@pytest.mark.criterion(2)
def test_criterion_02_two_pairs_orbits():
    """1<3, 2<4: |Aut| = 2 and the 6 listed orbit blocks"""
    with Budget(1):
        P = two_pairs()
        H = automorphisms(P)
        assert H == [(0, 1, 2, 3), (1, 0, 3, 2)]
        E = partition_aut(P, H)
        assert blocks(E) == masks(
            [[]],
            [[1], [2]],
            [[1, 2]],
            [[1, 3], [2, 4]],
            [[1, 2, 3], [1, 2, 4]],
            [[1, 2, 3, 4]],
        )
        assert sorted(E.block_masks(E.block_of(mask_of([1, 3])))) == [mask_of([1, 3]), mask_of([2, 4])]


@pytest.mark.criterion(3)
def test_criterion_03_krawtchouk_and_transpose():
    """antichains n=1..5, q in {2,3}: Q entries are Krawtchouk values and P equals Q transposed"""
    with Budget(5):
        transpose_failures = []
        for q in (2, 3):
            for n in range(1, 6):
                A = antichain(n)
                E = partition_cardinality(A)
                Qm = pq_matrix(A, q, E, "q")
                Pm = pq_matrix(A, q, E, "p")
                for i in range(n + 1):
                    for j in range(n + 1):
                        assert Qm.entries[i][j] == krawtchouk(i, j, n, q)
                if Pm.entries != Qm.transpose():
                    transpose_failures.append((q, n))
        assert not transpose_failures, (
            f"P != Q^T for (q, n) in {transpose_failures}: both matrices equal the "
            "Krawtchouk matrix [K_i(j)], which is symmetric only for n = 1, q = 2"
        )


@pytest.mark.criterion(4)
def test_criterion_04_closed_sums_match_brute_force():
    """sphere sizes and closed-form character sums equal brute force on the four named posets"""
    with Budget(30):
        for P in named_corpus().values():
            Pd = poset_dual(P)
            dideals = enumerate_ideals(Pd)
            for q in (2, 3):
                F = field_make(q)
                for I in enumerate_ideals(P):
                    S = sphere(P, F, I)
                    assert sphere_size(P, q, I) == len(S)
                    for Jc in dideals:
                        expected = char_sum_closed(P, F, I, Jc)
                        for u in S:
                            assert char_sum_brute(P, F, u, Jc).to_int() == expected


@pytest.mark.criterion(5)
def test_criterion_05_emptiness_conditions_agree():
    """the four emptiness conditions agree on every ideal pair of every corpus poset"""
    with Budget(5):
        for P in corpus():
            ideals = enumerate_ideals(P)
            for I in ideals:
                for J in ideals:
                    assert ideal_emptiness_equiv(P, I, J).agree(), (P, I, J)


def _random_partitions(P, count, rng):
    size = len(enumerate_ideals(P))
    out = []
    for _ in range(count):
        k = rng.randint(1, size)
        out.append(partition_from_labels(P, [rng.randrange(k) for _ in range(size)]))
    return out


@pytest.mark.criterion(6)
def test_criterion_06_checker_matches_definition():
    """n <= 3, F_2: checker equals the subspace-pair definition; identities hold when true"""
    rng = random.Random(20240611)
    F = field_make(2)
    with Budget(120):
        for P in small_posets(3):
            subspaces = all_subspaces(F, P.n)
            relations = [
                partition_cardinality(P),
                partition_aut(P, automorphisms(P)),
                partition_iso(P),
            ] + _random_partitions(P, 10, rng)
            for E in relations:
                verdict = check_macwilliams_type(P, F, E)
                assert verdict.holds == definition_check(P, F, E).holds, (P, E.blocks)
                if verdict.holds:
                    for G in subspaces:
                        assert verify_identity(P, F, G, E).passed


@pytest.mark.criterion(7)
def test_criterion_07_cardinality_iff_hierarchical():
    """all posets n <= 4: cardinality relation is MacWilliams-type iff hierarchical"""
    with Budget(120):
        for P in small_posets(4):
            E = partition_cardinality(P)
            for q in (2, 3):
                assert check_macwilliams_type(P, q, E).holds == is_hierarchical(P), P


@pytest.mark.criterion(8)
def test_criterion_08_isomorphism_iff_complement_isomorphism():
    """all posets n <= 4: isomorphism relation is MacWilliams-type iff complement isomorphism"""
    F = field_make(2)
    with Budget(180):
        for P in small_posets(4):
            E = partition_iso(P)
            ci = is_complement_isomorphism(P).holds
            for q in (2, 3):
                assert check_macwilliams_type(P, q, E).holds == ci, P
            if not ci:
                w = isomorphism_witness_codes(P, F, E)
                assert w is not None and w.valid, P
                D = dual_partition(E)
                assert weight_distribution(P, F, w.code1, E).counts == weight_distribution(
                    P, F, w.code2, E
                ).counts
                assert weight_distribution(D.poset, F, dual_code(w.code1), D).counts != (
                    weight_distribution(D.poset, F, dual_code(w.code2), D).counts
                )


@pytest.mark.criterion(9)
def test_criterion_09_orbit_relations_are_macwilliams_type():
    """all posets n <= 4: orbits of Aut(P) and of every cyclic subgroup are MacWilliams-type"""
    with Budget(120):
        for P in small_posets(4):
            H = automorphisms(P)
            groups = {tuple(H)} | {cyclic_subgroup(s) for s in H}
            for group in groups:
                E = partition_aut(P, group)
                for q in (2, 3):
                    assert check_macwilliams_type(P, q, E).holds, (P, group)


@pytest.mark.criterion(10)
def test_criterion_10_reciprocity_and_stabilizers():
    """corpus, Aut orbits: reciprocity and the stabilizer identity hold for every class pair"""
    with Budget(30):
        for P in corpus():
            H = automorphisms(P)
            E = partition_aut(P, H)
            dideals = enumerate_ideals(poset_dual(P))
            for q in (2, 3):
                assert reciprocity_check(P, q, E), P
                for I in E.ideals:
                    for Jc in dideals:
                        assert stabilizer_identity(P, q, H, I, Jc), (P, I, Jc)


@pytest.mark.criterion(11)
def test_criterion_11_hamming_code():
    """Hamming [7,4] on the 7-antichain: classical spectra and both transforms"""
    with Budget(1):
        F = field_make(2)
        A = antichain(7)
        G = generator(
            F,
            [
                [1, 0, 0, 0, 1, 1, 0],
                [0, 1, 0, 0, 1, 0, 1],
                [0, 0, 1, 0, 0, 1, 1],
                [0, 0, 0, 1, 1, 1, 1],
            ],
        )
        r = verify_identity(A, F, G, partition_cardinality(A))
        assert r.code_distribution == (1, 0, 0, 7, 7, 0, 0, 1)
        assert r.dual_distribution == (1, 0, 0, 0, 7, 0, 0, 0)
        assert r.dual_from_code == (1, 0, 0, 0, 7, 0, 0, 0)
        assert r.code_from_dual == r.code_distribution


@pytest.mark.criterion(12)
def test_criterion_12_one_dimensional_codes():
    """1<2<3, 4<5 over F_2: closed one-word distributions equal enumeration for every valid relation"""
    F = field_make(2)
    P = two_chains()
    with Budget(10):
        candidates = [
            partition_cardinality(P),
            partition_iso(P),
            partition_aut(P, automorphisms(P)),
            partition_singletons(P),
        ]
        valid = [E for E in candidates if check_macwilliams_type(P, F, E)]
        assert valid
        for E in valid:
            D = dual_partition(E)
            for u in product(range(2), repeat=5):
                if not any(u):
                    continue
                G = generator(F, [u])
                H = dual_code(G)
                assert H.k == 4
                W, Wd = one_dim_distributions(P, F, u, E)
                assert W == weight_distribution(P, F, G, E).counts
                assert Wd == weight_distribution(D.poset, F, H, D).counts
