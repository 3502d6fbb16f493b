"""Equivalence relations on the order ideals of a poset, stored as partitions.

Blocks are tuples of indices into the canonical ideal list of the poset
(see :func:`mwposet.poset.enumerate_ideals`).  Blocks are sorted internally
and ordered by their smallest member index, which for blocks of equal-size
ideals is the same as ordering by (cardinality, smallest mask).  This order
indexes every weight-distribution vector and every class matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .errors import InvalidPartition, NotASubgroup, NotAutomorphisms, PosetMismatch
from .poset import (
    Perm,
    Poset,
    apply_perm,
    compose,
    enumerate_ideals,
    is_automorphism,
    isomorphism_classes,
    popcount,
    poset_dual,
)

KINDS = ("cardinality", "aut-subgroup", "isomorphism", "custom")


@dataclass(frozen=True)
class IdealPartition:
    poset: Poset
    ideals: Tuple[int, ...]
    blocks: Tuple[Tuple[int, ...], ...]
    class_of: Tuple[int, ...] = field(repr=False)
    kind: str = "custom"
    # the subgroup behind an aut-subgroup partition, if any
    group: Optional[Tuple[Perm, ...]] = field(default=None, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.blocks)

    def block_masks(self, b: int) -> Tuple[int, ...]:
        return tuple(self.ideals[i] for i in self.blocks[b])

    def representative(self, b: int) -> int:
        return self.ideals[self.blocks[b][0]]

    def index_of(self, ideal: int) -> int:
        return self._index[ideal]

    def block_of(self, ideal: int) -> int:
        return self.class_of[self._index[ideal]]

    @property
    def _index(self) -> Dict[int, int]:
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {m: i for i, m in enumerate(self.ideals)}
            object.__setattr__(self, "_index_cache", idx)
        return idx


def _from_labels(
    P: Poset, ideals: Sequence[int], labels: Sequence, kind: str, group=None
) -> IdealPartition:
    groups: Dict[object, List[int]] = {}
    for i, lab in enumerate(labels):
        groups.setdefault(lab, []).append(i)
    blocks = sorted((tuple(sorted(g)) for g in groups.values()), key=lambda b: b[0])
    class_of = [0] * len(ideals)
    for b, members in enumerate(blocks):
        for i in members:
            class_of[i] = b
    return IdealPartition(P, tuple(ideals), tuple(blocks), tuple(class_of), kind, group)


def partition_cardinality(P: Poset) -> IdealPartition:
    ideals = enumerate_ideals(P)
    return _from_labels(P, ideals, [popcount(I) for I in ideals], "cardinality")


def group_closure(gens: Iterable[Perm], n: int) -> Tuple[Perm, ...]:
    """The permutation group generated by ``gens`` (sorted)."""
    ident = tuple(range(n))
    gens = [tuple(g) for g in gens]
    group = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = compose(g, s)
                if t not in group:
                    group.add(t)
                    nxt.append(t)
        frontier = nxt
    return tuple(sorted(group))


def cyclic_subgroup(sigma: Perm) -> Tuple[Perm, ...]:
    return group_closure([sigma], len(sigma))


def check_subgroup(P: Poset, H: Sequence[Perm]) -> Tuple[Perm, ...]:
    """Validate that H is a subgroup of Aut(P); returns H as a sorted tuple."""
    H = tuple(sorted(set(tuple(s) for s in H)))
    bad = [s for s in H if not is_automorphism(P, s)]
    if bad:
        raise NotAutomorphisms(f"not automorphisms of {P}: {[tuple(i + 1 for i in s) for s in bad]}")
    hs = set(H)
    if tuple(range(P.n)) not in hs:
        raise NotASubgroup("subgroup must contain the identity")
    for s in H:
        for t in H:
            if compose(s, t) not in hs:
                raise NotASubgroup("set of permutations is not closed under composition")
    return H


def partition_aut(P: Poset, H: Sequence[Perm]) -> IdealPartition:
    """Orbits of the subgroup H of Aut(P) acting on the ideals."""
    H = check_subgroup(P, H)
    ideals = enumerate_ideals(P)
    labels = [min(apply_perm(s, I) for s in H) for I in ideals]
    return _from_labels(P, ideals, labels, "aut-subgroup", H)


def partition_iso(P: Poset) -> IdealPartition:
    ideals = enumerate_ideals(P)
    return _from_labels(P, ideals, isomorphism_classes(P, ideals), "isomorphism")


def partition_custom(P: Poset, blocks: Iterable[Iterable[int]]) -> IdealPartition:
    """Partition given by explicit blocks of ideal masks."""
    ideals = enumerate_ideals(P)
    index = {m: i for i, m in enumerate(ideals)}
    labels: List[Optional[int]] = [None] * len(ideals)
    for b, block in enumerate(blocks):
        block = list(block)
        if not block:
            raise InvalidPartition("empty block")
        for m in block:
            if m not in index:
                raise InvalidPartition(f"mask {m} is not an order ideal of {P}")
            if labels[index[m]] is not None:
                raise InvalidPartition(f"ideal mask {m} appears in two blocks")
            labels[index[m]] = b
    missing = [ideals[i] for i, lab in enumerate(labels) if lab is None]
    if missing:
        raise InvalidPartition(f"ideals not covered by any block: {missing}")
    return _from_labels(P, ideals, labels, "custom")


def partition_singletons(P: Poset) -> IdealPartition:
    ideals = enumerate_ideals(P)
    return _from_labels(P, ideals, range(len(ideals)), "custom")


def partition_from_labels(P: Poset, labels: Sequence) -> IdealPartition:
    """Custom partition from one hashable label per canonical ideal."""
    ideals = enumerate_ideals(P)
    if len(labels) != len(ideals):
        raise InvalidPartition(f"expected {len(ideals)} labels, got {len(labels)}")
    return _from_labels(P, ideals, labels, "custom")


def dual_partition(E: IdealPartition) -> IdealPartition:
    """The complement-induced partition of the ideals of the dual poset."""
    P = E.poset
    Pd = poset_dual(P)
    dideals = enumerate_ideals(Pd)
    didx = {m: i for i, m in enumerate(dideals)}
    labels = [0] * len(dideals)
    for b, members in enumerate(E.blocks):
        for i in members:
            labels[didx[P.full & ~E.ideals[i]]] = b
    return _from_labels(Pd, dideals, labels, E.kind, E.group)


def refines(A: IdealPartition, B: IdealPartition) -> bool:
    """Whether every block of A lies inside a block of B."""
    if A.poset != B.poset or A.ideals != B.ideals:
        raise PosetMismatch("partitions live on different posets")
    return all(len({B.class_of[i] for i in block}) == 1 for block in A.blocks)


def same_partition(A: IdealPartition, B: IdealPartition) -> bool:
    return A.poset == B.poset and A.blocks == B.blocks


def dual_respects_rule(E: IdealPartition) -> Optional[bool]:
    """Whether the defining rule of E, applied on the dual poset, gives E*.

    Always true for cardinality and subgroup-orbit relations; for the
    isomorphism relation it holds exactly for complement isomorphism posets.
    Custom partitions have no rule, so ``None`` is returned.
    """
    D = dual_partition(E)
    Pd = D.poset
    if E.kind == "cardinality":
        rule = partition_cardinality(Pd)
    elif E.kind == "aut-subgroup":
        rule = partition_aut(Pd, E.group)
    elif E.kind == "isomorphism":
        rule = partition_iso(Pd)
    else:
        return None
    return rule.blocks == D.blocks
