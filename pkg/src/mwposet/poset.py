"""Finite posets on [n], order ideals and order-preserving maps.

Element ``i`` of [n] (1-based, as users write it) is bit ``i - 1`` of an
integer mask; an order ideal is simply such a mask.  Permutations are
0-based image tuples: ``perm[i] == j`` sends element i+1 to element j+1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from . import config
from .errors import (
    CycleDetected,
    GroundSetTooLarge,
    IdealCountCapExceeded,
    NotAnIdeal,
    OutOfRangeElement,
)

Perm = Tuple[int, ...]


def popcount(x: int) -> int:
    return bin(x).count("1")


def mask_of(elements: Iterable[int]) -> int:
    """Mask of a collection of 1-based elements."""
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> Tuple[int, ...]:
    """1-based elements of a mask, ascending."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _bits(mask: int) -> Iterator[int]:
    """0-based bit positions of a mask."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """A partial order on [n].

    ``down[i]`` is the mask of elements <= i+1 and ``up[i]`` of elements
    >= i+1 (both reflexive).  ``covers`` is the transitive reduction as
    sorted 1-based pairs (a, b) with a covered by b.
    """

    n: int
    covers: Tuple[Tuple[int, int], ...]
    down: Tuple[int, ...]
    up: Tuple[int, ...]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def leq(self) -> Tuple[Tuple[bool, ...], ...]:
        return tuple(
            tuple(bool(self.up[a] >> b & 1) for b in range(self.n)) for a in range(self.n)
        )

    def le(self, a: int, b: int) -> bool:
        """``a <= b`` for 1-based elements."""
        return bool(self.down[b - 1] >> (a - 1) & 1)

    def relations(self) -> Tuple[Tuple[int, int], ...]:
        """All strict relations a < b as 1-based pairs."""
        return tuple(
            (a + 1, b + 1)
            for b in range(self.n)
            for a in _bits(self.down[b] & ~(1 << b))
        )

    def __repr__(self) -> str:
        rel = ", ".join(f"{a}<{b}" for a, b in self.covers)
        return f"Poset(n={self.n}, covers=[{rel}])"


def _from_down(n: int, down: List[int]) -> Poset:
    for i in range(n):
        for j in _bits(down[i]):
            if j != i and down[j] >> i & 1:
                raise CycleDetected(f"elements {i + 1} and {j + 1} lie on a cycle")
    up = [0] * n
    for b in range(n):
        for a in _bits(down[b]):
            up[a] |= 1 << b
    covers = []
    for b in range(n):
        strict = down[b] & ~(1 << b)
        for a in _bits(strict):
            # a is covered by b iff no c with a < c < b
            between = strict & up[a] & ~(1 << a)
            if not between:
                covers.append((a + 1, b + 1))
    return Poset(n, tuple(sorted(covers)), tuple(down), tuple(up))


def poset_from_covers(n: int, pairs: Iterable[Tuple[int, int]]) -> Poset:
    """Poset generated by relations a < b (reflexive-transitive closure)."""
    if n < 0:
        raise ValueError("ground set size must be non-negative")
    down = [1 << i for i in range(n)]
    for a, b in pairs:
        if not (1 <= a <= n and 1 <= b <= n):
            raise OutOfRangeElement(f"pair ({a}, {b}) outside [1, {n}]")
        if a == b:
            raise CycleDetected(f"reflexive pair ({a}, {a}) given as strict relation")
        down[b - 1] |= 1 << (a - 1)
    # closure: Warshall on masks
    for k in range(n):
        dk = down[k]
        for i in range(n):
            if down[i] >> k & 1:
                down[i] |= dk
    return _from_down(n, down)


def antichain(n: int) -> Poset:
    return poset_from_covers(n, [])


def chain(n: int) -> Poset:
    return poset_from_covers(n, [(i, i + 1) for i in range(1, n)])


def poset_dual(P: Poset) -> Poset:
    return Poset(P.n, tuple(sorted((b, a) for a, b in P.covers)), P.up, P.down)


def ideal_closure(P: Poset, X) -> int:
    """Smallest ideal containing X (a mask or an iterable of 1-based elements)."""
    mask = X if isinstance(X, int) else mask_of(X)
    if mask & ~P.full:
        raise OutOfRangeElement(f"subset {elements_of(mask)} not inside [1, {P.n}]")
    out = 0
    for i in _bits(mask):
        out |= P.down[i]
    return out


def is_ideal(P: Poset, mask: int) -> bool:
    if mask & ~P.full:
        return False
    return all(P.down[i] & ~mask == 0 for i in _bits(mask))


def require_ideal(P: Poset, mask: int) -> int:
    if not is_ideal(P, mask):
        raise NotAnIdeal(f"{set(elements_of(mask)) or '{}'} is not an order ideal of {P}")
    return mask


def ideal_sort_key(mask: int) -> Tuple[int, int]:
    return popcount(mask), mask


def enumerate_ideals(P: Poset, cap: Optional[int] = None) -> Tuple[int, ...]:
    """All order ideals ordered by (cardinality, mask); includes 0 and the full set."""
    cap = config.LIMITS.ideals if cap is None else cap
    return _enumerate_ideals(P, cap)


@lru_cache(maxsize=512)
def _enumerate_ideals(P: Poset, cap: int) -> Tuple[int, ...]:
    seen = {0}
    stack = [0]
    while stack:
        ideal = stack.pop()
        free = P.full & ~ideal
        for i in _bits(free):
            # i can be added once everything strictly below it is present
            if P.down[i] & ~ideal == 1 << i:
                nxt = ideal | 1 << i
                if nxt not in seen:
                    seen.add(nxt)
                    if len(seen) > cap:
                        raise IdealCountCapExceeded(
                            f"more than {cap} order ideals; raise the cap to continue"
                        )
                    stack.append(nxt)
    return tuple(sorted(seen, key=ideal_sort_key))


def maximal_elements(P: Poset, mask: int) -> int:
    out = 0
    for i in _bits(mask):
        if P.up[i] & mask == 1 << i:
            out |= 1 << i
    return out


def maximal_split(P: Poset, I: int) -> Tuple[int, int]:
    """(M(I), I_M): maximal elements of the ideal I and the rest."""
    require_ideal(P, I)
    M = maximal_elements(P, I)
    return M, I & ~M


def apply_perm(perm: Perm, mask: int) -> int:
    out = 0
    for i in _bits(mask):
        out |= 1 << perm[i]
    return out


def compose(s: Perm, t: Perm) -> Perm:
    """s after t."""
    return tuple(s[t[i]] for i in range(len(t)))


def invert(s: Perm) -> Perm:
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def is_automorphism(P: Poset, perm: Perm) -> bool:
    if sorted(perm) != list(range(P.n)):
        return False
    return all(apply_perm(perm, P.down[i]) == P.down[perm[i]] for i in range(P.n))


# --- induced-subposet isomorphism -----------------------------------------

def _levels(P: Poset, mask: int) -> Dict[int, int]:
    """Longest-chain level of each element of the induced subposet on mask."""
    level: Dict[int, int] = {}
    for i in sorted(_bits(mask), key=lambda i: popcount(P.down[i] & mask)):
        below = P.down[i] & mask & ~(1 << i)
        level[i] = 1 + max((level[j] for j in _bits(below)), default=-1)
    return level


def _signature(P: Poset, mask: int) -> Dict[int, Tuple[int, int, int]]:
    lv = _levels(P, mask)
    return {
        i: (lv[i], popcount(P.down[i] & mask), popcount(P.up[i] & mask)) for i in _bits(mask)
    }


def _isomorphisms(P: Poset, A: int, B: int) -> Iterator[Dict[int, int]]:
    """Yield order isomorphisms from the subposet on A onto the subposet on B.

    Maps are dicts of 0-based elements.  Domain elements are assigned in
    ascending order and candidates tried in ascending order, so the output
    order is deterministic.
    """
    if popcount(A) != popcount(B):
        return
    sa, sb = _signature(P, A), _signature(P, B)
    if sorted(sa.values()) != sorted(sb.values()):
        return
    order = sorted(sa)
    cands = {x: [y for y in sorted(sb) if sb[y] == sa[x]] for x in order}
    f: Dict[int, int] = {}
    used = 0

    def extend(k: int) -> Iterator[Dict[int, int]]:
        nonlocal used
        if k == len(order):
            yield dict(f)
            return
        x = order[k]
        for y in cands[x]:
            if used >> y & 1:
                continue
            ok = True
            for x2, y2 in f.items():
                if (P.down[x] >> x2 & 1) != (P.down[y] >> y2 & 1) or (
                    P.up[x] >> x2 & 1
                ) != (P.up[y] >> y2 & 1):
                    ok = False
                    break
            if not ok:
                continue
            f[x] = y
            used |= 1 << y
            yield from extend(k + 1)
            del f[x]
            used &= ~(1 << y)

    yield from extend(0)


def subposets_isomorphic(P: Poset, A: int, B: int) -> bool:
    """Whether the induced subposets of P on masks A and B are isomorphic."""
    return next(_isomorphisms(P, A, B), None) is not None


def automorphisms(P: Poset) -> List[Perm]:
    """All automorphisms of P, in lexicographic order of their image tuples."""
    if P.n > config.LIMITS.ground_set:
        raise GroundSetTooLarge(f"n={P.n} exceeds the ground-set cap {config.LIMITS.ground_set}")
    return list(_automorphisms(P))


@lru_cache(maxsize=512)
def _automorphisms(P: Poset) -> Tuple[Perm, ...]:
    return tuple(tuple(f[i] for i in range(P.n)) for f in _isomorphisms(P, P.full, P.full))


def ideal_isomorphic(P: Poset, I: int, J: int) -> bool:
    require_ideal(P, I)
    require_ideal(P, J)
    return subposets_isomorphic(P, I, J)


def isomorphism_classes(P: Poset, masks: Sequence[int]) -> List[int]:
    """Class index for each mask, grouping induced subposets by isomorphism.

    Class indices are assigned in order of first appearance.
    """
    reps: Dict[tuple, List[Tuple[int, int]]] = {}
    out = []
    count = 0
    for m in masks:
        key = (popcount(m), tuple(sorted(_signature(P, m).values())))
        bucket = reps.setdefault(key, [])
        for rep, cls in bucket:
            if subposets_isomorphic(P, rep, m):
                out.append(cls)
                break
        else:
            bucket.append((m, count))
            out.append(count)
            count += 1
    return out


# --- classifiers -------------------------------------------------------------

def is_hierarchical(P: Poset) -> bool:
    """Whether P is an ordinal sum of antichains: x < y iff level(x) < level(y)."""
    lv = _levels(P, P.full)
    for x in range(P.n):
        for y in range(P.n):
            if x != y and bool(P.down[y] >> x & 1) != (lv[x] < lv[y]):
                return False
    return True


class ComplementCheck(NamedTuple):
    holds: bool
    witness: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.holds


def is_complement_isomorphism(P: Poset) -> ComplementCheck:
    """Check that I ~ J iff I^c ~ J^c for all ideals I, J.

    On failure the witness is the first ideal pair (I, J), in canonical
    order, where exactly one side of the equivalence holds.
    """
    ideals = enumerate_ideals(P)
    cls = isomorphism_classes(P, ideals)
    ccls = isomorphism_classes(P, [P.full & ~I for I in ideals])
    for a in range(len(ideals)):
        for b in range(a + 1, len(ideals)):
            if (cls[a] == cls[b]) != (ccls[a] == ccls[b]):
                return ComplementCheck(False, (ideals[a], ideals[b]))
    return ComplementCheck(True)
