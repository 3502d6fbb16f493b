"""Brute-force reference computations.

Slow and deliberately naive: no pruning, no memoization, no closed forms.
Nothing here calls into ``codes`` or ``macwilliams``; only the field layer
and the raw order relation ``P.leq`` are shared with the main code.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import CodeTooLarge, SphereTooLarge, TooLarge
from .gf import CycSum, FieldSpec, char_sum, dot

BRUTE_CAP = 1 << 16
SUBSPACE_CAP = 5000


def _closure(leq, vec) -> int:
    """Mask of {b : b <= a for some a in supp(vec)}, read off the leq matrix."""
    n = len(vec)
    out = 0
    for a in range(n):
        if vec[a]:
            for b in range(n):
                if leq[b][a]:
                    out |= 1 << b
    return out


def _dual_leq(leq):
    n = len(leq)
    return tuple(tuple(leq[b][a] for b in range(n)) for a in range(n))


def _ambient(F: FieldSpec, n: int):
    if F.q**n > BRUTE_CAP:
        raise SphereTooLarge(f"brute force over F_{F.q}^{n} exceeds {BRUTE_CAP} vectors")
    return product(range(F.q), repeat=n)


def char_sum_brute(P, F: FieldSpec, u: Sequence[int], Jc: int) -> CycSum:
    """Exact sum of chi(u.v) over every v whose P*-closure of supp(v) is Jc."""
    dleq = _dual_leq(P.leq)
    coords = [range(F.q) if Jc >> i & 1 else (0,) for i in range(P.n)]
    if F.q ** bin(Jc).count("1") > BRUTE_CAP:
        raise SphereTooLarge(f"brute force over {F.q}^{bin(Jc).count('1')} vectors")
    values = []
    # only vectors supported inside Jc can have closure Jc
    for v in product(*coords):
        if _closure(dleq, v) == Jc:
            values.append(dot(F, u, v))
    return char_sum(F, values)


def _span(F: FieldSpec, rows, n: int) -> List[Tuple[int, ...]]:
    if F.q ** len(rows) > BRUTE_CAP:
        raise CodeTooLarge("code too large for brute force")
    words = set()
    for coeffs in product(range(F.q), repeat=len(rows)):
        w = [0] * n
        for c, r in zip(coeffs, rows):
            for i in range(n):
                w[i] = F.add(w[i], F.mul(c, r[i]))
        words.add(tuple(w))
    return sorted(words)


def _perp(F: FieldSpec, words, n: int) -> List[Tuple[int, ...]]:
    return [x for x in _ambient(F, n) if all(dot(F, x, c) == 0 for c in words)]


def _distribution(leq, words, E) -> Tuple[int, ...]:
    counts = [0] * len(E.blocks)
    for w in words:
        counts[E.class_of[E.ideals.index(_closure(leq, w))]] += 1
    return tuple(counts)


def dual_dist_brute(P, F: FieldSpec, G, E, D=None) -> Tuple[int, ...]:
    """Dual E*-distribution via the character triple sum divided by |C|.

    ``D`` is the dual partition on the ideals of P*; it is built from E by
    complementation when omitted.
    """
    if D is None:
        from .relations import dual_partition

        D = dual_partition(E)
    dleq = _dual_leq(P.leq)
    C = _span(F, G.rows, P.n)
    ambient = list(_ambient(F, P.n))
    dual_class = {}
    for v in ambient:
        dual_class[v] = D.class_of[D.ideals.index(_closure(dleq, v))]
    out = []
    for d in range(len(D.blocks)):
        total = CycSum.zero(F.p)
        for u in C:
            total = total + char_sum(F, [dot(F, u, v) for v in ambient if dual_class[v] == d])
        value = total.to_int()
        if value % len(C):
            raise ArithmeticError("character sum not divisible by |C|")
        out.append(value // len(C))
    return tuple(out)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def all_subspaces(F: FieldSpec, n: int):
    """Every subspace of F_q^n exactly once, as reduced row-echelon generators."""
    from .codes import GeneratorMatrix

    total = sum(gaussian_binomial(n, k, F.q) for k in range(n + 1))
    if total > SUBSPACE_CAP:
        raise TooLarge(f"F_{F.q}^{n} has {total} subspaces (cap {SUBSPACE_CAP})")
    out = []
    for k in range(n + 1):
        for pivots in combinations(range(n), k):
            slots = [
                (r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots
            ]
            for vals in product(range(F.q), repeat=len(slots)):
                rows = [[0] * n for _ in range(k)]
                for r, p in enumerate(pivots):
                    rows[r][p] = 1
                for (r, c), a in zip(slots, vals):
                    rows[r][c] = a
                out.append(GeneratorMatrix(F, n, tuple(tuple(r) for r in rows)))
    return out


@dataclass(frozen=True)
class DefinitionVerdict:
    holds: bool
    # two codes with equal E-distributions but different dual distributions
    witness: Optional[Tuple[object, object]] = None

    def __bool__(self) -> bool:
        return self.holds


def definition_check(P, F: FieldSpec, E, D=None, symmetric: bool = True) -> DefinitionVerdict:
    """Test the MacWilliams-type implication over every pair of subspaces.

    One-sided: equal E-distributions force equal E*-distributions of the
    duals.  With ``symmetric`` the converse is required as well, which is
    the same implication for E* on the dual poset.
    """
    if D is None:
        from .relations import dual_partition

        D = dual_partition(E)
    leq, dleq = P.leq, _dual_leq(P.leq)
    forward: Dict[Tuple[int, ...], Tuple[Tuple[int, ...], object]] = {}
    backward: Dict[Tuple[int, ...], Tuple[Tuple[int, ...], object]] = {}
    for G in all_subspaces(F, P.n):
        C = _span(F, G.rows, P.n)
        W = _distribution(leq, C, E)
        Wd = _distribution(dleq, _perp(F, C, P.n), D)
        for seen, key, val in ((forward, W, Wd), (backward, Wd, W)):
            if key in seen:
                prev, prev_G = seen[key]
                if prev != val:
                    return DefinitionVerdict(False, (prev_G, G))
            else:
                seen[key] = (val, G)
            if not symmetric:
                break
    return DefinitionVerdict(True)


def labeled_posets(n: int):
    """Every partial order on [n], found by filtering all strict relations.

    A relation is kept when it is transitive and antisymmetric; the result is
    sorted by the sorted tuple of its strict pairs.
    """
    from .poset import poset_from_covers

    pairs = [(a, b) for a in range(1, n + 1) for b in range(1, n + 1) if a != b]
    found = []
    for m in range(1 << len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if m >> i & 1}
        if any((b, a) in rel for a, b in rel):
            continue
        if any((a, c) not in rel for a, b in rel for b2, c in rel if b == b2):
            continue
        found.append(tuple(sorted(rel)))
    found.sort()
    return [poset_from_covers(n, rel) for rel in found]
