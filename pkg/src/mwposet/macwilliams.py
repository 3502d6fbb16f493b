"""MacWilliams-type relations: sphere character sums, P/Q matrices and checks.

Conventions
-----------
For a relation E on the ideals of P and its complement-induced dual E*
on the ideals of P*:

* ``p[d][c]`` (P-matrix, rows = dual classes) is the character sum of
  chi(u.v) over v in the dual sphere class d, for any nonzero u in the
  sphere class c.
* ``q[c][d]`` (Q-matrix, rows = classes) is the character sum of chi(u.v)
  over u in the sphere class c, for any nonzero v in the dual sphere
  class d.

With these entries the transforms are

    W(C-dual, P*, E*) = (W(C, P, E) . P^T + offset_P) / |C|
    W(C, P, E)        = (W(C-dual, P*, E*) . Q^T + offset_Q) / |C-dual|

The offsets account for the zero word and vanish unless the empty ideal
shares its class with other ideals, which no rule-based relation does.

and the two matrices are linked by the reciprocity identity checked in
:func:`reciprocity_check`.  Q is not the transpose of P in general: for the
antichain, p[j][i] = K_j(i) and q[i][j] = K_i(j) for Krawtchouk K.

Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Optional, Sequence, Tuple, Union

from .codes import (
    GeneratorMatrix,
    coordinate_code,
    dual_code,
    ideal_of,
    sphere_class_sizes,
    sphere_size,
    support,
    weight_distribution,
)
from .errors import (
    NonIntegralQuotient,
    NotMacWilliamsType,
    ZeroGenerator,
    PosetMismatch,
)
from .gf import FieldSpec
from .poset import (
    Perm,
    Poset,
    _bits,
    apply_perm,
    enumerate_ideals,
    isomorphism_classes,
    maximal_elements,
    maximal_split,
    popcount,
    poset_dual,
    require_ideal,
)
from .relations import IdealPartition, check_subgroup, dual_partition, partition_aut

FieldLike = Union[FieldSpec, int]


def _order(F: FieldLike) -> int:
    return F.q if isinstance(F, FieldSpec) else int(F)


# --- ideal-level quantities --------------------------------------------------

@dataclass(frozen=True)
class EmptinessConditions:
    """The four equivalent emptiness conditions for a pair of ideals I, J.

    ``support``: supp(u) misses (J^c)_M for every u in S_I;
    ``maximal``: M(I) misses (J^c)_M;  ``ideal``: I misses (J^c)_M;
    ``nonmaximal``: I_M misses J^c.  Maximality in J^c is taken in P*.
    """

    support: bool
    maximal: bool
    ideal: bool
    nonmaximal: bool

    def agree(self) -> bool:
        return self.support == self.maximal == self.ideal == self.nonmaximal


def ideal_emptiness_equiv(P: Poset, I: int, J: int) -> EmptinessConditions:
    require_ideal(P, I)
    require_ideal(P, J)
    Jc = P.full & ~J
    M, IM = maximal_split(P, I)
    Jc_rest = Jc & ~maximal_elements(poset_dual(P), Jc)
    # every support of a vector in S_I is M(I) plus a subset of I_M
    supp_ok = True
    free = list(_bits(IM))
    for sub in range(1 << len(free)):
        S = M
        for k, b in enumerate(free):
            if sub >> k & 1:
                S |= 1 << b
        if S & Jc_rest:
            supp_ok = False
            break
    return EmptinessConditions(
        supp_ok,
        not (M & Jc_rest),
        not (I & Jc_rest),
        not (IM & Jc),
    )


def _closed_value(q: int, I: int, I_rest: int, Jc: int, Jc_max: int, Jc_rest: int) -> int:
    if I_rest & Jc:
        return 0
    t = popcount(I & Jc)
    return (-1) ** t * (q - 1) ** (popcount(Jc_max) - t) * q ** popcount(Jc_rest)


def char_sum_closed(P: Poset, F: FieldLike, I: int, Jc: int) -> int:
    """Sum of chi(u.v) over v in the P*-sphere of Jc, for any u in S_I.

    ``I`` is an ideal of P and ``Jc`` an ideal of the dual poset.  The value
    is (-1)^t (q-1)^(|M(Jc)|-t) q^|Jc_M| with t = |I & Jc| when I_M misses
    Jc, and 0 otherwise (maximality of Jc taken in P*).
    """
    q = _order(F)
    Pd = poset_dual(P)
    require_ideal(P, I)
    require_ideal(Pd, Jc)
    Jmax, Jrest = maximal_split(Pd, Jc)
    return _closed_value(q, I, I & ~maximal_elements(P, I), Jc, Jmax, Jrest)


@lru_cache(maxsize=256)
def _tables(P: Poset, q: int):
    """Closed-form sums for every (ideal of P, ideal of P*) pair, both ways.

    ``fwd[i][j]``: sum over v in S_{dual ideal j} of chi(u.v), u in S_{ideal i}.
    ``bwd[j][i]``: sum over u in S_{ideal i} of chi(u.v), v in S_{dual ideal j}.
    """
    Pd = poset_dual(P)
    ideals = enumerate_ideals(P)
    dideals = enumerate_ideals(Pd)
    split = [maximal_split(P, I) for I in ideals]
    dsplit = [maximal_split(Pd, K) for K in dideals]
    fwd = tuple(
        tuple(_closed_value(q, I, IM, K, KM, Kr) for K, (KM, Kr) in zip(dideals, dsplit))
        for I, (_, IM) in zip(ideals, split)
    )
    bwd = tuple(
        tuple(_closed_value(q, K, Kr, I, IM_max, IM) for I, (IM_max, IM) in zip(ideals, split))
        for K, (_, Kr) in zip(dideals, dsplit)
    )
    return ideals, dideals, fwd, bwd


# --- the decision procedure -------------------------------------------------

@dataclass(frozen=True)
class Witness:
    """Two members of one class whose sums over another class differ.

    For condition "a" the members are ideals of P in class ``cls`` of E and
    ``other`` is a class of E*; for "b" the members are ideals of P* in class
    ``cls`` of E* and ``other`` is a class of E.
    """

    condition: str
    cls: int
    member1: int
    member2: int
    other: int
    sum1: int
    sum2: int

    def as_dict(self, P: Optional[Poset] = None) -> dict:
        from .poset import elements_of

        d = dict(self.__dict__)
        d["member1_elements"] = list(elements_of(self.member1))
        d["member2_elements"] = list(elements_of(self.member2))
        return d


@dataclass(frozen=True)
class Verdict:
    holds: bool
    witness: Optional[Witness] = None

    def __bool__(self) -> bool:
        return self.holds


def _members(part: IdealPartition, block) -> list:
    """Block members that carry nonzero vectors.

    The empty ideal's sphere is {0}, which spans no one-dimensional code, so
    it never constrains a class it shares with other ideals.
    """
    return [i for i in block if part.ideals[i]]


def _first_violation(cond, table, row_part, col_part) -> Optional[Witness]:
    for c, rb in enumerate(row_part.blocks):
        mem = _members(row_part, rb)
        if len(mem) < 2:
            continue
        for d, cb in enumerate(col_part.blocks):
            first = sum(table[mem[0]][j] for j in cb)
            for i in mem[1:]:
                s = sum(table[i][j] for j in cb)
                if s != first:
                    return Witness(
                        cond, c, row_part.ideals[mem[0]], row_part.ideals[i], d, first, s
                    )
    return None


def _rep(part: IdealPartition, block) -> int:
    """Index of the first member with nonzero vectors, else the block's only member."""
    mem = _members(part, block)
    return mem[0] if mem else block[0]


def check_macwilliams_type(P: Poset, F: FieldLike, E: IdealPartition) -> Verdict:
    """Decide whether E is of MacWilliams type over F_q.

    Condition (a): for each class of E and each class of E*, the sphere sum
    over the dual class is the same for every nonzero u in the class.
    Condition (b): the same with the roles of E and E* exchanged.  Because
    the closed-form sum depends on u only through the support closure, it is
    enough to compare nonempty ideals rather than vectors.  The first failure
    in canonical order (condition, class, member, other class) is returned.
    """
    if E.poset != P:
        raise PosetMismatch("partition is not over the given poset")
    q = _order(F)
    D = dual_partition(E)
    _, _, fwd, bwd = _tables(P, q)
    w = _first_violation("a", fwd, E, D)
    if w is None:
        w = _first_violation("b", bwd, D, E)
    return Verdict(w is None, w)


# --- P and Q matrices --------------------------------------------------------

@dataclass(frozen=True)
class ClassMatrix:
    which: str  # "p" or "q"
    row_partition: IdealPartition
    col_partition: IdealPartition
    entries: Tuple[Tuple[int, ...], ...]
    representative_dependent: bool = False
    # zero-word correction per row; nonzero only when the empty ideal shares
    # its class with other ideals
    offset: Tuple[int, ...] = ()

    def __getitem__(self, rc):
        r, c = rc
        return self.entries[r][c]

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), len(self.col_partition.blocks)

    def transpose(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(zip(*self.entries)) if self.entries else ()


def _class_matrix(which, table, rows: IdealPartition, cols: IdealPartition, dep: bool):
    """entries[r][c] = sum over row class r of table[rep(c)][.]; offset fixes up the zero word."""
    reps = [_rep(cols, cb) for cb in cols.blocks]
    entries = tuple(tuple(sum(table[i][j] for j in rb) for i in reps) for rb in rows.blocks)
    c0 = cols.class_of[0]  # the empty ideal is always canonical index 0
    offset = tuple(
        sum(table[0][j] for j in rb) - entries[r][c0] for r, rb in enumerate(rows.blocks)
    )
    return ClassMatrix(which, rows, cols, entries, dep, offset)


def pq_matrix(
    P: Poset, F: FieldLike, E: IdealPartition, which: str, strict: bool = True
) -> ClassMatrix:
    """The P-matrix (``which="p"``) or Q-matrix (``which="q"``) of E.

    Entries are computed from canonical class representatives, skipping the
    empty ideal when its class has other members.  In strict mode a
    relation that is not of MacWilliams type raises
    :class:`NotMacWilliamsType`; otherwise the result is flagged when the
    entries depend on the representative chosen.
    """
    if which not in ("p", "q"):
        raise ValueError("which must be 'p' or 'q'")
    if E.poset != P:
        raise PosetMismatch("partition is not over the given poset")
    q = _order(F)
    D = dual_partition(E)
    if strict:
        verdict = check_macwilliams_type(P, q, E)
        if not verdict:
            raise NotMacWilliamsType(
                f"relation is not of MacWilliams type: {verdict.witness}", verdict
            )
    _, _, fwd, bwd = _tables(P, q)
    if which == "p":
        return _class_matrix("p", fwd, D, E, _first_violation("a", fwd, E, D) is not None)
    return _class_matrix("q", bwd, E, D, _first_violation("b", bwd, D, E) is not None)


def krawtchouk(k: int, x: int, n: int, q: int) -> int:
    """K_k(x; n) = sum_j (-1)^j (q-1)^(k-j) C(x, j) C(n-x, k-j)."""
    if not (0 <= k <= n and 0 <= x <= n):
        raise ValueError(f"Krawtchouk arguments out of range: k={k}, x={x}, n={n}")
    return sum(
        (-1) ** j * (q - 1) ** (k - j) * comb(x, j) * comb(n - x, k - j) for j in range(k + 1)
    )


# --- transforms ---------------------------------------------------------------

def _exact_div(num: int, den: int, strict: bool):
    qt, r = divmod(num, den)
    if r == 0:
        return qt
    if strict:
        raise NonIntegralQuotient(f"{num} / {den} is not an integer")
    return Fraction(num, den)


def _apply(W: Sequence[int], M: ClassMatrix, size: int, strict: bool) -> tuple:
    offset = M.offset or (0,) * len(M.entries)
    return tuple(
        _exact_div(sum(w * x for w, x in zip(W, row)) + off, size, strict)
        for row, off in zip(M.entries, offset)
    )


def dual_from_code(W: Sequence[int], Pm: ClassMatrix, size: int, strict: bool = True) -> tuple:
    """W(C-dual) = (W(C) . P^T + offset) / |C|."""
    return _apply(W, Pm, size, strict)


def code_from_dual(Wd: Sequence[int], Qm: ClassMatrix, size: int, strict: bool = True) -> tuple:
    """W(C) = (W(C-dual) . Q^T + offset) / |C-dual|."""
    return _apply(Wd, Qm, size, strict)


@dataclass(frozen=True)
class IdentityReport:
    code_distribution: Tuple[int, ...]
    dual_distribution: Tuple[int, ...]
    dual_from_code: tuple
    code_from_dual: tuple
    code_size: int
    dual_size: int

    @property
    def dual_ok(self) -> bool:
        return tuple(self.dual_from_code) == self.dual_distribution

    @property
    def code_ok(self) -> bool:
        return tuple(self.code_from_dual) == self.code_distribution

    @property
    def passed(self) -> bool:
        return self.dual_ok and self.code_ok


def verify_identity(
    P: Poset, F: FieldSpec, G: GeneratorMatrix, E: IdealPartition, strict: bool = True
) -> IdentityReport:
    """Compute both transforms and compare them with direct enumeration."""
    Pm = pq_matrix(P, F, E, "p", strict=strict)
    Qm = pq_matrix(P, F, E, "q", strict=strict)
    D = Pm.row_partition
    W = weight_distribution(P, F, G, E).counts
    H = dual_code(G)
    Wd = weight_distribution(D.poset, F, H, D).counts
    size, dsize = sum(W), sum(Wd)
    return IdentityReport(
        W,
        Wd,
        dual_from_code(W, Pm, size, strict),
        code_from_dual(Wd, Qm, dsize, strict),
        size,
        dsize,
    )


def one_dim_distributions(
    P: Poset, F: FieldSpec, u: Sequence[int], E: IdealPartition
) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """(W(C), W(C-dual)) for the code spanned by u, from closed formulas only."""
    if not support(u):
        raise ZeroGenerator("generator vector is zero")
    q = F.q
    Iu = ideal_of(P, u)
    W = [0] * len(E.blocks)
    W[E.block_of(0)] += 1
    W[E.block_of(Iu)] += q - 1
    D = dual_partition(E)
    _, _, fwd, _ = _tables(P, q)
    row = fwd[E.index_of(Iu)]
    sizes = sphere_class_sizes(D.poset, q, D)
    Wd = tuple(
        _exact_div(sizes[d] + (q - 1) * sum(row[j] for j in db), q, True)
        for d, db in enumerate(D.blocks)
    )
    return tuple(W), Wd


# --- auxiliary identities ---------------------------------------------------

def _scale(P: Poset, q: int, I: int) -> int:
    """(q-1)^|M(I)| q^|I_M| = |S_I|."""
    return sphere_size(P, q, I)


def reciprocity_check(P: Poset, F: FieldLike, E: IdealPartition, strict: bool = True) -> bool:
    """|c| p[d][c] |S_I| == |d| q[c][d] |S_Jc| for all class pairs (cross-multiplied)."""
    q = _order(F)
    if strict:
        verdict = check_macwilliams_type(P, q, E)
        if not verdict:
            raise NotMacWilliamsType("reciprocity needs a MacWilliams-type relation", verdict)
    Pm = pq_matrix(P, q, E, "p", strict=False)
    Qm = pq_matrix(P, q, E, "q", strict=False)
    D = Pm.row_partition
    Pd = D.poset
    for c, cb in enumerate(E.blocks):
        sI = _scale(P, q, E.ideals[cb[0]])
        for d, db in enumerate(D.blocks):
            sJ = _scale(Pd, q, D.ideals[db[0]])
            if len(cb) * Pm.entries[d][c] * sI != len(db) * Qm.entries[c][d] * sJ:
                return False
    return True


@lru_cache(maxsize=64)
def _orbit_matrices(P: Poset, q: int, H: Tuple[Perm, ...]):
    E = partition_aut(P, H)
    return E, pq_matrix(P, q, E, "p", strict=False), pq_matrix(P, q, E, "q", strict=False)


def stabilizer_identity(
    P: Poset, F: FieldLike, H: Sequence, I: int, Jc: int
) -> bool:
    """Check the stabilizer form of reciprocity for the orbit relation of H.

    Verifies |H| = |orbit(I)| |Stab(I)| = |orbit(Jc)| |Stab(Jc)| and
    |Stab(Jc)| p |S_I| == |Stab(I)| q |S_Jc| for the classes of I and Jc.
    """
    q = _order(F)
    H = check_subgroup(P, H)
    E, Pm, Qm = _orbit_matrices(P, q, H)
    require_ideal(P, I)
    D = Pm.row_partition
    require_ideal(D.poset, Jc)
    c, d = E.block_of(I), D.block_of(Jc)
    stab_I = sum(1 for s in H if apply_perm(s, I) == I)
    stab_J = sum(1 for s in H if apply_perm(s, Jc) == Jc)
    if not (len(H) == len(E.blocks[c]) * stab_I == len(D.blocks[d]) * stab_J):
        return False
    lhs = stab_J * Pm.entries[d][c] * _scale(P, q, I)
    rhs = stab_I * Qm.entries[c][d] * _scale(D.poset, q, Jc)
    return lhs == rhs


@dataclass(frozen=True)
class CodePairWitness:
    """Codes {x : supp(x) in I1}, {x : supp(x) in I2} for isomorphic ideals
    whose complements are not isomorphic."""

    ideal1: int
    ideal2: int
    code1: GeneratorMatrix
    code2: GeneratorMatrix
    distribution1: Tuple[int, ...]
    distribution2: Tuple[int, ...]
    dual_distribution1: Tuple[int, ...]
    dual_distribution2: Tuple[int, ...]

    @property
    def valid(self) -> bool:
        return (
            self.distribution1 == self.distribution2
            and self.dual_distribution1 != self.dual_distribution2
        )


def isomorphism_witness_codes(
    P: Poset, F: FieldSpec, E: Optional[IdealPartition] = None
) -> Optional[CodePairWitness]:
    """Build the coordinate-code pair showing the isomorphism relation fails.

    Scans ideal pairs I1 ~ I2 with non-isomorphic complements in canonical
    order and returns the first whose codes have equal distributions but
    different dual distributions.  ``None`` if no such pair exists.
    """
    from .relations import partition_iso

    E = partition_iso(P) if E is None else E
    D = dual_partition(E)
    ideals = E.ideals
    ccls = isomorphism_classes(P, [P.full & ~I for I in ideals])
    for a in range(len(ideals)):
        for b in range(a + 1, len(ideals)):
            if E.class_of[a] != E.class_of[b] or ccls[a] == ccls[b]:
                continue
            I1, I2 = ideals[a], ideals[b]
            G1, G2 = coordinate_code(F, P.n, I1), coordinate_code(F, P.n, I2)
            w = CodePairWitness(
                I1,
                I2,
                G1,
                G2,
                weight_distribution(P, F, G1, E).counts,
                weight_distribution(P, F, G2, E).counts,
                weight_distribution(D.poset, F, dual_code(G1), D).counts,
                weight_distribution(D.poset, F, dual_code(G2), D).counts,
            )
            if w.valid:
                return w
    return None
