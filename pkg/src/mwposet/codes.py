"""Linear codes over F_q with poset weights, spheres and E-weight distributions."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import product
from typing import List, NamedTuple, Optional, Sequence, Tuple

from . import config
from .errors import CodeTooLarge, LengthMismatch, OutOfRangeElement, PosetMismatch, SphereTooLarge
from .gf import FieldSpec
from .poset import Poset, _bits, ideal_closure, maximal_split, popcount
from .relations import IdealPartition

Vector = Tuple[int, ...]


@dataclass(frozen=True)
class GeneratorMatrix:
    field: FieldSpec
    n: int
    rows: Tuple[Vector, ...]

    @property
    def k(self) -> int:
        return len(self.rows)


def generator(F: FieldSpec, rows: Sequence[Sequence[int]], n: Optional[int] = None) -> GeneratorMatrix:
    """Validate and wrap generator rows.  ``n`` is needed when there are no rows."""
    rows = tuple(tuple(int(a) for a in r) for r in rows)
    if n is None:
        if not rows:
            raise ValueError("length n must be given for an empty generator matrix")
        n = len(rows[0])
    for r in rows:
        if len(r) != n:
            raise LengthMismatch(f"row {r} does not have length {n}")
        for a in r:
            if not 0 <= a < F.q:
                raise OutOfRangeElement(f"entry {a} outside F_{F.q}")
    return GeneratorMatrix(F, n, rows)


class Rref(NamedTuple):
    matrix: GeneratorMatrix
    rank: int
    pivots: Tuple[int, ...]
    dropped: bool  # dependent rows were removed


def rref(G: GeneratorMatrix) -> Rref:
    """Reduced row-echelon form over F_q; zero rows are dropped."""
    F = G.field
    rows = [list(r) for r in G.rows]
    pivots: List[int] = []
    r = 0
    for col in range(G.n):
        pr = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][col])
        rows[r] = [F.mul(inv, a) for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                c = F.neg(rows[i][col])
                rows[i] = [F.add(a, F.mul(c, b)) for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    dropped = r < len(rows)
    if dropped:
        warnings.warn(f"{len(rows) - r} dependent generator row(s) dropped", stacklevel=2)
    reduced = GeneratorMatrix(F, G.n, tuple(tuple(x) for x in rows[:r]))
    return Rref(reduced, r, tuple(pivots), dropped)


def _reduced(G: GeneratorMatrix) -> Rref:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return rref(G)


def dimension(G: GeneratorMatrix) -> int:
    return _reduced(G).rank


def dual_code(G: GeneratorMatrix) -> GeneratorMatrix:
    """Generator matrix of {x : G x^T = 0}, in reduced form."""
    F = G.field
    R, rank, pivots, _ = _reduced(G)
    free = [c for c in range(G.n) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * G.n
        x[f] = 1
        for row, pc in zip(R.rows, pivots):
            x[pc] = F.neg(row[f])
        basis.append(tuple(x))
    return _reduced(GeneratorMatrix(F, G.n, tuple(basis))).matrix


def codewords(G: GeneratorMatrix, cap: Optional[int] = None) -> List[Vector]:
    """Every codeword once, lexicographic in the message space (zero word first)."""
    cap = config.LIMITS.codewords if cap is None else cap
    F = G.field
    basis = _reduced(G).matrix.rows
    size = F.q ** len(basis)
    if size > cap:
        raise CodeTooLarge(f"code has {size} words, cap is {cap}")
    out = []
    for msg in product(range(F.q), repeat=len(basis)):
        w = [0] * G.n
        for c, row in zip(msg, basis):
            if c:
                w = [F.add(a, F.mul(c, b)) for a, b in zip(w, row)]
        out.append(tuple(w))
    return out


def support(x: Sequence[int]) -> int:
    m = 0
    for i, a in enumerate(x):
        if a:
            m |= 1 << i
    return m


def ideal_of(P: Poset, x: Sequence[int]) -> int:
    if len(x) != P.n:
        raise LengthMismatch(f"vector of length {len(x)} for a poset on [{P.n}]")
    return ideal_closure(P, support(x))


def p_weight(P: Poset, x: Sequence[int]) -> int:
    return popcount(ideal_of(P, x))


def p_distance(P: Poset, F: FieldSpec, x: Sequence[int], y: Sequence[int]) -> int:
    if len(x) != len(y):
        raise LengthMismatch("vectors of different length")
    return p_weight(P, [F.sub(a, b) for a, b in zip(x, y)])


def sphere_size(P: Poset, q, I: int) -> int:
    """|S_I| = (q-1)^|M(I)| * q^|I_M|, without enumeration."""
    q = q.q if isinstance(q, FieldSpec) else q
    M, rest = maximal_split(P, I)
    return (q - 1) ** popcount(M) * q ** popcount(rest)


def sphere(P: Poset, F: FieldSpec, I: int, cap: Optional[int] = None) -> List[Vector]:
    """All vectors whose support closure is exactly I."""
    cap = config.LIMITS.sphere if cap is None else cap
    size = sphere_size(P, F.q, I)
    if size > cap:
        raise SphereTooLarge(f"sphere has {size} vectors, cap is {cap}")
    M, rest = maximal_split(P, I)
    choices = []
    for i in range(P.n):
        if M >> i & 1:
            choices.append(F.nonzero())
        elif rest >> i & 1:
            choices.append(F.elements())
        else:
            choices.append((0,))
    return [tuple(v) for v in product(*choices)]


@dataclass(frozen=True)
class WeightDistribution:
    partition: IdealPartition
    counts: Tuple[int, ...]

    def __iter__(self):
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, b: int) -> int:
        return self.counts[b]


def distribution_of_words(P: Poset, words, E: IdealPartition) -> WeightDistribution:
    if E.poset != P:
        raise PosetMismatch("partition is not over the given poset")
    counts = [0] * len(E.blocks)
    for w in words:
        counts[E.block_of(ideal_closure(P, support(w)))] += 1
    return WeightDistribution(E, tuple(counts))


def weight_distribution(
    P: Poset, F: FieldSpec, G: GeneratorMatrix, E: IdealPartition
) -> WeightDistribution:
    """Codeword counts per block of E, by support closure in P."""
    if G.field != F:
        raise ValueError("code is defined over a different field")
    return distribution_of_words(P, codewords(G), E)


def sphere_class_sizes(P: Poset, q, E: IdealPartition) -> Tuple[int, ...]:
    """|S_{class,E}| for every block of E."""
    return tuple(
        sum(sphere_size(P, q, E.ideals[i]) for i in block) for block in E.blocks
    )


def coordinate_code(F: FieldSpec, n: int, mask: int) -> GeneratorMatrix:
    """The code {x : supp(x) is contained in mask}."""
    rows = []
    for i in _bits(mask):
        r = [0] * n
        r[i] = 1
        rows.append(tuple(r))
    return GeneratorMatrix(F, n, tuple(rows))
