"""MacWilliams-type equivalence relations for linear codes under poset metrics."""

from .codes import (
    GeneratorMatrix,
    codewords,
    dual_code,
    generator,
    p_distance,
    p_weight,
    rref,
    sphere,
    sphere_size,
    weight_distribution,
)
from .gf import CycSum, FieldSpec, char_sum, dot, field_make, field_from_order, trace
from .macwilliams import (
    char_sum_closed,
    check_macwilliams_type,
    ideal_emptiness_equiv,
    krawtchouk,
    one_dim_distributions,
    pq_matrix,
    reciprocity_check,
    stabilizer_identity,
    verify_identity,
)
from .poset import (
    Poset,
    antichain,
    automorphisms,
    chain,
    enumerate_ideals,
    ideal_closure,
    ideal_isomorphic,
    is_complement_isomorphism,
    is_hierarchical,
    mask_of,
    maximal_split,
    poset_dual,
    poset_from_covers,
)
from .relations import (
    IdealPartition,
    dual_partition,
    partition_aut,
    partition_cardinality,
    partition_custom,
    partition_iso,
    refines,
)

__version__ = "0.1.0"
