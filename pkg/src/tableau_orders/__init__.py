"""Box and dominance orders on tableaux, with the module theory behind them."""

from .partitions import (
    SkewShape,
    contains,
    is_horizontal_strip,
    is_rook_strip,
    is_vertical_strip,
    nat_leq_general,
    nat_leq_same_weight,
    transpose,
    union_rowwise,
)
from .tableaux import (
    LRTableau,
    StandardTableau,
    chain_to_syt,
    enumerate_T_r,
    enumerate_lr_rook,
    enumerate_syt,
    lr_content,
    lr_from_chain,
    lr_to_chain,
    lr_validate,
    reading_word,
    syt_to_chain,
    syt_validate,
    tableau_union,
)
from .orders import (
    MoveRecord,
    RelationTable,
    box_leq_lr,
    box_leq_syt,
    box_moves_lr,
    box_moves_syt,
    dom_leq_lr,
    dom_leq_syt,
    embed_in_square,
    hasse,
    lr_to_syt,
    reachability_table,
    relation_table,
    relations_equal,
    syt_to_lr,
    to_dot,
)
from .nilpotent import (
    FieldSpec,
    ModuleElement,
    ModuleShape,
    SubmoduleBasis,
    act_t,
    height,
    height_sequence,
    hom_dim,
    hom_dim_quotient,
    module_type,
    operator_span,
    quotient_type,
    subspace_intersect,
    subspace_sum,
)
from .embeddings import (
    Embedding,
    EmbeddingMorphism,
    IncreaseWitness,
    ShortExactSequence,
    direct_sum,
    empty_embedding,
    hom_dim_embeddings,
    hom_leq_over_family,
    increase_move_witness,
    is_exact,
    lr_tableau_of,
    morphism_validate,
    picket,
    pole,
    pole_decomposition,
    pole_pair,
    ses_top_boundary,
    ses_top_gap,
    ses_top_run,
)

__all__ = [name for name in dir() if not name.startswith("_")]
