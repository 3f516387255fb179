"""Exact computational kernel for topological full groups of one-sided
shifts of finite type and of Z-subshifts."""

from .core import (
    ClopenSet,
    DirectedGraph,
    IntegerMatrix,
    Path,
    Point,
    ValidatedGraph,
    clopen_normalize,
    full_shift_graph,
    golden_mean_graph,
    point_in,
    point_normalize,
    validate_graph,
)
from .homology import (
    AbelianGroupPresentation,
    H0Class,
    SmithDecomposition,
    embedding_support_obstruction,
    h0_class,
    h0_group,
    hom_exists,
    smith_normal_form,
    thompson_divisibility,
)
from .metrics import (
    LabeledBall,
    cayley_ball,
    growth_table,
    is_tree,
    orbital_ball,
    word_complexity,
)
from .sigma import (
    SigmaSystem,
    coding_map,
    coding_preimage,
    defining_system,
    induced_hom,
    path_transport,
    validate_sigma_system,
)
from .tables import (
    Germ,
    Multisection,
    Table,
    apply,
    canonicalize,
    compose,
    equals,
    germ_at,
    inverse,
    is_full_group_element,
    multisection_element,
    range_,
    simple_expand,
    source,
    support,
    table_validate,
    union_disjoint,
)
from .zfull import (
    BiPoint,
    BlockCode,
    CocycleElement,
    Subshift,
    cocycle_compose,
    cocycle_identity,
    cocycle_inverse,
    cocycle_power,
    cocycle_validate,
    embed_via_factor,
    factor_code_check,
    fibonacci_substitution,
    full_shift,
    golden_mean_shift,
)

__version__ = "0.1.0"
