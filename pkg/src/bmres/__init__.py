"""Bridge/gap combinatorics for squarefree monomial ideals: critical-cell
Betti tables, closed neighborhood ideals of trees, path formulas, and a
Taylor-strand homology oracle over prime fields."""

from .betti import BettiTable, shift_kind
from .bm import (
    betti_from_critical,
    bridges,
    critical_sets,
    find_bridge_friendly_order,
    find_support_split,
    gaps,
    is_bridge_friendly,
    is_potentially_type2,
    satisfies_sufficient_condition,
    smallest_bridge,
    true_gaps,
)
from .classify import classify_graph, has_linear_quotients, hypertree_obstruction, is_generic
from .graphs import (
    Graph,
    RootedTree,
    distance,
    enumerate_trees,
    graph,
    independence_number,
    is_bipartite,
    is_chordal,
    is_tree,
    make_named,
    matching_number,
    root_and_label,
)
from .homology import betti_table_homology, has_linear_resolution
from .ideals import (
    GeneratorOrder,
    Monomial,
    MonomialIdeal,
    closed_neighborhood_ideal,
    generator_anchor,
    ideal_I_n,
    intersect,
    minimalize,
    three_path_ideal,
    tree_lex_order,
)
from .pathformulas import (
    betti_I_n,
    betti_J3_path,
    betti_NI_path_closed,
    betti_NI_path_recursive,
    pdim_path,
    reg_path,
    verify_betti_splitting,
)
from .treebm import (
    CriticalWitness,
    characterize,
    m_at_distance,
    max_critical_set,
    p2_class_count,
    pdim_tree,
    tree_betti_recursive,
)

__version__ = "0.1.0"
