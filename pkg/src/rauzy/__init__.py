r"""Combinatorics of Rauzy classes of permutation pairs.

Pairs of rows over a finite alphabet, the four Rauzy moves, the invariants
preserved by them (S, M, Y, P, the crossing quadratic form and its ARF
count), switch moves, prefix surgery, normalization to canonical forms,
and exhaustive class enumeration.
"""
from .core import (
    Pair,
    parse_pair,
    format_pair,
    is_irreducible,
    monodromy,
    from_one_row,
    inverse,
    rename,
    canonical_alphabet,
)
from .moves import (
    Move,
    Path,
    R0,
    R1,
    L0,
    L1,
    parse_path,
    format_path,
    apply_move,
    apply_path,
    cycle_vertices,
    is_standard,
    to_standard,
    cycle_distance,
)
from .invariants import (
    s_map,
    m_value,
    y_map,
    p_list,
    cycles,
    QuadForm,
    quad_form,
    arf_count,
    arf_by_blocks,
    Signature,
    signature,
)
from .switches import (
    inner_switch,
    outer_switch,
    parse_switches,
    format_switches,
    apply_switches,
    BlockDecomposition,
    is_pwor,
    chains,
    reorder_chains,
    to_pwor,
)
from .surgery import (
    ExtensionSpec,
    restrict,
    extend,
    implicit_extension,
    extension_preserves_irreducibility,
    extend_path,
    path_respects_restriction,
    StarWitness,
    is_star,
    star_pair,
    star_to_standard,
)
from .classify import (
    type_of,
    normalize_type,
    canonical_form,
    canonical_form_extended,
    same_class,
    is_order_reversing,
    is_degenerate_star,
    is_good,
    find_good_or_degenerate,
)
from .catalog import (
    NamedMove,
    MOVE_IDS,
    COROLLARY_IDS,
    move_pattern,
    apply_named_move,
    named_move_switches,
)
from .census import (
    enumerate_class,
    ClassRecord,
    class_census,
    census_jsonl,
    switch_graph_connected,
    irreducible_count,
)

__version__ = "0.1.0"
