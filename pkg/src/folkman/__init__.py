"""Computational toolkit for K4-free Ramsey arrowing families.

Immutable bitmask graphs with bit-exact graph6 I/O, exact invariants,
canonical forms and isomorph-free generation, SAT-based edge-arrowing
decisions with verifiable witnesses, the L(n;p;s) family machinery, the
extension and edge-removal searches, the B(H) construction, and a staged
resumable pipeline over deduplicated graph stores.
"""

from .arrow import (
    ArrowSpec,
    ArrowVerdict,
    EDGE_33,
    arrows_edge,
    arrows_vertex,
    check_edge_witness,
    check_vertex_witness,
    encode_cnf_33,
    is_edge_critical,
    is_vertex_critical,
    member_L,
    triangle_edge_triples,
)
from .bh import BhGraph, build_bh, lemma41_shadow_check, theorem1_check
from .canon import (
    are_isomorphic,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    clique_alpha_extension_enum,
    generate_all_graphs,
    generate_all_keys,
)
from .extend import (
    ExtensionCandidate,
    algorithm_extend,
    build_extension,
    candidate_subsets,
    edge_removal_closure,
    sperner_extensions,
)
from .families import (
    Classification,
    FamilyParams,
    classify,
    filter_family,
    family_possibly_nonempty,
    ramsey_constants,
    reduce_by_independent_set,
)
from .graphs import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    empty_graph,
    join_complete,
    make_graph,
    parse_graph6,
    path_graph,
    read_graph6_file,
    to_graph6,
    write_graph6_file,
)
from .invariants import (
    InvariantRecord,
    chromatic_number,
    clique_number,
    independence_number,
    invariant_record,
    is_maximal_k4_free,
    is_plus_k3,
    is_sperner,
    max_degree,
    maximal_triangle_free_subsets,
    min_degree,
    sperner_witness,
)
from .pipeline import StagePlan, format_stats, run_stage, stats, verify_witness, write_witness
from .sat import CnfFormula, SatResult, brute_force_cnf, export_dimacs, solve_cnf, solve_external
from .store import GraphStore, load_manifest, manifest_path, store_matches_manifest

__version__ = "0.1.0"
