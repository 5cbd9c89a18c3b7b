"""Switching homomorphisms of signed graphs with bounded maximum average degree.

The package decides sign-preserving and switching homomorphisms into small
fixed targets — (K_2k, M), (K_kk, M) and their doubled versions — computes
exact maximum average degree with subgraph witnesses, and ships the
verification suites (list lemmas, reducible configurations, discharging
audits) behind the `signedhom` command line tool.
"""

from .core import (
    INFINITY,
    GirthVector,
    SignedGraph,
    dump,
    dumps,
    girth_vector,
    load,
    loads,
    spanning_tree_classes,
    switch,
    switching_equivalent,
    walk_sign,
)
from .density import DensityCertificate, mad, mad_less_than
from .gadgets import (
    apex_cycle,
    builtin_gadget,
    coloring_gadget,
    signed_cube,
    subdivided_k4,
)
from .hom import (
    BudgetExceeded,
    EnumerationResult,
    HomResult,
    SolveOptions,
    SolveStats,
    admissible_sets,
    enumerate_homs,
    fold_bipartite,
    forbidden_set,
    list_sp_hom,
    sp_hom,
    switch_hom,
)
from .targets import (
    ColorAlgebra,
    ShapeDescriptor,
    TargetSpace,
    builtin_target,
    classify_set,
    custom_space,
    dsg,
    dsg_space,
    k2km_space,
    kkkm_space,
    make_k2k_m,
    make_kkk_m,
)
from .verify import (
    CONFIG_IDS,
    SUITE_IDS,
    SWEEP_IDS,
    ChargeReport,
    ClauseReport,
    LemmaReport,
    StructureReport,
    chromatic_number_leq,
    discharge_audit,
    positive_cycle_set,
    scan_structures,
    verify_config_extension,
    verify_suite,
    verify_sweep,
)

__all__ = [
    "CONFIG_IDS",
    "INFINITY",
    "SUITE_IDS",
    "SWEEP_IDS",
    "BudgetExceeded",
    "ChargeReport",
    "ClauseReport",
    "ColorAlgebra",
    "DensityCertificate",
    "EnumerationResult",
    "GirthVector",
    "HomResult",
    "LemmaReport",
    "ShapeDescriptor",
    "SignedGraph",
    "SolveOptions",
    "SolveStats",
    "StructureReport",
    "TargetSpace",
    "admissible_sets",
    "apex_cycle",
    "builtin_gadget",
    "builtin_target",
    "chromatic_number_leq",
    "classify_set",
    "coloring_gadget",
    "custom_space",
    "discharge_audit",
    "dsg",
    "dsg_space",
    "dump",
    "dumps",
    "enumerate_homs",
    "fold_bipartite",
    "forbidden_set",
    "girth_vector",
    "k2km_space",
    "kkkm_space",
    "list_sp_hom",
    "load",
    "loads",
    "mad",
    "mad_less_than",
    "make_k2k_m",
    "make_kkk_m",
    "positive_cycle_set",
    "scan_structures",
    "signed_cube",
    "sp_hom",
    "spanning_tree_classes",
    "subdivided_k4",
    "switch",
    "switch_hom",
    "switching_equivalent",
    "verify_config_extension",
    "verify_suite",
    "verify_sweep",
    "walk_sign",
]

__version__ = "0.1.0"
