"""Machine verification: lemma suites, configuration checks, scanners, audits."""

from .chromatic import chromatic_number_leq
from .configs import CONFIG_IDS, ConfigSpec, config, verify_config_extension
from .discharge import ChargeReport, ComponentAudit, Transfer, discharge_audit
from .scan import (
    DegreeProfile,
    LowDegreeComponent,
    PatternWitness,
    PoorPath,
    StructureReport,
    degree_profiles,
    scan_structures,
)
from .smallgraphs import connected_graph_classes, graph_classes, plain_graph
from .suites import SUITE_IDS, ClauseReport, LemmaReport, verify_suite
from .sweeps import SWEEP_IDS, positive_cycle_set, verify_sweep

__all__ = [
    "CONFIG_IDS",
    "SUITE_IDS",
    "SWEEP_IDS",
    "ChargeReport",
    "ClauseReport",
    "ComponentAudit",
    "ConfigSpec",
    "DegreeProfile",
    "LemmaReport",
    "LowDegreeComponent",
    "PatternWitness",
    "PoorPath",
    "StructureReport",
    "Transfer",
    "chromatic_number_leq",
    "config",
    "connected_graph_classes",
    "degree_profiles",
    "discharge_audit",
    "graph_classes",
    "plain_graph",
    "positive_cycle_set",
    "scan_structures",
    "verify_config_extension",
    "verify_suite",
    "verify_sweep",
]
