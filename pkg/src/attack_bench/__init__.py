"""Robustness of networks under edge attacks."""

from .attacks import (
    AttackPlan,
    PerformanceCurve,
    edge_betweenness,
    edge_degree,
    make_plan,
    plan_ibe,
    plan_ide,
    plan_rne,
    run_attack,
)
from .estimators import EdgeAttack
from .experiment import ExperimentConfig, generate_control, run_experiment
from .generators import GenSpec, barabasi_albert, gnm
from .graph import ComponentSummary, Graph, from_edges, gcc_trajectory, giant_component
from .index import DEFAULT_THRESHOLDS, IndexReport, i_index, index_report
from .ingestion import RawNetwork, load_graph, parse_edge_list, parse_gml_edges, to_graph

__version__ = "0.1.0"
