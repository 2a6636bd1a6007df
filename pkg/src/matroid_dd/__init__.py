"""Matroids as reduced BDDs and ZDDs: construction, transforms and width analysis."""

from .analysis import (
    MinorSignature,
    WidthReport,
    check_width_bounds,
    count_minors_on_suffix,
    count_nonloop_minors,
    direct_sum_minor_product_check,
    good_order,
    laminar_counterexample,
    pathwidth_exact,
    quotient_classes,
    width_report,
)
from .build import BuildTarget, ResourceLimitError, Target, build_all, build_dd
from .dd import BOT, TOP, Diagram, DiagramError, ElementOrder, Kind, NodeStore, from_family, make_node
from .family import SetFamily, check_basis_axioms, check_independence_axioms, is_clutter
from .matroid import Matroid, MatroidError, contract, delete, direct_sum, dual, gale_basis
from .oracle import ZddOracle, zdd_independence, zdd_rank
from .transforms import bases_to_independents, clutter_bdd_to_zdd, size_relations_report, swap_arcs

__version__ = "0.1.0"
