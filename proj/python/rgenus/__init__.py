"""Genus of random graphs.

Thin wrapper over the C++ extension ``_rgenus``. Graphs are ``Graph(n, edges)``
with vertices 0..n-1 and edges as (u, v) pairs.
"""

import json

from ._rgenus import (
    BudgetExceeded,
    CycleCapExceeded,
    Graph,
    ToleranceNotReached,
    components,
    contiguity_verdict,
    count_Z,
    cycle_graph,
    cycles_up_to,
    exact_genus,
    fragile_experiment,
    genus_lower_bound_density,
    genus_lower_bound_short_cycles,
    genus_upper_bound,
    gnm,
    gnp,
    grid_graph,
    kappa_trajectory,
    lambda_i,
    mu,
    path_graph,
    predict_genus,
    suite_names,
    supercritical_report,
    two_core,
    u,
    u_prime,
)
from ._rgenus import _run_suite_json

__all__ = [
    "BudgetExceeded",
    "CycleCapExceeded",
    "Graph",
    "ToleranceNotReached",
    "components",
    "contiguity_verdict",
    "count_Z",
    "cycle_graph",
    "cycles_up_to",
    "exact_genus",
    "fragile_experiment",
    "genus_lower_bound_density",
    "genus_lower_bound_short_cycles",
    "genus_upper_bound",
    "gnm",
    "gnp",
    "grid_graph",
    "kappa_trajectory",
    "lambda_i",
    "mu",
    "path_graph",
    "predict_genus",
    "run_suite",
    "suite_names",
    "supercritical_report",
    "two_core",
    "u",
    "u_prime",
]


def run_suite(name: str, seed: int = 0, jobs: int = 0) -> dict:
    """Runs a named acceptance suite and returns its report as a dict."""
    return json.loads(_run_suite_json(name, seed, jobs))
