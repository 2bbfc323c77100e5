"""Modular decomposition, module graph motif solvers and reduction checkers."""

import json

from ._modmotif import (
    BudgetExceeded,
    Error,
    Graph,
    InputError,
    InvalidSolution,
    ParseError,
    classify,
    decompose_text,
    enumerate_module_motifs,
    enumerate_modules,
    find_motif_brute,
    is_module,
    max_independent_set,
    min_set_cover,
    run_cli,
    solve_list_colored,
    solve_module_motif,
    solve_strong_only,
    x3c,
)
from ._modmotif import decompose_json as _decompose_json


def decompose(graph):
    """Modular decomposition tree as nested dicts, the same shape as `modmotif decompose --format json`."""
    return json.loads(_decompose_json(graph))


__all__ = [
    "BudgetExceeded",
    "Error",
    "Graph",
    "InputError",
    "InvalidSolution",
    "ParseError",
    "classify",
    "decompose",
    "decompose_text",
    "enumerate_module_motifs",
    "enumerate_modules",
    "find_motif_brute",
    "is_module",
    "max_independent_set",
    "min_set_cover",
    "run_cli",
    "solve_list_colored",
    "solve_module_motif",
    "solve_strong_only",
    "x3c",
]
