"""Python access to the ceerlab core: ceer tables, the graded algebra and
the priority constructions."""

from ._core import (
    CeerTable,
    HomogeneousIdeal,
    Poly,
    RunOutcome,
    cantor_pair,
    cantor_unpair,
    gs_audit,
    parse_scenario,
    product,
    run_scenario,
    uniform_join,
    verify_log,
)

__all__ = [
    "CeerTable",
    "HomogeneousIdeal",
    "Poly",
    "RunOutcome",
    "cantor_pair",
    "cantor_unpair",
    "gs_audit",
    "parse_scenario",
    "product",
    "run_scenario",
    "uniform_join",
    "verify_log",
]
