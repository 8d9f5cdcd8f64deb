"""Law checking: a catalog of identities and an engine that tests them."""
from .domain import Slot
from .engine import DomainSpec, LawReport, SuiteReport, case_count, check_law, find_counterexample, recheck, run_suite
from .laws import CATALOG, Law, get_law
from .rng import CounterRNG, mix64

__all__ = [
    "CATALOG",
    "CounterRNG",
    "DomainSpec",
    "Law",
    "LawReport",
    "Slot",
    "SuiteReport",
    "case_count",
    "check_law",
    "find_counterexample",
    "get_law",
    "mix64",
    "recheck",
    "run_suite",
]
