"""Executable law suites: isomorphisms, handler equivalences, kernel and semantic properties."""

from .equality import Mismatch, diff, equal
from .gen import generic_tree, specialized_tree
from .iso import INSTANCES, check_roundtrip, iso1, iso2
from .mutations import MUTATIONS, mutated
from .reference import check_handler_equiv
from .suites import LawsReport, SuiteResult, run_laws

__all__ = [
    "INSTANCES", "LawsReport", "MUTATIONS", "Mismatch", "SuiteResult", "check_handler_equiv", "check_roundtrip", "diff",
    "equal", "generic_tree", "iso1", "iso2", "mutated", "run_laws", "specialized_tree",
]
