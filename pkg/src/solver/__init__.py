"""Certified enumeration of the invariant Einstein metrics and the lemma checker."""

from .case1 import Case1System, build_case1, solve_case1
from .case2 import (
    Case2System,
    ResultantFactors,
    build_case2,
    factor_resultant_P,
    solve_case2a,
    solve_case2b,
)
from .lemmas import verify_lemmas
from .newton import NewtonCluster, newton_oracle
from .pipeline import duality_check, enumerate_einstein, relabel_partner, split_counts
from .types import (
    CaseOrigin,
    Certificate,
    EinsteinSolution,
    LemmaReport,
    LemmaVerdict,
    SolutionKind,
)

__all__ = [
    "Case1System",
    "Case2System",
    "CaseOrigin",
    "Certificate",
    "EinsteinSolution",
    "LemmaReport",
    "LemmaVerdict",
    "NewtonCluster",
    "ResultantFactors",
    "SolutionKind",
    "build_case1",
    "build_case2",
    "duality_check",
    "enumerate_einstein",
    "factor_resultant_P",
    "newton_oracle",
    "relabel_partner",
    "solve_case1",
    "solve_case2a",
    "solve_case2b",
    "split_counts",
    "verify_lemmas",
]
