"""Result types shared by the case solvers, the pipeline and the lemma checker."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Optional, Union

from ..flagmodel.ricci import Metric4
from ..realroots.intervals import RatInterval


class SolutionKind(str, Enum):
    KAHLER = "kahler"
    NON_KAHLER = "non_kahler"


class CaseOrigin(str, Enum):
    CASE1 = "case1"
    CASE2A_SUB1 = "case2a-sub1"
    CASE2A_SUB2 = "case2a-sub2"
    CASE2A_SUB3 = "case2a-sub3"
    CASE2A_SUB4 = "case2a-sub4"
    CASE2B = "case2b"


@dataclass
class Certificate:
    """Checks a solution passed before it was returned."""
    positivity: bool = False
    membership: str = ""
    kahler_match: Optional[int] = None
    partner: Optional[int] = None
    defining_polynomial: Optional[str] = None
    notes: list[str] = field(default_factory=list)

    def as_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {"positivity": self.positivity, "membership": self.membership}
        if self.kahler_match is not None:
            data["kahler_match"] = self.kahler_match
        if self.partner is not None:
            data["partner"] = self.partner
        if self.defining_polynomial is not None:
            data["defining_polynomial"] = self.defining_polynomial
        if self.notes:
            data["notes"] = list(self.notes)
        return data


@dataclass
class EinsteinSolution:
    """A certified invariant Einstein metric normalized to x1 = 1."""
    metric: Metric4
    kind: SolutionKind
    einstein_constant: Union[Fraction, RatInterval]
    origin: CaseOrigin
    certificate: Certificate = field(default_factory=Certificate)

    @property
    def is_exact(self) -> bool:
        return self.metric.is_exact

    @property
    def x3_key(self) -> Fraction:
        """Sort key: the exact x3 value or the midpoint of its enclosure."""
        x3 = self.metric.x3
        return x3.midpoint if isinstance(x3, RatInterval) else x3

    def enclosures(self) -> tuple[RatInterval, ...]:
        return tuple(v if isinstance(v, RatInterval) else RatInterval.point(v) for v in self.metric)

    def matches(self, other: Union["EinsteinSolution", Metric4]) -> bool:
        """Exact equality, or overlap of every coordinate enclosure."""
        metric = other.metric if isinstance(other, EinsteinSolution) else other
        if self.metric.is_exact and metric.is_exact:
            return self.metric.as_tuple() == metric.as_tuple()
        theirs = (v if isinstance(v, RatInterval) else RatInterval.point(v) for v in metric)
        return all(a.overlaps(b) for a, b in zip(self.enclosures(), theirs))


@dataclass
class LemmaVerdict:
    """Outcome of one lemma check for a single (n, p)."""
    identifier: str
    statement: str
    applicable: bool
    passed: bool
    witnesses: dict[str, str] = field(default_factory=dict)

    @property
    def status(self) -> str:
        if not self.applicable:
            return "n/a"
        return "pass" if self.passed else "FAIL"


@dataclass
class LemmaReport:
    """Verdicts L1..L9 for one (n, p)."""
    n: int
    p: int
    verdicts: list[LemmaVerdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts if v.applicable)

    @property
    def failures(self) -> list[LemmaVerdict]:
        return [v for v in self.verdicts if v.applicable and not v.passed]

    def verdict(self, identifier: str) -> LemmaVerdict:
        for v in self.verdicts:
            if v.identifier == identifier:
                return v
        raise KeyError(identifier)

    def summary(self) -> dict[str, str]:
        return {v.identifier: v.status for v in self.verdicts}
