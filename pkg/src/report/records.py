"""Per-(n, p) records collected by the solve, sweep and lemmas commands."""

import time
from dataclasses import dataclass, field
from typing import Optional

from ..flagmodel.space import make_flag_space
from ..solver.lemmas import verify_lemmas
from ..solver.pipeline import duality_check, enumerate_einstein, split_counts
from ..solver.types import EinsteinSolution, LemmaReport
from ..utils.logger import get_logger

logger = get_logger("report.records")

EXPECTED_SPLIT = (4, 2)


@dataclass
class SweepRecord:
    """Everything reported for one (n, p)."""
    n: int
    p: int
    dimensions: tuple[int, int, int, int]
    solutions: list[EinsteinSolution] = field(default_factory=list)
    lemmas: Optional[LemmaReport] = None
    duality: Optional[bool] = None
    seconds: Optional[float] = None

    @property
    def counts(self) -> dict[str, int]:
        kahler, non_kahler = split_counts(self.solutions)
        return {"total": len(self.solutions), "kahler": kahler, "non_kahler": non_kahler}

    @property
    def split_ok(self) -> bool:
        return split_counts(self.solutions) == EXPECTED_SPLIT

    @property
    def passed(self) -> bool:
        if not self.split_ok or self.duality is False:
            return False
        return self.lemmas is None or self.lemmas.passed


def solve_pair(n: int, p: int, with_lemmas: bool = False) -> SweepRecord:
    """Enumerate (and optionally verify lemmas for) one pair; runs in a worker under --jobs."""
    started = time.perf_counter()
    space = make_flag_space(n, p)
    record = SweepRecord(n=n, p=p, dimensions=space.dimensions)
    record.solutions = enumerate_einstein(n, p)
    if with_lemmas:
        record.lemmas = verify_lemmas(n, p)
    record.seconds = time.perf_counter() - started
    return record


def lemma_pair(n: int, p: int) -> SweepRecord:
    started = time.perf_counter()
    space = make_flag_space(n, p)
    record = SweepRecord(n=n, p=p, dimensions=space.dimensions, lemmas=verify_lemmas(n, p))
    record.seconds = time.perf_counter() - started
    return record


def attach_duality(records: list[SweepRecord]) -> None:
    """Fill duality from records already computed; pairs whose dual is absent stay None."""
    by_pair = {(r.n, r.p): r for r in records}
    for record in records:
        dual = by_pair.get((record.n, record.n - record.p))
        if dual is None:
            continue
        record.duality = duality_check(record.n, record.p, record.solutions, dual.solutions)
        if not record.duality:
            logger.error(f"Duality check failed for (n, p) = ({record.n}, {record.p})")


def parameter_pairs(n_min: int, n_max: int) -> list[tuple[int, int]]:
    """All (n, p) with n_min <= n <= n_max and 1 <= p <= n - 1, in sweep order."""
    return [(n, p) for n in range(n_min, n_max + 1) for p in range(1, n)]
