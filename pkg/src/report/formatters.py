"""Table, JSON and CSV rendering of sweep records and lemma reports."""

import csv
import io
import json
from enum import Enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from ..realroots.intervals import RatInterval
from ..solver.types import EinsteinSolution, LemmaReport
from .records import SweepRecord


class ReportFormat(str, Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


CSV_COLUMNS = ["n", "p", "idx", "kind", "x1", "x2", "x3", "x4", "einstein_constant", "origin"]

Value = Union[Fraction, RatInterval]


def exact_string(value: Value) -> str:
    """'a/b' for rationals, '[lo, hi]' for enclosures."""
    if isinstance(value, RatInterval) and value.is_exact:
        value = value.lo
    return str(value)


def decimal_string(value: Value, digits: int) -> str:
    interval = value if isinstance(value, RatInterval) else RatInterval.point(value)
    return interval.to_decimal(digits)


def value_fields(value: Value, digits: int) -> dict[str, Any]:
    """Decimal rendering plus the exact data it was computed from."""
    if isinstance(value, RatInterval) and not value.is_exact:
        exact: dict[str, Any] = {"interval": [str(value.lo), str(value.hi)]}
    else:
        exact = {"rational": exact_string(value)}
    exact["decimal"] = decimal_string(value, digits)
    return exact


def solution_dict(index: int, solution: EinsteinSolution, digits: int) -> dict[str, Any]:
    names = ("x1", "x2", "x3", "x4")
    return {
        "idx": index,
        "kind": solution.kind.value,
        "origin": solution.origin.value,
        "metric": {name: value_fields(v, digits) for name, v in zip(names, solution.metric)},
        "einstein_constant": value_fields(solution.einstein_constant, digits),
        "certificate": solution.certificate.as_dict(),
    }


def lemma_dict(report: LemmaReport) -> dict[str, Any]:
    return {
        "passed": report.passed,
        "summary": report.summary(),
        "verdicts": [
            {
                "id": v.identifier,
                "statement": v.statement,
                "status": v.status,
                "witnesses": dict(v.witnesses),
            }
            for v in report.verdicts
        ],
    }


@dataclass
class SweepReport:
    """Ordered records plus rendering options."""
    records: list[SweepRecord] = field(default_factory=list)
    digits: int = 30
    timings: bool = False

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    @property
    def first_failure(self) -> Union[SweepRecord, None]:
        return next((r for r in self.records if not r.passed), None)

    def record_dict(self, record: SweepRecord) -> dict[str, Any]:
        data: dict[str, Any] = {"n": record.n, "p": record.p, "dimensions": list(record.dimensions)}
        if record.solutions:
            data["counts"] = record.counts
            data["solutions"] = [solution_dict(i, s, self.digits) for i, s in enumerate(record.solutions)]
        if record.duality is not None:
            data["duality_check"] = record.duality
        if record.lemmas is not None:
            data["lemmas"] = lemma_dict(record.lemmas)
        if self.timings and record.seconds is not None:
            data["seconds"] = round(record.seconds, 3)
        return data

    def to_json(self, single: bool = False) -> str:
        payload: Any = [self.record_dict(r) for r in self.records]
        if single and len(payload) == 1:
            payload = payload[0]
        return json.dumps(payload, indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for record in self.records:
            for index, solution in enumerate(record.solutions):
                x1, x2, x3, x4 = (exact_string(v) for v in solution.metric)
                writer.writerow(
                    {
                        "n": record.n,
                        "p": record.p,
                        "idx": index,
                        "kind": solution.kind.value,
                        "x1": x1,
                        "x2": x2,
                        "x3": x3,
                        "x4": x4,
                        "einstein_constant": exact_string(solution.einstein_constant),
                        "origin": solution.origin.value,
                    }
                )
        return buffer.getvalue()

    def to_table(self) -> str:
        width = 60 + 4 * min(self.digits, 40)
        lines: list[str] = []
        for record in self.records:
            q = record.n - record.p
            lines.append("=" * width)
            lines.append(f"Sp({record.n})/(U({record.p}) x U({q}))   dimensions {record.dimensions}")
            if record.solutions:
                counts = record.counts
                lines.append(
                    f"{counts['total']} Einstein metrics: {counts['kahler']} Kahler, {counts['non_kahler']} non-Kahler"
                )
                lines.append("-" * width)
                lines.extend(self._solution_rows(record.solutions))
            if record.duality is not None:
                lines.append(f"duality (p <-> n-p): {'ok' if record.duality else 'FAILED'}")
            if record.lemmas is not None:
                lines.append("-" * width)
                lines.extend(render_lemma_lines(record.lemmas))
            if self.timings and record.seconds is not None:
                lines.append(f"time: {record.seconds:.3f}s")
        if lines:
            lines.append("=" * width)
        return "\n".join(lines) + "\n"

    def _solution_rows(self, solutions: list[EinsteinSolution]) -> list[str]:
        column = min(self.digits, 40) + 4
        header = f"{'#':>2}  {'kind':<10} {'x2':<{column}} {'x3':<{column}} {'x4':<{column}} {'lambda':<{column}} origin"
        rows = [header]
        for index, solution in enumerate(solutions):
            _, x2, x3, x4 = (decimal_string(v, self.digits) for v in solution.metric)
            constant = decimal_string(solution.einstein_constant, self.digits)
            rows.append(
                f"{index:>2}  {solution.kind.value:<10} {x2:<{column}} {x3:<{column}} {x4:<{column}} "
                f"{constant:<{column}} {solution.origin.value}"
            )
        return rows

    def render(self, fmt: str, single: bool = False) -> str:
        if fmt == ReportFormat.JSON:
            return self.to_json(single) + "\n"
        if fmt == ReportFormat.CSV:
            return self.to_csv()
        return self.to_table()


def render_lemma_lines(report: LemmaReport) -> list[str]:
    lines = []
    for verdict in report.verdicts:
        lines.append(f"{verdict.identifier:<3} {verdict.status:<4}  {verdict.statement}")
        if verdict.applicable and not verdict.passed:
            for key, value in verdict.witnesses.items():
                lines.append(f"      {key} = {value}")
    return lines
