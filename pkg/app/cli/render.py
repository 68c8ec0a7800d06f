"""Text rendering for the command line; JSON goes through report.reports_to_json."""

from typing import Iterable, List, Mapping, Sequence

from app.verify.catalog import IdentityDescriptor
from app.verify.report import VerificationReport


def format_params(params: Mapping[str, int]) -> str:
    return ",".join(f"{k}={v}" for k, v in params.items()) or "-"


def report_line(report: VerificationReport) -> str:
    return f"{report.id} {format_params(report.params)} {report.outcome.upper()}"


def report_lines(reports: Iterable[VerificationReport]) -> str:
    return "\n".join(report_line(r) for r in reports)


def catalog_rows(descriptors: Sequence[IdentityDescriptor], notes: bool = False) -> str:
    width = max((len(d.id) for d in descriptors), default=0)
    eq_width = max((len(d.equation) for d in descriptors), default=0)
    par_width = max((len(",".join(d.params)) for d in descriptors), default=0)
    rows = []
    for d in descriptors:
        rows.append(f"{d.id:<{width}}  {d.equation:<{eq_width}}  {','.join(d.params):<{par_width}}  {d.classical}")
        if notes and d.notes:
            rows.append(f"    note: {d.notes}")
    return "\n".join(rows)


def index_matrix(rows: List[List[int]]) -> str:
    width = max((len(str(v)) for row in rows for v in row), default=1)
    return "\n".join(" ".join(f"{v:>{width}}" for v in row) for row in rows)
