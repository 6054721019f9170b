"""Point-set file format and report serialization.

Point-set files are UTF-8 text: '#' lines are comments, the first
significant line is the point count, then one "x y" pair of signed decimal
integers per line.  Reports serialize to JSON with snake_case keys in a
fixed order and all counts as decimal strings, so consumers never need
big-integer support; experiment summaries also serialize to CSV with a
fixed header.
"""

from __future__ import annotations

import json
from pathlib import Path

from .classify import TheoremReport
from .errors import CoordinateRangeError, ParseError
from .geometry import COORD_BOUND, PointSet

REPORT_CSV_HEADER = (
    "n,k,pm,catalan_k,gnt,classification,witness_found,consistent,"
    "skipped_checks,failed_checks"
)
SUMMARY_CSV_HEADER = (
    "trials,n_min,n_max,failure_count,failures,total_s,mean_s,min_s,max_s"
)


def parse_point_set(text: str, *, strict_gp: bool = False) -> PointSet:
    """Parse the text form; raises ParseError with a 1-based line number."""
    count = None
    coords: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if count is None:
            try:
                count = int(line)
            except ValueError:
                raise ParseError(f"line {lineno}: expected point count, got {line!r}",
                                 line=lineno)
            if count < 1:
                raise ParseError(f"line {lineno}: point count must be >= 1",
                                 line=lineno)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(
                f"line {lineno}: expected 'x y', got {line!r}", line=lineno
            )
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(
                f"line {lineno}: coordinates must be integers, got {line!r}",
                line=lineno,
            )
        if abs(x) > COORD_BOUND or abs(y) > COORD_BOUND:
            raise CoordinateRangeError(
                f"line {lineno}: coordinate out of range (|x|,|y| <= 2**30)"
            )
        coords.append((x, y))
        if len(coords) > count:
            raise ParseError(f"line {lineno}: more points than declared ({count})",
                             line=lineno)
    if count is None:
        raise ParseError("empty file: no point count found")
    if len(coords) != count:
        raise ParseError(f"declared {count} points but found {len(coords)}")
    ps = PointSet.of(coords)
    if strict_gp:
        ps.check_general_position()
    return ps


def read_point_set(path, *, strict_gp: bool = False) -> PointSet:
    return parse_point_set(Path(path).read_text(encoding="utf-8"),
                           strict_gp=strict_gp)


def point_set_to_text(ps: PointSet) -> str:
    lines = [str(len(ps))]
    lines.extend(f"{p.x} {p.y}" for p in ps.points)
    return "\n".join(lines) + "\n"


def write_point_set(ps: PointSet, path) -> None:
    Path(path).write_text(point_set_to_text(ps), encoding="utf-8")


def _count_str(value) -> str | None:
    return None if value is None else str(value)


def report_to_dict(report: TheoremReport) -> dict:
    return {
        "n": report.n,
        "k": report.k,
        "pm": _count_str(report.pm),
        "catalan_k": _count_str(report.catalan_k),
        "gnt": _count_str(report.gnt),
        "classification": report.classification,
        "witness_found": report.witness_found,
        "consistent": report.consistent,
        "skipped_checks": list(report.skipped_checks),
        "failed_checks": list(report.failed_checks),
    }


def summary_to_dict(summary) -> dict:
    return {
        "trials": summary.trials,
        "n_range": list(summary.n_range),
        "failures": [
            {"seed": f.seed, "n": f.n, "check": f.check} for f in summary.failures
        ],
        "timings": dict(summary.timings),
    }


def _report_csv(report: TheoremReport) -> str:
    d = report_to_dict(report)
    row = [
        str(d["n"]),
        str(d["k"]),
        d["pm"] if d["pm"] is not None else "",
        d["catalan_k"],
        d["gnt"],
        d["classification"],
        str(d["witness_found"]).lower(),
        str(d["consistent"]).lower(),
        ";".join(d["skipped_checks"]),
        ";".join(d["failed_checks"]),
    ]
    return REPORT_CSV_HEADER + "\n" + ",".join(row) + "\n"


def _summary_csv(summary) -> str:
    d = summary_to_dict(summary)
    t = d["timings"]
    failures = ";".join(
        f"{f['seed']}:{f['n']}:{f['check']}" for f in d["failures"]
    )
    row = [
        str(d["trials"]),
        str(d["n_range"][0]),
        str(d["n_range"][1]),
        str(len(d["failures"])),
        failures,
        f"{t['total_s']:.6f}",
        f"{t['mean_s']:.6f}",
        f"{t['min_s']:.6f}",
        f"{t['max_s']:.6f}",
    ]
    return SUMMARY_CSV_HEADER + "\n" + ",".join(row) + "\n"


def write_report(report, fmt: str = "json") -> bytes:
    """Serialize a TheoremReport or ExperimentSummary to JSON or CSV bytes."""
    is_report = isinstance(report, TheoremReport)
    if fmt == "json":
        payload = report_to_dict(report) if is_report else summary_to_dict(report)
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
    if fmt == "csv":
        text = _report_csv(report) if is_report else _summary_csv(report)
        return text.encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")
