"""Serialization of run records, traces, and summaries to stable files.

Results and traces are plain CSV with LF line endings and shortest
round-trip decimal floats, so reruns with the same plan and seed produce
byte-identical files (provided timing is disabled) and any plotting stack
can consume them.  Summaries are JSON arrays with a fixed key order.  The
wall-clock timestamp lives only in the metadata file.
"""

import json
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Sequence

from .experiment import SummaryRow
from .swarm import RunRecord

__all__ = [
    "RESULTS_HEADER",
    "TRACES_HEADER",
    "ReportBundle",
    "write_results",
    "read_results",
    "write_traces",
    "write_summary",
    "read_summary",
    "write_report_bundle",
]

RESULTS_HEADER = "function,dimension,algorithm,run,final_fitness,wall_seconds,eval_count"
TRACES_HEADER = "function,dimension,algorithm,run,iteration,gbest_fitness"

_SUMMARY_KEYS = (
    "function",
    "dimension",
    "algorithm",
    "mean",
    "std",
    "median",
    "iqr_low",
    "iqr_high",
    "mean_wall_seconds",
    "winner_flag",
    "mw_pvalue",
)


def _fmt(value: float) -> str:
    """Shortest decimal that round-trips to the same float64."""
    return repr(float(value))


def _sorted_records(records):
    return sorted(records, key=lambda r: (r.function, r.dimension, r.algorithm, r.run_index))


def write_results(records: Sequence[RunRecord], path) -> None:
    """Write one CSV row per record, in canonical cell order."""
    lines = [RESULTS_HEADER]
    for rec in _sorted_records(records):
        lines.append(
            f"{rec.function},{rec.dimension},{rec.algorithm},{rec.run_index},"
            f"{_fmt(rec.final_fitness)},{_fmt(rec.wall_seconds)},{rec.eval_count}"
        )
    _write_lines(path, lines)


def read_results(path) -> List[Dict]:
    """Parse a results CSV back into dicts keyed by the header columns."""
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        header = fh.readline().strip()
        if header != RESULTS_HEADER:
            raise ValueError(f"unexpected results header: {header!r}")
        for line in fh:
            func, dim, alg, run_index, fitness, wall, evals = line.rstrip("\n").split(",")
            rows.append(
                {
                    "function": func,
                    "dimension": int(dim),
                    "algorithm": alg,
                    "run": int(run_index),
                    "final_fitness": float(fitness),
                    "wall_seconds": float(wall),
                    "eval_count": int(evals),
                }
            )
    return rows


def _trace_iterations(length: int, stride: int):
    last = length - 1
    idx = list(range(0, length, stride))
    if idx[-1] != last:
        idx.append(last)
    return idx


def write_traces(records: Sequence[RunRecord], path, stride: int = 10) -> None:
    """Write long-format convergence traces subsampled by `stride`.

    Iteration 0 and the final iteration are always present regardless of the
    stride, so endpoints survive aggressive subsampling.
    """
    if stride < 1:
        raise ValueError("stride must be at least 1")
    lines = [TRACES_HEADER]
    for rec in _sorted_records(records):
        prefix = f"{rec.function},{rec.dimension},{rec.algorithm},{rec.run_index}"
        for t in _trace_iterations(len(rec.trace), stride):
            lines.append(f"{prefix},{t},{_fmt(rec.trace[t])}")
    _write_lines(path, lines)


def write_summary(summary: Sequence[SummaryRow], path) -> None:
    """Write summary rows as a JSON array with a fixed key order."""
    payload = []
    for row in summary:
        data = asdict(row)
        payload.append({key: data[key] for key in _SUMMARY_KEYS})
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(payload, fh, indent=2)
        fh.write("\n")


def read_summary(path) -> List[SummaryRow]:
    with open(path, "r", encoding="utf-8") as fh:
        return [SummaryRow(**row) for row in json.load(fh)]


def _write_lines(path, lines) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines))
        fh.write("\n")


@dataclass
class ReportBundle:
    """Paths of the files one experiment produced, plus its metadata."""

    results_csv_path: Path
    traces_csv_path: Path
    summary_json_path: Path
    metadata: Dict


def write_report_bundle(records, summary, out_dir, trace_stride: int = 10,
                        metadata: Dict = None) -> ReportBundle:
    """Write results, traces, summary, and a metadata file into a directory."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    results_path = out / "results.csv"
    traces_path = out / "traces.csv"
    summary_path = out / "summary.json"

    write_results(records, results_path)
    write_traces(records, traces_path, stride=trace_stride)
    write_summary(summary, summary_path)

    meta = dict(metadata or {})
    meta.setdefault("created_utc", datetime.now(timezone.utc).isoformat())
    with open(out / "metadata.json", "w", encoding="utf-8", newline="\n") as fh:
        json.dump(meta, fh, indent=2, default=str)
        fh.write("\n")
    return ReportBundle(
        results_csv_path=results_path,
        traces_csv_path=traces_path,
        summary_json_path=summary_path,
        metadata=meta,
    )
