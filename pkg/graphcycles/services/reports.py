"""CSV artifacts.

Every file starts with ``#`` metadata lines (package version, config echo,
seeds, wall time) followed by a regular CSV body. Probabilities are written
with six decimals. Bodies never contain timing data, so two runs of the same
configuration produce identical bodies.
"""

from __future__ import annotations

import csv
import io
import logging
import sys
from contextlib import contextmanager
from pathlib import Path
from typing import Any, Iterable, Iterator, Mapping, Sequence, TextIO

from .. import __version__
from ..models import (
    ComparisonRow,
    CycleCensus,
    ExperimentConfig,
    IndependenceRow,
    SimulationReport,
    TheoryCurve,
)
from .errors import InvalidParameterError, ReportWriteError
from .statistics import estimate_sigma

logger = logging.getLogger(__name__)

REPORT_COLUMNS = ("k", "p_sim", "sigma", "p_theory", "diff", "sigma_theory")
INDEPENDENCE_COLUMNS = ("k", "product", "joint", "diff")
CURVE_COLUMNS = ("k", "p_no_cycle_leq_k", "variant", "n")
CENSUS_COLUMNS = ("node_id", "k", "count")
SUMMARY_COLUMNS = ("k", "frac_nodes_no_cycle_leq_k", "sample_size")

Target = str | Path | TextIO | None


def fmt_prob(value: float | None) -> str:
    return "" if value is None else f"{value:.6f}"


@contextmanager
def _open_target(target: Target) -> Iterator[TextIO]:
    if target is None:
        yield sys.stdout
        return
    if hasattr(target, "write"):
        yield target  # type: ignore[misc]
        return
    path = Path(target)  # type: ignore[arg-type]
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        handle = path.open("w", encoding="utf-8", newline="")
    except OSError as exc:
        raise ReportWriteError(path=str(path), reason=str(exc)) from exc
    try:
        with handle:
            yield handle
    except OSError as exc:
        raise ReportWriteError(path=str(path), reason=str(exc)) from exc
    logger.info("[reports] %s gravado", path)


def _write(
    target: Target,
    columns: Sequence[str],
    rows: Iterable[Sequence[Any]],
    metadata: Mapping[str, Any] | None = None,
) -> None:
    with _open_target(target) as handle:
        handle.write(f"# graphcycles {__version__}\n")
        for key, value in (metadata or {}).items():
            handle.write(f"# {key}: {_meta_value(value)}\n")
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(rows)


def _meta_value(value: Any) -> str:
    if isinstance(value, Mapping):
        return " ".join(f"{key}={_meta_value(item)}" for key, item in value.items())
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (list, tuple)):
        return " ".join(str(item) for item in value)
    return str(value)


def report_metadata(report: SimulationReport) -> dict[str, Any]:
    return {
        "config": report.config.echo(),
        "sample_size": report.sample_size,
        "seeds": report.graph_seeds,
        "wall_time_sec": f"{report.wall_time_sec:.3f}",
    }


def report_rows(report: SimulationReport) -> list[tuple[str, ...]]:
    rows = []
    for k in report.k_values:
        p_sim = report.p_no_cycle_leq[k]
        p_theory = report.theory[k] if report.theory is not None else None
        diff = p_sim - p_theory if p_theory is not None else None
        sigma_theory = estimate_sigma(p_theory, report.sample_size) if p_theory is not None else None
        rows.append(
            (str(k), fmt_prob(p_sim), fmt_prob(report.sigma[k]), fmt_prob(p_theory), fmt_prob(diff), fmt_prob(sigma_theory))
        )
    return rows


def write_rows_csv(
    columns: Sequence[str],
    rows: Iterable[Sequence[Any]],
    target: Target = None,
    metadata: Mapping[str, Any] | None = None,
) -> None:
    _write(target, columns, rows, metadata)


def write_report_csv(report: SimulationReport, target: Target = None) -> None:
    _write(target, REPORT_COLUMNS, report_rows(report), report_metadata(report))


def write_comparison_csv(
    rows: Sequence[ComparisonRow],
    target: Target = None,
    metadata: Mapping[str, Any] | None = None,
) -> None:
    body = [
        (str(row.k), fmt_prob(row.p_sim), fmt_prob(row.sigma), fmt_prob(row.p_theory), fmt_prob(row.diff), fmt_prob(row.sigma_theory))
        for row in rows
    ]
    _write(target, REPORT_COLUMNS, body, metadata)


def write_independence_csv(
    rows: Sequence[IndependenceRow],
    target: Target = None,
    metadata: Mapping[str, Any] | None = None,
) -> None:
    body = [(str(row.k), fmt_prob(row.product), fmt_prob(row.joint), fmt_prob(row.diff)) for row in rows]
    _write(target, INDEPENDENCE_COLUMNS, body, metadata)


def write_curve_csv(curves: TheoryCurve | Sequence[TheoryCurve], target: Target = None) -> None:
    """One row per (curve, k); several curves share the file, distinguished by ``n``/``variant``."""

    if isinstance(curves, TheoryCurve):
        curves = [curves]
    ldpc = any(curve.d_v is not None for curve in curves)
    columns = CURVE_COLUMNS + (("dv", "dc") if ldpc else ())
    body = []
    for curve in curves:
        for k, value in curve.rows():
            row = [str(k), fmt_prob(value), curve.variant, str(curve.n)]
            if ldpc:
                row += [str(curve.d_v or ""), str(curve.d_c or "")]
            body.append(row)
    _write(target, columns, body)


def write_census_csv(census: CycleCensus, target: Target = None, metadata: Mapping[str, Any] | None = None) -> None:
    meta = {"k_max": census.k_max, "include_u": census.include_u, "sample_size": census.sample_size}
    meta.update(metadata or {})
    _write(target, CENSUS_COLUMNS, ([node, str(k), str(count)] for node, k, count in census.rows()), meta)


def write_summary_csv(
    census: CycleCensus,
    target: Target = None,
    metadata: Mapping[str, Any] | None = None,
    k_min: int = 1,
) -> None:
    body = [(str(k), fmt_prob(frac), str(size)) for k, frac, size in census.summary_rows(k_min)]
    _write(target, SUMMARY_COLUMNS, body, metadata)


def write_sample_summary_csv(
    fractions: Mapping[int, float],
    sample_size: int,
    target: Target = None,
    metadata: Mapping[str, Any] | None = None,
) -> None:
    """Summary CSV for a sample pooled over several graphs."""

    body = [(str(k), fmt_prob(fractions[k]), str(sample_size)) for k in sorted(fractions)]
    _write(target, SUMMARY_COLUMNS, body, metadata)


def write_permuter_table_csv(
    table: Mapping[str, Mapping[int, float]],
    target: Target = None,
    metadata: Mapping[str, Any] | None = None,
) -> None:
    """``k`` followed by one column per permuter (``random``, ``S=..``)."""

    columns = ["k", *table]
    ks = sorted({k for values in table.values() for k in values})
    body = [[str(k), *(fmt_prob(table[name].get(k)) for name in table)] for k in ks]
    _write(target, columns, body, metadata)


def split_metadata(text: str) -> tuple[dict[str, str], str]:
    """Separate the ``#`` header of an artifact from its CSV body."""

    metadata: dict[str, str] = {}
    body_lines = []
    for line in text.splitlines(keepends=True):
        if line.startswith("#"):
            key, sep, value = line[1:].strip().partition(": ")
            if sep:
                metadata[key] = value
        else:
            body_lines.append(line)
    return metadata, "".join(body_lines)


def _parse_echo(text: str) -> dict[str, str]:
    pairs = {}
    for token in text.split():
        key, sep, value = token.partition("=")
        if sep:
            pairs[key] = value
    return pairs


def read_report_csv(path: str | Path) -> SimulationReport:
    """Load a report written by ``write_report_csv`` (marginals and joint table are not stored)."""

    source = Path(path)
    try:
        text = source.read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidParameterError(f"Não foi possível ler {source}: {exc}", parameter="path", value=str(source)) from exc
    metadata, body = split_metadata(text)
    if "config" not in metadata or "sample_size" not in metadata:
        raise InvalidParameterError(f"{source}: relatório sem metadados de configuração", parameter="path", value=str(source))
    config = ExperimentConfig.model_validate(_parse_echo(metadata["config"]))

    p_sim: dict[int, float] = {}
    sigma: dict[int, float] = {}
    for row in csv.DictReader(io.StringIO(body)):
        try:
            k = int(row["k"])
            p_sim[k] = float(row["p_sim"])
            sigma[k] = float(row["sigma"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidParameterError(f"{source}: linha de relatório inválida: {row}", parameter="path") from exc

    seeds = [int(seed) for seed in metadata.get("seeds", "").split()]
    return SimulationReport(
        config=config,
        sample_size=int(metadata["sample_size"]),
        p_no_cycle_leq=p_sim,
        sigma=sigma,
        p_no_cycle_exact={},
        joint={},
        graph_seeds=seeds,
        wall_time_sec=float(metadata.get("wall_time_sec", "0") or 0),
    )


def read_rows(path: str | Path) -> list[dict[str, str]]:
    """Body rows of any artifact as dictionaries."""

    _, body = split_metadata(Path(path).read_text(encoding="utf-8"))
    return list(csv.DictReader(io.StringIO(body)))


__all__ = [
    "read_report_csv",
    "read_rows",
    "report_metadata",
    "report_rows",
    "split_metadata",
    "write_census_csv",
    "write_comparison_csv",
    "write_curve_csv",
    "write_independence_csv",
    "write_permuter_table_csv",
    "write_report_csv",
    "write_rows_csv",
    "write_sample_summary_csv",
    "write_summary_csv",
]
