from __future__ import annotations

import logging
import math
from typing import Sequence

from ..models import ComparisonRow, IndependenceRow, SimulationReport, TheoryCurve
from .errors import InvalidParameterError, require

logger = logging.getLogger(__name__)


def estimate_sigma(p_hat: float, sample_size: int) -> float:
    """Binomial standard error ``sqrt(p(1 - p) / N)``."""

    require(0.0 <= p_hat <= 1.0, f"probabilidade fora de [0,1]: {p_hat}", parameter="p_hat", value=p_hat)
    require(sample_size >= 1, "N deve ser >= 1", parameter="sample_size", value=sample_size)
    return math.sqrt(p_hat * (1.0 - p_hat) / sample_size)


def independence_pairs(k_max: int, ldpc: bool) -> list[tuple[int, int, int]]:
    """``(row, first_length, second_length)`` for every independence table row.

    Turbo rows compare consecutive lengths ``k`` and ``k + 1``; LDPC rows
    compare the even lengths ``2k`` and ``2k + 2``.
    """

    if ldpc:
        return [(k, 2 * k, 2 * k + 2) for k in range(1, k_max // 2)]
    return [(k, k, k + 1) for k in range(1, k_max)]


def independence_report(report: SimulationReport) -> list[IndependenceRow]:
    if not report.joint:
        raise InvalidParameterError("Relatório sem tabela de eventos conjuntos", parameter="joint")
    rows: list[IndependenceRow] = []
    for row, first, second in independence_pairs(report.config.k_max, report.is_ldpc):
        if row not in report.joint:
            continue
        product = report.p_no_cycle_exact[first] * report.p_no_cycle_exact[second]
        rows.append(IndependenceRow(k=row, product=product, joint=report.joint[row]))
    return rows


def compare_report(sim: SimulationReport, theory: TheoryCurve) -> list[ComparisonRow]:
    expected = list(theory.k_range)
    if sim.k_values != expected:
        raise InvalidParameterError(
            f"Intervalos de k incompatíveis: simulação {sim.k_values[:1]}..{sim.k_values[-1:]} "
            f"e teoria {theory.k_min}..{theory.k_max}",
            parameter="k_range",
        )
    rows = [
        ComparisonRow(
            k=k,
            p_sim=sim.p_no_cycle_leq[k],
            p_theory=theory[k],
            sigma=sim.sigma[k],
            sigma_theory=estimate_sigma(theory[k], sim.sample_size),
        )
        for k in expected
    ]
    worst = max(abs(row.diff) for row in rows)
    logger.info("[statistics] comparação com %s linhas, maior diferença %.6f", len(rows), worst)
    return rows


def within_sigma_fraction(rows: Sequence[ComparisonRow], factor: float = 3.0) -> float:
    """Share of rows with ``|diff| <= factor * sigma``."""

    if not rows:
        return 0.0
    hits = sum(1 for row in rows if abs(row.diff) <= factor * row.sigma)
    return hits / len(rows)


__all__ = [
    "compare_report",
    "estimate_sigma",
    "independence_pairs",
    "independence_report",
    "within_sigma_fraction",
]
