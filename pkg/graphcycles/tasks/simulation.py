"""Seeded Monte Carlo runs over graph ensembles.

Graph ``i`` of an experiment is built from ``seed_i = base_seed + i``; its
start nodes are drawn without replacement from an independent stream
derived from the same seed. Work is split per graph and merged by graph
index, so the number of worker processes never changes the outcome.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path
from typing import Any, Iterable, Sequence

from dotenv import dotenv_values

from ..config import Config
from ..models import (
    CurveVariant,
    CycleCensus,
    ExperimentConfig,
    GraphFamily,
    IndexedGraph,
    SimulationReport,
    TheoryCurve,
)
from ..services.cycles import census
from ..services.errors import InvalidParameterError
from ..services.estimator import theory_curve
from ..services.generators import (
    build_ldpc_graph,
    build_turbo_graph,
    gen_random_permutation,
    gen_s_random_permutation,
    sample_nodes,
)
from ..services.statistics import estimate_sigma, independence_pairs

logger = logging.getLogger(__name__)

_CONFIG = Config()
REPORT_K_MIN = 4


def load_experiment_config(path: str | Path, **overrides: Any) -> ExperimentConfig:
    """Read a flat ``key=value`` file (``python-dotenv`` syntax) into an ``ExperimentConfig``."""

    source = Path(path)
    if not source.is_file():
        raise InvalidParameterError(f"Arquivo de configuração não encontrado: {source}", parameter="config", value=str(source))
    raw = dotenv_values(source)
    payload: dict[str, Any] = {key.strip().lower(): value for key, value in raw.items() if value is not None}
    payload.update({key: value for key, value in overrides.items() if value is not None})
    logger.debug("[simulation] configuração lida de %s: %s", source, sorted(payload))
    return ExperimentConfig.model_validate(payload)


def build_graph(config: ExperimentConfig, seed: int, max_rejections: int | None = None) -> IndexedGraph:
    if config.family == GraphFamily.LDPC:
        return build_ldpc_graph(config.n, config.d_v, config.d_c, seed, config.max_restarts)  # type: ignore[arg-type]
    if config.family == GraphFamily.TURBO_SRANDOM:
        perm = gen_s_random_permutation(
            config.n,
            config.s,  # type: ignore[arg-type]
            seed,
            config.max_restarts,
            max_rejections or _CONFIG.MAX_REJECTIONS,
        )
    else:
        perm = gen_random_permutation(config.n, seed)
    return build_turbo_graph(perm)


def _graph_census(args: tuple[ExperimentConfig, int, int | None]) -> tuple[int, int, CycleCensus]:
    """Build graph ``index`` and run its census; module level so worker processes can pickle it."""

    config, index, max_rejections = args
    seed = config.graph_seed(index)
    started = time.perf_counter()
    graph = build_graph(config, seed, max_rejections)
    nodes = sample_nodes(graph, config.nodes_per_graph, seed)
    result = census(graph, nodes, config.k_max, include_u=config.include_u)
    logger.debug("[simulation] grafo %s (seed=%s) concluído em %.2fs", index, seed, time.perf_counter() - started)
    return index, seed, result


def _collect(
    config: ExperimentConfig, threads: int, max_rejections: int | None
) -> list[tuple[int, int, CycleCensus]]:
    jobs = [(config, index, max_rejections) for index in range(config.graphs)]
    if threads <= 1 or config.graphs == 1:
        return [_graph_census(job) for job in jobs]

    results: dict[int, tuple[int, int, CycleCensus]] = {}
    with ProcessPoolExecutor(max_workers=threads) as executor:
        futures = {executor.submit(_graph_census, job): job[1] for job in jobs}
        for future in as_completed(futures):
            index, seed, result = future.result()
            results[index] = (index, seed, result)
            logger.debug("[simulation] %s/%s grafos prontos", len(results), config.graphs)
    return [results[index] for index in sorted(results)]


def curve_variant_for(config: ExperimentConfig) -> str:
    if config.family == GraphFamily.LDPC:
        return CurveVariant.LDPC
    return CurveVariant.TURBO_WITH_U if config.include_u else CurveVariant.TURBO


def theory_for(config: ExperimentConfig, k_min: int = REPORT_K_MIN) -> TheoryCurve | None:
    """Matching analytic curve, or None when the estimator refuses the block length."""

    try:
        return theory_curve(curve_variant_for(config), config.n, k_min, config.k_max, config.d_v, config.d_c)
    except InvalidParameterError as exc:
        logger.warning("[simulation] curva teórica indisponível para n=%s: %s", config.n, exc)
        return None


def aggregate(
    config: ExperimentConfig,
    censuses: Sequence[CycleCensus],
    k_min: int = REPORT_K_MIN,
) -> tuple[dict[int, float], dict[int, float], dict[int, float], dict[int, float]]:
    """Empirical P(no cycle <= k), its sigma, the exact-length marginals and the joint table."""

    profiles = [counts for item in censuses for _, counts in sorted(item.per_node.items())]
    total = len(profiles)
    if not total:
        raise InvalidParameterError("nenhum nó amostrado", parameter="nodes")
    shortest = [min(counts) if counts else None for counts in profiles]

    p_leq: dict[int, float] = {}
    sigma: dict[int, float] = {}
    for k in range(k_min, config.k_max + 1):
        clear = sum(1 for length in shortest if length is None or length > k)
        p_leq[k] = clear / total
        sigma[k] = estimate_sigma(p_leq[k], total)

    exact = {
        k: sum(1 for counts in profiles if not counts.get(k)) / total for k in range(1, config.k_max + 1)
    }
    joint = {
        row: sum(1 for counts in profiles if not counts.get(first) and not counts.get(second)) / total
        for row, first, second in independence_pairs(config.k_max, not config.is_turbo)
    }
    return p_leq, sigma, exact, joint


def run_simulation(
    config: ExperimentConfig,
    threads: int | None = None,
    max_rejections: int | None = None,
    keep_censuses: bool = True,
) -> SimulationReport:
    threads = max(1, threads if threads is not None else _CONFIG.THREADS)
    started = time.perf_counter()
    logger.info(
        "[simulation] Iniciando %s: n=%s, %s grafos x %s nós, k_max=%s, seed=%s, %s processo(s)",
        config.family,
        config.n,
        config.graphs,
        config.nodes_per_graph,
        config.k_max,
        config.base_seed,
        threads,
    )
    collected = _collect(config, threads, max_rejections)
    censuses = [result for _, _, result in collected]
    p_leq, sigma, exact, joint = aggregate(config, censuses)
    if config.graphs * config.nodes_per_graph == 1:
        logger.warning("[simulation] amostra com um único nó; sigma degenerado")

    report = SimulationReport(
        config=config,
        sample_size=config.sample_size,
        p_no_cycle_leq=p_leq,
        sigma=sigma,
        p_no_cycle_exact=exact,
        joint=joint,
        graph_seeds=[seed for _, seed, _ in collected],
        censuses=censuses if keep_censuses else [],
        theory=theory_for(config),
        wall_time_sec=time.perf_counter() - started,
    )
    logger.info(
        "[simulation] Concluído em %.2fs: P(sem ciclo <= %s) = %.6f",
        report.wall_time_sec,
        config.k_max,
        p_leq[config.k_max],
    )
    return report


def permuter_table(
    n: int,
    s_values: Iterable[int],
    graphs: int,
    nodes_per_graph: int,
    k_max: int,
    base_seed: int,
    threads: int | None = None,
    max_restarts: int | None = None,
) -> dict[str, dict[int, float]]:
    """Empirical P(no cycle <= k) for a random permuter and one S-random permuter per S."""

    common = {
        "n": n,
        "graphs": graphs,
        "nodes": nodes_per_graph,
        "kmax": k_max,
        "seed": base_seed,
        "max_restarts": max_restarts or _CONFIG.MAX_RESTARTS,
    }
    table: dict[str, dict[int, float]] = {}
    random_config = ExperimentConfig.model_validate({"family": GraphFamily.TURBO_RANDOM, **common})
    table["random"] = run_simulation(random_config, threads, keep_censuses=False).p_no_cycle_leq
    for s in s_values:
        config = ExperimentConfig.model_validate({"family": GraphFamily.TURBO_SRANDOM, "s": s, **common})
        table[f"S={s}"] = run_simulation(config, threads, keep_censuses=False).p_no_cycle_leq
    return table


__all__ = [
    "aggregate",
    "build_graph",
    "curve_variant_for",
    "load_experiment_config",
    "permuter_table",
    "run_simulation",
    "theory_for",
]
