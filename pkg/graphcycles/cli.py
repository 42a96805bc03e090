"""Command line entry point: ``python -m graphcycles <command> ...``.

Exit codes: 0 on success, 1 on invalid input (including usage errors), 2
when a random construction exhausts its restarts.
"""

from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Sequence

import colorama
from colorama import Fore, Style
from pydantic import ValidationError

from . import __version__, configure_logging
from .config import Config
from .models import CurveVariant, ExperimentConfig, GraphFamily, parse_node
from .services import reports
from .services.cycles import census
from .services.errors import ConstructionError, GraphCyclesError, InvalidParameterError, ReportWriteError
from .services.estimator import k_half, theory_curve
from .services.generators import sample_nodes
from .services.graph_io import format_graph, read_graph, write_graph
from .services.statistics import compare_report, independence_report, within_sigma_fraction
from .tasks.simulation import (
    aggregate,
    build_graph,
    load_experiment_config,
    permuter_table,
    run_simulation,
    theory_for,
)

logger = logging.getLogger("graphcycles.cli")

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_CONSTRUCTION = 2

_FAMILIES = (*GraphFamily.ALL, "turbo", "srandom")
_CURVE_FAMILIES = ("turbo", "turbo-with-u", "turbo-closed-form", "ldpc")
_DEFAULT_S_VALUES = (10, 20)


class ColorFormatter(logging.Formatter):
    COLORS = {
        logging.DEBUG: Fore.CYAN,
        logging.INFO: Fore.GREEN,
        logging.WARNING: Fore.YELLOW,
        logging.ERROR: Fore.RED,
        logging.CRITICAL: Fore.RED + Style.BRIGHT,
    }

    def format(self, record: logging.LogRecord) -> str:  # pragma: no cover - usado apenas em CLI
        message = super().format(record)
        color = self.COLORS.get(record.levelno)
        if color:
            return f"{color}{message}{Style.RESET_ALL}"
        return message


def setup_logger(level: str) -> None:
    """Colour console handler on stderr; stdout is reserved for CSV output."""

    colorama.just_fix_windows_console()
    root = logging.getLogger()
    root.handlers.clear()
    root.setLevel(level.upper())
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(ColorFormatter("%(asctime)s %(levelname)s %(message)s", "%H:%M:%S"))
    root.addHandler(handler)


def _add_common(parser: argparse.ArgumentParser, config: Config) -> None:
    parser.add_argument("--seed", type=int, default=None, help="Semente base (64 bits)")
    parser.add_argument("--out", default=None, help="Arquivo de saída (padrão: stdout)")
    parser.add_argument("--threads", type=int, default=config.THREADS, help="Processos de trabalho")


def _add_experiment(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", dest="config_path", default=None, help="Arquivo key=value do experimento")
    parser.add_argument("--family", choices=_FAMILIES, default=None)
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--s", type=int, default=None)
    parser.add_argument("--dv", type=int, default=None)
    parser.add_argument("--dc", type=int, default=None)
    parser.add_argument("--graphs", type=int, default=None)
    parser.add_argument("--nodes", type=int, default=None)
    parser.add_argument("--kmax", type=int, default=None)
    parser.add_argument("--include-u", dest="include_u", action="store_true", default=None)
    parser.add_argument("--full-scale", action="store_true", help="Protocolo completo (n=64000, 200x100, k_max=20)")


def build_parser(config: Config | None = None) -> argparse.ArgumentParser:
    config = config or Config()
    parser = argparse.ArgumentParser(prog="graphcycles", description="Distribuição de comprimentos de ciclos em grafos turbo e LDPC")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", default=config.LOG_LEVEL, help="Nível de log (DEBUG, INFO, ...)")
    parser.add_argument("--log-json", action="store_true", help="Logs em JSON de uma linha no stderr")
    commands = parser.add_subparsers(dest="command", required=True)

    generate = commands.add_parser("generate", help="Gera um grafo e grava no formato texto")
    generate.add_argument("--family", choices=_FAMILIES, default=GraphFamily.TURBO_RANDOM)
    generate.add_argument("--n", type=int, required=True)
    generate.add_argument("--s", type=int, default=None)
    generate.add_argument("--dv", type=int, default=None)
    generate.add_argument("--dc", type=int, default=None)
    generate.add_argument("--max-restarts", type=int, default=config.MAX_RESTARTS)
    _add_common(generate, config)

    census_cmd = commands.add_parser("census", help="Conta ciclos por nó de um arquivo de grafo")
    census_cmd.add_argument("--graph", required=True, help="Arquivo produzido por 'generate'")
    census_cmd.add_argument("--kmax", type=int, default=config.DESK_KMAX)
    selection = census_cmd.add_mutually_exclusive_group()
    selection.add_argument("--sample", type=int, default=None, help="Quantidade de nós sorteados")
    selection.add_argument("--nodes", default=None, help="Lista 'lado:índice' separada por vírgulas")
    census_cmd.add_argument("--include-u", dest="include_u", action="store_true")
    census_cmd.add_argument("--summary", default=None, help="CSV k,frac_nodes_no_cycle_leq_k,sample_size")
    _add_common(census_cmd, config)

    theory = commands.add_parser("theory", help="Curva teórica P(sem ciclo <= k)")
    theory.add_argument("--family", choices=_CURVE_FAMILIES, default="turbo")
    theory.add_argument("--n", type=int, action="append", required=True, help="Repetível")
    theory.add_argument("--kmin", type=int, default=4)
    theory.add_argument("--kmax", type=int, default=config.FULL_KMAX)
    theory.add_argument("--dv", type=int, default=None)
    theory.add_argument("--dc", type=int, default=None)
    _add_common(theory, config)

    simulate = commands.add_parser("simulate", help="Executa o experimento de Monte Carlo")
    _add_experiment(simulate)
    simulate.add_argument("--census", dest="census_out", default=None, help="CSV resumo da amostra")
    simulate.add_argument("--independence", dest="independence_out", default=None)
    _add_common(simulate, config)

    compare = commands.add_parser("compare", help="Compara simulação e teoria")
    compare.add_argument("--report", dest="report_path", default=None, help="CSV gerado por 'simulate'")
    _add_experiment(compare)
    _add_common(compare, config)

    independence = commands.add_parser("independence", help="Diagnóstico de independência entre eventos")
    _add_experiment(independence)
    _add_common(independence, config)

    table = commands.add_parser("srandom-table", help="Permutador aleatório contra S-random")
    table.add_argument("--n", type=int, default=config.DESK_N)
    table.add_argument("--s", type=int, action="append", default=None, help="Repetível")
    table.add_argument("--graphs", type=int, default=config.DESK_GRAPHS)
    table.add_argument("--nodes", type=int, default=config.DESK_NODES)
    table.add_argument("--kmax", type=int, default=config.DESK_KMAX)
    table.add_argument("--full-scale", action="store_true")
    _add_common(table, config)

    khalf = commands.add_parser("khalf", help="Comprimento k em que P(sem ciclo <= k) = 0.5")
    khalf.add_argument("--n", type=int, action="append", required=True, help="Repetível")
    khalf.add_argument("--out", default=None)

    return parser


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def _experiment_config(args: argparse.Namespace) -> ExperimentConfig:
    overrides: dict[str, Any] = {
        "n": args.n,
        "s": args.s,
        "dv": args.dv,
        "dc": args.dc,
        "graphs": args.graphs,
        "nodes": args.nodes,
        "kmax": args.kmax,
        "seed": args.seed,
        "include_u": args.include_u,
    }
    if args.config_path:
        if args.family:
            overrides["family"] = args.family
        return load_experiment_config(args.config_path, **overrides)
    family = args.family or GraphFamily.TURBO_RANDOM
    if args.full_scale:
        logger.warning("[cli] escala completa solicitada: a execução leva horas")
        return ExperimentConfig.full_scale(family, **overrides)
    return ExperimentConfig.desk_scale(family, **overrides)


def cmd_generate(args: argparse.Namespace, config: Config) -> int:
    seed = args.seed if args.seed is not None else config.DEFAULT_SEED
    payload: dict[str, Any] = {"family": args.family, "n": args.n, "s": args.s, "dv": args.dv, "dc": args.dc}
    payload["max_restarts"] = args.max_restarts
    payload["seed"] = seed
    experiment = ExperimentConfig.model_validate({key: value for key, value in payload.items() if value is not None})
    graph = build_graph(experiment, seed, config.MAX_REJECTIONS)
    if args.out:
        write_graph(graph, args.out, seed, experiment.s)
    else:
        sys.stdout.write(format_graph(graph, seed, experiment.s))
    return EXIT_OK


def cmd_census(args: argparse.Namespace, config: Config) -> int:
    graph, header = read_graph(args.graph)
    if args.nodes:
        nodes = [parse_node(item) for item in args.nodes.split(",") if item.strip()]
    elif args.sample is not None:
        seed = args.seed if args.seed is not None else header.seed
        nodes = sample_nodes(graph, args.sample, seed)
    else:
        nodes = graph.node_ids()
    result = census(graph, nodes, args.kmax, include_u=args.include_u)
    metadata = {"graph": header.to_dict()}
    reports.write_census_csv(result, args.out, metadata)
    if args.summary:
        reports.write_summary_csv(result, args.summary, metadata)
    return EXIT_OK


def cmd_theory(args: argparse.Namespace, config: Config) -> int:
    variant = CurveVariant.normalize(args.family)
    curves = [theory_curve(variant, n, args.kmin, args.kmax, args.dv, args.dc) for n in args.n]
    reports.write_curve_csv(curves, args.out)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace, config: Config) -> int:
    experiment = _experiment_config(args)
    report = run_simulation(experiment, args.threads)
    reports.write_report_csv(report, args.out or experiment.report_path)
    census_out = args.census_out or experiment.census_path
    if census_out:
        fractions = aggregate(experiment, report.censuses, k_min=1)[0]
        reports.write_sample_summary_csv(fractions, report.sample_size, census_out, reports.report_metadata(report))
    if args.independence_out:
        rows = independence_report(report)
        reports.write_independence_csv(rows, args.independence_out, reports.report_metadata(report))
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, config: Config) -> int:
    if args.report_path:
        report = reports.read_report_csv(args.report_path)
        metadata: dict[str, Any] = {"source": args.report_path, **reports.report_metadata(report)}
    else:
        report = run_simulation(_experiment_config(args), args.threads, keep_censuses=False)
        metadata = reports.report_metadata(report)
    theory = theory_for(report.config, min(report.k_values))
    if theory is None:
        raise InvalidParameterError("Sem curva teórica para esta configuração", parameter="n", value=report.config.n)
    rows = compare_report(report, theory)
    share = within_sigma_fraction(rows)
    metadata["within_3_sigma"] = f"{share:.3f}"
    logger.info("[cli] %.1f%% das linhas com |diff| <= 3 sigma", 100 * share)
    reports.write_comparison_csv(rows, args.out, metadata)
    return EXIT_OK


def cmd_independence(args: argparse.Namespace, config: Config) -> int:
    report = run_simulation(_experiment_config(args), args.threads, keep_censuses=False)
    rows = independence_report(report)
    reports.write_independence_csv(rows, args.out, reports.report_metadata(report))
    return EXIT_OK


def cmd_srandom_table(args: argparse.Namespace, config: Config) -> int:
    n, graphs, nodes, k_max = args.n, args.graphs, args.nodes, args.kmax
    if args.full_scale:
        logger.warning("[cli] escala completa solicitada: a execução leva horas")
        n, graphs, nodes, k_max = config.FULL_N, config.FULL_GRAPHS, config.FULL_NODES, config.FULL_KMAX
    s_values = args.s or list(_DEFAULT_S_VALUES)
    seed = args.seed if args.seed is not None else config.DEFAULT_SEED
    table = permuter_table(n, s_values, graphs, nodes, k_max, seed, args.threads)
    metadata = {"n": n, "graphs": graphs, "nodes": nodes, "kmax": k_max, "seed": seed}
    reports.write_permuter_table_csv(table, args.out, metadata)
    return EXIT_OK


def cmd_khalf(args: argparse.Namespace, config: Config) -> int:
    rows = [(str(n), f"{k_half(n):.6f}") for n in args.n]
    reports.write_rows_csv(("n", "k_half"), rows, args.out)
    return EXIT_OK


_COMMANDS = {
    "generate": cmd_generate,
    "census": cmd_census,
    "theory": cmd_theory,
    "simulate": cmd_simulate,
    "compare": cmd_compare,
    "independence": cmd_independence,
    "srandom-table": cmd_srandom_table,
    "khalf": cmd_khalf,
}


def main(argv: Sequence[str] | None = None) -> int:
    config = Config()
    try:
        args = build_parser(config).parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID

    try:
        if args.log_json:
            configure_logging(args.log_level.upper(), stream="ext://sys.stderr")
        else:
            setup_logger(args.log_level)
        return _COMMANDS[args.command](args, config)
    except ConstructionError as exc:
        logger.error("[cli] %s", exc)
        return EXIT_CONSTRUCTION
    except ReportWriteError as exc:
        logger.error("[cli] falha ao gravar %s: %s", exc.path, exc.reason)
        return EXIT_INVALID
    except ValidationError as exc:
        logger.error("[cli] configuração inválida: %s", exc)
        return EXIT_INVALID
    except (GraphCyclesError, ValueError) as exc:
        logger.error("[cli] %s", exc)
        return EXIT_INVALID
    except Exception as exc:  # pragma: no cover - garante logging de falhas inesperadas
        logger.exception("[cli] Falha inesperada: %s", exc)
        return EXIT_INVALID


if __name__ == "__main__":  # pragma: no cover - execução manual
    sys.exit(main())
