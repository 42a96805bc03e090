from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from ..models import IndexedGraph, LdpcGraph, Permutation, TurboGraph
from .errors import GraphFormatError, InvalidParameterError, ReportWriteError

logger = logging.getLogger(__name__)

_TURBO_KEYS = ("n", "seed", "s")
_LDPC_KEYS = ("n", "w", "dv", "dc", "seed")


@dataclass(frozen=True)
class GraphHeader:
    kind: str
    n: int
    seed: int
    s: int = 0
    w: int | None = None
    d_v: int | None = None
    d_c: int | None = None

    def to_dict(self) -> dict[str, Any]:
        payload: dict[str, Any] = {"kind": self.kind, "n": self.n, "seed": self.seed}
        if self.kind == TurboGraph.kind:
            payload["s"] = self.s
        else:
            payload.update({"w": self.w, "dv": self.d_v, "dc": self.d_c})
        return payload


def format_graph(graph: IndexedGraph, seed: int, s: int | None = None) -> str:
    """Render ``graph`` in the text exchange format (header line + body)."""

    if isinstance(graph, TurboGraph):
        header = f"turbo n={graph.n} seed={seed} s={s or 0}"
        body = " ".join(str(value) for value in graph.perm.map)
        return f"{header}\n{body}\n"
    if isinstance(graph, LdpcGraph):
        header = f"ldpc n={graph.n} w={graph.w} dv={graph.d_v} dc={graph.d_c} seed={seed}"
        lines = [header, *(f"{variable} {check}" for variable, check in graph.edges)]
        return "\n".join(lines) + "\n"
    raise InvalidParameterError(f"Tipo de grafo não suportado: {type(graph).__name__}", parameter="graph")


def write_graph(graph: IndexedGraph, path: str | Path, seed: int, s: int | None = None) -> Path:
    target = Path(path)
    try:
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_text(format_graph(graph, seed, s), encoding="utf-8")
    except OSError as exc:
        raise ReportWriteError(path=str(target), reason=str(exc)) from exc
    logger.info("[graph_io] Grafo %s gravado em %s", graph.kind, target)
    return target


def _parse_header(line: str, line_number: int) -> tuple[str, dict[str, int]]:
    tokens = line.split()
    kind = tokens[0].lower() if tokens else ""
    if kind not in (TurboGraph.kind, LdpcGraph.kind):
        raise GraphFormatError(f"cabeçalho deve começar com 'turbo' ou 'ldpc', obtido {kind!r}", line_number=line_number)
    fields: dict[str, int] = {}
    for token in tokens[1:]:
        key, sep, raw = token.partition("=")
        if not sep:
            raise GraphFormatError(f"campo sem '=': {token!r}", line_number=line_number)
        try:
            fields[key.lower()] = int(raw)
        except ValueError:
            raise GraphFormatError(f"valor não inteiro em {token!r}", line_number=line_number) from None
    expected = _TURBO_KEYS if kind == TurboGraph.kind else _LDPC_KEYS
    missing = [key for key in expected if key not in fields]
    if missing:
        raise GraphFormatError(f"campos ausentes no cabeçalho: {', '.join(missing)}", line_number=line_number)
    unknown = sorted(set(fields) - set(expected))
    if unknown:
        raise GraphFormatError(f"campos desconhecidos no cabeçalho: {', '.join(unknown)}", line_number=line_number)
    return kind, fields


def _parse_int(token: str, line_number: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphFormatError(f"inteiro esperado, obtido {token!r}", line_number=line_number) from None


def parse_graph(text: str) -> tuple[IndexedGraph, GraphHeader]:
    numbered = [(number, line.strip()) for number, line in enumerate(text.splitlines(), start=1)]
    numbered = [(number, line) for number, line in numbered if line]
    if not numbered:
        raise GraphFormatError("arquivo vazio", line_number=1)

    header_number, header_line = numbered[0]
    kind, fields = _parse_header(header_line, header_number)
    body = numbered[1:]

    if kind == TurboGraph.kind:
        values = [_parse_int(token, number) for number, line in body for token in line.split()]
        if len(values) != fields["n"]:
            last_line = body[-1][0] if body else header_number
            raise GraphFormatError(
                f"esperados {fields['n']} valores de permutação, encontrados {len(values)}",
                line_number=last_line,
            )
        try:
            graph: IndexedGraph = TurboGraph(perm=Permutation(n=fields["n"], map=tuple(values)))
        except InvalidParameterError as exc:
            raise GraphFormatError(str(exc), line_number=body[0][0] if body else header_number) from exc
        header = GraphHeader(kind=kind, n=fields["n"], seed=fields["seed"], s=fields["s"])
        return graph, header

    edges: list[tuple[int, int]] = []
    for number, line in body:
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"linha de aresta deve ter 2 inteiros, tem {len(tokens)}", line_number=number)
        edges.append((_parse_int(tokens[0], number), _parse_int(tokens[1], number)))
    try:
        graph = LdpcGraph(n=fields["n"], w=fields["w"], d_v=fields["dv"], d_c=fields["dc"], edges=tuple(edges))
    except InvalidParameterError as exc:
        raise GraphFormatError(str(exc), line_number=header_number) from exc
    header = GraphHeader(
        kind=kind,
        n=fields["n"],
        seed=fields["seed"],
        w=fields["w"],
        d_v=fields["dv"],
        d_c=fields["dc"],
    )
    return graph, header


def read_graph(path: str | Path) -> tuple[IndexedGraph, GraphHeader]:
    source = Path(path)
    try:
        raw = source.read_bytes()
    except OSError as exc:
        raise InvalidParameterError(f"Não foi possível ler {source}: {exc}", parameter="path", value=str(source)) from exc
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        line_number = raw.count(b"\n", 0, exc.start) + 1
        raise GraphFormatError("conteúdo não é UTF-8 válido", line_number=line_number) from exc
    graph, header = parse_graph(text)
    logger.debug("[graph_io] Grafo %s lido de %s (%s nós)", graph.kind, source, graph.node_count)
    return graph, header


__all__ = ["GraphHeader", "format_graph", "parse_graph", "read_graph", "write_graph"]
