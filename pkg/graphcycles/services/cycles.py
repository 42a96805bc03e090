"""Bounded-length simple cycle counting through a start node.

The search is a depth-first walk over the undirected graph with a visited
mask. Every simple cycle through the start node is reached twice, once per
direction; only the traversal whose second vertex has a smaller flat index
than its last vertex is counted. Edge lengths come from
``IndexedGraph.weighted_adjacency`` so the U-node variant reuses the same
search with cross edges of length 2.
"""

from __future__ import annotations

import heapq
import logging
import operator
import time
from typing import Iterable

from ..models import CycleCensus, IndexedGraph, NodeId, TurboGraph
from .errors import InvalidParameterError, require

logger = logging.getLogger(__name__)

MIN_K_MAX = 3


def _check_k_max(k_max: int) -> int:
    try:
        k_max = operator.index(k_max)
    except TypeError:
        raise InvalidParameterError("k_max deve ser inteiro", parameter="k_max", value=k_max) from None
    require(k_max >= MIN_K_MAX, f"k_max deve ser >= {MIN_K_MAX}", parameter="k_max", value=k_max)
    return k_max


def _ball(adjacency, start: int, radius: int) -> dict[int, int]:
    """Weighted distances from ``start`` for every node within ``radius``."""

    distances = {start: 0}
    frontier = [(0, start)]
    while frontier:
        distance, node = heapq.heappop(frontier)
        if distance > distances.get(node, distance):
            continue
        for other, weight in adjacency[node]:
            candidate = distance + weight
            if candidate <= radius and candidate < distances.get(other, radius + 1):
                distances[other] = candidate
                heapq.heappush(frontier, (candidate, other))
    return distances


def _walk(graph: IndexedGraph, node: NodeId, k_max: int, include_u: bool) -> tuple[list[int], list[int]]:
    adjacency = graph.weighted_adjacency(include_u)
    start = graph.index_of(node)
    k_max = _check_k_max(k_max)
    # any vertex of a cycle of length <= k_max lies within k_max // 2 of the start
    distances = _ball(adjacency, start, k_max // 2)
    raw = [0] * (k_max + 1)
    canonical = [0] * (k_max + 1)
    visited = bytearray(len(adjacency))
    visited[start] = 1

    def extend(current: int, length: int, depth: int, second: int) -> None:
        for other, weight in adjacency[current]:
            total = length + weight
            if total > k_max:
                continue
            if other == start:
                if depth >= 2:
                    raw[total] += 1
                    if second < current:
                        canonical[total] += 1
                continue
            if visited[other]:
                continue
            back = distances.get(other)
            if back is None or total + back > k_max:
                continue
            visited[other] = 1
            extend(other, total, depth + 1, other if depth == 0 else second)
            visited[other] = 0

    extend(start, 0, 0, -1)

    for k in range(k_max + 1):
        if raw[k] != 2 * canonical[k]:
            raise RuntimeError(
                f"Contagem inconsistente em k={k}: {raw[k]} percursos para {canonical[k]} ciclos"
            )
    return raw, canonical


def _nonzero(counts: list[int]) -> dict[int, int]:
    return {k: count for k, count in enumerate(counts) if count}


def count_traversals_at_node(
    graph: IndexedGraph, node: NodeId, k_max: int, include_u: bool = False
) -> dict[int, int]:
    """Directed closed walks found by the search; always twice the cycle count."""

    raw, _ = _walk(graph, node, k_max, include_u)
    return _nonzero(raw)


def count_cycles_at_node(
    graph: IndexedGraph, node: NodeId, k_max: int, include_u: bool = False
) -> dict[int, int]:
    """Number of distinct simple cycles of each length ``<= k_max`` through ``node``.

    Lengths with no cycle are omitted from the result.
    """

    _, canonical = _walk(graph, node, k_max, include_u)
    return _nonzero(canonical)


def count_cycles_with_u_nodes(graph: TurboGraph, node: NodeId, k_max: int) -> dict[int, int]:
    if not isinstance(graph, TurboGraph):
        raise InvalidParameterError("Contagem com nós U exige grafo turbo", parameter="graph", value=graph.kind)
    return count_cycles_at_node(graph, node, k_max, include_u=True)


def min_cycle_length_at_node(
    graph: IndexedGraph, node: NodeId, k_max: int, include_u: bool = False
) -> int | None:
    counts = count_cycles_at_node(graph, node, k_max, include_u)
    return min(counts) if counts else None


def census(
    graph: IndexedGraph,
    node_sample: Iterable[NodeId],
    k_max: int,
    include_u: bool = False,
) -> CycleCensus:
    nodes = [tuple(node) for node in node_sample]
    require(bool(nodes), "amostra de nós vazia", parameter="node_sample")
    require(len(set(nodes)) == len(nodes), "amostra de nós com repetições", parameter="node_sample")
    if include_u and not isinstance(graph, TurboGraph):
        raise InvalidParameterError("include_u só se aplica a grafos turbo", parameter="include_u", value=True)
    k_max = _check_k_max(k_max)
    for node in nodes:
        graph.index_of(node)

    started = time.perf_counter()
    per_node: dict[NodeId, dict[int, int]] = {}
    for node in sorted(nodes):
        per_node[node] = count_cycles_at_node(graph, node, k_max, include_u)
    logger.debug(
        "[census] %s nós em grafo %s (k_max=%s, include_u=%s) em %.3fs",
        len(nodes),
        graph.kind,
        k_max,
        include_u,
        time.perf_counter() - started,
    )
    return CycleCensus(k_max=k_max, per_node=per_node, node_sample=sorted(nodes), include_u=include_u)


def _canonical_cycle(path: tuple[int, ...]) -> tuple[int, ...]:
    pivot = path.index(min(path))
    rotated = path[pivot:] + path[:pivot]
    mirrored = (rotated[0],) + tuple(reversed(rotated[1:]))
    return min(rotated, mirrored)


def enumerate_all_cycles(
    graph: IndexedGraph, k_max: int, include_u: bool = False
) -> dict[tuple[NodeId, ...], int]:
    """Every simple cycle of the graph with length ``<= k_max``, mapped to its length.

    Brute force: closed walks without repeated vertices are collected from
    each vertex through larger vertices only, then deduplicated by canonical
    form (rotation to the smallest vertex, then the smaller of the two
    directions). Meant for small graphs only.
    """

    k_max = _check_k_max(k_max)
    adjacency = graph.weighted_adjacency(include_u)
    found: dict[tuple[int, ...], int] = {}
    for start in range(len(adjacency)):
        stack: list[tuple[int, tuple[int, ...], int]] = [(start, (start,), 0)]
        while stack:
            current, path, length = stack.pop()
            for other, weight in adjacency[current]:
                total = length + weight
                if total > k_max:
                    continue
                if other == start:
                    if len(path) >= 3:
                        found[_canonical_cycle(path)] = total
                elif other > start and other not in path:
                    stack.append((other, path + (other,), total))
    return {tuple(graph.node_at(index) for index in cycle): length for cycle, length in found.items()}


def brute_force_counts_at_node(
    graph: IndexedGraph, node: NodeId, k_max: int, include_u: bool = False
) -> dict[int, int]:
    graph.index_of(node)
    node = tuple(node)
    counts: dict[int, int] = {}
    for cycle, length in enumerate_all_cycles(graph, k_max, include_u).items():
        if node in cycle:
            counts[length] = counts.get(length, 0) + 1
    return dict(sorted(counts.items()))


__all__ = [
    "brute_force_counts_at_node",
    "census",
    "count_cycles_at_node",
    "count_cycles_with_u_nodes",
    "count_traversals_at_node",
    "enumerate_all_cycles",
    "min_cycle_length_at_node",
]
