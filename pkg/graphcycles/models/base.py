from __future__ import annotations

import operator

import networkx as nx

from ..services.errors import InvalidParameterError

NodeId = tuple[int, int]
WeightedAdjacency = tuple[tuple[tuple[int, int], ...], ...]


def format_node(node: NodeId) -> str:
    side, index = node
    return f"{side}:{index}"


def parse_node(text: str) -> NodeId:
    side_part, sep, index_part = text.strip().partition(":")
    try:
        if not sep:
            raise ValueError(text)
        return int(side_part), int(index_part)
    except ValueError:
        raise InvalidParameterError(
            f"Identificador de nó inválido: {text!r} (esperado '<lado>:<índice>')",
            parameter="node",
            value=text,
        ) from None


class IndexedGraph:
    """Two-sided node numbering shared by turbo and LDPC graphs.

    Nodes are ``(side, index)`` pairs. Side 0 occupies dense indices
    ``0..size0-1`` and side 1 follows, so every node also has a flat index
    used by the cycle search.
    """

    kind = "graph"

    def side_sizes(self) -> tuple[int, int]:
        raise NotImplementedError

    def _build_adjacency(self, include_u: bool) -> WeightedAdjacency:
        raise NotImplementedError

    @property
    def node_count(self) -> int:
        first, second = self.side_sizes()
        return first + second

    def node_ids(self) -> list[NodeId]:
        first, second = self.side_sizes()
        return [(0, i) for i in range(first)] + [(1, j) for j in range(second)]

    def has_node(self, node: NodeId) -> bool:
        try:
            side, index = (operator.index(part) for part in node)
        except (TypeError, ValueError):
            return False
        sizes = self.side_sizes()
        return side in (0, 1) and 0 <= index < sizes[side]

    def index_of(self, node: NodeId) -> int:
        if not self.has_node(node):
            raise InvalidParameterError(
                f"Nó {node!r} não existe no grafo {self.kind}",
                parameter="node",
                value=node,
            )
        side, index = (operator.index(part) for part in node)
        return index if side == 0 else self.side_sizes()[0] + index

    def node_at(self, flat_index: int) -> NodeId:
        first = self.side_sizes()[0]
        if flat_index < first:
            return (0, flat_index)
        return (1, flat_index - first)

    def weighted_adjacency(self, include_u: bool = False) -> WeightedAdjacency:
        """Flat-index adjacency as ``(neighbor, edge_length)`` pairs.

        ``include_u`` is only meaningful for turbo graphs, where it counts
        every cross edge as two edges.
        """

        cache = self.__dict__.setdefault("_adjacency_cache", {})
        key = bool(include_u)
        if key not in cache:
            cache[key] = self._build_adjacency(key)
        return cache[key]

    def neighbors(self, node: NodeId) -> list[NodeId]:
        adjacency = self.weighted_adjacency()
        return [self.node_at(other) for other, _ in adjacency[self.index_of(node)]]

    def degree(self, node: NodeId) -> int:
        return len(self.weighted_adjacency()[self.index_of(node)])

    def degree_sequence(self) -> list[int]:
        return [len(entries) for entries in self.weighted_adjacency()]

    def undirected_edges(self) -> list[tuple[NodeId, NodeId]]:
        edges: list[tuple[NodeId, NodeId]] = []
        for index, entries in enumerate(self.weighted_adjacency()):
            for other, _ in entries:
                if index < other:
                    edges.append((self.node_at(index), self.node_at(other)))
        return edges

    def to_networkx(self, include_u: bool = False) -> nx.Graph:
        graph = nx.Graph()
        for node in self.node_ids():
            graph.add_node(node, side=node[0])
        adjacency = self.weighted_adjacency(include_u)
        for index, entries in enumerate(adjacency):
            for other, weight in entries:
                if index < other:
                    graph.add_edge(self.node_at(index), self.node_at(other), weight=weight)
        return graph
