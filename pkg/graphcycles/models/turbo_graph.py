from __future__ import annotations

from dataclasses import dataclass

from .base import IndexedGraph, NodeId, WeightedAdjacency
from .permutation import Permutation

CHAIN_EDGE_LENGTH = 1
CROSS_EDGE_LENGTH_WITH_U = 2


@dataclass(frozen=True, eq=True)
class TurboGraph(IndexedGraph):
    """Two directed chains of ``n`` nodes tied together by an interleaver.

    Top chain nodes are ``(0, i)``, bottom chain nodes ``(1, i)``; the chain
    edges point from ``i`` to ``i + 1`` and the cross edge joins ``(0, i)``
    with ``(1, perm(i))``.
    """

    perm: Permutation

    kind = "turbo"

    @property
    def n(self) -> int:
        return self.perm.n

    def side_sizes(self) -> tuple[int, int]:
        return self.n, self.n

    def chain_edges(self) -> list[tuple[NodeId, NodeId]]:
        return [((side, i), (side, i + 1)) for side in (0, 1) for i in range(self.n - 1)]

    def cross_edges(self) -> list[tuple[NodeId, NodeId]]:
        return [((0, i), (1, self.perm.map[i])) for i in range(self.n)]

    def partner(self, node: NodeId) -> NodeId:
        flat = self.index_of(node)
        for other, _ in self.weighted_adjacency()[flat]:
            candidate = self.node_at(other)
            if candidate[0] != node[0]:
                return candidate
        raise RuntimeError(f"Nó {node!r} sem aresta cruzada")

    def _build_adjacency(self, include_u: bool) -> WeightedAdjacency:
        n = self.n
        cross_length = CROSS_EDGE_LENGTH_WITH_U if include_u else CHAIN_EDGE_LENGTH
        adjacency: list[tuple[tuple[int, int], ...]] = []
        inverse = self.perm.inverse().map
        for side in (0, 1):
            offset = side * n
            for i in range(n):
                entries: list[tuple[int, int]] = []
                if i > 0:
                    entries.append((offset + i - 1, CHAIN_EDGE_LENGTH))
                if i < n - 1:
                    entries.append((offset + i + 1, CHAIN_EDGE_LENGTH))
                if side == 0:
                    entries.append((n + self.perm.map[i], cross_length))
                else:
                    entries.append((inverse[i], cross_length))
                adjacency.append(tuple(entries))
        return tuple(adjacency)
