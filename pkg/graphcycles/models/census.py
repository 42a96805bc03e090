from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .base import NodeId, format_node


@dataclass
class CycleCensus:
    """Exact-length simple cycle counts at each sampled start node."""

    k_max: int
    per_node: dict[NodeId, dict[int, int]]
    node_sample: list[NodeId] = field(default_factory=list)
    include_u: bool = False

    def counts(self, node: NodeId) -> dict[int, int]:
        return self.per_node[node]

    def min_cycle_length(self, node: NodeId) -> int | None:
        lengths = [k for k, count in self.per_node[node].items() if count > 0]
        return min(lengths) if lengths else None

    def has_cycle_leq(self, node: NodeId, k: int) -> bool:
        shortest = self.min_cycle_length(node)
        return shortest is not None and shortest <= k

    @property
    def sample_size(self) -> int:
        return len(self.per_node)

    def frac_no_cycle_leq(self, k: int) -> float:
        if not self.per_node:
            return 1.0
        clear = sum(1 for node in self.per_node if not self.has_cycle_leq(node, k))
        return clear / len(self.per_node)

    def totals(self) -> dict[int, int]:
        summed: dict[int, int] = {}
        for counts in self.per_node.values():
            for k, count in counts.items():
                summed[k] = summed.get(k, 0) + count
        return dict(sorted(summed.items()))

    def rows(self) -> Iterator[tuple[str, int, int]]:
        """``node_id,k,count`` rows, nodes in sorted order and zero counts omitted."""

        for node in sorted(self.per_node):
            for k, count in sorted(self.per_node[node].items()):
                if count:
                    yield format_node(node), k, count

    def summary_rows(self, k_min: int = 1) -> Iterator[tuple[int, float, int]]:
        for k in range(k_min, self.k_max + 1):
            yield k, self.frac_no_cycle_leq(k), self.sample_size
