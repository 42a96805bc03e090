from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ..services.errors import InvalidParameterError
from .base import IndexedGraph, WeightedAdjacency


@dataclass(frozen=True, eq=True)
class LdpcGraph(IndexedGraph):
    """Regular bipartite graph: variable nodes ``(0, v)``, check nodes ``(1, c)``."""

    n: int
    w: int
    d_v: int
    d_c: int
    edges: tuple[tuple[int, int], ...]

    kind = "ldpc"

    def __post_init__(self) -> None:
        if self.n < 1 or self.w < 1 or self.d_v < 1 or self.d_c < 1:
            raise InvalidParameterError("n, w, d_v e d_c devem ser positivos", parameter="ldpc")
        if self.n * self.d_v != self.w * self.d_c:
            raise InvalidParameterError(
                f"n·d_v={self.n * self.d_v} difere de w·d_c={self.w * self.d_c}",
                parameter="w",
                value=self.w,
            )
        if len(set(self.edges)) != len(self.edges):
            raise InvalidParameterError("Arestas paralelas não são permitidas", parameter="edges")
        variable_degrees: Counter[int] = Counter()
        check_degrees: Counter[int] = Counter()
        for variable, check in self.edges:
            if not 0 <= variable < self.n or not 0 <= check < self.w:
                raise InvalidParameterError(
                    f"Aresta ({variable}, {check}) fora dos limites",
                    parameter="edges",
                    value=(variable, check),
                )
            variable_degrees[variable] += 1
            check_degrees[check] += 1
        if any(variable_degrees[v] != self.d_v for v in range(self.n)):
            raise InvalidParameterError(f"Nó variável com grau diferente de {self.d_v}", parameter="edges")
        if any(check_degrees[c] != self.d_c for c in range(self.w)):
            raise InvalidParameterError(f"Nó de checagem com grau diferente de {self.d_c}", parameter="edges")

    def side_sizes(self) -> tuple[int, int]:
        return self.n, self.w

    def _build_adjacency(self, include_u: bool) -> WeightedAdjacency:
        buckets: list[list[tuple[int, int]]] = [[] for _ in range(self.n + self.w)]
        for variable, check in self.edges:
            buckets[variable].append((self.n + check, 1))
            buckets[self.n + check].append((variable, 1))
        return tuple(tuple(sorted(entries)) for entries in buckets)
