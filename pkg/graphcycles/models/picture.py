from __future__ import annotations

from dataclasses import dataclass

from ..services.errors import InvalidParameterError


class EdgeLabel:
    FORWARD = "F"
    BACKWARD = "B"
    CROSS = "X"

    ALL = (FORWARD, BACKWARD, CROSS)


_FLIP = {EdgeLabel.FORWARD: EdgeLabel.BACKWARD, EdgeLabel.BACKWARD: EdgeLabel.FORWARD, EdgeLabel.CROSS: EdgeLabel.CROSS}


@dataclass(frozen=True, order=True)
class Picture:
    """Cycle template read clockwise from the distinguished vertex (position 0)."""

    edges: tuple[str, ...]

    @classmethod
    def from_label(cls, label: str) -> "Picture":
        return cls(edges=tuple(label.strip().upper()))

    @property
    def k(self) -> int:
        return len(self.edges)

    @property
    def cross_count(self) -> int:
        return sum(1 for edge in self.edges if edge == EdgeLabel.CROSS)

    @property
    def label(self) -> str:
        return "".join(self.edges)

    def reversed(self) -> "Picture":
        """Same cycle traversed counter-clockwise from the distinguished vertex."""

        return Picture(edges=tuple(_FLIP[edge] for edge in reversed(self.edges)))

    def canonical(self) -> "Picture":
        return min(self, self.reversed())

    def violations(self) -> list[str]:
        problems: list[str] = []
        if any(edge not in EdgeLabel.ALL for edge in self.edges):
            problems.append("rótulo desconhecido")
            return problems
        if self.k < 4:
            problems.append("comprimento menor que 4")
        m = self.cross_count
        if m == 0 or m % 2:
            problems.append("número de arestas cruzadas deve ser par e positivo")
        for position, edge in enumerate(self.edges):
            following = self.edges[(position + 1) % self.k]
            if edge == EdgeLabel.CROSS and following == EdgeLabel.CROSS:
                problems.append(f"arestas cruzadas adjacentes na posição {position}")
            elif EdgeLabel.CROSS not in (edge, following) and edge != following:
                problems.append(f"segmento com direções opostas na posição {position}")
        return problems

    def validate(self) -> "Picture":
        problems = self.violations()
        if problems:
            raise InvalidParameterError(
                f"Figura {self.label!r} inválida: {'; '.join(problems)}",
                parameter="picture",
                value=self.label,
            )
        return self

    def __str__(self) -> str:
        return self.label
