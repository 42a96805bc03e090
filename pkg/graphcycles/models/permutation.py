from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..services.errors import InvalidParameterError


@dataclass(frozen=True)
class Permutation:
    """Interleaver connecting position ``i`` of the top chain to ``map[i]`` below."""

    n: int
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidParameterError("n deve ser positivo", parameter="n", value=self.n)
        if len(self.map) != self.n:
            raise InvalidParameterError(
                f"Permutação com {len(self.map)} valores para n={self.n}",
                parameter="map",
            )
        seen = bytearray(self.n)
        for value in self.map:
            if not 0 <= value < self.n or seen[value]:
                raise InvalidParameterError(
                    f"Valor {value} repetido ou fora de 0..{self.n - 1}",
                    parameter="map",
                    value=value,
                )
            seen[value] = 1

    @classmethod
    def from_values(cls, values: Sequence[int]) -> "Permutation":
        return cls(n=len(values), map=tuple(int(value) for value in values))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(n=n, map=tuple(range(n)))

    @classmethod
    def reversal(cls, n: int) -> "Permutation":
        return cls(n=n, map=tuple(n - 1 - i for i in range(n)))

    def __call__(self, i: int) -> int:
        return self.map[i]

    def __len__(self) -> int:
        return self.n

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, value in enumerate(self.map):
            inv[value] = i
        return Permutation(n=self.n, map=tuple(inv))
