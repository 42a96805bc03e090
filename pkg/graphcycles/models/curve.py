from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from ..services.errors import InvalidParameterError

_MONOTONE_SLACK = 1e-12


class CurveVariant:
    TURBO = "turbo"
    TURBO_WITH_U = "turbo-with-U"
    TURBO_CLOSED_FORM = "turbo-closed-form"
    LDPC = "ldpc"

    ALL = (TURBO, TURBO_WITH_U, TURBO_CLOSED_FORM, LDPC)

    _ALIASES = {
        "turbo": TURBO,
        "turbo-random": TURBO,
        "turbo-with-u": TURBO_WITH_U,
        "turbo-u": TURBO_WITH_U,
        "turbo-closed-form": TURBO_CLOSED_FORM,
        "closed-form": TURBO_CLOSED_FORM,
        "ldpc": LDPC,
    }

    @classmethod
    def normalize(cls, value: str) -> str:
        key = (value or "").strip().lower()
        if key not in cls._ALIASES:
            raise InvalidParameterError(
                f"Variante desconhecida: {value!r} (use {', '.join(cls.ALL)})",
                parameter="variant",
                value=value,
            )
        return cls._ALIASES[key]


@dataclass(frozen=True)
class EmbedBounds:
    """Lower/upper bounds on the probability of embedding one picture."""

    lower: float
    upper: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.lower <= self.upper <= 1.0:
            raise RuntimeError(f"Limites inconsistentes: lower={self.lower} upper={self.upper}")

    @property
    def mean(self) -> float:
        return (self.lower + self.upper) / 2.0

    @property
    def ratio(self) -> float:
        return self.upper / self.lower if self.lower > 0 else float("inf")


@dataclass
class TheoryCurve:
    """P(no cycle of length <= k) for every k of an inclusive range."""

    n: int
    k_min: int
    k_max: int
    variant: str
    values: dict[int, float] = field(default_factory=dict)
    d_v: int | None = None
    d_c: int | None = None

    def __post_init__(self) -> None:
        previous = 1.0
        for k in self.k_range:
            if k not in self.values:
                raise InvalidParameterError(f"Curva sem valor para k={k}", parameter="values", value=k)
            value = self.values[k]
            if not 0.0 <= value <= 1.0:
                raise InvalidParameterError(f"Probabilidade fora de [0,1] em k={k}: {value}", parameter="values")
            if value > previous + _MONOTONE_SLACK:
                raise InvalidParameterError(f"Curva crescente em k={k}", parameter="values")
            previous = value

    @property
    def k_range(self) -> range:
        return range(self.k_min, self.k_max + 1)

    def __getitem__(self, k: int) -> float:
        return self.values[k]

    def rows(self) -> Iterator[tuple[int, float]]:
        for k in self.k_range:
            yield k, self.values[k]
