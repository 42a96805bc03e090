from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..config import Config
from .census import CycleCensus
from .curve import TheoryCurve

MAX_SEED = 2**64 - 1
DEFAULT_LDPC_DEGREES = (3, 5)
DEFAULT_DESK_S = 20
DEFAULT_FULL_S = 100


class GraphFamily:
    TURBO_RANDOM = "turbo-random"
    TURBO_SRANDOM = "turbo-srandom"
    LDPC = "ldpc"

    ALL = (TURBO_RANDOM, TURBO_SRANDOM, LDPC)


_FAMILY_ALIASES = {"turbo": GraphFamily.TURBO_RANDOM, "random": GraphFamily.TURBO_RANDOM, "srandom": GraphFamily.TURBO_SRANDOM}


def normalize_family(value: Any) -> str:
    if not isinstance(value, str):
        raise ValueError("família deve ser texto")
    normalized = value.strip().lower()
    normalized = _FAMILY_ALIASES.get(normalized, normalized)
    if normalized not in GraphFamily.ALL:
        raise ValueError(f"família desconhecida: {value!r}")
    return normalized


class ExperimentConfig(BaseModel):
    """Validated experiment description (flat ``key=value`` file or CLI flags)."""

    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True, str_strip_whitespace=True)

    family: str = Field(default=GraphFamily.TURBO_RANDOM)
    n: int = Field(..., ge=1)
    s: int | None = Field(default=None, ge=1)
    d_v: int | None = Field(default=None, ge=1, alias="dv")
    d_c: int | None = Field(default=None, ge=1, alias="dc")
    graphs: int = Field(default=1, ge=1)
    nodes_per_graph: int = Field(default=1, ge=1, alias="nodes")
    k_max: int = Field(default=14, ge=4, le=64, alias="kmax")
    base_seed: int = Field(default=1, ge=0, le=MAX_SEED, alias="seed")
    include_u: bool = Field(default=False)
    max_restarts: int = Field(default=10000, ge=1)
    report_path: str | None = Field(default=None, alias="report")
    census_path: str | None = Field(default=None, alias="census")

    @field_validator("family", mode="before")
    @classmethod
    def _normalize_family(cls, value: Any) -> str:
        return normalize_family(value)

    @field_validator("s", "d_v", "d_c", mode="before")
    @classmethod
    def _zero_as_none(cls, value: Any) -> Any:
        if isinstance(value, str):
            value = value.strip()
        if value in ("", "0", 0, None):
            return None
        return value

    @field_validator("report_path", "census_path", mode="before")
    @classmethod
    def _blank_path_as_none(cls, value: Any) -> Any:
        if isinstance(value, str) and not value.strip():
            return None
        return value

    @model_validator(mode="after")
    def _check_family(self) -> "ExperimentConfig":
        if self.family == GraphFamily.TURBO_SRANDOM and self.s is None:
            raise ValueError("turbo-srandom exige s >= 1")
        if self.family == GraphFamily.LDPC:
            if self.d_v is None or self.d_c is None:
                raise ValueError("ldpc exige dv e dc")
            if (self.n * self.d_v) % self.d_c:
                raise ValueError("dc deve dividir n·dv")
            if self.include_u:
                raise ValueError("include_u só se aplica a grafos turbo")
        if self.nodes_per_graph > self.total_nodes:
            raise ValueError(f"nodes={self.nodes_per_graph} excede os {self.total_nodes} nós do grafo")
        return self

    @classmethod
    def desk_scale(cls, family: str = GraphFamily.TURBO_RANDOM, **overrides: Any) -> "ExperimentConfig":
        """Minutes-scale ensemble (n=2000, 50 graphs x 40 nodes, k_max=14 by default)."""

        config = Config()
        return cls._scaled(family, config.DESK_N, config.DESK_GRAPHS, config.DESK_NODES, config.DESK_KMAX, DEFAULT_DESK_S, overrides)

    @classmethod
    def full_scale(cls, family: str = GraphFamily.TURBO_RANDOM, **overrides: Any) -> "ExperimentConfig":
        config = Config()
        n = config.FULL_LDPC_N if normalize_family(family) == GraphFamily.LDPC else config.FULL_N
        return cls._scaled(family, n, config.FULL_GRAPHS, config.FULL_NODES, config.FULL_KMAX, DEFAULT_FULL_S, overrides)

    @classmethod
    def _scaled(
        cls, family: str, n: int, graphs: int, nodes: int, k_max: int, s: int, overrides: dict[str, Any]
    ) -> "ExperimentConfig":
        config = Config()
        payload: dict[str, Any] = {
            "family": family,
            "n": n,
            "graphs": graphs,
            "nodes": nodes,
            "kmax": k_max,
            "seed": config.DEFAULT_SEED,
            "max_restarts": config.MAX_RESTARTS,
        }
        normalized = normalize_family(family)
        if normalized == GraphFamily.TURBO_SRANDOM:
            payload["s"] = s
        elif normalized == GraphFamily.LDPC:
            payload["dv"], payload["dc"] = DEFAULT_LDPC_DEGREES
        payload.update({key: value for key, value in overrides.items() if value is not None})
        return cls.model_validate(payload)

    @property
    def is_turbo(self) -> bool:
        return self.family != GraphFamily.LDPC

    @property
    def w(self) -> int | None:
        if self.family != GraphFamily.LDPC:
            return None
        return self.n * self.d_v // self.d_c  # type: ignore[operator]

    @property
    def total_nodes(self) -> int:
        if self.family == GraphFamily.LDPC:
            return self.n + (self.w or 0)
        return 2 * self.n

    @property
    def sample_size(self) -> int:
        return self.graphs * self.nodes_per_graph

    def graph_seed(self, index: int) -> int:
        """Seed of graph ``index``: ``base_seed + index`` wrapped into 64 bits."""

        return (self.base_seed + index) % (MAX_SEED + 1)

    def echo(self) -> dict[str, Any]:
        payload = {
            "family": self.family,
            "n": self.n,
            "s": self.s,
            "dv": self.d_v,
            "dc": self.d_c,
            "graphs": self.graphs,
            "nodes": self.nodes_per_graph,
            "kmax": self.k_max,
            "seed": self.base_seed,
            "include_u": self.include_u,
        }
        return {key: value for key, value in payload.items() if value is not None}


@dataclass(frozen=True)
class ComparisonRow:
    k: int
    p_sim: float
    p_theory: float
    sigma: float
    sigma_theory: float

    @property
    def diff(self) -> float:
        return self.p_sim - self.p_theory


@dataclass(frozen=True)
class IndependenceRow:
    k: int
    product: float
    joint: float

    @property
    def diff(self) -> float:
        return self.product - self.joint


@dataclass
class SimulationReport:
    """Aggregated outcome of ``run_simulation``.

    ``p_no_cycle_leq`` and ``sigma`` cover k = 4..k_max; ``p_no_cycle_exact``
    holds the marginals P(no cycle of length exactly k) for k = 1..k_max and
    ``joint`` the pairwise joint events keyed by table row (consecutive
    lengths for turbo graphs, lengths 2k and 2k+2 for LDPC graphs).
    """

    config: ExperimentConfig
    sample_size: int
    p_no_cycle_leq: dict[int, float]
    sigma: dict[int, float]
    p_no_cycle_exact: dict[int, float]
    joint: dict[int, float]
    graph_seeds: list[int]
    censuses: list[CycleCensus] = field(default_factory=list)
    theory: TheoryCurve | None = None
    wall_time_sec: float = 0.0

    @property
    def k_values(self) -> list[int]:
        return sorted(self.p_no_cycle_leq)

    @property
    def is_ldpc(self) -> bool:
        return not self.config.is_turbo
