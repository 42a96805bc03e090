"""Seeded construction of interleavers, turbo graphs and regular LDPC graphs.

All randomness comes from numpy's PCG64 generator (``numpy.random.default_rng``),
so a ``(parameters, seed)`` pair always reproduces the same graph.
"""

from __future__ import annotations

import logging
import math
import operator

import numpy as np

from ..models import LdpcGraph, Permutation, TurboGraph
from ..models.experiment import MAX_SEED
from .errors import ConstructionError, InvalidParameterError, require

logger = logging.getLogger(__name__)

DEFAULT_MAX_REJECTIONS = 1000
_CANDIDATE_BATCH = 64
_SAMPLING_STREAM = 1


def _as_int(value: object, parameter: str) -> int:
    try:
        return operator.index(value)  # type: ignore[arg-type]
    except TypeError:
        raise InvalidParameterError(f"{parameter} deve ser inteiro", parameter=parameter, value=value) from None


def _check_seed(seed: int) -> int:
    seed = _as_int(seed, "seed")
    require(0 <= seed <= MAX_SEED, f"seed fora de 0..2^64-1: {seed}", parameter="seed", value=seed)
    return seed


def graph_rng(seed: int) -> np.random.Generator:
    """Generator used to build a graph from ``seed``."""

    return np.random.default_rng(_check_seed(seed))


def sampling_rng(seed: int) -> np.random.Generator:
    """Independent stream, derived from the same seed, used to pick start nodes."""

    return np.random.default_rng([_check_seed(seed), _SAMPLING_STREAM])


def gen_random_permutation(n: int, seed: int) -> Permutation:
    n = _as_int(n, "n")
    require(n >= 1, "n deve ser >= 1", parameter="n", value=n)
    rng = graph_rng(seed)
    values = rng.permutation(n)
    return Permutation.from_values(values.tolist())


def s_random_feasible_hint(n: int, s: int) -> bool:
    """Whether ``S < sqrt(n / 2)``, the range where greedy construction is practical.

    Single attempts still fail often near the bound (about 1% succeed at
    ``S / sqrt(n / 2) = 0.63``), so expect hundreds of restarts there.
    """

    return s < math.sqrt(n / 2)


def _try_s_random(n: int, s: int, rng: np.random.Generator, max_rejections: int) -> np.ndarray | None:
    pool = np.arange(n, dtype=np.int64)
    size = n
    placed = np.empty(n, dtype=np.int64)
    for i in range(n):
        window = placed[max(0, i - s):i]
        rejections = 0
        while True:
            draws = rng.integers(0, size, size=_CANDIDATE_BATCH)
            candidates = pool[draws]
            if window.size:
                valid = np.all(np.abs(candidates[:, None] - window[None, :]) >= s, axis=1)
                hits = np.flatnonzero(valid)
            else:
                hits = np.zeros(1, dtype=np.int64)
            if hits.size:
                first = int(hits[0])
                rejections += first
                if rejections > max_rejections:
                    return None
                chosen = int(draws[first])
                placed[i] = pool[chosen]
                size -= 1
                pool[chosen] = pool[size]
                break
            rejections += _CANDIDATE_BATCH
            if rejections > max_rejections:
                return None
    return placed


def gen_s_random_permutation(
    n: int,
    s: int,
    seed: int,
    max_restarts: int,
    max_rejections: int = DEFAULT_MAX_REJECTIONS,
) -> Permutation:
    """Greedy S-random interleaver.

    Position ``i`` draws candidates uniformly from the unused values and
    keeps the first one at distance >= S from the values placed at the S
    previous positions. After ``max_rejections`` consecutive rejections the
    whole construction restarts; ``max_restarts`` bounds the restarts.
    """

    n = _as_int(n, "n")
    s = _as_int(s, "S")
    require(n >= 1, "n deve ser >= 1", parameter="n", value=n)
    require(s >= 1, "S deve ser >= 1", parameter="S", value=s)
    require(max_restarts >= 1, "max_restarts deve ser >= 1", parameter="max_restarts", value=max_restarts)
    require(max_rejections >= 1, "max_rejections deve ser >= 1", parameter="max_rejections", value=max_rejections)
    if not s_random_feasible_hint(n, s):
        logger.warning("[generators] S=%s >= sqrt(n/2) para n=%s; a construção gulosa pode falhar", s, n)

    rng = graph_rng(seed)
    for attempt in range(1, max_restarts + 1):
        placed = _try_s_random(n, s, rng, max_rejections)
        if placed is None:
            logger.debug("[generators] S-random n=%s S=%s: reinício %s", n, s, attempt)
            continue
        perm = Permutation.from_values(placed.tolist())
        if not verify_s_property(perm, s):
            raise RuntimeError("Permutação S-random construída viola a restrição S")
        logger.info("[generators] S-random n=%s S=%s construída em %s tentativa(s)", n, s, attempt)
        return perm

    raise ConstructionError(
        construction=f"permutação S-random (n={n}, S={s})",
        attempts=max_restarts,
    )


def verify_s_property(perm: Permutation, s: int) -> bool:
    """True iff ``|i - j| <= S`` implies ``|f(i) - f(j)| >= S`` for all ``i != j``."""

    s = _as_int(s, "S")
    require(s >= 1, "S deve ser >= 1", parameter="S", value=s)
    values = np.asarray(perm.map, dtype=np.int64)
    for distance in range(1, min(s, perm.n - 1) + 1):
        if np.any(np.abs(values[distance:] - values[:-distance]) < s):
            return False
    return True


def build_turbo_graph(perm: Permutation) -> TurboGraph:
    return TurboGraph(perm=perm)


def build_ldpc_graph(n: int, d_v: int, d_c: int, seed: int, max_restarts: int) -> LdpcGraph:
    """Regular random LDPC graph from the configuration model.

    Variable sockets are matched against a random permutation of the check
    sockets; any parallel edge discards the whole matching.
    """

    n = _as_int(n, "n")
    d_v = _as_int(d_v, "d_v")
    d_c = _as_int(d_c, "d_c")
    require(n >= 1 and d_v >= 1 and d_c >= 1, "n, d_v e d_c devem ser >= 1", parameter="ldpc")
    require((n * d_v) % d_c == 0, f"d_c={d_c} não divide n·d_v={n * d_v}", parameter="d_c", value=d_c)
    require(max_restarts >= 1, "max_restarts deve ser >= 1", parameter="max_restarts", value=max_restarts)
    w = n * d_v // d_c
    require(d_c <= n, f"d_c={d_c} > n={n}: nenhum grafo simples existe", parameter="d_c", value=d_c)
    require(d_v <= w, f"d_v={d_v} > w={w}: nenhum grafo simples existe", parameter="d_v", value=d_v)

    rng = graph_rng(seed)
    variable_sockets = np.repeat(np.arange(n, dtype=np.int64), d_v)
    check_sockets = np.repeat(np.arange(w, dtype=np.int64), d_c)
    for attempt in range(1, max_restarts + 1):
        matched = check_sockets[rng.permutation(check_sockets.size)]
        keys = variable_sockets * w + matched
        if np.unique(keys).size != keys.size:
            logger.debug("[generators] LDPC n=%s: aresta paralela na tentativa %s", n, attempt)
            continue
        edges = tuple(sorted(zip(variable_sockets.tolist(), matched.tolist())))
        logger.info("[generators] LDPC n=%s w=%s dv=%s dc=%s construído em %s tentativa(s)", n, w, d_v, d_c, attempt)
        return LdpcGraph(n=n, w=w, d_v=d_v, d_c=d_c, edges=edges)

    raise ConstructionError(
        construction=f"grafo LDPC (n={n}, dv={d_v}, dc={d_c})",
        attempts=max_restarts,
        detail="todas as tentativas geraram arestas paralelas",
    )


def sample_nodes(graph, count: int, seed: int) -> list[tuple[int, int]]:
    """``count`` distinct start nodes drawn uniformly without replacement."""

    count = _as_int(count, "count")
    total = graph.node_count
    require(1 <= count <= total, f"amostra de {count} nós em grafo com {total}", parameter="count", value=count)
    picks = sampling_rng(seed).choice(total, size=count, replace=False)
    return [graph.node_at(int(index)) for index in picks]
