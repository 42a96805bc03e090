"""Exact combinatorics of cycle pictures.

A picture of length ``k`` is read clockwise from its distinguished vertex:
``X`` marks a cross edge, ``F`` / ``B`` a chain edge walked along or against
the chain direction. All counts are exact integers (``math.comb``); the LDPC
count is a ``fractions.Fraction`` because it may be non-integral.
"""

from __future__ import annotations

import itertools
import logging
import math
import operator
from collections import Counter
from fractions import Fraction
from functools import lru_cache

from ..models import EdgeLabel, NodeId, Picture, TurboGraph
from .errors import InvalidParameterError, require

logger = logging.getLogger(__name__)

MAX_PICTURE_LENGTH = 64
MAX_ENUMERATION_LENGTH = 16
MIN_PICTURE_LENGTH = 4


def _int(value: object, parameter: str) -> int:
    try:
        return operator.index(value)  # type: ignore[arg-type]
    except TypeError:
        raise InvalidParameterError(f"{parameter} deve ser inteiro", parameter=parameter, value=value) from None


def binomial(x: int, y: int) -> int:
    """``math.comb`` extended with zero outside ``0 <= y <= x``."""

    if y < 0 or x < 0 or y > x:
        return 0
    return math.comb(x, y)


def path_choices(a: int, b: int) -> int:
    """Ways of picking ``b`` pairwise non-adjacent edges on a path of ``a`` edges."""

    a, b = _int(a, "a"), _int(b, "b")
    require(a >= 0 and b >= 0, "a e b devem ser não negativos", parameter="a", value=(a, b))
    return binomial(a - b + 1, b)


def cycle_choices(a: int, b: int) -> int:
    """Ways of picking ``b`` pairwise non-adjacent edges on a cycle of ``a`` edges."""

    a, b = _int(a, "a"), _int(b, "b")
    require(a >= 3, "cycle_choices exige a >= 3", parameter="a", value=a)
    require(b >= 1, "cycle_choices exige b >= 1", parameter="b", value=b)
    return binomial(a - b - 1, b - 1) + binomial(a - b, b)


def _check_length(k: int, upper: int = MAX_PICTURE_LENGTH) -> int:
    k = _int(k, "k")
    require(MIN_PICTURE_LENGTH <= k <= upper, f"k deve estar em {MIN_PICTURE_LENGTH}..{upper}", parameter="k", value=k)
    return k


def picture_count(k: int, m: int) -> int:
    """Number of pictures of length ``k`` with ``m`` cross edges."""

    k = _check_length(k)
    m = _int(m, "m")
    require(m > 0 and m % 2 == 0, "m deve ser par e positivo", parameter="m", value=m)
    require(2 * m <= k, f"2m={2 * m} excede k={k}", parameter="m", value=m)
    numerator = 2 ** (m - 1) * k * binomial(k - m, m)
    if numerator % (k - m):
        raise RuntimeError(f"N({k},{m}) não inteiro")
    return numerator // (k - m)


def cross_counts(k: int) -> range:
    """Admissible cross-edge counts for length ``k``: even, positive, ``2m <= k``."""

    return range(2, k // 2 + 1, 2)


def total_pictures(k: int) -> int:
    k = _check_length(k)
    return sum(picture_count(k, m) for m in cross_counts(k))


def _cross_positions(k: int, m: int):
    for positions in itertools.combinations(range(k), m):
        if all(positions[i + 1] - positions[i] > 1 for i in range(m - 1)) and not (
            positions[0] == 0 and positions[-1] == k - 1
        ):
            yield positions


def _pictures_with(k: int, m: int, positions: tuple[int, ...]):
    # segment j runs from the edge after cross j to the edge before cross j+1 (cyclically)
    for directions in itertools.product((EdgeLabel.FORWARD, EdgeLabel.BACKWARD), repeat=m):
        edges = [EdgeLabel.CROSS] * k
        for j, start in enumerate(positions):
            stop = positions[(j + 1) % m]
            position = (start + 1) % k
            while position != stop:
                edges[position] = directions[j]
                position = (position + 1) % k
        yield Picture(edges=tuple(edges))


@lru_cache(maxsize=None)
def _enumerate(k: int) -> tuple[Picture, ...]:
    seen: set[Picture] = set()
    for m in cross_counts(k):
        for positions in _cross_positions(k, m):
            for picture in _pictures_with(k, m, positions):
                seen.add(picture.canonical())
    return tuple(sorted(seen))


def enumerate_pictures(k: int) -> list[Picture]:
    """All pictures of length ``k``, one representative per direction class."""

    k = _check_length(k, MAX_ENUMERATION_LENGTH)
    pictures = list(_enumerate(k))
    logger.debug("[pictures] %s figuras de comprimento %s", len(pictures), k)
    return pictures


def pictures_by_cross_count(k: int) -> dict[int, int]:
    counts = Counter(picture.cross_count for picture in enumerate_pictures(k))
    return dict(sorted(counts.items()))


def ldpc_picture_count(m: int, d_v: int, d_c: int) -> Fraction:
    """Pictures of length ``2m`` in a ``(d_v, d_c)``-regular graph: ``(d_c·d_v)^m / 2``."""

    m = _int(m, "m")
    require(m >= 2, "m deve ser >= 2", parameter="m", value=m)
    require(d_v >= 1 and d_c >= 1, "d_v e d_c devem ser positivos", parameter="degree", value=(d_v, d_c))
    count = Fraction(d_c**m * d_v**m, 2)
    if count.denominator != 1:
        logger.warning(
            "[pictures] contagem LDPC não inteira para m=%s dv=%s dc=%s: %s",
            m,
            d_v,
            d_c,
            count,
        )
    return count


def embed_picture(graph: TurboGraph, node: NodeId, picture: Picture) -> bool:
    """Follow the picture's labels from ``node``; True iff they trace a simple cycle."""

    if not isinstance(graph, TurboGraph):
        raise InvalidParameterError("Embutir figuras exige grafo turbo", parameter="graph", value=graph.kind)
    graph.index_of(node)
    start = (int(node[0]), int(node[1]))
    n = graph.n
    current = start
    visited = {start}
    for step, label in enumerate(picture.edges):
        side, index = current
        if label == EdgeLabel.FORWARD:
            if index + 1 >= n:
                return False
            current = (side, index + 1)
        elif label == EdgeLabel.BACKWARD:
            if index == 0:
                return False
            current = (side, index - 1)
        elif label == EdgeLabel.CROSS:
            current = graph.partner(current)
        else:
            raise InvalidParameterError(f"Rótulo desconhecido {label!r}", parameter="picture", value=picture.label)
        if step == picture.k - 1:
            return current == start
        if current in visited:
            return False
        visited.add(current)
    return False


def count_cycles_by_embedding(graph: TurboGraph, node: NodeId, k_max: int) -> dict[int, int]:
    """Cycle counts through ``node`` obtained by embedding every picture both ways."""

    k_max = _int(k_max, "k_max")
    require(3 <= k_max <= MAX_ENUMERATION_LENGTH, f"k_max deve estar em 3..{MAX_ENUMERATION_LENGTH}", parameter="k_max", value=k_max)
    counts: dict[int, int] = {}
    for k in range(MIN_PICTURE_LENGTH, k_max + 1):
        successes = 0
        for picture in enumerate_pictures(k):
            successes += embed_picture(graph, node, picture)
            successes += embed_picture(graph, node, picture.reversed())
        if successes % 2:
            raise RuntimeError(f"Número ímpar de embutimentos em k={k}: {successes}")
        if successes:
            counts[k] = successes // 2
    return counts


__all__ = [
    "binomial",
    "count_cycles_by_embedding",
    "cross_counts",
    "cycle_choices",
    "embed_picture",
    "enumerate_pictures",
    "ldpc_picture_count",
    "path_choices",
    "picture_count",
    "pictures_by_cross_count",
    "total_pictures",
]
