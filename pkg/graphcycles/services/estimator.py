"""Analytic estimates of P(no cycle of length <= k) at a random node.

Every product is evaluated as a sum of logarithms (``math.log1p`` for the
``1 - p`` factors, ``math.fsum`` for the sums).
"""

from __future__ import annotations

import logging
import math
import operator
from typing import Iterable

from ..models import CurveVariant, EmbedBounds, TheoryCurve
from .errors import InvalidParameterError, require
from .pictures import cross_counts, ldpc_picture_count, picture_count

logger = logging.getLogger(__name__)

MIN_TURBO_CYCLE = 4
MIN_TURBO_CYCLE_WITH_U = 6


def _int(value: object, parameter: str) -> int:
    try:
        return operator.index(value)  # type: ignore[arg-type]
    except TypeError:
        raise InvalidParameterError(f"{parameter} deve ser inteiro", parameter=parameter, value=value) from None


def log_product(terms: Iterable[tuple[float, float]]) -> float:
    """``prod(base ** exponent)`` evaluated as ``exp(fsum(exponent * log(base)))``.

    A zero base with a positive exponent makes the whole product zero.
    """

    logs: list[float] = []
    for base, exponent in terms:
        if base < 0:
            raise InvalidParameterError(f"Fator negativo: {base}", parameter="base", value=base)
        if exponent == 0:
            continue
        if base == 0:
            return 0.0
        logs.append(exponent * math.log(base))
    return math.exp(math.fsum(logs))


def _log_one_minus(p: float, count: float) -> float:
    if p >= 1.0:
        return -math.inf
    return count * math.log1p(-p)


def _log_bound(n: int, factors: Iterable[float], m: int) -> float:
    total = -math.log(n - m / 2)
    for factor in factors:
        if factor <= 0:
            return -math.inf
        total += 2 * math.log(factor)
    return total


def embed_prob_bounds(n: int, k: int, m: int) -> EmbedBounds:
    """Bounds on the probability that one picture with ``m`` cross edges embeds at a node."""

    n, k, m = _int(n, "n"), _int(k, "k"), _int(m, "m")
    require(n > k, f"n={n} deve ser maior que k={k}", parameter="n", value=n)
    require(m > 0 and m % 2 == 0, "m deve ser par e positivo", parameter="m", value=m)
    require(2 * m <= k, f"2m={2 * m} excede k={k}", parameter="m", value=m)

    half = m // 2
    gap = k - 2 * m
    lower_factors = []
    upper_factors = []
    for s in range(half + 1):
        lower_factors.append(1 - (s + gap) / (n - s))
        lower_factors.append(1 - (s + 1) / (n - (2 * s + gap)))
        upper_factors.append(1 - s / (n - s))
        upper_factors.append(1 - 1 / (n - 2 * s))

    log_lower = _log_bound(n, lower_factors, m)
    log_upper = _log_bound(n, upper_factors, m)
    lower = math.exp(log_lower) if log_lower > -math.inf else 0.0
    upper = math.exp(log_upper) if log_upper > -math.inf else 0.0
    return EmbedBounds(lower=min(lower, upper), upper=upper)


def _log_no_cycle_exact(n: int, k: int) -> float:
    return math.fsum(
        _log_one_minus(embed_prob_bounds(n, k, m).mean, picture_count(k, m)) for m in cross_counts(k)
    )


def prob_no_cycle_exact_len(n: int, k: int) -> float:
    """P(a random node lies on no cycle of length exactly ``k``)."""

    n, k = _int(n, "n"), _int(k, "k")
    require(k >= MIN_TURBO_CYCLE, f"k deve ser >= {MIN_TURBO_CYCLE}", parameter="k", value=k)
    require(n > k, f"n={n} deve ser maior que k={k}", parameter="n", value=n)
    return math.exp(_log_no_cycle_exact(n, k))


def prob_no_cycle_leq(n: int, k: int) -> float:
    n, k = _int(n, "n"), _int(k, "k")
    require(k >= MIN_TURBO_CYCLE, f"k deve ser >= {MIN_TURBO_CYCLE}", parameter="k", value=k)
    require(n > k, f"n={n} deve ser maior que k={k}", parameter="n", value=n)
    return math.exp(math.fsum(_log_no_cycle_exact(n, i) for i in range(MIN_TURBO_CYCLE, k + 1)))


def prob_no_cycle_leq_closed(n: int, k: int) -> float:
    """Large-n approximation ``exp(-(2^(k-1) - 4) / n)``."""

    n, k = _int(n, "n"), _int(k, "k")
    require(n >= 1, "n deve ser >= 1", parameter="n", value=n)
    require(k >= MIN_TURBO_CYCLE, f"k deve ser >= {MIN_TURBO_CYCLE}", parameter="k", value=k)
    return math.exp(-(2 ** (k - 1) - 4) / n)


def k_half(n: float) -> float:
    """Cycle length at which the closed-form no-cycle probability equals 0.5."""

    require(n >= 1, "n deve ser >= 1", parameter="n", value=n)
    return math.log2(n * math.log(2) + 4) + 1


def _log_no_cycle_exact_with_u(n: int, k: int) -> float:
    # U-inclusive length k = chain edges + 2 * cross edges; m counts U-inclusive cross length
    logs = []
    for m in range(4, 2 * k // 3 + 1, 4):
        plain_length, crosses = k - m // 2, m // 2
        bounds = embed_prob_bounds(n, plain_length, crosses)
        logs.append(_log_one_minus(bounds.mean, picture_count(plain_length, crosses)))
    return math.fsum(logs)


def prob_no_cycle_exact_len_with_u(n: int, k: int) -> float:
    n, k = _int(n, "n"), _int(k, "k")
    require(k >= 1, "k deve ser >= 1", parameter="k", value=k)
    require(n > k, f"n={n} deve ser maior que k={k}", parameter="n", value=n)
    return math.exp(_log_no_cycle_exact_with_u(n, k))


def prob_no_cycle_leq_with_u(n: int, k: int) -> float:
    """Same as ``prob_no_cycle_leq`` with U nodes counted (cross edges have length 2)."""

    n, k = _int(n, "n"), _int(k, "k")
    require(k >= 1, "k deve ser >= 1", parameter="k", value=k)
    require(n > k, f"n={n} deve ser maior que k={k}", parameter="n", value=n)
    return math.exp(math.fsum(_log_no_cycle_exact_with_u(n, i) for i in range(MIN_TURBO_CYCLE_WITH_U, k + 1)))


def ldpc_embed_prob(n: int, w: int, d_v: int, d_c: int, m: int) -> float:
    """Probability of embedding one LDPC picture of length ``2m`` at a node."""

    n, w, m = _int(n, "n"), _int(w, "w"), _int(m, "m")
    require(m >= 2, "m deve ser >= 2", parameter="m", value=m)
    require(n > m, f"n={n} deve ser maior que m={m}", parameter="n", value=n)
    require(w > m, f"w={w} deve ser maior que m={m}", parameter="w", value=w)
    require(d_v >= 1 and d_c >= 1, "d_v e d_c devem ser positivos", parameter="degree", value=(d_v, d_c))
    terms: list[tuple[float, float]] = [
        (1 / (n - 1), 1),
        (1 - 1 / d_c, m),
        (1 - 1 / d_v, m - 1),
    ]
    for i in range(m - 1):
        terms.append((1 - i / (n - 1), 1))
        terms.append((1 - i / (w - 1), 1))
    return log_product(terms)


def _ldpc_check_degrees(n: int, d_v: int, d_c: int) -> int:
    n, d_v, d_c = _int(n, "n"), _int(d_v, "d_v"), _int(d_c, "d_c")
    require(n >= 1 and d_v >= 1 and d_c >= 1, "n, d_v e d_c devem ser >= 1", parameter="ldpc")
    require((n * d_v) % d_c == 0, f"d_c={d_c} não divide n·d_v={n * d_v}", parameter="d_c", value=d_c)
    return n * d_v // d_c


def _log_ldpc_no_cycle_exact(n: int, w: int, d_v: int, d_c: int, k: int) -> float:
    if k < MIN_TURBO_CYCLE or k % 2:
        return 0.0
    m = k // 2
    count = ldpc_picture_count(m, d_v, d_c)
    return _log_one_minus(ldpc_embed_prob(n, w, d_v, d_c, m), float(count))


def ldpc_prob_no_cycle_exact_len(n: int, d_v: int, d_c: int, k: int) -> float:
    """Zero-cycle probability for length exactly ``k``; 1 for odd or short lengths."""

    w = _ldpc_check_degrees(n, d_v, d_c)
    k = _int(k, "k")
    require(k >= 1, "k deve ser >= 1", parameter="k", value=k)
    return math.exp(_log_ldpc_no_cycle_exact(n, w, d_v, d_c, k))


def ldpc_prob_no_cycle_leq(n: int, d_v: int, d_c: int, k: int) -> float:
    """Product over even lengths ``4..k``; an odd ``k`` gives the value at ``k - 1``."""

    w = _ldpc_check_degrees(n, d_v, d_c)
    k = _int(k, "k")
    require(k >= MIN_TURBO_CYCLE, f"k deve ser >= {MIN_TURBO_CYCLE}", parameter="k", value=k)
    return math.exp(math.fsum(_log_ldpc_no_cycle_exact(n, w, d_v, d_c, i) for i in range(MIN_TURBO_CYCLE, k + 1)))


def theory_curve(
    variant: str,
    n: int,
    k_min: int,
    k_max: int,
    d_v: int | None = None,
    d_c: int | None = None,
) -> TheoryCurve:
    """Build P(no cycle <= k) for ``k_min..k_max`` with cumulative log sums."""

    variant = CurveVariant.normalize(variant)
    n, k_min, k_max = _int(n, "n"), _int(k_min, "k_min"), _int(k_max, "k_max")
    require(1 <= k_min <= k_max, f"intervalo de k inválido: {k_min}..{k_max}", parameter="k_min", value=k_min)

    values: dict[int, float] = {}
    if variant == CurveVariant.TURBO_CLOSED_FORM:
        require(k_min >= MIN_TURBO_CYCLE, f"k_min deve ser >= {MIN_TURBO_CYCLE}", parameter="k_min", value=k_min)
        values = {k: prob_no_cycle_leq_closed(n, k) for k in range(k_min, k_max + 1)}
    elif variant == CurveVariant.LDPC:
        if d_v is None or d_c is None:
            raise InvalidParameterError("Curva LDPC exige d_v e d_c", parameter="d_v")
        w = _ldpc_check_degrees(n, d_v, d_c)
        cumulative = 0.0
        for k in range(1, k_max + 1):
            cumulative += _log_ldpc_no_cycle_exact(n, w, d_v, d_c, k)
            if k >= k_min:
                values[k] = math.exp(cumulative)
    else:
        require(n > k_max, f"n={n} deve ser maior que k_max={k_max}", parameter="n", value=n)
        exact = _log_no_cycle_exact_with_u if variant == CurveVariant.TURBO_WITH_U else _log_no_cycle_exact
        shortest = MIN_TURBO_CYCLE_WITH_U if variant == CurveVariant.TURBO_WITH_U else MIN_TURBO_CYCLE
        cumulative = 0.0
        for k in range(1, k_max + 1):
            if k >= shortest:
                cumulative += exact(n, k)
            if k >= k_min:
                values[k] = math.exp(cumulative)

    logger.debug("[estimator] curva %s n=%s k=%s..%s calculada", variant, n, k_min, k_max)
    return TheoryCurve(
        n=n,
        k_min=k_min,
        k_max=k_max,
        variant=variant,
        values=values,
        d_v=d_v if variant == CurveVariant.LDPC else None,
        d_c=d_c if variant == CurveVariant.LDPC else None,
    )


__all__ = [
    "embed_prob_bounds",
    "k_half",
    "ldpc_embed_prob",
    "ldpc_prob_no_cycle_exact_len",
    "ldpc_prob_no_cycle_leq",
    "log_product",
    "prob_no_cycle_exact_len",
    "prob_no_cycle_exact_len_with_u",
    "prob_no_cycle_leq",
    "prob_no_cycle_leq_closed",
    "prob_no_cycle_leq_with_u",
    "theory_curve",
]
