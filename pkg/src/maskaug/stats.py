"""Rank-based comparison and the two-sample t-test.

Ranking: rank 1 = highest raw score, ties get the mid-rank (average of the
ranks they span), so ranks within a group always sum to n(n+1)/2.

ttest2 is the pooled-variance (Student) two-sample test, two-tailed, with
df = n1 + n2 - 2. The p-value comes from the t distribution via the
regularized incomplete beta function, evaluated by continued fraction to
absolute accuracy better than 1e-10.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

DEFAULT_ALPHAS = (0.05, 0.2, 0.35)


class RankRow(NamedTuple):
    item_id: str
    metric: str
    method: str
    rank: float


@dataclass(frozen=True)
class TTestResult:
    t_statistic: float
    df: int
    p_value: float
    alphas: tuple[float, ...]
    h_values: tuple[int, ...]     # 1 iff p < alpha, per level
    degenerate_variance: bool = False


def rank_scores(scores: Sequence[float]) -> list[float]:
    """Ranks with 1 = highest score; ties receive the mid-rank."""
    if len(scores) == 0:
        raise ValueError("cannot rank an empty score list")
    if not all(math.isfinite(s) for s in scores):
        raise ValueError("non-finite score in rank input")
    order = sorted(range(len(scores)), key=lambda i: -scores[i])
    ranks = [0.0] * len(scores)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and scores[order[j + 1]] == scores[order[i]]:
            j += 1
        mid = (i + j) / 2.0 + 1.0
        for k in range(i, j + 1):
            ranks[order[k]] = mid
        i = j + 1
    return ranks


def sum_ranks(rows: Iterable[RankRow]) -> list[tuple[str, float]]:
    """Per-method rank sums over all (item, metric) groups; smaller = better."""
    sums: dict[str, float] = defaultdict(float)
    for row in rows:
        sums[row.method] += row.rank
    return sorted(sums.items(), key=lambda kv: (kv[1], kv[0]))


def _betacf(a: float, b: float, x: float) -> float:
    """Continued fraction for the regularized incomplete beta (Lentz)."""
    tiny = 1e-300
    qab, qap, qam = a + b, a + 1.0, a - 1.0
    c = 1.0
    d = 1.0 - qab * x / qap
    if abs(d) < tiny:
        d = tiny
    d = 1.0 / d
    h = d
    for m in range(1, 500):
        m2 = 2 * m
        aa = m * (b - m) * x / ((qam + m2) * (a + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        h *= d * c
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2))
        d = 1.0 + aa * d
        if abs(d) < tiny:
            d = tiny
        c = 1.0 + aa / c
        if abs(c) < tiny:
            c = tiny
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < 1e-15:
            return h
    raise RuntimeError("incomplete beta continued fraction did not converge")


def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    """I_x(a, b) for a, b > 0 and x in [0, 1]."""
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x = {x} outside [0, 1]")
    if x == 0.0:
        return 0.0
    if x == 1.0:
        return 1.0
    ln_front = (math.lgamma(a + b) - math.lgamma(a) - math.lgamma(b)
                + a * math.log(x) + b * math.log1p(-x))
    front = math.exp(ln_front)
    if x < (a + 1.0) / (a + b + 2.0):
        return front * _betacf(a, b, x) / a
    return 1.0 - front * _betacf(b, a, 1.0 - x) / b


def t_sf_two_tailed(t: float, df: int) -> float:
    """Two-tailed p-value P(|T| >= |t|) for Student's t with df dof."""
    if df <= 0:
        raise ValueError(f"degrees of freedom must be positive, got {df}")
    if t == 0.0:
        return 1.0
    x = df / (df + t * t)
    return regularized_incomplete_beta(df / 2.0, 0.5, x)


def h_decisions(p: float, alphas: Sequence[float]) -> tuple[int, ...]:
    """Null-hypothesis decisions: 1 iff p < alpha, per level."""
    return tuple(1 if p < a else 0 for a in alphas)


def ttest2(a: Sequence[float], b: Sequence[float],
           alphas: Sequence[float] = DEFAULT_ALPHAS) -> TTestResult:
    """Pooled-variance two-sample Student t-test, two-tailed."""
    a = [float(v) for v in a]
    b = [float(v) for v in b]
    if len(a) < 2 or len(b) < 2:
        raise ValueError("each sample needs at least two observations")
    if not all(math.isfinite(v) for v in a + b):
        raise ValueError("non-finite value in t-test sample")
    na, nb = len(a), len(b)
    ma = sum(a) / na
    mb = sum(b) / nb
    ssa = sum((v - ma) ** 2 for v in a)
    ssb = sum((v - mb) ** 2 for v in b)
    df = na + nb - 2
    pooled = (ssa + ssb) / df
    alphas = tuple(alphas)
    if pooled == 0.0:
        # no within-sample variation: identical means are a perfect null,
        # distinct means a degenerate certain rejection
        if ma == mb:
            return TTestResult(0.0, df, 1.0, alphas, h_decisions(1.0, alphas))
        return TTestResult(math.inf if ma > mb else -math.inf, df, 0.0,
                           alphas, h_decisions(0.0, alphas),
                           degenerate_variance=True)
    t = (ma - mb) / math.sqrt(pooled * (1.0 / na + 1.0 / nb))
    p = t_sf_two_tailed(t, df)
    return TTestResult(t, df, p, alphas, h_decisions(p, alphas))
