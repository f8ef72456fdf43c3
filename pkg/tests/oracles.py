"""Independent brute-force reference implementations.

Everything here is deliberately written in plain Python with explicit
loops and O(m^2) counting ranks, sharing no code with the package, so the
fast implementations can be checked against a separate derivation of the
same definitions.
"""

from __future__ import annotations


def naive_ranks(values: list[float]) -> list[float]:
    """Tie-averaged 1-based ranks by direct counting.

    A value with ``less`` strictly smaller neighbours and ``equal`` copies
    (itself included) spans sorted positions less+1 .. less+equal, whose
    average is less + (equal + 1) / 2.
    """
    ranks = []
    for v in values:
        less = sum(1 for w in values if w < v)
        equal = sum(1 for w in values if w == v)
        ranks.append(less + (equal + 1) / 2.0)
    return ranks


def naive_decreasing_scores(values: list[float]) -> list[float]:
    m = len(values)
    return [r * r / (m * m) - 0.5 for r in naive_ranks(values)]


def naive_increasing_scores(values: list[float]) -> list[float]:
    m = len(values)
    return [0.5 - r * r / (m * m) for r in naive_ranks([-v for v in values])]


def naive_rank_minrelation(xs: list[float], ys: list[float]) -> tuple[float, bool]:
    """(value, degenerate) computed with explicit per-sample loops."""
    x_dec = naive_decreasing_scores(xs)
    y_dec = naive_decreasing_scores(ys)
    y_inc = naive_increasing_scores(ys)
    above = 0.0
    below = 0.0
    for xi, y_d, y_i in zip(x_dec, y_dec, y_inc):
        if xi > -y_d:
            above += (xi + y_d) ** 2
        if xi > y_i:
            below += (xi - y_i) ** 2
    total = above + below
    if total == 0.0:
        return 0.0, True
    return (above - below) / total, False


def naive_oriented(xs: list[float], ys: list[float], sx: int, sy: int) -> float:
    return naive_rank_minrelation([sx * v for v in xs], [sy * v for v in ys])[0]


def naive_max_iota_sq(xs: list[float], ys: list[float]) -> float:
    oriented = [
        naive_oriented(xs, ys, 1, 1),
        naive_oriented(ys, xs, 1, 1),
        naive_oriented(xs, ys, -1, 1),
        naive_oriented(ys, xs, -1, 1),
    ]
    return max(v * v for v in oriented)


def naive_pearson(xs: list[float], ys: list[float]) -> float:
    m = len(xs)
    mean_x = sum(xs) / m
    mean_y = sum(ys) / m
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    sxx = sum((x - mean_x) ** 2 for x in xs)
    syy = sum((y - mean_y) ** 2 for y in ys)
    if sxx == 0.0 or syy == 0.0:
        return 0.0
    return sxy / (sxx * syy) ** 0.5


def naive_spearman(xs: list[float], ys: list[float]) -> float:
    return naive_pearson(naive_ranks(xs), naive_ranks(ys))
