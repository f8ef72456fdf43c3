"""Bivariate dependence coefficients.

The centerpiece is the rank minrelation coefficient: an asymmetric score in
[-1, 1] that is high when one variable consistently stays below the other
(an estimate that p(X <= Y) is large), rather than when the two move
together symmetrically. It is computed on triangular squared-rank
transforms of the inputs and trades off two squared-distance masses:

    above = sum over i of  I(x~ > -y~dec) * (x~ + y~dec)^2
    below = sum over i of  I(x~ >  y~inc) * (x~ - y~inc)^2
    value = (above - below) / (above + below)

where x~ is the decreasing transform of X and y~dec / y~inc are the
decreasing / increasing transforms of Y. ``above`` collects mass supporting
the relation (points clear of the anti-diagonal y = -x), ``below`` collects
violations of X <= Y (points under the diagonal y = x). Points exactly on a
diagonal contribute to neither sum. A zero denominator is reported as a
degenerate zero, never an error.

Raw (untransformed) variants of the trade-off plus Pearson and Spearman
baselines live here as well. All functions are pure and thread-safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError
from .ranks import (
    ColumnLike,
    as_values,
    decreasing_scores_from_ranks,
    fractional_ranks,
    increasing_scores_from_ranks,
)

#: Metric identifiers usable with :func:`evaluate_metric` and the CLI.
METRICS = (
    "pearson",
    "spearman",
    "iota",
    "iota2",
    "max_iota_sq",
    "minrel_simple",
    "p_leq_hat",
    "iota_raw_indicator",
    "iota_raw_squared",
)


@dataclass(frozen=True)
class CoefficientValue:
    """A coefficient in [-1, 1]; ``degenerate`` marks a zero denominator."""

    value: float
    degenerate: bool = False

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class MinrelProfile:
    """The four tabulated orientations of the coefficient for one pair."""

    iota_xy: CoefficientValue
    iota_yx: CoefficientValue
    iota_negx_y: CoefficientValue
    iota_negy_x: CoefficientValue
    max_iota_sq: float

    def oriented_values(self) -> tuple[CoefficientValue, ...]:
        return (self.iota_xy, self.iota_yx, self.iota_negx_y, self.iota_negy_x)


def _pair_values(x: ColumnLike, y: ColumnLike) -> tuple[np.ndarray, np.ndarray]:
    xv = as_values(x, "x")
    yv = as_values(y, "y")
    if xv.size != yv.size:
        raise InvalidInputError(f"columns differ in length: {xv.size} vs {yv.size}")
    return xv, yv


def p_leq_hat(x: ColumnLike, y: ColumnLike) -> float:
    """Fraction of sample points with x_i <= y_i."""
    xv, yv = _pair_values(x, y)
    return float(np.count_nonzero(xv <= yv)) / xv.size


def minrel_simple(x: ColumnLike, y: ColumnLike) -> CoefficientValue:
    """Concordant-minus-discordant count for x_i <= y_i, scaled to [-1, 1]."""
    xv, yv = _pair_values(x, y)
    concordant = int(np.count_nonzero(xv <= yv))
    discordant = xv.size - concordant
    return CoefficientValue((concordant - discordant) / xv.size)


def iota_raw_indicator(x: ColumnLike, y: ColumnLike) -> CoefficientValue:
    """Pure-count trade-off between violations of x <= -y and of x <= y.

    Assumes the caller centered the inputs; no normalization is applied.
    """
    xv, yv = _pair_values(x, y)
    above = int(np.count_nonzero(xv > -yv))
    below = int(np.count_nonzero(xv > yv))
    total = above + below
    if total == 0:
        return CoefficientValue(0.0, degenerate=True)
    return CoefficientValue((above - below) / total)


def iota_raw_squared(x: ColumnLike, y: ColumnLike) -> CoefficientValue:
    """Squared-distance-weighted trade-off on raw (caller-centered) values."""
    xv, yv = _pair_values(x, y)
    return _minrel_from_scores(xv, yv, yv)


def _minrel_from_scores(
    x_dec: np.ndarray, y_dec: np.ndarray, y_inc: np.ndarray
) -> CoefficientValue:
    """Core trade-off kernel; see the module docstring for the formula.

    ``y_dec`` weighs agreement against the anti-diagonal, ``y_inc`` weighs
    violations of the diagonal. Passing the same array for both reproduces
    the raw squared form.
    """
    support = x_dec + y_dec
    above = float(((x_dec > -y_dec) * (support * support)).sum())
    gap = x_dec - y_inc
    below = float(((x_dec > y_inc) * (gap * gap)).sum())
    total = above + below
    if total == 0.0:
        return CoefficientValue(0.0, degenerate=True)
    return CoefficientValue((above - below) / total)


def rank_minrelation(x: ColumnLike, y: ColumnLike) -> CoefficientValue:
    """The rank minrelation coefficient of X to Y.

    High (near +1) when Y rarely drops below X after both marginals are
    mapped to triangular squared ranks; near -1 when the same holds against
    -Y; near 0 for independent columns. Constant columns are legal (all-tied
    ranks) and flagged degenerate only if both trade-off masses vanish.
    """
    xv, yv = _pair_values(x, y)
    return _rank_minrelation_values(xv, yv)


def _require_sign(sign: int, name: str) -> int:
    if sign not in (1, -1):
        raise InvalidInputError(f"{name} must be +1 or -1, got {sign!r}")
    return int(sign)


def iota_oriented(
    x: ColumnLike, y: ColumnLike, sign_x: int = 1, sign_y: int = 1
) -> CoefficientValue:
    """rank_minrelation of (sign_x * X, sign_y * Y), negating before ranking.

    Flipping ``sign_y`` negates the result exactly; flipping ``sign_x``
    generally does not (the measure is asymmetric).
    """
    sx = _require_sign(sign_x, "sign_x")
    sy = _require_sign(sign_y, "sign_y")
    xv, yv = _pair_values(x, y)
    if sx < 0:
        xv = np.negative(xv)
    if sy < 0:
        yv = np.negative(yv)
    return _rank_minrelation_values(xv, yv)


def _rank_minrelation_values(xv: np.ndarray, yv: np.ndarray) -> CoefficientValue:
    m = xv.size
    x_dec = decreasing_scores_from_ranks(fractional_ranks(xv), m)
    y_dec = decreasing_scores_from_ranks(fractional_ranks(yv), m)
    y_inc = increasing_scores_from_ranks(fractional_ranks(np.negative(yv)), m)
    return _minrel_from_scores(x_dec, y_dec, y_inc)


def iota2(x: ColumnLike, y: ColumnLike) -> CoefficientValue:
    """Sibling coefficient trading p(X<=Y) against p(-X<=Y).

    Computed through its exact identity with the main coefficient:
    iota2(X, Y) == rank_minrelation(-Y, -X).
    """
    return iota_oriented(y, x, -1, -1)


def _profile_from_transforms(
    x_dec: np.ndarray,
    x_inc: np.ndarray,
    x_neg_dec: np.ndarray,
    y_dec: np.ndarray,
    y_inc: np.ndarray,
    y_neg_dec: np.ndarray,
) -> MinrelProfile:
    """Build the four-orientation profile from precomputed transforms.

    ``*_neg_dec`` is the decreasing transform of the negated column, which
    equals the elementwise negation of the increasing transform.
    """
    xy = _minrel_from_scores(x_dec, y_dec, y_inc)
    yx = _minrel_from_scores(y_dec, x_dec, x_inc)
    negx_y = _minrel_from_scores(x_neg_dec, y_dec, y_inc)
    negy_x = _minrel_from_scores(y_neg_dec, x_dec, x_inc)
    best = max(v.value * v.value for v in (xy, yx, negx_y, negy_x))
    return MinrelProfile(xy, yx, negx_y, negy_x, best)


def minrel_profile(x: ColumnLike, y: ColumnLike) -> MinrelProfile:
    """All four tabulated orientations plus their maximal square."""
    xv, yv = _pair_values(x, y)
    m = xv.size
    rx = fractional_ranks(xv)
    rx_neg = fractional_ranks(np.negative(xv))
    ry = fractional_ranks(yv)
    ry_neg = fractional_ranks(np.negative(yv))
    return _profile_from_transforms(
        decreasing_scores_from_ranks(rx, m),
        increasing_scores_from_ranks(rx_neg, m),
        decreasing_scores_from_ranks(rx_neg, m),
        decreasing_scores_from_ranks(ry, m),
        increasing_scores_from_ranks(ry_neg, m),
        decreasing_scores_from_ranks(ry_neg, m),
    )


def max_iota_sq(x: ColumnLike, y: ColumnLike) -> float:
    """Direction-free relevance score: the largest squared oriented value.

    Maximum of iota(X,Y)^2, iota(Y,X)^2, iota(-X,Y)^2 and iota(-Y,X)^2; the
    remaining sign combinations are redundant by exact negation symmetry.
    Symmetric in its arguments.
    """
    return minrel_profile(x, y).max_iota_sq


def _pearson_kernel(xv: np.ndarray, yv: np.ndarray) -> CoefficientValue:
    cx = xv - xv.mean()
    cy = yv - yv.mean()
    vx = float(np.dot(cx, cx))
    vy = float(np.dot(cy, cy))
    if vx == 0.0 or vy == 0.0:
        return CoefficientValue(0.0, degenerate=True)
    value = float(np.dot(cx, cy)) / math.sqrt(vx * vy)
    return CoefficientValue(min(1.0, max(-1.0, value)))


def pearson(x: ColumnLike, y: ColumnLike) -> CoefficientValue:
    """Product-moment correlation; constant columns yield a degenerate zero."""
    xv, yv = _pair_values(x, y)
    return _pearson_kernel(xv, yv)


def spearman(x: ColumnLike, y: ColumnLike) -> CoefficientValue:
    """Rank correlation: Pearson applied to tie-averaged fractional ranks."""
    xv, yv = _pair_values(x, y)
    return _pearson_kernel(fractional_ranks(xv), fractional_ranks(yv))


def evaluate_metric(x: ColumnLike, y: ColumnLike, metric: str) -> CoefficientValue:
    """Dispatch a metric identifier from :data:`METRICS` onto a column pair."""
    if metric == "pearson":
        return pearson(x, y)
    if metric == "spearman":
        return spearman(x, y)
    if metric == "iota":
        return rank_minrelation(x, y)
    if metric == "iota2":
        return iota2(x, y)
    if metric == "max_iota_sq":
        profile = minrel_profile(x, y)
        return CoefficientValue(
            profile.max_iota_sq,
            degenerate=all(v.degenerate for v in profile.oriented_values()),
        )
    if metric == "minrel_simple":
        return minrel_simple(x, y)
    if metric == "p_leq_hat":
        return CoefficientValue(p_leq_hat(x, y))
    if metric == "iota_raw_indicator":
        return iota_raw_indicator(x, y)
    if metric == "iota_raw_squared":
        return iota_raw_squared(x, y)
    raise InvalidInputError(f"unknown metric {metric!r}; expected one of {METRICS}")
