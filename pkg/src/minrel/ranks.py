"""Fractional ranking and the triangular squared-rank marginal transforms.

Everything downstream works on ranks rather than raw values: a column is
first mapped to tie-averaged ranks r in [1, m], then bent into a triangular
marginal by squaring,

    decreasing:  r(X)^2 / m^2 - 0.5     (mean -> -1/6, mass piles up low)
    increasing:  0.5 - r(-X)^2 / m^2    (mean -> +1/6, mass piles up high)

where r(-X) ranks the negated values. Both transforms land in [-0.5, 0.5]
and mirror each other exactly: ``increasing(X) == -decreasing(-X)``
elementwise, bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Sequence, Union

import numpy as np

from .errors import InvalidInputError

Direction = Literal["decreasing", "increasing"]

ColumnLike = Union["DataColumn", np.ndarray, Sequence[float]]


def _validated_values(data, what: str = "column") -> np.ndarray:
    values = np.asarray(data, dtype=float)
    if values.ndim != 1:
        raise InvalidInputError(f"{what} must be one-dimensional, got shape {values.shape}")
    if values.size < 2:
        raise InvalidInputError(f"{what} needs at least 2 samples, got {values.size}")
    if not np.all(np.isfinite(values)):
        bad = int(np.flatnonzero(~np.isfinite(values))[0])
        raise InvalidInputError(f"{what} contains a non-finite value at index {bad}")
    return values


def as_values(data, what: str = "column") -> np.ndarray:
    """Coerce a column-like object to a validated 1-D float array."""
    if isinstance(data, DataColumn):
        return data.values
    return _validated_values(data, what)


@dataclass(frozen=True)
class DataColumn:
    """One variable's samples: finite reals, at least two of them."""

    values: np.ndarray
    name: str | None = None

    def __post_init__(self) -> None:
        values = _validated_values(self.values, self.name or "column").copy()
        values.flags.writeable = False
        object.__setattr__(self, "values", values)

    @property
    def m(self) -> int:
        return self.values.size


@dataclass(frozen=True)
class RankVector:
    """Tie-averaged 1-based ranks of a column; their sum is always m(m+1)/2."""

    ranks: np.ndarray
    m: int


@dataclass(frozen=True)
class TriangularScores:
    """Squared-rank scores in [-0.5, 0.5] with a triangular marginal."""

    scores: np.ndarray
    direction: Direction


def fractional_ranks(values: np.ndarray) -> np.ndarray:
    """1-based ranks in increasing order; tied values share the average rank.

    A run of k equal values occupying sorted positions p..p+k-1 all receive
    rank (2p+k-1)/2, which keeps the total rank mass at m(m+1)/2 exactly.
    """
    order = np.argsort(values, kind="stable")
    sorted_values = values[order]
    new_group = np.empty(values.size, dtype=bool)
    new_group[0] = True
    new_group[1:] = sorted_values[1:] != sorted_values[:-1]
    group = np.cumsum(new_group) - 1
    counts = np.bincount(group)
    ends = np.cumsum(counts)
    starts = ends - counts + 1
    averages = (starts + ends) / 2.0
    ranks = np.empty(values.size, dtype=float)
    ranks[order] = averages[group]
    return ranks


def compute_ranks(column: ColumnLike, negate: bool = False) -> RankVector:
    """Fractional ranks of the column, or of its negation when ``negate``.

    For distinct values the negated ranks satisfy r(-X) = m + 1 - r(X);
    tie averaging preserves that identity.
    """
    values = as_values(column)
    if negate:
        values = np.negative(values)
    return RankVector(ranks=fractional_ranks(values), m=values.size)


def uniform_norm(column: ColumnLike) -> np.ndarray:
    """Ranks rescaled to (0, 1]: r(X)/m, the uniform marginal normalization."""
    ranked = compute_ranks(column)
    return ranked.ranks / float(ranked.m)


def decreasing_scores_from_ranks(ranks: np.ndarray, m: int) -> np.ndarray:
    """r^2/m^2 - 0.5 for increasing-order ranks r."""
    return (ranks * ranks) / float(m * m) - 0.5


def increasing_scores_from_ranks(negated_ranks: np.ndarray, m: int) -> np.ndarray:
    """0.5 - r^2/m^2 for decreasing-order ranks r (ranks of the negated column)."""
    return 0.5 - (negated_ranks * negated_ranks) / float(m * m)


def tri_decreasing(column: ColumnLike) -> TriangularScores:
    """Map a column onto a centered decreasing-triangular marginal."""
    ranked = compute_ranks(column)
    return TriangularScores(
        scores=decreasing_scores_from_ranks(ranked.ranks, ranked.m),
        direction="decreasing",
    )


def tri_increasing(column: ColumnLike) -> TriangularScores:
    """Map a column onto a centered increasing-triangular marginal."""
    ranked = compute_ranks(column, negate=True)
    return TriangularScores(
        scores=increasing_scores_from_ranks(ranked.ranks, ranked.m),
        direction="increasing",
    )
