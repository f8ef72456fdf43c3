"""Pairwise coefficient matrices over whole datasets.

Each column is ranked and transformed exactly once (two sorts per column:
original and negated order); the n x n pairwise pass then reuses the cached
transforms and performs no further sorting. Every (i, j) cell is an
independent work unit written into pre-sized storage, so results are
bit-identical for any worker count or execution order.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from . import ranks as _ranks
from .coeff import (
    CoefficientValue,
    MinrelProfile,
    _minrel_from_scores,
    _pearson_kernel,
    _profile_from_transforms,
    minrel_simple,
)
from .errors import InvalidInputError

#: Metrics accepted by :func:`pairwise_matrix`.
MATRIX_METRICS = ("pearson", "spearman", "iota", "iota2", "max_iota_sq", "minrel_simple")

#: Metrics whose matrices are symmetric by construction.
SYMMETRIC_METRICS = frozenset({"pearson", "spearman", "max_iota_sq"})


@dataclass(frozen=True)
class Dataset:
    """Named columns of equal length m >= 2; stored as an (m, n) float array."""

    names: tuple[str, ...]
    values: np.ndarray

    def __post_init__(self) -> None:
        names = tuple(str(n) for n in self.names)
        if len(set(names)) != len(names):
            raise InvalidInputError("column names must be unique")
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 2:
            raise InvalidInputError(f"dataset values must be 2-D, got shape {values.shape}")
        if values.shape[1] != len(names):
            raise InvalidInputError(
                f"{len(names)} names but {values.shape[1]} columns of data"
            )
        if values.shape[0] < 2:
            raise InvalidInputError(f"dataset needs at least 2 rows, got {values.shape[0]}")
        if not np.all(np.isfinite(values)):
            row, col = (int(k[0]) for k in np.nonzero(~np.isfinite(values)))
            raise InvalidInputError(
                f"non-finite value at row {row}, column {names[col]!r}"
            )
        values = values.copy()
        values.flags.writeable = False
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_columns(cls, columns: Mapping[str, Iterable[float]]) -> "Dataset":
        names = tuple(columns)
        arrays = [np.asarray(columns[name], dtype=float) for name in names]
        lengths = {array.shape[0] if array.ndim else 0 for array in arrays}
        if len(lengths) > 1:
            raise InvalidInputError(f"columns differ in length: {sorted(lengths)}")
        return cls(names=names, values=np.column_stack(arrays))

    @property
    def m(self) -> int:
        return self.values.shape[0]

    @property
    def n(self) -> int:
        return self.values.shape[1]

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise InvalidInputError(f"unknown column {name!r}") from None

    def column(self, name: str) -> np.ndarray:
        return self.values[:, self.index(name)]


@dataclass(frozen=True)
class ColumnTransforms:
    """Every rank-derived view of one column the pairwise kernels need.

    ``neg_dec`` / ``neg_inc`` are the transforms of the negated column; they
    are derived from the same two rank vectors, so no extra sorting happens.
    """

    values: np.ndarray
    ranks: np.ndarray
    dec: np.ndarray
    inc: np.ndarray
    neg_dec: np.ndarray
    neg_inc: np.ndarray


def _column_transforms(values: np.ndarray) -> ColumnTransforms:
    m = values.size
    ranked = _ranks.fractional_ranks(values)
    ranked_neg = _ranks.fractional_ranks(np.negative(values))
    return ColumnTransforms(
        values=values,
        ranks=ranked,
        dec=_ranks.decreasing_scores_from_ranks(ranked, m),
        inc=_ranks.increasing_scores_from_ranks(ranked_neg, m),
        neg_dec=_ranks.decreasing_scores_from_ranks(ranked_neg, m),
        neg_inc=_ranks.increasing_scores_from_ranks(ranked, m),
    )


def transform_cache(dataset: Dataset) -> tuple[ColumnTransforms, ...]:
    """Rank and transform every column once; O(n m log m) preprocessing."""
    entries = []
    for j, name in enumerate(dataset.names):
        try:
            entries.append(_column_transforms(dataset.values[:, j]))
        except InvalidInputError as exc:
            raise InvalidInputError(f"column {name!r}: {exc}") from exc
    return tuple(entries)


@dataclass(frozen=True)
class CoefficientMatrix:
    """n x n coefficient values plus the mask of degenerate cells."""

    metric: str
    names: tuple[str, ...]
    values: np.ndarray
    degenerate: np.ndarray

    def value(self, x_name: str, y_name: str) -> float:
        i = self.names.index(x_name)
        j = self.names.index(y_name)
        return float(self.values[i, j])


@dataclass(frozen=True)
class ProfileMatrix:
    """Four-orientation coefficient maps for every ordered column pair."""

    names: tuple[str, ...]
    iota_xy: np.ndarray
    iota_yx: np.ndarray
    iota_negx_y: np.ndarray
    iota_negy_x: np.ndarray
    max_iota_sq: np.ndarray
    degenerate: np.ndarray  # shape (n, n, 4), one flag per orientation

    def profile(self, x_name: str, y_name: str) -> MinrelProfile:
        i = self.names.index(x_name)
        j = self.names.index(y_name)
        flags = self.degenerate[i, j]
        return MinrelProfile(
            CoefficientValue(float(self.iota_xy[i, j]), bool(flags[0])),
            CoefficientValue(float(self.iota_yx[i, j]), bool(flags[1])),
            CoefficientValue(float(self.iota_negx_y[i, j]), bool(flags[2])),
            CoefficientValue(float(self.iota_negy_x[i, j]), bool(flags[3])),
            float(self.max_iota_sq[i, j]),
        )


PairKernel = Callable[[int, int], CoefficientValue]


def _metric_kernel(
    dataset: Dataset, metric: str, cache: Sequence[ColumnTransforms] | None
) -> PairKernel:
    columns = dataset.values
    if metric == "pearson":
        return lambda i, j: _pearson_kernel(columns[:, i], columns[:, j])
    if metric == "minrel_simple":
        return lambda i, j: minrel_simple(columns[:, i], columns[:, j])
    assert cache is not None
    if metric == "spearman":
        return lambda i, j: _pearson_kernel(cache[i].ranks, cache[j].ranks)
    if metric == "iota":
        return lambda i, j: _minrel_from_scores(cache[i].dec, cache[j].dec, cache[j].inc)
    if metric == "iota2":
        # iota2(X, Y) == rank_minrelation(-Y, -X)
        return lambda i, j: _minrel_from_scores(
            cache[j].neg_dec, cache[i].neg_dec, cache[i].neg_inc
        )
    if metric == "max_iota_sq":

        def kernel(i: int, j: int) -> CoefficientValue:
            profile = _pair_profile(cache, i, j)
            return CoefficientValue(
                profile.max_iota_sq,
                degenerate=all(v.degenerate for v in profile.oriented_values()),
            )

        return kernel
    raise InvalidInputError(f"unknown metric {metric!r}; expected one of {MATRIX_METRICS}")


def _pair_profile(cache: Sequence[ColumnTransforms], i: int, j: int) -> MinrelProfile:
    ci, cj = cache[i], cache[j]
    return _profile_from_transforms(
        ci.dec, ci.inc, ci.neg_dec, cj.dec, cj.inc, cj.neg_dec
    )


def _run_cells(
    n: int,
    fill_row: Callable[[int], None],
    workers: int,
) -> None:
    if workers <= 1 or n <= 1:
        for i in range(n):
            fill_row(i)
        return

    # One contiguous block of rows per worker; each cell writes its own
    # pre-sized slot, so scheduling cannot affect the result.
    blocks = [rows for rows in np.array_split(np.arange(n), workers) if rows.size]

    def run_block(rows: np.ndarray) -> None:
        for i in rows:
            fill_row(int(i))

    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(run_block, blocks))


def pairwise_matrix(
    dataset: Dataset,
    metric: str,
    *,
    cache: Sequence[ColumnTransforms] | None = None,
    workers: int = 1,
) -> CoefficientMatrix:
    """Apply a two-column metric to every ordered pair of columns.

    Cell (i, j) holds metric(column_i, column_j) and equals a direct
    two-column call exactly. Diagonals are computed like any other cell.
    """
    if metric not in MATRIX_METRICS:
        raise InvalidInputError(f"unknown metric {metric!r}; expected one of {MATRIX_METRICS}")
    if cache is None and metric not in ("pearson", "minrel_simple"):
        cache = transform_cache(dataset)
    kernel = _metric_kernel(dataset, metric, cache)
    n = dataset.n
    values = np.empty((n, n), dtype=float)
    degenerate = np.zeros((n, n), dtype=bool)

    def fill_row(i: int) -> None:
        for j in range(n):
            cell = kernel(i, j)
            values[i, j] = cell.value
            degenerate[i, j] = cell.degenerate

    _run_cells(n, fill_row, workers)
    values.flags.writeable = False
    degenerate.flags.writeable = False
    return CoefficientMatrix(metric=metric, names=dataset.names, values=values, degenerate=degenerate)


def minrel_profile_matrix(
    dataset: Dataset,
    *,
    cache: Sequence[ColumnTransforms] | None = None,
    workers: int = 1,
) -> ProfileMatrix:
    """Full four-orientation profile for every ordered pair of columns."""
    if cache is None:
        cache = transform_cache(dataset)
    n = dataset.n
    arrays = {
        key: np.empty((n, n), dtype=float)
        for key in ("xy", "yx", "negx_y", "negy_x", "max_sq")
    }
    degenerate = np.zeros((n, n, 4), dtype=bool)

    def fill_row(i: int) -> None:
        for j in range(n):
            profile = _pair_profile(cache, i, j)
            arrays["xy"][i, j] = profile.iota_xy.value
            arrays["yx"][i, j] = profile.iota_yx.value
            arrays["negx_y"][i, j] = profile.iota_negx_y.value
            arrays["negy_x"][i, j] = profile.iota_negy_x.value
            arrays["max_sq"][i, j] = profile.max_iota_sq
            degenerate[i, j] = [v.degenerate for v in profile.oriented_values()]

    _run_cells(n, fill_row, workers)
    for arr in arrays.values():
        arr.flags.writeable = False
    degenerate.flags.writeable = False
    return ProfileMatrix(
        names=dataset.names,
        iota_xy=arrays["xy"],
        iota_yx=arrays["yx"],
        iota_negx_y=arrays["negx_y"],
        iota_negy_x=arrays["negy_x"],
        max_iota_sq=arrays["max_sq"],
        degenerate=degenerate,
    )
