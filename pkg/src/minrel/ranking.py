"""Variable ranking by bivariate relevance, and its evaluation protocol.

A ranking scores every non-target column against the target with one of
three criteria and orders them by descending score (ties broken by column
order, so results are fully deterministic):

    rho2        -- squared Spearman correlation
    max_iota_sq -- largest squared oriented minrelation value
    iota_sq     -- squared minrelation of the target to the candidate only

Two criteria are compared by the average 1-based position the known
relevant columns get: strictly lower wins the target, equality is a draw.
A split-half cross-validation harness evaluates rankings on held-out data
with a built-in least-squares regressor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .coeff import _minrel_from_scores, _pearson_kernel
from .errors import InvalidInputError
from .matrix import ColumnTransforms, Dataset, _pair_profile, transform_cache

CRITERIA = ("rho2", "max_iota_sq", "iota_sq")

RIDGE_EPSILON = 1e-8


@dataclass(frozen=True)
class RankingResult:
    """Non-target columns ordered by descending relevance to the target."""

    target: str
    criterion: str
    ordered: tuple[tuple[str, float], ...]

    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.ordered)

    def position(self, name: str) -> int:
        for index, (candidate, _) in enumerate(self.ordered, start=1):
            if candidate == name:
                return index
        raise InvalidInputError(f"column {name!r} is not in the ranking")


@dataclass(frozen=True)
class RelevanceEval:
    """Mean 1-based ranking position of a set of known relevant columns."""

    relevant: frozenset[str]
    avg_position: float


@dataclass(frozen=True)
class TargetOutcome:
    target: str
    avg_position_a: float
    avg_position_b: float
    outcome: str  # win | loss | draw, from criterion_a's point of view


@dataclass(frozen=True)
class WinLossRecord:
    """Per-target win/loss/draw tallies for criterion_a vs criterion_b."""

    criterion_a: str
    criterion_b: str
    outcomes: tuple[TargetOutcome, ...]

    @property
    def wins(self) -> int:
        return sum(1 for o in self.outcomes if o.outcome == "win")

    @property
    def losses(self) -> int:
        return sum(1 for o in self.outcomes if o.outcome == "loss")

    @property
    def draws(self) -> int:
        return sum(1 for o in self.outcomes if o.outcome == "draw")


def _criterion_score(
    cache: Sequence[ColumnTransforms], criterion: str, candidate: int, target: int
) -> float:
    if criterion == "rho2":
        rho = _pearson_kernel(cache[candidate].ranks, cache[target].ranks).value
        return rho * rho
    if criterion == "max_iota_sq":
        return _pair_profile(cache, candidate, target).max_iota_sq
    if criterion == "iota_sq":
        value = _minrel_from_scores(
            cache[target].dec, cache[candidate].dec, cache[candidate].inc
        ).value
        return value * value
    raise InvalidInputError(f"unknown criterion {criterion!r}; expected one of {CRITERIA}")


def rank_variables(
    dataset: Dataset,
    target: str,
    criterion: str,
    *,
    cache: Sequence[ColumnTransforms] | None = None,
) -> RankingResult:
    """Order every other column by its relevance score against the target.

    Degenerate coefficients score 0. Ties keep the dataset's column order.
    """
    if criterion not in CRITERIA:
        raise InvalidInputError(f"unknown criterion {criterion!r}; expected one of {CRITERIA}")
    target_index = dataset.index(target)
    if dataset.n < 2:
        raise InvalidInputError("ranking needs at least 2 columns")
    if cache is None:
        cache = transform_cache(dataset)
    scored = [
        (j, _criterion_score(cache, criterion, j, target_index))
        for j in range(dataset.n)
        if j != target_index
    ]
    scored.sort(key=lambda item: (-item[1], item[0]))
    return RankingResult(
        target=target,
        criterion=criterion,
        ordered=tuple((dataset.names[j], score) for j, score in scored),
    )


def average_position(ranking: RankingResult, relevant: Iterable[str]) -> RelevanceEval:
    """Mean 1-based position of the relevant columns within the ranking."""
    wanted = frozenset(relevant)
    if not wanted:
        raise InvalidInputError("relevant set must not be empty")
    positions = {name: index for index, (name, _) in enumerate(ranking.ordered, start=1)}
    missing = sorted(wanted - positions.keys())
    if missing:
        raise InvalidInputError(f"relevant columns not in ranking: {missing}")
    avg = sum(positions[name] for name in wanted) / len(wanted)
    return RelevanceEval(relevant=wanted, avg_position=avg)


def compare_criteria(
    dataset: Dataset,
    targets: Mapping[str, Iterable[str]],
    *,
    criterion_a: str = "max_iota_sq",
    criterion_b: str = "rho2",
    min_relevant: int = 1,
) -> WinLossRecord:
    """Head-to-head ranking comparison over targets with known predictors.

    Targets with fewer than ``min_relevant`` declared predictors are
    filtered out before scoring. A criterion wins a target when its
    ranking gives the predictors a strictly lower average position.
    """
    if min_relevant < 1:
        raise InvalidInputError(f"min_relevant must be >= 1, got {min_relevant}")
    cache = transform_cache(dataset)
    resolved = {name: tuple(relevant) for name, relevant in targets.items()}
    ordered_targets = sorted(resolved, key=dataset.index)
    outcomes = []
    for target in ordered_targets:
        relevant = resolved[target]
        if len(relevant) < min_relevant:
            continue
        ranking_a = rank_variables(dataset, target, criterion_a, cache=cache)
        ranking_b = rank_variables(dataset, target, criterion_b, cache=cache)
        avg_a = average_position(ranking_a, relevant).avg_position
        avg_b = average_position(ranking_b, relevant).avg_position
        if avg_a < avg_b:
            outcome = "win"
        elif avg_b < avg_a:
            outcome = "loss"
        else:
            outcome = "draw"
        outcomes.append(
            TargetOutcome(
                target=target,
                avg_position_a=avg_a,
                avg_position_b=avg_b,
                outcome=outcome,
            )
        )
    return WinLossRecord(
        criterion_a=criterion_a, criterion_b=criterion_b, outcomes=tuple(outcomes)
    )


@dataclass(frozen=True)
class FitResult:
    """A fitted regressor: a predict callable plus fit diagnostics."""

    predict: Callable[[np.ndarray], np.ndarray]
    used_ridge: bool = False


def least_squares_regressor(train_x: np.ndarray, train_y: np.ndarray) -> FitResult:
    """Ordinary least squares with intercept via the normal equations.

    A singular or non-finite solve falls back to a tiny ridge term on the
    normal-equation diagonal, reported through ``used_ridge``.
    """
    design = np.column_stack([train_x, np.ones(train_x.shape[0])])
    gram = design.T @ design
    moment = design.T @ train_y
    used_ridge = False
    try:
        beta = np.linalg.solve(gram, moment)
        if not np.all(np.isfinite(beta)):
            raise np.linalg.LinAlgError("non-finite solution")
    except np.linalg.LinAlgError:
        used_ridge = True
        ridged = gram + RIDGE_EPSILON * np.eye(gram.shape[0])
        beta = np.linalg.solve(ridged, moment)

    def predict(x: np.ndarray) -> np.ndarray:
        return np.column_stack([x, np.ones(x.shape[0])]) @ beta

    return FitResult(predict=predict, used_ridge=used_ridge)


@dataclass(frozen=True)
class CvSummary:
    """Split-half evaluation of one ranking criterion on one target."""

    target: str
    criterion: str
    sizes: tuple[int, ...]
    folds: int
    seed: int
    ranked: tuple[str, ...]
    per_size_mse: tuple[float, ...]
    mean_mse: float
    used_ridge: bool


def _canonical_row_order(dataset: Dataset) -> np.ndarray:
    # Lexicographic by column 0, then 1, ... so shuffling is invariant to
    # the order rows arrived in.
    return np.lexsort(dataset.values.T[::-1])


def split_half_cv_eval(
    dataset: Dataset,
    target: str,
    criterion: str,
    sizes: Sequence[int],
    folds: int,
    seed: int,
    *,
    regressor: Callable[[np.ndarray, np.ndarray], FitResult] = least_squares_regressor,
) -> CvSummary:
    """Rank on one half of the rows, cross-validate subsets on the other.

    Rows are put in a canonical order, shuffled with the seed, and split:
    the first ceil(m/2) rows feed the ranking, the rest are evaluated with
    k-fold cross-validation of the regressor fitted on the top-``size``
    ranked columns, for each requested subset size. Reported MSEs are
    fold averages; ``mean_mse`` additionally averages over sizes.
    """
    sizes = tuple(int(k) for k in sizes)
    if not sizes:
        raise InvalidInputError("sizes must not be empty")
    if any(k < 1 or k > dataset.n - 1 for k in sizes):
        raise InvalidInputError(f"subset sizes must be within [1, {dataset.n - 1}], got {sizes}")
    if folds < 2:
        raise InvalidInputError(f"folds must be >= 2, got {folds}")
    if dataset.m < 2 * folds:
        raise InvalidInputError(
            f"need at least {2 * folds} rows for {folds}-fold split-half evaluation, got {dataset.m}"
        )
    target_index = dataset.index(target)
    rng = np.random.default_rng(seed)
    shuffled = _canonical_row_order(dataset)[rng.permutation(dataset.m)]
    half = math.ceil(dataset.m / 2)
    ranking_rows, eval_rows = shuffled[:half], shuffled[half:]

    ranking_half = Dataset(names=dataset.names, values=dataset.values[ranking_rows])
    ranking = rank_variables(ranking_half, target, criterion)
    ranked_names = ranking.names()

    eval_values = dataset.values[eval_rows]
    y = eval_values[:, target_index]
    fold_slices = np.array_split(np.arange(eval_rows.size), folds)
    used_ridge = False
    per_size = []
    for size in sizes:
        feature_idx = [dataset.index(name) for name in ranked_names[:size]]
        x = eval_values[:, feature_idx]
        fold_mses = []
        for validation in fold_slices:
            mask = np.ones(eval_rows.size, dtype=bool)
            mask[validation] = False
            fit = regressor(x[mask], y[mask])
            used_ridge = used_ridge or fit.used_ridge
            residual = fit.predict(x[validation]) - y[validation]
            fold_mses.append(float(np.mean(residual * residual)))
        per_size.append(float(np.mean(fold_mses)))
    return CvSummary(
        target=target,
        criterion=criterion,
        sizes=sizes,
        folds=folds,
        seed=seed,
        ranked=ranked_names,
        per_size_mse=tuple(per_size),
        mean_mse=float(np.mean(per_size)),
        used_ridge=used_ridge,
    )
