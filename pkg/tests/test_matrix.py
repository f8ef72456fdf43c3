import numpy as np
import pytest

import minrel.ranks
from minrel import (
    Dataset,
    InvalidInputError,
    evaluate_metric,
    gen_multiplication,
    minrel_profile,
    minrel_profile_matrix,
    pairwise_matrix,
    transform_cache,
    tri_increasing,
)
from minrel.matrix import MATRIX_METRICS, SYMMETRIC_METRICS


def _dataset(seed=0, m=60, n=4):
    rng = np.random.default_rng(seed)
    values = rng.normal(size=(m, n))
    return Dataset(names=tuple(f"c{i}" for i in range(n)), values=values)


def test_dataset_validation():
    with pytest.raises(InvalidInputError, match="unique"):
        Dataset(names=("a", "a"), values=np.zeros((3, 2)))
    with pytest.raises(InvalidInputError, match="2 rows"):
        Dataset(names=("a", "b"), values=np.zeros((1, 2)))
    with pytest.raises(InvalidInputError, match="columns"):
        Dataset(names=("a", "b", "c"), values=np.zeros((3, 2)))
    with pytest.raises(InvalidInputError, match="row 1, column 'b'"):
        Dataset(names=("a", "b"), values=np.array([[0.0, 1.0], [2.0, np.nan]]))


def test_dataset_from_columns_rejects_ragged_input():
    with pytest.raises(InvalidInputError, match="length"):
        Dataset.from_columns({"a": [1.0, 2.0, 3.0], "b": [1.0, 2.0]})


def test_dataset_accessors_and_immutability():
    ds = Dataset.from_columns({"x": [1.0, 2.0, 3.0], "y": [4.0, 5.0, 6.0]})
    assert ds.m == 3 and ds.n == 2
    assert ds.column("y").tolist() == [4.0, 5.0, 6.0]
    assert not ds.values.flags.writeable
    with pytest.raises(InvalidInputError, match="unknown column"):
        ds.column("z")


def test_transform_cache_structure():
    ds = _dataset(n=3)
    cache = transform_cache(ds)
    assert len(cache) == 3
    fresh = tri_increasing(ds.values[:, 1]).scores
    np.testing.assert_array_equal(cache[1].inc, fresh)
    np.testing.assert_array_equal(cache[1].neg_inc, -cache[1].dec)
    np.testing.assert_array_equal(cache[1].neg_dec, -cache[1].inc)


def test_transform_cache_accepts_constant_columns():
    ds = Dataset.from_columns({"flat": [2.0, 2.0, 2.0], "x": [1.0, 2.0, 3.0]})
    cache = transform_cache(ds)
    assert cache[0].ranks.tolist() == [2.0, 2.0, 2.0]


def test_pairwise_matrix_rejects_unknown_metric():
    with pytest.raises(InvalidInputError, match="unknown metric"):
        pairwise_matrix(_dataset(), "kendall")


def test_pairwise_matrix_equals_direct_two_column_calls():
    ds = _dataset(seed=3, m=40, n=4)
    for metric in MATRIX_METRICS:
        matrix = pairwise_matrix(ds, metric)
        for i in range(ds.n):
            for j in range(ds.n):
                direct = evaluate_metric(ds.values[:, i], ds.values[:, j], metric)
                assert matrix.values[i, j] == direct.value
                assert matrix.degenerate[i, j] == direct.degenerate


def test_symmetric_metrics_and_unit_diagonal():
    ds = _dataset(seed=5, m=80, n=5)
    for metric in SYMMETRIC_METRICS:
        matrix = pairwise_matrix(ds, metric)
        np.testing.assert_array_equal(matrix.values, matrix.values.T)
    for metric in ("pearson", "spearman"):
        matrix = pairwise_matrix(ds, metric)
        np.testing.assert_array_equal(np.diag(matrix.values), np.ones(ds.n))


def test_spearman_matrix_monotone_pair():
    rng = np.random.default_rng(9)
    x = rng.normal(size=50)
    ds = Dataset.from_columns({"X": x, "expX": np.exp(x)})
    matrix = pairwise_matrix(ds, "spearman")
    assert matrix.value("X", "expX") == pytest.approx(1.0)
    assert matrix.value("expX", "X") == pytest.approx(1.0)


def test_iota_matrix_is_asymmetric_on_multiplicative_data():
    ds = gen_multiplication(1000, seed=17).dataset
    matrix = pairwise_matrix(ds, "iota")
    assert matrix.value("A", "B") > 0.95
    assert abs(matrix.value("B", "A") - 0.77) < 0.15
    assert matrix.value("A", "B") - matrix.value("B", "A") > 0.1


def test_degenerate_mask_for_constant_column():
    ds = Dataset.from_columns({"flat": [1.0, 1.0, 1.0, 1.0], "x": [1.0, 2.0, 3.0, 4.0]})
    matrix = pairwise_matrix(ds, "pearson")
    assert matrix.degenerate[0, 1] and matrix.degenerate[1, 0] and matrix.degenerate[0, 0]
    assert not matrix.degenerate[1, 1]
    assert matrix.values[0, 1] == 0.0


def test_parallel_runs_are_bit_identical():
    ds = _dataset(seed=11, m=50, n=6)
    for metric in ("iota", "max_iota_sq", "spearman"):
        sequential = pairwise_matrix(ds, metric, workers=1)
        parallel = pairwise_matrix(ds, metric, workers=4)
        assert sequential.values.tobytes() == parallel.values.tobytes()
        assert sequential.degenerate.tobytes() == parallel.degenerate.tobytes()
    profile_seq = minrel_profile_matrix(ds, workers=1)
    profile_par = minrel_profile_matrix(ds, workers=3)
    assert profile_seq.iota_xy.tobytes() == profile_par.iota_xy.tobytes()
    assert profile_seq.max_iota_sq.tobytes() == profile_par.max_iota_sq.tobytes()


def test_preprocessing_sorts_each_column_once(monkeypatch):
    ds = _dataset(seed=13, m=30, n=5)
    calls = {"count": 0}
    original = minrel.ranks.fractional_ranks

    def counting(values):
        calls["count"] += 1
        return original(values)

    monkeypatch.setattr(minrel.ranks, "fractional_ranks", counting)
    pairwise_matrix(ds, "iota")
    # Two rankings per column (original and negated order), nothing per pair.
    assert calls["count"] == 2 * ds.n


def test_pairwise_pass_never_reranks_with_prebuilt_cache(monkeypatch):
    ds = _dataset(seed=13, m=30, n=5)
    cache = transform_cache(ds)

    def exploding(values):
        raise AssertionError("pairwise pass must not rank")

    monkeypatch.setattr(minrel.ranks, "fractional_ranks", exploding)
    matrix = pairwise_matrix(ds, "iota", cache=cache)
    profiles = minrel_profile_matrix(ds, cache=cache)
    assert matrix.values.shape == (5, 5)
    assert profiles.max_iota_sq.shape == (5, 5)


def test_profile_matrix_matches_direct_profiles():
    ds = _dataset(seed=19, m=40, n=4)
    profiles = minrel_profile_matrix(ds)
    for i, x in enumerate(ds.names):
        for j, y in enumerate(ds.names):
            direct = minrel_profile(ds.values[:, i], ds.values[:, j])
            cell = profiles.profile(x, y)
            assert cell == direct
            assert profiles.max_iota_sq[i, j] == max(
                v.value ** 2 for v in direct.oriented_values()
            )


def test_profile_matrix_multiplicative_pair_rep_averaged():
    sums = np.zeros(4)
    reps = 30
    for rep in range(reps):
        ds = gen_multiplication(1000, seed=100 + rep).dataset
        profile = minrel_profile_matrix(ds).profile("A", "B")
        sums += [
            profile.iota_xy.value,
            profile.iota_yx.value,
            profile.iota_negx_y.value,
            profile.iota_negy_x.value,
        ]
    means = sums / reps
    np.testing.assert_allclose(means, [0.99, 0.77, -0.79, -0.99], atol=0.03)


def test_profile_matrix_diagonal_is_near_one():
    rng = np.random.default_rng(23)
    ds = Dataset.from_columns({"X": rng.normal(size=1000), "Y": rng.normal(size=1000)})
    profiles = minrel_profile_matrix(ds)
    cell = profiles.profile("X", "X")
    for value in cell.oriented_values():
        assert abs(value.value) >= 0.999
