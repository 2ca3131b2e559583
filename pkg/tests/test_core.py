"""Domain types: parameter validation, search space, random source, counters."""

from dataclasses import replace

import numpy as np
import pytest

from stapy.core import (
    CallCounter,
    RandomSource,
    RunResult,
    SearchSpace,
    Solution,
    StaParams,
    default_params,
    evaluate_batch,
)


def test_default_params_values():
    p = default_params()
    assert p.alpha_max == 1.0
    assert p.alpha_min == 1e-4
    assert p.beta == 1.0
    assert p.gamma == 1.0
    assert p.delta == 1.0
    assert p.se == 30
    assert p.fc == 2.0
    assert p.iterations == 1000


def test_params_field_override():
    p = replace(default_params(), se=50)
    assert p.se == 50
    assert p.alpha_max == 1.0 and p.iterations == 1000


@pytest.mark.parametrize(
    "kwargs",
    [
        {"alpha_min": 0.0},
        {"alpha_min": -1e-4},
        {"alpha_min": 2.0, "alpha_max": 1.0},
        {"beta": 0.0},
        {"gamma": -1.0},
        {"delta": 0.0},
        {"se": 0},
        {"se": 2.5},
        {"fc": 1.0},
        {"fc": 0.5},
        {"iterations": 0},
    ],
)
def test_params_validation_rejects(kwargs):
    with pytest.raises(ValueError):
        StaParams(**kwargs)


def test_params_se_one_is_legal():
    assert StaParams(se=1).se == 1


def test_search_space_basic():
    space = SearchSpace(np.array([-1.0, 0.0]), np.array([1.0, 2.0]))
    assert space.dim == 2
    assert space.contains(np.array([0.0, 1.0]))
    assert space.contains(np.array([1.0, 2.0])), "boundary is feasible"
    assert not space.contains(np.array([1.5, 1.0]))


def test_search_space_uniform():
    space = SearchSpace.uniform(10, -5.12, 5.12)
    assert space.dim == 10
    assert np.all(space.lower == -5.12) and np.all(space.upper == 5.12)


@pytest.mark.parametrize(
    "lower,upper",
    [
        ([0.0, 0.0], [0.0, 1.0]),  # degenerate equal bound
        ([1.0], [0.0]),  # inverted
        ([0.0, 0.0], [1.0]),  # length mismatch
        ([], []),  # empty
        ([0.0, -np.inf], [1.0, 1.0]),  # non-finite
        ([0.0, np.nan], [1.0, 1.0]),
    ],
)
def test_search_space_rejects(lower, upper):
    with pytest.raises(ValueError):
        SearchSpace(np.asarray(lower, dtype=float), np.asarray(upper, dtype=float))


def test_search_space_bounds_are_readonly():
    space = SearchSpace.uniform(3, 0.0, 1.0)
    with pytest.raises(ValueError):
        space.lower[0] = -1.0


def test_solution_coords_readonly_and_fitness_float():
    sol = Solution(np.array([1, 2]), fitness=5)
    assert sol.fitness == 5.0 and isinstance(sol.fitness, float)
    with pytest.raises(ValueError):
        sol.coords[0] = 9.0
    assert Solution(np.array([1.0])).fitness is None


def test_random_source_seed_validation():
    RandomSource(0)
    RandomSource(2**64 - 1)
    with pytest.raises(ValueError):
        RandomSource(-1)
    with pytest.raises(ValueError):
        RandomSource(2**64)


def test_random_source_determinism_100k_per_kind():
    """Same seed, same call sequence, identical 1e5-long streams per kind."""
    for kind in ("uniform", "normal", "integers"):
        a, b = RandomSource(12345), RandomSource(12345)
        if kind == "uniform":
            xa, xb = a.uniform(-1.0, 1.0, 100_000), b.uniform(-1.0, 1.0, 100_000)
        elif kind == "normal":
            xa, xb = a.normal(100_000), b.normal(100_000)
        else:
            xa, xb = a.integers(10, size=100_000), b.integers(10, size=100_000)
        assert np.array_equal(xa, xb), f"{kind} stream not reproducible"


def test_random_source_seeds_differ():
    assert not np.array_equal(
        RandomSource(0).normal(100), RandomSource(1).normal(100)
    )


def test_random_source_ranges():
    rng = RandomSource(7)
    u = rng.uniform(-2.0, 3.0, 10_000)
    assert u.min() >= -2.0 and u.max() <= 3.0
    k = rng.integers(6, size=10_000)
    assert k.min() >= 1 and k.max() <= 6
    assert set(np.unique(k)) == {1, 2, 3, 4, 5, 6}, "all of {1..n} reachable"


def test_run_result_readonly_views():
    res = RunResult(
        best=np.array([1.0]), fbest=2.0, history=np.array([3.0, 2.0]),
        evaluations=60, seed=0,
    )
    with pytest.raises(ValueError):
        res.best[0] = 0.0
    with pytest.raises(ValueError):
        res.history[0] = 0.0


def test_evaluate_batch_scalar_objective():
    def f(x):
        return float(np.sum(x))

    rows = np.arange(6.0).reshape(3, 2)
    assert np.array_equal(evaluate_batch(f, rows), [1.0, 5.0, 9.0])


def test_evaluate_batch_vectorized_objective():
    def f(x):
        return np.sum(np.asarray(x), axis=-1)

    f.supports_batch = True
    rows = np.arange(6.0).reshape(3, 2)
    assert np.array_equal(evaluate_batch(f, rows), [1.0, 5.0, 9.0])


def test_evaluate_batch_rejects_non_2d():
    with pytest.raises(ValueError):
        evaluate_batch(lambda x: 0.0, np.zeros(3))


def test_evaluate_batch_rejects_bad_batch_shape():
    def f(x):
        return np.zeros(5)  # wrong length on purpose

    f.supports_batch = True
    with pytest.raises(TypeError):
        evaluate_batch(f, np.zeros((3, 2)))


def test_call_counter_counts_points_not_calls():
    def f(x):
        x = np.asarray(x)
        return np.sum(x, axis=-1)

    f.supports_batch = True
    counting = CallCounter(f)
    assert counting.supports_batch is True
    counting(np.zeros(4))
    counting(np.zeros((30, 4)))
    assert counting.count == 31


def test_call_counter_plain_objective():
    counting = CallCounter(lambda x: 0.0)
    assert counting.supports_batch is False
    counting(np.zeros(2))
    assert counting.count == 1
