import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gridcycles import counting, transfer
from gridcycles.exactmat import (
    CountMatrix,
    amplitude_estimate,
    dominant_eigenvalue,
    mat_mul,
    mat_pow,
    selected_trace,
)

N2 = CountMatrix([[1, 2], [2, 1]])  # zero component of width 2
B2 = CountMatrix([[0, 2], [2, 0]])

small_matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(0, 9), min_size=n, max_size=n), min_size=n, max_size=n
    ).map(CountMatrix)
)


def test_mat_mul_examples():
    eye = CountMatrix.identity(2)
    assert mat_mul(eye, N2) == N2
    assert mat_mul(N2, N2).rows == [[5, 4], [4, 5]]
    with pytest.raises(ValueError):
        mat_mul(N2, CountMatrix.identity(3))


def test_mat_pow_examples():
    assert mat_pow(N2, 0) == CountMatrix.identity(2)
    assert mat_pow(N2, 1) == N2
    assert mat_pow(N2, 3).entry(0, 0) == 13
    with pytest.raises(ValueError):
        mat_pow(N2, -1)


def test_power_entry_reproduces_cylinder_counts():
    for n in range(1, 12):
        assert mat_pow(N2, n).entry(0, 0) == counting.count_tnc(2, n)


@settings(max_examples=60)
@given(small_matrices, st.integers(0, 6), st.integers(0, 6))
def test_pow_addition_law(a, i, j):
    assert mat_pow(a, i + j) == mat_mul(mat_pow(a, i), mat_pow(a, j))


@pytest.mark.parametrize("m", range(2, 7))
def test_symmetric_powers_stay_symmetric(m):
    d = transfer.build_reduced(m)
    a = CountMatrix.from_array(d.adj)
    p = CountMatrix.identity(a.n)
    for _ in range(50):
        p = mat_mul(p, a)
        assert p.is_symmetric()


def test_selected_trace():
    p2 = mat_pow(N2, 2)
    assert selected_trace(p2, [(0, 0), (1, 1)]) == 10
    # both components of width 2 together give the torus count
    b2 = mat_pow(B2, 2)
    assert selected_trace(p2, [(0, 0), (1, 1)]) + selected_trace(
        b2, [(0, 0), (1, 1)]
    ) == 18 == counting.count_tg(2, 0, 2)
    with pytest.raises(IndexError):
        selected_trace(p2, [(0, 2)])


def test_dominant_eigenvalue_examples():
    assert dominant_eigenvalue(np.array([[4.5]])).theta == 4.5
    s = dominant_eigenvalue(N2.to_float())
    assert abs(s.theta - 3.0) < 1e-11
    assert s.residual <= 1e-12
    d = transfer.build_reduced(4)
    census = transfer.components(d)
    sub = transfer.component_subdigraph(d, census, census.zero_id)
    s4 = dominant_eigenvalue(sub.adj.astype(float), tol=1e-12)
    assert abs(s4.theta - 6.37228132326901) < 1e-9


def test_dominant_eigenvalue_periodic_component():
    # bipartite component: plain power iteration would oscillate
    s = dominant_eigenvalue(B2.to_float())
    assert abs(s.theta - 2.0) < 1e-11


def test_residuals_shrink_after_burn_in():
    d = transfer.build_reduced(5)
    census = transfer.components(d)
    sub = transfer.component_subdigraph(d, census, census.zero_id)
    log: list[float] = []
    dominant_eigenvalue(sub.adj.astype(float), tol=1e-12, residual_log=log)
    burn = len(log) // 4
    tail = log[burn:]
    assert all(b <= a * 1.0001 + 1e-15 for a, b in zip(tail, tail[1:]))


def test_nonconvergence_reported():
    d = transfer.build_reduced(4)
    census = transfer.components(d)
    sub = transfer.component_subdigraph(d, census, census.zero_id)
    with pytest.raises(ArithmeticError):
        dominant_eigenvalue(sub.adj.astype(float), tol=1e-15, max_iter=1)


@pytest.mark.parametrize(
    "m,expected",
    [(2, 0.5), (3, 0.361324950944), (4, 0.206480586011)],
)
def test_amplitude_estimates(m, expected):
    assert abs(amplitude_estimate(m) - expected) <= 1e-6


def test_amplitude_only_for_cylinders():
    with pytest.raises(ValueError):
        amplitude_estimate(3, family="tg")


@pytest.mark.parametrize("m", range(2, 7))
def test_torus_amplitude_behaviour(m):
    # torus counts scale like theta^n, with coefficient 1 for even widths
    # and 2 for odd widths at desk scale
    theta = counting.zero_component_spectrum(m).theta
    values = counting.series(counting.GridSpec("tg", m, 0), 60).values
    ratio = values[-1] / theta**60
    assert abs(ratio - (1 if m % 2 == 0 else 2)) <= 0.05
