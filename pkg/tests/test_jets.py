import numpy as np
import pytest
from hypothesis import given, strategies as st

from src.exception import DimensionError, DomainError, SingularityError
from src.jets import (
    Jet3,
    compose1,
    constant,
    div,
    fd_check,
    log,
    mul,
    powf,
    powi,
    seed,
    sqrt,
    variables,
)
from src.norms import NormSpec, f_squared_jet, f_value
from tests.strategies import norms, random_direction, seeds

finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)


def test_seed_is_the_coordinate_function():
    x = seed(0, 2.0, 1)
    assert x.value == 2.0
    assert x.grad.tolist() == [1.0]
    assert x.hess.tolist() == [[0.0]]
    assert x.third.tolist() == [[[0.0]]]
    assert seed(1, -0.5, 3).grad.tolist() == [0.0, 1.0, 0.0]


def test_seed_out_of_range():
    with pytest.raises(DimensionError):
        seed(3, 0.0, 2)


def test_cube():
    x = seed(0, 2.0, 1)
    for cube in (x * x * x, powi(x, 3), powf(x, 3.0)):
        assert cube.value == pytest.approx(8.0)
        assert cube.grad[0] == pytest.approx(12.0)
        assert cube.hess[0, 0] == pytest.approx(12.0)
        assert cube.third[0, 0, 0] == pytest.approx(6.0)


def test_sqrt_of_constant():
    r = sqrt(constant(4.0, 2))
    assert r.value == 2.0
    assert not r.grad.any() and not r.hess.any() and not r.third.any()


def test_product_rule():
    p = mul(seed(0, 2.0, 2), seed(1, 3.0, 2))
    assert p.value == 6.0
    assert p.grad.tolist() == [3.0, 2.0]
    assert p.hess.tolist() == [[0.0, 1.0], [1.0, 0.0]]
    assert not p.third.any()


def test_domain_failures():
    zero = constant(0.0, 2)
    with pytest.raises(SingularityError):
        div(seed(0, 1.0, 2), zero)
    with pytest.raises(SingularityError):
        powi(zero, -1)
    with pytest.raises(DomainError):
        sqrt(constant(-1.0, 2))
    with pytest.raises(DomainError):
        powf(zero, 0.5)
    with pytest.raises(DomainError):
        log(zero)
    with pytest.raises(DomainError):
        sqrt(0.0)


def test_jets_are_read_only():
    x = seed(0, 1.0, 2)
    with pytest.raises(ValueError):
        x.grad[0] = 5.0


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        seed(0, 1.0, 2) + seed(0, 1.0, 3)


def test_build_symmetrizes():
    rng = np.random.default_rng(1)
    jet = Jet3.build(1.0, rng.normal(size=3), rng.normal(size=(3, 3)), rng.normal(size=(3, 3, 3)))
    assert jet.is_symmetric()


def test_raw_asymmetric_parts_are_refused():
    hess = np.array([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(AssertionError):
        Jet3(1.0, np.zeros(2), hess, np.zeros((2, 2, 2)))


@given(seeds)
def test_composed_jets_are_exactly_symmetric(s):
    y = np.random.default_rng(s).uniform(0.5, 2.0, size=3)
    v = variables(y)
    f = sqrt(v[0] * v[1] + v[2] * v[2]) / (1.0 + v[0]) + log(v[1]) * powf(v[2], 1.5)
    assert f.is_symmetric()


@given(seeds, finite, finite)
def test_linearity(s, a, b):
    y = np.random.default_rng(s).uniform(0.5, 2.0, size=2)
    v = variables(y)
    f = v[0] * v[1] * v[1]
    g = sqrt(v[0] + v[1])
    combined = a * f + b * g
    for part in ("value", "grad", "hess", "third"):
        expected = a * np.asarray(getattr(f, part)) + b * np.asarray(getattr(g, part))
        np.testing.assert_allclose(getattr(combined, part), expected, rtol=1e-12, atol=1e-12)


def test_compose1_matches_closed_form():
    # exp(x y) at (0.3, 0.7)
    def exp(x):
        e = np.exp(x)
        return e, e, e, e

    x, y = variables([0.3, 0.7])
    f = compose1(exp, x * y)
    e = np.exp(0.21)
    assert f.value == pytest.approx(e)
    np.testing.assert_allclose(f.grad, [0.7 * e, 0.3 * e])
    # d^3/dx^2 dy exp(xy) = y (2 + x y) exp(xy)
    assert f.third[0, 0, 1] == pytest.approx(0.7 * (2.0 + 0.21) * e)


def test_fd_check_euclidean_norm_squared():
    d = fd_check(lambda v: sum(x * x for x in v), [0.3, -1.2, 2.0])
    assert d.max <= 1e-6


def test_fd_check_constant():
    d = fd_check(lambda v: 3.0, [1.0, 2.0])
    assert d.max <= 1e-12


def test_fd_check_randers_f_squared():
    spec = NormSpec.randers(np.eye(3), [0.5, 0.0, 0.0])
    d = fd_check(lambda y: f_value(spec, y) ** 2, [0.6, 0.8, 0.0], jet_fn=lambda y: f_squared_jet(spec, y))
    assert d.order3 <= 1e-5
    assert d.order1 <= 1e-6 and d.order2 <= 1e-6


def test_fd_check_rejects_bad_step():
    with pytest.raises(DomainError):
        fd_check(lambda v: v[0], [1.0], h=0.0)


@given(norms(), seeds)
def test_f_squared_jet_agrees_with_finite_differences(spec, s):
    y = random_direction(np.random.default_rng(s), spec.n)
    y = y / np.sqrt(y @ spec.A @ y)
    jet = f_squared_jet(spec, y)
    d = fd_check(lambda p: f_value(spec, p) ** 2, y, jet_fn=lambda p: f_squared_jet(spec, p))
    assert d.order1 <= 1e-6 * max(1.0, float(np.abs(jet.grad).max()))
    assert d.order2 <= 1e-6 * max(1.0, float(np.abs(jet.hess).max()))
    assert d.order3 <= 1e-4 * max(1.0, float(np.abs(jet.third).max()))
