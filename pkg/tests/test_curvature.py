import numpy as np
import pytest
from hypothesis import given, settings

from src.curvature import (
    curvature_at,
    distortion,
    distortion_gradient,
    fundamental_tensor,
    isotropy_factor,
    log_sqrt_det,
    mean_cartan_torsion,
    s_curvature_bracket,
    s_curvature_frame,
    s_homogeneity_check,
    spray_vertical,
)
from src.exception import ConvexityError, DomainError
from src.liealg import abelian, bracket_m, heisenberg3, killing_constants
from src.norms import NormSpec, PolynomialProfile
from src.oracle import block_matrix, randers_ginv_closed, randers_w_closed
from tests.conftest import SOLVABLE2_S
from tests.strategies import random_algebra, random_direction, random_norm, seeds, triples


def test_riemannian_tensor_is_constant():
    a = np.diag([1.0, 2.0, 3.0])
    spec = NormSpec.riemannian(a)
    y = [0.3, -0.2, 1.1]
    g, g_inv, dg = fundamental_tensor(spec, y)
    np.testing.assert_allclose(g, a, atol=1e-15)
    np.testing.assert_allclose(g_inv, np.linalg.inv(a), atol=1e-15)
    assert not dg.any()
    assert not mean_cartan_torsion(spec, y).any()
    assert not distortion_gradient(spec, y).any()
    assert log_sqrt_det(spec, y) == pytest.approx(0.5 * np.log(6.0))


def test_adapted_randers_values(adapted):
    spec, v = adapted.spec(), adapted.direction()
    tensor = fundamental_tensor(spec, v)
    np.testing.assert_allclose(tensor.g_inv, block_matrix(randers_ginv_closed(adapted), 3), atol=1e-12)
    np.testing.assert_allclose(np.diag(tensor.g_inv), [0.504324, 0.929449, 0.769231], atol=1e-6)
    assert tensor.g_inv[0, 1] == pytest.approx(-0.116523, abs=1e-6)

    cartan = mean_cartan_torsion(spec, v)
    np.testing.assert_allclose(cartan, [0.492308, -0.369231, 0.0], atol=1e-6)
    assert abs(cartan @ v) <= 1e-13

    w = distortion_gradient(spec, v)
    w1, w2 = randers_w_closed(adapted)
    np.testing.assert_allclose(w, [w1, w2, 0.0], atol=1e-9)
    assert w1 == pytest.approx(0.291306, abs=1e-6)


def test_randers_log_sqrt_det_closed_form(adapted):
    # det g = (F / alpha)^(n + 1) det A
    spec, v = adapted.spec(), adapted.direction()
    assert log_sqrt_det(spec, v) == pytest.approx(2.0 * np.log(1.3), rel=1e-13)
    assert distortion(spec, v, 0.5625) == pytest.approx(2.0 * np.log(1.3) - np.log(0.5625), rel=1e-13)


def test_solvable2_randers(solvable2_randers):
    data, spec = solvable2_randers
    kc = killing_constants(data)
    y = [0.6, 0.8]
    assert s_curvature_frame(spec, kc, y) == pytest.approx(SOLVABLE2_S, abs=1e-10)
    assert s_curvature_bracket(spec, data, y) == pytest.approx(SOLVABLE2_S, abs=1e-10)
    at = curvature_at(spec, data, y)
    assert at.S == at.S_frame
    assert at.F == pytest.approx(1.3)


@given(triples(), seeds)
def test_spray_pairs_with_the_bracket(triple, s):
    # g(V, z) = g(y, [y, z]_m) for every z
    data, spec, y = triple
    kc = killing_constants(data)
    v = spray_vertical(spec, kc, y)
    g = fundamental_tensor(spec, y).g
    z = np.random.default_rng(s).normal(size=spec.n)
    lhs = float(z @ g @ v)
    rhs = float(y @ g @ bracket_m(data, y, z))
    assert lhs == pytest.approx(rhs, rel=1e-9, abs=1e-10 * max(1.0, float(np.abs(g).max()) * float(y @ y)))


def test_homogeneity(so3_randers):
    data, spec = so3_randers
    kc = killing_constants(heisenberg3())
    y = np.array([0.3, -0.4, 0.9])
    assert s_homogeneity_check(spec, kc, y, 1.0) == 0.0
    s = s_curvature_frame(spec, kc, y)
    for lam in (2.0, 10.0):
        assert abs(s_homogeneity_check(spec, kc, y, lam)) <= 1e-12 * lam * max(1.0, abs(s))
    with pytest.raises(ValueError):
        s_homogeneity_check(spec, kc, y, -1.0)


@given(triples())
def test_homogeneity_of_every_quantity(triple):
    data, spec, y = triple
    at = curvature_at(spec, data, y)
    scaled = curvature_at(spec, data, 3.0 * y)
    assert scaled.F == pytest.approx(3.0 * at.F, rel=1e-12)
    np.testing.assert_allclose(scaled.g, at.g, rtol=1e-10, atol=1e-12 * np.abs(at.g).max())
    assert scaled.log_sqrt_det == pytest.approx(at.log_sqrt_det, rel=1e-10, abs=1e-12)
    assert scaled.S_frame == pytest.approx(3.0 * at.S_frame, rel=1e-8, abs=1e-10 * max(1.0, abs(at.S_frame)))


def test_nonconvex_profile_raises_convexity_error():
    spec = NormSpec.alpha_beta(np.eye(2), [0.5, 0.0], PolynomialProfile((1.0, 0.0, -3.0)))
    with pytest.raises(ConvexityError) as info:
        curvature_at(spec, abelian(2), [0.0, 1.0])
    np.testing.assert_array_equal(info.value.y, [0.0, 1.0])


def test_zero_vector_raises(so3_randers):
    data, spec = so3_randers
    with pytest.raises(DomainError):
        curvature_at(spec, data, [0.0, 0.0, 0.0])


INVARIANT_BOUNDS = {
    "g_symmetry": 0.0,
    "g_inverse": 1e-11,
    "euler_f2": 1e-12,
    "euler_grad": 1e-12,
    "cartan_y": 1e-12,
    "spray_g_orthogonal": 1e-11,
    "s_formulas": 1e-10,
}


@given(triples())
def test_pointwise_invariants(triple):
    data, spec, y = triple
    residuals = curvature_at(spec, data, y).check()
    assert set(residuals) == set(INVARIANT_BOUNDS)
    for name, value in residuals.items():
        assert value <= INVARIANT_BOUNDS[name], name


def test_vanishing_cases(rng):
    for _ in range(20):
        y = random_direction(rng, 3)
        # abelian: V = 0
        at = curvature_at(random_norm(rng, 3, "alpha_beta"), abelian(3), y)
        assert not at.V.any() and at.S_frame == 0.0
        # Riemannian: I = 0
        at = curvature_at(random_norm(rng, 3, "riemannian"), random_algebra(rng, "bianchi"), y)
        assert abs(at.S_frame) <= 1e-12 and abs(at.S_bracket) <= 1e-12


def test_so3_randers_vanishes(so3_randers):
    # bi-invariant alpha on so3 and an alpha-Killing u
    data, spec = so3_randers
    for y in ([1.0, 0.0, 0.0], [0.3, -0.4, 0.9], [0.0, 2.0, 1.0]):
        assert abs(curvature_at(spec, data, y).S_frame) <= 1e-12


def test_isotropy_factor():
    assert isotropy_factor(SOLVABLE2_S, 1.3, 2) == pytest.approx(SOLVABLE2_S / 3.9)
    assert isotropy_factor(0.0, 2.0, 5) == 0.0


def test_report_dict(solvable2_randers):
    data, spec = solvable2_randers
    report = curvature_at(spec, data, [0.6, 0.8]).dict()
    assert set(report) >= {"F", "I", "w", "V", "S_frame", "S_bracket", "log_sqrt_det"}


@pytest.mark.slow
@settings(max_examples=1000)
@given(triples())
def test_formula_equivalence_sweep(triple):
    data, spec, y = triple
    at = curvature_at(spec, data, y)
    assert abs(at.S_frame - at.S_bracket) <= 1e-10 * max(1.0, abs(at.S_frame))
