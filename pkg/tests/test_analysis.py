import numpy as np
import pytest

from src.analysis import (
    Verdict,
    bh_sigma,
    einstein_check,
    exact_sigma_randers,
    geodesic_integrate,
    geodesic_order_check,
    indicatrix_radius,
    refine_distortion_argmax,
    sphere_scan,
    unit_ball_volume,
)
from src.cli.builtin import build_space, builtin_names
from src.exception import DomainError, UnsupportedCaseError
from src.liealg import abelian, e2, heisenberg3, so3
from src.norms import NormSpec, f_values, sphere_directions
from tests.strategies import POLYNOMIAL_PHI


# sphere scan

def test_riemannian_scan_vanishes():
    report = sphere_scan(NormSpec.riemannian(np.diag([1.0, 2.0, 3.0])), so3(), samples=300)
    assert report.verdict is Verdict.VANISHING
    assert report.max_abs_S <= 1e-12
    assert report.corollary_holds


def test_solvable2_randers_is_not_isotropic(solvable2_randers):
    data, spec = solvable2_randers
    report = sphere_scan(spec, data, samples=400)
    assert report.verdict is Verdict.NON_ISOTROPIC
    assert report.var_S_over_F > 1e-3
    # ln sqrt det g peaks at u / |u|_A
    np.testing.assert_allclose(np.abs(report.argmax_distortion), [1.0, 0.0], atol=1e-6)
    assert report.argmax_distortion[0] > 0.0
    assert abs(report.S_at_argmax) <= 1e-8
    assert report.corollary_holds


@pytest.mark.parametrize("name", ["so3-randers-b05", "e2xr1", "abelian3-randers-b05"])
def test_vanishing_randers_spaces(name):
    space = build_space(name)
    report = sphere_scan(space.spec, space.data, samples=200)
    assert report.verdict is Verdict.VANISHING
    assert report.corollary_holds


def test_heisenberg_randers_is_not_isotropic():
    space = build_space("heisenberg3-randers-b05")
    report = sphere_scan(space.spec, space.data, samples=300)
    assert report.verdict is Verdict.NON_ISOTROPIC
    assert abs(report.S_at_argmax) <= 1e-8


@pytest.mark.parametrize("name", builtin_names())
def test_s_vanishes_at_the_distortion_maximum(name):
    space = build_space(name)
    report = sphere_scan(space.spec, space.data, samples=150)
    assert report.verdict is not Verdict.VIOLATION
    assert abs(report.S_at_argmax) <= 1e-8 * max(1.0, report.max_abs_S)


def test_alpha_beta_scan():
    spec = NormSpec.alpha_beta(np.diag([1.0, 2.0, 3.0]), [0.4, 0.0, 0.0], POLYNOMIAL_PHI)
    report = sphere_scan(spec, heisenberg3(), samples=300)
    assert report.verdict is Verdict.NON_ISOTROPIC
    assert report.argmax_gradient_norm <= 1e-8
    assert abs(report.S_at_argmax) <= 1e-8 * max(1.0, report.max_abs_S)


def test_scan_is_deterministic(tmp_path, solvable2_randers):
    data, spec = solvable2_randers
    first = sphere_scan(spec, data, samples=200, seed=5, threads=1)
    second = sphere_scan(spec, data, samples=200, seed=5, threads=4)
    np.testing.assert_array_equal(first.S, second.S)
    np.testing.assert_array_equal(first.argmax_distortion, second.argmax_distortion)
    a = first.write_csv(tmp_path / "a.csv")
    b = second.write_csv(tmp_path / "b.csv")
    assert a.read_bytes() == b.read_bytes()


def test_scan_csv_layout(tmp_path, solvable2_randers):
    data, spec = solvable2_randers
    report = sphere_scan(spec, data, samples=100)
    lines = report.write_csv(tmp_path / "scan.csv").read_text().splitlines()
    assert lines[0] == "y1,y2,F,S,S_over_F,log_sqrt_det"
    assert len(lines) == 101
    y1, y2, f, s, ratio, _ = map(float, lines[1].split(","))
    assert f == pytest.approx(f_values(spec, np.array([[y1, y2]]))[0], rel=1e-14)
    assert ratio == pytest.approx(s / f, rel=1e-14)


def test_scan_arguments(solvable2_randers):
    data, spec = solvable2_randers
    with pytest.raises(ValueError):
        sphere_scan(spec, data, samples=99)
    with pytest.raises(ValueError):
        sphere_scan(spec, so3(), samples=100)


def test_refine_from_a_poor_start():
    spec = NormSpec.randers(np.diag([2.0, 1.0, 0.5]), [0.3, 0.2, 0.1])
    best = refine_distortion_argmax(spec, heisenberg3(), [-0.1, 1.0, 0.3])
    target = spec.u / spec.alpha_norm_u
    np.testing.assert_allclose(best.y, target, atol=1e-7)
    assert best.gradient_norm < 1e-9


def test_einstein_check(solvable2_randers):
    data, spec = solvable2_randers
    assert einstein_check(spec, data, samples=200)
    assert einstein_check(NormSpec.riemannian(np.eye(3)), so3(), samples=100)


# Busemann-Hausdorff sigma

def test_unit_ball_volume():
    assert unit_ball_volume(1) == pytest.approx(2.0)
    assert unit_ball_volume(2) == pytest.approx(np.pi)
    assert unit_ball_volume(3) == pytest.approx(4.0 * np.pi / 3.0)


def test_exact_sigma():
    assert exact_sigma_randers(0.5, 3) == pytest.approx(0.5625)
    assert exact_sigma_randers(0.5, 2) == pytest.approx(0.649519, abs=1e-6)
    assert exact_sigma_randers(0.0, 4, det_a=9.0) == pytest.approx(3.0)
    with pytest.raises(DomainError):
        exact_sigma_randers(1.0, 3)


def test_euclidean_sigma():
    estimate = bh_sigma(NormSpec.riemannian(np.eye(3)), 200_000, seed=1)
    assert abs(estimate.sigma - 1.0) <= 3.0 * estimate.standard_error
    assert estimate.standard_error < 0.01
    assert estimate.inside_fraction == pytest.approx(np.pi / 6.0, abs=0.01)


def test_randers_sigma():
    a = np.diag([1.0, 2.0, 0.5])
    spec = NormSpec.randers(a, [0.5, 0.0, 0.0])
    estimate = bh_sigma(spec, 300_000, seed=2)
    exact = exact_sigma_randers(spec.alpha_norm_u, 3, float(np.linalg.det(a)))
    assert abs(estimate.sigma - exact) <= 3.0 * estimate.standard_error


def test_sigma_is_seed_deterministic():
    spec = NormSpec.randers(np.eye(2), [0.5, 0.0])
    first = bh_sigma(spec, 150_000, seed=4, threads=1)
    second = bh_sigma(spec, 150_000, seed=4, threads=3)
    assert first.sigma == second.sigma
    assert first.dict() == second.dict()


def test_sigma_rotation_invariance():
    angle = 0.7
    rotation = np.array([[np.cos(angle), -np.sin(angle)], [np.sin(angle), np.cos(angle)]])
    spec = NormSpec.randers(np.eye(2), [0.5, 0.0])
    rotated = NormSpec.randers(np.eye(2), rotation @ np.array([0.5, 0.0]))
    first, second = bh_sigma(spec, 200_000, seed=6), bh_sigma(rotated, 200_000, seed=7)
    spread = np.hypot(first.standard_error, second.standard_error)
    assert abs(first.sigma - second.sigma) <= 3.0 * spread


def test_sigma_needs_samples():
    with pytest.raises(ValueError):
        bh_sigma(NormSpec.riemannian(np.eye(2)), 9_999)


def test_indicatrix_radius_contains_the_unit_ball():
    a = np.diag([1.0, 3.0, 0.5])
    for spec in (NormSpec.riemannian(a),
                 NormSpec.randers(a, [0.6, 0.0, 0.0]),
                 NormSpec.alpha_beta(a, [0.4, 0.0, 0.0], POLYNOMIAL_PHI)):
        radius = indicatrix_radius(spec)
        ys = sphere_directions(a, 3000, seed=11)
        # alpha(y) = 1, so F(radius y) = radius F(y) >= 1
        assert f_values(spec, radius * ys).min() >= 1.0 - 1e-12


# geodesics

def test_abelian_geodesics_are_constant():
    spec = NormSpec.randers(np.eye(3), [0.5, 0.0, 0.0])
    trajectory = geodesic_integrate(spec, abelian(3), [0.3, 0.2, 1.0], 5.0, 0.1)
    assert trajectory.steps == 50
    np.testing.assert_array_equal(trajectory.ys[-1], [0.3, 0.2, 1.0])
    assert trajectory.max_drift == 0.0


def test_geodesics_need_a_group():
    with pytest.raises(UnsupportedCaseError):
        geodesic_integrate(NormSpec.riemannian(np.eye(2)), e2(), [1.0, 0.0], 1.0, 0.1)


def test_geodesic_arguments():
    spec = NormSpec.riemannian(np.eye(3))
    with pytest.raises(ValueError):
        geodesic_integrate(spec, so3(), [1.0, 0.0, 0.0], 1.0, 0.0)
    with pytest.raises(ValueError):
        geodesic_integrate(spec, so3(), [1.0, 0.0, 0.0], -1.0, 0.1)
    with pytest.raises(DomainError):
        geodesic_integrate(spec, so3(), [0.0, 0.0, 0.0], 1.0, 0.1)


def test_uneven_final_step():
    trajectory = geodesic_integrate(NormSpec.riemannian(np.eye(3)), so3(), [1.0, 0.5, 0.0], 1.0, 0.3)
    assert trajectory.steps == 4
    assert trajectory.times[-1] == 1.0


def test_trajectory_report():
    spec = NormSpec.riemannian(np.diag([1.0, 2.0, 3.0]))
    report = geodesic_integrate(spec, so3(), [1.0, 0.1, 0.1], 1.0, 0.01).dict()
    assert report["steps"] == 100
    assert report["F0"] == pytest.approx(np.sqrt(1.05))
    assert report["relative_drift"] <= 1e-6


@pytest.mark.slow
@pytest.mark.parametrize("case", ["so3", "solvable2"])
def test_f_is_conserved(case, solvable2_randers):
    if case == "so3":
        spec, data, y0 = NormSpec.riemannian(np.diag([1.0, 2.0, 3.0])), so3(), [1.0, 0.1, 0.1]
    else:
        (data, spec), y0 = solvable2_randers, [0.6, 0.8]
    trajectory = geodesic_integrate(spec, data, y0, 10.0, 1e-3)
    assert trajectory.relative_drift <= 1e-8


def test_rk4_order():
    spec = NormSpec.riemannian(np.diag([1.0, 2.0, 3.0]))
    check = geodesic_order_check(spec, so3(), [1.0, 0.1, 0.1], 10.0, 0.1)
    assert 8.0 <= check.ratio <= 32.0
    assert check.dict()["observed_order"] == pytest.approx(np.log2(check.ratio))


def test_solvable2_geodesic_keeps_f(solvable2_randers):
    data, spec = solvable2_randers
    trajectory = geodesic_integrate(spec, data, [0.6, 0.8], 2.0, 1e-3)
    assert trajectory.relative_drift <= 1e-8
    assert trajectory.F[0] == pytest.approx(1.3)


@pytest.mark.slow
def test_heisenberg_geodesic_keeps_f():
    trajectory = geodesic_integrate(NormSpec.riemannian(np.eye(3)), heisenberg3(), [1.0, 0.0, 0.2], 10.0, 1e-3)
    assert trajectory.relative_drift <= 1e-8


@pytest.mark.slow
def test_so3_randers_scan_vanishes_everywhere():
    report = sphere_scan(NormSpec.randers(np.eye(3), [0.2, -0.5, 0.4]), so3(), samples=10_000)
    assert report.max_abs_S <= 1e-10
    assert report.verdict is Verdict.VANISHING


@pytest.mark.slow
@pytest.mark.parametrize("b", [0.3, 0.5, 0.7])
@pytest.mark.parametrize("n", [2, 3])
def test_randers_sigma_sweep(b, n):
    u = np.zeros(n)
    u[0] = b
    estimate = bh_sigma(NormSpec.randers(np.eye(n), u), 1_000_000, seed=0)
    assert abs(estimate.sigma - exact_sigma_randers(b, n)) <= 3.0 * estimate.standard_error
