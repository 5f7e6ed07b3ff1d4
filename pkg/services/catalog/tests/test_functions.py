"""
Tests for model functions: values, closed-form Hessians and Laplacians.
"""

import numpy as np
import pytest

from services.catalog import (
    CatalogError,
    Profile,
    ScaledSum,
    SingularPointError,
    catalog_entries,
    complex_hessian,
    cylindrical,
    evaluate,
    fundamental_solution,
    gradient,
    laplacian,
    radial,
)
from services.hermitian import Setting, eigenvalues

FD_STEP = 1e-4


def real_coordinates(z):
    return np.column_stack([z.real, z.imag]).reshape(-1)


def complex_from_real(x):
    return x[0::2] + 1j * x[1::2]


def fd_real_hessian(function, z, h=FD_STEP):
    """Central-difference Hessian in the 2n real coordinates."""
    x0 = real_coordinates(np.asarray(z, dtype=np.complex128))
    dim = x0.size
    hessian = np.zeros((dim, dim))
    for a in range(dim):
        for b in range(a, dim):
            shifts = []
            for sa, sb in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                x = x0.copy()
                x[a] += sa * h
                x[b] += sb * h
                shifts.append(complex_from_real(x))
            f = function.values(np.array(shifts))
            value = (f[0] - f[1] - f[2] + f[3]) / (4.0 * h * h)
            hessian[a, b] = hessian[b, a] = value
    return hessian


def fd_complex_hessian(function, z):
    real = fd_real_hessian(function, z)
    xx = real[0::2, 0::2]
    yy = real[1::2, 1::2]
    xy = real[0::2, 1::2]
    return 0.25 * (xx + yy + 1j * (xy - xy.T))


def off_pole_points(function, rng, count, low=0.5, high=1.2):
    n = function.dim
    poles = function.poles()
    points = []
    while len(points) < count:
        direction = rng.normal(size=2 * n)
        direction /= np.linalg.norm(direction)
        z = complex_from_real(direction * rng.uniform(low, high))
        if all(float(component.distance(z)) > 0.4 for component in poles):
            points.append(z)
    return points


class TestEvaluate:
    """Tests for point evaluation."""

    def test_quad_is_squared_norm(self):
        quad = radial(Profile.affine(0.0, 1.0), 2)
        assert evaluate(quad, [2.0, 0.0]) == pytest.approx(4.0)

    @pytest.mark.parametrize("n,m", [(2, 1), (3, 2), (4, 2), (4, 3)])
    def test_fundamental_solution_on_unit_sphere(self, n, m):
        setting = Setting(n=n, m=m)
        z = np.zeros(n, dtype=np.complex128)
        z[-1] = 1j
        assert evaluate(fundamental_solution(setting), z) == pytest.approx(-1.0 / setting.power)

    def test_fundamental_solution_n2_m1(self):
        f = fundamental_solution(Setting(n=2, m=1))
        assert evaluate(f, [0.5, 0.0]) == pytest.approx(-4.0)

    def test_cylinder_is_minus_infinity_on_its_pole(self):
        f = cylindrical(Profile.power(0.5), 4, 3)
        assert evaluate(f, [0.0, 0.0, 0.0, 1.0 + 1.0j]) == -np.inf

    def test_log_is_minus_infinity_at_center(self):
        assert evaluate(radial(Profile.log(), 3), [0.0, 0.0, 0.0]) == -np.inf

    def test_base_relative_offsets_keep_precision(self):
        center = np.array([0.5, 0.0, 0.0], dtype=np.complex128)
        f = radial(Profile.power(0.5), 3, center)
        offsets = np.array([[1e-20, 0.0, 0.0]], dtype=np.complex128)
        value = f.values(offsets, base=center)
        assert value[0] == pytest.approx(-1e20, rel=1e-12)


class TestComplexHessian:
    """Closed-form Hessians against finite differences."""

    @pytest.mark.parametrize("n,m", [(2, 1), (3, 2), (4, 2)])
    def test_catalog_hessians_match_finite_differences(self, n, m):
        rng = np.random.default_rng(7)
        for entry in catalog_entries(Setting(n=n, m=m)):
            for z in off_pole_points(entry.function, rng, 20):
                closed = complex_hessian(entry.function, z).entries
                numeric = fd_complex_hessian(entry.function, z)
                scale = max(1.0, float(np.max(np.abs(closed))))
                assert np.max(np.abs(closed - numeric)) <= 1e-5 * scale, entry.name

    @pytest.mark.parametrize("n,m", [(2, 1), (3, 2), (4, 3)])
    def test_laplacian_matches_finite_differences(self, n, m):
        rng = np.random.default_rng(11)
        for entry in catalog_entries(Setting(n=n, m=m)):
            for z in off_pole_points(entry.function, rng, 10):
                numeric = float(np.trace(fd_real_hessian(entry.function, z)))
                closed = laplacian(entry.function, z)
                entries = complex_hessian(entry.function, z).entries
                scale = max(1.0, 4.0 * float(np.sum(np.abs(entries))))
                assert abs(closed - numeric) <= 1e-5 * scale, entry.name

    def test_quad_hessian_is_identity(self):
        quad = radial(Profile.affine(0.0, 1.0), 3)
        matrix = complex_hessian(quad, [0.3, -0.2j, 1.0]).entries
        np.testing.assert_allclose(matrix, np.eye(3), atol=1e-15)

    def test_fundamental_solution_spectrum_n2_m1(self):
        f = fundamental_solution(Setting(n=2, m=1))
        values = eigenvalues(complex_hessian(f, [1.0, 0.0])).values
        np.testing.assert_allclose(values, [-1.0, 1.0], atol=1e-12)

    @pytest.mark.parametrize("n,k", [(3, 1), (3, 2), (4, 3)])
    def test_cylinder_has_n_minus_k_zero_eigenvalues(self, n, k):
        f = cylindrical(Profile.power(0.5), n, k)
        rng = np.random.default_rng(3)
        for z in off_pole_points(f, rng, 10):
            values = eigenvalues(complex_hessian(f, z)).values
            assert int(np.sum(np.abs(values) < 1e-12)) == n - k

    def test_hessian_on_pole_raises(self):
        with pytest.raises(SingularPointError):
            complex_hessian(fundamental_solution(Setting(n=3, m=2)), [0.0, 0.0, 0.0])

    def test_gradient_of_quad(self):
        quad = radial(Profile.affine(0.0, 1.0), 2)
        np.testing.assert_allclose(gradient(quad, [1.0 + 2.0j, -1.0]), [2.0 + 4.0j, -2.0])


class TestConstruction:
    """Validation of catalog constructors."""

    def test_power_needs_positive_exponent(self):
        with pytest.raises(CatalogError):
            Profile.power(0.0)

    def test_cylinder_needs_k_below_n(self):
        with pytest.raises(CatalogError):
            cylindrical(Profile.power(0.5), 3, 3)

    def test_scaled_sum_rejects_negative_coefficients(self):
        f = fundamental_solution(Setting(n=3, m=2))
        with pytest.raises(CatalogError):
            ScaledSum(terms=((-1.0, f),))

    def test_scaled_sum_rejects_mixed_dimensions(self):
        with pytest.raises(CatalogError):
            ScaledSum(
                terms=(
                    (1.0, radial(Profile.log(), 2)),
                    (1.0, radial(Profile.log(), 3)),
                )
            )

    def test_affine_profile_has_no_pole(self):
        assert radial(Profile.affine(-1.0, 1.0), 3).poles() == ()

    def test_scaled_sum_merges_poles(self):
        setting = Setting(n=3, m=2)
        f = fundamental_solution(setting)
        assert len(ScaledSum(terms=((1.0, f), (2.0, f))).poles()) == 1

    def test_radial_center_of_shifted_sum(self):
        setting = Setting(n=3, m=2)
        shifted = fundamental_solution(setting, [0.5, 0.0, 0.0])
        both = ScaledSum(terms=((1.0, fundamental_solution(setting)), (1.0, shifted)))
        assert both.radial_center() is None
        assert shifted.is_radial_about([0.5, 0.0, 0.0])
