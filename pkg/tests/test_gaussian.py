"""Tests for the Gaussian-integer good involution."""

import pytest

from symquandle.core.gaussian import (
    I,
    MINUS_I,
    ORBIT_REPS,
    PRINTED_SIGN_TABLE,
    SIGN_TABLE,
    GaussInt,
    GaussVector,
    gauss_form,
    gauss_form_properties,
    gauss_inv_op,
    gauss_op,
    orbit_members,
    orbit_rep,
    residue_bar,
    rho,
    run_gaussian_suite,
    scale_residue,
    sigma,
    sign_table_failures,
    v3,
)
from symquandle.errors import ZeroVector


class TestGaussInt:
    """Tests for GaussInt arithmetic."""

    def test_i_squared(self) -> None:
        assert I * I == GaussInt(-1)
        assert I * MINUS_I == GaussInt(1)

    def test_scalar_mul(self) -> None:
        assert GaussInt(2, -1) * 3 == GaussInt(6, -3)
        assert 3 * GaussInt(2, -1) == GaussInt(6, -3)

    def test_str(self) -> None:
        assert str(GaussInt(3, 6)) == "3+6i"
        assert str(GaussInt(0, -2)) == "-2i"
        assert str(GaussInt(4)) == "4"
        assert str(GaussInt(1, -1)) == "1-1i"


class TestOperation:
    """Tests for gauss_op() and gauss_form()."""

    def test_basis_product(self) -> None:
        e1 = GaussVector.of(1, 0, 0, 0)
        e2 = GaussVector.of(0, 0, 1, 0)
        assert gauss_form(e1, e2) == GaussInt(3)
        assert gauss_op(e1, e2) == GaussVector.of(1, 0, 3, 0)

    def test_alternating(self) -> None:
        x = GaussVector.of(2, -1, 5, 7)
        assert gauss_form(x, x).is_zero()

    def test_inverse(self) -> None:
        x = GaussVector.of(1, 2, -3, 4)
        y = GaussVector.of(0, 1, 1, -1)
        assert gauss_inv_op(gauss_op(x, y), y) == x

    def test_form_properties(self) -> None:
        props = gauss_form_properties()
        assert props == {"determinant": "9", "nondegenerate": True, "unimodular": False}


class TestValuation:
    """Tests for v3() and residue_bar()."""

    def test_v3(self) -> None:
        assert v3(GaussVector.of(3, 6, 9, 0)) == 1
        assert v3(GaussVector.of(1, 1, 0, 0)) == 0
        assert v3(GaussVector.of(0, -9, 27, 0)) == 2

    def test_residues(self) -> None:
        assert residue_bar(GaussVector.of(3, 0, 0, 6)) == (1, 0, 0, 2)
        assert residue_bar(GaussVector.of(1, 0, 1, 0)) == (1, 0, 1, 0)
        assert residue_bar(GaussVector.of(2, 2, 0, 0)) == (2, 2, 0, 0)

    def test_negative_coefficients(self) -> None:
        assert residue_bar(GaussVector.of(-3, 0, 0, 0)) == (2, 0, 0, 0)

    def test_zero_rejected(self) -> None:
        zero = GaussVector.of(0, 0, 0, 0)
        with pytest.raises(ZeroVector):
            v3(zero)
        with pytest.raises(ZeroVector):
            residue_bar(zero)


class TestOrbits:
    """Tests for the unit-group orbits on nonzero residues."""

    def test_twenty_orbits(self) -> None:
        assert len(ORBIT_REPS) == 20

    def test_orbit_sizes(self) -> None:
        for rep in ORBIT_REPS:
            assert len(orbit_members(rep)) == 4

    def test_rep_is_minimum(self) -> None:
        for rep in ORBIT_REPS:
            assert rep == min(orbit_members(rep))

    def test_rep_of_e1(self) -> None:
        # i * (1,0) = (i,0) sorts first
        assert orbit_rep((1, 0, 0, 0)) == ((0, 1, 0, 0), "-is")

    def test_zero_has_no_orbit(self) -> None:
        with pytest.raises(ZeroVector):
            orbit_rep((0, 0, 0, 0))


class TestSignTable:
    """Tests for sigma() and the sign tables."""

    def test_sigma_squared_is_minus_one(self) -> None:
        for rep in ORBIT_REPS:
            for member in orbit_members(rep):
                s = sigma(member)
                assert s * s == GaussInt(-1)

    def test_sign_map(self) -> None:
        for rep in ORBIT_REPS:
            for member in orbit_members(rep):
                s = sigma(member)
                assert sigma(scale_residue(s, member)) == -s

    def test_table_is_consistent(self) -> None:
        assert sign_table_failures(SIGN_TABLE) == []

    def test_printed_variant_fails_on_half(self) -> None:
        assert len(sign_table_failures(PRINTED_SIGN_TABLE)) == 40

    def test_scale_residue_rejects_non_unit(self) -> None:
        with pytest.raises(ValueError):
            scale_residue(GaussInt(2), (1, 0, 0, 0))


class TestRho:
    """Tests for rho()."""

    def test_zero_fixed(self) -> None:
        zero = GaussVector.of(0, 0, 0, 0)
        assert rho(zero) == zero

    @pytest.mark.parametrize(
        "x",
        [
            GaussVector.of(1, 0, 0, 0),
            GaussVector.of(3, 6, 9, 0),
            GaussVector.of(-4, 2, 7, -11),
            GaussVector.of(0, 0, 0, 27),
        ],
    )
    def test_involutive_and_valuation(self, x: GaussVector) -> None:
        assert rho(rho(x)) == x
        assert rho(x) != x
        assert v3(rho(x)) == v3(x)

    def test_conditions_on_pair(self) -> None:
        x = GaussVector.of(2, 1, -1, 3)
        y = GaussVector.of(1, -2, 0, 5)
        assert rho(gauss_op(x, y)) == gauss_op(rho(x), y)
        assert gauss_op(x, rho(y)) == gauss_inv_op(x, y)


class TestSuite:
    """Tests for run_gaussian_suite()."""

    def test_small_bound(self) -> None:
        result = run_gaussian_suite(samples=500, coeff_bound=1, seed=0)
        assert result.total_failures == 0
        assert result.residue_checks == {
            "nonzero_residues": 80,
            "orbits": 20,
            "printed_sign_table_failures": 40,
        }

    def test_wide_bound(self) -> None:
        result = run_gaussian_suite(samples=300, coeff_bound=1000, seed=7)
        assert result.total_failures == 0
        assert set(result.failures) >= {"inverse_op", "involutive", "condition1", "condition2"}

    def test_deterministic(self) -> None:
        a = run_gaussian_suite(samples=50, coeff_bound=20, seed=3).to_json()
        b = run_gaussian_suite(samples=50, coeff_bound=20, seed=3).to_json()
        assert a == b

    def test_rejects_bad_arguments(self) -> None:
        with pytest.raises(ValueError):
            run_gaussian_suite(samples=0, coeff_bound=5, seed=0)
        with pytest.raises(ValueError):
            run_gaussian_suite(samples=10, coeff_bound=-1, seed=0)
