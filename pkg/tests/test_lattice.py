import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minkpack.domain import BallSpec, LatticeBasis
from minkpack.lattice import (
    CriticalLatticeKind,
    admissibility_check,
    build_lattice,
    critical_lattice,
    enumerate_points,
)
from minkpack.solvers import critical_constants

SQRT3 = math.sqrt(3.0)


class TestBuildLattice:
    def test_circle_corner_lattice(self):
        # tau = 0, sigma = sqrt(3): 1 + sigma^2 = 4, so b = (-1/2, sqrt(3)/2)
        basis = build_lattice(2.0, 0.0, SQRT3, 0)
        assert basis.a == pytest.approx((1.0, 0.0), abs=1e-15)
        assert basis.b == pytest.approx((-0.5, SQRT3 / 2.0), abs=1e-15)
        assert basis.det == pytest.approx(SQRT3 / 2.0, abs=1e-15)

    @pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 2.5725, 4.0])
    def test_sigma_one_contains_halving_point(self, p):
        constants = critical_constants(p)
        basis = build_lattice(p, constants.tau_p, 1.0, 0)
        expected = 2.0 ** (-1.0 / p)
        assert basis.b == pytest.approx((-expected, expected), abs=1e-14)

    def test_determinant_scales_with_level(self):
        base = build_lattice(2.0, 0.0, SQRT3, 0)
        dilated = build_lattice(2.0, 0.0, SQRT3, 2)
        assert dilated.det == pytest.approx(8.0 * SQRT3, rel=1e-15)
        assert dilated.det == 16.0 * base.det

    def test_rejects_bad_slopes(self):
        with pytest.raises(ValueError):
            build_lattice(2.0, 1.2, 1.0, 0)
        with pytest.raises(ValueError):
            build_lattice(2.0, -0.1, 1.0, 0)

    @given(
        st.floats(1.0, 12.0, allow_nan=False),
        st.floats(0.0, 0.3, allow_nan=False),
        st.floats(1.0, 1.9, allow_nan=False),
    )
    @settings(max_examples=50)
    def test_basis_points_lie_on_boundary(self, p, tau, sigma):
        basis = build_lattice(p, tau, sigma, 0)
        spec = BallSpec(p, 0)
        assert spec.power_sum(basis.a) == pytest.approx(1.0, abs=1e-12)
        assert spec.power_sum(basis.b) == pytest.approx(1.0, abs=1e-12)


class TestCriticalLattice:
    def test_lambda0_circle(self):
        basis = critical_lattice(2.0, CriticalLatticeKind.LAMBDA0, 0)
        assert basis.det == pytest.approx(SQRT3 / 2.0, abs=1e-14)

    def test_lambda1_diamond(self):
        basis = critical_lattice(1.0, CriticalLatticeKind.LAMBDA1, 0)
        assert basis.det == pytest.approx(0.5, abs=1e-14)

    def test_lambda0_doubled(self):
        basis = critical_lattice(2.0, CriticalLatticeKind.LAMBDA0, 1)
        assert basis.det == pytest.approx(2.0 * SQRT3, abs=1e-13)

    @pytest.mark.parametrize("p", [1.0, 1.4, 2.0, 2.3, 2.5725, 3.0, 7.0, 10.0])
    @pytest.mark.parametrize("kind", list(CriticalLatticeKind))
    def test_determinant_matches_branch_value(self, p, kind):
        constants = critical_constants(p)
        for m in (0, 1, 2):
            det = critical_lattice(p, kind, m, constants).det
            expected = constants.delta0 if kind is CriticalLatticeKind.LAMBDA0 else constants.delta1
            assert det == pytest.approx(4.0 ** m * expected, rel=1e-10)


class TestEnumeratePoints:
    def test_unit_square_window(self):
        basis = LatticeBasis((1.0, 0.0), (0.0, 1.0))
        pts = enumerate_points(basis, 1.5)
        assert len(pts) == 8
        assert all(max(abs(x), abs(y)) <= 1.0 for x, y in pts)

    def test_origin_excluded(self):
        basis = LatticeBasis((1.0, 0.0), (-0.5, SQRT3 / 2.0))
        assert (0.0, 0.0) not in enumerate_points(basis, 3.0)

    def test_hexagonal_shortest_shell(self):
        # oracle: brute force over (u, v) in [-3, 3]^2 finds exactly six
        # nonzero points of sup norm <= 1.05 for the hexagonal basis
        basis = LatticeBasis((1.0, 0.0), (-0.5, SQRT3 / 2.0))
        brute = [
            basis.point(u, v)
            for u in range(-3, 4)
            for v in range(-3, 4)
            if (u, v) != (0, 0) and max(abs(basis.point(u, v)[0]), abs(basis.point(u, v)[1])) <= 1.05
        ]
        assert len(brute) == 6
        got = enumerate_points(basis, 1.05)
        assert sorted(got) == sorted(brute)

    @given(
        st.floats(0.5, 3.0),
        st.floats(-1.0, 1.0),
        st.floats(-1.0, 1.0),
        st.floats(0.5, 3.0),
        st.floats(0.5, 6.0),
    )
    @settings(max_examples=40)
    def test_matches_naive_double_loop(self, ax, ay, bx, by, radius):
        if abs(ax * by - ay * bx) < 0.1:
            return
        basis = LatticeBasis((ax, ay), (bx, by))
        got = sorted(enumerate_points(basis, radius))
        n = 40  # generous fixed window for the oracle
        brute = sorted(
            basis.point(u, v)
            for u in range(-n, n + 1)
            for v in range(-n, n + 1)
            if (u, v) != (0, 0)
            and max(abs(basis.point(u, v)[0]), abs(basis.point(u, v)[1])) <= radius
        )
        assert got == brute

    def test_degenerate_window_rejected(self):
        basis = LatticeBasis((1.0, 0.0), (1.0, 1e-9))
        with pytest.raises(ValueError):
            enumerate_points(basis, 10.0)

    def test_radius_validation(self):
        basis = LatticeBasis((1.0, 0.0), (0.0, 1.0))
        with pytest.raises(ValueError):
            enumerate_points(basis, 0.0)


class TestAdmissibility:
    def test_circle_lambda0(self):
        basis = critical_lattice(2.0, CriticalLatticeKind.LAMBDA0, 0)
        assert admissibility_check(basis, BallSpec(2.0, 0)) == (True, 3)

    def test_shrunk_lattice_fails(self):
        basis = critical_lattice(2.0, CriticalLatticeKind.LAMBDA0, 0).scaled(0.9)
        admissible, _ = admissibility_check(basis, BallSpec(2.0, 0))
        assert not admissible

    def test_slight_shrink_fails(self):
        basis = critical_lattice(1.5, CriticalLatticeKind.LAMBDA1, 0).scaled(1.0 - 1e-5)
        admissible, _ = admissibility_check(basis, BallSpec(1.5, 0))
        assert not admissible

    def test_p15_lambda1(self):
        basis = critical_lattice(1.5, CriticalLatticeKind.LAMBDA1, 0)
        assert admissibility_check(basis, BallSpec(1.5, 0)) == (True, 3)

    @pytest.mark.parametrize("kind", list(CriticalLatticeKind))
    def test_contact_points_on_boundary_across_grid(self, kind):
        # all six contacts +-a, +-b, +-(a+b) on the boundary of 2^m D_p;
        # end-to-end check of the parametrization plus the tau_p equation
        for p in np.linspace(1.0, 10.0, 19):
            constants = critical_constants(float(p))
            for m in (0, 1, 2):
                spec = BallSpec(float(p), m)
                basis = critical_lattice(float(p), kind, m, constants)
                a, b = basis.a, basis.b
                for z in (a, b, (a[0] + b[0], a[1] + b[1])):
                    assert abs(spec.power_sum(z) - 1.0) < 1e-10
                    neg = (-z[0], -z[1])
                    assert abs(spec.power_sum(neg) - 1.0) < 1e-10

    def test_diamond_corner_case_pair_counts(self):
        # at exactly p = 1 the tau = 0 lattice gains a fourth contact pair
        # at (0, +-1): the diamond tiles the plane and the generic
        # three-contact picture degenerates; the tau = tau_p lattice keeps 3
        adm0, pairs0 = admissibility_check(
            critical_lattice(1.0, CriticalLatticeKind.LAMBDA0, 0), BallSpec(1.0, 0)
        )
        adm1, pairs1 = admissibility_check(
            critical_lattice(1.0, CriticalLatticeKind.LAMBDA1, 0), BallSpec(1.0, 0)
        )
        assert adm0 and pairs0 == 4
        assert adm1 and pairs1 == 3
