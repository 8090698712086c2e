import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from minkpack.domain import (
    BallSpec,
    DomainClass,
    LatticeBasis,
    classify,
    lp_gauge,
    lp_power_sum,
    shoelace_area,
)

DC = 2.5725  # nominal Davis constant for classification tests


class TestClassify:
    @pytest.mark.parametrize(
        "p,expected",
        [
            (1.0, DomainClass.MINKOWSKI),
            (1.5, DomainClass.MINKOWSKI),
            (2.0, DomainClass.DAVIS),
            (2.5, DomainClass.DAVIS),
            (2.5725, DomainClass.CHEBYSHEV_COHN),
            (3.0, DomainClass.CHEBYSHEV_COHN),
        ],
    )
    def test_examples(self, p, expected):
        assert classify(p, DC) is expected

    def test_rejects_p_below_one(self):
        with pytest.raises(ValueError):
            classify(0.5, DC)

    def test_rejects_davis_constant_outside_bracket(self):
        with pytest.raises(ValueError):
            classify(2.0, 2.6)
        with pytest.raises(ValueError):
            classify(2.0, 2.0)

    @given(st.floats(min_value=1.0, max_value=100.0, allow_nan=False))
    def test_partition(self, p):
        # total on [1, inf) and consistent with the boundary conventions
        cls = classify(p, DC)
        if p < 2.0:
            assert cls is DomainClass.MINKOWSKI
        elif p < DC:
            assert cls is DomainClass.DAVIS
        else:
            assert cls is DomainClass.CHEBYSHEV_COHN


class TestBallSpec:
    def test_scale(self):
        assert BallSpec(2.0, 3).scale == 8.0

    def test_contains_boundary(self):
        spec = BallSpec(2.0, 1)
        assert spec.contains((2.0, 0.0))
        assert not spec.contains((2.0 + 1e-9, 0.0))

    @pytest.mark.parametrize("p,m", [(0.99, 0), (2.0, -1), (2.0, 1.5)])
    def test_validation(self, p, m):
        with pytest.raises(ValueError):
            BallSpec(p, m)


class TestLatticeBasis:
    def test_det_recomputed(self):
        basis = LatticeBasis((1.0, 0.0), (-0.5, 0.5))
        assert basis.det == 0.5
        assert basis.scaled(2.0).det == 2.0

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            LatticeBasis((1.0, 2.0), (2.0, 4.0))

    def test_point(self):
        basis = LatticeBasis((1.0, 0.0), (0.0, 1.0))
        assert basis.point(2, -3) == (2.0, -3.0)

    @given(
        st.tuples(
            st.floats(-10, 10, allow_nan=False),
            st.floats(-10, 10, allow_nan=False),
            st.floats(-10, 10, allow_nan=False),
            st.floats(-10, 10, allow_nan=False),
        ).filter(lambda t: abs(t[0] * t[3] - t[1] * t[2]) > 1e-6)
    )
    def test_det_is_absolute_cross_product(self, t):
        ax, ay, bx, by = t
        basis = LatticeBasis((ax, ay), (bx, by))
        assert basis.det == abs(ax * by - ay * bx)


class TestGauge:
    def test_origin(self):
        assert lp_gauge(2.0, (0.0, 0.0)) == 0.0

    @pytest.mark.parametrize("p", [1.0, 1.5, 2.0, 3.0, 10.0])
    def test_boundary_points_have_unit_gauge(self, p):
        x = 0.4
        y = (1.0 - x ** p) ** (1.0 / p)
        assert lp_gauge(p, (x, y)) == pytest.approx(1.0, abs=1e-14)

    @given(
        st.floats(1.0, 30.0, allow_nan=False),
        st.floats(-50.0, 50.0, allow_nan=False),
        st.floats(-50.0, 50.0, allow_nan=False),
        st.floats(0.1, 8.0, allow_nan=False),
    )
    def test_positive_homogeneity(self, p, x, y, t):
        g = lp_gauge(p, (x, y))
        assert lp_gauge(p, (t * x, t * y)) == pytest.approx(t * g, rel=1e-12, abs=1e-12)

    def test_power_sum_scale(self):
        assert lp_power_sum(1.0, (1.0, 1.0), 2.0) == pytest.approx(1.0, abs=1e-15)


def test_shoelace_unit_square():
    square = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]
    assert shoelace_area(square) == 1.0


def test_shoelace_regular_hexagon():
    verts = [
        (math.cos(k * math.pi / 3.0), math.sin(k * math.pi / 3.0)) for k in range(6)
    ]
    assert shoelace_area(verts) == pytest.approx(3.0 * math.sqrt(3.0) / 2.0, abs=1e-14)
