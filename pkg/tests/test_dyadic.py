import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from minkpack.domain import BallSpec, lp_power_sum
from minkpack.dyadic import (
    DirectSystem,
    SystemKind,
    lattice_chain,
    limit_membership,
    subgroup_index,
    transition,
)
from minkpack.lattice import CriticalLatticeKind, admissibility_check, critical_lattice

SQRT3 = math.sqrt(3.0)

BALLS = DirectSystem(SystemKind.BALLS, 2.0)
LATTICES = DirectSystem(SystemKind.LATTICES, 2.0)

finite_pts = st.tuples(
    st.floats(-1e6, 1e6, allow_nan=False), st.floats(-1e6, 1e6, allow_nan=False)
)


class TestTransition:
    def test_identity(self):
        assert transition(BALLS, 0, 0, (0.3, -0.7)) == (0.3, -0.7)

    def test_two_level_step(self):
        assert transition(BALLS, 1, 3, (1.0, 0.0)) == (4.0, 0.0)

    def test_order_violation(self):
        with pytest.raises(ValueError):
            transition(BALLS, 3, 1, (1.0, 0.0))

    def test_level_validation(self):
        with pytest.raises(ValueError):
            transition(BALLS, -1, 0, (1.0, 0.0))

    @given(finite_pts, st.integers(0, 16), st.integers(0, 16), st.integers(0, 16))
    @settings(max_examples=100)
    def test_functor_laws_exact(self, pt, i, j, k):
        m, n, kk = sorted((i, j, k))
        assert transition(LATTICES, m, m, pt) == pt
        one_hop = transition(LATTICES, m, kk, pt)
        two_hops = transition(LATTICES, n, kk, transition(LATTICES, m, n, pt))
        assert one_hop == two_hops

    def test_system_validation(self):
        with pytest.raises(ValueError):
            DirectSystem(SystemKind.BALLS, 0.5)


class TestLimitMembership:
    def test_origin(self):
        assert limit_membership(2.0, (0.0, 0.0)) == (True, 0)

    def test_gauge_three(self):
        # gauge 3 lies in (2, 4], so the minimal level is 2
        assert limit_membership(2.0, (3.0, 0.0)) == (True, 2)

    def test_diamond_corner(self):
        # |1| + |1| = 2 lies in (1, 2], so the minimal level is 1
        assert limit_membership(1.0, (1.0, 1.0)) == (True, 1)

    @pytest.mark.parametrize("k", [0, 1, 2, 5, 10])
    def test_exact_powers_of_two_on_boundary(self, k):
        # the boundary is included, so gauge exactly 2^k gives level k
        assert limit_membership(2.0, (2.0 ** k, 0.0)) == (True, k)

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            limit_membership(2.0, (math.inf, 0.0))

    @given(st.floats(1.0, 12.0, allow_nan=False), finite_pts)
    @settings(max_examples=150)
    def test_level_is_minimal(self, p, pt):
        member, level = limit_membership(p, pt)
        assert member
        assert lp_power_sum(p, pt, 2.0 ** level) <= 1.0
        if level > 0:
            assert lp_power_sum(p, pt, 2.0 ** (level - 1)) > 1.0

    @given(st.floats(1.0, 8.0, allow_nan=False), finite_pts)
    @settings(max_examples=80)
    def test_cofinality_of_even_levels(self, p, pt):
        # restricting to the even levels changes the answer by at most one
        _, level = limit_membership(p, pt)
        even_level = level if level % 2 == 0 else level + 1
        assert lp_power_sum(p, pt, 2.0 ** even_level) <= 1.0
        assert even_level - level <= 1


class TestLatticeChain:
    def test_determinant_ladder(self):
        chain = lattice_chain(2.0, CriticalLatticeKind.LAMBDA0, 2)
        dets = [basis.det for basis in chain]
        assert dets[0] == pytest.approx(SQRT3 / 2.0, abs=1e-14)
        assert dets[1] == pytest.approx(2.0 * SQRT3, abs=1e-13)
        assert dets[2] == pytest.approx(8.0 * SQRT3, abs=1e-13)

    def test_entries_match_critical_lattice(self):
        chain = lattice_chain(1.7, CriticalLatticeKind.LAMBDA1, 4)
        for m, basis in enumerate(chain):
            direct = critical_lattice(1.7, CriticalLatticeKind.LAMBDA1, m)
            assert abs(basis.a[0] - direct.a[0]) < 1e-14
            assert abs(basis.a[1] - direct.a[1]) < 1e-14
            assert abs(basis.b[0] - direct.b[0]) < 1e-14
            assert abs(basis.b[1] - direct.b[1]) < 1e-14

    def test_each_entry_sublattice_of_previous(self):
        chain = lattice_chain(2.3, CriticalLatticeKind.LAMBDA0, 3)
        for prev, cur in zip(chain, chain[1:]):
            for u, v in [(1, 0), (0, 1), (2, -3), (-5, 4)]:
                # doubling doubles coordinates: the point (u, v) of the
                # doubled lattice is the point (2u, 2v) of its predecessor
                assert cur.point(u, v) == prev.point(2 * u, 2 * v)

    def test_subgroup_index_is_four_per_level(self):
        chain = lattice_chain(3.0, CriticalLatticeKind.LAMBDA1, 3)
        for prev, cur in zip(chain, chain[1:]):
            assert subgroup_index(cur, prev) == pytest.approx(4.0, rel=1e-14)

    def test_entries_admissible_for_their_level(self):
        chain = lattice_chain(1.8, CriticalLatticeKind.LAMBDA1, 2)
        for m, basis in enumerate(chain):
            admissible, pairs = admissibility_check(basis, BallSpec(1.8, m))
            assert admissible
            assert pairs == 3

    def test_depth_validation(self):
        with pytest.raises(ValueError):
            lattice_chain(2.0, CriticalLatticeKind.LAMBDA0, 0)
