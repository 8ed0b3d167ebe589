from fractions import Fraction as F

import pytest

from ccq.apparent import apparent_abscissas, apparent_singularities
from ccq.errors import DegenerateCurve
from ccq.params import OneDimParam
from ccq.polynomials import BiPoly, UniPoly, gcd
from ccq.realroot import sign_at

CIRCLE2 = OneDimParam(2, BiPoly([(2, 0, 1), (0, 2, 1), (0, 0, -1)]), ())
NODAL2 = OneDimParam(2, BiPoly([(0, 2, 1), (3, 0, -1), (2, 0, -1)]), ())
NODAL3 = OneDimParam(
    3,
    BiPoly([(0, 2, 1), (3, 0, -1), (2, 0, -1)]),
    (BiPoly([(2, 0, 2), (1, 0, 2)]),),
)
TWISTED = OneDimParam(3, BiPoly([(0, 1, 1), (2, 0, -1)]),
                      (BiPoly([(3, 0, 1)]),))


class TestNodalCubic:
    def test_space_intermediates(self):
        res = apparent_singularities(NODAL3)
        assert res.R == UniPoly([0, 0, -4, -4])
        assert res.R_star == UniPoly([0, 1, 1])
        assert res.q == UniPoly([0, 1])
        assert res.sr10.is_zero and res.sr1.degree == 0
        assert res.q_app == UniPoly([0, 1])
        assert not res.degenerate_criterion

    def test_plane_projection_has_no_apparent_nodes(self):
        res = apparent_singularities(NODAL2)
        assert res.q == UniPoly([0, 1])
        assert res.q_app == UniPoly.one()
        assert res.B is None

    def test_abscissas(self):
        roots = apparent_abscissas(apparent_singularities(NODAL3))
        assert len(roots) == 1 and roots[0].value == 0


class TestSmoothCurves:
    def test_circle(self):
        res = apparent_singularities(CIRCLE2)
        assert res.q_app == UniPoly.one()
        assert apparent_abscissas(res) == []

    def test_twisted_cubic(self):
        res = apparent_singularities(TWISTED)
        assert res.q_app == UniPoly.one()
        assert res.R == UniPoly.one()


class TestInvariants:
    def test_divisibility_chain(self):
        res = apparent_singularities(NODAL3)
        assert res.q % res.q_app == UniPoly.zero()
        assert res.R_star % res.q == UniPoly.zero()
        assert res.R % res.R_star == UniPoly.zero()

    def test_q_app_square_free_monic(self):
        res = apparent_singularities(NODAL3)
        assert res.q_app.lc == 1
        assert gcd(res.q_app, res.q_app.derivative()).degree == 0

    def test_roots_are_multiple_roots_of_R(self):
        res = apparent_singularities(NODAL3)
        dR = res.R.derivative()
        for a in apparent_abscissas(res):
            assert sign_at(res.R, a) == 0
            assert sign_at(dR, a) == 0

    def test_scaling_invariance(self):
        # scaling omega and rho3 by the same constant leaves q_app unchanged
        c = F(7)
        scaled = OneDimParam(3, NODAL3.omega * BiPoly([(0, 0, c)]),
                             (NODAL3.rhos[0] * BiPoly([(0, 0, c)]),))
        assert apparent_singularities(scaled).q_app \
            == apparent_singularities(NODAL3).q_app


class TestDegenerate:
    def test_constant_rho_flags_criterion(self):
        # constant rho3 makes the node criterion vanish identically, so the
        # node at x1 = 0 cannot be certified apparent
        C = OneDimParam(3, NODAL3.omega, (BiPoly([(0, 0, 1)]),))
        res = apparent_singularities(C)
        assert res.degenerate_criterion
        assert res.q_app == UniPoly.one()

    def test_non_squarefree_omega(self):
        C = OneDimParam(2, BiPoly([(0, 1, 1), (1, 0, -1)]) ** 2, ())
        with pytest.raises(DegenerateCurve):
            apparent_singularities(C)

    def test_missing_x2(self):
        C = OneDimParam(2, BiPoly([(2, 0, 1), (0, 0, -1)]), ())
        with pytest.raises(DegenerateCurve):
            apparent_singularities(C)
