import random
from fractions import Fraction as F

import pytest

from ccq.errors import CriticalPoint
from ccq.params import (
    OneDimParam,
    ZeroDimParam,
    genericity_report,
    lift_plane_point,
    validate_one_dim,
    validate_zero_dim,
)
from ccq.polynomials import BiPoly, UniPoly
from ccq.realroot import AlgebraicNumber, isolate

CIRCLE = OneDimParam(2, BiPoly([(2, 0, 1), (0, 2, 1), (0, 0, -1)]), ())
# (t^2 - 1, t^3 - t, t): x3 = rho3 / (d omega / d x2)
NODAL3 = OneDimParam(
    3,
    BiPoly([(0, 2, 1), (3, 0, -1), (2, 0, -1)]),
    (BiPoly([(2, 0, 2), (1, 0, 2)]),),
)
TWISTED = OneDimParam(
    3,
    BiPoly([(0, 1, 1), (2, 0, -1)]),
    (BiPoly([(3, 0, 1)]),),
)


class TestValidateZeroDim:
    def test_two_circle_queries_ok(self):
        P = ZeroDimParam(2, UniPoly([F(18, 25), F(-9, 5), 1]),
                         (UniPoly([F(-48, 25), F(12, 5)]),))
        rep = validate_zero_dim(P)
        assert rep.ok
        assert rep.warnings  # non-integer coefficients accepted with a warning

    def test_not_squarefree(self):
        P = ZeroDimParam(2, UniPoly([1, 2, 1]), (UniPoly([1]),))
        rep = validate_zero_dim(P)
        assert not rep.ok
        assert any("NotSquareFree" in v for v in rep.violations)

    def test_degree_violation(self):
        P = ZeroDimParam(2, UniPoly([-1, 1]), (UniPoly([0, 0, 1]),))
        rep = validate_zero_dim(P)
        assert any("DegreeViolation" in v for v in rep.violations)

    def test_not_monic(self):
        P = ZeroDimParam(2, UniPoly([-1, 2]), (UniPoly([1]),))
        rep = validate_zero_dim(P)
        assert any("NotMonic" in v for v in rep.violations)

    def test_zero_lambda(self):
        rep = validate_zero_dim(ZeroDimParam(2, UniPoly.zero(), (UniPoly([1]),)))
        assert any("ZeroInput" in v for v in rep.violations)

    def test_arity_and_dimension(self):
        rep = validate_zero_dim(ZeroDimParam(1, UniPoly([-1, 1]), ()))
        assert any("DimensionViolation" in v for v in rep.violations)
        rep = validate_zero_dim(ZeroDimParam(3, UniPoly([-1, 1]), (UniPoly([1]),)))
        assert any("ArityViolation" in v for v in rep.violations)

    def test_points_exact(self):
        # roots 3 and 8, theta encodes x2 = t^3 - t at t = 2, -3
        P = ZeroDimParam(2, UniPoly([24, -11, 1]), (UniPoly([24, -18]),))
        assert P.points_exact() == [(F(3), F(6)), (F(8), F(-24))]


class TestValidateOneDim:
    def test_circle_ok(self):
        assert validate_one_dim(CIRCLE).ok

    def test_nodal3_ok(self):
        assert validate_one_dim(NODAL3).ok

    def test_not_monic_in_x2(self):
        C = OneDimParam(2, BiPoly([(0, 2, 2), (0, 0, -1)]), ())
        rep = validate_one_dim(C)
        assert any("NotMonicInX2" in v for v in rep.violations)

    def test_not_monic_in_x1_warns_only(self):
        C = OneDimParam(2, BiPoly([(0, 2, 1), (1, 0, 3)]), ())
        rep = validate_one_dim(C)
        assert rep.ok
        assert any("NotMonicInX1" in w for w in rep.warnings)

    def test_not_squarefree(self):
        C = OneDimParam(2, BiPoly([(0, 1, 1), (1, 0, -1)]) ** 2, ())
        rep = validate_one_dim(C)
        assert any("NotSquareFree" in v for v in rep.violations)

    def test_rho_degree_violation(self):
        C = OneDimParam(3, NODAL3.omega, (BiPoly([(0, 2, 1)]),))
        rep = validate_one_dim(C)
        assert any("DegreeViolation" in v for v in rep.violations)

    def test_missing_x2(self):
        C = OneDimParam(2, BiPoly([(2, 0, 1), (0, 0, -1)]), ())
        rep = validate_one_dim(C)
        assert any("DegenerateCurve" in v for v in rep.violations)

    def test_arity(self):
        rep = validate_one_dim(OneDimParam(3, CIRCLE.omega, ()))
        assert any("ArityViolation" in v for v in rep.violations)


class TestGenericityReport:
    def test_circle_no_queries(self):
        rep = dict(genericity_report(CIRCLE))
        assert rep["resultant_nonzero"] == "pass"
        assert rep["sr1_nonzero_at_critical"] == "pass"
        assert rep["critical_multiplicity_two"] == "pass"
        assert rep["noether_position_H2"] == "unknown"
        assert rep["projection_injectivity_H3"] == "unknown"
        assert rep["no_singular_secants_H6"] == "unknown"

    def test_order_is_stable(self):
        names = [n for n, _ in genericity_report(CIRCLE)]
        assert names == [
            "resultant_nonzero",
            "sr1_nonzero_at_critical",
            "critical_multiplicity_two",
            "queries_avoid_critical_fibers",
            "queries_on_curve",
            "noether_position_H2",
            "projection_injectivity_H3",
            "no_singular_secants_H6",
        ]

    def test_queries_on_curve(self):
        on = ZeroDimParam(2, UniPoly([F(-3, 5), 1]), (UniPoly([F(4, 5)]),))
        rep = dict(genericity_report(CIRCLE, on))
        assert rep["queries_on_curve"] == "pass"
        off = ZeroDimParam(2, UniPoly([F(-3, 5), 1]), (UniPoly([F(1, 5)]),))
        rep = dict(genericity_report(CIRCLE, off))
        assert rep["queries_on_curve"] == "fail"

    def test_queries_on_critical_fiber(self):
        # lambda has root 1, a critical abscissa of the circle
        bad = ZeroDimParam(2, UniPoly([-1, 1]), (UniPoly([0]),))
        rep = dict(genericity_report(CIRCLE, bad))
        assert rep["queries_avoid_critical_fibers"] == "fail"

    def test_nodal3(self):
        rep = dict(genericity_report(NODAL3))
        assert rep["resultant_nonzero"] == "pass"
        assert rep["sr1_nonzero_at_critical"] == "pass"
        assert rep["critical_multiplicity_two"] == "pass"

    def test_degenerate_resultant(self):
        C = OneDimParam(2, BiPoly([(0, 1, 1), (1, 0, -1)]) ** 2, ())
        rep = dict(genericity_report(C))
        assert rep["resultant_nonzero"] == "fail"


class TestLiftPlanePoint:
    def test_rational_examples(self):
        assert lift_plane_point(NODAL3, (F(3), F(6))) == [F(3), F(6), F(2)]
        assert lift_plane_point(NODAL3, (F(8), F(-24))) == [F(8), F(-24), F(-3)]

    def test_critical_point(self):
        with pytest.raises(CriticalPoint):
            lift_plane_point(NODAL3, (F(0), F(0)))

    def test_random_rational_parameters(self):
        rng = random.Random(17)
        for _ in range(50):
            t = F(rng.randint(-40, 40), rng.randint(1, 9))
            if t in (-1, 0, 1):
                continue
            x1, x2 = t * t - 1, t**3 - t
            assert lift_plane_point(NODAL3, (x1, x2)) == [x1, x2, t]

    def test_twisted_cubic(self):
        rng = random.Random(23)
        for _ in range(50):
            t = F(rng.randint(-30, 30), rng.randint(1, 7))
            assert lift_plane_point(TWISTED, (t, t * t)) == [t, t * t, t**3]

    def test_mixed_algebraic(self):
        # x1 = 1, x2 = sqrt(2): the parameter t = x3 is sqrt(2) as well
        s2 = isolate(UniPoly([-2, 0, 1]))[1]
        eps = F(1, 10**8)
        out = lift_plane_point(NODAL3, (F(1), s2), eps)
        assert out[0] == F(1)
        lo, hi = out[2]
        assert hi - lo < eps
        assert float(lo) < 2 ** 0.5 < float(hi)

    def test_both_algebraic(self):
        # omega = x2^2 - x1, x3 = x1 / (2 x2); at (sqrt(2), 2^(1/4)) the
        # third coordinate is 2^(1/4) / 2
        C = OneDimParam(3, BiPoly([(0, 2, 1), (1, 0, -1)]),
                        (BiPoly([(1, 0, 1)]),))
        a = isolate(UniPoly([-2, 0, 1]))[1]
        b = isolate(UniPoly([-2, 0, 0, 0, 1]))[1]
        eps = F(1, 10**6)
        out = lift_plane_point(C, (a, b), eps)
        lo, hi = out[2]
        assert hi - lo < eps
        assert float(lo) < 2 ** 0.25 / 2 < float(hi)
