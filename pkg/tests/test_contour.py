"""Arc integral, Cauchy oracle, and the proof-region numeric witnesses."""

import mpmath as mp
import pytest

from radpfd.contour import (
    MonotoneReport,
    QuadratureSpec,
    QuadratureWarning,
    arc_spec,
    cauchy_oracle,
    check_lower_bound_inequality,
    check_monotone_exponent,
    constant_c,
    constant_c_euler_check,
    integral_approx_C,
    integral_approx_at,
    integral_approx_full,
    oracle_spec,
)

PREC = 256


def _as_mpf(q, precision=PREC):
    with mp.workprec(precision + 32):
        return mp.mpf(q.numerator) / q.denominator


class TestQuadratureSpec:
    def test_validation(self):
        with pytest.raises(ValueError, match="at least 8 nodes"):
            QuadratureSpec(nodes=4, precision=128, radius=1.0, rule="trapezoid_periodic")
        with pytest.raises(ValueError, match="precision"):
            QuadratureSpec(nodes=16, precision=32, radius=1.0, rule="trapezoid_periodic")
        with pytest.raises(ValueError, match="radius"):
            QuadratureSpec(nodes=16, precision=128, radius=0.0, rule="trapezoid_periodic")
        with pytest.raises(ValueError, match="unknown rule"):
            QuadratureSpec(nodes=16, precision=128, radius=1.0, rule="simpson")

    def test_helper_constructors(self):
        s = oracle_spec(20)
        assert s.radius == pytest.approx(0.15)
        assert s.precision >= 64 + 30
        assert arc_spec().radius == 5.0


class TestCauchyOracle:
    def test_hand_value_n1(self):
        spec = QuadratureSpec(nodes=64, precision=128, radius=0.5, rule="trapezoid_periodic")
        got = cauchy_oracle(1, 1, spec)
        assert abs(got.value + 1) < mp.mpf("1e-20")

    def test_hand_value_n2_l2(self):
        spec = QuadratureSpec(nodes=64, precision=128, radius=0.5, rule="trapezoid_periodic")
        got = cauchy_oracle(2, 2, spec)
        assert abs(got.value - mp.mpf("0.5")) < mp.mpf("1e-20")

    def test_matches_exact_at_n20_high_precision(self, small_vectors):
        got = cauchy_oracle(1, 20, oracle_spec(20, precision=512))
        exact = _as_mpf(small_vectors[20].coeff(1), 512)
        with mp.workprec(512):
            assert abs(got.value - exact) < mp.mpf("1e-20")

    def test_radius_precondition(self):
        spec = QuadratureSpec(nodes=64, precision=256, radius=0.7, rule="trapezoid_periodic")
        with pytest.raises(ValueError, match="pole"):
            cauchy_oracle(1, 10, spec)

    def test_precision_precondition(self):
        spec = QuadratureSpec(nodes=256, precision=64, radius=0.1, rule="trapezoid_periodic")
        with pytest.raises(ValueError, match="precision too low"):
            cauchy_oracle(1, 30, spec)

    def test_rule_precondition(self):
        with pytest.raises(ValueError, match="trapezoid_periodic"):
            cauchy_oracle(1, 5, arc_spec())

    def test_doubling_delta_decays_spectrally(self):
        deltas = []
        for nodes in (32, 64):
            spec = QuadratureSpec(
                nodes=nodes, precision=128, radius=0.3, rule="trapezoid_periodic"
            )
            deltas.append(cauchy_oracle(1, 10, spec).node_doubling_delta)
        assert deltas[0] > 10 * deltas[1]


class TestArcIntegral:
    def test_tracks_exact_at_n20(self, small_vectors):
        v = integral_approx_C(1, 20, arc_spec(64, PREC))
        exact = _as_mpf(small_vectors[20].coeff(1))
        with mp.workprec(PREC):
            assert abs(v - exact) / abs(exact) < mp.mpf("0.2")

    def test_tracks_exact_at_n60(self, mid_vectors):
        v = integral_approx_C(1, 60, arc_spec(64, PREC))
        exact = _as_mpf(mid_vectors[60].coeff(1))
        with mp.workprec(PREC):
            assert abs(v - exact) / abs(exact) < mp.mpf("0.1")

    def test_sign_against_exact_at_n5(self, small_vectors):
        # Pins the arc orientation: a flipped traversal negates the value.
        v = integral_approx_C(1, 5, arc_spec(64, PREC))
        exact = _as_mpf(small_vectors[5].coeff(1))
        assert (v > 0) == (exact > 0)

    def test_node_doubling_stable(self):
        v64 = integral_approx_at(1, 20, arc_spec(64, PREC))
        v128 = integral_approx_at(1, 20, arc_spec(128, PREC))
        with mp.workprec(PREC):
            assert abs(v128 - v64) < mp.mpf("1e-10") * abs(v128)

    def test_doubling_delta_decays_spectrally(self):
        v32 = integral_approx_at(1, 20, arc_spec(32, PREC))
        v64 = integral_approx_at(1, 20, arc_spec(64, PREC))
        v128 = integral_approx_at(1, 20, arc_spec(128, PREC))
        with mp.workprec(PREC):
            assert abs(v64 - v32) > 10 * abs(v128 - v64)

    def test_full_arc_is_real_before_cast(self):
        full = integral_approx_full(1, 20, arc_spec(64, PREC))
        with mp.workprec(PREC):
            assert abs(full.imag) < mp.mpf(2) ** (-(PREC // 2)) * max(1, abs(full))

    def test_full_arc_matches_half_arc(self):
        full = integral_approx_full(1, 20, arc_spec(128, PREC))
        half = integral_approx_at(1, 20, arc_spec(64, PREC))
        with mp.workprec(PREC):
            # same node density; the two reductions agree to quadrature error
            assert abs(full.real - half) < mp.mpf("1e-15") * abs(half)

    def test_warns_when_not_converged(self):
        with pytest.warns(QuadratureWarning):
            integral_approx_C(1, 60, arc_spec(8, 128))

    def test_no_warning_when_converged(self, recwarn):
        integral_approx_C(1, 20, arc_spec(64, PREC))
        assert not [w for w in recwarn.list if issubclass(w.category, QuadratureWarning)]

    def test_radius_is_fixed_at_five(self):
        spec = QuadratureSpec(
            nodes=64, precision=PREC, radius=4.0, rule="gauss_legendre_composite"
        )
        with pytest.raises(ValueError, match="fixed at 5"):
            integral_approx_C(1, 10, spec)

    def test_rule_precondition(self):
        with pytest.raises(ValueError, match="gauss_legendre_composite"):
            integral_approx_C(1, 10, oracle_spec(10))


class TestMonotoneExponent:
    def test_leg_toward_the_saddle_is_monotone(self, sd):
        path = [5j + (complex(sd.z0) - 5j) * t / 199 for t in range(200)]
        report = check_monotone_exponent(path, precision=128)
        assert isinstance(report, MonotoneReport)
        assert report.ok
        assert report.violations == ()

    def test_constant_path_is_vacuously_monotone(self):
        assert check_monotone_exponent([-1 + 2j] * 5, precision=96).ok

    def test_reversed_path_fails(self, sd):
        path = [5j + (complex(sd.z0) - 5j) * t / 49 for t in range(50)]
        report = check_monotone_exponent(path[::-1], precision=96)
        assert not report.ok
        assert len(report.violations) > 0

    def test_rejects_right_half_plane(self):
        with pytest.raises(ValueError):
            check_monotone_exponent([0.1 + 1j], precision=96)


class TestLowerBound:
    GRID = [(u, x) for u in (0.01, 0.05, 0.1) for x in (0.0, -1e-3, -1e-2)]

    def test_holds_on_sample_grid(self):
        assert check_lower_bound_inequality(self.GRID)

    def test_holds_at_taylor_limit_point(self):
        assert check_lower_bound_inequality([(1e-6, 0.0)])

    def test_detector_rejects_inflated_rhs(self):
        assert not check_lower_bound_inequality(self.GRID, rhs_scale=2.0)

    def test_fails_at_deep_corner_of_stated_rectangle(self):
        # The inequality is false near (u, x) = (1/10, -1); the checker
        # reports that honestly rather than papering over it.
        assert not check_lower_bound_inequality([(0.1, -1.0)])

    def test_rejects_out_of_range_points(self):
        with pytest.raises(ValueError):
            check_lower_bound_inequality([(0.2, 0.0)])
        with pytest.raises(ValueError):
            check_lower_bound_inequality([(0.05, -1.5)])
        with pytest.raises(ValueError):
            check_lower_bound_inequality([(0.0, 0.0)])


class TestConstantC:
    def test_five_decimals(self):
        c = constant_c(PREC)
        assert abs(c - mp.mpf("0.11262")) < mp.mpf("0.5e-5")

    def test_stable_across_precision(self):
        with mp.workprec(300):
            assert abs(constant_c(128) - constant_c(256)) < mp.mpf(2) ** (-100)

    def test_quadrature_consistency(self):
        assert constant_c_euler_check() < mp.mpf("1e-3")
