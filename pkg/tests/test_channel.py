"""Tests for the depolarizing-channel bounds and the Monte Carlo decoder."""

import math

import pytest

from eaqec.channel import (
    bhattacharyya,
    code_curve_subject,
    emit_error_curve,
    hashing_bound,
    random_code_error_bound,
    random_curve_subject,
    rate_threshold,
    simulate_map_block_error,
    weight_enum_error_bound,
)
from eaqec.constructions import repetition_code_odd
from eaqec.enumerators import WeightEnumerator, weight_enumerator


class TestBhattacharyya:
    def test_pinned_value(self):
        assert math.isclose(bhattacharyya(0.1), 0.4130768282, abs_tol=1e-9)

    def test_endpoints(self):
        assert bhattacharyya(0.0) == 0.0
        assert math.isclose(bhattacharyya(0.75), 1.0, abs_tol=1e-12)

    def test_range_checks(self):
        with pytest.raises(ValueError):
            bhattacharyya(-0.01)
        with pytest.raises(ValueError):
            bhattacharyya(0.76)

    def test_monotone(self):
        grid = [i / 100 for i in range(75)]
        vals = [bhattacharyya(p) for p in grid]
        assert all(a < b for a, b in zip(vals, vals[1:]))


class TestAnalyticBounds:
    def test_three_qubit_bound(self):
        b = WeightEnumerator(3, (1, 0, 0, 3), 2)
        assert math.isclose(
            weight_enum_error_bound(b, 0.1), 0.2114529535, abs_tol=1e-6
        )

    def test_four_qubit_bound(self):
        b = WeightEnumerator(4, (1, 0, 0, 1, 2), 2)
        assert math.isclose(
            weight_enum_error_bound(b, 0.1), 0.1287152, abs_tol=1e-6
        )

    def test_random_code_values(self):
        # prefactor is (2^2k - 1)/(2^2n - 1)
        g = bhattacharyya(0.2)
        expect = 3 / 63 * ((1 + 3 * g) ** 3 - 1)
        assert math.isclose(random_code_error_bound(3, 1, 0.2), expect, rel_tol=1e-12)

    def test_random_code_guards(self):
        with pytest.raises(ValueError):
            random_code_error_bound(3, 0, 0.1)
        with pytest.raises(ValueError):
            random_code_error_bound(3, 4, 0.1)

    def test_rate_threshold(self):
        assert math.isclose(rate_threshold(0.1), 0.4184984836, abs_tol=1e-6)
        assert rate_threshold(0.0) == 1.0
        assert math.isclose(rate_threshold(0.75), 0.0, abs_tol=1e-12)

    def test_hashing_values(self):
        assert math.isclose(hashing_bound(0.5), 0.10375937, abs_tol=1e-6)
        assert hashing_bound(0.0) == 1.0

    def test_hashing_dominates_rate_threshold(self):
        for i in range(1, 100):
            p = 0.74 * i / 100
            assert hashing_bound(p) > rate_threshold(p)

    def test_bounds_monotone_in_p(self):
        b = weight_enumerator(repetition_code_odd(3).logical)
        grid = [i / 100 for i in range(75)]
        vals = [weight_enum_error_bound(b, p) for p in grid]
        assert all(a < b_ for a, b_ in zip(vals, vals[1:]))


class TestSimulation:
    def test_zero_noise_means_zero_errors(self):
        code = repetition_code_odd(3)
        res = simulate_map_block_error(code, 0.0, 2000, seed=7)
        assert res.errors == 0 and res.fraction == 0.0

    def test_deterministic_for_fixed_seed(self):
        code = repetition_code_odd(3)
        a = simulate_map_block_error(code, 0.1, 20000, seed=42)
        b = simulate_map_block_error(code, 0.1, 20000, seed=42)
        assert a == b
        c = simulate_map_block_error(code, 0.1, 20000, seed=43)
        assert c.errors != a.errors  # astronomically unlikely to collide

    def test_within_analytic_bound(self):
        code = repetition_code_odd(3)
        b = weight_enumerator(code.logical)
        res = simulate_map_block_error(code, 0.1, 100000, seed=1)
        assert res.fraction <= weight_enum_error_bound(b, 0.1) + 3 * res.halfwidth

    def test_wilson_halfwidth_sane(self):
        res = simulate_map_block_error(repetition_code_odd(3), 0.1, 10000, seed=5)
        assert 0.0 < res.halfwidth < 0.02
        assert "block errors" in str(res)

    def test_rejects_non_maximal_code(self):
        from eaqec.code import parse_code

        # a c = 0 stabilizer code: valid, but not maximal entanglement
        code = parse_code("n=3 k=1 c=0\nS: ZZI IZZ\nL: XXX ZZZ\n")
        with pytest.raises(ValueError):
            simulate_map_block_error(code, 0.1, 100, seed=0)

    def test_rejects_oversized_code(self):
        with pytest.raises(ValueError):
            simulate_map_block_error(repetition_code_odd(9), 0.1, 100, seed=0)

    def test_rejects_zero_trials(self):
        with pytest.raises(ValueError):
            simulate_map_block_error(repetition_code_odd(3), 0.1, 0, seed=0)


class TestErrorCurve:
    def test_csv_shape(self):
        b = weight_enumerator(repetition_code_odd(3).logical)
        csv = emit_error_curve(
            [code_curve_subject("rep3", b), random_curve_subject(3, 1)],
            [0.0, 0.1, 0.2],
        )
        lines = csv.strip().split("\n")
        assert lines[0] == "subject,p,gamma,bound"
        assert len(lines) == 1 + 2 * 3
        assert lines[1].startswith("rep3,0,")
        assert any(row.startswith("random[3,1],") for row in lines)

    def test_grid_validated(self):
        with pytest.raises(ValueError):
            emit_error_curve([random_curve_subject(3, 1)], [0.9])
