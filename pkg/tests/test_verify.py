"""Tests for the identity registry and the deterministic runner."""

from fractions import Fraction as F

import pytest

from btconv.registry import registry
from btconv.verify import (
    Report,
    UnknownIdentityError,
    format_rat,
    resolve_ids,
    run,
)

# ids that must exist, as consumed by external tooling
REQUIRED_IDS = {
    "main1_random",
    "main2_random",
    "swap_second",
    "mixed",
    "symmetry_first",
    "symmetry_second",
    "gen1",
    "gen2",
    "nested_shift",
    "binom_upper_conv",
    "harmonic_frac_conv",
    "gibonacci_harmonic",
    "binom_ratio_conv",
    "harm_odd_conv",
    "self_conv_pt7l41w",
    "catalan_mikic",
    "catalan_floor",
    "harm_sq_conv",
    "hiez2vp",
    "u00e6qz",
    "dixon",
    "dixon_dual",
    "sury_corollary",
    "rgyk46r_parity",
    "lucas_x2_odd",
    "bernoulli_poly_shift_conv",
    "zc4ufo6_prop",
    "zc3ejk3",
    "numg9mq",
    "s8xzyeq",
    "binom_x_self",
    "harm_binom_self",
    "zrnqrxn",
    "trif_swap",
    "evuuti7",
    "harm_partial_wellknown",
    "okprop",
    "v4unj46",
    "h_partial_prop",
    "fib_bernoulli_even",
    "lucas_bernoulli_odd",
    "jy2d3um",
    "t7tu7xu_special",
    "ps67scn",
    "oy8uhm0",
    "xc556tq",
    "hq03eji_pairs",
    "qpev64c",
    "abwtmhn_lucas",
    "pop9ybt",
    "binom_xz_2k",
    "s4jiizc",
    "k_bernoulli",
    "l9mldgr_m2_m3",
    "ext_b0c9iwa",
    "ext_ajkcgco",
    "ext_2negk",
    "ext_shifted",
    "ext_km",
    "poly_first",
    "poly_second",
    "sun_lemma",
    "chen_transfer",
    "chen_main_second",
    "chen_main_first",
    "chen_thm32_both",
    "gq_thm3_both",
}


class TestRegistry:
    def test_size_floor(self):
        assert len(registry()) >= 55

    def test_unique_sorted_ids(self):
        ids = [check.id for check in registry()]
        assert len(ids) == len(set(ids))
        assert ids == sorted(ids)

    def test_required_ids_present(self):
        ids = {check.id for check in registry()}
        missing = REQUIRED_IDS - ids
        assert not missing, f"missing registry ids: {sorted(missing)}"

    def test_catalog_convolution_variants_present(self):
        ids = {check.id for check in registry()}
        assert any(i.startswith("main1_catalog_") for i in ids)
        assert any(i.startswith("main2_catalog_") for i in ids)

    def test_anchors_nonempty(self):
        for check in registry():
            assert check.anchor.strip()

    def test_domains_nonempty_at_nmax_10(self):
        for check in registry():
            assert len(list(check.domain(10))) >= 1, f"{check.id} has empty domain"


class TestRun:
    def test_dixon_instances(self):
        reports = list(run(["dixon"], nmax=8, seed=0))
        assert len(reports) == 9
        assert all(r.passed for r in reports)

    def test_dixon_values(self):
        reports = {r.params["n"]: r for r in run(["dixon"], nmax=4, seed=0)}
        assert reports[2].lhs == "-6"
        assert reports[4].lhs == "90"

    def test_fib_bernoulli_even_all_zero(self):
        for report in run(["fib_bernoulli_even"], nmax=10, seed=0):
            assert report.params["n"] % 2 == 0
            assert report.lhs == report.rhs == "0"
            assert report.passed

    def test_catalan_mikic_values(self):
        reports = list(run(["catalan_mikic"], nmax=6, seed=0))
        assert [r.lhs for r in reports] == ["1", "0", "2", "0", "12", "0", "100"]
        assert all(r.passed for r in reports)

    def test_determinism(self):
        ids = ["dixon", "k_bernoulli", "main1_random", "abwtmhn_lucas"]
        first = [(r.id, r.params, r.lhs, r.rhs, r.passed, r.seed)
                 for r in run(ids, nmax=6, seed=3)]
        second = [(r.id, r.params, r.lhs, r.rhs, r.passed, r.seed)
                  for r in run(ids, nmax=6, seed=3)]
        assert first == second

    def test_sorted_by_id_then_params(self):
        reports = list(run(["dixon", "catalan_mikic"], nmax=5, seed=0))
        assert [r.id for r in reports] == ["catalan_mikic"] * 6 + ["dixon"] * 6
        assert [r.params["n"] for r in reports[:6]] == list(range(6))

    def test_unknown_id(self):
        with pytest.raises(UnknownIdentityError):
            list(run(["definitely_not_registered"], nmax=4, seed=0))

    def test_negative_nmax(self):
        with pytest.raises(ValueError):
            list(run(["dixon"], nmax=-1, seed=0))

    def test_boolean_verdict_encoding(self):
        for report in run(["sun_lemma"], nmax=4, seed=0):
            assert report.lhs == "1" and report.rhs == "1"
            assert report.passed

    def test_seed_recorded(self):
        for report in run(["main1_random"], nmax=3, seed=42):
            assert report.seed == 42

    def test_resolve_all(self):
        checks = resolve_ids("all")
        assert len(checks) == len(registry())


class TestReportFormat:
    def test_format_rat(self):
        assert format_rat(F(3, 4)) == "3/4"
        assert format_rat(F(5)) == "5"
        assert format_rat(F(-7, 2)) == "-7/2"
        assert format_rat(F(0)) == "0"

    def test_to_json_fields(self):
        import json

        report = next(iter(run(["dixon"], nmax=2, seed=0)))
        payload = json.loads(report.to_json())
        assert set(payload) == {
            "id", "params", "lhs", "rhs", "pass", "seed", "duration_ms"
        }
        assert payload["id"] == "dixon"
        assert payload["pass"] is True
        assert isinstance(payload["params"], dict)

    def test_rational_params_serialized_canonically(self):
        import json

        for report in run(["u00e6qz"], nmax=1, seed=0):
            payload = json.loads(report.to_json())
            assert isinstance(payload["params"]["x"], str)
            # canonical p/q form parses back to the original value
            assert F(payload["params"]["x"]) == F(report.params["x"])

    def test_pass_iff_sides_equal(self):
        report = Report(
            id="x", params={}, lhs="1/2", rhs="1/2", passed=True, seed=0,
            duration_ms=0.0,
        )
        assert report.lhs == report.rhs
