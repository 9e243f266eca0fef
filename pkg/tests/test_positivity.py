"""Positivity verdicts, screeners, sweeps, and conjecture checks."""

import pytest

from cslab import (
    BadParity,
    BadSpec,
    Partition,
    SCREENER_NAMES,
    build_family,
    check_conjecture,
    e_positivity,
    extract_coefficient,
    lemma_2odds_coefficient,
    parse_graph_spec,
    run_sweep,
    schur_positivity,
    screen_spider,
    spider_csf,
)
from cslab.positivity import NO, UNKNOWN, YES


def failed_names(trace):
    return {name for name, passed, _ in trace if not passed}


class TestTwoOddLegsCoefficient:
    def test_anchor_values(self):
        assert lemma_2odds_coefficient(Partition((2, 1, 1))) == 1
        assert lemma_2odds_coefficient(Partition((4, 1, 1))) == -3
        assert lemma_2odds_coefficient(Partition((5, 3, 2))) == 13

    def test_rejects_wrong_odd_count(self):
        with pytest.raises(BadParity):
            lemma_2odds_coefficient(Partition((2, 2, 1)))
        with pytest.raises(BadParity):
            lemma_2odds_coefficient(Partition((3, 3, 3, 1)))

    def test_matches_extracted_coefficient(self):
        for legs in ((2, 1, 1), (3, 3, 2), (4, 1, 1), (4, 3, 1), (5, 3, 2), (6, 5, 1)):
            lam = Partition(legs)
            total_halves = sum(part // 2 for part in lam)
            target = Partition((3,) + (2,) * total_halves)
            f = spider_csf(*legs)
            assert lemma_2odds_coefficient(lam) == extract_coefficient(
                f, "e", target
            ), legs


class TestSpiderScreeners:
    def test_every_screener_has_a_registered_name(self):
        trace = screen_spider(Partition((6, 2, 1)))
        assert [name for name, _, _ in trace] == list(SCREENER_NAMES)
        assert all(detail for _, _, detail in trace)

    def test_short_longest_leg_fails_the_floor(self):
        assert "longest-leg-floor" in failed_names(screen_spider(Partition((4, 4, 2))))

    def test_two_odd_shorter_legs_force_their_sum(self):
        assert "odd-pair-forces-sum" in failed_names(screen_spider(Partition((7, 3, 3))))
        assert "odd-pair-forces-sum" not in failed_names(
            screen_spider(Partition((6, 3, 3)))
        )

    def test_two_residues_rule_for_two_leg_tail(self):
        failed = failed_names(screen_spider(Partition((10, 4, 2))))
        assert "two-residues-mod-three" in failed
        assert "pendant-two-upper" not in failed

    def test_known_positive_instances_pass_everything(self):
        for legs in ((3, 2, 1), (6, 2, 1), (12, 4, 2)):
            assert not failed_names(screen_spider(Partition(legs))), legs

    def test_long_divisible_leg_floor(self):
        assert "long-divisible-leg-floor" in failed_names(
            screen_spider(Partition((15, 12, 2)))
        )

    def test_requires_at_least_three_legs(self):
        with pytest.raises(BadSpec):
            screen_spider(Partition((3, 2)))


class TestEPositivity:
    def test_claw_is_negative_with_witness(self):
        report = e_positivity(build_family("claw"))
        assert report.e_positive == NO
        assert report.witness.basis == "e"
        assert report.witness.partition == Partition((2, 2))
        assert report.witness.coefficient == -2
        assert "connected-partition-cover" in report.failed_screeners

    def test_positive_spiders(self):
        for spec in ("spider:3,2,1", "spider:6,2,1", "path:9"):
            report = e_positivity(parse_graph_spec(spec))
            assert report.e_positive == YES, spec
            assert report.witness is None

    def test_family_recurrence_reaches_large_spiders(self):
        report = e_positivity(build_family("spider", 25, 2, 1))
        assert report.e_positive == NO
        assert report.witness.coefficient < 0

    def test_unknown_breaks_at_the_cap_and_clears_above_it(self):
        G = build_family("cycle", 14)
        assert e_positivity(G).e_positive == UNKNOWN
        assert e_positivity(G, cap=14).e_positive == YES

    def test_witness_partition_has_the_right_degree(self):
        report = e_positivity(build_family("spider", 4, 4, 2))
        assert report.e_positive == NO
        assert report.witness.partition.n == 11


class TestSchurPositivity:
    def test_unbalanced_bipartition_is_decisive_at_any_size(self):
        report = schur_positivity(build_family("broom", 6, 3))
        assert report.schur_positive == NO
        assert "balanced-stable-bipartition" in report.failed_screeners

    def test_small_broom_is_schur_positive(self):
        report = schur_positivity(build_family("broom", 4, 2))
        assert report.schur_positive == YES

    def test_targeted_coefficient_settles_large_brooms(self):
        report = schur_positivity(build_family("broom", 14, 2))
        assert report.schur_positive == NO
        assert report.witness.basis == "s"
        assert report.witness.partition == Partition((8, 8, 1))
        assert report.witness.coefficient == -1

    def test_zero_targeted_coefficient_stays_unknown(self):
        report = schur_positivity(build_family("broom", 12, 2))
        assert report.schur_positive == UNKNOWN

    def test_claw_schur_witness(self):
        report = schur_positivity(build_family("claw"))
        assert report.schur_positive == NO
        assert report.witness.partition == Partition((2, 2))
        assert report.witness.coefficient == -1


class TestSweeps:
    def test_short_pendant_sweep(self):
        result = run_sweep("spider:a,2,1", "a", 2, 12)
        assert result.e_positives == (3, 6)
        for row in result.rows:
            assert row.error is None
            assert row.e_report is not None

    def test_parallel_run_is_identical(self):
        serial = run_sweep("spider:a,4,2", "a", 4, 12, jobs=1)
        parallel = run_sweep("spider:a,4,2", "a", 4, 12, jobs=2)
        assert serial == parallel

    def test_unmatched_variable_yields_error_rows(self):
        result = run_sweep("spider:a,2,1", "b", 2, 4)
        assert all(row.error is not None for row in result.rows)
        assert result.e_positives == ()

    def test_summary_must_match_rows(self):
        from cslab import SweepResult

        good = run_sweep("spider:a,2,1", "a", 2, 5)
        with pytest.raises(ValueError):
            SweepResult(
                good.family, good.variable, good.lower, good.upper,
                good.rows, e_positives=(2,), schur_positives=good.schur_positives,
            )


class TestConjectures:
    def test_two_leaf_twin_alias_and_consistency(self):
        check = check_conjecture("5.4", limit=3)
        assert check.conjecture == "two-leaf-twin"
        assert check.consistent
        assert len(check.instances) == 3

    def test_sporadic_head_default(self):
        check = check_conjecture("sporadic-head")
        assert check.consistent
        assert any("spider:20,4,1" in label for label, _, _ in check.instances)

    def test_inside_bounds_documents_the_omitted_clause(self):
        check = check_conjecture("schur-inside-bounds", limit=4)
        assert any("omitted" in note for note in check.notes)

    def test_outside_bounds_small(self):
        check = check_conjecture("schur-outside-bounds", limit=4)
        assert check.consistent
        assert check.instances

    def test_unknown_identifier(self):
        with pytest.raises(BadSpec):
            check_conjecture("9.9")
