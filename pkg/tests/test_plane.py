from fractions import Fraction as F

import pytest

from waldlines.linform import LinForm, parse_linform
from waldlines.plane import (
    Move,
    PlaneSystem,
    ThresholdInput,
    apply_cremona,
    associate_system,
    cremona_k,
    format_system,
    merge_four,
    normalize,
    parse_system,
    quadric_threshold,
    replay_reduction,
)

TAU = F(1, 1000)


def lf(text: str) -> LinForm:
    return parse_linform(text)


def ps(text: str) -> PlaneSystem:
    return parse_system(text)


class TestAssociateSystem:
    def test_five_lines_fifteen_general(self):
        got = associate_system(ThresholdInput(F(7), (F(1),) * 5, 15))
        assert got == ps("L2(9+t; 7-2t, 2+3t, 1^30)")

    def test_no_specialized_lines(self):
        got = associate_system(ThresholdInput(F(4), (), 8))
        assert got == ps("L2(8-4t; 4-2t^2, 1^16)")

    def test_three_lines_five_general(self):
        got = associate_system(ThresholdInput(F(4), (F(1),) * 3, 5))
        assert got == ps("L2(5-t; 4-2t, 1+t, 1^10)")


class TestNormalize:
    def test_kills_negative_entries(self):
        sys = PlaneSystem.of(
            lf("-1+34t"),
            [lf("-1+17t")] * 3 + [lf("10t")] + [lf("7t")] * 3 + [lf("3t")] * 6,
        )
        assert normalize(sys, TAU) == ps("L2(-1+34t; 10t, 7t^3, 3t^6)")

    def test_sorted_system_unchanged(self):
        sys = ps("L2(9+t; 7-2t, 2+3t, 1^30)")
        assert normalize(sys, TAU) == sys

    def test_sorts_by_value_at_tau(self):
        sys = PlaneSystem.of(lf("5"), [lf("3t"), lf("2"), lf("1")])
        assert normalize(sys, TAU) == ps("L2(5; 2, 1, 3t)")

    def test_drops_zero_at_tau(self):
        sys = PlaneSystem.of(lf("5"), [lf("1"), LinForm(F(-1, 1000), F(1))])
        assert normalize(sys, TAU) == ps("L2(5; 1)")

    def test_merges_equal_runs_across_groups(self):
        sys = PlaneSystem.of(lf("5"), [lf("7t"), lf("1"), lf("7t")])
        assert normalize(sys, TAU).groups == ((lf("1"), 1), (lf("7t"), 2))


class TestCremonaK:
    def test_initial_system(self):
        assert cremona_k(ps("L2(9+t; 7-2t, 2+3t, 1^30)")) == lf("-1")

    def test_mixed_tail(self):
        assert cremona_k(ps("L2(2+10t; 1+3t, 1^5, 7t, 3t^6)")) == lf("-1+7t")

    def test_too_few_multiplicities(self):
        assert cremona_k(ps("L2(-8+141t; 3t)")) is None


class TestApplyCremona:
    def test_first_step(self):
        sys = ps("L2(9+t; 7-2t, 2+3t, 1^30)")
        moved = apply_cremona(sys, lf("-1"))
        assert normalize(moved, TAU) == ps("L2(8+t; 6-2t, 1+3t, 1^29)")

    def test_final_reduction(self):
        sys = ps("L2(-4+75t; 3t^4)")
        moved = apply_cremona(sys, lf("-4+66t"))
        assert moved == ps("L2(-8+141t; -4+69t^3, 3t)")
        assert normalize(moved, TAU) == ps("L2(-8+141t; 3t)")

    def test_involution(self):
        sys = ps("L2(9+t; 7-2t, 2+3t, 1^30)")
        k = lf("-1+5t")
        assert apply_cremona(apply_cremona(sys, k), -k) == sys

    def test_needs_three_multiplicities(self):
        with pytest.raises(ValueError):
            apply_cremona(ps("L2(-8+141t; 3t)"), lf("-1"))


class TestMergeFour:
    def test_merges_ones(self):
        got = merge_four(ps("L2(8+t; 6-2t, 1+3t, 1^29)"), TAU)
        assert got == ps("L2(8+t; 6-2t, 2, 1+3t, 1^25)")

    def test_merges_in_presence_of_tail(self):
        got = merge_four(ps("L2(7+t; 5-2t, 1^26, 3t)"), TAU)
        assert got == ps("L2(7+t; 5-2t, 2, 1^22, 3t)")

    def test_no_group_of_four(self):
        assert merge_four(ps("L2(5; 2, 1, 1)"), TAU) is None

    def test_prefers_greatest_group(self):
        got = merge_four(ps("L2(9; 1^4, 3t^4)"), TAU)
        assert got == ps("L2(9; 2, 3t^4)")


# The nineteen systems of the worked reduction of (7; 1,1,1,1,1; 15),
# with the defect k computed for each and the move taken from it.
GOLDEN_REDUCTION = [
    ("L2(9+t; 7-2t, 2+3t, 1^30)", "-1", Move.CREMONA),
    ("L2(8+t; 6-2t, 1+3t, 1^29)", "0", Move.MERGE),
    ("L2(8+t; 6-2t, 2, 1+3t, 1^25)", "-1", Move.CREMONA),
    ("L2(7+t; 5-2t, 1^26, 3t)", "3t", Move.MERGE),
    ("L2(7+t; 5-2t, 2, 1^22, 3t)", "-1+3t", Move.CREMONA),
    ("L2(6+4t; 4+t, 1+3t, 1^21, 3t^2)", "0", Move.MERGE),
    ("L2(6+4t; 4+t, 2, 1+3t, 1^17, 3t^2)", "-1", Move.CREMONA),
    ("L2(5+4t; 3+t, 1^18, 3t^3)", "3t", Move.MERGE),
    ("L2(5+4t; 3+t, 2, 1^14, 3t^3)", "-1+3t", Move.CREMONA),
    ("L2(4+7t; 2+4t, 1+3t, 1^13, 3t^4)", "0", Move.MERGE),
    ("L2(4+7t; 2+4t, 2, 1+3t, 1^9, 3t^4)", "-1", Move.CREMONA),
    ("L2(3+7t; 1+4t, 1^10, 3t^5)", "3t", Move.MERGE),
    ("L2(3+7t; 2, 1+4t, 1^6, 3t^5)", "-1+3t", Move.CREMONA),
    ("L2(2+10t; 1+3t, 1^5, 7t, 3t^6)", "-1+7t", Move.CREMONA),
    ("L2(1+17t; 1^3, 10t, 7t^3, 3t^6)", "-2+17t", Move.CREMONA),
    ("L2(-1+34t; 10t, 7t^3, 3t^6)", "-1+10t", Move.CREMONA),
    ("L2(-2+44t; 7t, 3t^6)", "-2+31t", Move.CREMONA),
    ("L2(-4+75t; 3t^4)", "-4+66t", Move.CREMONA),
    ("L2(-8+141t; 3t)", None, Move.TERMINATE),
]

GOLDEN_INPUT = ThresholdInput(F(7), (F(1),) * 5, 15)


class TestReduction:
    def test_golden_trace(self):
        res = quadric_threshold(GOLDEN_INPUT, TAU)
        assert res.t0 == F(8, 141)
        assert len(res.steps) == len(GOLDEN_REDUCTION)
        for step, (sys_text, k_text, move) in zip(res.steps, GOLDEN_REDUCTION):
            assert format_system(step.system) == sys_text
            assert step.k == (None if k_text is None else lf(k_text))
            assert step.move is move

    def test_golden_replay(self):
        res = quadric_threshold(GOLDEN_INPUT, TAU)
        replay_reduction(GOLDEN_INPUT, res.steps, TAU)

    def test_mid_degeneration_thresholds(self):
        base = F(10096, 5045)
        small = (F(3, 5045),) * 3
        assert quadric_threshold(ThresholdInput(base, small + (F(1),), 4), TAU).t0 == F(3, 5045)
        assert quadric_threshold(ThresholdInput(base, small, 5), TAU).t0 == 0

    def test_three_lines_threshold(self):
        assert quadric_threshold(ThresholdInput(F(4), (F(1),) * 3, 5), TAU).t0 == F(4, 7)

    def test_no_specialized_lines_returns_zero(self):
        assert quadric_threshold(ThresholdInput(F(4), (), 8), TAU).t0 == 0

    def test_min_q_caps_threshold(self):
        # terminal degree root 8/141 > 1/20 = min q, so the q wins
        res = quadric_threshold(ThresholdInput(F(7), (F(1, 20),) + (F(1),) * 4, 15), TAU)
        assert 0 <= res.t0 <= F(1, 20)

    def test_trace_optional(self):
        res = quadric_threshold(GOLDEN_INPUT, TAU, want_trace=False)
        assert res.t0 == F(8, 141)
        assert res.steps == ()

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            ThresholdInput(F(0), (), 3)
        with pytest.raises(ValueError):
            ThresholdInput(F(2), (F(0),), 3)
        with pytest.raises(ValueError):
            ThresholdInput(F(2), (), -1)
        with pytest.raises(ValueError):
            quadric_threshold(GOLDEN_INPUT, F(0))


class TestFormatParse:
    @pytest.mark.parametrize(
        "text",
        [
            "L2(9+t; 7-2t, 2+3t, 1^30)",
            "L2(-8+141t; 3t)",
            "L2(8-4t; 4-2t^2, 1^16)",
            "L2(5; )",
        ],
    )
    def test_round_trip(self, text):
        assert format_system(parse_system(text)) == text

    def test_empty_multiplicities(self):
        sys = parse_system("L2(5; )")
        assert sys.groups == ()
        assert format_system(sys) == "L2(5; )"
