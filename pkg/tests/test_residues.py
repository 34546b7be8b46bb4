"""Residue solvers: simple poles, series poles, closed forms, perturbation."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skirmish import (
    GroupedInstance,
    Instance,
    InvalidInstance,
    closed_form_report,
    default_epsilon,
    group,
    p_a_wins_distinct,
    p_a_wins_epsilon,
    p_a_wins_recursive,
    p_a_wins_series,
    p_equal_speeds,
    p_two_speeds,
    perturb,
)

from conftest import instances

F = Fraction


def grouped(a_groups, b_groups):
    return GroupedInstance(
        tuple((F(s), c) for s, c in a_groups), tuple((F(s), c) for s, c in b_groups)
    )


class TestDistinct:
    def test_hand_checked_two_vs_one(self):
        report = p_a_wins_distinct(Instance((2, 1), (1,)))
        assert report.value == F(5, 6)
        assert report.method == "distinct"
        # (2/(2-1))*(2/3) = 4/3 and (1/(1-2))*(1/2) = -1/2, negated per pole
        assert report.residues == (F(-4, 3), F(1, 2))

    def test_known_duels(self):
        assert p_a_wins_distinct(Instance((60,), (20, 30))).value == F(1, 2)
        report = p_a_wins_distinct(Instance((30, 20), (15, 36)))
        assert report.value == F(270, 539)
        assert report.residues == (F(-10, 11), F(20, 49))

    def test_value_is_negated_residue_sum(self):
        report = p_a_wins_distinct(Instance((3, 5), (2, 7)))
        assert -sum(report.residues) == report.value

    def test_duplicate_a_rejected(self):
        with pytest.raises(InvalidInstance):
            p_a_wins_distinct(Instance((1, 1), (2,)))

    def test_repeated_b_is_fine(self):
        report = p_a_wins_distinct(Instance((2, 1), (1, 1)))
        assert report.value == p_a_wins_recursive(Instance((2, 1), (1, 1)))

    @given(instances(min_side=0, max_side=5))
    @settings(max_examples=60)
    def test_matches_reference_when_distinct(self, inst):
        if len(set(inst.a)) != len(inst.a):
            inst = Instance(tuple(set(inst.a)), inst.b)
        assert p_a_wins_distinct(inst).value == p_a_wins_recursive(inst)


class TestSeries:
    def test_equal_speed_pairs(self):
        assert p_a_wins_series(grouped([(1, 2)], [(1, 2)])).value == F(1, 2)
        assert p_a_wins_series(grouped([(1, 2)], [(1, 1)])).value == F(3, 4)

    def test_mixed_multiplicities(self):
        g = grouped([(2, 2), (3, 1)], [(5, 1)])
        value = p_a_wins_series(g).value
        assert value == p_a_wins_recursive(Instance((2, 2, 3), (5,)))
        assert value == F(267, 392)

    def test_report_method_and_residue_sum(self):
        report = p_a_wins_series(grouped([(1, 3)], [(2, 2)]))
        assert report.method == "series"
        assert -sum(report.residues) == report.value

    def test_multiplicity_one_reduces_to_distinct(self):
        inst = Instance((5, 2, 11), (3, 3, 7))
        series_report = p_a_wins_series(group(inst))
        distinct_report = p_a_wins_distinct(Instance(tuple(sorted(inst.a)), inst.b))
        assert series_report.value == distinct_report.value
        assert series_report.residues == distinct_report.residues

    @given(instances(min_side=0, max_side=4))
    @settings(max_examples=60)
    def test_matches_reference_with_repeats(self, inst):
        assert p_a_wins_series(group(inst)).value == p_a_wins_recursive(inst)

    @given(instances(min_side=1, max_side=4))
    @settings(max_examples=40)
    def test_all_residues_sum_to_zero_with_origin(self, inst):
        # The a-poles of the duel plus the a-poles of the swapped duel are
        # all the finite nonzero poles; with the origin's residue of 1 the
        # grand total vanishes.
        forward = p_a_wins_series(group(inst))
        backward = p_a_wins_series(group(inst.swapped()))
        assert sum(forward.residues) + sum(backward.residues) + 1 == 0

    @given(instances(min_side=0, max_side=4))
    @settings(max_examples=40)
    def test_complementarity(self, inst):
        g = group(inst)
        assert p_a_wins_series(g).value + p_a_wins_series(g.swapped()).value == 1


class TestClosedForms:
    def test_equal_speed_values(self):
        assert p_equal_speeds(1, 1) == F(1, 2)
        assert p_equal_speeds(2, 2) == F(1, 2)
        assert p_equal_speeds(2, 1) == F(3, 4)
        assert p_equal_speeds(3, 2) == F(11, 16)

    def test_equal_speed_law(self):
        for k in range(1, 11):
            assert p_equal_speeds(k, k) == F(1, 2)

    def test_matches_series_route(self):
        for m in range(1, 6):
            for n in range(1, 6):
                assert p_equal_speeds(m, n) == p_a_wins_series(
                    grouped([(1, m)], [(1, n)])
                ).value

    def test_two_speed_values(self):
        assert p_two_speeds(1, 1, 3) == F(1, 4)
        assert p_two_speeds(3, 2, 1) == p_equal_speeds(3, 2)
        assert p_two_speeds(2, 1, 2) == F(5, 9)

    @given(
        st.integers(1, 5),
        st.integers(1, 5),
        st.fractions(min_value=F(1, 8), max_value=8, max_denominator=8),
    )
    @settings(max_examples=40)
    def test_two_speeds_matches_series(self, m, n, v):
        assert p_two_speeds(m, n, v) == p_a_wins_series(grouped([(1, m)], [(v, n)])).value

    def test_invalid_counts(self):
        with pytest.raises(InvalidInstance):
            p_equal_speeds(0, 1)
        with pytest.raises(InvalidInstance):
            p_two_speeds(1, -2, 1)

    def test_closed_form_report_labels(self):
        all_equal = closed_form_report(grouped([(3, 2)], [(3, 1)]))
        assert all_equal.method == "all-equal"
        assert all_equal.value == p_equal_speeds(2, 1)
        scaled = closed_form_report(grouped([(3, 2)], [(6, 1)]))
        assert scaled.method == "per-type-equal"
        assert scaled.value == p_two_speeds(2, 1, 2) == F(5, 9)

    def test_closed_form_needs_single_speeds(self):
        with pytest.raises(InvalidInstance):
            closed_form_report(grouped([(1, 1), (2, 1)], [(3, 1)]))


class TestPerturbation:
    def test_perturb_splits_copies(self):
        g = grouped([(1, 2)], [(1, 1)])
        eps = F(1, 1000)
        inst = perturb(g, eps)
        assert inst.a == (1 + eps, 1 + 2 * eps)
        assert inst.b == (1 + eps,)

    def test_perturb_collision_detected(self):
        g = grouped([(1, 2), (F(1001, 1000), 1)], [(2, 1)])
        with pytest.raises(InvalidInstance):
            perturb(g, F(1, 1000))
        with pytest.raises(InvalidInstance):
            perturb(g, 0)

    def test_epsilon_close_to_exact(self):
        report = p_a_wins_epsilon(grouped([(1, 2)], [(1, 1)]), F(1, 1000))
        assert report.method == "epsilon"
        assert abs(report.value - F(3, 4)) < F(1, 100)

    def test_already_distinct_instance_still_perturbed(self):
        eps = F(1, 100)
        report = p_a_wins_epsilon(grouped([(1, 1)], [(2, 1)]), eps)
        assert report.value == (1 + eps) / (3 + 2 * eps)
        # Unperturbed reference for the same duel:
        assert p_a_wins_recursive(Instance((1,), (2,))) == F(1, 3)

    def test_error_shrinks_with_epsilon(self):
        g = grouped([(1, 3)], [(1, 2)])
        exact = p_equal_speeds(3, 2)
        eps = default_epsilon(g)
        errors = [abs(p_a_wins_epsilon(g, e).value - exact) for e in (eps, eps / 10)]
        assert errors[1] < errors[0]


class TestDefaultEpsilon:
    def test_stated_examples(self):
        assert default_epsilon(grouped([(1, 3)], [(1, 2)])) == F(1, 6000)
        assert default_epsilon(grouped([(1, 1), (2, 1)], [(5, 1)])) == F(1, 4000)
        assert default_epsilon(grouped([(1, 2)], [(F(11, 10), 1)])) == F(1, 40000)

    def test_one_sided_fallback(self):
        # No cross-side sums exist; the lone speed sets the scale.
        assert default_epsilon(grouped([(5, 2)], [])) == F(5, 3000)

    def test_perturbation_is_always_valid(self):
        g = grouped([(1, 2), (F(101, 100), 3)], [(1, 2)])
        eps = default_epsilon(g)
        inst = perturb(g, eps)  # must not collide
        assert len(set(inst.a)) == len(inst.a)


class TestMethodReportJson:
    def test_schema(self):
        payload = p_a_wins_distinct(Instance((30, 20), (15, 36))).to_json()
        assert payload == {
            "value": "270/539",
            "decimal": "0.500927643785",
            "method": "distinct",
            "residues": ["-10/11", "20/49"],
        }
