import math

import pytest

from reject_lab import (
    ClassPrior,
    CostMatrix,
    Decision,
    GaussianClassModel,
    InconsistentPair,
    bayes_classify,
    equivalent_thresholds,
    mi_imbalance_sweep,
    mi_optimize,
)
from reject_lab.mi_classifier import log_delta_regions, uniform_regions_for

Y1, Y2, Y3 = Decision.Y1, Decision.Y2, Decision.Y3


def posterior_pair_gap(model, points, cls):
    vals = [model.posterior(x).pt1_given_x if cls == 1 else model.posterior(x).pt2_given_x for x in points]
    return abs(vals[0] - vals[1])


class TestExample1:
    def test_no_reject(self, ex1):
        sol = mi_optimize(ex1, reject_option=False)
        assert sol.report.e == pytest.approx(0.239, abs=2e-3)
        assert sol.ni == pytest.approx(0.260, abs=2e-3)
        assert sol.boundary_points == pytest.approx((-0.674, 4.007), abs=0.01)
        assert sol.cost_ratio_lambda21 == pytest.approx(2.002, abs=5e-3)
        assert sol.thresholds.is_no_reject

    def test_reject(self, ex1):
        sol = mi_optimize(ex1, reject_option=True)
        assert sol.report.e == pytest.approx(0.160, abs=2e-3)
        assert sol.report.rej == pytest.approx(0.186, abs=2e-3)
        assert sol.ni == pytest.approx(0.297, abs=2e-3)
        assert (sol.thresholds.tr1, sol.thresholds.tr2) == pytest.approx((0.141, 0.445), abs=2e-3)
        assert sol.regions.interval_labels == (Y1, Y3, Y2, Y3, Y1)
        a, b = sol.cost_sets
        assert (a.l13, a.l23) == pytest.approx((0.0376, 0.772), abs=5e-3)
        assert (b.l12, b.l21) == pytest.approx((2.247, 7.069), abs=5e-3)

    def test_pairs_are_consistent(self, ex1):
        pts = mi_optimize(ex1, reject_option=True).boundary_points
        assert posterior_pair_gap(ex1, (pts[0], pts[3]), 1) < 1e-8
        assert posterior_pair_gap(ex1, (pts[1], pts[2]), 2) < 1e-8

    def test_equivalent_thresholds_round_trip(self, ex1):
        sol = mi_optimize(ex1, reject_option=True)
        tr = equivalent_thresholds(ex1, sol.boundary_points)
        assert tr.tr1 == pytest.approx(sol.thresholds.tr1, abs=1e-9)
        assert tr.tr2 == pytest.approx(sol.thresholds.tr2, abs=1e-9)

    def test_inconsistent_points(self, ex1):
        with pytest.raises(InconsistentPair):
            equivalent_thresholds(ex1, (-1.0, 0.0, 3.0, 4.0))

    def test_beats_bayes_on_ni(self, ex1):
        bayes = bayes_classify(ex1, CostMatrix.zero_one(), reject_option=False)
        assert mi_optimize(ex1, reject_option=False).ni >= bayes.ni


class TestExample3:
    def test_no_reject(self, ex3):
        sol = mi_optimize(ex3, reject_option=False)
        assert sol.report.e == pytest.approx(0.514, abs=2e-3)
        assert sol.ni == pytest.approx(0.0803, abs=2e-3)
        assert sol.boundary_points == pytest.approx((-1.77, 1.77), abs=0.01)

    def test_reject_improves_information(self, ex3):
        assert mi_optimize(ex3, reject_option=True).ni > mi_optimize(ex3, reject_option=False).ni


class TestExample4:
    def test_reject_selects_y3(self, ex4):
        sol = mi_optimize(ex4, reject_option=True)
        assert sol.regions.label_at(0.75) is Y3
        assert sol.report.rej == pytest.approx(0.375, abs=1e-12)
        assert sol.ni == pytest.approx(0.656, abs=2e-3)

    def test_no_reject_selects_y1(self, ex4):
        sol = mi_optimize(ex4, reject_option=False)
        assert sol.regions.label_at(0.75) is Y1
        assert sol.ni == pytest.approx(0.549, abs=2e-3)

    def test_representative_thresholds_reproduce_label(self, ex4):
        from reject_lab import bayes_regions

        for reject in (True, False):
            sol = mi_optimize(ex4, reject_option=reject)
            regions = bayes_regions(ex4, sol.thresholds, reject_option=reject)
            assert regions.label_at(0.75) is sol.regions.label_at(0.75)

    def test_overlap_regions(self, ex4):
        r = uniform_regions_for(ex4, Y3)
        assert r.label_at(0.25) is Y1 and r.label_at(0.75) is Y3 and r.label_at(2.0) is Y2


class TestSearch:
    def test_symmetric_exact(self, ex2):
        sol = mi_optimize(ex2, reject_option=False)
        assert sol.boundary_points == (0.0,)
        assert sol.cost_ratio_lambda21 == 1.0

    def test_deterministic(self, ex1):
        a = mi_optimize(ex1, reject_option=True)
        b = mi_optimize(ex1, reject_option=True)
        assert a.boundary_points == b.boundary_points and a.ni == b.ni

    @pytest.mark.parametrize("reject", [False, True])
    def test_objectives_agree(self, ex1, reject):
        by_ni = mi_optimize(ex1, reject_option=reject)
        by_h = mi_optimize(ex1, reject_option=reject, objective="conditional_entropy")
        assert by_h.boundary_points == pytest.approx(by_ni.boundary_points, abs=1e-4)

    def test_log_delta_regions_order(self, ex1):
        with pytest.raises(ValueError):
            log_delta_regions(ex1, 0.0, 1.0)

    def test_local_optimality(self, ex1):
        from reject_lab.information import information_summary, joint_from_regions
        from reject_lab.mi_classifier import _search_gaussian

        u1, u2 = _search_gaussian(ex1, True, "ni")
        best = mi_optimize(ex1, reject_option=True).ni
        for d1, d2 in ((0.05, 0), (-0.05, 0), (0, 0.05), (0, -0.05)):
            r = log_delta_regions(ex1, u1 + d1, u2 + d2)
            assert information_summary(joint_from_regions(ex1, r)).ni <= best + 1e-12


class TestImbalance:
    def test_table_columns(self, ex2):
        rows = mi_imbalance_sweep(ex2, [1, 9, 9999])
        assert [r.fnr for r in rows] == pytest.approx([0.159, 0.264, 0.345], abs=2e-3)
        assert rows[1].xb == pytest.approx((0.367,), abs=0.01)
        assert [r.ni for r in rows] == pytest.approx([0.369, 0.317, 0.125], abs=2e-3)

    def test_ratio_one_matches_bayes(self, ex2):
        mi = mi_imbalance_sweep(ex2, [1])[0]
        bayes = bayes_classify(ex2, CostMatrix.zero_one(), reject_option=False)
        assert mi.xb == bayes.boundary_points and mi.ni == pytest.approx(bayes.ni, abs=1e-15)

    def test_error_can_exceed_minority_prior(self, ex2):
        # unlike Bayes, MI pays errors to keep the minority class
        row = mi_imbalance_sweep(ex2, [9999])[0]
        assert row.e > ClassPrior.from_ratio(9999).p2

    def test_equivalent_threshold_single_point(self, ex2):
        m = ex2.with_prior(ClassPrior.from_ratio(9))
        sol = mi_optimize(m, reject_option=False)
        tr = equivalent_thresholds(m, sol.boundary_points)
        assert tr.delta1 == pytest.approx(sol.cost_ratio_lambda21, rel=1e-9)
        assert math.isclose(tr.tr1 + tr.tr2, 1.0)
