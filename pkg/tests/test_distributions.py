import math

import pytest

from reject_lab import ClassPrior, ConstraintViolation, GaussianClassModel, OverlapCase, UniformClassModel
from reject_lab.distributions import class_mass, classify_overlap, likelihood_ratio, posterior
from reject_lab.errors import ZeroMixtureDensity


class TestClassPrior:
    def test_valid(self):
        p = ClassPrior(0.8, 0.2)
        assert p[1] == 0.8 and p[2] == 0.2 and p.p_min == 0.2

    @pytest.mark.parametrize("p1,p2", [(0.0, 1.0), (1.0, 0.0), (0.6, 0.6), (-0.1, 1.1)])
    def test_invalid(self, p1, p2):
        with pytest.raises(ConstraintViolation):
            ClassPrior(p1, p2)

    def test_from_ratio_keeps_small_class_exact(self):
        p = ClassPrior.from_ratio(9999)
        assert p.p2 == pytest.approx(1e-4, rel=1e-14)
        assert p.p1 / p.p2 == pytest.approx(9999, rel=1e-12)

    def test_bad_index(self):
        with pytest.raises(IndexError):
            ClassPrior(0.5, 0.5)[3]


class TestGaussian:
    def test_symmetric_posterior(self):
        m = GaussianClassModel.create(-1, 1, 1, 1)
        post = posterior(m, 0.0)
        assert post.pt1_given_x == pytest.approx(0.5) and post.pt2_given_x == pytest.approx(0.5)
        assert likelihood_ratio(m, 0.0) == pytest.approx(1.0)

    def test_crossover_at_ratio_two(self, ex2):
        m = ex2.with_prior(ClassPrior(2 / 3, 1 / 3))
        assert likelihood_ratio(m, 0.347) == pytest.approx(1.0, abs=1e-2)

    def test_zero_crossover_model_ratio_at_origin(self, ex3):
        # 0.8 * N(0; 0, 2) / (0.2 * N(0; 0, 1)) = (0.8 / 2) / 0.2
        assert likelihood_ratio(ex3, 0.0) == pytest.approx(2.0, rel=1e-12)

    def test_total_mass(self, ex1):
        assert class_mass(ex1, 1, (-math.inf, math.inf)) == pytest.approx(0.5, abs=1e-12)
        assert class_mass(ex1, 2, (-math.inf, math.inf)) == pytest.approx(0.5, abs=1e-12)

    def test_mass_additivity(self, ex1):
        whole = ex1.class_mass(1, -3.0, 5.0)
        parts = ex1.class_mass(1, -3.0, 0.7) + ex1.class_mass(1, 0.7, 5.0)
        assert whole == pytest.approx(parts, abs=1e-12)

    def test_far_tail_keeps_precision(self):
        m = GaussianClassModel.create(0, 1, 5, 1)
        # upper-tail form: P(x > 10) for N(0,1) is about 7.6e-24
        assert m.class_mass(1, 10.0, math.inf) == pytest.approx(0.5 * 7.619853024160527e-24, rel=1e-9)

    def test_posterior_never_overflows(self, ex1):
        post = ex1.posterior(1e6)
        assert post.pt1_given_x == 1.0 and post.pt2_given_x == 0.0

    def test_invalid_sigma(self):
        with pytest.raises(ConstraintViolation):
            GaussianClassModel.create(0, 0, 1, 1)

    def test_invalid_interval(self, ex1):
        with pytest.raises(ValueError):
            ex1.class_mass(1, 2.0, 1.0)


class TestUniform:
    def test_example4_posteriors(self, ex4):
        post = ex4.posterior(0.75)
        assert post.pt1_given_x == pytest.approx(2 / 3) and post.pt2_given_x == pytest.approx(1 / 3)
        post = ex4.posterior(0.25)
        assert (post.pt1_given_x, post.pt2_given_x) == (1.0, 0.0)

    def test_zero_mixture_density(self, ex4):
        with pytest.raises(ZeroMixtureDensity):
            ex4.posterior(3.0)
        with pytest.raises(ZeroMixtureDensity):
            ex4.likelihood_ratio(-1.0)

    def test_infinite_ratio_where_only_class1(self, ex4):
        assert ex4.likelihood_ratio(0.25) == math.inf
        assert ex4.likelihood_ratio(2.0) == 0.0

    def test_closed_supports(self, ex4):
        assert ex4.density(1, 0.0) == 1.0 and ex4.density(1, 1.0) == 1.0
        assert ex4.density(2, 0.5) == 0.5

    def test_class_mass(self, ex4):
        assert class_mass(ex4, 2, (0.5, 1.0)) == 0.125
        assert class_mass(ex4, 1, (-math.inf, math.inf)) == 0.5

    @pytest.mark.parametrize(
        "iv,case",
        [
            ((0, 1, 0.5, 2.5), OverlapCase.PARTIAL_OVERLAP),
            ((0, 3, 1, 2), OverlapCase.FULL_OVERLAP_BY_CLASS1),
            ((1, 2, 0, 3), OverlapCase.FULL_OVERLAP_BY_CLASS1),
            ((0, 1, 2, 3), OverlapCase.SEPARATED),
            ((2, 3, 0, 1), OverlapCase.SEPARATED),
        ],
    )
    def test_overlap_case(self, iv, case):
        assert classify_overlap(*iv) is case
        assert UniformClassModel.create(*iv).overlap_case is case

    def test_inconsistent_overlap_case(self):
        with pytest.raises(ConstraintViolation):
            UniformClassModel(ClassPrior(0.5, 0.5), 0, 1, 2, 3, OverlapCase.PARTIAL_OVERLAP)

    def test_bad_support(self):
        with pytest.raises(ConstraintViolation):
            UniformClassModel.create(1, 0, 0, 1)
