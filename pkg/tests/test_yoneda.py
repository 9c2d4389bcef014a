"""Tests for forward Cauchy sequences, Yoneda limits and the
function-space completeness results."""

from fractions import Fraction as F

import pytest

from realcat.errors import NotForwardCauchy, NotMValued, PreconditionError
from realcat.qcat import QCat, enumerate_functors, hom_power, two_point
from realcat.tnorm import godel, lukasiewicz, remark4
from realcat.tnorm import product as product_norm
from realcat.yoneda import (
    FCSequence,
    approx_property,
    canonical_limit,
    check_alpha_monotone_lemma,
    check_ev,
    curry,
    function_space_limit,
    is_alpha_monotone,
    is_forward_cauchy,
    uncurry,
    yoneda_limits,
)

LUK = lukasiewicz()
GOD = godel()


@pytest.fixture
def chain():
    """Three points with asymmetric distances, all pairs below 1."""
    return QCat(
        LUK,
        ("a", "b", "c"),
        (
            (F(1), F(3, 4), F(1, 2)),
            (F(1, 2), F(1), F(3, 4)),
            (F(1, 4), F(1, 2), F(1)),
        ),
    )


@pytest.fixture
def cluster():
    """Two points at mutual distance 1 plus an outlier."""
    return QCat(
        LUK,
        ("a", "b", "x"),
        (
            (F(1), F(1), F(1, 2)),
            (F(1), F(1), F(1, 2)),
            (F(1, 4), F(1, 4), F(1)),
        ),
    )


class TestForwardCauchy:
    def test_constant_sequence_is_cauchy(self, chain):
        assert is_forward_cauchy(FCSequence(chain, (), ("a",)))

    def test_prefix_is_irrelevant(self, chain):
        assert is_forward_cauchy(FCSequence(chain, ("c", "b"), ("a",)))

    def test_mixed_cycle_needs_mutual_one(self, chain, cluster):
        assert not is_forward_cauchy(FCSequence(chain, (), ("a", "b")))
        assert is_forward_cauchy(FCSequence(cluster, (), ("a", "b")))

    def test_unknown_point_rejected(self, chain):
        with pytest.raises(ValueError):
            FCSequence(chain, (), ("nope",))

    def test_empty_cycle_rejected(self, chain):
        with pytest.raises(ValueError):
            FCSequence(chain, ("a",), ())


class TestYonedaLimits:
    def test_constant_sequence_limits(self, chain):
        s = FCSequence(chain, (), ("b",))
        assert "b" in yoneda_limits(s).points
        assert canonical_limit(s) == "b"

    def test_limits_of_cluster_cycle(self, cluster):
        s = FCSequence(cluster, ("x",), ("a", "b"))
        lims = yoneda_limits(s).points
        assert set(lims) == {"a", "b"}
        assert canonical_limit(s) == "a"

    def test_limits_are_mutually_isomorphic(self, cluster):
        s = FCSequence(cluster, (), ("b", "a"))
        lims = yoneda_limits(s).points
        for p in lims:
            for q in lims:
                assert cluster.r(p, q) == 1

    def test_non_cauchy_raises(self, chain):
        with pytest.raises(NotForwardCauchy):
            yoneda_limits(FCSequence(chain, (), ("a", "c")))

    def test_limit_tail_formula(self, cluster):
        s = FCSequence(cluster, (), ("a", "b"))
        lim = canonical_limit(s)
        for x in cluster.points:
            assert cluster.r(lim, x) == min(
                cluster.r("a", x), cluster.r("b", x)
            )


class TestAlphaMonotone:
    def test_monotonicity_threshold(self, chain):
        s = FCSequence(chain, (), ("a",))
        assert is_alpha_monotone(s, 1)
        s2 = FCSequence(chain, (), ("a", "b"))
        # forward distances within the cycle are >= 1/2
        assert is_alpha_monotone(s2, F(1, 2))
        assert not is_alpha_monotone(s2, F(3, 4))

    def test_lemma_holds_for_idempotent_alpha(self, chain):
        s = FCSequence(chain, (), ("a", "b"))
        # 0 is idempotent for Lukasiewicz
        assert check_alpha_monotone_lemma(s, 0).passed

    def test_non_idempotent_alpha_rejected(self, chain):
        with pytest.raises(PreconditionError):
            check_alpha_monotone_lemma(FCSequence(chain, (), ("a",)), F(1, 2))

    def test_not_monotone_enough_rejected(self, chain):
        s = FCSequence(chain, (), ("a", "b"))
        with pytest.raises(PreconditionError):
            check_alpha_monotone_lemma(s, 1)

    def test_godel_interior_idempotents(self, cluster):
        c = QCat(GOD, cluster.points, cluster.matrix)
        s = FCSequence(c, (), ("a", "b"))
        assert check_alpha_monotone_lemma(s, F(1, 2)).passed


class TestApproxProperty:
    def test_case_assignments(self):
        assert approx_property(GOD).case == 2
        assert approx_property(LUK).case == 1
        assert approx_property(product_norm()).case == 1
        assert approx_property(remark4()).case == 1

    def test_supremum_is_one_everywhere(self):
        for t in (GOD, LUK, product_norm(), remark4()):
            rep = approx_property(t)
            assert rep.passed and rep.supremum == 1

    def test_top_membership_tracks_the_case(self):
        assert approx_property(LUK).includes_top
        assert not approx_property(GOD).includes_top


class TestFunctionSpaceLimits:
    def setup_method(self):
        self.a = two_point(LUK, F(1, 2), F(1, 2))
        self.b = two_point(LUK, F(1, 2), F(1, 4))

    def test_constant_functor_sequence(self):
        hom = hom_power(self.a, self.b)
        f = hom.points[0]
        lim = function_space_limit(self.a, self.b, (), (f,))
        assert lim.mapping == f

    def test_cycling_between_isomorphic_functors(self):
        a = two_point(LUK, F(1, 2), F(1, 2))
        cod = QCat(
            LUK,
            ("a", "b", "x"),
            (
                (F(1), F(1), F(1, 2)),
                (F(1), F(1), F(1, 2)),
                (F(1, 4), F(1, 4), F(1)),
            ),
        )
        hom = hom_power(a, cod)
        mutual = [
            (f, g)
            for f in hom.points
            for g in hom.points
            if f != g and hom.r(f, g) == 1 and hom.r(g, f) == 1
        ]
        assert mutual, "expected at least one nontrivial mutual-1 pair"
        for f, g in mutual:
            lim = function_space_limit(a, cod, (), (f, g))
            assert hom.r(lim.mapping, f) == 1
            assert hom.r(lim.mapping, g) == 1

    def test_non_cauchy_functor_sequence_raises(self):
        hom = hom_power(self.a, self.b)
        far = [
            (f, g)
            for f in hom.points
            for g in hom.points
            if hom.r(f, g) < 1
        ]
        f, g = far[0]
        with pytest.raises(NotForwardCauchy):
            function_space_limit(self.a, self.b, (), (f, g))

    def test_values_outside_m_rejected(self):
        bad = two_point(LUK, F(3, 4), F(3, 4))
        hom = hom_power(bad, bad)
        with pytest.raises(NotMValued):
            function_space_limit(bad, bad, (), (hom.points[0],))


class TestEvaluationAndCurrying:
    def test_check_ev_on_m_valued_instances(self):
        a = two_point(LUK, F(1, 2), F(1, 4))
        b = two_point(LUK, F(1, 4), F(1, 2))
        assert check_ev(a, b).passed

    def test_curry_uncurry_roundtrip_all_functors(self):
        from realcat.qcat import product

        a = two_point(LUK, F(1, 2), F(1, 2))
        b = two_point(LUK, F(1, 4), F(1, 4))
        c = two_point(LUK, F(1, 2), F(0))
        ac = product(a, c)
        hom = hom_power(a, b)
        direct = enumerate_functors(ac, b)
        curried = enumerate_functors(c, hom)
        assert len(direct) == len(curried)
        seen = set()
        for f in direct:
            g = curry(a, c, b, f)
            assert uncurry(a, c, b, g).mapping == f.mapping
            seen.add(g.mapping)
        assert seen == {g.mapping for g in curried}
