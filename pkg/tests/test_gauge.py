import unittest
from fractions import Fraction

from entwinelib.crossprod import check_crossed_axioms, check_equivalent_data
from entwinelib.entwine import InstanceParams
from entwinelib.exceptions import GaugeValidationError, TrivialCocycleInadmissible
from entwinelib.gauge import (
    GaugeTransformation,
    check_equivalence,
    check_gauge,
    coboundary,
    extract_gamma,
    gauge_product,
    gauge_transform,
    random_scalar_gauges,
    scalar_gauge,
    theta_gamma,
)
from entwinelib.instances import eq2_gauge, hyperboloid_generators, make_bialgebra_toy, make_eq2, toy_gauge
from entwinelib.kernel import GroupLike, SampleSpec, Vect


def c(p):
    return Vect.basis(GroupLike(p))


class Eq2GaugeCase(unittest.TestCase):
    def setUp(self):
        self.params = InstanceParams()
        self.E, self.T, self.D = make_eq2(self.params)
        self.P = self.E.P
        self.g = eq2_gauge(self.E, lambda k: Fraction(2) ** k)
        self.spec = SampleSpec(seed=13, max_degree=2, p_window=(-2, 2), support_size=2, trials=8)

    def test_gauge_checks(self):
        self.assertTrue(check_gauge(self.g, self.spec).passed)
        self.assertTrue(check_gauge(self.g.inverse(), self.spec).passed)
        self.assertEqual(self.g.gammaInv(c(3)), self.P.one().scale(Fraction(1, 8)))

    def test_transform_is_equivalent(self):
        gauged = gauge_transform(self.D, self.g, self.spec)
        self.assertTrue(check_crossed_axioms(gauged, self.spec).passed)
        self.assertTrue(check_equivalence(self.D, gauged, self.g, self.spec).passed)
        back = gauge_transform(gauged, self.g.inverse())
        self.assertTrue(check_equivalent_data(self.D, back, self.spec).passed)

    def test_identity_gauge(self):
        g = scalar_gauge(self.E, lambda b: 1, name="one")
        gauged = gauge_transform(self.D, g)
        self.assertTrue(check_equivalent_data(self.D, gauged, self.spec).passed)
        for p, r in ((0, 1), (2, -1)):
            self.assertEqual(gauged.sigma(c(p).tensor(c(r))), self.D.sigma(c(p).tensor(c(r))))

    def test_coboundary_sigma(self):
        g = eq2_gauge(self.E, lambda k: Fraction(k + 1))
        gauged = gauge_transform(self.D, g)
        expected = self.P.one().scale(Fraction(3, 2))
        self.assertEqual(gauged.sigma(c(1).tensor(c(2))), expected)
        self.assertEqual(coboundary(self.E, self.D.rho, g)(c(1).tensor(c(2))), expected)

    def test_coboundary_needs_admissible_psic(self):
        E, _, D = make_eq2(self.params, mutate="psic-shift")
        g = eq2_gauge(E, lambda k: Fraction(2) ** k)
        self.assertRaises(TrivialCocycleInadmissible, coboundary, E, D.rho, g, self.spec)

    def test_coboundary_checks_psic_without_spec(self):
        E, _, D = make_eq2(self.params, mutate="psic-shift")
        g = eq2_gauge(E, lambda k: Fraction(2) ** k)
        self.assertRaises(TrivialCocycleInadmissible, coboundary, E, D.rho, g)

    def test_random_gauges(self):
        gauges = random_scalar_gauges(self.E, self.spec)
        self.assertEqual(len(gauges), 20)
        again = random_scalar_gauges(self.E, self.spec)
        for g, h in zip(gauges, again):
            self.assertEqual(g.gamma(self.E.e_vec()), self.P.one())
            self.assertEqual(g.gamma(c(3)), h.gamma(c(3)))
            self.assertFalse(g.gamma(c(-1)).is_zero())
        small = self.spec.with_trials(2)
        for g, h in zip(gauges, gauges[1:4]):
            gauged = gauge_transform(self.D, g, small)
            self.assertTrue(check_crossed_axioms(gauged, small).passed)
            self.assertTrue(check_equivalence(self.D, gauged, g, small).passed)
            with_coboundary = gauged.with_maps(sigma=coboundary(self.E, self.D.rho, g, small))
            self.assertTrue(check_equivalent_data(gauged, with_coboundary, small).passed)
            self.assertTrue(check_gauge(gauge_product(g, h), small).passed)

    def test_product(self):
        h = eq2_gauge(self.E, lambda k: Fraction(3) ** k)
        gh = gauge_product(self.g, h)
        self.assertEqual(gh.gamma(c(2)), self.P.one().scale(36))
        self.assertEqual(gh.gammaInv(c(1)), self.P.one().scale(Fraction(1, 6)))
        self.assertTrue(check_gauge(gh, self.spec).passed)

    def test_theta_gamma(self):
        z, _ = hyperboloid_generators(self.P, self.params)
        self.assertEqual(theta_gamma(self.g, z.tensor(c(2))), z.scale(4).tensor(c(2)))

    def test_invalid_gauges(self):
        bad_unit = scalar_gauge(self.E, lambda b: 2, name="two")
        self.assertEqual(check_gauge(bad_unit, self.spec).first_failure().check_id, "gauge.unit")
        self.assertRaises(GaugeValidationError, gauge_transform, self.D, bad_unit, self.spec)
        not_fixed = GaugeTransformation(self.E, lambda b: self.P.monomial(b.p), name="v")
        self.assertTrue(check_gauge(not_fixed, self.spec).failed)

    def test_extract(self):
        g, report = extract_gamma(self.E, self.g.theta_map, self.spec)
        self.assertTrue(report.passed)
        self.assertEqual(g.gamma(c(-2)), self.g.gamma(c(-2)))


class BialgebraToyGaugeCase(unittest.TestCase):
    def setUp(self):
        self.E, self.D = make_bialgebra_toy(2)
        self.g = toy_gauge(self.E)
        self.spec = SampleSpec(seed=3, trials=20)

    def test_gauge(self):
        self.assertTrue(check_gauge(self.g, self.spec).passed)
        gauged = gauge_transform(self.D, self.g, self.spec)
        self.assertTrue(check_crossed_axioms(gauged, self.spec).passed)
        self.assertTrue(check_equivalence(self.D, gauged, self.g, self.spec).passed)
        C = self.E.C
        self.assertEqual(gauged.sigma(C.elem(1).tensor(C.elem(1))), self.E.P.one().scale(4))
