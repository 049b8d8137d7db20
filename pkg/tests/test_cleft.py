import unittest

from entwinelib.cleft import (
    Trivialization,
    check_cleft_iso,
    check_lemma26,
    check_trivialization,
    derive_crossed_data,
    theta,
    theta_inv,
    transported_direct,
    transported_formula,
)
from entwinelib.entwine import InstanceParams
from entwinelib.exceptions import TrivializationError
from entwinelib.instances import bialgebra_trivialization, hyperboloid_generators, make_bialgebra_toy, make_eq2
from entwinelib.kernel import GroupLike, SampleSpec, Vect


def c(p):
    return Vect.basis(GroupLike(p))


class Eq2CleftCase(unittest.TestCase):
    def setUp(self):
        self.params = InstanceParams(mu=3, nu=5, s=1)
        self.E, self.T, self.D = make_eq2(self.params)
        self.P = self.E.P
        self.spec = SampleSpec(seed=8, max_degree=2, p_window=(-2, 2), support_size=2, trials=10)

    def test_phi_and_inverse(self):
        self.assertEqual(self.T.phi(c(3)), self.P.monomial(2))
        self.assertEqual(self.T.phiInv(c(3)), self.P.monomial(-2))
        self.assertEqual(self.T.phi(self.E.e_vec()), self.P.one())

    def test_theta(self):
        one = self.P.one()
        self.assertEqual(theta(self.T, self.D.one()), one)
        for p in (-1, 0, 2):
            self.assertEqual(theta(self.T, one.tensor(c(p))), self.P.monomial(p - 1))
            self.assertEqual(theta_inv(self.T, self.P.monomial(p - 1)), one.tensor(c(p)))

    def test_checks_pass(self):
        self.assertTrue(check_trivialization(self.T, self.spec).passed)
        self.assertTrue(check_cleft_iso(self.D, self.T, self.spec).passed)
        self.assertTrue(check_lemma26(self.E, self.T, self.spec, routes=True).passed)

    def test_routes_agree(self):
        z, zb = hyperboloid_generators(self.P, self.params)
        v = c(2).tensor(self.P.mul(z, zb)).tensor(c(-1))
        self.assertEqual(transported_formula(self.T, v), transported_direct(self.T, v))

    def test_invalid_trivialization(self):
        T = Trivialization(self.E, lambda b: self.P.monomial(b.p), name="shifted")
        report = check_trivialization(T, self.spec)
        self.assertTrue(report.failed)
        self.assertEqual(report.first_failure().check_id, "trivialization.unit")
        self.assertRaises(TrivializationError, derive_crossed_data, T, self.spec)

    def test_skewed_psic_fails_predicate(self):
        E, T, _ = make_eq2(self.params, mutate="psic-skew")
        report = check_lemma26(E, T, self.spec)
        self.assertTrue(report.failed)
        self.assertEqual(report.first_failure().check_id, "lemma26.predicate")


class BialgebraToyCleftCase(unittest.TestCase):
    def setUp(self):
        self.E, self.D = make_bialgebra_toy(3)
        self.T = bialgebra_trivialization(self.E)
        self.spec = SampleSpec(seed=9, trials=20)

    def test_checks_pass(self):
        self.assertTrue(check_trivialization(self.T, self.spec).passed)
        D = derive_crossed_data(self.T, self.spec)
        self.assertTrue(check_cleft_iso(D, self.T, self.spec).passed)
        self.assertTrue(check_lemma26(self.E, self.T, self.spec, routes=True).passed)

    def test_theta_is_group_law(self):
        P, C = self.E.P, self.E.C
        self.assertEqual(theta(self.T, P.elem((2, 0)).tensor(C.elem(1))), P.elem((2, 1)))
        self.assertEqual(theta_inv(self.T, P.elem((2, 1))), P.elem((2, 0)).tensor(C.elem(1)))
