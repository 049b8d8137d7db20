import unittest

from entwinelib.coalg import GroupAlgebra, cyclic
from entwinelib.crossprod import (
    HatMaps,
    build_general,
    check_comodule_compat,
    check_crossed_axioms,
    check_equivalent_data,
    check_trivial_cocycle_admissible,
    components,
    cross,
    crossed_mul,
    module_and_comodule,
    products_agree,
    trivial_sigma,
)
from entwinelib.entwine import InstanceParams
from entwinelib.exceptions import AxiomFailure, LeftFactorNotFixed
from entwinelib.instances import hyperboloid_generators, make_bialgebra_toy, make_eq2
from entwinelib.kernel import GroupElem, GroupLike, Pair, Q, SampleSpec, Vect


def c(p):
    return Vect.basis(GroupLike(p))


class Eq2CrossedProductCase(unittest.TestCase):
    def setUp(self):
        self.params = InstanceParams()
        self.E, self.T, self.D = make_eq2(self.params)
        self.P = self.E.P
        self.one = self.P.one()
        self.z, self.zb = hyperboloid_generators(self.P, self.params)
        self.spec = SampleSpec(seed=11, max_degree=2, p_window=(-2, 2), support_size=2, trials=10)

    def test_unit(self):
        a = cross(self.z, c(1)) + cross(self.zb, c(-1)).scale(3)
        self.assertEqual(self.D.mul(self.D.one(), a, strict=True), a)
        self.assertEqual(self.D.mul(a, self.D.one(), strict=True), a)

    def test_grouplike_collapse(self):
        self.assertEqual(crossed_mul(self.D, cross(self.one, c(1)), cross(self.one, c(2))), cross(self.one, c(3)))
        _, _, D2 = make_eq2(InstanceParams(s=2))
        self.assertEqual(D2.mul(cross(self.one, c(1)), cross(self.one, c(2)), strict=True), cross(self.one, c(1)))

    def test_product_with_generator(self):
        product = crossed_mul(self.D, cross(self.one, c(1)), cross(self.z, c(0)))
        expected = cross(self.one, c(2)).scale(1 - Q ** 2) + cross(self.z, c(1)).scale(Q ** 2)
        self.assertEqual(product, expected)
        self.assertEqual(components(product)[GroupLike(1)], self.z.scale(Q ** 2))

    def test_rho_values(self):
        P, mu = self.P, self.params.mu
        self.assertEqual(self.D.rho(Vect.basis(Pair(GroupLike(3), P.unit_index()))), P.one())
        n_at_1 = self.D.rho(Vect.basis(Pair(GroupLike(1), P.generator("n").support()[0])))
        expected = (P.generator("n") + P.generator("v").scale(mu) - P.one().scale(mu)).scale(Q ** 2)
        self.assertEqual(n_at_1, expected)
        for p in (-1, 0, 2):
            self.assertEqual(self.D.sigma(c(p).tensor(c(1))), P.one())

    def test_strict_mode(self):
        v = self.P.generator("v")
        with self.assertRaises(LeftFactorNotFixed) as ctx:
            crossed_mul(self.D, cross(v, c(0)), cross(self.one, c(0)))
        self.assertEqual(ctx.exception.side, "left")
        with self.assertRaises(LeftFactorNotFixed) as ctx:
            crossed_mul(self.D, cross(self.one, c(0)), cross(v, c(0)))
        self.assertEqual(ctx.exception.side, "right")
        self.assertFalse(self.D.mul(cross(v, c(0)), cross(self.one, c(0))).is_zero())

    def test_axioms(self):
        self.assertTrue(check_crossed_axioms(self.D, self.spec).passed)
        self.assertTrue(check_comodule_compat(self.D, self.spec).passed)
        self.assertTrue(module_and_comodule(self.D, self.spec).passed)
        self.assertTrue(check_trivial_cocycle_admissible(self.E, self.spec).passed)
        self.assertTrue(products_agree(self.D, self.D, self.spec).passed)

    def test_sigma_q_breaks_normalization(self):
        _, _, D = make_eq2(self.params, mutate="sigma-q")
        report = check_crossed_axioms(D, self.spec)
        self.assertTrue(report.failed)
        self.assertEqual(report.first_failure().check_id, "crossed.conditions.iv")
        iff = [r for r in report.children if r.check_id == "crossed.iff"][0]
        self.assertTrue(iff.passed)

    def test_rho_scale_breaks_action(self):
        _, _, D = make_eq2(self.params, mutate="rho-scale")
        report = check_crossed_axioms(D, self.spec)
        self.assertEqual(report.first_failure().check_id, "crossed.conditions.i")

    def test_psic_shift_breaks_trivial_cocycle(self):
        E, _, D = make_eq2(self.params, mutate="psic-shift")
        self.assertTrue(check_crossed_axioms(D, self.spec).failed)
        self.assertTrue(check_trivial_cocycle_admissible(E, self.spec).failed)

    def test_psic_skew_fails_psic_conditions(self):
        _, _, D = make_eq2(self.params, mutate="psic-skew")
        report = check_crossed_axioms(D, self.spec)
        self.assertTrue(report.failed)
        self.assertTrue(report.first_failure().check_id.startswith("crossed.psic."))
        iff = [r for r in report.children if r.check_id == "crossed.iff"][0]
        self.assertEqual(iff.status, "skipped")

    def test_equivalent_data(self):
        self.assertTrue(check_equivalent_data(self.D, self.D.with_maps(name="copy"), self.spec).passed)
        _, _, D = make_eq2(self.params, mutate="sigma-q")
        self.assertTrue(check_equivalent_data(self.D, D, self.spec).failed)


class BialgebraToyCrossedCase(unittest.TestCase):
    def setUp(self):
        self.E, self.D = make_bialgebra_toy(2)
        self.spec = SampleSpec(seed=4, trials=20)

    def test_axioms(self):
        self.assertTrue(check_crossed_axioms(self.D, self.spec).passed)
        self.assertTrue(check_comodule_compat(self.D, self.spec).passed)
        self.assertTrue(module_and_comodule(self.D, self.spec).passed)
        self.assertTrue(check_trivial_cocycle_admissible(self.E, self.spec).passed)

    def test_group_algebra_product(self):
        P, C = self.E.P, self.E.C
        a = cross(P.elem((1, 0)), C.elem(1))
        b = cross(P.elem((1, 0)), C.elem(1))
        self.assertEqual(self.D.mul(a, b, strict=True), cross(P.elem((0, 0)), C.elem(0)))

    def test_trivial_sigma(self):
        C, P = self.E.C, self.E.P
        sigma = trivial_sigma(C, P)
        self.assertEqual(sigma(C.elem(1).tensor(C.elem(1))), P.one())

    def test_mutations_fail(self):
        for mutate in ("psi-shift", "psic-shift", "psic-skew", "sigma-q", "rho-scale"):
            _, D = make_bialgebra_toy(2, mutate=mutate)
            self.assertTrue(check_crossed_axioms(D, self.spec).failed, mutate)


class GeneralConstructionCase(unittest.TestCase):
    def setUp(self):
        self.M = GroupAlgebra(cyclic(2), name="M")
        self.V = GroupAlgebra(cyclic(3), name="V")
        self.spec = SampleSpec(seed=1)
        M, V = self.M, self.V

        def rho_hat(v, x):
            return Vect.basis(Pair(x, v))

        def sigma_hat(v, w):
            return Vect.basis(Pair(M.unit_index(), GroupElem(V.group.mul(v.label, w.label))))

        self.rho_hat = rho_hat
        self.sigma_hat = sigma_hat

    def test_tensor_type_algebra(self):
        hats = HatMaps(self.rho_hat, self.sigma_hat, self.V.unit_index())
        product, report = build_general(self.M, hats, self.M.space(), self.V.space(), self.spec)
        self.assertTrue(report.passed)
        a = self.M.elem(1).tensor(self.V.elem(2))
        self.assertEqual(product.mul(a, a), self.M.elem(0).tensor(self.V.elem(1)))
        self.assertEqual(product.mul(product.one(), a), a)

    def test_broken_unit(self):
        e = self.V.unit_index()

        def sigma_hat(v, w):
            if v == e:
                return Vect()
            return self.sigma_hat(v, w)

        hats = HatMaps(self.rho_hat, sigma_hat, e)
        _, report = build_general(self.M, hats, self.M.space(), self.V.space(), self.spec, validate=False)
        by_id = dict((r.check_id, r) for r in report.children)
        self.assertTrue(by_id["general.conditions"].failed)
        self.assertTrue(by_id["general.direct"].failed)
        self.assertTrue(by_id["general.iff"].passed)
        self.assertRaises(AxiomFailure, build_general, self.M, hats, self.M.space(), self.V.space(), self.spec)
