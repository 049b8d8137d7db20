import unittest
import warnings
from fractions import Fraction

from entwinelib.coalg import GroupAlgebra, cyclic
from entwinelib.dualcross import (
    QuotientCoalgebra,
    build_quotient,
    check_coideal,
    check_dual_axioms,
    check_dual_cleft_iso,
    check_dual_entwining,
    check_dual_equivalence,
    check_dual_gauge,
    check_dual_module_comodule,
    check_dual_trivialization,
    check_self_duality,
    dual_gauge,
    dual_theta_gamma,
)
from entwinelib.exceptions import RepresentativeDependence
from entwinelib.instances import (
    build_instance,
    make_bialgebra_toy,
    make_dual_cleft_toy,
    make_dual_conj_toy,
    make_dual_flip_toy,
)
from entwinelib.kernel import GroupElem, LinMap, Pair, SampleSpec, Vect


class QuotientCase(unittest.TestCase):
    def setUp(self):
        self.C = GroupAlgebra(cyclic(3), name="C")

    def test_quotient_by_difference(self):
        Q = QuotientCoalgebra(self.C, [self.C.elem(1) - self.C.elem(2)])
        self.assertEqual(Q.dimension(), 2)
        self.assertEqual(len(Q.j_basis), 1)
        self.assertEqual(Q.representatives, [GroupElem(0), GroupElem(2)])
        self.assertEqual(Q.pi(self.C.elem(1)), self.C.elem(2))
        self.assertTrue(check_coideal(Q).passed)

    def test_zero_generators_are_dropped(self):
        Q = QuotientCoalgebra(self.C, [Vect(), self.C.elem(0) - self.C.elem(0)])
        self.assertEqual(Q.dimension(), 3)
        self.assertEqual(Q.j_basis, [])

    def test_not_a_coideal(self):
        Q = QuotientCoalgebra(self.C, [self.C.elem(0)])
        report = check_coideal(Q)
        self.assertTrue(report.failed)
        self.assertEqual(report.first_failure().check_id, "coideal.counit")


class DualFlipToyCase(unittest.TestCase):
    def setUp(self):
        self.spec = SampleSpec(seed=4, trials=20)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            self.Dd, self.Q, self.Dc = make_dual_flip_toy(3)
        self.caught = caught

    def test_quotient_is_everything(self):
        self.assertEqual(self.Q.dimension(), 3)
        self.assertEqual(len(self.Q.j_basis), 0)
        self.assertTrue(any("J_kappa is zero" in str(w.message) for w in self.caught))

    def test_build_quotient_warns(self):
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            build_quotient(self.Dd, self.spec)
        self.assertEqual(len(caught), 1)

    def test_axioms(self):
        self.assertTrue(check_dual_entwining(self.Dd, self.spec).passed)
        self.assertTrue(check_dual_axioms(self.Dc, self.spec).passed)
        self.assertTrue(check_dual_module_comodule(self.Dc, self.spec).passed)

    def test_counit_and_action(self):
        c, u = self.Dd.C.elem(1), self.Dd.P.elem(2)
        self.assertEqual(self.Dd.action(c, u), c)
        self.assertEqual(self.Dd.kappa(u), Fraction(1))
        a = Vect.basis(Pair(GroupElem(1), GroupElem(2)))
        self.assertEqual(self.Dc.counit(a), Fraction(1))

    def test_mutations_fail(self):
        for mutate in ("sigma-scale", "rho-shift"):
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                _, _, Dc = make_dual_flip_toy(3, mutate=mutate)
            self.assertTrue(check_dual_axioms(Dc, self.spec).failed, mutate)

    def test_sigma_scale_fails_condition_iv(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            _, _, Dc = make_dual_flip_toy(3, mutate="sigma-scale")
        failure = check_dual_axioms(Dc, self.spec).first_failure()
        self.assertEqual(failure.check_id, "dual.conditions.iv")

    def test_gauge(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            inst = build_instance("dual-flip-toy")
        g = inst.dual_gauge
        self.assertTrue(check_dual_gauge(g, self.spec).passed)
        gauged = dual_gauge(inst.Dc, g, self.spec)
        self.assertTrue(check_dual_axioms(gauged, self.spec).passed)
        self.assertTrue(check_dual_equivalence(inst.Dc, gauged, g, self.spec).passed)
        a = Vect.basis(Pair(GroupElem(1), GroupElem(1)))
        self.assertEqual(dual_theta_gamma(g, a), Vect.basis(Pair(GroupElem(1), GroupElem(2))))


class DualConjToyCase(unittest.TestCase):
    def setUp(self):
        self.spec = SampleSpec(seed=8, trials=15)
        self.Dd, self.Q, self.Dc = make_dual_conj_toy()

    def test_conjugacy_classes(self):
        self.assertEqual(self.Q.dimension(), 3)
        self.assertEqual(len(self.Q.j_basis), 3)
        self.assertTrue(check_coideal(self.Q).passed)

    def test_axioms(self):
        self.assertTrue(check_dual_entwining(self.Dd, self.spec).passed)
        self.assertTrue(check_dual_axioms(self.Dc, self.spec).passed)
        self.assertTrue(check_dual_module_comodule(self.Dc, self.spec).passed)

    def test_representative_dependence(self):
        P = self.Dd.P
        tagged = self.Dc.with_maps(
            rho_bar=LinMap(lambda c: Vect.basis(Pair(c, c)), name="rhoBar.tagged"),
            name="tagged",
        )
        a = Vect.basis(Pair(self.Q.representatives[0], P.basis()[0]))
        self.assertRaises(RepresentativeDependence, tagged.delta, a, True)
        tagged.delta(a)
        self.Dc.delta(a, strict=True)


class DualCleftToyCase(unittest.TestCase):
    def setUp(self):
        self.spec = SampleSpec(seed=6, trials=20)
        self.Dd, self.Q, self.Dc, self.Td = make_dual_cleft_toy(3, self.spec)

    def test_quotient(self):
        self.assertEqual(self.Q.dimension(), 3)
        self.assertEqual(len(self.Q.j_basis), 6)

    def test_trivialization(self):
        self.assertTrue(check_dual_trivialization(self.Td, self.spec).passed)
        self.assertTrue(check_dual_cleft_iso(self.Dc, self.Td, self.spec).passed)

    def test_axioms(self):
        self.assertTrue(check_dual_axioms(self.Dc, self.spec).passed)
        self.assertTrue(check_dual_module_comodule(self.Dc, self.spec).passed)


class SelfDualityCase(unittest.TestCase):
    def test_bialgebra_toy(self):
        E, _ = make_bialgebra_toy(2)
        report = check_self_duality(E, SampleSpec(seed=2, trials=10))
        self.assertTrue(report.passed)
        self.assertEqual(report.children[-1].check_id, "selfdual.involution")


if __name__ == "__main__":
    unittest.main()
