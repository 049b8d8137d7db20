import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from entwinelib.exceptions import InvalidParameters, InverseOfNonUnit, SamplingExhausted, UndefinedOnBasis
from entwinelib.kernel import (
    CheckReport,
    GroupLike,
    LaurentQ,
    LinForm,
    LinMap,
    Monomial,
    Pair,
    Q,
    SampleSpec,
    Space,
    Vect,
    apply_at,
    canonical,
    compose,
    draws,
    insert_at,
    sample_element,
    scalar_arith,
    unit_inverse,
)

laurent = st.dictionaries(
    st.integers(-3, 3), st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=4
).map(lambda d: canonical(LaurentQ(d)))

vects = st.lists(
    st.tuples(st.integers(-3, 3), st.fractions(min_value=-5, max_value=5, max_denominator=4)),
    max_size=5,
).map(lambda terms: Vect((GroupLike(p), c) for p, c in terms))


class LaurentCase(unittest.TestCase):
    def test_canonical_collapse(self):
        self.assertEqual(Q * Q ** -1, Fraction(1))
        self.assertIsInstance(Q * Q ** -1, Fraction)
        self.assertIsInstance(canonical(LaurentQ({0: 3})), Fraction)
        self.assertEqual(hash(LaurentQ({0: 3})), hash(Fraction(3)))

    def test_render(self):
        self.assertEqual(str(1 - Q ** 2), "-q^2 + 1")
        self.assertEqual(str(Q ** -2), "q^-2")
        self.assertEqual(str(LaurentQ({1: Fraction(1, 2)})), "1/2*q")

    def test_unit_inverse(self):
        self.assertEqual(unit_inverse(LaurentQ({3: 2})), LaurentQ({-3: Fraction(1, 2)}))
        self.assertEqual(unit_inverse(Fraction(-4)), Fraction(-1, 4))
        self.assertRaises(InverseOfNonUnit, unit_inverse, 1 + Q)
        self.assertRaises(InverseOfNonUnit, unit_inverse, 0)

    def test_scalar_arith(self):
        self.assertEqual(scalar_arith("add", Q, -Q), 0)
        self.assertIsInstance(scalar_arith("mul", Q, Q ** -1), Fraction)
        self.assertEqual(scalar_arith("neg", 1 - Q), Q - 1)
        self.assertEqual(scalar_arith("unit_inverse", 2 * Q), LaurentQ({-1: Fraction(1, 2)}))
        self.assertRaises(ValueError, scalar_arith, "div", Q, Q)

    @settings(deadline=None)
    @given(a=laurent, b=laurent, c=laurent)
    def test_ring_laws(self, a, b, c):
        self.assertEqual((a + b) * c, a * c + b * c)
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a - a, 0)


class VectCase(unittest.TestCase):
    def setUp(self):
        self.a = GroupLike(1)
        self.b = GroupLike(2)
        self.m = Monomial(1, 1, 0)

    def test_accumulate_and_prune(self):
        v = Vect([(self.a, 1), (self.a, 2), (self.b, 0)])
        self.assertEqual(v.coeff(self.a), 3)
        self.assertEqual(v.support(), [self.a])
        self.assertTrue(Vect([(self.a, 1), (self.a, -1)]).is_zero())
        self.assertRaises(TypeError, Vect, [("a", 1)])

    def test_pair_is_flat(self):
        c = GroupLike(3)
        self.assertEqual(Pair(Pair(self.a, self.b), c), Pair(self.a, Pair(self.b, c)))
        self.assertEqual(Pair.of([self.a]), self.a)
        self.assertEqual(Vect.basis(self.a).tensor(Vect.basis(self.b)).support(), [Pair(self.a, self.b)])

    def test_render(self):
        self.assertEqual(str(Vect.basis(self.m, Q ** -2)), "q^-2 * v*n")
        self.assertEqual(str(Vect.basis(Pair(Monomial(0, 1, 0), GroupLike(3)), 2)), "2 * n # c_3")
        self.assertEqual(str(Vect()), "0")
        self.assertEqual(str(Vect.basis(Monomial(), 3)), "3")
        self.assertEqual(str(Vect.basis(Monomial(1), -1)), "-v")

    def test_apply_and_insert(self):
        v = Vect.basis(self.a).tensor(Vect.basis(self.b))
        form = LinForm(lambda i: 2, name="two")
        self.assertEqual(apply_at(v, 0, form), Vect.basis(self.b, 2))
        swap = LinMap(lambda i: Vect.basis(GroupLike(-i.p)), name="neg")
        self.assertEqual(apply_at(v, 1, swap), Vect.basis(Pair(self.a, GroupLike(-2))))
        self.assertEqual(insert_at(Vect.basis(self.a), 0, Vect.basis(self.b)), Vect.basis(Pair(self.b, self.a)))
        self.assertRaises(ValueError, apply_at, Vect.basis(self.a), 1, form)

    def test_compose(self):
        shift = LinMap(lambda i: Vect.basis(GroupLike(i.p + 1)), name="shift")
        twice = compose(shift, shift)
        self.assertEqual(twice.name, "shift.shift")
        self.assertEqual(twice(Vect.basis(self.a)), Vect.basis(GroupLike(3)))

    def test_undefined_on_basis(self):
        partial = LinMap(lambda i: None if i.p < 0 else i, name="partial")
        self.assertEqual(partial(Vect.basis(self.a)), Vect.basis(self.a))
        self.assertRaises(UndefinedOnBasis, partial, Vect.basis(GroupLike(-1)))

    @settings(deadline=None)
    @given(u=vects, v=vects, w=vects)
    def test_module_laws(self, u, v, w):
        self.assertEqual(u + v, v + u)
        self.assertEqual((u + v) + w, u + (v + w))
        self.assertTrue((u - u).is_zero())
        self.assertEqual((u + v).scale(3), u.scale(3) + v.scale(3))


class SamplingCase(unittest.TestCase):
    def setUp(self):
        self.spec = SampleSpec(seed=42, trials=10)

    def test_invalid_spec(self):
        self.assertRaises(InvalidParameters, SampleSpec, p_window=(3, 1))
        self.assertRaises(InvalidParameters, SampleSpec, trials=0)
        self.assertRaises(InvalidParameters, SampleSpec, max_degree=-1)

    def test_rng_is_deterministic(self):
        self.assertEqual(self.spec.rng("x").random(), SampleSpec(seed=42).rng("x").random())
        self.assertNotEqual(self.spec.rng("x").random(), self.spec.rng("y").random())
        self.assertEqual(self.spec.window(), list(range(-5, 6)))

    def test_draws_exhaustive(self):
        two = Space("two", None, enumerate=lambda spec: [1, 2])
        three = Space("three", None, enumerate=lambda spec: [1, 2, 3])
        self.assertEqual(len(draws(self.spec, self.spec.rng(), [two, three])), 6)

    def test_draws_random(self):
        free = Space("free", lambda rng, spec: Vect.basis(GroupLike(rng.randint(0, 9))))
        self.assertEqual(len(draws(self.spec, self.spec.rng(), [free])), 10)
        self.assertEqual(draws(self.spec, self.spec.rng("s"), [free]), draws(self.spec, self.spec.rng("s"), [free]))

    def test_sampling_exhausted(self):
        never = Space("never", lambda rng, spec: Vect(), accept=lambda v: False)
        self.assertRaises(SamplingExhausted, sample_element, self.spec, never)


class CheckReportCase(unittest.TestCase):
    def setUp(self):
        self.report = CheckReport("root")

    def test_first_failure_keeps_witness(self):
        child = self.report.child("leaf")
        child.expect_equal(1, 1, input="x")
        child.expect_equal(1, 2, input="y")
        child.expect_equal(3, 4, input="z")
        self.report.add(child)
        self.assertTrue(self.report.failed)
        self.assertEqual(self.report.trials, 3)
        self.assertEqual(child.witness, {"input": "y", "lhs": "1", "rhs": "2"})
        self.assertIs(self.report.first_failure(), child)
        self.assertEqual(self.report.to_dict()["witness"], child.witness)

    def test_skip_and_pass(self):
        self.assertEqual(self.report.to_dict(), {"id": "root", "status": "pass", "trials": 0, "witness": None})
        skipped = CheckReport("other").skip("not applicable")
        self.assertTrue(skipped.passed)
        self.assertEqual(skipped.status, CheckReport.SKIPPED)
        self.assertEqual(self.report.child("a").check_id, "root.a")
