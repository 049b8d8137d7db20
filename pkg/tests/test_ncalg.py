import random
import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from entwinelib.exceptions import NonTerminating, UnknownGenerator
from entwinelib.kernel import Monomial, Q, SampleSpec, Vect, Word
from entwinelib.ncalg import Presentation, QuantumEuclideanAlgebra, check_local_confluence, random_word, words

monomials = st.tuples(st.integers(-3, 3), st.integers(0, 2), st.integers(0, 2)).map(lambda t: Monomial(*t))


class QuantumEuclideanCase(unittest.TestCase):
    def setUp(self):
        self.P = QuantumEuclideanAlgebra(Q)
        self.v = self.P.generator("v")
        self.n = self.P.generator("n")
        self.nb = self.P.generator("nb")

    def test_commutation(self):
        nv = self.P.mul(self.n, self.v)
        self.assertEqual(nv, self.P.monomial(1, 1, 0, Q ** -2))
        self.assertEqual(str(nv), "q^-2 * v*n")
        self.assertEqual(self.P.mul(self.nb, self.n), self.P.monomial(0, 1, 1, Q ** -2))
        vi = self.P.generator("vi")
        self.assertEqual(self.P.mul(self.v, vi), self.P.one())

    def test_words_agree_with_closed_form(self):
        self.assertEqual(self.P.from_words(words(("n", "v"))), self.P.mul(self.n, self.v))
        word = words(("nb", "vi", "n", "v", "v"))
        expected = self.P.product(self.nb, self.P.generator("vi"), self.n, self.v, self.v)
        self.assertEqual(self.P.from_words(word), expected)

    def test_relations_vanish(self):
        for name, rel in self.P.relations():
            self.assertTrue(self.P.from_words(rel).is_zero(), name)

    def test_confluence(self):
        self.assertTrue(check_local_confluence(self.P.presentation).passed)

    def test_recognize_unit(self):
        self.assertEqual(self.P.recognize_unit(self.P.monomial(2, coeff=3)), self.P.monomial(-2, coeff=Fraction(1, 3)))
        self.assertIsNone(self.P.recognize_unit(self.n))
        self.assertIsNone(self.P.recognize_unit(self.v + self.n))

    def test_unknown_generator(self):
        self.assertRaises(UnknownGenerator, self.P.generator, "x")
        self.assertRaises(UnknownGenerator, self.P.presentation.normal_form, Word(("x",)))

    def test_numeric_q(self):
        P2 = QuantumEuclideanAlgebra(2)
        self.assertEqual(P2.mul(P2.generator("n"), P2.generator("v")), P2.monomial(1, 1, 0, Fraction(1, 4)))
        self.assertRaises(ValueError, QuantumEuclideanAlgebra, 0)

    def test_split_last(self):
        self.assertEqual(self.P.split_last(Monomial(2, 1, 1)), (Monomial(2, 1, 0), "nb"))
        self.assertEqual(self.P.split_last(Monomial(-1)), (Monomial(), "vi"))
        self.assertIsNone(self.P.split_last(Monomial()))

    def test_random_words_normalize(self):
        rng = random.Random(7)
        for _ in range(20):
            w = random_word(rng, 6)
            x = self.P.from_words(Vect.basis(w))
            self.assertEqual(x, self.P.from_words(self.P.to_words(x)))

    def test_random_element_bounded(self):
        spec = SampleSpec(max_degree=2, support_size=2)
        x = self.P.random_element(spec.rng(), spec)
        self.assertTrue(len(x) <= 2)
        self.assertTrue(all(m.degree() <= 2 for m in x.support()))

    @settings(deadline=None)
    @given(a=monomials, b=monomials, c=monomials)
    def test_associativity(self, a, b, c):
        x, y, z = Vect.basis(a), Vect.basis(b), Vect.basis(c)
        self.assertEqual(self.P.mul(self.P.mul(x, y), z), self.P.mul(x, self.P.mul(y, z)))


class PresentationCase(unittest.TestCase):
    def test_non_terminating(self):
        loop = Presentation(("a", "b"), [(("a", "b"), words(("b", "a"))), (("b", "a"), words(("a", "b")))], max_steps=50)
        self.assertRaises(NonTerminating, loop.normal_form, Word(("a", "b")))
        self.assertFalse(loop.is_normal(("b", "a")))
        self.assertTrue(loop.is_normal(("a", "a")))
