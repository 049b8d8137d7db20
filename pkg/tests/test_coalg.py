import unittest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from entwinelib.coalg import (
    GroupAlgebra,
    GroupLikeCoalgebra,
    TabulatedCoalgebra,
    check_coalgebra,
    conv_inverse_grouplike,
    convolve,
    cyclic,
    product,
    sweedler_iterate,
    symmetric,
    unit_counit,
)
from entwinelib.exceptions import NotInvertibleAt, UndefinedOnBasis
from entwinelib.kernel import GroupElem, GroupLike, LinMap, Pair, Q, SampleSpec, Vect
from entwinelib.ncalg import QuantumEuclideanAlgebra


class CoalgebraCase(unittest.TestCase):
    def setUp(self):
        self.spec = SampleSpec(p_window=(-2, 2))
        self.C = GroupLikeCoalgebra()

    def test_grouplike_laws(self):
        report = check_coalgebra(self.C, self.spec)
        self.assertTrue(report.passed)
        self.assertEqual(report.trials, 15)

    def test_restricted_indices(self):
        C = GroupLikeCoalgebra([0, 1])
        self.assertEqual(C.basis(), [GroupLike(0), GroupLike(1)])
        self.assertRaises(UndefinedOnBasis, C.delta, Vect.basis(GroupLike(5)))

    def test_sweedler(self):
        c = Vect.basis(GroupLike(2))
        self.assertEqual(sweedler_iterate(self.C, c, 1), c)
        self.assertEqual(sweedler_iterate(self.C, c, 3), Vect.basis(Pair(GroupLike(2), GroupLike(2), GroupLike(2))))
        self.assertRaises(ValueError, sweedler_iterate, self.C, c, 0)

    def test_corrupted_delta(self):
        c0, c1 = GroupLike(0), GroupLike(1)
        C = TabulatedCoalgebra(
            [c0, c1],
            {c0: Vect.basis(Pair(c0, c1)), c1: Vect.basis(Pair(c1, c1))},
            {c0: 1, c1: 1},
            name="broken",
        )
        report = check_coalgebra(C, self.spec)
        self.assertTrue(report.failed)
        self.assertEqual(report.first_failure().witness["input"], "c_0")

    def test_matrix_style(self):
        x, y = GroupElem("x"), GroupElem("y")
        C = TabulatedCoalgebra(
            [x, y],
            {x: Vect.basis(Pair(x, x)), y: Vect([(Pair(x, y), 1), (Pair(y, x), 1)])},
            {x: 1, y: 0},
            name="xy",
        )
        self.assertTrue(check_coalgebra(C, self.spec).passed)
        left = sweedler_iterate(C, Vect.basis(y), 3, nesting="left")
        self.assertEqual(left, sweedler_iterate(C, Vect.basis(y), 3, nesting="right"))
        self.assertEqual(len(left), 3)

    @settings(deadline=None)
    @given(p=st.integers(-4, 4), r=st.integers(-4, 4), a=st.integers(1, 3), b=st.integers(-3, 3))
    def test_sweedler_nesting(self, p, r, a, b):
        c = Vect([(GroupLike(p), a), (GroupLike(r), b)])
        self.assertEqual(sweedler_iterate(self.C, c, 3, "left"), sweedler_iterate(self.C, c, 3, "right"))


class ConvolutionCase(unittest.TestCase):
    def setUp(self):
        self.P = QuantumEuclideanAlgebra(Q)
        self.C = GroupLikeCoalgebra()
        self.phi = LinMap(lambda c: self.P.monomial(c.p), name="phi")

    def test_inverse_of_powers(self):
        inv = conv_inverse_grouplike(self.phi, self.P)
        self.assertEqual(inv(Vect.basis(GroupLike(3))), self.P.monomial(-3))
        one = unit_counit(self.C, self.P)
        conv = convolve(self.phi, inv, self.C, self.P)
        for p in range(-2, 3):
            self.assertEqual(conv(Vect.basis(GroupLike(p))), one(Vect.basis(GroupLike(p))))

    def test_inverse_of_unit_is_itself(self):
        one = unit_counit(self.C, self.P)
        inv = conv_inverse_grouplike(one, self.P)
        self.assertEqual(inv(Vect.basis(GroupLike(4))), self.P.one())

    def test_scaled_monomial(self):
        f = LinMap(lambda c: self.P.monomial(2, coeff=2 * Q), name="f")
        inv = conv_inverse_grouplike(f, self.P)
        self.assertEqual(inv(Vect.basis(GroupLike(1))), self.P.monomial(-2, coeff=Fraction(1, 2) * Q ** -1))

    def test_not_invertible(self):
        f = LinMap(lambda c: self.P.generator("n"), name="n")
        inv = conv_inverse_grouplike(f, self.P)
        self.assertRaises(NotInvertibleAt, inv.on_basis, GroupLike(1))


class FiniteGroupCase(unittest.TestCase):
    def setUp(self):
        self.z4 = cyclic(4)
        self.s3 = symmetric(3)

    def test_groups(self):
        self.assertEqual(self.z4.inv(1), 3)
        self.assertEqual(self.z4.identity, 0)
        self.assertEqual(len(self.s3), 6)
        self.assertEqual(len(self.s3.conjugacy_classes()), 3)
        self.assertEqual(product(cyclic(2), cyclic(3)).order(), 6)
        self.assertRaises(ValueError, cyclic, 0)

    def test_group_algebra(self):
        G = GroupAlgebra(cyclic(3))
        self.assertEqual(G.mul(G.elem(1), G.elem(2)), G.one())
        self.assertEqual(G.recognize_unit(G.elem(1, 2)), G.elem(2, Fraction(1, 2)))
        self.assertIsNone(G.recognize_unit(G.elem(1) + G.elem(2)))
        self.assertTrue(check_coalgebra(G, SampleSpec()).passed)
        self.assertEqual(G.name, "k[Z3]")
