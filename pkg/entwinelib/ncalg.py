# Copyright (C) 2024
# entwinelib contributors.
# All rights reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Finitely presented noncommutative algebras.

A :class:`Presentation` rewrites words in its generators with oriented
rules until no rule left-hand side occurs. :func:`check_local_confluence`
resolves every overlap of two left-hand sides both ways.

:class:`QuantumEuclideanAlgebra` is the quantum Euclidean group
generated by ``v``, ``vi`` (the inverse of ``v``), ``n`` and ``nb``; its
elements are :class:`entwinelib.kernel.Vect` objects over normal-form
:class:`entwinelib.kernel.Monomial` indices ``v^k n^a nb^b``.
"""
from __future__ import unicode_literals

import logging
from fractions import Fraction

from six import python_2_unicode_compatible

from .exceptions import NonTerminating, UnknownGenerator
from .kernel import (
    Algebra,
    CheckReport,
    LinForm,
    Monomial,
    Space,
    Vect,
    Word,
    canonical,
    is_unit,
    random_scalar,
    unit_inverse,
)

logger = logging.getLogger(__name__)

(LEFTMOST, RIGHTMOST) = ("leftmost", "rightmost")


@python_2_unicode_compatible
class RewriteRule(object):
    """Oriented rule ``lhs -> rhs`` with ``rhs`` a Vect over Word indices."""

    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs, rhs):
        self.lhs = tuple(lhs)
        if not self.lhs:
            raise ValueError("A rewrite rule needs a nonempty left-hand side")
        self.rhs = rhs

    def occurs_at(self, symbols, pos):
        return symbols[pos:pos + len(self.lhs)] == self.lhs

    def apply(self, symbols, pos, coeff=1):
        """Terms of ``coeff * symbols`` with this rule applied at ``pos``."""
        head, tail = symbols[:pos], symbols[pos + len(self.lhs):]
        return [(Word(head + w.symbols + tail), coeff * c) for w, c in self.rhs.items()]

    def __str__(self):
        return "%s -> %s" % (Word(self.lhs), self.rhs)


def words(*symbol_lists):
    """Vect with one unit-coefficient word per symbol list."""
    return Vect.sum(Vect.basis(Word(s)) for s in symbol_lists)


class Presentation(object):
    """
    Generators and oriented rewrite rules.

    :param generators: ordered list of generator symbols.
    :param rules: list of :class:`RewriteRule` or ``(lhs, rhs)`` pairs.
    :param inverses: optional mapping of a generator to its inverse symbol.
    :param max_steps: rewrite step bound per :meth:`normal_form` call.
    """

    MAX_STEPS = 10 ** 6

    def __init__(self, generators, rules, inverses=None, max_steps=MAX_STEPS):
        self.generators = tuple(generators)
        self.inverses = dict(inverses or {})
        self.rules = []
        for rule in rules:
            if not isinstance(rule, RewriteRule):
                rule = RewriteRule(*rule)
            self._validate_word(rule.lhs)
            for w, _ in rule.rhs.items():
                self._validate_word(w.symbols)
            self.rules.append(rule)
        self.max_steps = max_steps

    def _validate_word(self, symbols):
        for s in symbols:
            if s not in self.generators:
                raise UnknownGenerator(s)

    def find_redex(self, symbols, strategy=LEFTMOST):
        """First ``(pos, rule)`` to rewrite, scanning from the chosen end."""
        positions = range(len(symbols))
        if strategy == RIGHTMOST:
            positions = reversed(positions)
        for pos in positions:
            for rule in self.rules:
                if rule.occurs_at(symbols, pos):
                    return pos, rule
        return None

    def is_normal(self, symbols):
        return self.find_redex(tuple(symbols)) is None

    def normal_form(self, v, strategy=LEFTMOST):
        """
        Rewrite every word of ``v`` to normal form.

        :param v: Vect over Word indices, or a single Word.
        :raises NonTerminating: when more than ``max_steps`` rewrites occur.
        """
        if isinstance(v, Word):
            v = Vect.basis(v)
        pending = list(v.items())
        done = {}
        steps = 0
        while pending:
            w, c = pending.pop()
            self._validate_word(w.symbols)
            redex = self.find_redex(w.symbols, strategy)
            if redex is None:
                done[w] = done.get(w, 0) + c
                continue
            steps += 1
            if steps > self.max_steps:
                raise NonTerminating(self.max_steps)
            pos, rule = redex
            pending.extend(rule.apply(w.symbols, pos, c))
        logger.debug("normal_form: %d rewrite steps", steps)
        return Vect(done)

    def overlaps(self):
        """
        Critical pairs as ``(word, (pos1, rule1), (pos2, rule2))``: suffix and
        prefix overlaps of two left-hand sides, and inclusions of one
        left-hand side in another.
        """
        found = []
        for r1 in self.rules:
            for r2 in self.rules:
                a, b = r1.lhs, r2.lhs
                for k in range(1, min(len(a), len(b))):
                    if a[-k:] == b[:k]:
                        found.append((a + b[k:], (0, r1), (len(a) - k, r2)))
                if r1 is not r2 and len(b) <= len(a):
                    for pos in range(len(a) - len(b) + 1):
                        if a[pos:pos + len(b)] == b:
                            found.append((a, (0, r1), (pos, r2)))
        return found


def check_local_confluence(pres):
    """Resolve every critical pair of ``pres`` both ways."""
    report = CheckReport("confluence")
    for word, (p1, r1), (p2, r2) in pres.overlaps():
        left = pres.normal_form(Vect(r1.apply(word, p1)))
        right = pres.normal_form(Vect(r2.apply(word, p2)))
        if not report.expect_equal(left, right, input=Word(word)):
            break
    logger.debug("confluence: %d critical pairs, %s", report.trials, report.status)
    return report


class QuantumEuclideanAlgebra(Algebra):
    """
    The algebra generated by ``v``, ``vi``, ``n``, ``nb`` with
    ``v n = q^2 n v``, ``v nb = q^2 nb v``, ``n nb = q^2 nb n`` and
    ``v vi = vi v = 1``.

    Products of normal-form monomials use the closed form
    ``(k,a,b)(l,c,d) = q^(-2l(a+b) - 2bc) (k+l, a+c, b+d)``; the word-level
    :attr:`presentation` yields the same normal forms.

    :param q: unit scalar, a Fraction or the formal
        :data:`entwinelib.kernel.Q`.
    """

    name = "eq2.P"
    GENERATORS = ("v", "vi", "n", "nb")

    def __init__(self, q):
        self.q = canonical(q)
        if not is_unit(self.q):
            raise ValueError("q must be a unit scalar, got %s" % self.q)
        super(QuantumEuclideanAlgebra, self).__init__()
        self.presentation = self._build_presentation()

    def _build_presentation(self):
        qm2 = self.q ** -2
        q2 = self.q ** 2
        one = words(())
        rules = [
            (("n", "v"), words(("v", "n")) * qm2),
            (("nb", "v"), words(("v", "nb")) * qm2),
            (("nb", "n"), words(("n", "nb")) * qm2),
            (("n", "vi"), words(("vi", "n")) * q2),
            (("nb", "vi"), words(("vi", "nb")) * q2),
            (("v", "vi"), one),
            (("vi", "v"), one),
        ]
        return Presentation(self.GENERATORS, rules, inverses={"v": "vi", "vi": "v"})

    def mul_basis(self, a, b):
        exponent = -2 * b.k * (a.a + a.b) - 2 * a.b * b.a
        return Vect.basis(Monomial(a.k + b.k, a.a + b.a, a.b + b.b), self.q ** exponent)

    def unit_index(self):
        return Monomial()

    def generator(self, gen):
        try:
            return Vect.basis(
                {
                    "v": Monomial(1),
                    "vi": Monomial(-1),
                    "n": Monomial(0, 1),
                    "nb": Monomial(0, 0, 1),
                }[gen]
            )
        except KeyError:
            raise UnknownGenerator(gen)

    def split_last(self, index):
        k, a, b = index.k, index.a, index.b
        if b > 0:
            return Monomial(k, a, b - 1), "nb"
        if a > 0:
            return Monomial(k, a - 1, 0), "n"
        if k > 0:
            return Monomial(k - 1), "v"
        if k < 0:
            return Monomial(k + 1), "vi"
        return None

    def monomial(self, k=0, a=0, b=0, coeff=1):
        return Vect.basis(Monomial(k, a, b), coeff)

    def from_words(self, v, strategy=LEFTMOST):
        """Normalize a Vect over Word indices into a Vect over Monomials."""
        acc = []
        for w, c in self.presentation.normal_form(v, strategy).items():
            k = w.symbols.count("v") - w.symbols.count("vi")
            acc.append((Monomial(k, w.symbols.count("n"), w.symbols.count("nb")), c))
        return Vect(acc)

    def to_words(self, v):
        """Write each monomial as its normal-form word."""
        acc = []
        for m, c in v.items():
            symbols = ("v",) * m.k if m.k >= 0 else ("vi",) * (-m.k)
            acc.append((Word(symbols + ("n",) * m.a + ("nb",) * m.b), c))
        return Vect(acc)

    def relations(self):
        """The five defining relations as ``(name, Vect over words)``, each equal to zero."""
        q2 = self.q ** 2
        return [
            ("v*n", words(("v", "n")) - words(("n", "v")) * q2),
            ("v*nb", words(("v", "nb")) - words(("nb", "v")) * q2),
            ("n*nb", words(("n", "nb")) - words(("nb", "n")) * q2),
            ("v*vi", words(("v", "vi")) - words(())),
            ("vi*v", words(("vi", "v")) - words(())),
        ]

    def recognize_unit(self, a):
        """
        Inverse of ``a`` when ``a`` is a single term ``lambda * v^k`` with a
        unit coefficient, else None.
        """
        if len(a) != 1:
            return None
        (m, c), = a.items()
        if m.a or m.b or not is_unit(c):
            return None
        return Vect.basis(Monomial(-m.k), unit_inverse(c))

    def character(self):
        """The character ``v^k n^a nb^b -> 1`` if ``a = b = 0`` else ``0``."""
        return LinForm(
            lambda m: Fraction(1) if m.a == 0 and m.b == 0 else Fraction(0),
            name="kappa",
        )

    def random_monomial(self, rng, max_degree):
        degree = rng.randint(0, max_degree)
        k = rng.randint(-degree, degree)
        rest = degree - abs(k)
        a = rng.randint(0, rest)
        return Monomial(k, a, rest - a)

    def random_element(self, rng, spec):
        symbolic = not isinstance(self.q, Fraction)
        terms = rng.randint(1, spec.support_size)
        return Vect(
            (self.random_monomial(rng, spec.max_degree), random_scalar(rng, symbolic))
            for _ in range(terms)
        )

    def space(self):
        return Space(self.name, self.random_element)


def random_word(rng, length, generators=QuantumEuclideanAlgebra.GENERATORS):
    return Word(tuple(rng.choice(generators) for _ in range(length)))
