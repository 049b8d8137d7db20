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
Coalgebras, the convolution product of maps from a coalgebra into an
algebra, and finite groups with their group algebras.
"""
from __future__ import unicode_literals

import itertools
import logging
from fractions import Fraction

from .exceptions import NotInvertibleAt
from .kernel import (
    Algebra,
    CheckReport,
    GroupElem,
    GroupLike,
    LinForm,
    LinMap,
    Pair,
    Space,
    Vect,
    apply_at,
    is_unit,
    random_scalar,
    unit_inverse,
)

logger = logging.getLogger(__name__)


class Coalgebra(object):
    """
    Coalgebra given by the coproduct and counit of its basis elements.
    Subclasses implement :meth:`delta_basis` and :meth:`counit_basis`.
    """

    name = "coalgebra"

    #: True when every basis element is group-like.
    grouplike = False

    def __init__(self):
        self.delta = LinMap(self.delta_basis, name="%s.delta" % self.name)
        self.counit = LinForm(self.counit_basis, name="%s.counit" % self.name)

    def delta_basis(self, index):
        raise NotImplementedError

    def counit_basis(self, index):
        raise NotImplementedError

    def basis(self):
        """Finite basis, or None for infinite dimensional coalgebras."""
        return None

    def check_basis(self, spec):
        """Basis indices to check identities on."""
        return self.basis()

    def space(self):
        """Sampling space of this coalgebra."""
        return Space(
            self.name,
            lambda rng, spec: Vect.basis(rng.choice(self.check_basis(spec))),
            enumerate=lambda spec: [Vect.basis(i) for i in self.check_basis(spec)],
        )


class TabulatedCoalgebra(Coalgebra):
    """
    Finite coalgebra from explicit tables.

    :param basis: list of basis indices.
    :param delta: mapping index -> Vect over Pair indices.
    :param counit: mapping index -> scalar.
    """

    def __init__(self, basis, delta, counit, name="tabulated"):
        self.name = name
        self._basis = list(basis)
        self._delta = dict(delta)
        self._counit = dict(counit)
        super(TabulatedCoalgebra, self).__init__()

    def delta_basis(self, index):
        return self._delta.get(index)

    def counit_basis(self, index):
        return self._counit.get(index)

    def basis(self):
        return list(self._basis)


class GroupLikeCoalgebra(Coalgebra):
    """
    Coalgebra spanned by group-like elements ``c_p``, ``Delta c_p = c_p # c_p``
    and ``counit(c_p) = 1``.

    :param indices: finite list of allowed ``p``, or None for all integers.
        Checks over all integers use the ``p`` window of the
        :class:`entwinelib.kernel.SampleSpec`.
    """

    name = "C"
    grouplike = True

    def __init__(self, indices=None):
        self.indices = None if indices is None else sorted(indices)
        super(GroupLikeCoalgebra, self).__init__()

    def _member(self, index):
        return isinstance(index, GroupLike) and (
            self.indices is None or index.p in self.indices
        )

    def delta_basis(self, index):
        if not self._member(index):
            return None
        return Vect.basis(Pair(index, index))

    def counit_basis(self, index):
        if not self._member(index):
            return None
        return Fraction(1)

    def basis(self):
        if self.indices is None:
            return None
        return [GroupLike(p) for p in self.indices]

    def check_basis(self, spec):
        if self.indices is None:
            return [GroupLike(p) for p in spec.window()]
        return self.basis()


def sweedler_iterate(coalg, c, n, nesting="left"):
    """
    The ``n``-leg coproduct of ``c``. ``nesting="left"`` expands the first
    leg each time, ``"right"`` the last; coassociativity makes them equal.
    """
    if n < 1:
        raise ValueError("Sweedler iteration needs n >= 1")
    result = c
    for k in range(n - 1):
        pos = 0 if nesting == "left" else k
        result = apply_at(result, pos, coalg.delta)
    return result


def check_coalgebra(coalg, spec, rng=None):
    """Coassociativity and counit laws on the checked basis elements."""
    report = CheckReport("coalgebra")
    coassoc = report.child("coassociativity")
    counit = report.child("counit")
    for index in coalg.check_basis(spec):
        d = coalg.delta.on_basis(index)
        coassoc.expect_equal(apply_at(d, 0, coalg.delta), apply_at(d, 1, coalg.delta), input=index)
        c = Vect.basis(index)
        counit.expect_equal(apply_at(d, 0, coalg.counit), c, input=index)
        counit.expect_equal(apply_at(d, 1, coalg.counit), c, input=index)
    report.add(coassoc)
    report.add(counit)
    logger.debug("coalgebra %s: %s", coalg.name, report.status)
    return report


def convolve(f, g, coalg, alg, name=None):
    """The convolution ``(f*g)(c) = f(c1) g(c2)``."""

    def rule(index):
        v = apply_at(coalg.delta.on_basis(index), 0, f)
        v = apply_at(v, 1, g)
        return alg.mul_map(v)

    return LinMap(rule, name=name or "%s*%s" % (f.name, g.name))


def unit_counit(coalg, alg, name="1.counit"):
    """The convolution unit ``c -> counit(c) 1``."""
    return LinMap(lambda index: alg.one().scale(coalg.counit.on_basis(index)), name=name)


def conv_inverse_grouplike(f, alg, name=None):
    """
    Pointwise inverse ``c_p -> f(c_p)^-1`` of a map on a group-like basis.

    :raises NotInvertibleAt: if some ``f(c_p)`` is not a unit recognized by
        ``alg.recognize_unit``.
    """

    def rule(index):
        inverse = alg.recognize_unit(f.on_basis(index))
        if inverse is None:
            raise NotInvertibleAt(index)
        return inverse

    return LinMap(rule, name=name or "%s^-1" % f.name)


#
# Finite groups
#


class FiniteGroup(object):
    """
    Finite group on hashable labels.

    :param elements: list of labels, the identity first.
    :param mul: ``mul(g, h) -> label``.
    """

    def __init__(self, name, elements, mul):
        self.name = name
        self.elements = list(elements)
        self._mul = mul
        self.identity = self.elements[0]
        self._inv = {}
        for g in self.elements:
            for h in self.elements:
                if mul(g, h) == self.identity:
                    self._inv[g] = h
                    break

    def mul(self, g, h):
        return self._mul(g, h)

    def inv(self, g):
        return self._inv[g]

    def order(self):
        return len(self.elements)

    def conjugacy_classes(self):
        seen, classes = set(), []
        for g in self.elements:
            if g in seen:
                continue
            cls = sorted(set(self.mul(self.mul(self.inv(h), g), h) for h in self.elements))
            seen.update(cls)
            classes.append(cls)
        return classes

    def __len__(self):
        return len(self.elements)


def cyclic(n):
    if n < 1:
        raise ValueError("Cyclic group order must be positive")
    return FiniteGroup("Z%d" % n, list(range(n)), lambda a, b: (a + b) % n)


def product(g1, g2):
    elements = list(itertools.product(g1.elements, g2.elements))
    return FiniteGroup(
        "%sx%s" % (g1.name, g2.name),
        elements,
        lambda a, b: (g1.mul(a[0], b[0]), g2.mul(a[1], b[1])),
    )


def symmetric(n):
    """Permutations of ``range(n)`` as image tuples; ``(g*h)(i) = g(h(i))``."""
    elements = list(itertools.permutations(range(n)))
    return FiniteGroup("S%d" % n, elements, lambda g, h: tuple(g[h[i]] for i in range(n)))


class GroupAlgebra(Algebra, Coalgebra):
    """
    Group algebra of a finite group: basis :class:`GroupElem`, product from
    the group law, every basis element group-like.
    """

    grouplike = True

    def __init__(self, group, name=None):
        self.group = group
        self.name = name or "k[%s]" % group.name
        Algebra.__init__(self)
        Coalgebra.__init__(self)

    def _member(self, index):
        return isinstance(index, GroupElem) and index.label in self.group._inv

    def elem(self, label, coeff=1):
        return Vect.basis(GroupElem(label), coeff)

    def mul_basis(self, a, b):
        return Vect.basis(GroupElem(self.group.mul(a.label, b.label)))

    def unit_index(self):
        return GroupElem(self.group.identity)

    def delta_basis(self, index):
        if not self._member(index):
            return None
        return Vect.basis(Pair(index, index))

    def counit_basis(self, index):
        if not self._member(index):
            return None
        return Fraction(1)

    def basis(self):
        return [GroupElem(g) for g in self.group.elements]

    def recognize_unit(self, a):
        if len(a) != 1:
            return None
        (g, c), = a.items()
        if not is_unit(c):
            return None
        return Vect.basis(GroupElem(self.group.inv(g.label)), unit_inverse(c))

    def random_element(self, rng, spec):
        terms = rng.randint(1, spec.support_size)
        return Vect((rng.choice(self.basis()), random_scalar(rng)) for _ in range(terms))

    def space(self):
        return Space(
            self.name,
            self.random_element,
            enumerate=lambda spec: [Vect.basis(i) for i in self.basis()],
        )
