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
Entwining structures.

An :class:`Entwining` is a map ``psi: C # P -> P # C`` written
``psi(c # u) = u_alpha # c^alpha``. On an algebra with generators it is
given on generators and extended to monomials through
``psi(c # u u') = u_alpha u'_beta # c^alpha^beta``; on a finite algebra it
may be given on the whole basis.

:class:`EntwiningData` adds the group-like ``e`` and the map ``psiC`` on
``C # C``, and with them the coaction ``u -> psi(e # u)`` whose fixed
points form the subalgebra ``M``.
"""
from __future__ import unicode_literals

import logging

from .exceptions import InvalidParameters
from .kernel import (
    Q,
    CheckReport,
    LinMap,
    Pair,
    Vect,
    apply_at,
    canonical,
    draws,
    insert_at,
    is_unit,
    legs,
)

logger = logging.getLogger(__name__)


class InstanceParams(object):
    """
    Parameters of the quantum Euclidean instance.

    :param q: unit scalar, None for the formal variable.
    :param mu: nonzero rational.
    :param nu: nonzero rational.
    :param s: integer, ``e = c_s``.
    """

    DEFAULT_MU = 3
    DEFAULT_NU = 5
    DEFAULT_S = 0

    def __init__(self, q=None, mu=DEFAULT_MU, nu=DEFAULT_NU, s=DEFAULT_S):
        self.symbolic = q is None
        self.q = Q if q is None else canonical(q)
        self.mu = canonical(mu)
        self.nu = canonical(nu)
        self.s = int(s)
        if not is_unit(self.q):
            raise InvalidParameters("q must be invertible, got %s" % self.q)
        if self.mu == 0 or self.nu == 0:
            raise InvalidParameters("mu and nu must be nonzero")

    def to_dict(self):
        return {
            "q": "q" if self.symbolic else "%s" % self.q,
            "mu": "%s" % self.mu,
            "nu": "%s" % self.nu,
            "s": self.s,
        }

    def __repr__(self):
        return "InstanceParams(%s)" % ", ".join(
            "%s=%s" % kv for kv in sorted(self.to_dict().items())
        )


def split_last_leg(w):
    """Mapping ``last leg -> Vect of the remaining legs`` of a tensor."""
    parts = {}
    for index, c in w.items():
        ls = legs(index)
        parts.setdefault(ls[-1], []).append((Pair.of(ls[:-1]), c))
    return dict((k, Vect(v)) for k, v in parts.items())


class Entwining(object):
    """
    Entwining of an algebra ``P`` with a coalgebra ``C``.

    :param algebra: the algebra P.
    :param coalgebra: the coalgebra C.
    :param psi_gen: ``psi_gen(c, gen) -> Vect(P # C)`` on generators of P.
    :param psi_basis: ``psi_basis(c, u) -> Vect(P # C)`` on all basis
        indices; used when P has no generator presentation.
    """

    def __init__(self, algebra, coalgebra, psi_gen=None, psi_basis=None, name="psi"):
        if (psi_gen is None) == (psi_basis is None):
            raise ValueError("Give exactly one of psi_gen, psi_basis")
        self.P = algebra
        self.C = coalgebra
        self._psi_gen = psi_gen
        self._psi_basis = psi_basis
        self.psi = LinMap(self._psi_pair, name=name)

    def _psi_pair(self, index):
        c, u = legs(index)
        if self._psi_basis is not None:
            return self._psi_basis(c, u)
        split = self.P.split_last(u)
        if split is None:
            return Vect.basis(Pair(u, c))
        prefix, gen = split
        v = self.psi.on_basis(Pair(c, prefix))
        v = apply_at(v, 1, lambda cc: self._psi_gen(cc, gen))
        return apply_at(v, 0, self.P.mul_map, 2)

    def apply(self, c, u):
        """``psi(c # u)`` for vectors ``c`` in C and ``u`` in P."""
        return self.psi(c.tensor(u))

    def psi_word(self, c, symbols):
        """
        ``psi(c # w)`` for a word ``w`` in generators, one generator at a
        time, without rewriting ``w`` first.
        """
        v = Vect.basis(Pair(self.P.unit_index(), c))
        for gen in symbols:
            v = apply_at(v, 1, lambda cc, gen=gen: self._psi_gen(cc, gen))
            v = apply_at(v, 0, self.P.mul_map, 2)
        return v


def psi_apply(ent, c, u):
    return ent.apply(c, u)


def check_entwining(ent, spec, rng=None):
    """
    Multiplicativity and unit of psi over P, compatibility with the
    coproduct and counit of C, and, for presented algebras, that psi kills
    every defining relation of P for each checked basis element of C.
    """
    rng = rng or spec.rng("entwining")
    P, C, psi = ent.P, ent.C, ent.psi
    report = CheckReport("entwining")

    mult = report.child("entA.mult")
    for c, u, w in draws(spec, rng, [C.space(), P.space(), P.space()]):
        lhs = psi(c.tensor(P.mul(u, w)))
        rhs = apply_at(insert_at(psi(c.tensor(u)), None, w), 1, psi, 2)
        if not mult.expect_equal(lhs, P.mul_legs(rhs, 0), input=(c, u, w)):
            break
    report.add(mult)

    unit = report.child("entA.unit")
    for (c,) in draws(spec, rng, [C.space()]):
        if not unit.expect_equal(psi(c.tensor(P.one())), P.one().tensor(c), input=c):
            break
    report.add(unit)

    delta = report.child("entB.delta")
    counit = report.child("entB.counit")
    for c, u in draws(spec, rng, [C.space(), P.space()]):
        image = psi(c.tensor(u))
        lhs = apply_at(image, 1, C.delta)
        rhs = apply_at(insert_at(C.delta(c), None, u), 1, psi, 2)
        rhs = apply_at(rhs, 0, psi, 2)
        delta.expect_equal(lhs, rhs, input=(c, u))
        counit.expect_equal(apply_at(image, 1, C.counit), u.scale(C.counit(c)), input=(c, u))
        if delta.failed or counit.failed:
            break
    report.add(delta)
    report.add(counit)

    relations = report.child("relations")
    rels = P.relations()
    if rels:
        for index in C.check_basis(spec):
            for name, rel in rels:
                image = Vect.sum(
                    ent.psi_word(index, w.symbols).scale(k) for w, k in rel.items()
                )
                relations.expect_equal(image, Vect(), input=(index, name))
            if relations.failed:
                break
    report.add(relations)
    logger.debug("entwining: %s after %d trials", report.status, report.trials)
    return report


class EntwiningData(Entwining):
    """
    Entwining data ``(P, C, psi, e, psiC)``.

    :param e: group-like basis index of C.
    :param psic: ``psic(b, c) -> Vect(C # C)`` on basis indices, written
        ``psiC(b # c) = c_A # b^A``.
    :param params: the :class:`InstanceParams` the data was built from.
    :param m_space: :class:`entwinelib.kernel.Space` of fixed points.
    """

    #: Memoized fixed point verdicts kept before the memo is reset.
    FIXED_CACHE_SIZE = 4096

    def __init__(self, algebra, coalgebra, e, psic, psi_gen=None, psi_basis=None,
                 params=None, m_space=None, name="psi"):
        super(EntwiningData, self).__init__(algebra, coalgebra, psi_gen, psi_basis, name)
        self.e = e
        self.params = params
        #: Sampling space of the fixed subalgebra M, set by the instance.
        self.m_space = m_space
        self._psic = psic
        self.psiC = LinMap(lambda index: psic(*legs(index)), name="psiC")
        self._fixed = {}

    def e_vec(self):
        return Vect.basis(self.e)

    def coaction(self, u):
        """``u -> psi(e # u)``."""
        return self.psi(self.e_vec().tensor(u))

    def is_fixed_point(self, u):
        """True iff ``coaction(u) == u # e``."""
        try:
            return self._fixed[u]
        except KeyError:
            pass
        ok = self.coaction(u) == u.tensor(self.e_vec())
        if len(self._fixed) >= self.FIXED_CACHE_SIZE:
            self._fixed.clear()
        self._fixed[u] = ok
        return ok

    def in_fixed_tensor(self, w):
        """
        Whether a P # C element lies in M # C; returns ``(True, None)`` or
        ``(False, offending P component)``.
        """
        for _, x in sorted(split_last_leg(w).items()):
            if not self.is_fixed_point(x):
                return False, x
        return True, None

    def psiC_apply(self, b, c):
        return self.psiC(b.tensor(c))

    def with_psic(self, psic):
        """Copy of this data with a different psiC and the same psi."""
        other = EntwiningData(
            self.P, self.C, self.e, psic,
            psi_gen=self._psi_gen, psi_basis=self._psi_basis, params=self.params,
            m_space=self.m_space, name=self.psi.name,
        )
        return other


def coaction(data, u):
    return data.coaction(u)


def is_fixed_point(data, u):
    return data.is_fixed_point(u)


def psiC_apply(data, b, c):
    return data.psiC_apply(b, c)


def check_psic_conditions(data, spec, rng=None, check_id="psic"):
    """Coproduct and counit compatibility of psiC, and ``psiC(e # c) = Delta c``."""
    rng = rng or spec.rng("psic")
    C, psic = data.C, data.psiC
    report = CheckReport(check_id)
    cond1 = report.child("condition1")
    cond2 = report.child("condition2")
    for b, c in draws(spec, rng, [C.space(), C.space()]):
        image = psic(b.tensor(c))
        lhs = apply_at(image, 1, C.delta)
        rhs = apply_at(insert_at(C.delta(b), None, c), 1, psic, 2)
        rhs = apply_at(rhs, 0, psic, 2)
        cond1.expect_equal(lhs, rhs, input=(b, c))
        cond2.expect_equal(apply_at(image, 1, C.counit), c.scale(C.counit(b)), input=(b, c))
        if cond1.failed or cond2.failed:
            break
    for (c,) in draws(spec, rng, [C.space()]):
        if not cond2.expect_equal(psic(data.e_vec().tensor(c)), C.delta(c), input=c):
            break
    report.add(cond1)
    report.add(cond2)
    return report


def check_lemma26_predicate(data, spec, rng=None):
    """``psiC(c # e) = e # c`` for every checked c."""
    rng = rng or spec.rng("lemma26.predicate")
    report = CheckReport("lemma26.predicate")
    for (c,) in draws(spec, rng, [data.C.space()]):
        lhs = data.psiC(c.tensor(data.e_vec()))
        if not report.expect_equal(lhs, data.e_vec().tensor(c), input=c):
            break
    return report


def check_lemma34_predicates(data, spec, rng=None):
    """
    The two conditions for the trivial cocycle ``counit # counit``:
    ``counit(e_A) c^A = c`` and
    ``counit(c_A) counit(b^A_B) a^B = counit(b_A) counit(c_B) a^AB``.
    """
    rng = rng or spec.rng("lemma34")
    C, psic = data.C, data.psiC
    report = CheckReport("lemma34")
    unit = report.child("unit")
    for (c,) in draws(spec, rng, [C.space()]):
        lhs = apply_at(psic(c.tensor(data.e_vec())), 0, C.counit)
        if not unit.expect_equal(lhs, c, input=c):
            break
    report.add(unit)
    assoc = report.child("cocycle")
    for a, b, c in draws(spec, rng, [C.space(), C.space(), C.space()]):
        abc = a.tensor(b).tensor(c)
        lhs = apply_at(abc, 1, psic, 2)
        lhs = apply_at(lhs, 1, C.counit)
        lhs = apply_at(lhs, 0, psic, 2)
        lhs = apply_at(lhs, 0, C.counit)
        rhs = apply_at(abc, 0, psic, 2)
        rhs = apply_at(rhs, 1, psic, 2)
        rhs = apply_at(apply_at(rhs, 0, C.counit), 0, C.counit)
        if not assoc.expect_equal(lhs, rhs, input=(a, b, c)):
            break
    report.add(assoc)
    return report


def check_psiC(data, spec, rng=None):
    """
    Both psiC conditions, and separately the predicate
    ``psiC(c # e) = e # c`` and the trivial cocycle conditions.
    """
    rng = rng or spec.rng("psic")
    report = CheckReport("psiC")
    report.add(check_psic_conditions(data, spec, rng))
    report.add(check_lemma26_predicate(data, spec, rng))
    report.add(check_lemma34_predicates(data, spec, rng))
    return report


def check_coaction(data, spec, rng=None):
    """Coassociativity and counit of the coaction ``u -> psi(e # u)``."""
    rng = rng or spec.rng("coaction")
    C = data.C
    report = CheckReport("coaction")
    for (u,) in draws(spec, rng, [data.P.space()]):
        image = data.coaction(u)
        lhs = apply_at(image, 1, C.delta)
        rhs = apply_at(image, 0, lambda x: data.coaction(Vect.basis(x)))
        report.expect_equal(lhs, rhs, input=u)
        report.expect_equal(apply_at(image, 1, C.counit), u, input=u)
        if report.failed:
            break
    return report
