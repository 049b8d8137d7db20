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
Dual crossed products.

Exchanging the roles of P and C gives dual entwining data
``(C, P, psi, kappa, psiP)`` with an algebra character ``kappa`` and a map
``psiP(u # v) = v_A # u^A`` on ``P # P``. The coalgebra ``M = C / J_kappa``
with ``J_kappa = span{kappa(u_alpha) c^alpha - kappa(u) c}`` replaces the
fixed-point subalgebra, and maps ``rhoBar: C -> P # C`` and
``sigmaBar: M -> P # P`` define a coproduct on ``M # P``.

Everything here works over finite bases; the quotient is computed by
exact row reduction.
"""
from __future__ import unicode_literals

import logging
import warnings
from fractions import Fraction

from sympy import Matrix, Rational

from .coalg import Coalgebra, TabulatedCoalgebra, conv_inverse_grouplike, convolve, unit_counit
from .crossprod import as_map, tensor_space
from .entwine import Entwining, check_entwining
from .exceptions import (
    AxiomFailure,
    CoidealCheckFailed,
    GaugeValidationError,
    RepresentativeDependence,
    TrivializationError,
    WellDefinednessFailure,
)
from .kernel import (
    Algebra,
    CheckReport,
    Dual,
    LinForm,
    LinMap,
    Pair,
    Space,
    Vect,
    apply_at,
    canonical,
    draws,
    insert_at,
    legs,
)

logger = logging.getLogger(__name__)


class DualEntwiningData(Entwining):
    """
    Dual entwining data over a finite algebra P.

    :param kappa: algebra character ``P -> k`` (LinForm or callable on
        basis indices).
    :param psip: ``psip(u, v) -> Vect(P # P)`` on basis indices.
    """

    def __init__(self, coalgebra, algebra, kappa, psip, psi_gen=None, psi_basis=None,
                 name="psi"):
        super(DualEntwiningData, self).__init__(algebra, coalgebra, psi_gen, psi_basis, name)
        self.kappa = kappa if isinstance(kappa, LinForm) else LinForm(kappa, name="kappa")
        self.psiP = as_map(psip, "psiP")

    def action(self, c, u):
        """The right action ``c . u = kappa(u_alpha) c^alpha``."""
        return apply_at(self.psi(c.tensor(u)), 0, self.kappa)

    def with_psip(self, psip):
        return DualEntwiningData(
            self.C, self.P, self.kappa, psip,
            psi_gen=self._psi_gen, psi_basis=self._psi_basis, name=self.psi.name,
        )


def check_character(P, kappa, spec, rng=None):
    """``kappa(1) = 1`` and ``kappa(uv) = kappa(u) kappa(v)``."""
    rng = rng or spec.rng("kappa")
    report = CheckReport("kappa")
    report.expect_equal(kappa(P.one()), Fraction(1), input=P.one())
    for u, v in draws(spec, rng, [P.space(), P.space()]):
        if not report.expect_equal(kappa(P.mul(u, v)), canonical(kappa(u) * kappa(v)),
                                   input=(u, v)):
            break
    return report


def check_right_action(ent, kappa, spec, rng=None):
    """``(kappa # id) psi`` is a unital right action of P on C."""
    rng = rng or spec.rng("action")
    P, C = ent.P, ent.C

    def act(c, u):
        return apply_at(ent.psi(c.tensor(u)), 0, kappa)

    report = CheckReport("action")
    unit = report.child("unit")
    for (c,) in draws(spec, rng, [C.space()]):
        if not unit.expect_equal(act(c, P.one()), c, input=c):
            break
    report.add(unit)
    assoc = report.child("associativity")
    for c, u, v in draws(spec, rng, [C.space(), P.space(), P.space()]):
        if not assoc.expect_equal(act(c, P.mul(u, v)), act(act(c, u), v), input=(c, u, v)):
            break
    report.add(assoc)
    return report


def check_psip_conditions(Dd, spec, rng=None):
    """
    ``psiP(u # vw) = (mu # id) psiP_23 psiP_12 (u # v # w)``,
    ``psiP(u # 1) = 1 # u`` and ``(kappa # id) psiP = mu``.
    """
    rng = rng or spec.rng("psip")
    P, psip = Dd.P, Dd.psiP
    p_space = P.space()
    report = CheckReport("psip")
    cond1 = report.child("condition1")
    for u, v, w in draws(spec, rng, [p_space, p_space, p_space]):
        lhs = psip(u.tensor(P.mul(v, w)))
        rhs = apply_at(apply_at(u.tensor(v).tensor(w), 0, psip, 2), 1, psip, 2)
        if not cond1.expect_equal(lhs, P.mul_legs(rhs, 0), input=(u, v, w)):
            break
    report.add(cond1)
    cond2 = report.child("condition2")
    for u, v in draws(spec, rng, [p_space, p_space]):
        cond2.expect_equal(psip(u.tensor(P.one())), P.one().tensor(u), input=u)
        cond2.expect_equal(apply_at(psip(u.tensor(v)), 0, Dd.kappa), P.mul(u, v),
                           input=(u, v))
        if cond2.failed:
            break
    report.add(cond2)
    return report


def check_dual_entwining(Dd, spec, rng=None):
    """Entwining axioms, character, right action and the psiP conditions."""
    rng = rng or spec.rng("dual.entwining")
    report = CheckReport("dual.entwining")
    report.add(check_entwining(Dd, spec, rng))
    report.add(check_character(Dd.P, Dd.kappa, spec, rng))
    report.add(check_right_action(Dd, Dd.kappa, spec, rng))
    report.add(check_psip_conditions(Dd, spec, rng))
    logger.debug("dual entwining: %s", report.status)
    return report


#
# The quotient coalgebra
#


def _to_sympy(c):
    c = Fraction(c)
    return Rational(c.numerator, c.denominator)


def _from_sympy(x):
    return Fraction(int(x.p), int(x.q))


class QuotientCoalgebra(Coalgebra):
    """
    Quotient of a finite coalgebra by the span of ``generators``.

    The generators are row reduced over the sorted basis of ``base``; the
    non-pivot basis elements are the canonical representatives and form
    the basis of the quotient.
    """

    def __init__(self, base, generators, name="M"):
        self.name = name
        self.base = base
        self.generators = [g for g in generators if not g.is_zero()]
        self.grouplike = base.grouplike
        columns = sorted(base.basis())
        self.j_basis = []
        self._reduce = {}
        pivots = ()
        if self.generators:
            rows = [[_to_sympy(g.coeff(i)) for i in columns] for g in self.generators]
            reduced, pivots = Matrix(rows).rref()
            for r, p in enumerate(pivots):
                row = [_from_sympy(reduced[r, k]) for k in range(len(columns))]
                self.j_basis.append(Vect(zip(columns, row)))
                self._reduce[columns[p]] = Vect(
                    (columns[k], -row[k]) for k in range(len(columns)) if k not in pivots
                )
        self.representatives = [columns[k] for k in range(len(columns)) if k not in pivots]
        self.pi = LinMap(self._pi, name="pi")
        self.iota = LinMap(self._iota, name="iota")
        super(QuotientCoalgebra, self).__init__()

    def _pi(self, index):
        if index in self._reduce:
            return self._reduce[index]
        return Vect.basis(index)

    def _iota(self, index):
        if index not in self.representatives:
            return None
        return Vect.basis(index)

    def delta_basis(self, index):
        if index not in self.representatives:
            return None
        d = self.base.delta.on_basis(index)
        return apply_at(apply_at(d, 0, self.pi), 1, self.pi)

    def counit_basis(self, index):
        if index not in self.representatives:
            return None
        return self.base.counit.on_basis(index)

    def basis(self):
        return list(self.representatives)

    def dimension(self):
        return len(self.representatives)


def j_generators(Dd):
    """``kappa(u_alpha) c^alpha - kappa(u) c`` over all basis pairs."""
    out = []
    for c in Dd.C.basis():
        cv = Vect.basis(c)
        for u in Dd.P.basis():
            uv = Vect.basis(u)
            out.append(Dd.action(cv, uv) - cv.scale(Dd.kappa(uv)))
    return out


def check_coideal(Q):
    """``(pi # pi) Delta j = 0`` and ``counit(j) = 0`` on every generator."""
    base = Q.base
    report = CheckReport("coideal")
    delta = report.child("delta")
    counit = report.child("counit")
    for j in Q.generators:
        image = apply_at(apply_at(base.delta(j), 0, Q.pi), 1, Q.pi)
        delta.expect_equal(image, Vect(), input=j)
        counit.expect_equal(base.counit(j), Fraction(0), input=j)
    report.add(delta)
    report.add(counit)
    return report


def build_quotient(Dd, spec=None, rng=None, name="M"):
    """
    The coalgebra ``M = C / J_kappa``.

    :param spec: when given, kappa is checked to be a character first.
    :raises AxiomFailure: if kappa is not a character.
    :raises CoidealCheckFailed: if ``J_kappa`` is not a coideal.
    """
    if spec is not None:
        report = check_character(Dd.P, Dd.kappa, spec, rng)
        if report.failed:
            raise AxiomFailure(report)
    Q = QuotientCoalgebra(Dd.C, j_generators(Dd), name=name)
    report = check_coideal(Q)
    if report.failed:
        raise CoidealCheckFailed(report)
    if not Q.j_basis:
        warnings.warn("J_kappa is zero; %s is all of %s" % (name, Dd.C.name))
    logger.debug("quotient %s: dim %d, J_kappa rank %d", name, Q.dimension(), len(Q.j_basis))
    return Q


#
# General dual construction on hat maps
#


class DualHatMaps(object):
    """
    :param rho_hat: map on ``Pair(m, u)`` to ``V # K``.
    :param sigma_hat: map on ``Pair(m, u)`` to ``V # V``.
    """

    def __init__(self, rho_hat, sigma_hat):
        self.rho_hat = as_map(rho_hat, "rho_hat")
        self.sigma_hat = as_map(sigma_hat, "sigma_hat")


class GeneralDualCoproduct(object):
    """
    The coalgebra ``K # V`` with counit ``counit # kappa`` and coproduct
    ``(id # rho_hat # id)(id # id # sigma_hat)(Delta^2 # id)``.
    """

    def __init__(self, coalgebra, kappa, hats, name="dual.general"):
        self.K = coalgebra
        self.kappa = kappa
        self.hats = hats
        self.name = name
        self.coproduct = LinMap(self._coproduct, name="%s.delta" % name)
        self.counit = LinForm(self._counit, name="%s.counit" % name)

    def _coproduct(self, index):
        v = apply_at(Vect.basis(index), 0, self.K.delta)
        v = apply_at(v, 1, self.K.delta)
        v = apply_at(v, 2, self.hats.sigma_hat, 2)
        return apply_at(v, 1, self.hats.rho_hat, 2)

    def _counit(self, index):
        m, u = legs(index)
        return self.K.counit.on_basis(m) * self.kappa.on_basis(u)


def _dual_condition_reports(K, kappa, hats, k_space, v_space, spec, rng, report):
    """Conditions (a)-(e) on dual hat maps as children of ``report``."""
    rho, sigma = hats.rho_hat, hats.sigma_hat

    a = report.child("a")
    for m, u in draws(spec, rng, [k_space, v_space]):
        image = rho(m.tensor(u))
        a.expect_equal(apply_at(image, 0, kappa), m.scale(kappa(u)), input=(m, u))
        a.expect_equal(apply_at(image, 1, K.counit), u.scale(K.counit(m)), input=(m, u))
        if a.failed:
            break
    report.add(a)

    b = report.child("b")
    for m, u in draws(spec, rng, [k_space, v_space]):
        mu = m.tensor(u)
        lhs = apply_at(rho(mu), 1, K.delta)
        rhs = apply_at(apply_at(apply_at(mu, 0, K.delta), 1, rho, 2), 0, rho, 2)
        if not b.expect_equal(lhs, rhs, input=(m, u)):
            break
    report.add(b)

    c = report.child("c")
    for m, u in draws(spec, rng, [k_space, v_space]):
        image = sigma(m.tensor(u))
        c.expect_equal(apply_at(image, 1, kappa), u.scale(K.counit(m)), input=(m, u))
        c.expect_equal(apply_at(image, 0, kappa), u.scale(K.counit(m)), input=(m, u))
        if c.failed:
            break
    report.add(c)

    d = report.child("d")
    for m, u in draws(spec, rng, [k_space, v_space]):
        split = apply_at(apply_at(m.tensor(u), 0, K.delta), 1, sigma, 2)
        lhs = apply_at(apply_at(split, 0, rho, 2), 1, sigma, 2)
        rhs = apply_at(split, 0, sigma, 2)
        if not d.expect_equal(lhs, rhs, input=(m, u)):
            break
    report.add(d)

    e = report.child("e")
    for m, u in draws(spec, rng, [k_space, v_space]):
        split = apply_at(m.tensor(u), 0, K.delta)
        lhs = apply_at(apply_at(apply_at(split, 1, sigma, 2), 0, rho, 2), 1, rho, 2)
        rhs = apply_at(apply_at(split, 1, rho, 2), 0, sigma, 2)
        if not e.expect_equal(lhs, rhs, input=(m, u)):
            break
    report.add(e)


def _dual_direct_reports(cop, k_space, v_space, spec, rng, report, leftlin=True):
    """Coassociativity, counit and, optionally, the left linearity of ``cop``."""
    elems = tensor_space("%s.elements" % report.check_id, k_space, v_space)

    coassoc = report.child("coassociativity")
    for (a,) in draws(spec, rng, [elems]):
        d = cop.coproduct(a)
        lhs = apply_at(d, 0, cop.coproduct, 2)
        rhs = apply_at(d, 2, cop.coproduct, 2)
        if not coassoc.expect_equal(lhs, rhs, input=a):
            break
    report.add(coassoc)

    counit = report.child("counit")
    for (a,) in draws(spec, rng, [elems]):
        d = cop.coproduct(a)
        counit.expect_equal(apply_at(d, 0, cop.counit, 2), a, input=a)
        counit.expect_equal(apply_at(d, 2, cop.counit, 2), a, input=a)
        if counit.failed:
            break
    report.add(counit)

    if leftlin:
        lin = report.child("leftlin")
        for (a,) in draws(spec, rng, [elems]):
            lhs = apply_at(a, 0, cop.K.delta)
            if not lin.expect_equal(lhs, apply_at(cop.coproduct(a), 1, cop.kappa), input=a):
                break
        report.add(lin)


def _iff_report(report, conditions, direct, suffix="iff"):
    iff = report.child(suffix)
    iff.expect(
        conditions.passed == direct.passed,
        input="conditions %s, direct %s" % (conditions.status, direct.status),
        lhs=conditions.status,
        rhs=direct.status,
    )
    report.add(iff)


def build_general_dual(coalgebra, kappa, hats, k_space, v_space, spec, rng=None,
                       validate=True, name="dual.general"):
    """
    Build the coproduct on ``K # V`` from ``hats`` and check it two ways:
    conditions (a)-(e) on the hats, and coassociativity, counit and left
    linearity of the coproduct itself. The two verdicts must agree.

    :returns: ``(coalgebra, report)``.
    :raises AxiomFailure: if ``validate`` and any check fails.
    """
    rng = rng or spec.rng(name)
    cop = GeneralDualCoproduct(coalgebra, kappa, hats, name=name)
    report = CheckReport(name)
    conditions = CheckReport("%s.conditions" % name)
    _dual_condition_reports(coalgebra, kappa, hats, k_space, v_space, spec, rng, conditions)
    direct = CheckReport("%s.direct" % name)
    _dual_direct_reports(cop, k_space, v_space, spec, rng, direct)
    report.add(conditions)
    report.add(direct)
    _iff_report(report, conditions, direct)
    logger.debug("build_general_dual %s: %s", name, report.status)
    if validate and report.failed:
        raise AxiomFailure(report)
    return cop, report


#
# Dual crossed product data
#


class DualCrossedData(object):
    """
    Maps ``rhoBar: C -> P # C`` and ``sigmaBar: M -> P # P`` over dual
    entwining data and its quotient ``M``. The hat maps are::

        rho_hat(m, u) = c^(1) u_alpha # pi(c^(2)^alpha)
        sigma_hat(m, u) = m^(1) u_A # m^(2)^A

    for the canonical representative ``c`` of ``m``.
    """

    def __init__(self, data, quotient, rho_bar, sigma_bar, name="dual"):
        self.E = data
        self.Q = quotient
        self.rho_bar = as_map(rho_bar, "rhoBar")
        self.sigma_bar = as_map(sigma_bar, "sigmaBar")
        self.name = name
        self.rho_hat = LinMap(self._rho_hat, name="rho_hat")
        self.sigma_hat = LinMap(self._sigma_hat, name="sigma_hat")
        self.general = GeneralDualCoproduct(
            quotient, data.kappa, DualHatMaps(self.rho_hat, self.sigma_hat), name=name
        )

    def raw_rho_hat(self, v):
        """``rho_hat`` on a Vect over ``Pair(c, u)`` with ``c`` in C."""
        E = self.E
        v = apply_at(v, 0, self.rho_bar)
        v = apply_at(v, 1, E.psi, 2)
        v = apply_at(v, 0, E.P.mul_map, 2)
        return apply_at(v, 1, self.Q.pi)

    def _rho_hat(self, index):
        return self.raw_rho_hat(apply_at(Vect.basis(index), 0, self.Q.iota))

    def _sigma_hat(self, index):
        v = apply_at(Vect.basis(index), 0, self.sigma_bar)
        v = apply_at(v, 1, self.E.psiP, 2)
        return apply_at(v, 0, self.E.P.mul_map, 2)

    @property
    def coproduct(self):
        return self.general.coproduct

    @property
    def counit(self):
        return self.general.counit

    def delta(self, a, strict=False):
        return dual_crossed_coproduct(self, a, strict=strict)

    def with_maps(self, rho_bar=None, sigma_bar=None, name=None):
        return DualCrossedData(
            self.E, self.Q, rho_bar or self.rho_bar, sigma_bar or self.sigma_bar,
            name=name or self.name,
        )

    def elements_space(self):
        return tensor_space("%s.elements" % self.name, self.Q.space(), self.E.P.space())


def trivial_dual_data(Dd, Q, name="dual"):
    """``rhoBar(c) = 1 # c`` and ``sigmaBar(m) = counit(m) 1 # 1``."""
    one = Dd.P.one()
    return DualCrossedData(
        Dd, Q,
        LinMap(lambda c: one.tensor(Vect.basis(c)), name="rhoBar.triv"),
        LinMap(lambda m: one.tensor(one).scale(Q.counit.on_basis(m)), name="sigmaBar.triv"),
        name=name,
    )


def dual_crossed_coproduct(Dc, a, strict=True):
    """
    Coproduct of ``a`` in ``M # P``.

    :param strict: check that ``rho_hat`` does not depend on the
        representative chosen for each ``m`` in ``a``.
    :raises RepresentativeDependence: naming a ``J_kappa`` element that
        changes the result.
    """
    if strict:
        for index, _ in a.sorted_items():
            u = Vect.basis(legs(index)[1])
            for j in Dc.Q.j_basis:
                image = Dc.raw_rho_hat(j.tensor(u))
                if not image.is_zero():
                    report = CheckReport("representatives")
                    report.fail(input=(j, u), lhs=image, rhs=Vect())
                    raise RepresentativeDependence(report)
    return Dc.coproduct(a)


def _hat_cycle(K, hats, mu):
    split = apply_at(apply_at(mu, 0, K.delta), 1, hats.sigma_hat, 2)
    lhs = apply_at(apply_at(split, 0, hats.rho_hat, 2), 1, hats.sigma_hat, 2)
    return lhs, apply_at(split, 0, hats.sigma_hat, 2)


def _hat_twisted(K, hats, mu):
    split = apply_at(mu, 0, K.delta)
    lhs = apply_at(split, 1, hats.sigma_hat, 2)
    lhs = apply_at(apply_at(lhs, 0, hats.rho_hat, 2), 1, hats.rho_hat, 2)
    rhs = apply_at(apply_at(split, 1, hats.rho_hat, 2), 0, hats.sigma_hat, 2)
    return lhs, rhs


def check_dual_axioms(Dc, spec, rng=None):
    """
    Conditions (i')-(iv'), the cycle and twisted comodule identities, the
    general conditions on the hat maps, and independently coassociativity
    and counit of the coproduct. The verdicts must agree, and
    coassociativity alone must agree with cycle and twisted comodule.
    """
    rng = rng or spec.rng("dual")
    E, Q = Dc.E, Dc.Q
    P, C, kappa = E.P, E.C, E.kappa
    c_space, m_space, p_space = C.space(), Q.space(), P.space()
    hats = Dc.general.hats
    rho_bar, sigma_bar = Dc.rho_bar, Dc.sigma_bar

    report = CheckReport("dual")
    conditions = CheckReport("dual.conditions")

    i = conditions.child("i")
    for (c,) in draws(spec, rng, [c_space]):
        image = rho_bar(c)
        i.expect_equal(apply_at(apply_at(image, 0, kappa), 0, Q.pi), Q.pi(c), input=c)
        i.expect_equal(apply_at(image, 1, C.counit), P.one().scale(C.counit(c)), input=c)
        if i.failed:
            break
    conditions.add(i)

    ii = conditions.child("ii")
    for j in Q.j_basis:
        for (u,) in draws(spec, rng, [p_space]):
            if not ii.expect_equal(Dc.raw_rho_hat(j.tensor(u)), Vect(), input=(j, u)):
                break
        if ii.failed:
            break
    conditions.add(ii)

    iii = conditions.child("iii")
    for c, u in draws(spec, rng, [c_space, p_space]):
        lhs = apply_at(apply_at(c.tensor(u), 0, rho_bar), 1, E.psi, 2)
        lhs = apply_at(apply_at(lhs, 0, P.mul_map, 2), 1, C.delta)
        lhs = apply_at(apply_at(lhs, 1, Q.pi), 2, Q.pi)
        rhs = apply_at(apply_at(c.tensor(u), 0, C.delta), 1, rho_bar)
        rhs = apply_at(apply_at(rhs, 2, E.psi, 2), 1, P.mul_map, 2)
        rhs = apply_at(apply_at(rhs, 0, rho_bar), 1, E.psi, 2)
        rhs = apply_at(apply_at(rhs, 0, P.mul_map, 2), 1, Q.pi)
        rhs = apply_at(rhs, 2, Q.pi)
        if not iii.expect_equal(lhs, rhs, input=(c, u)):
            break
    conditions.add(iii)

    iv = conditions.child("iv")
    for m, u in draws(spec, rng, [m_space, p_space]):
        image = sigma_bar(m)
        eps = Q.counit(m)
        iv.expect_equal(apply_at(image, 0, kappa), P.one().scale(eps), input=m)
        twisted = apply_at(insert_at(image, None, u), 1, E.psiP, 2)
        twisted = apply_at(apply_at(twisted, 2, kappa), 0, P.mul_map, 2)
        iv.expect_equal(twisted, u.scale(eps), input=(m, u))
        if iv.failed:
            break
    conditions.add(iv)

    cycle = conditions.child("cycle")
    twisted = conditions.child("twisted.comodule")
    for m, u in draws(spec, rng, [m_space, p_space]):
        lhs, rhs = _hat_cycle(Q, hats, m.tensor(u))
        cycle.expect_equal(lhs, rhs, input=(m, u))
        lhs, rhs = _hat_twisted(Q, hats, m.tensor(u))
        twisted.expect_equal(lhs, rhs, input=(m, u))
        if cycle.failed or twisted.failed:
            break
    conditions.add(cycle)
    conditions.add(twisted)

    general = CheckReport("dual.general")
    _dual_condition_reports(Q, kappa, hats, m_space, p_space, spec, rng, general)
    direct = CheckReport("dual.direct")
    _dual_direct_reports(Dc.general, m_space, p_space, spec, rng, direct, leftlin=False)
    report.add(conditions)
    report.add(general)
    report.add(direct)

    ok = conditions.passed and general.passed
    iff = report.child("iff")
    iff.expect(ok == direct.passed, input="conditions %s, direct %s" % (ok, direct.status),
               lhs=ok, rhs=direct.status)
    report.add(iff)

    coassoc = direct.children[0]
    ok = cycle.passed and twisted.passed
    iff = report.child("iff.coassociativity")
    iff.expect(ok == coassoc.passed, input="cycle and twisted %s, coassociativity %s"
               % (ok, coassoc.status), lhs=ok, rhs=coassoc.status)
    report.add(iff)
    logger.debug("dual axioms: %s after %d trials", report.status, report.trials)
    return report


def check_dual_module_comodule(Dc, spec, rng=None):
    """
    ``M # P`` is a right P-module by ``(m # u) v = m # uv`` and a left
    M-comodule by ``m # u -> m1 # m2 # u``.
    """
    rng = rng or spec.rng("dual.module")
    Q, P = Dc.Q, Dc.E.P
    elems = Dc.elements_space()
    report = CheckReport("dual.module")

    def act(a, v):
        return apply_at(insert_at(a, None, v), 1, P.mul_map, 2)

    module = report.child("module")
    for a, v, w in draws(spec, rng, [elems, P.space(), P.space()]):
        module.expect_equal(act(act(a, v), w), act(a, P.mul(v, w)), input=(a, v, w))
        module.expect_equal(act(a, P.one()), a, input=a)
        if module.failed:
            break
    report.add(module)

    comodule = report.child("comodule")
    for (a,) in draws(spec, rng, [elems]):
        coact = apply_at(a, 0, Q.delta)
        comodule.expect_equal(apply_at(coact, 0, Q.delta), apply_at(coact, 1, Q.delta), input=a)
        comodule.expect_equal(apply_at(coact, 0, Q.counit), a, input=a)
        if comodule.failed:
            break
    report.add(comodule)
    return report


#
# Dual cleft extensions
#


class DualTrivialization(object):
    """
    A map ``Phi: C -> P`` with ``kappa Phi = counit`` and its convolution
    inverse. ``Theta(c) = pi(c1) # Phi(c2)`` and
    ``Theta^-1(pi(c) # u) = kappa((Phi^-1(c2) u)_alpha) c1^alpha``.
    """

    def __init__(self, data, quotient, phi, phiInv=None, name="phi"):
        self.E = data
        self.Q = quotient
        self.phi = phi if isinstance(phi, LinMap) else LinMap(phi, name=name)
        if phiInv is None:
            if not data.C.grouplike:
                raise ValueError("phiInv is required when C is not group-like")
            phiInv = conv_inverse_grouplike(self.phi, data.P, name="%s^-1" % name)
        elif not isinstance(phiInv, LinMap):
            phiInv = LinMap(phiInv, name="%s^-1" % name)
        self.phiInv = phiInv
        self.name = name
        self.theta_map = LinMap(self._theta, name="theta")
        self.theta_inv_map = LinMap(self._theta_inv, name="theta^-1")

    def _theta(self, index):
        v = self.E.C.delta.on_basis(index)
        return apply_at(apply_at(v, 0, self.Q.pi), 1, self.phi)

    def raw_theta_inv(self, v):
        """``Theta^-1`` on a Vect over ``Pair(c, u)`` with ``c`` in C."""
        E = self.E
        v = apply_at(v, 0, E.C.delta)
        v = apply_at(v, 1, self.phiInv)
        v = apply_at(v, 1, E.P.mul_map, 2)
        v = apply_at(v, 0, E.psi, 2)
        return apply_at(v, 0, E.kappa)

    def _theta_inv(self, index):
        return self.raw_theta_inv(apply_at(Vect.basis(index), 0, self.Q.iota))

    def raw_sigma(self, v):
        """``Phi(b1) Phi^-1(b3)_A # Phi(b2)^A`` on a Vect over C."""
        E = self.E
        v = apply_at(apply_at(v, 0, E.C.delta), 1, E.C.delta)
        v = apply_at(apply_at(apply_at(v, 0, self.phi), 1, self.phi), 2, self.phiInv)
        v = apply_at(v, 1, E.psiP, 2)
        return apply_at(v, 0, E.P.mul_map, 2)

    def validate(self, spec, rng=None):
        """:raises TrivializationError: carrying the failing report."""
        report = check_dual_trivialization(self, spec, rng)
        if report.failed:
            raise TrivializationError(report)
        return report


def check_dual_trivialization(T, spec, rng=None):
    rng = rng or spec.rng("dual.trivialization")
    E = T.E
    P, C = E.P, E.C
    c_space, p_space = C.space(), P.space()
    report = CheckReport("dual.trivialization")

    counit = report.child("counit")
    for (c,) in draws(spec, rng, [c_space]):
        if not counit.expect_equal(E.kappa(T.phi(c)), C.counit(c), input=c):
            break
    report.add(counit)

    inverse = report.child("inverse")
    one = unit_counit(C, P)
    left = convolve(T.phi, T.phiInv, C, P)
    right = convolve(T.phiInv, T.phi, C, P)
    for (c,) in draws(spec, rng, [c_space]):
        inverse.expect_equal(left(c), one(c), input=c)
        inverse.expect_equal(right(c), one(c), input=c)
        if inverse.failed:
            break
    report.add(inverse)

    cov = report.child("cov.phi")
    cov_inv = report.child("cov.phi-1")
    for c, u in draws(spec, rng, [c_space, p_space]):
        cu = c.tensor(u)
        lhs = apply_at(E.psi(cu), 1, T.phi)
        cov.expect_equal(lhs, E.psiP(apply_at(cu, 0, T.phi)), input=(c, u))
        rhs = apply_at(apply_at(E.psi(cu), 1, T.phiInv), 0, P.mul_map, 2)
        cov_inv.expect_equal(T.phiInv(c).scale(E.kappa(u)), rhs, input=(c, u))
        if cov.failed or cov_inv.failed:
            break
    report.add(cov)
    report.add(cov_inv)
    logger.debug("dual trivialization %s: %s", T.name, report.status)
    return report


def dual_cleft(T, spec=None, rng=None, name="dual.cleft"):
    """
    The dual crossed product data of a dual cleft extension::

        rhoBar(c) = Phi(c1) Phi^-1(c3)_alpha # c2^alpha
        sigmaBar(pi(b)) = Phi(b1) Phi^-1(b3)_A # Phi(b2)^A

    Both ``sigmaBar`` and ``Theta^-1`` must vanish on ``J_kappa``.

    :param spec: when given, ``T`` is validated first.
    :raises TrivializationError: if validation fails.
    :raises WellDefinednessFailure: naming a ``J_kappa`` element.
    """
    if spec is not None:
        T.validate(spec, rng)
    E, Q = T.E, T.Q
    P, C = E.P, E.C

    report = CheckReport("dual.cleft.welldefined")
    sigma = report.child("sigma")
    theta = report.child("theta^-1")
    for j in Q.j_basis:
        sigma.expect_equal(T.raw_sigma(j), Vect(), input=j)
        for u in P.basis():
            uv = Vect.basis(u)
            theta.expect_equal(T.raw_theta_inv(j.tensor(uv)), Vect(), input=(j, uv))
    report.add(sigma)
    report.add(theta)
    if report.failed:
        raise WellDefinednessFailure(report)

    def rho_bar(c):
        v = apply_at(C.delta.on_basis(c), 1, C.delta)
        v = apply_at(apply_at(v, 0, T.phi), 2, T.phiInv)
        v = apply_at(v, 1, E.psi, 2)
        return apply_at(v, 0, P.mul_map, 2)

    return DualCrossedData(
        E, Q,
        LinMap(rho_bar, name="rhoBar.%s" % name),
        LinMap(lambda m: T.raw_sigma(Q.iota.on_basis(m)), name="sigmaBar.%s" % name),
        name=name,
    )


def check_dual_cleft_iso(Dc, T, spec, rng=None):
    """Theta is a counital coalgebra map from C onto ``M # P``, inverse to Theta^-1."""
    rng = rng or spec.rng("dual.cleft.iso")
    C = T.E.C
    theta, theta_inv = T.theta_map, T.theta_inv_map
    report = CheckReport("dual.cleft.iso")

    inverse = report.child("inverse")
    for (c,) in draws(spec, rng, [C.space()]):
        if not inverse.expect_equal(theta_inv(theta(c)), c, input=c):
            break
    for (a,) in draws(spec, rng, [Dc.elements_space()]):
        if not inverse.expect_equal(theta(theta_inv(a)), a, input=a):
            break
    report.add(inverse)

    coalgebra = report.child("coalgebra")
    for (c,) in draws(spec, rng, [C.space()]):
        lhs = Dc.coproduct(theta(c))
        rhs = apply_at(apply_at(C.delta(c), 0, theta), 2, theta)
        coalgebra.expect_equal(lhs, rhs, input=c)
        coalgebra.expect_equal(Dc.counit(theta(c)), C.counit(c), input=c)
        if coalgebra.failed:
            break
    report.add(coalgebra)
    logger.debug("dual cleft iso: %s", report.status)
    return report


#
# Dual gauge transformations
#


class DualGauge(object):
    """
    A map ``gamma: M -> P`` with ``kappa gamma = counit`` and its
    convolution inverse. ``Theta(m # u) = m1 # gamma(m2) u``.
    """

    def __init__(self, data, quotient, gamma, gammaInv=None, name="gamma"):
        self.E = data
        self.Q = quotient
        self.gamma = gamma if isinstance(gamma, LinMap) else LinMap(gamma, name=name)
        if gammaInv is None:
            if not quotient.grouplike:
                raise ValueError("gammaInv is required when M is not group-like")
            gammaInv = conv_inverse_grouplike(self.gamma, data.P, name="%s^-1" % name)
        elif not isinstance(gammaInv, LinMap):
            gammaInv = LinMap(gammaInv, name="%s^-1" % name)
        self.gammaInv = gammaInv
        self.name = name
        self.gamma_c = LinMap(lambda c: self.gamma(quotient.pi.on_basis(c)), name="%s.pi" % name)
        self.gammaInv_c = LinMap(
            lambda c: self.gammaInv(quotient.pi.on_basis(c)), name="%s^-1.pi" % name
        )
        self.theta_map = LinMap(self._theta, name="theta.%s" % name)

    def _theta(self, index):
        v = apply_at(Vect.basis(index), 0, self.Q.delta)
        v = apply_at(v, 1, self.gamma)
        return apply_at(v, 1, self.E.P.mul_map, 2)

    def validate(self, spec, rng=None):
        """:raises GaugeValidationError: carrying the failing report."""
        report = check_dual_gauge(self, spec, rng)
        if report.failed:
            raise GaugeValidationError(report)
        return report


def check_dual_gauge(g, spec, rng=None):
    """``kappa gamma = counit``, convolution inverse and psiP covariance."""
    rng = rng or spec.rng("dual.gauge")
    E, Q = g.E, g.Q
    P = E.P
    m_space, p_space = Q.space(), P.space()
    report = CheckReport("dual.gauge")

    counit = report.child("counit")
    for (m,) in draws(spec, rng, [m_space]):
        if not counit.expect_equal(E.kappa(g.gamma(m)), Q.counit(m), input=m):
            break
    report.add(counit)

    inverse = report.child("inverse")
    one = unit_counit(Q, P)
    left = convolve(g.gamma, g.gammaInv, Q, P)
    right = convolve(g.gammaInv, g.gamma, Q, P)
    for (m,) in draws(spec, rng, [m_space]):
        inverse.expect_equal(left(m), one(m), input=m)
        inverse.expect_equal(right(m), one(m), input=m)
        if inverse.failed:
            break
    report.add(inverse)

    cov = report.child("cov.gamma")
    for m, u, v in draws(spec, rng, [m_space, p_space, p_space]):
        muv = m.tensor(u).tensor(v)
        lhs = E.psiP(apply_at(apply_at(muv, 0, g.gamma), 0, P.mul_map, 2))
        rhs = apply_at(apply_at(muv, 1, E.psiP, 2), 0, Q.iota)
        rhs = apply_at(apply_at(rhs, 0, E.psi, 2), 1, g.gamma_c)
        rhs = apply_at(rhs, 1, P.mul_map, 2)
        if not cov.expect_equal(lhs, rhs, input=(m, u, v)):
            break
    report.add(cov)
    logger.debug("dual gauge %s: %s", g.name, report.status)
    return report


def dual_gauge(Dc, g, spec=None, rng=None, name=None):
    """
    The gauged data::

        rhoBar'(c) = gamma(pi(c1)) c2^(1) gamma^-1(pi(c3))_alpha # c2^(2)^alpha
        sigmaBar'(pi(c)) = gamma(pi(c1)) c2^(1) pi(c3)^(1)_alpha gamma^-1(pi(c4))_A
                           # (gamma(pi(c2^(2)^alpha)) pi(c3)^(2))^A

    :param spec: when given, ``g`` is validated first.
    :raises GaugeValidationError: if validation fails.
    """
    if spec is not None:
        g.validate(spec, rng)
    E, Q = Dc.E, Dc.Q
    P, C = E.P, E.C
    name = name or "%s.%s" % (Dc.name, g.name)

    def rho_bar(c):
        v = apply_at(C.delta.on_basis(c), 1, C.delta)
        v = apply_at(apply_at(v, 0, g.gamma_c), 1, Dc.rho_bar)
        v = apply_at(v, 3, g.gammaInv_c)
        v = apply_at(v, 2, E.psi, 2)
        return P.mul_legs(v, 0, 3)

    def sigma_bar(m):
        v = apply_at(Q.iota.on_basis(m), 0, C.delta)
        v = apply_at(apply_at(v, 1, C.delta), 2, C.delta)
        v = apply_at(apply_at(v, 0, g.gamma_c), 1, Dc.rho_bar)
        v = apply_at(apply_at(v, 3, Q.pi), 3, Dc.sigma_bar)
        v = apply_at(v, 2, E.psi, 2)
        v = apply_at(apply_at(v, 3, g.gamma_c), 3, P.mul_map, 2)
        v = apply_at(v, 4, g.gammaInv_c)
        v = apply_at(v, 3, E.psiP, 2)
        return P.mul_legs(v, 0, 4)

    return Dc.with_maps(
        LinMap(rho_bar, name="rhoBar.%s" % name),
        LinMap(sigma_bar, name="sigmaBar.%s" % name),
        name=name,
    )


def dual_theta_gamma(g, a):
    """``Theta(m # u) = m1 # gamma(m2) u``."""
    return g.theta_map(a)


def check_dual_equivalence(Dc1, Dc2, g, spec, rng=None):
    """
    ``Dc2`` is equivalent to the gauge transform of ``Dc1`` by ``g``, and
    ``Theta`` is a counital coalgebra and left M-comodule map from the
    ``Dc1`` coalgebra to the ``Dc2`` coalgebra.
    """
    rng = rng or spec.rng("dual.equivalence")
    Q, P = Dc1.Q, Dc1.E.P
    m_space, p_space = Q.space(), P.space()
    gauged = dual_gauge(Dc1, g)
    report = CheckReport("dual.equivalence")

    data = report.child("data")
    for m, u in draws(spec, rng, [m_space, p_space]):
        mu = m.tensor(u)
        data.expect_equal(gauged.rho_hat(mu), Dc2.rho_hat(mu), input=(m, u))
        data.expect_equal(gauged.sigma_bar(m), Dc2.sigma_bar(m), input=m)
        if data.failed:
            break
    report.add(data)

    theta = g.theta_map
    coalgebra = report.child("coalgebra")
    comodule = report.child("comodule")
    for (a,) in draws(spec, rng, [Dc1.elements_space()]):
        image = theta(a)
        rhs = apply_at(apply_at(Dc1.coproduct(a), 0, theta, 2), 2, theta, 2)
        coalgebra.expect_equal(Dc2.coproduct(image), rhs, input=a)
        coalgebra.expect_equal(Dc2.counit(image), Dc1.counit(a), input=a)
        lhs = apply_at(image, 0, Q.delta)
        comodule.expect_equal(lhs, apply_at(apply_at(a, 0, Q.delta), 1, theta, 2), input=a)
        if coalgebra.failed or comodule.failed:
            break
    report.add(coalgebra)
    report.add(comodule)
    logger.debug("dual equivalence: %s", report.status)
    return report


#
# Transposition of finite entwinings
#


class DualAlgebra(Algebra):
    """The convolution algebra ``K*`` of a finite coalgebra, on :class:`Dual` indices."""

    def __init__(self, coalgebra, name=None):
        self.K = coalgebra
        self.name = name or "%s*" % coalgebra.name
        self._table = {}
        for x in coalgebra.basis():
            for index, c in coalgebra.delta.on_basis(x).items():
                a, b = legs(index)
                self._table.setdefault((a, b), []).append((Dual(x), c))
        super(DualAlgebra, self).__init__()

    def mul_basis(self, a, b):
        return Vect(self._table.get((a.index, b.index), []))

    def one(self):
        return Vect((Dual(x), self.K.counit.on_basis(x)) for x in self.K.basis())

    def basis(self):
        return [Dual(x) for x in self.K.basis()]

    def space(self):
        basis = self.basis()
        return Space(
            self.name,
            lambda rng, spec: Vect.basis(rng.choice(basis)),
            enumerate=lambda spec: [Vect.basis(i) for i in basis],
        )


def dual_coalgebra(algebra, name=None):
    """The coalgebra ``A*`` of a finite algebra, on :class:`Dual` indices."""
    basis = algebra.basis()
    delta = dict((Dual(u), []) for u in basis)
    for a in basis:
        for b in basis:
            for u, c in algebra.mul_basis(a, b).items():
                delta[Dual(u)].append((Pair(Dual(a), Dual(b)), c))
    one = algebra.one()
    return TabulatedCoalgebra(
        [Dual(u) for u in basis],
        dict((k, Vect(v)) for k, v in delta.items()),
        dict((Dual(u), one.coeff(u)) for u in basis),
        name=name or "%s*" % algebra.name,
    )


def transpose_entwining(ent, name=None):
    """
    The entwining ``P* # C* -> C* # P*`` of the algebra ``C*`` with the
    coalgebra ``P*`` obtained by transposing a finite entwining.
    """
    table = {}
    for c in ent.C.basis():
        for u in ent.P.basis():
            for index, k in ent.psi.on_basis(Pair(c, u)).items():
                u2, c2 = legs(index)
                table.setdefault(Pair(Dual(u2), Dual(c2)), []).append(
                    (Pair(Dual(c), Dual(u)), k)
                )
    return Entwining(
        DualAlgebra(ent.C),
        dual_coalgebra(ent.P),
        psi_basis=lambda f, phi: Vect(table.get(Pair(f, phi), [])),
        name=name or "%s^t" % ent.psi.name,
    )


def _undual2(v):
    return Vect((Pair.of([leg.index.index for leg in legs(i)]), c) for i, c in v.items())


def check_self_duality(ent, spec, rng=None):
    """The transpose of a finite entwining entwines, and transposing twice gives it back."""
    rng = rng or spec.rng("selfdual")
    report = CheckReport("selfdual")
    once = transpose_entwining(ent)
    report.add(check_entwining(once, spec, rng))
    twice = transpose_entwining(once)
    involution = report.child("involution")
    for c in ent.C.basis():
        for u in ent.P.basis():
            image = twice.psi.on_basis(Pair(Dual(Dual(c)), Dual(Dual(u))))
            involution.expect_equal(_undual2(image), ent.psi.on_basis(Pair(c, u)), input=(c, u))
    report.add(involution)
    return report
