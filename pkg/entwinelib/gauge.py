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
Gauge transformations of crossed product data.

A gauge ``gamma: C -> M`` with ``gamma(e) = 1``, convolution invertible and
covariant, turns data ``(rho, sigma)`` into::

    rho'(c, u) = gamma(c1) rho(c2, u_alpha) gamma^-1(c3^alpha)
    sigma'(b, c) = gamma(b1) rho(b2, gamma(c_A1)_alpha) sigma(b3^alpha, c_A2) gamma^-1(b4^A)

and ``Theta(x # c) = x gamma(c1) # c2`` is an algebra isomorphism from the
new crossed product to the old one.
"""
from __future__ import unicode_literals

import logging

from .coalg import conv_inverse_grouplike, convolve, unit_counit
from .crossprod import check_equivalent_data, check_trivial_cocycle_admissible
from .exceptions import GaugeValidationError, TrivialCocycleInadmissible
from .kernel import CheckReport, LinMap, SampleSpec, Vect, apply_at, draws, random_scalar

logger = logging.getLogger(__name__)


class GaugeTransformation(object):
    """
    A map ``gamma: C -> M`` and its convolution inverse.

    :param gamma: LinMap, or a callable on basis indices of C.
    :param gammaInv: the inverse; computed pointwise when omitted and C is
        group-like.
    """

    def __init__(self, data, gamma, gammaInv=None, name="gamma"):
        self.E = data
        self.gamma = gamma if isinstance(gamma, LinMap) else LinMap(gamma, name=name)
        if gammaInv is None:
            if not data.C.grouplike:
                raise ValueError("gammaInv is required when C is not group-like")
            gammaInv = conv_inverse_grouplike(self.gamma, data.P, name="%s^-1" % name)
        elif not isinstance(gammaInv, LinMap):
            gammaInv = LinMap(gammaInv, name="%s^-1" % name)
        self.gammaInv = gammaInv
        self.name = name
        self.theta_map = LinMap(self._theta, name="theta.%s" % name)

    def _theta(self, index):
        v = apply_at(Vect.basis(index), 1, self.E.C.delta)
        v = apply_at(v, 1, self.gamma)
        return apply_at(v, 0, self.E.P.mul_map, 2)

    def inverse(self):
        return GaugeTransformation(self.E, self.gammaInv, self.gamma, name="%s^-1" % self.name)

    def validate(self, spec, rng=None):
        """:raises GaugeValidationError: carrying the failing report."""
        report = check_gauge(self, spec, rng)
        if report.failed:
            raise GaugeValidationError(report)
        return report


def scalar_gauge(data, weight, name="gamma"):
    """
    The gauge ``c -> weight(c) 1`` on a group-like coalgebra.

    :param weight: callable on basis indices of C returning a nonzero scalar.
    """
    P = data.P
    return GaugeTransformation(data, lambda c: P.one().scale(weight(c)), name=name)


RANDOM_GAUGES = 20


def random_scalar_gauges(data, spec, count=RANDOM_GAUGES):
    """
    Seeded scalar gauges ``c -> lambda_c 1`` with ``lambda_e = 1``.

    Each ``lambda_c`` is a nonzero rational drawn from its own stream of
    ``spec``, so the weights are defined on infinite group-like bases and
    do not depend on the order in which they are evaluated.
    """
    e = data.e_vec()

    def weights(k):
        def weight(c):
            if Vect.basis(c) == e:
                return 1
            return random_scalar(spec.rng("gauge.random.%d.%s" % (k, c)))
        return weight

    return [scalar_gauge(data, weights(k), name="gamma.random%d" % k) for k in range(count)]


def check_gauge(g, spec, rng=None):
    """``gamma(e) = 1``, convolution inverse, covariance and fixed values."""
    rng = rng or spec.rng("gauge")
    E = g.E
    P, C = E.P, E.C
    c_space = C.space()
    report = CheckReport("gauge")

    unit = report.child("unit")
    unit.expect_equal(g.gamma(E.e_vec()), P.one(), input=E.e_vec())
    report.add(unit)

    inverse = report.child("inverse")
    one = unit_counit(C, P)
    left = convolve(g.gamma, g.gammaInv, C, P)
    right = convolve(g.gammaInv, g.gamma, C, P)
    for (c,) in draws(spec, rng, [c_space]):
        inverse.expect_equal(left(c), one(c), input=c)
        inverse.expect_equal(right(c), one(c), input=c)
        if inverse.failed:
            break
    report.add(inverse)

    cov = report.child("cov.gamma")
    for b, c in draws(spec, rng, [c_space, c_space]):
        bc = b.tensor(c)
        lhs = apply_at(apply_at(bc, 1, C.delta), 1, g.gamma)
        lhs = apply_at(apply_at(lhs, 0, E.psi, 2), 1, E.psiC, 2)
        rhs = apply_at(apply_at(E.psiC(bc), 0, C.delta), 0, g.gamma)
        if not cov.expect_equal(lhs, rhs, input=(b, c)):
            break
    report.add(cov)

    fixed = report.child("fixed")
    for (c,) in draws(spec, rng, [c_space]):
        value = g.gamma(c)
        if not fixed.expect(E.is_fixed_point(value), input=c, lhs=value, rhs="fixed"):
            break
    report.add(fixed)
    logger.debug("gauge %s: %s", g.name, report.status)
    return report


def gauge_transform(D, g, spec=None, rng=None, name=None):
    """
    The gauged data ``(rho', sigma')``.

    :param spec: when given, ``g`` is validated first.
    :raises GaugeValidationError: if validation fails.
    """
    if spec is not None:
        g.validate(spec, rng)
    E = D.E
    P, C = E.P, E.C
    name = name or "%s.%s" % (D.name, g.name)

    def rho(index):
        v = apply_at(Vect.basis(index), 0, C.delta)
        v = apply_at(v, 1, C.delta)
        v = apply_at(v, 2, E.psi, 2)
        v = apply_at(v, 1, D.rho, 2)
        v = apply_at(apply_at(v, 0, g.gamma), 2, g.gammaInv)
        return P.mul_legs(v, 0, 3)

    def sigma(index):
        v = apply_at(Vect.basis(index), 0, C.delta)
        v = apply_at(v, 1, C.delta)
        v = apply_at(v, 2, C.delta)
        v = apply_at(v, 3, E.psiC, 2)
        v = apply_at(v, 3, C.delta)
        v = apply_at(v, 3, g.gamma)
        v = apply_at(v, 2, E.psi, 2)
        v = apply_at(v, 1, D.rho, 2)
        v = apply_at(v, 2, D.sigma, 2)
        v = apply_at(apply_at(v, 0, g.gamma), 3, g.gammaInv)
        return P.mul_legs(v, 0, 4)

    return D.with_maps(
        rho=LinMap(rho, name="rho.%s" % name),
        sigma=LinMap(sigma, name="sigma.%s" % name),
        name=name,
    )


def theta_gamma(g, a):
    """``Theta(x # c) = x gamma(c1) # c2``."""
    return g.theta_map(a)


def gauge_product(g, h, name=None):
    """The convolution ``g * h``, with inverse ``h^-1 * g^-1``."""
    E = g.E
    return GaugeTransformation(
        E,
        convolve(g.gamma, h.gamma, E.C, E.P),
        convolve(h.gammaInv, g.gammaInv, E.C, E.P),
        name=name or "%s*%s" % (g.name, h.name),
    )


def check_equivalence(D1, D2, g, spec, rng=None):
    """
    ``D2`` is equivalent to the gauge transform of ``D1`` by ``g``, and
    ``Theta`` is a covariant, multiplicative right C-comodule map from the
    ``D2`` product to the ``D1`` product.
    """
    rng = rng or spec.rng("equivalence")
    E = D1.E
    C = E.C
    c_space = C.space()
    report = CheckReport("equivalence")
    report.add(check_equivalent_data(gauge_transform(D1, g), D2, spec, rng,
                                     check_id="equivalence.data"))

    theta_tilde = LinMap(
        lambda c: g.theta_map(E.P.one().tensor(Vect.basis(c))), name="theta~"
    )
    cov = report.child("cov.theta")
    for b, c in draws(spec, rng, [c_space, c_space]):
        bc = b.tensor(c)
        lhs = apply_at(bc, 1, theta_tilde)
        lhs = apply_at(apply_at(lhs, 0, E.psi, 2), 1, E.psiC, 2)
        rhs = apply_at(E.psiC(bc), 0, theta_tilde)
        if not cov.expect_equal(lhs, rhs, input=(b, c)):
            break
    report.add(cov)

    elems = D2.elements_space()
    comodule = report.child("comodule")
    for (a,) in draws(spec, rng, [elems]):
        lhs = apply_at(theta_gamma(g, a), 1, C.delta)
        rhs = apply_at(apply_at(a, 1, C.delta), 0, g.theta_map, 2)
        if not comodule.expect_equal(lhs, rhs, input=a):
            break
    report.add(comodule)

    mult = report.child("multiplicative")
    for a, b in draws(spec, rng, [elems, elems]):
        lhs = theta_gamma(g, D2.mul(a, b))
        rhs = D1.mul(theta_gamma(g, a), theta_gamma(g, b))
        if not mult.expect_equal(lhs, rhs, input=(a, b)):
            break
    report.add(mult)
    logger.debug("equivalence: %s", report.status)
    return report


def coboundary(E, rho, g, spec=None, rng=None):
    """
    The cocycle ``sigma(b, c) = gamma(b1) rho(b2, gamma(c_A)) gamma^-1(b3^A)``.

    The trivial cocycle conditions are always checked first.

    :param spec: sampling for that check; defaults to ``SampleSpec()``.
    :raises TrivialCocycleInadmissible: if they fail.
    """
    report = check_trivial_cocycle_admissible(E, spec or SampleSpec(), rng)
    if report.failed:
        raise TrivialCocycleInadmissible(report)
    P, C = E.P, E.C

    def sigma(index):
        v = apply_at(Vect.basis(index), 0, C.delta)
        v = apply_at(v, 1, C.delta)
        v = apply_at(v, 2, E.psiC, 2)
        v = apply_at(v, 2, g.gamma)
        v = apply_at(v, 1, rho, 2)
        v = apply_at(apply_at(v, 0, g.gamma), 2, g.gammaInv)
        return P.mul_legs(v, 0, 3)

    return LinMap(sigma, name="sigma.d%s" % g.name)


def extract_gamma(E, theta, spec, rng=None, name="gamma"):
    """
    Recover ``gamma = (id # counit) Theta(1 # -)`` from an equivalence
    ``theta`` (a LinMap on ``Pair(x, c)``) and verify that the gauge is
    valid and reproduces ``theta``.

    :returns: ``(gauge, report)``.
    """
    rng = rng or spec.rng("extract")
    P, C = E.P, E.C

    def gamma(c):
        return apply_at(theta(P.one().tensor(Vect.basis(c))), 1, C.counit)

    report = CheckReport("extract")
    try:
        g = GaugeTransformation(E, LinMap(gamma, name=name), name=name)
    except ValueError as err:
        report.skip("%s" % err)
        return None, report
    report.add(check_gauge(g, spec, rng))
    agree = report.child("theta")
    for x, c in draws(spec, rng, [E.m_space, C.space()]):
        a = x.tensor(c)
        if not agree.expect_equal(theta(a), theta_gamma(g, a), input=a):
            break
    report.add(agree)
    return g, report
