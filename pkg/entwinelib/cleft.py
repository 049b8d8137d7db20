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
Cleft extensions.

A trivialization ``Phi: C -> P`` with ``Phi(e) = 1`` that is convolution
invertible and intertwines psiC with psi makes ``P`` isomorphic to a
crossed product ``M # C`` through::

    Theta(x # c) = x Phi(c)
    Theta^-1(u) = u_alpha Phi^-1(e^alpha_1) # e^alpha_2
"""
from __future__ import unicode_literals

import logging

from .coalg import conv_inverse_grouplike, convolve, unit_counit
from .crossprod import CrossedProductData
from .entwine import check_lemma26_predicate
from .exceptions import TrivializationError
from .kernel import CheckReport, LinMap, Vect, apply_at, draws, insert_at

logger = logging.getLogger(__name__)


class Trivialization(object):
    """
    A map ``Phi: C -> P`` and its convolution inverse.

    :param phi: LinMap, or a callable on basis indices of C.
    :param phiInv: the inverse; computed pointwise when omitted and C is
        group-like.
    """

    def __init__(self, data, phi, phiInv=None, name="phi"):
        self.E = data
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
        return self.E.P.mul_map(apply_at(Vect.basis(index), 1, self.phi))

    def _theta_inv(self, index):
        v = apply_at(self.E.coaction(Vect.basis(index)), 1, self.E.C.delta)
        v = apply_at(v, 1, self.phiInv)
        return apply_at(v, 0, self.E.P.mul_map, 2)

    def validate(self, spec, rng=None):
        """
        Check ``Phi(e) = 1``, both convolution inverse laws and the two
        covariance identities.

        :raises TrivializationError: carrying the failing report.
        """
        report = check_trivialization(self, spec, rng)
        if report.failed:
            raise TrivializationError(report)
        return report


def check_trivialization(T, spec, rng=None):
    rng = rng or spec.rng("trivialization")
    E = T.E
    P, C = E.P, E.C
    e = E.e_vec()
    c_space = C.space()
    report = CheckReport("trivialization")

    unit = report.child("unit")
    unit.expect_equal(T.phi(e), P.one(), input=e)
    report.add(unit)

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
    for b, c in draws(spec, rng, [c_space, c_space]):
        bc = b.tensor(c)
        lhs = E.psi(apply_at(bc, 1, T.phi))
        rhs = apply_at(E.psiC(bc), 0, T.phi)
        if not cov.expect_equal(lhs, rhs, input=(b, c)):
            break
    report.add(cov)

    cov_inv = report.child("cov.phi-1")
    for (c,) in draws(spec, rng, [c_space]):
        rhs = E.psi(apply_at(C.delta(c), 1, T.phiInv))
        if not cov_inv.expect_equal(T.phiInv(c).tensor(e), rhs, input=c):
            break
    report.add(cov_inv)
    logger.debug("trivialization %s: %s", T.name, report.status)
    return report


def derive_crossed_data(T, spec=None, rng=None, name="cleft"):
    """
    The crossed product data of a cleft extension::

        rho(c, u) = Phi(c1) u_alpha Phi^-1(c2^alpha)
        sigma(b, c) = Phi(b1) Phi(c_A) Phi^-1(b2^A)

    :param spec: when given, ``T`` is validated first.
    :raises TrivializationError: if validation fails.
    """
    if spec is not None:
        T.validate(spec, rng)
    E = T.E
    P, C = E.P, E.C

    def rho(index):
        v = apply_at(Vect.basis(index), 0, C.delta)
        v = apply_at(v, 1, E.psi, 2)
        v = apply_at(apply_at(v, 0, T.phi), 2, T.phiInv)
        return P.mul_legs(v, 0, 3)

    def sigma(index):
        v = apply_at(Vect.basis(index), 0, C.delta)
        v = apply_at(v, 1, E.psiC, 2)
        v = apply_at(apply_at(apply_at(v, 0, T.phi), 1, T.phi), 2, T.phiInv)
        return P.mul_legs(v, 0, 3)

    return CrossedProductData(
        E,
        LinMap(rho, name="rho.%s" % name),
        LinMap(sigma, name="sigma.%s" % name),
        name=name,
    )


def theta(T, a):
    """``Theta(x # c) = x Phi(c)``."""
    return T.theta_map(a)


def theta_inv(T, u):
    """``Theta^-1(u) = u_alpha Phi^-1(e^alpha_1) # e^alpha_2``."""
    return T.theta_inv_map(u)


def check_cleft_iso(D, T, spec, rng=None):
    """
    Theta is unital, multiplicative from the cleft product to P, and
    inverse to Theta^-1 on both sides.
    """
    rng = rng or spec.rng("cleft.iso")
    E = T.E
    P = E.P
    elems = D.elements_space()
    report = CheckReport("cleft.iso")

    unit = report.child("unit")
    unit.expect_equal(theta(T, D.one()), P.one(), input=D.one())
    report.add(unit)

    mult = report.child("multiplicative")
    for a, b in draws(spec, rng, [elems, elems]):
        lhs = theta(T, D.mul(a, b))
        if not mult.expect_equal(lhs, P.mul(theta(T, a), theta(T, b)), input=(a, b)):
            break
    report.add(mult)

    inverse = report.child("inverse")
    for (a,) in draws(spec, rng, [elems]):
        if not inverse.expect_equal(theta_inv(T, theta(T, a)), a, input=a):
            break
    for (u,) in draws(spec, rng, [P.space()]):
        if not inverse.expect_equal(theta(T, theta_inv(T, u)), u, input=u):
            break
    report.add(inverse)
    logger.debug("cleft iso: %s", report.status)
    return report


def transported_direct(T, v):
    """``(Theta^-1 # id) psi (id # Theta)`` on a Vect over ``Pair(b, x, c)``."""
    v = apply_at(v, 1, T.theta_map, 2)
    v = T.E.psi(v)
    return apply_at(v, 0, T.theta_inv_map)


def transported_formula(T, v):
    """
    The same map through its index formula
    ``b # x # c -> x_alpha_beta Phi(c_A_B) Phi^-1(e^beta^B_1) # e^beta^B_2 # b^alpha^A``.
    """
    E = T.E
    v = apply_at(v, 0, E.psi, 2)
    v = apply_at(v, 1, E.psiC, 2)
    v = insert_at(v, 0, E.e_vec())
    v = apply_at(v, 0, E.psi, 2)
    v = apply_at(v, 1, E.psiC, 2)
    v = apply_at(v, 1, T.phi)
    v = apply_at(v, 2, E.C.delta)
    v = apply_at(v, 2, T.phiInv)
    return E.P.mul_legs(v, 0, 3)


def check_lemma26(E, T, spec, rng=None, routes=False):
    """
    Whether the transported map entwines the cleft product with C: the
    predicate ``psiC(c # e) = e # c``, and independently the identity
    ``psi~(c # 1 # e) = 1 # e # c`` through the index formula. With
    ``routes``, also the agreement of the formula and the direct
    composite on sampled inputs, meaningful for validated ``T``.
    """
    rng = rng or spec.rng("lemma26")
    report = CheckReport("lemma26")
    report.add(check_lemma26_predicate(E, spec, rng))
    one, e = E.P.one(), E.e_vec()

    spot = report.child("spot")
    for (c,) in draws(spec, rng, [E.C.space()]):
        lhs = transported_formula(T, c.tensor(one).tensor(e))
        if not spot.expect_equal(lhs, one.tensor(e).tensor(c), input=c):
            break
    report.add(spot)

    if routes:
        agree = report.child("routes")
        c_space = E.C.space()
        for b, x, c in draws(spec, rng, [c_space, E.m_space, c_space]):
            v = b.tensor(x).tensor(c)
            if not agree.expect_equal(transported_formula(T, v), transported_direct(T, v),
                                      input=(b, x, c)):
                break
        report.add(agree)
    logger.debug("lemma26: %s", report.status)
    return report
