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
Registered instances.

* ``eq2``: the quantum Euclidean group as a cleft extension of the
  quantum hyperboloid by the group-like coalgebra spanned by ``c_p``.
* ``bialgebra-toy``: ``k[Z_N x Z_N]`` coacted on by ``kZ_N`` through the
  second factor, with trivial action and cocycle.
* ``dual-flip-toy``, ``dual-conj-toy``, ``dual-cleft-toy``: finite dual
  entwining data over group algebras.

Each constructor can inject one fault (see :data:`MUTATIONS`): a single
structure map is replaced and every other map is kept as in the honest
instance.
"""
from __future__ import unicode_literals

import logging
from collections import OrderedDict
from fractions import Fraction

from .cleft import Trivialization, derive_crossed_data
from .coalg import GroupAlgebra, GroupLikeCoalgebra, check_coalgebra, cyclic, product, symmetric
from .crossprod import CrossedProductData, check_crossed_axioms, trivial_sigma
from .dualcross import (
    DualEntwiningData,
    DualGauge,
    DualTrivialization,
    build_quotient,
    check_dual_axioms,
    check_dual_entwining,
    dual_cleft,
    trivial_dual_data,
)
from .entwine import EntwiningData, InstanceParams, check_entwining, check_psic_conditions
from .exceptions import AxiomFailure, InvalidParameters, UnknownGenerator
from .gauge import scalar_gauge
from .kernel import (
    CheckReport,
    GroupElem,
    GroupLike,
    LinForm,
    LinMap,
    Monomial,
    Pair,
    Space,
    Vect,
    apply_at,
    random_scalar,
)
from .ncalg import QuantumEuclideanAlgebra

logger = logging.getLogger(__name__)

#: Fault id -> (instance kinds it applies to, description).
MUTATIONS = OrderedDict(
    [
        ("psi-shift", (("primal",), "psi moves the group-like index by a different step")),
        ("psic-shift", (("primal",), "psiC(c_p # c_r) = c_r # c_(p+r-s+1)")),
        ("psic-skew", (("primal",), "psiC(c_p # c_r) = c_(r+1) # c_(p+r-s)")),
        ("sigma-q", (("primal",), "sigma multiplied by q, or by 2 for rational q")),
        ("rho-scale", (("primal",), "rho multiplied by 2")),
        ("sigma-scale", (("dual",), "sigmaBar multiplied by 2")),
        ("rho-shift", (("dual",), "rhoBar multiplied on the left by a non-unit group element")),
    ]
)


class Instance(object):
    """
    Everything built for one registered instance.

    Primal instances carry ``E``, ``D`` and optionally ``T`` and
    ``gauges``; dual instances carry ``Dd``, ``Q``, ``Dc`` and optionally
    ``Td`` and ``dual_gauge``.
    """

    def __init__(self, name, kind, params=None, mutation=None, **parts):
        self.name = name
        self.kind = kind
        self.params = params
        self.mutation = mutation
        self.E = parts.pop("E", None)
        self.T = parts.pop("T", None)
        self.D = parts.pop("D", None)
        self.gauges = parts.pop("gauges", [])
        self.Dd = parts.pop("Dd", None)
        self.Q = parts.pop("Q", None)
        self.Dc = parts.pop("Dc", None)
        self.Td = parts.pop("Td", None)
        self.dual_gauge = parts.pop("dual_gauge", None)
        self.extra = parts

    @property
    def is_dual(self):
        return self.kind == "dual"

    def params_dict(self):
        if isinstance(self.params, InstanceParams):
            return self.params.to_dict()
        return {"N": self.params}


def _check_mutation(mutate, kind):
    if mutate is None:
        return
    if mutate not in MUTATIONS:
        raise InvalidParameters("Unknown mutation '%s'" % mutate)
    if kind not in MUTATIONS[mutate][0]:
        raise InvalidParameters("Mutation '%s' does not apply to %s instances" % (mutate, kind))


def _scaled(f, factor, name):
    return LinMap(lambda index: f.on_basis(index).scale(factor), name=name)


def _validate(report):
    if report.failed:
        raise AxiomFailure(report)
    return report


#
# The quantum Euclidean group
#


def eq2_psi_gen(params, step=1):
    """
    Generator rules of psi over ``c_p``::

        psi(c_p # v) = v # c_(p+1)
        psi(c_p # n) = n # c_p + mu q^2p v # c_p - mu q^2p v # c_(p+1)

    and their mirror images for ``vi`` and ``nb``. ``step`` replaces the
    index shift of the ``v``, ``vi`` rules.
    """
    q, mu, nu = params.q, params.mu, params.nu
    v, vi = Monomial(1), Monomial(-1)

    def rule(c, gen):
        p = c.p
        weight = q ** (2 * p)
        if gen == "v":
            return Vect.basis(Pair(v, GroupLike(p + step)))
        if gen == "vi":
            return Vect.basis(Pair(vi, GroupLike(p - step)))
        if gen == "n":
            return Vect(
                [
                    (Pair(Monomial(0, 1), c), 1),
                    (Pair(v, c), mu * weight),
                    (Pair(v, GroupLike(p + 1)), -mu * weight),
                ]
            )
        if gen == "nb":
            return Vect(
                [
                    (Pair(Monomial(0, 0, 1), c), 1),
                    (Pair(vi, c), nu * weight),
                    (Pair(vi, GroupLike(p - 1)), -nu * weight),
                ]
            )
        raise UnknownGenerator(gen)

    return rule


def eq2_psic(s, shift=0, skew=0):
    """``psiC(c_p # c_r) = c_(r+skew) # c_(p+r-s+shift)``."""

    def rule(b, c):
        return Vect.basis(Pair(GroupLike(c.p + skew), GroupLike(b.p + c.p - s + shift)))

    return rule


def hyperboloid_generators(P, params):
    """``z = v + mu^-1 q^-2s n`` and ``zb = vi + nu^-1 q^-2s nb``."""
    q, s = params.q, params.s
    z = P.monomial(1) + P.monomial(0, 1, 0, (1 / params.mu) * q ** (-2 * s))
    zb = P.monomial(-1) + P.monomial(0, 0, 1, (1 / params.nu) * q ** (-2 * s))
    return z, zb


def hyperboloid_space(P, params):
    """Random sums of scaled words in ``z`` and ``zb``."""
    z, zb = hyperboloid_generators(P, params)

    def draw(rng, spec):
        terms = rng.randint(1, spec.support_size)
        out = Vect()
        for _ in range(terms):
            word = P.product(*[rng.choice((z, zb)) for _ in range(rng.randint(0, spec.max_degree))])
            out = out + word.scale(random_scalar(rng, params.symbolic))
        return out

    return Space("eq2.M", draw)


def make_eq2(params=None, spec=None, mutate=None):
    """
    The quantum Euclidean instance with ``e = c_s``,
    ``psiC(c_p # c_r) = c_r # c_(p+r-s)`` and the trivialization
    ``Phi(c_p) = v^(p-s)``.

    :param spec: when given, the honest instance is validated.
    :returns: ``(E, T, D)``.
    :raises AxiomFailure: if validation fails.
    """
    params = params or InstanceParams()
    _check_mutation(mutate, "primal")
    P = QuantumEuclideanAlgebra(params.q)
    C = GroupLikeCoalgebra()
    s = params.s
    E = EntwiningData(
        P, C, GroupLike(s), eq2_psic(s),
        psi_gen=eq2_psi_gen(params),
        params=params,
        m_space=hyperboloid_space(P, params),
        name="psi.eq2",
    )
    T = Trivialization(E, lambda c: P.monomial(c.p - s), name="phi")
    D = derive_crossed_data(T, name="eq2")
    if spec is not None and mutate is None:
        _validate(check_entwining(E, spec))
        _validate(check_psic_conditions(E, spec))
        T.validate(spec)
        _validate(check_crossed_axioms(D, spec))
    if mutate is not None:
        factor = params.q if params.symbolic else Fraction(2)
        E, T, D = _mutate_primal(
            mutate, E, T, D, factor,
            psi=lambda: EntwiningData(
                P, C, GroupLike(s), eq2_psic(s),
                psi_gen=eq2_psi_gen(params, step=0),
                params=params, m_space=E.m_space, name="psi.eq2.shift",
            ),
            psic_shift=eq2_psic(s, shift=1),
            psic_skew=eq2_psic(s, skew=1),
        )
    logger.debug("eq2 instance built: %r, mutation %s", params, mutate)
    return E, T, D


def eq2_gauge(E, weights):
    """
    Scalar gauge ``gamma(c_p) = weights(p - s)``; ``weights(0)`` must be 1.
    """
    s = E.params.s if E.params is not None else E.e.p
    return scalar_gauge(E, lambda c: weights(c.p - s), name="gamma")


def _mutate_primal(mutate, E, T, D, factor, psi, psic_shift, psic_skew):
    if mutate == "psi-shift":
        E2 = psi()
    elif mutate == "psic-shift":
        E2 = E.with_psic(psic_shift)
    elif mutate == "psic-skew":
        E2 = E.with_psic(psic_skew)
    else:
        E2 = E
    T2 = Trivialization(E2, T.phi, T.phiInv, name=T.name)
    if mutate == "sigma-q":
        D2 = D.with_maps(sigma=_scaled(D.sigma, factor, "sigma.q"), name="%s.sigma-q" % D.name)
    elif mutate == "rho-scale":
        D2 = D.with_maps(rho=_scaled(D.rho, 2, "rho.2"), name="%s.rho-scale" % D.name)
    else:
        D2 = D.with_maps(data=E2, name="%s.%s" % (D.name, mutate))
    return E2, T2, D2


#
# The bialgebra toy
#


def make_bialgebra_toy(N=2, spec=None, mutate=None):
    """
    ``P = k[Z_N x Z_N]`` with the coaction ``(a, b) -> (a, b) # g_b`` of
    ``C = kZ_N``, so ``psi(g_h # (a, b)) = (a, b) # g_(h+b)`` and
    ``psiC(g_x # g_y) = g_y # g_(x+y)``. The fixed points are
    ``M = k[Z_N x 0]``; action and cocycle are trivial and the crossed
    product is the group algebra of ``Z_N x Z_N``.

    :returns: ``(E, D)``; the trivialization ``g_h -> (0, h)`` is available
        through :func:`bialgebra_trivialization`.
    """
    if N < 2:
        raise InvalidParameters("The bialgebra toy needs N >= 2, got %d" % N)
    _check_mutation(mutate, "primal")
    zn = cyclic(N)
    P = GroupAlgebra(product(zn, zn), name="P")
    C = GroupAlgebra(zn, name="C")
    e = GroupElem(zn.identity)

    def psi_basis(twist):
        def rule(c, u):
            a, b = u.label
            return Vect.basis(Pair(u, GroupElem(zn.mul(c.label, zn.mul(b, twist * a)))))

        return rule

    def psic(shift=0, skew=0):
        def rule(b, c):
            return Vect.basis(
                Pair(
                    GroupElem(zn.mul(c.label, skew % N)),
                    GroupElem(zn.mul(zn.mul(b.label, c.label), shift % N)),
                )
            )

        return rule

    fixed = [GroupElem((a, 0)) for a in zn.elements]

    def draw(rng, spec):
        terms = rng.randint(1, spec.support_size)
        return Vect((rng.choice(fixed), random_scalar(rng)) for _ in range(terms))

    m_space = Space("toy.M", draw, enumerate=lambda spec: [Vect.basis(i) for i in fixed])
    E = EntwiningData(P, C, e, psic(), psi_basis=psi_basis(0), m_space=m_space, name="psi.toy")
    rho = LinMap(
        lambda index: Vect.basis(index.legs[1]).scale(C.counit.on_basis(index.legs[0])),
        name="rho.triv",
    )
    D = CrossedProductData(E, rho, trivial_sigma(C, P), psi_preserves_m=True, name="toy")
    if spec is not None and mutate is None:
        _validate(check_entwining(E, spec))
        _validate(check_psic_conditions(E, spec))
        _validate(check_crossed_axioms(D, spec))
    if mutate is not None:
        T = bialgebra_trivialization(E)
        E, _, D = _mutate_primal(
            mutate, E, T, D, Fraction(2),
            psi=lambda: EntwiningData(
                P, C, e, psic(), psi_basis=psi_basis(1), m_space=m_space, name="psi.toy.shift"
            ),
            psic_shift=psic(shift=1),
            psic_skew=psic(skew=1),
        )
    return E, D


def bialgebra_trivialization(E):
    """``Phi(g_h) = (0, h)``, a cleft trivialization of the bialgebra toy."""
    return Trivialization(E, lambda c: Vect.basis(GroupElem((0, c.label))), name="phi")


def toy_gauge(E):
    """Scalar gauge ``gamma(g_h) = h + 1``."""
    return scalar_gauge(E, lambda c: Fraction(c.label + 1), name="gamma")


#
# Dual toys
#


def _kappa_trivial():
    return LinForm(lambda u: Fraction(1), name="kappa")


def _psip_regular(group):
    """``psiP(g # h) = h # gh``."""

    def rule(u, v):
        return Vect.basis(Pair(v, GroupElem(group.mul(u.label, v.label))))

    return rule


def _group_gauge(Dd, Q, label, name="gamma"):
    """The dual gauge ``m -> g_label(m)``."""
    return DualGauge(Dd, Q, lambda m: Vect.basis(GroupElem(label(m.label))), name=name)


def _mutate_dual(mutate, Dc, group):
    if mutate == "sigma-scale":
        return Dc.with_maps(sigma_bar=_scaled(Dc.sigma_bar, 2, "sigmaBar.2"),
                            name="%s.sigma-scale" % Dc.name)
    x = Vect.basis(GroupElem(group.elements[1]))
    P = Dc.E.P
    shifted = LinMap(
        lambda c: apply_at(x.tensor(Dc.rho_bar.on_basis(c)), 0, P.mul_map, 2),
        name="rhoBar.shift",
    )
    return Dc.with_maps(rho_bar=shifted, name="%s.rho-shift" % Dc.name)


def _finish_dual(Dd, Q, Dc, group, spec, mutate):
    if spec is not None and mutate is None:
        _validate(check_dual_entwining(Dd, spec))
        _validate(check_dual_axioms(Dc, spec))
    if mutate is not None:
        Dc = _mutate_dual(mutate, Dc, group)
    return Dd, Q, Dc


def make_dual_flip_toy(N=3, spec=None, mutate=None):
    """
    ``C = P = kZ_N`` with ``psi(g # h) = h # g``, ``kappa = 1`` and
    ``psiP(g # h) = h # gh``. ``J_kappa = 0``, so ``M = C``.

    :returns: ``(Dd, Q, Dc)`` with the trivial dual data.
    """
    if N < 2:
        raise InvalidParameters("The flip toy needs N >= 2, got %d" % N)
    _check_mutation(mutate, "dual")
    zn = cyclic(N)
    C = GroupAlgebra(zn, name="C")
    P = GroupAlgebra(zn, name="P")
    Dd = DualEntwiningData(
        C, P, _kappa_trivial(), _psip_regular(zn),
        psi_basis=lambda c, u: Vect.basis(Pair(u, c)), name="psi.flip",
    )
    Q = build_quotient(Dd, spec)
    return _finish_dual(Dd, Q, trivial_dual_data(Dd, Q, name="flip"), zn,
                        spec, mutate)


def make_dual_conj_toy(spec=None, mutate=None):
    """
    ``C = P = kS_3`` with ``psi(g # h) = h # h^-1 g h``, ``kappa = 1`` and
    ``psiP(g # h) = h # gh``. ``M`` is spanned by the conjugacy classes.
    """
    _check_mutation(mutate, "dual")
    s3 = symmetric(3)
    C = GroupAlgebra(s3, name="C")
    P = GroupAlgebra(s3, name="P")

    def psi(c, u):
        conj = s3.mul(s3.mul(s3.inv(u.label), c.label), u.label)
        return Vect.basis(Pair(u, GroupElem(conj)))

    Dd = DualEntwiningData(C, P, _kappa_trivial(), _psip_regular(s3), psi_basis=psi,
                           name="psi.conj")
    Q = build_quotient(Dd, spec)
    return _finish_dual(Dd, Q, trivial_dual_data(Dd, Q, name="conj"), s3,
                        spec, mutate)


def make_dual_cleft_toy(N=3, spec=None, mutate=None):
    """
    ``C = k[Z_N x Z_N]``, ``P = kZ_N``, ``psi((a, b) # h) = h # (a, b+h)``,
    ``kappa = 1``, ``psiP(g # h) = h # gh`` and the dual trivialization
    ``Phi((a, b)) = g_b``. ``M`` is a copy of ``kZ_N`` indexed by ``a``.

    :returns: ``(Dd, Q, Dc, Td)``.
    """
    if N < 2:
        raise InvalidParameters("The dual cleft toy needs N >= 2, got %d" % N)
    _check_mutation(mutate, "dual")
    zn = cyclic(N)
    C = GroupAlgebra(product(zn, zn), name="C")
    P = GroupAlgebra(zn, name="P")

    def psi(c, u):
        a, b = c.label
        return Vect.basis(Pair(u, GroupElem((a, zn.mul(b, u.label)))))

    Dd = DualEntwiningData(C, P, _kappa_trivial(), _psip_regular(zn), psi_basis=psi,
                           name="psi.cleft")
    Q = build_quotient(Dd, spec)
    Td = DualTrivialization(Dd, Q, lambda c: Vect.basis(GroupElem(c.label[1])), name="phi")
    Dc = dual_cleft(Td, spec, name="cleft")
    Dd, Q, Dc = _finish_dual(Dd, Q, Dc, zn, spec, mutate)
    return Dd, Q, Dc, Td


#
# Registry
#


def _build_eq2(params, spec, mutate):
    E, T, D = make_eq2(params, spec, mutate)
    gauges = [
        eq2_gauge(E, lambda k: Fraction(2) ** k),
        eq2_gauge(E, lambda k: Fraction(-3, 2) ** k),
    ]
    return Instance("eq2", "primal", params, mutate, E=E, T=T, D=D, gauges=gauges)


def _build_bialgebra(size, spec, mutate):
    E, D = make_bialgebra_toy(size, spec, mutate)
    return Instance("bialgebra-toy", "primal", size, mutate, E=E, D=D,
                    T=bialgebra_trivialization(E), gauges=[toy_gauge(E)])


def _build_flip(size, spec, mutate):
    Dd, Q, Dc = make_dual_flip_toy(size, spec, mutate)
    return Instance("dual-flip-toy", "dual", size, mutate, Dd=Dd, Q=Q, Dc=Dc,
                    dual_gauge=_group_gauge(Dd, Q, lambda label: label))


def _build_conj(size, spec, mutate):
    Dd, Q, Dc = make_dual_conj_toy(spec, mutate)
    return Instance("dual-conj-toy", "dual", 6, mutate, Dd=Dd, Q=Q, Dc=Dc,
                    dual_gauge=_group_gauge(Dd, Q, lambda label: label))


def _build_dual_cleft(size, spec, mutate):
    Dd, Q, Dc, Td = make_dual_cleft_toy(size, spec, mutate)
    return Instance("dual-cleft-toy", "dual", size, mutate, Dd=Dd, Q=Q, Dc=Dc, Td=Td,
                    dual_gauge=_group_gauge(Dd, Q, lambda label: label[0]))


#: Instance name -> (builder, default size or None for eq2, description).
REGISTRY = OrderedDict(
    [
        ("eq2", (_build_eq2, None, "quantum Euclidean group over the quantum hyperboloid")),
        ("bialgebra-toy", (_build_bialgebra, 2, "k[Z_N x Z_N] coacted on by kZ_N")),
        ("dual-flip-toy", (_build_flip, 3, "kZ_N with the flip entwining, J_kappa = 0")),
        ("dual-conj-toy", (_build_conj, 6, "kS_3 with the conjugation entwining")),
        ("dual-cleft-toy", (_build_dual_cleft, 3, "k[Z_N x Z_N] over kZ_N, dual cleft")),
    ]
)


def build_instance(name, params=None, size=None, spec=None, mutate=None):
    """
    Build a registered instance.

    :param params: :class:`InstanceParams` for ``eq2``.
    :param size: ``N`` for the toys; the registry default when omitted.
    :raises InvalidParameters: for unknown names or mutations.
    """
    try:
        builder, default, _ = REGISTRY[name]
    except KeyError:
        raise InvalidParameters("Unknown instance '%s'" % name)
    if default is None:
        return builder(params or InstanceParams(), spec, mutate)
    return builder(size or default, spec, mutate)


def coalgebra_report(instance, spec):
    """Coalgebra laws of C, and of M for dual instances."""
    report = CheckReport("coalgebra")
    C = instance.Dd.C if instance.is_dual else instance.E.C
    report.add(check_coalgebra(C, spec))
    if instance.is_dual:
        report.add(check_coalgebra(instance.Q, spec))
    return report
