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
Exact arithmetic kernel of entwinelib.

Scalars are :class:`fractions.Fraction` or :class:`LaurentQ`. Elements of
every algebra, coalgebra and tensor product are :class:`Vect` objects,
finitely supported combinations of :class:`BasisIndex` values. A tensor
basis element is a flat :class:`Pair` of legs; the helpers
:func:`apply_at` and :func:`insert_at` act on a range of legs and are how
every Sweedler-style composite in the package is evaluated.

Also here: seeded sampling (:class:`SampleSpec`, :class:`Space`) and the
structured check result :class:`CheckReport`.
"""
from __future__ import unicode_literals

import itertools
import logging
import random
from fractions import Fraction
from functools import total_ordering

import six
from six import python_2_unicode_compatible

from .exceptions import (
    InverseOfNonUnit,
    InvalidParameters,
    SamplingExhausted,
    UndefinedOnBasis,
)
from .misc import (
    COEFF_SEP,
    TENSOR_SEP,
    format_power,
    format_rational,
    join_signed,
    parenthesize,
)

logger = logging.getLogger(__name__)


#
# Scalars
#


@python_2_unicode_compatible
class LaurentQ(object):
    """
    Laurent polynomial in the formal invertible variable q with rational
    coefficients, stored as a mapping ``exponent -> Fraction`` without
    zero entries.

    Arithmetic results are canonical: a result whose support is ``{0}`` or
    empty comes back as a plain :class:`Fraction`.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        terms = {}
        if coeffs:
            for exp, c in six.iteritems(dict(coeffs)):
                c = Fraction(c)
                if c != 0:
                    terms[int(exp)] = c
        self._coeffs = terms

    @classmethod
    def monomial(cls, exponent, coeff=1):
        return cls({exponent: coeff})

    @property
    def coeffs(self):
        return dict(self._coeffs)

    def support(self):
        return sorted(self._coeffs)

    def coeff(self, exponent):
        return self._coeffs.get(exponent, Fraction(0))

    def is_monomial(self):
        return len(self._coeffs) == 1

    def __bool__(self):
        return bool(self._coeffs)

    __nonzero__ = __bool__

    @staticmethod
    def _lift(x):
        if isinstance(x, LaurentQ):
            return x._coeffs
        if isinstance(x, six.integer_types + (Fraction,)):
            return {0: Fraction(x)} if x else {}
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = dict(self._coeffs)
        for exp, c in six.iteritems(o):
            terms[exp] = terms.get(exp, 0) + c
        return canonical(LaurentQ(terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentQ(dict((k, -c) for k, c in six.iteritems(self._coeffs)))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + LaurentQ(dict((k, -c) for k, c in six.iteritems(o)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        terms = {}
        for i, a in six.iteritems(self._coeffs):
            for j, b in six.iteritems(o):
                terms[i + j] = terms.get(i + j, 0) + a * b
        return canonical(LaurentQ(terms))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if self._lift(other) is None:
            return NotImplemented
        return self * unit_inverse(other)

    def __rtruediv__(self, other):
        if self._lift(other) is None:
            return NotImplemented
        return unit_inverse(self) * other

    __div__ = __truediv__
    __rdiv__ = __rtruediv__

    def __pow__(self, n):
        if n < 0:
            return unit_inverse(self) ** (-n)
        result = Fraction(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._coeffs == o

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if set(self._coeffs) <= {0}:
            return hash(self._coeffs.get(0, Fraction(0)))
        return hash(frozenset(six.iteritems(self._coeffs)))

    def __str__(self):
        terms = []
        for exp in sorted(self._coeffs, reverse=True):
            c = self._coeffs[exp]
            mag = abs(c)
            if exp == 0:
                body = format_rational(mag)
            elif mag == 1:
                body = format_power("q", exp)
            else:
                body = "%s*%s" % (format_rational(mag), format_power("q", exp))
            terms.append((c < 0, body))
        return join_signed(terms)

    def __repr__(self):
        return "LaurentQ(%r)" % self._coeffs


#: The formal deformation parameter.
Q = LaurentQ.monomial(1)


def is_scalar(x):
    return isinstance(x, six.integer_types + (Fraction, LaurentQ))


def canonical(x):
    """Bring a scalar into canonical form."""
    if isinstance(x, LaurentQ):
        if set(x._coeffs) <= {0}:
            return x._coeffs.get(0, Fraction(0))
        return x
    if isinstance(x, six.integer_types):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    raise TypeError("Not a scalar: %r" % (x,))


def as_scalar(x):
    if isinstance(x, six.string_types):
        return Fraction(x)
    return canonical(x)


def unit_inverse(x):
    """
    Inverse of a unit scalar: a nonzero rational or a single-term
    Laurent monomial ``c*q^m``.
    """
    x = canonical(x)
    if isinstance(x, Fraction):
        if x == 0:
            raise InverseOfNonUnit("Zero has no inverse")
        return 1 / x
    if not x.is_monomial():
        raise InverseOfNonUnit("%s is not a monomial in q" % x)
    (exp, c), = x._coeffs.items()
    return LaurentQ({-exp: 1 / c})


def is_unit(x):
    x = canonical(x)
    if isinstance(x, Fraction):
        return x != 0
    return x.is_monomial()


def scalar_arith(op, a, b=None):
    """
    Dispatch ``op`` in ``add``, ``mul``, ``neg``, ``unit_inverse`` on
    canonical scalars.
    """
    a = canonical(a)
    if op == "add":
        return canonical(a + canonical(b))
    if op == "mul":
        return canonical(a * canonical(b))
    if op == "neg":
        return canonical(-a)
    if op == "unit_inverse":
        return unit_inverse(a)
    raise ValueError("Unsupported scalar operation %s" % op)


def scalar_text(x):
    """Scalar text usable as a left factor; multi-term sums are parenthesized."""
    x = canonical(x)
    if isinstance(x, Fraction):
        return format_rational(x)
    return parenthesize(six.text_type(x), len(x._coeffs) > 1)


def _split_sign(c):
    if isinstance(c, Fraction):
        return c < 0, abs(c)
    if c.is_monomial() and list(c._coeffs.values())[0] < 0:
        return True, -c
    return False, c


#
# Basis indices
#


@total_ordering
class BasisIndex(object):
    """
    Base of the basis index variants. Two indices are equal iff they have
    the same variant and key; ordering is by ``(RANK, key)``.
    """

    __slots__ = ()

    #: Variant rank, used first in ordering.
    RANK = 0

    def key(self):
        raise NotImplementedError

    def sort_key(self):
        return (self.RANK, self.key())

    def is_unit(self):
        """True for the unit monomial of an algebra basis."""
        return False

    def __eq__(self, other):
        if not isinstance(other, BasisIndex):
            return NotImplemented
        return self.RANK == other.RANK and self.key() == other.key()

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash(self.sort_key())

    def __repr__(self):
        return "%s%r" % (self.__class__.__name__, self.key())


@python_2_unicode_compatible
class GroupLike(BasisIndex):
    """The group-like basis element c_p."""

    __slots__ = ("p",)
    RANK = 1

    def __init__(self, p):
        self.p = int(p)

    def key(self):
        return (self.p,)

    def __str__(self):
        return "c_%d" % self.p


@python_2_unicode_compatible
class Monomial(BasisIndex):
    """Normal-form monomial ``v^k n^a nb^b``."""

    __slots__ = ("k", "a", "b")
    RANK = 2

    def __init__(self, k=0, a=0, b=0):
        if a < 0 or b < 0:
            raise ValueError("Monomial exponents of n, nb must be nonnegative")
        self.k, self.a, self.b = int(k), int(a), int(b)

    def key(self):
        return (self.k, self.a, self.b)

    def degree(self):
        return abs(self.k) + self.a + self.b

    def is_unit(self):
        return self.k == 0 and self.a == 0 and self.b == 0

    def __str__(self):
        parts = []
        if self.k > 0:
            parts.append(format_power("v", self.k))
        elif self.k < 0:
            parts.append(format_power("vi", -self.k))
        if self.a:
            parts.append(format_power("n", self.a))
        if self.b:
            parts.append(format_power("nb", self.b))
        return "*".join(parts) or "1"


@python_2_unicode_compatible
class Word(BasisIndex):
    """A word in generator symbols, before normalization."""

    __slots__ = ("symbols",)
    RANK = 3

    def __init__(self, symbols=()):
        self.symbols = tuple(symbols)

    def key(self):
        return self.symbols

    def __len__(self):
        return len(self.symbols)

    def is_unit(self):
        return not self.symbols

    def __str__(self):
        return "*".join(self.symbols) or "1"


@python_2_unicode_compatible
class GroupElem(BasisIndex):
    """An element of a finite group, labelled by a hashable value."""

    __slots__ = ("label",)
    RANK = 4

    def __init__(self, label):
        self.label = label

    def key(self):
        return (self.label,)

    def __str__(self):
        if isinstance(self.label, tuple):
            return "g(%s)" % ",".join("%s" % x for x in self.label)
        return "g%s" % (self.label,)


@python_2_unicode_compatible
class Dual(BasisIndex):
    """The dual basis functional of an index."""

    __slots__ = ("index",)
    RANK = 5

    def __init__(self, index):
        self.index = index

    def key(self):
        return self.index.sort_key()

    def __str__(self):
        return "d(%s)" % self.index


@python_2_unicode_compatible
class Pair(BasisIndex):
    """
    Tensor basis element. Legs are stored flat, so
    ``Pair(Pair(a, b), c) == Pair(a, Pair(b, c)) == Pair(a, b, c)``.
    The empty pair :data:`UNIT` is the basis of the scalars.
    """

    __slots__ = ("legs",)
    RANK = 6

    def __init__(self, *legs):
        flat = []
        for leg in legs:
            if isinstance(leg, Pair):
                flat.extend(leg.legs)
            else:
                flat.append(leg)
        self.legs = tuple(flat)

    @classmethod
    def of(cls, legs):
        legs = tuple(legs)
        if len(legs) == 1 and not isinstance(legs[0], Pair):
            return legs[0]
        return cls(*legs)

    @property
    def left(self):
        return Pair.of(self.legs[:-1])

    @property
    def right(self):
        return self.legs[-1]

    def key(self):
        return tuple(leg.sort_key() for leg in self.legs)

    def __str__(self):
        return TENSOR_SEP.join("%s" % leg for leg in self.legs)


UNIT = Pair()


def legs(index):
    """The tensor legs of a basis index."""
    if isinstance(index, Pair):
        return index.legs
    return (index,)


def join(parts):
    return Pair.of(parts)


#
# Vectors
#


def _accumulate(acc, index, c):
    acc[index] = acc.get(index, 0) + c


def _prune(acc):
    out = {}
    for index, c in six.iteritems(acc):
        c = canonical(c)
        if c != 0:
            out[index] = c
    return out


@python_2_unicode_compatible
class Vect(object):
    """
    Finitely supported linear combination of basis indices with scalar
    coefficients. Instances are immutable and never store a zero
    coefficient.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        acc = {}
        if terms:
            items = six.iteritems(terms) if isinstance(terms, dict) else terms
            for index, c in items:
                if not isinstance(index, BasisIndex):
                    raise TypeError("Vect terms need BasisIndex keys, got %r" % (index,))
                _accumulate(acc, index, canonical(c))
        self._terms = _prune(acc)

    @classmethod
    def _from_acc(cls, acc):
        v = cls.__new__(cls)
        v._terms = _prune(acc)
        return v

    @classmethod
    def basis(cls, index, coeff=1):
        return cls({index: coeff})

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def scalar(cls, c):
        """A scalar as a vector on :data:`UNIT`."""
        return cls({UNIT: c})

    @classmethod
    def sum(cls, vects):
        acc = {}
        for v in vects:
            for index, c in six.iteritems(v._terms):
                _accumulate(acc, index, c)
        return cls._from_acc(acc)

    def items(self):
        return six.iteritems(self._terms)

    def sorted_items(self):
        return sorted(six.iteritems(self._terms), key=lambda t: t[0])

    def support(self):
        return sorted(self._terms)

    def coeff(self, index):
        return self._terms.get(index, Fraction(0))

    def as_scalar(self):
        """Coefficient on :data:`UNIT`; the vector must live there."""
        for index in self._terms:
            if index != UNIT:
                raise ValueError("%s is not a scalar" % self)
        return self.coeff(UNIT)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def __add__(self, other):
        if not isinstance(other, Vect):
            return NotImplemented
        acc = dict(self._terms)
        for index, c in six.iteritems(other._terms):
            _accumulate(acc, index, c)
        return Vect._from_acc(acc)

    def __neg__(self):
        return Vect._from_acc(dict((i, -c) for i, c in six.iteritems(self._terms)))

    def __sub__(self, other):
        if not isinstance(other, Vect):
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = canonical(c)
        if c == 0:
            return Vect()
        return Vect._from_acc(dict((i, c * d) for i, d in six.iteritems(self._terms)))

    def __mul__(self, c):
        if not is_scalar(c):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def tensor(self, other):
        acc = {}
        for i, a in six.iteritems(self._terms):
            for j, b in six.iteritems(other._terms):
                _accumulate(acc, Pair(i, j), a * b)
        return Vect._from_acc(acc)

    def __eq__(self, other):
        if isinstance(other, Vect):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        return hash(frozenset(six.iteritems(self._terms)))

    def __str__(self):
        return join_signed([_render_term(i, c) for i, c in self.sorted_items()])

    def __repr__(self):
        return "Vect(%s)" % self


def _render_term(index, c):
    negative, mag = _split_sign(c)
    parts = legs(index)
    if not parts:
        return negative, scalar_text(mag)
    first = "%s" % parts[0]
    if first == "1":
        head = scalar_text(mag)
    elif mag == 1:
        head = first
    else:
        head = scalar_text(mag) + COEFF_SEP + first
    return negative, TENSOR_SEP.join([head] + ["%s" % leg for leg in parts[1:]])


def render(x):
    """Text form of a scalar, index, vector or plain value."""
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, (Vect, LaurentQ, BasisIndex)):
        return six.text_type(x)
    if isinstance(x, (tuple, list)):
        return ", ".join(render(y) for y in x)
    return six.text_type(x)


#
# Linear maps
#


class LinMap(object):
    """
    Linear map given by its values on basis indices.

    :param rule: callable ``BasisIndex -> Vect`` (a bare BasisIndex is
        accepted as its basis vector); returning None marks the index as
        outside the domain.
    :param name: label used in error messages.
    :param cache: memoize rule evaluations. The cache is a plain dict, so
        concurrent writers store identical values and the last one wins.
    """

    def __init__(self, rule, name=None, cache=True):
        self._rule = rule
        self.name = name or getattr(rule, "__name__", "map")
        self._cache = {} if cache else None

    def _coerce(self, image):
        if isinstance(image, Vect):
            return image
        if isinstance(image, BasisIndex):
            return Vect.basis(image)
        raise TypeError("Map %s returned %r, expected a Vect" % (self.name, image))

    def on_basis(self, index):
        if self._cache is not None:
            try:
                return self._cache[index]
            except KeyError:
                pass
        image = self._rule(index)
        if image is None:
            raise UndefinedOnBasis(index, self.name)
        image = self._coerce(image)
        if self._cache is not None:
            self._cache[index] = image
        return image

    def __call__(self, v):
        if isinstance(v, BasisIndex):
            return self.on_basis(v)
        acc = {}
        for index, c in v.items():
            for j, d in self.on_basis(index).items():
                _accumulate(acc, j, c * d)
        return Vect._from_acc(acc)

    def cache_size(self):
        return len(self._cache) if self._cache is not None else 0

    def clear_cache(self):
        if self._cache is not None:
            self._cache.clear()

    def __repr__(self):
        return "%s(%s)" % (self.__class__.__name__, self.name)


class LinForm(LinMap):
    """Scalar-valued linear map (counits, characters)."""

    def _coerce(self, image):
        return canonical(image)

    def __call__(self, v):
        if isinstance(v, BasisIndex):
            return self.on_basis(v)
        total = Fraction(0)
        for index, c in v.items():
            total = total + c * self.on_basis(index)
        return canonical(total)


def identity(name="id"):
    return LinMap(Vect.basis, name=name, cache=False)


def compose(f, g, name=None):
    """The map ``f o g``."""
    return LinMap(
        lambda index: f(g.on_basis(index)),
        name=name or "%s.%s" % (f.name, g.name),
    )


def _image(f, index):
    if isinstance(f, LinMap):
        return f.on_basis(index)
    return f(index)


def apply_at(v, pos, f, width=1):
    """
    Apply ``f`` to legs ``pos .. pos+width-1`` of every term of ``v`` and
    splice the image back in place. ``f`` may be a :class:`LinMap`, a
    :class:`LinForm` (the legs disappear) or a callable on basis indices.
    """
    acc = {}
    for index, c in v.items():
        parts = legs(index)
        if pos + width > len(parts):
            raise ValueError("Term %s has no legs %d..%d" % (index, pos, pos + width - 1))
        head, tail = parts[:pos], parts[pos + width:]
        image = _image(f, join(parts[pos:pos + width]))
        if isinstance(image, Vect):
            for j, d in image.items():
                _accumulate(acc, join(head + legs(j) + tail), c * d)
        else:
            _accumulate(acc, join(head + tail), c * image)
    return Vect._from_acc(acc)


def insert_at(v, pos, w):
    """Tensor ``w`` into every term of ``v`` before leg ``pos`` (None appends)."""
    acc = {}
    for index, c in v.items():
        parts = legs(index)
        at = len(parts) if pos is None else pos
        for j, d in w.items():
            _accumulate(acc, join(parts[:at] + legs(j) + parts[at:]), c * d)
    return Vect._from_acc(acc)


#
# Algebras
#


class Algebra(object):
    """
    Associative unital algebra on a basis. Subclasses provide
    :meth:`mul_basis` and :meth:`unit_index` (or override :meth:`one`).
    """

    name = "algebra"

    def __init__(self):
        self.mul_map = LinMap(self._mul_pair, name="%s.mul" % self.name)

    def _mul_pair(self, index):
        a, b = legs(index)
        return self.mul_basis(a, b)

    def mul_basis(self, a, b):
        raise NotImplementedError

    def unit_index(self):
        raise NotImplementedError

    def one(self):
        return Vect.basis(self.unit_index())

    def mul(self, a, b):
        return self.mul_map(a.tensor(b))

    def product(self, *factors):
        result = self.one()
        for f in factors:
            result = self.mul(result, f)
        return result

    def power(self, a, n):
        return self.product(*([a] * n))

    def mul_legs(self, v, pos, count=2):
        """Multiply ``count`` adjacent legs of ``v`` starting at ``pos``."""
        for _ in range(count - 1):
            v = apply_at(v, pos, self.mul_map, 2)
        return v

    def split_last(self, index):
        """``(prefix, generator)`` with index = prefix*generator, or None for the unit."""
        return None

    def generator(self, gen):
        raise NotImplementedError

    def relations(self):
        """Defining relations as ``(name, lhs word, rhs Vect of words)`` triples."""
        return []

    def recognize_unit(self, a):
        return None

    def basis(self):
        """Finite basis, or None when the algebra is infinite dimensional."""
        return None


#
# Sampling
#


class SampleSpec(object):
    """
    Bounds and seed for randomized checks.

    :param seed: base seed; identical seeds reproduce identical streams.
    :param max_degree: monomial degree bound in P.
    :param p_window: inclusive ``(p_min, p_max)`` range of group-like indices.
    :param support_size: maximum number of terms per random element.
    :param trials: number of random samples per identity.
    """

    DEFAULT_SEED = 0
    DEFAULT_MAX_DEGREE = 3
    DEFAULT_P_WINDOW = (-5, 5)
    DEFAULT_SUPPORT_SIZE = 3
    DEFAULT_TRIALS = 200

    def __init__(
        self,
        seed=DEFAULT_SEED,
        max_degree=DEFAULT_MAX_DEGREE,
        p_window=DEFAULT_P_WINDOW,
        support_size=DEFAULT_SUPPORT_SIZE,
        trials=DEFAULT_TRIALS,
    ):
        p_min, p_max = p_window
        if p_min > p_max:
            raise InvalidParameters("Empty p window [%d, %d]" % (p_min, p_max))
        if max_degree < 0:
            raise InvalidParameters("max_degree must be nonnegative")
        if support_size < 1 or trials < 1:
            raise InvalidParameters("support_size and trials must be positive")
        self.seed = int(seed)
        self.max_degree = int(max_degree)
        self.p_window = (int(p_min), int(p_max))
        self.support_size = int(support_size)
        self.trials = int(trials)

    def window(self):
        return list(range(self.p_window[0], self.p_window[1] + 1))

    def rng(self, salt=None):
        """Independent deterministic stream for ``salt``."""
        if salt is None:
            return random.Random(self.seed)
        return random.Random("%d:%s" % (self.seed, salt))

    def with_trials(self, trials):
        return SampleSpec(self.seed, self.max_degree, self.p_window, self.support_size, trials)

    def to_dict(self):
        return {
            "seed": self.seed,
            "maxDegree": self.max_degree,
            "pWindow": list(self.p_window),
            "supportSize": self.support_size,
            "trials": self.trials,
        }


class Space(object):
    """
    A named sampling space.

    :param draw: ``draw(rng, spec) -> Vect``.
    :param accept: optional membership predicate for rejection sampling.
    :param enumerate: optional ``enumerate(spec) -> list`` of all basis
        vectors, for finite spaces checked exhaustively.
    """

    MAX_ATTEMPTS = 64

    def __init__(self, name, draw, accept=None, enumerate=None, max_attempts=MAX_ATTEMPTS):
        self.name = name
        self.draw = draw
        self.accept = accept
        self.enumerate = enumerate
        self.max_attempts = max_attempts

    def is_finite(self):
        return self.enumerate is not None


def sample_element(spec, space, rng=None):
    """Draw one element of ``space``; deterministic for a fixed seed."""
    if rng is None:
        rng = spec.rng(space.name)
    for _ in range(space.max_attempts):
        v = space.draw(rng, spec)
        if space.accept is None or space.accept(v):
            return v
    raise SamplingExhausted(
        "No element of %s accepted after %d attempts" % (space.name, space.max_attempts)
    )


def samples(spec, space, rng, count=None):
    """All basis vectors of a finite space, else ``count`` random draws."""
    if space.is_finite():
        return list(space.enumerate(spec))
    return [sample_element(spec, space, rng) for _ in range(count or spec.trials)]


#: Largest product of finite spaces that :func:`draws` enumerates fully.
EXHAUSTIVE_LIMIT = 4096


def draws(spec, rng, spaces, count=None):
    """
    Input tuples for a check over ``spaces``: every combination when all
    spaces are finite and there are at most :data:`EXHAUSTIVE_LIMIT` of
    them, otherwise ``count`` (default ``spec.trials``) seeded draws.
    """
    pools = [s.enumerate(spec) if s.is_finite() else None for s in spaces]
    if all(p is not None for p in pools):
        size = 1
        for p in pools:
            size *= len(p)
        if size <= EXHAUSTIVE_LIMIT:
            return list(itertools.product(*pools))
    out = []
    for _ in range(count or spec.trials):
        out.append(
            tuple(
                rng.choice(pool) if pool is not None else sample_element(spec, s, rng)
                for s, pool in zip(spaces, pools)
            )
        )
    return out


def random_rational(rng, bound=5):
    num = rng.randint(-bound, bound) or 1
    return Fraction(num, rng.randint(1, 3))


def random_scalar(rng, symbolic=False):
    c = random_rational(rng)
    if symbolic and rng.random() < 0.5:
        return LaurentQ.monomial(rng.randint(-2, 2), c)
    return c


#
# Check reports
#


@python_2_unicode_compatible
class CheckReport(object):
    """
    Pass/fail result of one identity or of a suite of them. A composite
    report fails as soon as one child fails; its witness is the first
    failing child's witness.
    """

    (PASS, FAIL, SKIPPED) = ("pass", "fail", "skipped")

    def __init__(self, check_id, status=PASS):
        self.check_id = check_id
        self.status = status
        self.trials = 0
        self.witness = None
        self.note = None
        self.children = []

    @property
    def passed(self):
        return self.status != self.FAIL

    @property
    def failed(self):
        return self.status == self.FAIL

    def expect(self, ok, input=None, lhs=None, rhs=None):
        """Record one trial; the first failure keeps its witness."""
        self.trials += 1
        if not ok and self.status != self.FAIL:
            self.status = self.FAIL
            self.witness = {"input": render(input), "lhs": render(lhs), "rhs": render(rhs)}
            logger.debug("check %s failed: %s", self.check_id, self.witness)
        return bool(ok)

    def expect_equal(self, lhs, rhs, input=None):
        return self.expect(lhs == rhs, input=input, lhs=lhs, rhs=rhs)

    def fail(self, input=None, lhs=None, rhs=None):
        return self.expect(False, input=input, lhs=lhs, rhs=rhs)

    def skip(self, note):
        self.status = self.SKIPPED
        self.note = note
        return self

    def add(self, child):
        self.children.append(child)
        self.trials += child.trials
        if child.failed and self.status != self.FAIL:
            self.status = self.FAIL
            self.witness = child.witness
        return child

    def child(self, suffix):
        """Start a child report ``<id>.<suffix>``; attach it with :meth:`add`."""
        return CheckReport("%s.%s" % (self.check_id, suffix))

    def first_failure(self):
        if not self.failed:
            return None
        for c in self.children:
            if c.failed:
                return c.first_failure()
        return self

    def leaves(self):
        if not self.children:
            return [self]
        out = []
        for c in self.children:
            out.extend(c.leaves())
        return out

    def to_dict(self):
        return {
            "id": self.check_id,
            "status": self.status,
            "trials": self.trials,
            "witness": self.witness,
        }

    def __str__(self):
        return "%s: %s (%d trials)" % (self.check_id, self.status, self.trials)

    def __repr__(self):
        return "CheckReport(%s)" % self
