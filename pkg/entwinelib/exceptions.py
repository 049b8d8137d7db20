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


class EntwineError(Exception):
    """Base class of every error raised by entwinelib"""

    pass


class InverseOfNonUnit(EntwineError):
    """Exception thrown when inverting zero or a non-monomial Laurent polynomial"""

    pass


class UndefinedOnBasis(EntwineError):
    """Exception thrown if a linear map's rule rejects a basis index"""

    def __init__(self, index, name=None):
        self.index = index
        self.name = name
        super(UndefinedOnBasis, self).__init__(
            "Map %s is undefined on basis index %r" % (name or "<anonymous>", index)
        )


class NotInvertibleAt(EntwineError):
    """Exception thrown if a pointwise convolution inverse does not exist at an index"""

    def __init__(self, index):
        self.index = index
        super(NotInvertibleAt, self).__init__(
            "Value at %r is not a recognized unit" % (index,)
        )


class NonTerminating(EntwineError):
    """Exception thrown if rewriting exceeds its step bound"""

    def __init__(self, bound):
        self.bound = bound
        super(NonTerminating, self).__init__(
            "Rewriting did not terminate within %d steps" % bound
        )


class SamplingExhausted(EntwineError):
    """Exception thrown if rejection sampling runs out of attempts"""

    pass


class ExprSyntaxError(EntwineError):
    """Exception thrown on malformed element expressions"""

    def __init__(self, message, position):
        self.position = position
        super(ExprSyntaxError, self).__init__(
            "%s at position %d" % (message, position)
        )


class UnknownGenerator(EntwineError):
    """Exception thrown if an expression names an undeclared generator"""

    def __init__(self, name):
        self.name = name
        super(UnknownGenerator, self).__init__("Unknown generator '%s'" % name)


class InvalidParameters(EntwineError):
    """Exception thrown on invalid instance parameters or sampling specs"""

    pass


class LeftFactorNotFixed(EntwineError):
    """
    Exception thrown by strict crossed multiplication if a factor has a
    coefficient outside the fixed-point subalgebra.
    """

    def __init__(self, side, witness):
        self.side = side
        self.witness = witness
        super(LeftFactorNotFixed, self).__init__(
            "The %s factor has coefficient %s outside the fixed-point subalgebra"
            % (side, witness)
        )


class ValidationError(EntwineError):
    """
    Base for failures of a validated construction. The failing
    :class:`entwinelib.kernel.CheckReport` is kept in ``report``.
    """

    def __init__(self, report, message=None):
        self.report = report
        if message is None:
            message = "Check '%s' failed" % report.check_id
            failed = report.first_failure()
            if failed is not None and failed is not report:
                message = "%s (in '%s')" % (message, failed.check_id)
        super(ValidationError, self).__init__(message)


class AxiomFailure(ValidationError):
    """Exception thrown if a builder's axioms fail"""

    pass


class TrivializationError(ValidationError):
    """Exception thrown if a cleft trivialization fails validation"""

    pass


class GaugeValidationError(ValidationError):
    """Exception thrown if a gauge transformation fails validation"""

    pass


class CoidealCheckFailed(ValidationError):
    """Exception thrown if J_kappa is not a coideal"""

    pass


class WellDefinednessFailure(ValidationError):
    """Exception thrown if a map on the quotient does not kill J_kappa"""

    pass


class TrivialCocycleInadmissible(ValidationError):
    """Exception thrown if the trivial cocycle conditions fail"""

    pass


class RepresentativeDependence(ValidationError):
    """Exception thrown if a quotient operation depends on the chosen representative"""

    pass
