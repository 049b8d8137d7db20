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
Command line front end.

    entwinelib check eq2 --mu 3 --nu 5 --s 0 --seed 42 --suites all --json out.json
    entwinelib eval eq2 "n*v"
    entwinelib cross-mul eq2 "z # c_0" "zb # c_1"
    entwinelib list-instances

``check`` exits with 0 when every check passes, 1 when one fails and 2 on
usage errors.
"""
from __future__ import print_function, unicode_literals

import argparse
import json
import logging
import re
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import __version__
from .cleft import check_cleft_iso, check_lemma26, check_trivialization, derive_crossed_data
from .crossprod import (
    check_comodule_compat,
    check_crossed_axioms,
    check_equivalent_data,
    check_trivial_cocycle_admissible,
    module_and_comodule,
)
from .dualcross import (
    check_coideal,
    check_dual_axioms,
    check_dual_cleft_iso,
    check_dual_entwining,
    check_dual_equivalence,
    check_dual_gauge,
    check_dual_module_comodule,
    check_dual_trivialization,
    check_self_duality,
    dual_gauge,
)
from .entwine import InstanceParams, check_coaction, check_entwining, check_psiC
from .exceptions import (
    EntwineError,
    ExprSyntaxError,
    InvalidParameters,
    LeftFactorNotFixed,
    UnknownGenerator,
)
from .gauge import (
    check_equivalence,
    check_gauge,
    coboundary,
    gauge_product,
    gauge_transform,
    random_scalar_gauges,
)
from .instances import MUTATIONS, REGISTRY, build_instance, coalgebra_report, hyperboloid_generators
from .kernel import CheckReport, GroupLike, SampleSpec, Vect, canonical, legs

logger = logging.getLogger(__name__)

#: Verification suites, in report order.
SUITES = (
    "coalgebra",
    "entwining",
    "crossed",
    "cleft",
    "gauge",
    "lemma24",
    "lemma26",
    "lemma34",
    "dual",
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


#
# Expressions
#

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|(c_-?\d+)|([A-Za-z_]\w*)|(.))")


def _tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        number, group_like, name, symbol = m.groups()
        if number is not None:
            tokens.append(("num", Fraction(number), start))
        elif group_like is not None:
            tokens.append(("c", int(group_like[2:]), start))
        elif name is not None:
            tokens.append(("name", name, start))
        else:
            tokens.append(("sym", symbol, start))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _Parser(object):
    """Recursive descent over the element grammar, evaluating as it goes."""

    def __init__(self, src, P, q, generators):
        self.tokens = _tokenize(src)
        self.i = 0
        self.P = P
        self.q = q
        self.generators = generators

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at(self, kind, value=None):
        tok = self.peek()
        return tok[0] == kind and (value is None or tok[1] == value)

    def expect(self, kind, value=None):
        if not self.at(kind, value):
            tok = self.peek()
            raise ExprSyntaxError(
                "Expected %s, found %s" % (value or kind, tok[1] if tok[1] is not None else "end"),
                tok[2],
            )
        return self.take()

    def parse(self):
        value = self.sum()
        self.expect("end")
        return value

    def sum(self):
        """``[+-] item (('+'|'-') item)*`` where items may carry ``# c_p``."""
        sign = 1
        if self.at("sym", "-") or self.at("sym", "+"):
            sign = -1 if self.take()[1] == "-" else 1
        total = self.tensor_item().scale(sign)
        while self.at("sym", "+") or self.at("sym", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            total = self._add(total, self.tensor_item().scale(sign))
        return total

    def _add(self, a, b):
        if _widths(a) and _widths(b) and _widths(a) != _widths(b):
            raise ExprSyntaxError("Cannot add an element of P and of P # C", self.peek()[2])
        return a + b

    def tensor_item(self):
        value = self.term()
        if self.at("sym", "#"):
            self.take()
            tok = self.expect("c")
            value = value.tensor(Vect.basis(GroupLike(tok[1])))
        return value

    def term(self):
        value = self.factor()
        while self.at("sym", "*"):
            self.take()
            value = self.P.mul(value, self.factor())
        return value

    def factor(self):
        start = self.peek()[2]
        base = self.atom()
        if self.at("sym", "^"):
            self.take()
            sign = 1
            if self.at("sym", "-"):
                self.take()
                sign = -1
            exponent = int(self.expect("num")[1])
            if sign < 0:
                inverse = self.P.recognize_unit(base)
                if inverse is None:
                    raise ExprSyntaxError("Negative power of a non-invertible element", start)
                base = inverse
            base = self.P.power(base, exponent)
        return base

    def atom(self):
        kind, value, pos = self.peek()
        if kind == "num":
            self.take()
            return self.P.one().scale(value)
        if kind == "name":
            self.take()
            if value == "q":
                return self.P.one().scale(self.q)
            if value in self.generators:
                return self.generators[value]
            raise UnknownGenerator(value)
        if self.at("sym", "("):
            self.take()
            inner = self.sum()
            self.expect("sym", ")")
            return inner
        raise ExprSyntaxError("Unexpected %s" % (value if value is not None else "end"), pos)


def _widths(v):
    return set(len(legs(i)) for i in v.support())


def parse_expr(src, P, params):
    """
    Parse an element of the quantum Euclidean algebra, or of ``P # C``
    when its terms carry ``# c_p``.

    :param P: the :class:`entwinelib.ncalg.QuantumEuclideanAlgebra`.
    :param params: the :class:`InstanceParams` defining ``z`` and ``zb``.
    :raises ExprSyntaxError: with the offending position.
    :raises UnknownGenerator: for names outside ``v, vi, n, nb, z, zb, q``.
    """
    z, zb = hyperboloid_generators(P, params)
    generators = {
        "v": P.generator("v"),
        "vi": P.generator("vi"),
        "n": P.generator("n"),
        "nb": P.generator("nb"),
        "z": z,
        "zb": zb,
    }
    return _Parser(src, P, params.q, generators).parse()


#
# Suites
#


class RunConfig(object):
    """
    One ``check`` run.

    :param suites: names from :data:`SUITES`, or ``["all"]``.
    :raises InvalidParameters: for unknown instances, suites or mutations.
    """

    def __init__(self, instance, params=None, size=None, spec=None, suites=("all",),
                 report_path=None, jobs=1, mutate=None):
        if instance not in REGISTRY:
            raise InvalidParameters("Unknown instance '%s'" % instance)
        suites = list(suites)
        if "all" in suites:
            suites = list(SUITES)
        unknown = [s for s in suites if s not in SUITES]
        if unknown:
            raise InvalidParameters("Unknown suites: %s" % ", ".join(unknown))
        if mutate is not None and mutate not in MUTATIONS:
            raise InvalidParameters("Unknown mutation '%s'" % mutate)
        if jobs < 1:
            raise InvalidParameters("--jobs must be positive")
        self.instance = instance
        self.params = params or InstanceParams()
        self.size = size
        self.spec = spec or SampleSpec()
        self.suites = [s for s in SUITES if s in suites]
        self.report_path = report_path
        self.jobs = jobs
        self.mutate = mutate


def _skipped(check_id, note):
    return CheckReport(check_id).skip(note)


def _suite_entwining(inst, spec):
    if inst.is_dual:
        return [check_dual_entwining(inst.Dd, spec)]
    return [check_entwining(inst.E, spec), check_psiC(inst.E, spec), check_coaction(inst.E, spec)]


def _suite_crossed(inst, spec):
    if inst.is_dual:
        return [_skipped("crossed", "dual instance; see the dual suite")]
    return [check_crossed_axioms(inst.D, spec), module_and_comodule(inst.D, spec)]


def _suite_cleft(inst, spec):
    if inst.is_dual:
        if inst.Td is None:
            return [_skipped("dual.cleft", "no dual trivialization")]
        return [check_dual_trivialization(inst.Td, spec), check_dual_cleft_iso(inst.Dc, inst.Td, spec)]
    if inst.T is None:
        return [_skipped("cleft", "no trivialization")]
    return [check_trivialization(inst.T, spec),
            check_cleft_iso(derive_crossed_data(inst.T), inst.T, spec)]


def _suite_gauge(inst, spec):
    if inst.is_dual:
        g = inst.dual_gauge
        gauged = dual_gauge(inst.Dc, g)
        return [
            check_dual_gauge(g, spec),
            check_dual_axioms(gauged, spec, spec.rng("dual.gauged")),
            check_dual_equivalence(inst.Dc, gauged, g, spec),
        ]
    D = inst.D
    out = [_gauge_report(D, inst.E, g, spec, "gauge.%d" % k) for k, g in enumerate(inst.gauges)]
    if len(inst.gauges) > 1:
        group = CheckReport("gauge.group")
        group.add(check_gauge(gauge_product(inst.gauges[0], inst.gauges[1]), spec))
        group.add(check_gauge(inst.gauges[0].inverse(), spec))
        out.append(group)
    out.append(_random_gauge_report(inst, spec))
    return out


def _gauge_report(D, E, g, spec, check_id):
    report = CheckReport(check_id)
    gauged = gauge_transform(D, g)
    report.add(check_gauge(g, spec))
    report.add(check_crossed_axioms(gauged, spec, spec.rng("%s.crossed" % check_id)))
    report.add(check_equivalence(D, gauged, g, spec))
    with_coboundary = gauged.with_maps(sigma=coboundary(E, D.rho, g, spec))
    report.add(check_equivalent_data(gauged, with_coboundary, spec,
                                     check_id="%s.coboundary" % check_id))
    return report


def _random_gauge_report(inst, spec):
    # a tenth of the trials per gauge
    small = spec.with_trials(max(1, spec.trials // 10))
    gauges = random_scalar_gauges(inst.E, spec)
    report = CheckReport("gauge.random")
    for k, g in enumerate(gauges):
        child = _gauge_report(inst.D, inst.E, g, small, "gauge.random.%d" % k)
        h = gauges[(k + 1) % len(gauges)]
        child.add(check_gauge(gauge_product(g, h), small))
        report.add(child)
    logger.debug("checked %d random gauges on %s", len(gauges), inst.name)
    return report


def _suite_lemma24(inst, spec):
    if inst.is_dual:
        return [_skipped("lemma24", "dual instance")]
    return [check_comodule_compat(inst.D, spec)]


def _suite_lemma26(inst, spec):
    if inst.is_dual or inst.T is None:
        return [_skipped("lemma26", "no trivialization")]
    return [check_lemma26(inst.E, inst.T, spec, routes=True)]


def _suite_lemma34(inst, spec):
    if inst.is_dual:
        return [_skipped("lemma34", "dual instance")]
    return [check_trivial_cocycle_admissible(inst.E, spec)]


def _suite_dual(inst, spec):
    if inst.is_dual:
        return [
            check_coideal(inst.Q),
            check_dual_axioms(inst.Dc, spec),
            check_dual_module_comodule(inst.Dc, spec),
        ]
    if inst.E.C.basis() is None or inst.E.P.basis() is None:
        return [_skipped("selfdual", "infinite dimensional")]
    return [check_self_duality(inst.E, spec)]


_SUITE_RUNNERS = {
    "coalgebra": lambda inst, spec: [coalgebra_report(inst, spec)],
    "entwining": _suite_entwining,
    "crossed": _suite_crossed,
    "cleft": _suite_cleft,
    "gauge": _suite_gauge,
    "lemma24": _suite_lemma24,
    "lemma26": _suite_lemma26,
    "lemma34": _suite_lemma34,
    "dual": _suite_dual,
}


def run_one(inst, suite, spec):
    """Run one suite; library errors become a failed report."""
    try:
        return _SUITE_RUNNERS[suite](inst, spec)
    except EntwineError as err:
        logger.debug("suite %s raised %r", suite, err)
        report = CheckReport(suite)
        report.fail(input=suite, lhs="%s" % err, rhs=type(err).__name__)
        return [report]


def run_suite(cfg):
    """
    Run the configured suites.

    :returns: ``(report dict, exit code)``.
    """
    started = time.time()
    inst = build_instance(cfg.instance, params=cfg.params, size=cfg.size, mutate=cfg.mutate)
    if cfg.jobs > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(lambda s: run_one(inst, s, cfg.spec), cfg.suites))
    else:
        results = [run_one(inst, s, cfg.spec) for s in cfg.suites]
    checks = [r.to_dict() for reports in results for r in reports]
    params = inst.params_dict()
    if cfg.mutate is not None:
        params["mutate"] = cfg.mutate
    report = {
        "version": __version__,
        "instance": inst.name,
        "params": params,
        "seed": cfg.spec.seed,
        "checks": checks,
        "wallTimeMs": int((time.time() - started) * 1000),
    }
    failed = any(c["status"] == CheckReport.FAIL for c in checks)
    return report, EXIT_FAIL if failed else EXIT_OK


def dump_report(report):
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


#
# Command line
#


def rational(text):
    """``a``, ``-a`` or ``a/b``."""
    try:
        return canonical(Fraction(text))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a rational number: %s" % text)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="entwinelib", description="Crossed products by coalgebras: checks and evaluation."
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command")

    def instance_args(p):
        p.add_argument("instance", help="registered instance, see list-instances")
        p.add_argument("--q", type=rational, default=None, help="numeric q; symbolic if omitted")
        p.add_argument("--mu", type=rational, default=InstanceParams.DEFAULT_MU)
        p.add_argument("--nu", type=rational, default=InstanceParams.DEFAULT_NU)
        p.add_argument("--s", type=int, default=InstanceParams.DEFAULT_S)
        p.add_argument("--size", type=int, default=None, help="N for the finite toys")

    check = sub.add_parser("check", help="run verification suites")
    instance_args(check)
    check.add_argument("--p-min", type=int, default=SampleSpec.DEFAULT_P_WINDOW[0])
    check.add_argument("--p-max", type=int, default=SampleSpec.DEFAULT_P_WINDOW[1])
    check.add_argument("--max-degree", type=int, default=SampleSpec.DEFAULT_MAX_DEGREE)
    check.add_argument("--support-size", type=int, default=SampleSpec.DEFAULT_SUPPORT_SIZE)
    check.add_argument("--samples", type=int, default=SampleSpec.DEFAULT_TRIALS)
    check.add_argument("--seed", type=int, default=SampleSpec.DEFAULT_SEED)
    check.add_argument("--suites", default="all", help="comma separated; 'all' or %s" % ",".join(SUITES))
    check.add_argument("--json", dest="report_path", default=None, help="write the report here")
    check.add_argument("--jobs", type=int, default=1)
    check.add_argument("--mutate", default=None, choices=list(MUTATIONS))

    ev = sub.add_parser("eval", help="normalize an element")
    instance_args(ev)
    ev.add_argument("expr")

    cm = sub.add_parser("cross-mul", help="multiply two elements of M # C")
    instance_args(cm)
    cm.add_argument("left")
    cm.add_argument("right")

    sub.add_parser("list-instances", help="print the registered instances")
    return parser


def _params(args):
    return InstanceParams(q=args.q, mu=args.mu, nu=args.nu, s=args.s)


def _eq2_only(args):
    if args.instance != "eq2":
        raise InvalidParameters("Expressions are supported for eq2 only")


def _cmd_check(args, out):
    spec = SampleSpec(
        seed=args.seed,
        max_degree=args.max_degree,
        p_window=(args.p_min, args.p_max),
        support_size=args.support_size,
        trials=args.samples,
    )
    cfg = RunConfig(
        args.instance,
        params=_params(args),
        size=args.size,
        spec=spec,
        suites=[s.strip() for s in args.suites.split(",") if s.strip()],
        report_path=args.report_path,
        jobs=args.jobs,
        mutate=args.mutate,
    )
    report, code = run_suite(cfg)
    text = dump_report(report)
    if cfg.report_path:
        with open(cfg.report_path, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    for check in report["checks"]:
        if check["status"] == CheckReport.FAIL:
            logger.warning("%s failed: %s", check["id"], check["witness"])
    return code


def _cmd_eval(args, out):
    _eq2_only(args)
    inst = build_instance("eq2", params=_params(args))
    out.write("%s\n" % parse_expr(args.expr, inst.E.P, inst.params))
    return EXIT_OK


def _cmd_cross_mul(args, out):
    _eq2_only(args)
    inst = build_instance("eq2", params=_params(args))
    P = inst.E.P
    a = parse_expr(args.left, P, inst.params)
    b = parse_expr(args.right, P, inst.params)
    try:
        product = inst.D.mul(a, b, strict=True)
    except LeftFactorNotFixed as err:
        logger.error("%s", err)
        return EXIT_FAIL
    out.write("%s\n" % product)
    return EXIT_OK


def _cmd_list(args, out):
    for name, (_, default, description) in REGISTRY.items():
        size = "" if default is None else " (N=%d)" % default
        out.write("%s%s: %s\n" % (name, size, description))
    return EXIT_OK


_COMMANDS = {
    "check": _cmd_check,
    "eval": _cmd_eval,
    "cross-mul": _cmd_cross_mul,
    "list-instances": _cmd_list,
}


def main(argv=None, out=None):
    """
    Entry point of the ``entwinelib`` script.

    :returns: the process exit code.
    """
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except (InvalidParameters, ExprSyntaxError, UnknownGenerator) as err:
        logger.error("%s", err)
        return EXIT_USAGE
    except EntwineError as err:
        logger.error("%s", err)
        return EXIT_FAIL
