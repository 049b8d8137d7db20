import json
import os
import shutil
import tempfile
import unittest
import warnings

from six import StringIO

from entwinelib.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, RunConfig, main, parse_expr, run_suite
from entwinelib.entwine import InstanceParams
from entwinelib.exceptions import ExprSyntaxError, InvalidParameters, UnknownGenerator
from entwinelib.instances import hyperboloid_generators, make_eq2
from entwinelib.kernel import Q, GroupLike, SampleSpec, Vect


SMALL = ["--samples", "4", "--max-degree", "1", "--p-min", "-1", "--p-max", "1", "--support-size", "2"]


def run(argv):
    out = StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


class ParseCase(unittest.TestCase):
    def setUp(self):
        self.params = InstanceParams()
        self.E, _, self.D = make_eq2(self.params)
        self.P = self.E.P

    def parse(self, src):
        return parse_expr(src, self.P, self.params)

    def test_generators(self):
        v, n = self.P.generator("v"), self.P.generator("n")
        self.assertEqual(self.parse("n*v"), self.P.mul(n, v))
        self.assertEqual(self.parse("v^-2*v^2"), self.P.one())
        self.assertEqual(self.parse("2*q*v - v"), v.scale(2 * Q - 1))
        self.assertEqual(self.parse("(v + n)*vi"), self.P.one() + self.P.mul(n, self.P.generator("vi")))

    def test_hyperboloid(self):
        z, zb = hyperboloid_generators(self.P, self.params)
        lhs = self.parse("z*zb - q^2*zb*z")
        self.assertEqual(lhs, self.P.one().scale(1 - Q ** 2))
        self.assertEqual(self.parse("z"), z)

    def test_tensor_terms(self):
        a = self.parse("1 # c_1")
        self.assertEqual(a, self.P.one().tensor(Vect.basis(GroupLike(1))))
        b = self.parse("z # c_0 + 3 # c_-1")
        self.assertEqual(len(b.support()), len(self.parse("z").support()) + 1)
        product = self.D.mul(a, self.parse("z # c_0"))
        expected = self.parse("(1 - q^2) # c_2 + q^2*z # c_1")
        self.assertEqual(product, expected)

    def test_errors(self):
        self.assertRaises(ExprSyntaxError, self.parse, "v +")
        self.assertRaises(ExprSyntaxError, self.parse, "(v")
        self.assertRaises(ExprSyntaxError, self.parse, "n^-1")
        self.assertRaises(ExprSyntaxError, self.parse, "v # c_0 + v")
        self.assertRaises(UnknownGenerator, self.parse, "w")
        with self.assertRaises(ExprSyntaxError) as ctx:
            self.parse("v * * n")
        self.assertEqual(ctx.exception.position, 4)


class CommandCase(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp)

    def test_list_instances(self):
        code, text = run(["list-instances"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("eq2:", text)
        self.assertIn("bialgebra-toy (N=2):", text)

    def test_eval(self):
        code, text = run(["eval", "eq2", "n*v"])
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text, "q^-2 * v*n\n")
        code, text = run(["eval", "eq2", "--q", "2", "n*v"])
        self.assertEqual(text, "1/4 * v*n\n")

    def test_eval_errors(self):
        self.assertEqual(run(["eval", "eq2", "w"])[0], EXIT_USAGE)
        self.assertEqual(run(["eval", "eq2", "v +"])[0], EXIT_USAGE)
        self.assertEqual(run(["eval", "bialgebra-toy", "v"])[0], EXIT_USAGE)

    def test_cross_mul(self):
        code, text = run(["cross-mul", "eq2", "1 # c_1", "z # c_0"])
        self.assertEqual(code, EXIT_OK)
        self.assertIn("c_2", text)
        code, _ = run(["cross-mul", "eq2", "v # c_0", "1 # c_0"])
        self.assertEqual(code, EXIT_FAIL)

    def test_check_json(self):
        path = os.path.join(self.tmp, "report.json")
        argv = ["check", "bialgebra-toy", "--suites", "coalgebra,entwining,crossed,cleft", "--json", path]
        code, text = run(argv + SMALL)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(text, "")
        with open(path) as fh:
            report = json.load(fh)
        self.assertEqual(
            sorted(report), ["checks", "instance", "params", "seed", "version", "wallTimeMs"]
        )
        self.assertEqual(report["instance"], "bialgebra-toy")
        self.assertEqual(report["params"], {"N": 2})
        self.assertEqual(report["seed"], 0)
        self.assertTrue(all(c["status"] == "pass" for c in report["checks"]))

    def test_check_mutation_fails(self):
        code, text = run(["check", "eq2", "--suites", "crossed", "--mutate", "sigma-q"] + SMALL)
        self.assertEqual(code, EXIT_FAIL)
        report = json.loads(text)
        self.assertEqual(report["params"]["mutate"], "sigma-q")
        self.assertEqual(report["checks"][0]["status"], "fail")
        self.assertIsNotNone(report["checks"][0]["witness"])

    def test_check_psic_skew_fails(self):
        code, text = run(["check", "eq2", "--suites", "crossed", "--mutate", "psic-skew"] + SMALL)
        self.assertEqual(code, EXIT_FAIL)
        self.assertEqual(json.loads(text)["checks"][0]["status"], "fail")

    def test_check_is_deterministic(self):
        argv = ["check", "eq2", "--seed", "42", "--suites", "coalgebra,entwining,crossed"] + SMALL
        dumps = []
        for jobs in ("1", "4", "4"):
            code, text = run(argv + ["--jobs", jobs])
            self.assertEqual(code, EXIT_OK)
            report = json.loads(text)
            report.pop("wallTimeMs")
            dumps.append(json.dumps(report, sort_keys=True))
        self.assertEqual(dumps[0], dumps[1])
        self.assertEqual(dumps[1], dumps[2])

    def test_check_dual_skips(self):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            code, text = run(["check", "dual-flip-toy", "--suites", "crossed,dual", "--jobs", "2"] + SMALL)
        self.assertEqual(code, EXIT_OK)
        statuses = [c["status"] for c in json.loads(text)["checks"]]
        self.assertEqual(statuses[0], "skipped")
        self.assertNotIn("fail", statuses)

    def test_usage_errors(self):
        self.assertEqual(run([])[0], EXIT_USAGE)
        self.assertEqual(run(["check", "eq2", "--suites", "nope"])[0], EXIT_USAGE)
        self.assertEqual(run(["check", "nope"])[0], EXIT_USAGE)
        self.assertEqual(run(["check", "eq2", "--mutate", "nope"])[0], EXIT_USAGE)

    def test_run_config(self):
        self.assertRaises(InvalidParameters, RunConfig, "eq2", jobs=0)
        cfg = RunConfig("bialgebra-toy", spec=SampleSpec(trials=3), suites=["lemma24", "coalgebra"])
        self.assertEqual(cfg.suites, ["coalgebra", "lemma24"])
        report, code = run_suite(cfg)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual([c["id"] for c in report["checks"]], ["coalgebra", "lemma24"])

    def test_gauge_suite_runs_random_gauges(self):
        cfg = RunConfig("bialgebra-toy", spec=SampleSpec(seed=9, trials=10), suites=["gauge"])
        report, code = run_suite(cfg)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual([c["id"] for c in report["checks"]], ["gauge.0", "gauge.random"])


if __name__ == "__main__":
    unittest.main()
