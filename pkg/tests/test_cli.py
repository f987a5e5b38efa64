"""End-to-end runs of the command-line tool in a subprocess.

Checks the documented exit-code contract (0 ok / 1 usage / 2 domain /
3 counterexample), that JSON output parses and round-trips through the
owning classes, and that repeated runs are byte-identical.
"""

import json
import subprocess
import sys

from grassalg.complexes import ComplexValue
from grassalg.exterior import GrassmannElement, theta
from grassalg.moyal import MultiPoly, StarKernel
from grassalg.star import OddFunctionSpec


def run(*args):
    return subprocess.run([sys.executable, "-m", "grassalg", *args],
                          capture_output=True, text=True)


def run_json(*args):
    proc = run(*args)
    assert proc.returncode == 0, proc.stderr
    return json.loads(proc.stdout)


def zc(a, b=0):
    return ComplexValue(float(a), float(b))


class TestHappyPaths:
    def test_check_anticommute_exterior(self):
        data = run_json("check-anticommute", "--grid", "3", "--samples", "20")
        assert data["ok"] is True
        assert data["failures"] == 0
        assert data["checks"] == 9 + 3 * 20
        assert data["seed"] == 1729

    def test_check_anticommute_star(self):
        data = run_json("check-anticommute", "--mode", "star", "--F", "sin:3",
                        "--samples", "50")
        assert data["ok"] is True
        # oddness of F makes the label products antisymmetric bitwise
        assert data["worst_deviation"] == 0.0
        assert OddFunctionSpec.from_dict(data["function"]).kind == "sine_series"

    def test_rep_verify(self):
        data = run_json("rep-verify", "--samples", "200")
        assert data["ok"] is True
        assert data["integer_phase"]["ring_laws_exact"] is True
        assert data["integer_phase"]["matrix_map"]["worst_deviation"] == 0.0
        assert data["float_phase"]["field_axioms"]["failures"] == 0

    def test_lemma_check_small_grid(self):
        data = run_json("lemma-check", "--grid", "2")
        assert data["pairs_checked"] == 256
        assert data["classes"] == {"anticommuting": 48, "non_anticommuting": 208}
        assert data["counterexamples"] == []

    def test_star_eval(self):
        data = run_json("star-eval", "--F", "cube", "--points", "2,1")
        assert data["table"][0][1] == {"re": 1.0, "im": 0.0}
        assert data["table"][1][0] == {"re": -1.0, "im": 0.0}
        assert data["table"][0][0] == {"re": 0.0, "im": 0.0}
        assert [ComplexValue.from_dict(p) for p in data["points"]] == [zc(2), zc(1)]

    def test_omega_table(self):
        data = run_json("omega-table", "--points", "0,1")
        assert data["entries"][0][1] == {"re": 0.0, "im": 2.0}
        assert data["entries"][1][0] == {"re": 0.0, "im": -2.0}

    def test_moyal_expand(self):
        data = run_json("moyal-expand", "--f", "x1", "--g", "x2", "--points", "0,1")
        product = MultiPoly.from_dict(data["star_product"])
        x1, x2 = MultiPoly.variable(1, 2), MultiPoly.variable(2, 2)
        assert product == x1 * x2 - 1
        kernel = StarKernel.from_dict(data["kernel"])
        assert kernel[1, 2] == zc(-1)

    def test_eval_exterior(self):
        data = run_json("eval", "theta_1 . theta_2 + theta_2 . theta_1")
        assert data["type"] == "grassmann"
        assert GrassmannElement.from_dict(data["value"]).is_zero()

    def test_eval_star(self):
        data = run_json("eval", "theta_1 * theta_2", "--mode", "star", "--F", "cube",
                        "--label", "theta_1=2", "--label", "theta_2=1")
        assert data == {"type": "complex", "value": {"re": 1.0, "im": 0.0}}

    def test_eval_matrix(self):
        data = run_json("eval", "[[1,-2],[2,1]] . [[1,2],[3,4]]")
        assert data["type"] == "matrix"
        assert data["value"] == {"m": [[-5.0, -6.0], [5.0, 8.0]]}

    def test_eval_reports_grassmann_value(self):
        data = run_json("eval", "2 . theta_1 + theta_1 . theta_2")
        got = GrassmannElement.from_dict(data["value"])
        assert got == theta(1) * 2 + theta(1) * theta(2)

    def test_text_format(self):
        proc = run("lemma-check", "--grid", "1", "--format", "text")
        assert proc.returncode == 0
        assert "status: ok" in proc.stdout
        assert "pairs checked: 16" in proc.stdout

    def test_seed_is_recorded(self):
        data = run_json("check-anticommute", "--grid", "2", "--samples", "5",
                        "--seed", "7")
        assert data["seed"] == 7


class TestDeterminism:
    CASES = [
        ("check-anticommute", "--grid", "3", "--samples", "25"),
        ("check-anticommute", "--mode", "star", "--F", "poly:1,0.5", "--samples", "25"),
        ("rep-verify", "--samples", "50"),
        ("lemma-check", "--grid", "2"),
        ("star-eval", "--F", "sin:4", "--points", "1+1i,0,2-1i"),
        ("omega-table", "--F", "cube", "--points", "1+1i,1-1i"),
        ("moyal-expand", "--f", "x1^2 + x2", "--g", "x1 . x2", "--points", "0,1"),
        ("eval", "theta_1 . theta_2", "--mode", "exterior"),
    ]

    def test_repeated_runs_are_byte_identical(self):
        for case in self.CASES:
            first = run(*case)
            second = run(*case)
            assert first.returncode == second.returncode == 0, (case, first.stderr)
            assert first.stdout == second.stdout, case
            assert first.stderr == second.stderr == ""


class TestExitCodes:
    def assert_fails(self, code, *args):
        proc = run(*args)
        assert proc.returncode == code, (proc.returncode, proc.stderr)
        assert proc.stdout == ""
        assert proc.stderr
        return proc.stderr

    def test_parse_errors_exit_1(self):
        self.assert_fails(1, "eval", "theta_0")
        self.assert_fails(1, "eval", "1 +")
        self.assert_fails(1, "eval", "x1")

    def test_unbound_label_exits_1(self):
        self.assert_fails(1, "eval", "theta_1 * theta_2", "--mode", "star",
                          "--label", "theta_1=0")

    def test_usage_errors_exit_1(self):
        self.assert_fails(1, "no-such-subcommand")
        self.assert_fails(1, "star-eval")  # missing --points
        self.assert_fails(1, "star-eval", "--points", "1,,2")
        self.assert_fails(1, "star-eval", "--points", "1", "--F", "tanh")
        self.assert_fails(1, "eval", "theta_1", "--label", "q=3")
        self.assert_fails(1, "check-anticommute", "--samples", "0")
        self.assert_fails(1, "lemma-check", "--tolerance", "-1")

    def test_domain_errors_exit_2(self):
        self.assert_fails(2, "eval", "theta_1 * theta_2")  # star glyph, exterior mode
        self.assert_fails(2, "eval", "theta_1 + theta_2", "--mode", "star",
                          "--label", "theta_1=0", "--label", "theta_2=1")
        self.assert_fails(2, "moyal-expand", "--f", "x3", "--g", "x1",
                          "--points", "0,1")

    def test_found_counterexample_exits_3(self):
        # at zero tolerance the float-phase inverse round-trips cannot all
        # land exactly, so the verifier must report a counterexample
        proc = run("rep-verify", "--samples", "200", "--tolerance", "0")
        assert proc.returncode == 3, proc.stderr
        data = json.loads(proc.stdout)
        assert data["ok"] is False
        assert data["float_phase"]["field_axioms"]["failures"] > 0
        # the ring laws and the matrix map stay exact even then
        assert data["integer_phase"]["ring_laws_exact"] is True


def test_module_entrypoint_matches_script():
    proc = run("lemma-check", "--grid", "1")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["classes"] == {"anticommuting": 8, "non_anticommuting": 8}
