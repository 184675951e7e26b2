"""
Tests for the divgraph command line
"""
import json
import os
from unittest.mock import patch

import pytest
from click.testing import CliRunner

from divgraph.cli import cli, main
from divgraph.cli.checks import CheckContext
from divgraph.cli.selftest import run_selftest
from divgraph.config import DivGraphConfig, reset_global_config, set_global_config
from divgraph.exceptions import SizeGuardError, VerificationError


@pytest.fixture
def runner():
    """Click test runner"""
    return CliRunner()


def invoke(runner, *args):
    """Run a command with logging limited to errors"""
    return runner.invoke(cli, ["--log-level", "ERROR", *args])


class TestInfoCommand:
    """Test `divgraph info`"""

    def test_info_d36(self, runner):
        """Test the structural report of D_36"""
        result = invoke(runner, "info", "--n", "36")

        assert result.exit_code == 0, result.output
        report = json.loads(result.stdout)
        assert report["type"] == [2, 2]
        assert report["v"] == 9
        assert report["e"] == 27
        assert report["clique_number"] == 5
        assert report["independence_number"] == 3
        assert report["chromatic_number"] == 5
        assert report["min_degree"] == 4
        assert report["degree_distribution"] == {"4": 2, "6": 5, "8": 2}
        assert report["planar"] is False
        assert report["connected"] is True

    def test_info_by_type(self, runner):
        """Test --type gives the same report as --n"""
        by_type = invoke(runner, "info", "--type", "1,2")
        by_n = invoke(runner, "info", "--n", "12")
        assert json.loads(by_type.stdout) == json.loads(by_n.stdout)

    def test_n_and_type_are_exclusive(self, runner):
        """Test usage error exit code"""
        result = invoke(runner, "info", "--n", "6", "--type", "1,1")
        assert result.exit_code == 2

    def test_missing_target(self, runner):
        """Test one of --n or --type is required"""
        assert invoke(runner, "info").exit_code == 2

    def test_invalid_n(self, runner):
        """Test n = 0 is invalid input"""
        assert invoke(runner, "info", "--n", "0").exit_code == 2

    def test_invalid_type(self, runner):
        """Test a malformed type"""
        assert invoke(runner, "info", "--type", "a,b").exit_code == 2

    def test_format_option(self, runner):
        """Test --format accepts json and rejects the table-only csv"""
        assert json.loads(invoke(runner, "info", "--n", "6", "--format", "json").stdout)["v"] == 4
        assert invoke(runner, "info", "--n", "6", "--format", "csv").exit_code == 2

    def test_size_guard_exit_code(self, runner):
        """Test a guard refusal exits with 3"""
        set_global_config(DivGraphConfig.for_testing(max_vertices=16))
        result = invoke(runner, "info", "--type", "1,1,1,1,1")
        assert result.exit_code == 3


class TestSpectralCommands:
    """Test `divgraph charpoly` and `divgraph spectrum`"""

    def test_charpoly(self, runner):
        """Test f_6 with decimal-string coefficients"""
        result = invoke(runner, "charpoly", "--type", "1,1")

        assert result.exit_code == 0, result.output
        report = json.loads(result.stdout)
        assert report["charpoly"] == ["0", "-4", "-5", "0", "1"]
        assert report["polynomial"] == "λ^4 - 5λ^2 - 4λ"

    def test_spectrum(self, runner):
        """Test the default eigenvalues on D_30"""
        result = invoke(runner, "spectrum", "--n", "30")

        assert result.exit_code == 0, result.output
        report = json.loads(result.stdout)
        assert report["multiplicities"] == {"-2": 2, "-1": 3, "0": 0, "1": 2}

    def test_spectrum_custom_lambdas(self, runner):
        """Test --lambda and --with-charpoly"""
        result = invoke(runner, "spectrum", "--type", "1", "--lambda", "1,-1", "--with-charpoly")

        report = json.loads(result.stdout)
        assert report["multiplicities"] == {"1": 1, "-1": 1}
        assert report["charpoly"] == ["-1", "0", "1"]

    def test_bad_lambda(self, runner):
        """Test non-integer eigenvalues"""
        assert invoke(runner, "spectrum", "--n", "6", "--lambda", "x").exit_code == 2


class TestVerifyCommand:
    """Test `divgraph verify`"""

    def test_thm_main_on_type(self, runner):
        """Test a passing check exits 0"""
        result = invoke(runner, "verify", "thm-main", "--type", "2")

        assert result.exit_code == 0, result.output
        report = json.loads(result.stdout)
        assert report["check_id"] == "thm-main"
        assert report["passed"] is True
        assert report["results"][0]["lifted_type"] == [1, 1, 2]

    def test_mobius_with_type(self, runner):
        """Test --type is instantiated for the Moebius check"""
        result = invoke(runner, "verify", "mobius", "--type", "1,1,1")

        assert result.exit_code == 0, result.output
        assert json.loads(result.stdout)["results"][0]["vector"] == ["0", "-1", "-1", "-1", "1", "1", "1", "0"]

    def test_tables(self, runner):
        """Test the table check against the known values"""
        result = invoke(runner, "verify", "tables", "--lambda", "0,-2", "--omega-max", "5")
        assert result.exit_code == 0, result.output

    def test_verification_failure(self, runner, mocker):
        """Test a failed verifier exits 1"""
        mocker.patch("divgraph.cli.checks.verify_f_divides", side_effect=VerificationError("boom"))
        result = invoke(runner, "verify", "thm-main", "--type", "1")
        assert result.exit_code == 1

    def test_failed_report_exit_code(self, runner, mocker):
        """Test a report with passed = false exits 1"""
        mocker.patch("divgraph.cli.checks.table_mismatches", return_value=[{"omega": 2}])
        result = invoke(runner, "verify", "tables", "--lambda", "0", "--omega-max", "3")
        assert result.exit_code == 1
        assert json.loads(result.stdout)["passed"] is False

    @pytest.mark.slow
    def test_kernel_pq_defaults(self, runner):
        """Test the default pairs and six-case exponents"""
        result = invoke(runner, "verify", "kernel-pq")

        assert result.exit_code == 0, result.output
        results = json.loads(result.stdout)["results"]
        assert len(results) == 9
        pairs = [(r["u"], r["v"]) for r in results if "u" in r]
        assert pairs == [(1, 1), (1, 7), (7, 7), (7, 13), (13, 13)]
        assert all(r["residual_zero"] for r in results if "u" in r)

    @pytest.mark.slow
    def test_mobius_defaults(self, runner):
        """Test the default run covers omega = 3, 5, 7, 9"""
        result = invoke(runner, "verify", "mobius")

        assert result.exit_code == 0, result.output
        results = json.loads(result.stdout)["results"]
        assert [len(r["vector"]) for r in results] == [8, 32, 128, 512]

    def test_unknown_check(self, runner):
        """Test check ids are validated"""
        assert invoke(runner, "verify", "thm-nine").exit_code == 2

    def test_kernel_pq_needs_two_parts(self, runner):
        """Test invalid input for kernel-pq"""
        assert invoke(runner, "verify", "kernel-pq", "--type", "1").exit_code == 2

    def test_report_to_file(self, runner, tmp_path):
        """Test --out writes the report"""
        out = tmp_path / "minus-one.json"
        result = invoke(runner, "verify", "minus-one", "--type", "2,2", "--out", str(out))

        assert result.exit_code == 0, result.output
        assert json.loads(out.read_text())["passed"] is True


class TestTableCommand:
    """Test `divgraph table`"""

    def test_csv(self, runner):
        """Test the m_0 table as CSV"""
        result = invoke(runner, "table", "--lambda", "0", "--omega-max", "6", "--format", "csv")

        assert result.exit_code == 0, result.output
        assert result.stdout == "omega,m_0\n2,1\n3,0\n4,2\n5,0\n6,5\n"

    def test_json_with_two_eigenvalues(self, runner):
        """Test JSON rows and an empty mismatch list"""
        result = invoke(runner, "table", "--lambda", "-2,1", "--omega-max", "4")

        report = json.loads(result.stdout)
        assert report["eigenvalues"] == [-2, 1]
        assert len(report["rows"]) == 6
        assert report["mismatches"] == []

    def test_guard(self, runner):
        """Test 2^omega_max beyond max_vertices"""
        set_global_config(DivGraphConfig.for_testing(max_vertices=16))
        assert invoke(runner, "table", "--lambda", "0", "--omega-max", "5").exit_code == 3


class TestExportCommand:
    """Test `divgraph export`"""

    def test_dot(self, runner):
        """Test DOT output of D_6 with divisor labels"""
        result = invoke(runner, "export", "--n", "6")

        assert result.exit_code == 0, result.output
        assert result.stdout.startswith('graph "D_(1,1)" {')
        assert '3 [label="6"];' in result.stdout
        assert result.stdout.count(" -- ") == 5

    def test_field_labels(self, runner):
        """Test subfield labels"""
        result = invoke(runner, "export", "--type", "1", "--labels", "field", "--base-prime", "5")
        assert '1 [label="F_{5^2}"];' in result.stdout

    def test_json(self, runner):
        """Test the JSON adjacency"""
        result = invoke(runner, "export", "--type", "1", "--format", "json")

        payload = json.loads(result.stdout)
        assert payload["adjacency"] == [[0, 1], [1, 0]]
        assert payload["vertices"] == [[0], [1]]


class TestSelftest:
    """Test the selftest command and runner"""

    def test_failures_are_recorded(self, runner, mocker):
        """Test a failing check is reported and the command exits 1"""
        def boom(ctx):
            raise VerificationError("boom")

        mocker.patch("divgraph.cli.selftest.SELFTEST_CHECKS",
                     [("ok", lambda ctx: {"passed": True}), ("boom", boom)])
        result = invoke(runner, "selftest", "--seed", "3")

        assert result.exit_code == 1
        report = json.loads(result.stdout)
        assert report["seed"] == 3
        assert [c["passed"] for c in report["checks"]] == [True, False]
        assert report["checks"][1]["detail"]["error"] == "VerificationError"

    def test_guard_refusal_exits_3(self, runner):
        """Test a size guard stops the selftest with exit code 3"""
        reset_global_config()
        with patch.dict(os.environ, {"DIVGRAPH_MAX_VERTICES": "4", "DIVGRAPH_BUILD_MAX_VERTICES": "4"}):
            result = invoke(runner, "selftest")
        assert result.exit_code == 3

    def test_guard_refusal_propagates(self, testing_config, mocker):
        """Test run_selftest records verification failures only"""
        def too_big(ctx):
            raise SizeGuardError("graph", 4096, 1024, "max_vertices")

        mocker.patch("divgraph.cli.selftest.SELFTEST_CHECKS", [("too-big", too_big)])
        with pytest.raises(SizeGuardError):
            run_selftest(testing_config, seed=0)

    @pytest.mark.slow
    def test_full_selftest(self, testing_config):
        """Test every reduced-scale check passes"""
        report = run_selftest(testing_config, seed=testing_config.seed)
        failed = [c.check_id for c in report.checks if not c.passed]
        assert failed == []


class TestMain:
    """Test the console entry point"""

    def test_main_success(self, capsys):
        """Test main returns 0"""
        assert main(["--log-level", "ERROR", "info", "--n", "6"]) == 0
        assert json.loads(capsys.readouterr().out)["e"] == 5

    def test_main_usage_error(self, capsys):
        """Test main maps usage errors to 2"""
        assert main(["--log-level", "ERROR", "info"]) == 2

    def test_main_guard(self, capsys):
        """Test main maps guard refusals to 3"""
        set_global_config(DivGraphConfig.for_testing(max_vertices=4))
        assert main(["--log-level", "ERROR", "info", "--n", "36"]) == 3

    def test_version(self, runner):
        """Test --version"""
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert "1.0.0" in result.output


class TestCheckDefaults:
    """Test the default scale of `divgraph verify`"""

    def test_defaults(self, testing_config):
        """Test the defaults reach the full acceptance ranges"""
        ctx = CheckContext(config=testing_config)
        assert ctx.omega_max == 10
        assert ctx.a_max == 29
        assert ctx.battery_max_vertices == 80
        assert ctx.mobius_omega_max == 9
        assert ctx.minus_one_max_vertices == 1024
        assert ctx.kernel_pairs == ((1, 1), (1, 7), (7, 7), (7, 13), (13, 13))
        assert (ctx.poset_count, ctx.poset_max_size) == (200, 8)
        assert (ctx.squared_poset_count, ctx.squared_poset_max_size) == (50, 6)

    def test_default_guards_fit(self):
        """Test the default configuration admits the largest default inputs"""
        config = DivGraphConfig()
        assert config.charpoly_max_dim >= 4 * 80
        assert config.max_vertices >= 2 ** 10
        assert config.six_case_max_v >= 19
