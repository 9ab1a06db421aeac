"""Command line behavior: values, reports, formats, exit codes, determinism."""
import json
from fractions import Fraction as Q

import pytest
from click.testing import CliRunner

import deltafrac.sweeps as sweeps
from deltafrac import GridFunction, ae_frac_diff, report_compare
from deltafrac.cli import main
from deltafrac.sweeps import IdentityEntry


@pytest.fixture()
def runner():
    return CliRunner()


class TestEval:
    def test_falling(self, runner):
        result = runner.invoke(main, ["eval", "falling", "--x", "5", "--y", "2"])
        assert result.exit_code == 0
        assert result.output == "20\n"

    def test_nabla_counterexample(self, runner):
        result = runner.invoke(
            main,
            ["eval", "nabla", "--a", "0", "--p", "1/2", "--alpha", "3/2", "--t-index", "1"],
        )
        assert result.exit_code == 0
        assert result.output == "1/2*G(1/2)^1\n"

    def test_fracsum(self, runner):
        result = runner.invoke(
            main,
            ["eval", "fracsum", "--a", "0", "--nu", "1/2", "--f", "const:1", "--len", "3", "--at", "2"],
        )
        assert result.exit_code == 0
        assert result.output == "15/8\n"

    def test_poch_pole_prints_pole(self, runner):
        result = runner.invoke(main, ["eval", "poch", "--x", "3/2", "--y", "-3/2"])
        assert result.exit_code == 0
        assert result.output == "pole\n"

    def test_binom(self, runner):
        result = runner.invoke(main, ["eval", "binom", "--alpha", "-1/2", "--n", "2"])
        assert result.output == "3/8\n"

    def test_hyp3f2_json(self, runner):
        result = runner.invoke(
            main,
            ["eval", "hyp3f2", "--a1", "1/2", "--a2", "1/2", "--m", "1",
             "--b1", "2", "--b2", "-1", "--z", "1", "--format", "json"],
        )
        doc = json.loads(result.output)
        assert doc == {"subject": "hyp3f2", "value": "9/8", "float": 1.125}

    def test_domain_error_exits_2(self, runner):
        result = runner.invoke(
            main, ["eval", "fracsum", "--nu", "-1", "--f", "const:1", "--len", "3"]
        )
        assert result.exit_code == 2
        assert "nu must not be a nonpositive integer" in result.output

    def test_missing_flag_exits_2(self, runner):
        result = runner.invoke(main, ["eval", "falling", "--x", "5"])
        assert result.exit_code == 2
        assert "--y" in result.output

    def test_bad_rational_exits_2(self, runner):
        result = runner.invoke(main, ["eval", "falling", "--x", "0.5", "--y", "2"])
        assert result.exit_code == 2

    def test_bad_window_spec_exits_2(self, runner):
        result = runner.invoke(
            main, ["eval", "fracsum", "--nu", "1/2", "--f", "wave:1", "--len", "3"]
        )
        assert result.exit_code == 2
        assert "grid spec" in result.output

    def test_at_out_of_window_exits_2(self, runner):
        result = runner.invoke(
            main, ["eval", "fracsum", "--nu", "1/2", "--f", "const:1", "--len", "3", "--at", "7"]
        )
        assert result.exit_code == 2
        assert "outside the output window" in result.output

    def test_table_window_spec(self, runner):
        # f(k) = k^2 given as an explicit table; half difference at the first
        # output point: delta of the half-sum partial sums 0, 1 -> 1
        result = runner.invoke(
            main, ["eval", "aediff", "--mu", "1/2", "--f", "table:0,1,4,9", "--at", "0"]
        )
        assert result.exit_code == 0
        assert result.output == "1\n"


class TestVerify:
    def test_saalschutz_point(self, runner):
        result = runner.invoke(
            main, ["verify", "saalschutz", "--pa", "1/2", "--pb", "1/2", "--pc", "2", "--m", "1"]
        )
        assert result.exit_code == 0
        lines = result.output.strip().splitlines()
        assert lines[0].startswith("[exact] saalschutz")
        assert "lhs=9/8" in lines[0]

    def test_power_rule_report_count(self, runner):
        result = runner.invoke(
            main,
            ["verify", "power-rule", "--a", "0", "--mu", "1/2", "--nu", "1/2", "--n-max", "8", "--format", "json"],
        )
        assert result.exit_code == 0
        docs = [json.loads(line) for line in result.stdout.strip().splitlines()]
        assert len(docs) == 9
        assert all(d["status"] == "exact" for d in docs)
        assert docs[0]["params"]["N"] == "0"
        assert "9 exact" in result.stderr

    def test_csv_format(self, runner):
        result = runner.invoke(
            main, ["verify", "bridge", "--t", "1/2", "--alpha", "5/2", "--format", "csv"]
        )
        lines = result.output.strip().splitlines()
        assert lines[0] == "identity,status,params,lhs,rhs,abs_float_gap,excluded_by"
        assert lines[1].startswith("bridge,exact,t=1/2;alpha=5/2,")

    def test_unknown_identity_exits_2(self, runner):
        result = runner.invoke(main, ["verify", "nosuch"])
        assert result.exit_code == 2
        assert "unknown identity" in result.output

    def test_unknown_flag_for_identity_exits_2(self, runner):
        result = runner.invoke(main, ["verify", "bridge", "--x", "3"])
        assert result.exit_code == 2
        assert "unknown parameters" in result.output

    def test_flag_conflict_exits_2(self, runner):
        result = runner.invoke(
            main, ["verify", "saalschutz", "--a", "1/2", "--pa", "1/2"]
        )
        assert result.exit_code == 2

    def test_all_rejects_parameter_flags(self, runner):
        result = runner.invoke(main, ["verify", "all", "--mu", "1/2"])
        assert result.exit_code == 2

    def test_config_runs_suite(self, runner, tmp_path):
        config = tmp_path / "sweeps.json"
        config.write_text(
            json.dumps(
                {
                    "suite": [
                        {"identity": "bridge", "sweep": {"t": ["1/2"], "alpha": ["1/3"]}},
                        {"identity": "saalschutz",
                         "fixed": {"a": "1/3", "b": "1/5", "c": "7/4"}, "m_max": 2},
                    ]
                }
            )
        )
        result = runner.invoke(main, ["verify", "all", "--config", str(config), "--format", "json"])
        assert result.exit_code == 0
        docs = [json.loads(line) for line in result.stdout.strip().splitlines()]
        assert [d["identity"] for d in docs] == ["bridge"] + ["saalschutz"] * 3

    def test_config_with_flags_exits_2(self, runner, tmp_path):
        config = tmp_path / "sweeps.json"
        config.write_text(json.dumps({"identity": "bridge"}))
        result = runner.invoke(
            main, ["verify", "all", "--config", str(config), "--seed", "3"]
        )
        assert result.exit_code == 2

    def test_bad_config_exits_2(self, runner, tmp_path):
        config = tmp_path / "bad.json"
        config.write_text("{not json")
        result = runner.invoke(main, ["verify", "all", "--config", str(config)])
        assert result.exit_code == 2
        assert "bad config" in result.output

    def test_missing_config_exits_2(self, runner):
        result = runner.invoke(main, ["verify", "all", "--config", "/nonexistent.json"])
        assert result.exit_code == 2

    def test_domain_error_exits_2(self, runner):
        result = runner.invoke(
            main, ["verify", "gamma-sum", "--mu", "1/2", "--nu", "-1/2"]
        )
        assert result.exit_code == 2

    def test_force_reaches_excluded_points(self, runner):
        result = runner.invoke(
            main,
            ["verify", "saalschutz", "--pa", "1/2", "--pb", "1/2", "--pc", "3/2", "--m", "1", "--force"],
        )
        assert result.exit_code in (0, 1)
        assert "saalschutz" in result.output

    def test_deterministic_output(self, runner):
        args = ["verify", "leibniz", "--count", "3", "--format", "json"]
        one = runner.invoke(main, args)
        two = runner.invoke(main, args)
        assert one.output == two.output

    def test_failure_exit_code_via_synthetic_identity(self, runner, monkeypatch):
        def run_rigged(ov):
            yield report_compare("rigged", {"k": 1}, 1, 2)

        monkeypatch.setitem(
            sweeps.REGISTRY, "rigged", IdentityEntry("rigged", frozenset(), run_rigged)
        )
        monkeypatch.setattr(sweeps, "SUITE_ORDER", ["rigged"])
        result = runner.invoke(main, ["verify", "rigged"])
        assert result.exit_code == 1
        assert "[mismatch] rigged" in result.output

    def test_float_only_also_fails(self, runner, monkeypatch):
        def run_rigged(ov):
            yield report_compare("rigged", {}, 1, Q(10**30 + 1, 10**30))

        monkeypatch.setitem(
            sweeps.REGISTRY, "rigged", IdentityEntry("rigged", frozenset(), run_rigged)
        )
        monkeypatch.setattr(sweeps, "SUITE_ORDER", ["rigged"])
        result = runner.invoke(main, ["verify", "rigged"])
        assert result.exit_code == 1
        assert "[float_only]" in result.output


class TestTable:
    def test_fracsum_rows(self, runner):
        result = runner.invoke(
            main, ["table", "fracsum", "--a", "0", "--nu", "1/2", "--f", "const:1", "--len", "4"]
        )
        assert result.output.splitlines() == [
            "point,value",
            "1/2,1",
            "3/2,3/2",
            "5/2,15/8",
            "7/2,35/16",
        ]

    def test_fallpow_rows(self, runner):
        result = runner.invoke(main, ["table", "fallpow", "--a", "0", "--mu", "1", "--len", "3"])
        assert result.output.splitlines() == ["point,value", "1,1", "2,2", "3,3"]

    def test_json_round_trip(self, runner):
        result = runner.invoke(
            main,
            ["table", "aediff", "--a", "0", "--mu", "3/2", "--f", "kpow:1", "--len", "6", "--format", "json"],
        )
        gf = GridFunction.from_json_dict(json.loads(result.output))
        f = GridFunction(0, [Q(k) for k in range(6)])
        assert gf == ae_frac_diff(f, Q(3, 2))

    def test_missing_order_exits_2(self, runner):
        result = runner.invoke(main, ["table", "fracsum", "--len", "3"])
        assert result.exit_code == 2

    def test_window_too_short_exits_2(self, runner):
        result = runner.invoke(
            main, ["table", "aediff", "--mu", "5/2", "--f", "const:1", "--len", "2"]
        )
        assert result.exit_code == 2
