"""
Command-line interface
"""
import json

import pytest

from boolcat.main import cli

pytestmark = pytest.mark.integration

FAST = ["--workers", "1", "--no-cache"]


class TestSort:

    def test_recursive(self, runner):
        result = runner.invoke(cli, ["sort", "3 7 5 2 4 1 6"])
        assert result.exit_code == 0
        assert result.stdout == "3 2 1 4 5 6 7\n"

    def test_machine(self, runner):
        result = runner.invoke(cli, ["sort", "--machine", "2 3 1"])
        assert result.exit_code == 0
        assert result.stdout == "2 1 3\n"

    def test_empty_word(self, runner):
        result = runner.invoke(cli, ["sort"])
        assert result.exit_code == 0
        assert result.stdout == "\n"

    def test_malformed_word(self, runner):
        result = runner.invoke(cli, ["sort", "1 1"])
        assert result.exit_code == 1
        assert "Error" in result.stderr
        assert result.stdout == ""


class TestTrees:

    def test_count_from_recurrence(self, runner):
        result = runner.invoke(cli, ["trees", "count", "--n", "7"])
        assert result.exit_code == 0
        assert result.stdout.strip() == "1064"

    def test_count_by_generation(self, runner):
        result = runner.invoke(cli, ["trees", "count", "--n", "5", "--generate"])
        assert result.stdout.strip() == "72"

    def test_list(self, runner):
        result = runner.invoke(cli, ["trees", "list", "--n", "3"])
        assert result.exit_code == 0
        assert result.stdout.split() == ["llo", "lro", "rlo", "rro", "0oo", "1oo"]

    def test_list_limit(self, runner):
        result = runner.invoke(cli, ["trees", "list", "--n", "11"])
        assert result.exit_code == 1
        assert "limit is 10" in result.stderr

    def test_nonpositive_n(self, runner):
        result = runner.invoke(cli, ["trees", "count", "--n", "0"])
        assert result.exit_code == 1


class TestPreimage:

    def test_brute_count(self, runner):
        result = runner.invoke(cli, ["preimage", "count", "--n", "4", "--class", "231,312", *FAST])
        assert result.exit_code == 0
        assert result.stdout.strip() == "20"

    def test_unimodal_image_count(self, runner):
        result = runner.invoke(cli, ["preimage", "count", "--n", "2", "--class", "132,231", *FAST])
        assert result.stdout.strip() == "2"

    def test_constructive_count(self, runner):
        result = runner.invoke(
            cli, ["preimage", "count", "--n", "7", "--class", "132,312", "--method", "constructive", *FAST]
        )
        assert result.exit_code == 0
        assert result.stdout.strip() == "1064"

    def test_recurrence_count_is_labelled(self, runner):
        result = runner.invoke(
            cli, ["preimage", "count", "--n", "7", "--class", "132,312", "--method", "recurrence"]
        )
        assert result.exit_code == 0
        assert result.stdout.strip() == "1064 (recurrence; valid for 132,231 / 132,312 / 231,312)"

    def test_recurrence_refuses_other_classes(self, runner):
        result = runner.invoke(
            cli, ["preimage", "count", "--n", "4", "--class", "21", "--method", "recurrence"]
        )
        assert result.exit_code == 1

    def test_list_brute(self, runner):
        result = runner.invoke(cli, ["preimage", "list", "--n", "3", "--class", "21", *FAST])
        assert result.exit_code == 0
        assert result.stdout.splitlines() == ["1 2 3", "1 3 2", "2 1 3", "3 1 2", "3 2 1"]

    def test_list_constructive(self, runner):
        result = runner.invoke(
            cli, ["preimage", "list", "--n", "3", "--class", "231,312", "--method", "constructive", *FAST]
        )
        assert sorted(result.stdout.splitlines()) == ["1 2 3", "1 3 2", "2 1 3", "2 3 1", "3 1 2", "3 2 1"]

    def test_bad_class(self, runner):
        result = runner.invoke(cli, ["preimage", "count", "--n", "3", "--class", "13a", *FAST])
        assert result.exit_code == 1
        assert "invalid arguments" in result.stderr

    def test_constructive_unsupported_class(self, runner):
        result = runner.invoke(
            cli, ["preimage", "count", "--n", "3", "--class", "132,231", "--method", "constructive", *FAST]
        )
        assert result.exit_code == 1
        assert "no constructive generator" in result.stderr

    def test_count_limit(self, runner):
        result = runner.invoke(cli, ["preimage", "count", "--n", "12", "--class", "21", *FAST])
        assert result.exit_code == 1
        assert "override" in result.stderr

    def test_list_limit(self, runner):
        result = runner.invoke(cli, ["preimage", "list", "--n", "11", "--class", "21", *FAST])
        assert result.exit_code == 1

    def test_constructive_count_limit(self, runner):
        result = runner.invoke(
            cli, ["preimage", "count", "--n", "20", "--class", "132,312", "--method", "constructive", *FAST]
        )
        assert result.exit_code == 1
        assert "constructive generation refused for n=20" in result.stderr
        assert result.stdout == ""

    def test_cache_hit_matches_fresh_count(self, runner, cache_file):
        args = ["preimage", "count", "--n", "6", "--class", "132,312", "--workers", "1", "--cache", str(cache_file)]
        first = runner.invoke(cli, args)
        assert cache_file.exists()
        second = runner.invoke(cli, args)
        assert first.stdout == second.stdout == "272\n"


class TestVerify:

    def test_table(self, runner):
        result = runner.invoke(cli, ["verify", "--max-n", "3", "--no-timing", *FAST])
        assert result.exit_code == 0
        assert "ALL ROWS PASS" in result.stdout

    def test_json(self, runner):
        result = runner.invoke(cli, ["verify", "--max-n", "3", "--format", "json", *FAST])
        assert result.exit_code == 0
        decoded = json.loads(result.stdout)
        assert decoded["overall"] == "pass"
        assert [row["a_n"] for row in decoded["rows"]] == ["1", "2", "6"]

    def test_csv(self, runner):
        result = runner.invoke(cli, ["verify", "--max-n", "2", "--format", "csv", "--no-timing", *FAST])
        assert result.exit_code == 0
        assert result.stdout.startswith("n,a_n,catalan_n,power2_n,")

    def test_check_sets(self, runner):
        result = runner.invoke(cli, ["verify", "--max-n", "4", "--check-sets", *FAST])
        assert result.exit_code == 0

    def test_tampered_cache_exits_nonzero(self, runner, cache_file):
        args = ["verify", "--max-n", "3", "--workers", "1", "--cache", str(cache_file)]
        assert runner.invoke(cli, args).exit_code == 0
        data = json.loads(cache_file.read_text())
        data["counts"]["231,312|3|brute"] = "7"
        cache_file.write_text(json.dumps(data))

        result = runner.invoke(cli, args)
        assert result.exit_code == 1
        assert "brute:231,312: 7 != 6" in result.stdout
        assert "VERIFICATION FAILED" in result.stdout

    def test_limit(self, runner):
        result = runner.invoke(cli, ["verify", "--max-n", "12", *FAST])
        assert result.exit_code == 1

    def test_zero_max_n(self, runner):
        result = runner.invoke(cli, ["verify", "--max-n", "0", *FAST])
        assert result.exit_code == 1


class TestSeries:

    def test_inside_interval(self, runner):
        result = runner.invoke(cli, ["series", "--z", "0.1", "--n", "7"])
        assert result.exit_code == 0
        lines = dict(line.split(None, 1) for line in result.stdout.splitlines())
        assert lines["N"] == "7"
        assert float(lines["closed_form"]) == pytest.approx(0.12917130661, rel=1e-9)
        assert float(lines["partial_sum"]) == pytest.approx(0.1290984)
        assert float(lines["residual"]) < 1e-12

    @pytest.mark.parametrize("z", ["0.3", "0", "-0.05", "0.25"])
    def test_outside_interval(self, runner, z):
        result = runner.invoke(cli, ["series", f"--z={z}"])
        assert result.exit_code == 1
        assert "0.2071" in result.stderr


class TestSequence:

    def test_csv(self, runner):
        result = runner.invoke(cli, ["sequence", "--n", "4"])
        assert result.exit_code == 0
        assert result.stdout == "n,value\n0,0\n1,1\n2,2\n3,6\n4,20\n"

    def test_json(self, runner):
        result = runner.invoke(cli, ["sequence", "--kind", "catalan", "--n", "5", "--format", "json"])
        assert json.loads(result.stdout) == ["1", "1", "2", "5", "14", "42"]

    def test_power2(self, runner):
        result = runner.invoke(cli, ["sequence", "--kind", "power2", "--n", "3"])
        assert result.stdout.splitlines()[1:] == ["0,1", "1,1", "2,2", "3,4"]


def test_version(runner):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "boolcat" in result.stdout
