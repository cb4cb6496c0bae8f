# Copyright 2022 CodeNotary, Inc. All rights reserved.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#       http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import io
import json
import logging

import pytest

from kasami import cli, constants
from kasami.code import spectrum
from kasami.datatypes import DcSpectrum


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), stdout=out)
    return code, out.getvalue()


class TestSpectrum:

    def test_both(self):
        code, out = run("spectrum", "--m", "4", "--n", "2", "--d", "1", "--k", "1", "--method", "both",
                        "--format", "json")
        assert code == constants.EXIT_OK
        record = json.loads(out)
        assert {x["dc"]: x["count"] for x in record["spectrum"]} == {3: "30", -5: "18", -1: "15"}
        assert record["method"] == "both"

    def test_invalid_tower(self, capsys):
        code, out = run("spectrum", "--m", "6", "--n", "3", "--d", "2", "--k", "1")
        assert code == constants.EXIT_USAGE
        assert out == ""
        assert "gcd(n,d) != gcd(m,d)" in capsys.readouterr().err

    def test_formula_nontrivial_e(self):
        code, out = run("spectrum", "--m", "12", "--n", "6", "--d", "2", "--k", "1", "--method", "formula",
                        "--format", "json")
        assert code == constants.EXIT_OK
        record = json.loads(out)
        assert record["params"]["e"] == 2
        assert record["beta"] == [{"rank": 6, "count": "63"}]

    def test_formula_logs_estimate(self, caplog):
        caplog.set_level(logging.INFO, logger="kasami.handler.spectrum")
        code, out = run("spectrum", "--m", "4", "--n", "2", "--d", "1", "--k", "2", "--method", "formula",
                        "--format", "json")
        assert code == constants.EXIT_OK
        assert {x["dc"]: x["count"] for x in json.loads(out)["spectrum"]}[-1] == "435"
        messages = [r.getMessage() for r in caplog.records if r.name == "kasami.handler.spectrum"]
        assert any(m.startswith("balanced count 435, asymptotic estimate") for m in messages)

    def test_budget(self):
        code, _ = run("spectrum", "--m", "12", "--n", "6", "--d", "1", "--k", "6", "--method", "enumerate")
        assert code == constants.EXIT_BUDGET

    def test_mismatch(self, monkeypatch, capsys):
        real = spectrum.dc_spectrum_formula

        def skewed(p):
            dc = real(p)
            alpha = dict(dc.alpha)
            alpha[(4, 1)] += 1
            return DcSpectrum(m=dc.m, e=dc.e, alpha=alpha, balanced=dc.balanced - 1)

        monkeypatch.setattr(spectrum, "dc_spectrum_formula", skewed)
        code, out = run("spectrum", "--m", "4", "--n", "2", "--d", "1", "--k", "1", "--method", "both")
        assert code == constants.EXIT_MISMATCH
        assert out == ""
        assert "dc 3: 31 != 30" in capsys.readouterr().err

    def test_output_file(self, tmp_path):
        target = tmp_path / "spectrum.csv"
        code, out = run("spectrum", "--m", "4", "--n", "2", "--d", "1", "--k", "2", "--format", "csv",
                        "--output", str(target))
        assert code == constants.EXIT_OK
        assert out == ""
        assert target.read_text().startswith(",".join(["method", "m", "n", "d", "e", "k"]))


class TestOtherCommands:

    def test_solutions(self):
        code, out = run("solutions", "--m", "6", "--n", "3", "--d", "1", "--s", "2", "--u", "2",
                        "--method", "both", "--format", "json")
        assert code == constants.EXIT_OK
        assert [r["count"] for r in json.loads(out)] == ["59536", "59536"]

    def test_solutions_below_proven_range(self):
        code, out = run("solutions", "--m", "4", "--n", "2", "--d", "1", "--s", "0", "--u", "1", "--format", "json")
        assert code == constants.EXIT_OK
        rows = json.loads(out)
        assert len(rows) == 1 and rows[0]["scope"] == "empirical"

    def test_identities(self):
        code, out = run("identities", "--theorem", "prodform", "--q", "2", "--i", "2")
        assert code == constants.EXIT_OK
        assert "LHS 15 = RHS 15" in out

    @pytest.mark.parametrize("argv", [
        ["--theorem", "mobius", "--u", "4", "--v", "1", "--q", "3"],
        ["--theorem", "vandermonde", "--u", "5", "--q", "4", "--seed", "3"],
        ["--theorem", "twovsone", "--u", "5", "--i", "2", "--q", "2"],
        ["--theorem", "qbinomial", "--i", "5", "--q", "2", "--t", "3"],
        ["--theorem", "recursion", "--m", "6", "--n", "3", "--d", "1", "--u", "2"],
        ["--theorem", "recursion", "--m", "4", "--n", "2", "--d", "1", "--u", "1", "--method", "enumerate"],
        ["--theorem", "expansion", "--m", "8", "--n", "4", "--d", "2", "--i", "3"],
        ["--theorem", "moment", "--m", "6", "--n", "3", "--d", "1", "--v", "2"],
    ])
    def test_every_theorem_holds(self, argv):
        code, out = run("identities", *argv, "--format", "json")
        assert code == constants.EXIT_OK
        assert all(r["holds"] for r in json.loads(out))

    def test_identities_missing_flag(self, capsys):
        code, _ = run("identities", "--theorem", "twovsone", "--q", "2")
        assert code == constants.EXIT_USAGE
        assert "--u --i" in capsys.readouterr().err

    def test_sequence(self):
        code, out = run("sequence", "--m", "4", "--decimation", "5")
        assert code == constants.EXIT_OK
        bits, period = out.splitlines()
        assert len(bits) == 15 and "1" in bits
        assert period == "period 3"
        code, out = run("sequence", "--m", "4", "--decimation", "5", "--phase", "0")
        assert out.splitlines() == ["0" * 15, "period 1"]

    def test_bad_choice(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["spectrum", "--method", "guess"])
        assert exc.value.code == constants.EXIT_USAGE

    def test_workers_from_env(self, monkeypatch):
        monkeypatch.setenv(constants.WORKERS_ENV, "0")
        code, _ = run("identities", "--theorem", "prodform", "--q", "2", "--i", "2")
        assert code == constants.EXIT_USAGE
        monkeypatch.setenv(constants.WORKERS_ENV, "two")
        code, _ = run("identities", "--theorem", "prodform", "--q", "2", "--i", "2")
        assert code == constants.EXIT_USAGE


class TestVerify:

    def test_identities_suite(self):
        code, out = run("verify", "--suite", "identities", "--seed", "7")
        assert code == constants.EXIT_OK
        assert out.endswith("checks passed\n")
        assert "FAIL" not in out

    def test_deterministic(self):
        first = run("verify", "--suite", "sequences", "--format", "json")
        second = run("verify", "--suite", "sequences", "--format", "json")
        assert first == second
        assert json.loads(first[1])["passed"]

    @pytest.mark.slow
    def test_all_independent_of_workers(self):
        single = run("verify", "--suite", "all", "--worker-count", "1")
        parallel = run("verify", "--suite", "all", "--worker-count", "4")
        assert single[0] == constants.EXIT_OK
        assert single == parallel


def test_package_leaves_entry_point_to_cli():
    import kasami
    assert not hasattr(kasami, "main")
    assert cli.main is not None
