"""Registry behavior (census, determinism, parallel soundness, isolation)
and the command-line interface."""

import dataclasses
import json

import pytest

from overrank import registry
from overrank.cli import main
from overrank.errors import UnknownIdentity
from overrank.report import IdentityReport


class TestRegistry:
    def test_census(self):
        entries = registry.list_identities()
        assert len(entries) >= 45
        ids = [e.id for e in entries]
        assert ids == sorted(ids)
        assert len(ids) == len(set(ids))
        for expected in ("thm5.R02.d2", "lemma2.1@ell=3", "check7", "g1@a=2,ell=5",
                         "lemma3.3@x=-q^5,z=-q^10,base=25", "bracket@ell=5,m=1"):
            assert expected in ids, expected

    def test_every_entry_has_anchor_and_tier(self):
        for e in registry.list_identities():
            assert e.anchor
            assert e.tier in ("product", "lambert", "oracle", "combination")
            assert e.default_order >= 1

    def test_verify(self):
        report = registry.verify("lemma2.1@ell=3", 100)
        assert report.ok and report.id == "lemma2.1@ell=3"
        assert report.checked_order == 100

    def test_verify_deterministic(self):
        a = registry.verify("thm3.R01.d2", 15)
        b = registry.verify("thm3.R01.d2", 15)
        assert a.to_json_dict(include_runtime=False) == b.to_json_dict(include_runtime=False)

    def test_unknown_identity(self):
        with pytest.raises(UnknownIdentity):
            registry.verify("bogus", 10)

    def test_suite_smoke_scale(self):
        reports = registry.run_suite(order_scale=0.1)
        assert len(reports) == len(registry.list_identities())
        assert all(r.ok for r in reports), [r.id for r in reports if not r.ok]
        ids = [r.id for r in reports]
        assert ids == sorted(ids)

    def test_suite_deterministic_bytes(self):
        a = registry.reports_json(registry.run_suite(order_scale=0.1), stable=True)
        b = registry.reports_json(registry.run_suite(order_scale=0.1), stable=True)
        assert a == b

    def test_parallel_soundness(self):
        serial = registry.reports_json(registry.run_suite(order_scale=0.1), stable=True)
        threaded = registry.reports_json(
            registry.run_suite(order_scale=0.1, parallelism=4), stable=True)
        assert serial == threaded

    def test_corrupted_entry_is_isolated(self, monkeypatch):
        reg = registry._registry()
        victim = "rels@b=1,ell=3"

        def boom(order):
            raise RuntimeError("injected failure")

        monkeypatch.setitem(reg, victim, dataclasses.replace(reg[victim], build=boom))
        reports = {r.id: r for r in registry.run_suite(order_scale=0.1)}
        assert not reports[victim].ok
        assert "injected failure" in reports[victim].notes
        others = [r for i, r in reports.items() if i != victim]
        assert all(r.ok for r in others)

    def test_seed_env_override(self, monkeypatch):
        monkeypatch.setenv("OVERRANK_SEED", "12345")
        report = registry.verify("jtp@sampled", 40)
        assert report.ok
        assert "seed=12345" in report.notes


class TestReportJson:
    def test_schema(self):
        report = registry.verify("rels@b=1,ell=5", 50)
        d = report.to_json_dict()
        assert set(d) == {"id", "pass", "checked_order", "first_mismatch", "runtime_ms", "notes"}
        assert d["pass"] is True and d["first_mismatch"] is None

    def test_mismatch_rendering(self):
        from overrank.report import Mismatch
        r = IdentityReport(id="x", ok=False, checked_order=5,
                           first_mismatch=Mismatch(3, 1, -1))
        d = r.to_json_dict()
        assert d["first_mismatch"] == {"exp": 3, "lhs": "1/1", "rhs": "-1/1"}


class TestCli:
    def test_verify_pass(self, capsys):
        assert main(["verify", "--id", "rels@b=1,ell=3", "--order", "40"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("PASS")

    def test_verify_unknown(self, capsys):
        assert main(["verify", "--id", "nope", "--order", "10"]) == 2

    def test_verify_json(self, capsys):
        assert main(["verify", "--id", "rels@b=1,ell=3", "--order", "30",
                     "--json", "--stable-json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["pass"] is True
        assert payload["runtime_ms"] == 0

    def test_suite_json(self, capsys):
        assert main(["suite", "--order-scale", "0.1", "--json", "--stable-json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert len(payload) == len(registry.list_identities())

    def test_suite_csv(self, capsys):
        assert main(["suite", "--order-scale", "0.1", "--csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].startswith("id,pass,")
        assert len(lines) == len(registry.list_identities()) + 1

    def test_series_pbar(self, capsys):
        assert main(["series", "--name", "pbar", "--order", "5", "--csv"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "exponent,numerator,denominator"
        assert lines[1:] == ["0,1,1", "1,2,1", "2,4,1", "3,8,1", "4,14,1"]

    def test_series_named_forms(self, capsys):
        assert main(["series", "--name", "sbar:1,3", "--order", "6"]) == 0
        assert main(["series", "--name", "nbar:0,3", "--order", "6"]) == 0
        assert main(["series", "--name", "rankdiff-oracle:3.01.1", "--order", "4"]) == 0
        out = capsys.readouterr().out
        assert "0,2,1" in out  # R01(1) starts with constant 2

    def test_series_formula_matches_oracle_output(self, capsys):
        assert main(["series", "--name", "rankdiff-formula:3.01.1", "--order", "4"]) == 0
        formula_out = capsys.readouterr().out
        assert main(["series", "--name", "rankdiff-oracle:3.01.1", "--order", "4"]) == 0
        assert capsys.readouterr().out == formula_out

    def test_series_bad_name(self, capsys):
        assert main(["series", "--name", "wat", "--order", "5"]) == 2
        assert main(["series", "--name", "rankdiff-oracle:whoops", "--order", "5"]) == 2

    def test_count(self, capsys):
        assert main(["count", "--n", "4", "--mod", "3"]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0].split("\t") == ["n", "pbar(n)", "s=0", "s=1", "s=2"]
        assert lines[4].split("\t") == ["3", "8", "4", "2", "2"]
        assert lines[5].split("\t") == ["4", "14", "6", "4", "4"]

    def test_count_cap(self, capsys):
        assert main(["count", "--n", "60", "--mod", "3"]) == 2

    def test_list(self, capsys):
        assert main(["list"]) == 0
        out = capsys.readouterr().out
        assert "thm5.R02.d2" in out
        assert "R02(2) = 0" in out
