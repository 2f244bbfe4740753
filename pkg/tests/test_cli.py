import io
import json
import subprocess
import sys

import pytest

from lrsmash import cli
from lrsmash.cli import run_command
from lrsmash.fileformat import load
from lrsmash.fixtures import sweedler_h4
from lrsmash.linfield import Q


def run(*argv):
    out = io.StringIO()
    code, reports = run_command(list(argv), out)
    return code, out.getvalue(), reports


def test_check_bialgebra_kc2():
    code, text, _ = run("check-bialgebra", "fixtures/kc2")
    assert code == 0 and text.endswith("PASS\n")


def test_biproduct_emits_sweedler_h4(tmp_path):
    out = tmp_path / "out"
    code, _, _ = run("biproduct", "fixtures/sweedler-candidate", "sweedler-candidate", "--emit", str(out))
    assert code == 0
    sf = load(out)
    (name,) = sf.names("bialgebra")
    B, h4 = sf[name], sweedler_h4(Q)
    for role in ("mult", "unit", "comult", "counit"):
        assert getattr(B, role) == getattr(h4, role)


def test_broken_rho_names_condition_and_witness():
    code, text, reports = run("admissible", "fixtures/sweedler-broken-rho")
    assert code == 1 and text.endswith("FAIL\n")
    line = next(l for l in text.splitlines() if "coaction-action-cancellation" in l)
    assert "[FAIL]" in line and "witness=(x, x)" in line
    c = reports[0]["coaction-action-cancellation"]
    assert c.witness.inputs == ("x", "x")


@pytest.mark.parametrize("argv", [
    ("check-bialgebra", "fixtures/sweedler-h4"),
    ("admissible", "fixtures/sweedler-candidate", "--aux"),
    ("radford", "fixtures/sweedler-candidate", "B"),
    ("zhang", "fixtures/zhang-positive"),
    ("double-biproduct", "fixtures/double-input", "double"),
    ("phi-verify", "fixtures/double-input"),
    ("braiding-verify", "fixtures/lr-objects"),
    ("check-lr-object", "fixtures/lr-objects"),
    ("check-morphism", "fixtures/lr-objects"),
    ("antipode", "fixtures/sweedler-h4"),
    ("admissible", "fixtures/char2-primitive"),
    ("check-bialgebra", "fixtures/kc2", "--field", "Fp 5"),
], ids=lambda a: " ".join(a))
def test_passing_commands(argv):
    assert run(*argv)[0] == 0


@pytest.mark.parametrize("argv", [
    ("zhang", "fixtures/zhang-negative"),
    ("double-biproduct", "fixtures/double-input-bad-pairing"),
    ("admissible", "fixtures/broken-left-right-long"),
    ("biproduct", "fixtures/sweedler-broken-rho"),
    ("antipode", "fixtures/monoid"),
], ids=lambda a: " ".join(a))
def test_failing_commands(argv):
    assert run(*argv)[0] == 1


def test_override_builds_unverified_biproduct():
    code, text, _ = run("biproduct", "fixtures/sweedler-broken-rho", "--override")
    assert code == 1 and "comult-multiplicative" in text


@pytest.mark.parametrize("argv", [
    ("check-bialgebra", "no-such-file"),
    ("check-bialgebra", "fixtures/kc2", "no-such-bundle"),
    ("frobnicate", "fixtures/kc2"),
    ("check-bialgebra", "fixtures/kc2", "--field", "Fp 6"),
    ("check-bialgebra",),
], ids=lambda a: " ".join(a))
def test_usage_errors(argv, capsys):
    assert run(*argv)[0] == 2


def test_malformed_file_is_usage_error(tmp_path):
    f = tmp_path / "bad.lrs"
    f.write_text("field Q\nspace V a b\nmap m : V -> W\nend\n")
    assert run("check-bialgebra", str(f))[0] == 2


def test_internal_error_exit_code(monkeypatch, capsys):
    def boom(sf, names, opts):
        raise RuntimeError("boom")
    monkeypatch.setitem(cli.COMMANDS, "check-bialgebra", (boom, ""))
    assert run("check-bialgebra", "fixtures/kc2")[0] == 3
    assert "internal error" in capsys.readouterr().err


def test_reports_are_deterministic(tmp_path):
    texts, docs = [], []
    for i in range(2):
        j = tmp_path / f"r{i}.json"
        texts.append(run("admissible", "fixtures/double-input", "--json", str(j))[1])
        docs.append(j.read_bytes())
    assert texts[0] == texts[1] and docs[0] == docs[1]
    assert json.loads(docs[0])["passed"] is True


def test_worker_pool_merges_in_order(monkeypatch):
    argv = ("zhang", "fixtures/zhang-negative", "zhang-negative-right", "zhang-negative")
    serial = run(*argv)
    monkeypatch.setenv("LRSMASH_WORKERS", "2")
    parallel = run(*argv)
    assert serial[0] == parallel[0] == 1 and serial[1] == parallel[1]


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "lrsmash", "check-bialgebra", "fixtures/kc3", "--quiet"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and p.stdout == "PASS\n"


def test_admissible_on_double_input_checks_induced_candidate():
    assert run("admissible", "fixtures/double-input")[0] == 0
    code, text, _ = run("admissible", "fixtures/double-input-bad-pairing")
    line = next(l for l in text.splitlines() if "coaction-action-cancellation" in l)
    assert code == 1 and "witness=(1*y, x*1)" in line
