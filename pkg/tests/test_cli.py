import json
import os
import subprocess
import sys

CMD = [sys.executable, "-m", "qflag3"]


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("QFLAG3_FORCE_FAIL", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(CMD + list(args), capture_output=True, text=True,
                          env=env, timeout=300)


def test_usage_error_exit_code():
    assert run_cli("verify", "bogus").returncode == 2
    assert run_cli("frobnicate").returncode == 2
    assert run_cli("derive", "omega", "--generator", "z3_11").returncode == 2


def test_passing_suite_exits_zero():
    result = run_cli("verify", "kahler", "--format", "json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["suite"] == "kahler"
    assert payload["overall"] is True
    assert {"id", "citation", "expected", "actual", "pass"} == \
        set(payload["checks"][0])


def test_failing_suite_exits_one():
    # the confluence suite faithfully reports the four unresolvable overlaps
    result = run_cli("verify", "confluence", "--format", "json")
    assert result.returncode == 1
    payload = json.loads(result.stdout)
    assert payload["overall"] is False
    failing = [c["id"] for c in payload["checks"] if not c["pass"]]
    assert "overlap:e_a2.e_a2.f_a2" in failing


def test_forced_failure_hook():
    result = run_cli("verify", "kahler",
                     env_extra={"QFLAG3_FORCE_FAIL": "central-subspace-dim"})
    assert result.returncode == 1


def test_deterministic_output():
    first = run_cli("verify", "connections", "--format", "json")
    second = run_cli("verify", "connections", "--format", "json")
    assert first.stdout == second.stdout
    assert first.returncode == second.returncode == 0


def test_out_file(tmp_path):
    target = tmp_path / "report.json"
    result = run_cli("verify", "connections", "--format", "json",
                     "--out", str(target))
    assert result.returncode == 0
    assert json.loads(target.read_text())["suite"] == "connections"


def test_basis_listing():
    result = run_cli("basis", "--degree", "2")
    assert result.returncode == 0
    lines = result.stdout.strip().splitlines()
    assert len(lines) == 15
    assert lines[0] == "f_a2.f_a12"
    result = run_cli("basis", "--degree", "0")
    assert result.stdout.strip() == "1"


def test_relations_dump():
    result = run_cli("relations", "--dump")
    lines = result.stdout.strip().splitlines()
    assert len(lines) == 21
    assert "e_a1.e_a2 -> -q^-1*e_a2.e_a1" in lines
    graded = run_cli("relations", "--dump", "--graded")
    assert "e_a2.f_a2 -> -q^2*f_a2.e_a2" in graded.stdout.splitlines()


def test_derive_subcommands():
    omega = run_cli("derive", "omega", "--generator", "z1_22")
    assert omega.stdout.strip() == ("-q^-1*f_a1(x)e_a1 + (q^-4 - q^-6)"
                                    "*e_a12(x)f_a12 - q^-3*e_a1(x)f_a1")
    cos = run_cli("derive", "coset", "--generator", "z2_32")
    assert cos.stdout.strip() == "-q*e_a2"


def test_q_at_one_flag():
    result = run_cli("verify", "all", "--q-at-one", "--format", "json")
    assert result.returncode == 0
    payload = json.loads(result.stdout)
    assert payload["suite"] == "classical"
    assert payload["overall"] is True


def test_verify_all_reports_every_suite():
    result = run_cli("verify", "all", "--format", "json")
    payload = json.loads(result.stdout)
    assert [r["suite"] for r in payload] == [
        "acs", "confluence", "connections", "integrability",
        "kahler", "nakayama", "relations"]
    # the suites that verify flatness of the relation data fail honestly
    assert result.returncode == 1
    by_suite = {r["suite"]: r["overall"] for r in payload}
    assert by_suite["acs"] and by_suite["connections"]
    assert by_suite["integrability"] and by_suite["kahler"]
    assert not by_suite["confluence"]
