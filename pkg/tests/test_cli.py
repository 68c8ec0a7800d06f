import json

import pytest
from click.testing import CliRunner

from app.algebra.qcalc import q_int
from app.algebra.qpoly import RationalFn
from app.cli.commands import cli
from app.verify.catalog import BY_ID, IdentityDescriptor


@pytest.fixture
def runner():
    return CliRunner()


def test_list(runner):
    result = runner.invoke(cli, ["list"])
    assert result.exit_code == 0
    rows = result.stdout.splitlines()
    assert any(row.split()[0] == "eq10_theorem1" for row in rows)
    luthy = next(row for row in rows if row.startswith("eq24_luthy"))
    assert " n,k " in luthy
    assert luthy.endswith(BY_ID["eq24_luthy"].classical)


def test_verify_text(runner):
    result = runner.invoke(cli, ["verify", "--id", "eq10_theorem1", "--range", "n=1..20"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert len(lines) == 20
    assert lines[0] == "eq10_theorem1 n=1 PASS"
    assert all(line.endswith(" PASS") for line in lines)


def test_verify_two_axes(runner):
    result = runner.invoke(cli, ["verify", "--id", "eq34", "--range", "n=2..3", "--range", "m=0..1"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == [
        "eq34 n=2,m=0 PASS", "eq34 n=2,m=1 PASS", "eq34 n=3,m=0 PASS", "eq34 n=3,m=1 PASS",
    ]


def test_verify_json_deterministic(runner):
    args = ["verify", "--id", "eq11_odd_sum", "--range", "n=1..3", "--format", "json", "--no-timings"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == 0
    assert first.stdout == second.stdout
    data = json.loads(first.stdout)
    assert len(data) == 3
    assert data[0] == {"id": "eq11_odd_sum", "params": {"n": 1}, "outcome": "pass", "elapsed_ms": 0}


@pytest.mark.parametrize("args", [
    ["verify", "--id", "eq99"],
    ["verify", "--id", "eq10_theorem1", "--range", "n=5..1"],
    ["verify", "--id", "eq10_theorem1", "--range", "k=1..3"],
    ["verify"],
    ["verify", "--all", "--id", "eq10_theorem1"],
    ["verify", "--all", "--range", "z=1..2"],
    ["show", "--id", "eq11_odd_sum"],
    ["show", "--id", "eq11_odd_sum", "--n=zero"],
    ["show", "--id", "nope", "--n=2"],
    ["limits", "--id", "eq24_luthy", "--n=2"],
    ["verify", "--suite", "nope"],
    ["verify", "--all", "--suite", "lattice"],
    ["verify", "--suite", "lattice", "--range", "n=1..2"],
])
def test_usage_errors(runner, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 2


def test_verify_failure_exit_code(runner, monkeypatch):
    desc = IdentityDescriptor(
        id="fake_fail", equation="test", params=("n",), minimums={"n": 1},
        lhs=lambda n: RationalFn(q_int(n)), rhs=lambda n: RationalFn(q_int(n + 1)),
        classical="-", classical_value=lambda n: n, default_grid={"n": (1, 2)},
    )
    monkeypatch.setitem(BY_ID, desc.id, desc)
    result = runner.invoke(cli, ["verify", "--id", "fake_fail"])
    assert result.exit_code == 1
    assert result.stdout.splitlines() == ["fake_fail n=1 FAIL", "fake_fail n=2 FAIL"]


def test_show_rhs(runner):
    result = runner.invoke(cli, ["show", "--id", "eq11_odd_sum", "--n=2", "--side", "rhs"])
    assert result.exit_code == 0
    assert result.stdout.strip() == "1 + 2*q + q^2"


def test_show_both_sides(runner):
    result = runner.invoke(cli, ["show", "--id", "eq10_theorem1", "--n", "2"])
    assert result.exit_code == 0
    assert result.stdout.splitlines() == [
        "lhs: 1 + 2*q + 3*q^2 + 2*q^3 + q^4",
        "rhs: 1 + 2*q + 3*q^2 + 2*q^3 + q^4",
    ]


def test_lattice(runner):
    result = runner.invoke(cli, ["lattice", "--n", "6"])
    assert result.exit_code == 0
    rows = result.stdout.splitlines()
    assert len(rows) == 6
    assert rows[0] == "q^5 q^6 q^7 q^8 q^9 q^10"
    assert rows[-1] == "1 q q^2 q^3 q^4 q^5"


def test_lattice_hooks(runner):
    result = runner.invoke(cli, ["lattice", "--n", "3", "--hooks"])
    assert result.exit_code == 0
    out = result.stdout.splitlines()
    assert "1 2 3" in out
    assert "h_1: q^2" in out
    assert "h_3: 1 + q + q^2 + q^3 + q^4" in out


def test_lattice_regions(runner):
    result = runner.invoke(cli, ["lattice", "--n", "2", "--regions"])
    assert result.exit_code == 0
    out = result.stdout.splitlines()
    assert "R_1: |R_1|=1 w=q^2" in out
    assert any(line.startswith("R_2: |R_2|=8 ") for line in out)


def test_limits(runner):
    result = runner.invoke(cli, ["limits", "--id", "eq24_luthy", "--n=2", "--k=2"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "eq24_luthy n=2,k=2 PASS (q=1: 32 = 32 = 32)"
    assert lines[1] == "  " + BY_ID["eq24_luthy"].classical


def test_limits_json(runner):
    result = runner.invoke(cli, ["limits", "--id", "eq11_odd_sum", "--n=5", "--format", "json"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)[0]["outcome"] == "pass"


def test_limits_json_timings_default_off(runner):
    args = ["limits", "--id", "eq10_theorem1", "--n=6", "--format", "json"]
    first = runner.invoke(cli, args)
    assert first.stdout == runner.invoke(cli, args).stdout
    assert json.loads(first.stdout)[0]["elapsed_ms"] == 0
    assert runner.invoke(cli, args + ["--timings"]).exit_code == 0


def test_verify_json_default_is_deterministic(runner):
    args = ["verify", "--id", "eq10_theorem1", "--range", "n=1..4", "--format", "json"]
    first = runner.invoke(cli, args)
    assert first.exit_code == 0
    assert first.stdout == runner.invoke(cli, args).stdout
    assert all(r["elapsed_ms"] == 0 for r in json.loads(first.stdout))


def test_verify_lattice_suite(runner):
    result = runner.invoke(cli, ["verify", "--suite", "lattice"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "hook_partition n=1 PASS"
    assert "region_partition n=8 PASS" in lines
    assert "odd_tiling j=7,n=7 PASS" in lines
    assert all(line.endswith(" PASS") for line in lines)


def test_verify_identity_then_suite(runner):
    result = runner.invoke(cli, ["verify", "--id", "eq11_odd_sum", "--range", "n=1..2", "--suite", "lattice"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[:2] == ["eq11_odd_sum n=1 PASS", "eq11_odd_sum n=2 PASS"]
    assert lines[2] == "hook_partition n=1 PASS"


@pytest.mark.slow
def test_verify_all_includes_suites(runner):
    result = runner.invoke(cli, ["verify", "--all"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert "eq10_theorem1 n=40 PASS" in lines
    assert "forward_telescope[(3^j-1)/2] n=30 PASS" in lines
    assert "eq30_three_forms n=6 PASS" in lines
    assert lines[-1].startswith("gauss_agreement ")


def test_list_notes(runner):
    plain = runner.invoke(cli, ["list"]).stdout.splitlines()
    rows = runner.invoke(cli, ["list", "--notes"]).stdout.splitlines()
    assert not any(row.startswith("    note: ") for row in plain)
    at = next(i for i, row in enumerate(rows) if row.startswith("eq6_garrett_hummel"))
    assert rows[at + 1] == "    note: " + BY_ID["eq6_garrett_hummel"].notes
