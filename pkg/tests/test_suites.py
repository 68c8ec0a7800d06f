import pytest

from app.core.errors import InvalidParams, NotPolynomial
from app.verify import suites
from app.verify.report import VerificationReport


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(suites.SUITES))
def test_suite_passes(name):
    reports = suites.run_suite(name)
    assert reports
    failures = [r for r in reports if not r.passed]
    assert not failures, failures[:3]


def test_telescope_suite_reaches_thirty():
    labels = [label for label, _ in suites.SUITES["telescopes"]()]
    assert "forward_telescope[(3^j-1)/2] n=30" in labels
    assert "backward_telescope[j^3] n=30" in labels


def test_crosscheck_suite_covers_eq30_to_six():
    labels = [label for label, _ in suites.SUITES["crosschecks"]()]
    assert [label for label in labels if label.startswith("eq30_forms")][-1] == "eq30_forms n=6"


def test_unknown_suite():
    with pytest.raises(InvalidParams):
        suites.run_suite("nope")


def test_build_errors_become_error_reports(monkeypatch):
    def broken():
        raise NotPolynomial("remainder 1 - q")

    def ok():
        return VerificationReport(id="fine", outcome="pass")

    monkeypatch.setitem(suites.SUITES, "tiny", lambda: [("broken n=1", broken), ("fine", ok)])
    reports = suites.run_suite("tiny")
    assert [r.outcome for r in reports] == ["error", "pass"]
    assert reports[0].id == "tiny:broken n=1"
    assert reports[0].error == "remainder 1 - q"


def test_run_suites_keeps_order(monkeypatch):
    monkeypatch.setattr(suites, "SUITES", {
        "a": lambda: [("x", lambda: VerificationReport(id="x", outcome="pass"))],
        "b": lambda: [("y", lambda: VerificationReport(id="y", outcome="pass"))],
    })
    assert [r.id for r in suites.run_suites()] == ["x", "y"]
    assert [r.id for r in suites.run_suites(["b"])] == ["y"]
