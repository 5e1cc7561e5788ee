import json

from qflag3.report import VerificationReport, emit


def test_empty_suite_json():
    report = VerificationReport("demo")
    assert json.loads(report.render_json()) == {
        "suite": "demo", "checks": [], "overall": True}


def test_check_fields_and_overall():
    report = VerificationReport("demo")
    report.add("first", "Thm 0.0", "1", "1")
    report.add("second", "Thm 0.1", "2", "3")
    obj = report.to_json_obj()
    assert [c["id"] for c in obj["checks"]] == ["first", "second"]
    assert obj["checks"][0] == {"id": "first", "citation": "Thm 0.0",
                                "expected": "1", "actual": "1", "pass": True}
    assert obj["checks"][1]["pass"] is False
    assert obj["overall"] is False
    assert report.failures()[0].id == "second"


def test_explicit_pass_flag():
    report = VerificationReport("demo")
    report.add("loose", "none", "roughly one", "1.0", passed=True)
    assert report.overall


def test_text_rendering():
    report = VerificationReport("demo")
    report.add("alpha", "Thm 0.0", "yes", "yes")
    text = report.render_text()
    assert text.splitlines()[0] == "suite demo: pass"
    assert "alpha" in text and "pass" in text


def test_emit_multiple():
    first = VerificationReport("a")
    second = VerificationReport("b")
    second.add("x", "", "1", "2")
    payload = json.loads(emit([first, second], "json"))
    assert [r["suite"] for r in payload] == ["a", "b"]
    text = emit([first, second], "text")
    assert "suite a: pass" in text and "suite b: FAIL" in text
