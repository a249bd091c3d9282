import json

import pytest

from reesval.cli import main, parse_session, run
from reesval.errors import PreconditionError

PAPER_SESSION = """
# worked example
ring { vars: x1 x2 x3; field: QQ; mod: x1*x2 + x3^3; order: grevlex;
       assert: normal domain }
ideal m = x1, x2, x3
ideal p = x1, x3
cmd: gb m
cmd: multiplicity
cmd: multiplicity --f x1
cmd: ord m x1*x2 --nmax 6
cmd: rees m
cmd: check main-a --p p --q m --nmax 2
"""


def test_parse_session_structure():
    s = parse_session(PAPER_SESSION)
    assert s.ring["vars"] == ("x1", "x2", "x3")
    assert s.ring["mod"] == ["x1*x2 + x3^3"]
    assert s.ring["assert"] == ["normal", "domain"]
    assert [name for name, _ in s.ideals] == ["m", "p"]
    assert len(s.commands) == 6


def test_parse_errors():
    with pytest.raises(PreconditionError):
        parse_session("ideal m = x, y")  # no ring block
    with pytest.raises(PreconditionError):
        parse_session("ring { vars: x }\nring { vars: y }")
    with pytest.raises(PreconditionError):
        parse_session("ring { vars: x; field: GF 9 }")
    with pytest.raises(PreconditionError):
        parse_session("ring { vars: x }\nideal a = x\nideal a = x")
    with pytest.raises(PreconditionError):
        parse_session("ring { vars: x }\nwhat is this")


def test_prime_field_session():
    s = parse_session("ring { vars: x y; field: Fp 32003 }\nideal m = x, y\ncmd: gb m")
    report, ok = run(s)
    assert ok
    assert report["commands"][0]["result"]["basis"] == ["y", "x"]


def test_render_round_trip():
    s = parse_session(PAPER_SESSION)
    again = parse_session(s.render())
    assert again == s


def test_run_paper_session_results():
    report, ok = run(parse_session(PAPER_SESSION))
    assert ok
    by_name = {}
    for c in report["commands"]:
        by_name.setdefault(c["name"], []).append(c)
    assert by_name["multiplicity"][0]["result"] == {"e": 2}
    assert by_name["multiplicity"][1]["result"] == {"e": 3}
    assert by_name["ord"][0]["result"] == {"ord": 3, "confirmed": True}
    rees = by_name["rees"][0]["result"]
    assert rees["variables"] == ["y1", "y2", "y3", "u"]
    assert rees["relations"] == ["y3^3*u + y1*y2"]
    assert by_name["check"][0]["verdict"] == "pass"


def test_reports_identical_across_runs():
    blobs = []
    for _ in range(2):
        report, _ = run(parse_session(PAPER_SESSION), seed=42)
        blobs.append(json.dumps(report, sort_keys=True))
    assert blobs[0] == blobs[1]


def test_timings_opt_in():
    report, _ = run(parse_session("ring { vars: x }\nideal a = x\ncmd: gb a"))
    assert "timing_ms" not in report["commands"][0]
    report, _ = run(
        parse_session("ring { vars: x }\nideal a = x\ncmd: gb a"), timings=True
    )
    assert "timing_ms" in report["commands"][0]


def test_errors_recorded_and_exit_flag():
    s = parse_session("ring { vars: x }\nideal a = x\ncmd: gb nope\ncmd: gb a")
    report, ok = run(s)
    assert not ok
    assert "error" in report["commands"][0]
    assert "result" in report["commands"][1]
    report, ok = run(s, fail_fast=True)
    assert len(report["commands"]) == 1


def test_translate_origin():
    s = parse_session(
        "ring { vars: x y; mod: x*y - y }\n"
        "ideal m = x, y\n"
        "cmd: translate-origin 1,0\n"
        "cmd: multiplicity"
    )
    report, ok = run(s)
    assert ok
    # after moving the point (1,0) to the origin the curve xy = y
    # becomes xy = 0: a node, multiplicity 2... but (1,0) lies on the
    # component y = 0 only where x*y - y = (x-1)y vanishes; shifted
    # modulus is x*y, a node at the origin
    assert report["commands"][0]["result"]["modulus"] == ["x*y"]
    assert report["commands"][1]["result"] == {"e": 2}


def test_main_exit_codes(tmp_path, capsys):
    good = tmp_path / "good.session"
    good.write_text("ring { vars: x y }\nideal m = x, y\ncmd: gb m\n")
    out = tmp_path / "report.json"
    assert main([str(good), "--json", str(out)]) == 0
    blob = json.loads(out.read_text())
    assert blob["version"] == "1"
    capsys.readouterr()

    bad = tmp_path / "bad.session"
    bad.write_text("no ring here\n")
    assert main([str(bad)]) == 2
    capsys.readouterr()

    failing = tmp_path / "failing.session"
    failing.write_text("ring { vars: x y }\nideal m = x, y\ncmd: gb nope\n")
    assert main([str(failing)]) == 1
    capsys.readouterr()


def test_monomial_commands():
    s = parse_session(
        "ring { vars: x y }\n"
        "ideal I = x^2, y^3\n"
        "cmd: newton I\n"
        "cmd: closure I 1\n"
        "cmd: monomial-multiplicity I\n"
        "cmd: briancon-skoda I 4\n"
        "cmd: length-table I 6\n"
        "cmd: symbolic-power I 2 --separator x"
    )
    report, ok = run(s)
    res = [c["result"] for c in report["commands"]]
    facets = [f for f in res[0]["facets"] if f["bounded"]]
    assert facets == [{"normal": [3, 2], "offset": 6, "bounded": True}]
    assert set(res[1]["generators"]) == {"x^2", "x*y^2", "y^3"}
    assert res[2] == {"e": 6}
    assert res[3] == {"B": 1}
    assert res[4]["e"] == 6 and res[4]["stabilized"]
