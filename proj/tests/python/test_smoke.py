import json
import os
import subprocess

import pytest

import geoprove

CORPUS = os.environ.get(
    "GEOPROVE_CORPUS",
    os.path.join(os.path.dirname(__file__), os.pardir, os.pardir, "corpus"),
)


def corpus(name):
    return os.path.join(CORPUS, name)


def test_polynomial_algebra():
    t = geoprove.VariableTable(["x", "y"])
    p = geoprove.poly("(x - y) * (x + y)^2", t)
    assert str(geoprove.squarefree_part(p)) == "x^2 - y^2"
    m = geoprove.mcs([geoprove.poly("x - y", t), geoprove.poly("(x + y)^2", t)])
    assert str(m) == "x^2 - y^2"
    g = geoprove.gcd(geoprove.poly("x^2 - y^2", t), geoprove.poly("x^2 - x*y", t))
    assert str(g) == "x - y"
    assert geoprove.poly("x - y", t).total_degree() == 1
    assert geoprove.homogeneous_degree(geoprove.poly("x^2 - x*y", t)) == 2
    assert geoprove.homogeneous_degree(geoprove.poly("x^2 - y", t)) is None


def test_substitute_and_errors():
    t = geoprove.VariableTable(["a", "b"])
    p = geoprove.poly("a - b", t)
    r = geoprove.substitute(p, {"b": "a^2"})
    assert str(r.num) == "-a^2 + a"  # graded-lex order, leading term first
    with pytest.raises(geoprove.MathError):
        geoprove.exact_divide(geoprove.poly("a + 1", t), geoprove.poly("b", t))
    with pytest.raises(geoprove.GeoParseError):
        geoprove.parse_geo("vars a; point A = (a,0);")  # no thesis


def test_euler_direct_and_autarky():
    prog = geoprove.load_geo(corpus("euler.geo"))
    assert prog.variables == ["a", "b", "c"]
    assert prog.cases == ["iso_ab", "iso_cb", "iso_ac"]
    rep = geoprove.direct_prove(prog)
    assert rep["verdict"] == "proved"
    assert rep["thesis"]["polynomial"] == "0"
    aut = geoprove.autarky_prove(prog, mode="assumed")
    assert aut["verdict"] == "proved"
    assert aut["thesis"]["degree_bound"] == 4
    assert aut["mcs"]["degree"] == 5
    assert str(geoprove.case_polynomial(prog, "iso_ac")) == "2*b - c"


def test_substitution_and_oracle():
    prog = geoprove.load_geo(corpus("euler.geo"))
    sub = geoprove.substitution_prove(prog, "b := a^2")
    assert sub["verdict"] == "proved"
    assert sub["residual"] == "0"

    t = geoprove.VariableTable(["a", "b", "c", "d"])
    res = geoprove.identity_test(geoprove.poly("b*c - a*d", t))
    assert res["verdict"] == "not_identity"
    zero = geoprove.identity_test(geoprove.poly("(a + b)^2 - a^2 - 2*a*b - b^2", t))
    assert zero["verdict"] == "likely_identity"


def test_guardrail():
    prog = geoprove.load_geo(corpus("origin_guardrail.geo"))
    rep = geoprove.autarky_prove(prog, mode="divides")
    assert rep["verdict"] == "not_proved"
    assert rep["cases"][0]["evidence"]["status"] == "division_failed"
    assert any("R-factorizability" in a for a in rep["assumptions"])


def test_cli_binary():
    exe = os.environ.get("GEOPROVE_BIN")
    if not exe:
        pytest.skip("GEOPROVE_BIN not set")
    cp = subprocess.run([exe, "check", corpus("euler.geo")], capture_output=True, text=True)
    assert cp.returncode == 0
    assert "verdict: proved" in cp.stdout

    cp2 = subprocess.run(
        [exe, "check", corpus("collinear_counter.geo"), "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert cp2.returncode == 2
    doc = json.loads(cp2.stdout)
    assert doc["direct"]["verdict"] == "disproved_at_witness"
    assert doc["direct"]["witness"] == {"a": "1", "b": "1", "c": "1", "d": "2"}

    env = dict(os.environ, GEOPROVE_MAX_VARS="4")
    cp3 = subprocess.run(
        [exe, "oracle", corpus("varignon.geo")],  # six variables, cap four
        capture_output=True,
        text=True,
        env=env,
    )
    assert cp3.returncode == 3
    assert "at most 4 variables" in cp3.stderr
