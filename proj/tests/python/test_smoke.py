from fractions import Fraction
import json

import pytest

import negbeta


def test_expand_and_classify():
    assert negbeta.expand("13/10", 4)["digits"] == "2112"
    assert negbeta.expand("golden", 6)["digits"] == "211111"
    c = negbeta.classify("golden")
    assert (c["kind"], c["preperiod"], c["period"]) == ("EventuallyPeriodic", "2", "1")


def test_golden_language():
    spec = negbeta.ShiftSpec.from_b("2|1")
    assert spec.alphabet == 2
    assert spec.count_words(6) == [2, 4, 7, 12, 20, 33]
    assert spec.words(2) == ["11", "12", "21", "22"]
    assert spec.periodic_points(1) == ["1", "2"]
    assert spec.is_admissible("212") == "No"
    assert abs(spec.htop(18) - 0.516702) < 1e-5


def test_big_counts_are_python_ints():
    spec = negbeta.ShiftSpec.from_beta("2")
    assert spec.two_sided
    assert spec.per_count(12) == 2**12 + 1
    assert negbeta.GraphSlice(negbeta.ShiftSpec.from_b("2|1"), 80).path_count(70) > 2**48


def test_graph_and_glue():
    spec = negbeta.ShiftSpec.from_beta("41/16")
    g = negbeta.GraphSlice(spec, 20)
    assert g.walk("32321") == (True, [0, 1, 2, 3, 4, 5])
    assert g.path_count(2) == 8
    assert g.gap_scan(2) == 4
    assert "digraph" in g.dot()
    r = negbeta.glue(spec, g, 2, 4, ["21", "13"])
    assert r["admissible"] and r["t"] == 4


def test_measure_is_exact():
    spec = negbeta.ShiftSpec.from_b("2|1")
    mu = negbeta.mu_n(spec, 6, 2)
    assert mu["2"] == Fraction(8, 17)
    assert sum(mu[w] for w in ("11", "12", "21", "22")) == 1


def test_factor_and_cli():
    report = negbeta.verify_factor(negbeta.ShiftSpec.from_beta("2"), 8)
    assert report["passed"]
    rc, out, err = negbeta.run_cli(["expand", "--beta", "13/10", "--n", "4"])
    assert rc == 0 and json.loads(out)["digits"] == "2112"
    rc, _, err = negbeta.run_cli(["expand", "--beta", "0.5"])
    assert rc == 2 and "DomainError" in err


def test_errors_surface_as_exceptions():
    with pytest.raises(negbeta.NegbetaError):
        negbeta.ShiftSpec.from_beta("1/2")
    with pytest.raises(negbeta.NegbetaError):
        negbeta.GraphSlice(negbeta.ShiftSpec.from_beta("2"), 4)
