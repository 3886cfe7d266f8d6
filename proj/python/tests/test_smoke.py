import pytest

import swdual


def result(report, name):
    return next(r for r in report["results"] if r["name"] == name)


def test_shift_p3n2():
    r = swdual.shift("p3n2")
    assert result(r, "shift")["value"] == 44
    assert result(r, "shift")["modulus"] == 72
    assert r["timing_ms"] == {}


def test_honda_shifts():
    for p in (3, 5, 7):
        n = p - 1
        s = swdual.sw_shift("honda", p)
        assert s["signed_form"] == -n * n * (2 * p + 1)
        assert s["period"] == 2 * p * p * n * n
        assert s["paper_inputs"] == 0


def test_p2n2_has_two_seeded_steps():
    s = swdual.sw_shift("p2n2")
    assert (s["shift"], s["period"]) == (44, 192)
    assert sum(1 for t in s["trail"] if t[2] == "paper-input") == 2


def test_central_and_exotic():
    assert swdual.central_case_shift(2)["shift"] == -4
    assert swdual.exotic_picard_shift(5)["shift"] == 30
    assert swdual.period_of("p2n2", "G24") == 192


def test_psi():
    assert swdual.psi("p3n2", rep="rho") == (12, 1, 2, 3)
    assert swdual.psi("p2n2", rep="H_ad") == (4, None, 2, 8)


def test_cohomology_and_lattice():
    assert swdual.cohomology_dims("q8", 2, 4) == [1, 2, 2, 1, 1]
    assert swdual.saturate([[2, 0], [0, 3]], 2) == [["1", "0"], ["0", "3"]]


def test_verify_and_dump():
    assert swdual.verify("wu")["pass"] is True
    d = swdual.dump("cohdims", group="q8", p=2, maxdeg=4)
    assert result(d, "dims")["value"] == [1, 2, 2, 1, 1]
    assert "units" in swdual.suite_names()


def test_errors():
    with pytest.raises(swdual.SwdualError, match="UnknownTag"):
        swdual.shift("nope")
    with pytest.raises(swdual.SwdualError, match="InvalidArgument"):
        swdual.shift("honda", p=4)
    with pytest.raises(ValueError):
        swdual.period_of("p3n2", "Q8")
