import math

import pytest

import facilidyn as fd


def test_classify_quartet():
    labels = [fd.classify(0.5, 1.0, 0.62, a)["label"] for a in (14.2, 14.3, 14.42)]
    assert labels == ["P4", "P52", "P51"]
    assert fd.classify(1.5, 2.0, 1.0, 1.0)["label"] == "H_GE_1"


def test_thresholds_and_census():
    j = fd.classify(0.5, 1.0, 0.62, 14.3)
    assert math.isclose(j["thresholds"]["alpha1"], fd.alpha1(0.5, 1.0, 0.62))
    c = fd.equilibria(0.5, 1.0, 0.62, 14.3)
    assert c["match"]
    assert len(c["computed"]) == 4


def test_cusp_values():
    c = fd.cusp(0.5, 1.0)
    assert c["sigma2"] == pytest.approx(0.5531695313, rel=1e-9)
    assert c["alpha_star"] == pytest.approx(15.94140535, rel=1e-8)
    assert fd.sigma2(0.5, 1.0) == pytest.approx(c["sigma2"])


def test_hopf_is_supercritical():
    h = fd.hopf(0.5, 1.0, 0.62)
    assert h["focal_sign"] == -1
    assert h["alpha2"] == pytest.approx(fd.alpha2(0.5, 1.0, 0.62))


def test_simulate_and_cycle():
    o = fd.simulate(0.5, 1.0, 0.62, 14.3, 0.3, 0.0, t=20.0)
    assert len(o["points"]) > 2
    assert all(y == 0.0 for _, _, y in o["points"])
    assert o["points"][-1][1] == pytest.approx(1.0, rel=1e-3)
    cyc = fd.limit_cycle(0.5, 5.5, 1.0, 0.1)
    assert cyc is not None
    assert cyc["stability"] == "Stable"
    assert fd.limit_cycle(0.5, 1.0, 0.62, 14.3) is None


def test_invalid_parameters_raise():
    with pytest.raises(ValueError):
        fd.classify(0.5, -1.0, 0.62, 14.3)


def test_quick_acceptance():
    r = fd.acceptance(quick=True)
    assert r["pass"]
