import json

import numpy as np
import pytest

from rmtinter.identities import (REGISTRY, identity_rng, list_identities, negative_control,
                                 pair_identity_sides, run_identity, sign_identity_sides)

EXPECTED_IDS = {
    "I-2.0c", "I-2.0e", "I-2.0E", "I-2.26a", "I-2.26b", "I-2.27", "I-2.27+", "I-2.30", "I-2.30a",
    "I-2.31", "I-2.31a", "I-2.31b", "I-2.31c", "I-3.111e", "I-3.u.2", "I-5.0", "I-5.0x", "I-5.0y",
    "I-5.3-C", "I-5.3-G", "I-5.3-J", "I-5.3-L", "I-5.3a", "I-5.3a+", "I-5.3a+1", "I-5.3a+2",
    "I-5.3b", "I-5.3x", "I-5.3z", "I-7.4b", "I-8.1", "I-8.140a", "I-D5", "I-D7", "I-D9", "I-D11",
    "I-DA", "I-L2-G", "I-LR", "I-P2.3", "I-P4.1", "I-Sa1.5",
}


def test_registry_complete():
    assert set(list_identities()) == EXPECTED_IDS
    for ident in REGISTRY.values():
        assert ident.method in ("exact", "oracle", "statistical")
        if ident.method == "statistical":
            assert ident.defaults["samples"] == 100_000


def test_cue_product_identity():
    rep = run_identity("I-2.31a", {"n": [5]})
    assert rep.passed and rep.rel_err < 1e-9
    assert rep.method == "exact" and rep.identity_id == "I-2.31a"


def test_interlaced_integral_single_point():
    rep = run_identity("I-DA", {"n": [1], "s": [1.0, 1.0], "a": [1.0, 0.0]})
    assert rep.passed
    assert rep.lhs == [pytest.approx(1.0, abs=1e-14)] and rep.rhs == [pytest.approx(1.0, abs=1e-14)]


def test_unknown_identity_and_parameters():
    with pytest.raises(KeyError):
        run_identity("I-9.99")
    with pytest.raises(ValueError):
        run_identity("I-2.31a", {"bogus": 1})
    with pytest.raises(ValueError):
        run_identity("I-2.31a", {"n": [65]})
    with pytest.raises(ValueError):
        run_identity("I-2.0c", {"samples": 10})


def test_streams_depend_on_id_and_seed():
    a = identity_rng(1, "I-2.0c").random(3)
    assert np.array_equal(a, identity_rng(1, "I-2.0c").random(3))
    assert not np.array_equal(a, identity_rng(1, "I-8.1").random(3))
    assert not np.array_equal(a, identity_rng(2, "I-2.0c").random(3))


def test_reports_reproducible():
    for ident in ("I-5.3a", "I-2.0c"):
        params = {"samples": 2000} if ident == "I-2.0c" else None
        a = run_identity(ident, params, seed=7).to_dict()
        b = run_identity(ident, params, seed=7).to_dict()
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
        assert a["runtime"] is None


def test_report_fields():
    rep = run_identity("I-D11")
    d = rep.to_dict(timing=True)
    assert set(d) == {"identity_id", "method", "parameters", "lhs", "rhs", "abs_err", "rel_err",
                      "pass", "seed", "runtime", "tolerance", "p_floor", "tests", "notes"}
    assert d["runtime"] > 0
    json.dumps(d)


def test_perturbed_checks_fail():
    assert not run_identity("I-2.31a", {"n": [4], "perturb": 0.1}).passed
    assert not run_identity("I-D11", {"n": [2], "perturb": 0.1}).passed


@pytest.mark.parametrize("kind", ["exact", "oracle"])
def test_negative_controls_fail(kind):
    rep = negative_control(kind)
    assert not rep.passed and rep.identity_id == f"NC-{kind}"


def test_statistical_negative_control_fails():
    assert not negative_control("statistical", samples=20000).passed
    with pytest.raises(ValueError):
        negative_control("other")


def test_polynomial_identity_sides():
    rng = np.random.default_rng(0)
    for m in (1, 2, 3):
        x = -np.sort(-rng.normal(size=2 * m + 1))
        lhs, rhs = pair_identity_sides(x)
        assert lhs == pytest.approx(rhs, rel=1e-10)
    for m in (2, 4):
        s = -np.sort(-rng.uniform(0.1, 2.0, m))
        lhs, rhs = sign_identity_sides(s)
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_small_statistical_check_passes():
    rep = run_identity("I-2.0c", {"samples": 5000}, seed=3)
    assert rep.passed and rep.p_floor > 0
    assert all(0 <= t["p_value"] <= 1 for t in rep.tests)
