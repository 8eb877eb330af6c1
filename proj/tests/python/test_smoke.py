import json

import pytest

import wedderkit as wk


def test_rank_and_classes():
    r = wk.rank("metacyclic 7 3 0 2")
    assert r["total"] == 0
    assert r["oracle_total"] == 0

    r31 = wk.rank("metacyclic 31 5 0 2")
    assert r31["total"] == 3

    counts = wk.class_counts("metacyclic 7 3 0 2")
    assert counts == {"ordinary": 5, "rational": 3, "real": 3}


def test_wedderburn_components():
    comps = wk.wedderburn("metacyclic 7 3 0 2")
    assert len(comps) == 3
    degrees = sorted((c["degree"], c["k"]) for c in comps)
    assert degrees == [(1, 1), (1, 3), (1, 7)]
    # the noncommutative component is the crossed product over Q(zeta_7)
    big = [c for c in comps if c["k"] == 7][0]
    assert big["nh_order"] == 3
    assert big["twist_trivial"]
    parsed = json.loads(big["json"])
    assert parsed["twist_trivial"] is True

    twisted = wk.wedderburn("metacyclic 19 9 0 7")
    assert any(not c["twist_trivial"] for c in twisted)


def test_idempotents_reject_twisted_components():
    with pytest.raises(wk.UnsupportedClassError):
        wk.idempotents("metacyclic 19 9 0 7")
    sets = wk.idempotents("metacyclic 7 3 0 2")
    assert sorted(len(s) for s in sets) == [1, 1, 3]


def test_certificate_round_trip():
    cert = wk.unit_generators("metacyclic 7 3 0 2")
    ok, failures = wk.verify_certificate(cert)
    assert ok, failures

    tampered = cert.replace('"coeff": "', '"coeff": "9', 1)
    bad_ok, bad_failures = wk.verify_certificate(tampered)
    assert not bad_ok
    assert bad_failures


def test_central_basis_certificate():
    cert = wk.central_basis("cyclic 5")
    payload = json.loads(cert)
    assert payload["schema"] == "wedderkit-cert/1"
    assert len(payload["generators"]) == 1
    ok, _ = wk.verify_certificate(cert)
    assert ok


def test_cyclotomic_polynomial():
    assert wk.cyclotomic_polynomial(6) == ["1", "-1", "1"]


def test_validation_errors_surface():
    with pytest.raises(wk.ValidationError):
        wk.rank("metacyclic 5 2 0 2")
