import pytest

import spinhecke


def test_dims():
    assert spinhecke.dims("spin", 4) == 24
    assert spinhecke.dims("covering", 3) == 12


def test_braid_normal_form():
    res = spinhecke.nf("R2*R1*R2", n=3)
    assert res["text"] == "(q^-2 - 2 + q^2)*R1 + (-q^-2 + 2 - q^2)*R2 + R1*R2*R1"
    assert [t["word"] for t in res["terms"]] == [["R1"], ["R2"], ["R1", "R2", "R1"]]


def test_pq_relation():
    assert spinhecke.nf("p1^2 + q1^2", algebra="spin-affine", n=2)["text"] == "1"


def test_product_matches_nf():
    assert spinhecke.mul("R1", "R2*R1", n=3)["text"] == spinhecke.nf("R1*R2*R1", n=3)["text"]


def test_verify_finite_iso():
    body = spinhecke.verify("finite-iso", n=2)
    assert body["all_pass"]
    assert all(c["status"] == "pass" for c in body["report"])


def test_parse_error():
    with pytest.raises(spinhecke.SpinheckeError) as err:
        spinhecke.nf("R1 + * R2", n=3)
    assert err.value.exit_code == 2
    assert err.value.offset == 5
    body, code = spinhecke.run("nf", raise_on_error=False, expr="R9", n=3)
    assert code == 2 and body["error"]["code"] == "index_out_of_range"


def test_names():
    assert "intertwine" in spinhecke.command_names()
    assert "engine" in spinhecke.suite_names()
    assert "phi" in spinhecke.map_names()
