import json

import pytest

import essq


def test_gf16_basics():
    assert essq.gf16_add(3, 5) == 6
    # zeta * zeta^3 = zeta^3 + 1: bits 2 * 8 -> 9
    assert essq.gf16_mul(2, 8) == 9
    assert essq.gf16_mul(0, 7) == 0
    assert essq.gf16_trace(2) == 1  # trace of zeta is 1
    assert essq.gf16_trace(1) == 0
    assert essq.gf16_frobenius(2) == 4
    for a in range(1, 16):
        assert essq.gf16_mul(a, essq.gf16_inverse(a)) == 1
    with pytest.raises(ValueError):
        essq.gf16_inverse(0)


def test_group_facts():
    assert essq.group_order() == 64
    assert essq.center_size() == 4
    assert essq.element_order(0, 0) == 1
    with pytest.raises(ValueError):
        essq.element_order(1, 0)  # fails b + b^4 = a^5


@pytest.fixture(scope="module")
def verifier():
    return essq.Verifier()


def test_dimension_table(verifier):
    assert verifier.quotient_dim(3, 4) == 12
    assert verifier.quotient_dim(4, 6) == 8
    assert verifier.quotient_dim(8, 6) == 1
    table = verifier.figure_table()
    assert len(table) == 9 and all(len(row) == 9 for row in table)
    assert table[-1][:6] == [1, 4, 8, 10, 8, 6]  # the q = 0 row


def test_poincare_numerator(verifier):
    num = verifier.poincare_numerator()
    assert num == [1, 4, 8, 10, 12, 13, 16, 20, 16, 13, 12, 10, 8, 4, 1]
    assert num == num[::-1]


def test_element_queries(verifier):
    assert verifier.element_weight("a4*a8*u5_4") == (4 + 8 + 5) % 15
    assert verifier.element_bidegree("a4^2*b7") == (4, 2)
    assert verifier.class_is_zero("a1*d7")
    assert not verifier.class_is_zero("xi")
    assert verifier.is_essential("a1^4")
    assert not verifier.is_essential("a1")


def test_run_json_products():
    report = json.loads(essq.run_json(["products"]))
    assert report["summary"]["fail"] == 0
    ids = {c["id"]: c["status"] for c in report["checks"]}
    assert ids["products.prop-ess10-4"] == "pass"
    assert ids["products.prop-ess8-6"] == "pass"
