from fractions import Fraction

import pytest

import sternpoly


def test_stern_poly():
    assert sternpoly.stern_poly(2, 11) == [(0, 1), (2, 1), (4, 1), (8, 1), (10, 1)]
    assert sternpoly.stern_poly(2, 0) == []
    assert sternpoly.stern_value_at_one(2, 19) == 7
    big = 2**200
    assert sternpoly.stern_poly(3, big) == [((3**200 - 1) // 2, 1)]


def test_alpha_and_closed_forms():
    assert sternpoly.alpha(2, 3) == 13
    assert sternpoly.closed_form_2k(2, 3) == sternpoly.stern_poly(2, 8)
    assert sternpoly.closed_form_2k_minus_1(3, 2) == sternpoly.stern_poly(3, 3)


def test_series():
    assert sternpoly.h_series(2, 1, 12) == "101010001010"
    assert sternpoly.agreement_degree(2, 1, 1) is None
    assert sternpoly.agreement_degree(3, 2, 3) == 243


def test_eval_series_certified():
    lo, hi = sternpoly.eval_series_certified(2, 1, Fraction(1, 2), 64)
    assert lo <= hi
    assert hi - lo <= Fraction(1, 2**62)
    assert float(lo) == pytest.approx(1.317402839967372)


def test_continued_fraction():
    values = sternpoly.eval_cf(2, 1, Fraction(1, 2), 4)
    assert values == [1, Fraction(5, 4), Fraction(21, 17), Fraction(1349, 1092), Fraction(1381397, 1118225)]
    b0, terms = sternpoly.regular_cf(2, 1, 3)
    assert b0 == 1
    assert terms == [(1, 4), (1, 4), (1, 64)]


def test_g_product():
    g = sternpoly.g_product(2, 1, 2)
    assert g == [[[(4, 1)], [(4, -1)]], [[(0, -1)], [(0, 1), (2, 1)]]]


def test_errors():
    with pytest.raises(sternpoly.SternError) as info:
        sternpoly.stern_poly(1, 3)
    assert info.value.args[1] == "InvalidParameter"
    with pytest.raises(sternpoly.SternError) as info:
        sternpoly.eval_cf(2, 1, Fraction(3, 2), 2)
    assert info.value.args[1] == "AlphaOutOfRange"
    saved = sternpoly.term_cap()
    sternpoly.set_term_cap(2)
    try:
        with pytest.raises(sternpoly.SternError) as info:
            sternpoly.stern_poly(2, 11)
        assert info.value.args[1] == "CapExceeded"
    finally:
        sternpoly.set_term_cap(saved)


def test_verify():
    report = sternpoly.verify(t=[2], k=[1], depth=4, order=64)
    assert report["pass"] is True
    assert report["checks"]
    assert {"name", "params", "pass", "detail"} <= set(report["checks"][0])
