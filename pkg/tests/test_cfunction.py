import random

import mpmath
import pytest

from unipotent_sqint.cfunction import (CMultiset, c_numeric, c_order_at_integer, c_product,
                                       cocycle_check, factor_germs, l_chi4, numeric_selftest,
                                       pole_data, zeta_em)
from unipotent_sqint.rootsys import build_root_system
from unipotent_sqint.weyl import WeylElement, all_elements, long_element


def test_orders_at_integers():
    assert c_order_at_integer(1, False).order == -1
    assert c_order_at_integer(-1, False).order == 1
    assert c_order_at_integer(0, False) == c_order_at_integer(0, False)
    assert c_order_at_integer(0, False).value == -1
    assert c_order_at_integer(0, True).value == 1
    assert c_order_at_integer(1, True).order == 0
    assert c_order_at_integer(5, False).order == 0


def test_multiset_normalisation():
    m = CMultiset()
    m.add(2, False)
    m.add(-2, False)
    assert m == CMultiset()
    m.add(0, False)
    assert m.sign == -1
    m.add(0, True)
    assert m.sign == -1
    m.add(-3, True, 2)
    assert dict(m.factors) == {(3, True): -2}


def test_multiset_product_keeps_negative_multiplicities():
    a, b = CMultiset(), CMultiset()
    a.add(-1, False)
    b.add(2, False)
    prod = a * b
    assert dict(prod.factors) == {(1, False): -1, (2, False): 1}
    assert a.difference(b) == {(1, False): -1, (2, False): -1}


def test_g2_long_element_product():
    rs = build_root_system("G2")
    w0 = long_element(rs)
    prod = c_product(w0, (1, 0), (1, 1))
    assert sum(abs(v) for v in prod.factors.values()) <= 6
    s, o = pole_data(w0, (1, 0), (0, 1))
    assert o == -len(s)
    assert all(rs.pair((1, 0), rs.coroot(a)) == 1 for a in s)


def test_pole_data_requires_dominant():
    rs = build_root_system("G2")
    with pytest.raises(ValueError):
        pole_data(long_element(rs), (-1, 0), (0, 0))


def test_factor_germ_orders_match_pole_data():
    rs = build_root_system("F4")
    lam0, delta0 = (0, 0, 1, 0), (1, 0, 0, 0)
    rng = random.Random(2)
    for _ in range(30):
        w = WeylElement.from_word(rs, [rng.randrange(4) for _ in range(30)])
        germs = factor_germs(w, lam0, delta0)
        poles = sum(1 for g in germs if g.order == -1)
        assert poles == len(pole_data(w, lam0, delta0)[0])


def test_cocycle_on_all_g2_pairs():
    rs = build_root_system("G2")
    rng = random.Random(0)
    els = all_elements(rs)
    for w1 in els:
        for w2 in els:
            lam = (rng.randint(-4, 4), rng.randint(-4, 4))
            delta = (rng.randint(0, 1), rng.randint(0, 1))
            assert cocycle_check(w1, w2, lam, delta) == (True, None)


def test_cocycle_failure_is_reported():
    rs = build_root_system("G2")
    w1, w2 = WeylElement.reflection(rs, 0), WeylElement.reflection(rs, 1)
    lam = (2, 3)
    lhs = c_product(w1 * w2, lam, (0, 0))
    wrong = c_product(w1, lam, (0, 0)) * c_product(w2, lam, (0, 0))
    assert lhs != wrong


def test_special_values():
    with mpmath.workdps(40):
        assert abs(zeta_em(2) - mpmath.pi ** 2 / 6) < 1e-30
        assert abs(zeta_em(-1) + mpmath.mpf(1) / 12) < 1e-30
        assert abs(zeta_em(0.5 + 14.134725141734693j)) < 1e-10
        assert abs(l_chi4(1) - mpmath.pi / 4) < 1e-30
        assert abs(l_chi4(2) - mpmath.catalan) < 1e-30
    with pytest.raises(ZeroDivisionError):
        zeta_em(1)


def test_c_numeric_domain():
    with pytest.raises(ValueError):
        c_numeric(21)
    with pytest.raises(ValueError):
        c_numeric(0.5, "mod8")


def test_selftest_all_pass():
    results = numeric_selftest()
    assert len(results) >= 8
    bad = [r for r in results if not r["ok"]]
    assert not bad, bad
