import random
from fractions import Fraction

import pytest

from oracles import naive_case
from unipotent_sqint.expected import VERIFICATION
from unipotent_sqint.nilpotent import parameters
from unipotent_sqint.rootsys import build_root_system, weyl_group_order
from unipotent_sqint.sqint import (case_setup, certification_scalar, coset_from_orbit_point,
                                   is_standard, key_space, key_tensor, langlands_negative,
                                   sigma_l_of, standard_representative, tensor_sum, verify_case,
                                   vanishing_depth, wl_order)
from unipotent_sqint.weyl import WeylElement, subgroup_elements


def expected(case):
    return next(row[3:] for row in VERIFICATION
                if row[:3] == (case.group, case.fixed_type, case.saturation))


def so9_case():
    return next(c for c in parameters("F4") if c.fixed_type == "so9" and c.saturation == "F4(a3)")


def test_sigma_l_and_wl():
    setup = case_setup(so9_case())
    assert setup.sigma_l == (0, 3)
    assert setup.wl_order == 4 and setup.wl_type == "A1xA1" and setup.supported
    assert len(setup.subsets) == 4
    rs = setup.rs
    assert all(rs.pair(setup.lam0, rs.coroot(a)) == 1 for a in setup.p1)
    assert all(rs.pair(setup.delta0, rs.coroot(a)) % 2 == 0 for a in setup.p1)


def test_standard_representative_keeps_orbit():
    rs = build_root_system("F4")
    c = so9_case()
    d = standard_representative(rs, c.lambda0, (1, 0, 0, 0))
    assert is_standard(rs, c.lambda0, d)
    assert wl_order(rs, c.lambda0, d) == wl_order(rs, c.lambda0, (1, 0, 0, 0))
    assert sigma_l_of(c.lambda0, d) == (0, 3)


def test_given_representative_is_respected():
    c = so9_case()
    setup = case_setup(c, delta0=(1, 0, 0, 0), representative="given")
    assert setup.delta0 == (1, 0, 0, 0)
    with pytest.raises(ValueError):
        case_setup(group="F4", lam0=(0, -1, 1, 0), delta0=(0, 0, 0, 0))


def test_e7_sl8_is_unsupported():
    c = next(c for c in parameters("E7") if c.fixed_type == "sl8")
    setup = case_setup(c)
    assert not setup.supported and setup.wl_type == "A1" and setup.wl_order == 2
    v = verify_case(c)
    assert v.m is None and v.status.startswith("unsupported")


def test_langlands_negative():
    rs = build_root_system("G2")
    assert langlands_negative(rs, rs.root_to_weight((-1, -1)))
    assert not langlands_negative(rs, rs.root_to_weight((-1, 0)))
    assert not langlands_negative(rs, rs.root_to_weight((1, 1)))


def test_key_tensor_is_tensor_sum_up_to_common_factor():
    setup = case_setup(so9_case())
    ks = key_space(setup)
    rng = random.Random(4)
    rs = setup.rs
    for _ in range(20):
        S = [a for a in setup.p1 if rng.random() < 0.5]
        counts = [0] * len(ks.kinds)
        common = Fraction(1)
        for a in S:
            k = ks.kind_of_root[a]
            if k >= 0:
                counts[k] += 1
            else:
                common /= rs.pair(setup.mu, rs.coroot(a))
        for T in ((), (0,), (0, 3)):
            for k in range(3):
                full = tensor_sum(setup, S, T, k)
                reduced = key_tensor(setup, ks, counts, T, k)
                assert list(full) == [common * x for x in reduced]


def test_key_decoding():
    setup = case_setup(so9_case())
    ks = key_space(setup)
    for key in (0, 517, 1786):
        counts, s = ks.decode(key)
        assert sum(c * r for c, r in zip(counts, ks.radix)) + s * ks.s_radix == key
        assert all(0 <= c <= cap for c, cap in zip(counts, ks.capacity))


def test_vanishing_depth_empty_signature():
    setup = case_setup(so9_case())
    ks = key_space(setup)
    # with no interacting roots the alternating sum over Sigma_L kills low degrees
    assert vanishing_depth(setup, ks, [0] * len(ks.kinds), 3) >= 1


@pytest.mark.parametrize("case", parameters("G2") + parameters("F4"),
                         ids=lambda c: f"{c.fixed_type}-{c.saturation}")
def test_small_rows(case):
    wl_type, m, k_bd = expected(case)
    v = verify_case(case)
    assert (v.wl_type, v.m, v.k_bd, v.status) == (wl_type, m, k_bd, "ok")
    rs = build_root_system(case.group)
    assert v.good_count + v.bad_count == weyl_group_order(rs.name[0], rs.rank) // v.wl_order


def test_witness_is_certified_exactly():
    setup = case_setup(so9_case())
    v = verify_case(setup)
    w = WeylElement.from_word(setup.rs, [i - 1 for i in v.witness["word"]])
    assert w.image == tuple(v.witness["w_rho"])
    scalar = certification_scalar(setup, w, v.witness["depth"] + 1)
    assert scalar != 0 and str(scalar) == v.witness["scalar"]
    assert v.m == v.witness["o"] + v.witness["depth"] + 1


def test_coset_from_orbit_point_is_minimal():
    setup = case_setup(so9_case())
    rs = setup.rs
    wl = subgroup_elements(rs, setup.sigma_l)
    base = tuple(0 if i in setup.sigma_l else 1 for i in range(rs.rank))
    w = WeylElement.from_word(rs, (2, 1, 2, 3))
    point = w.act(base)
    rep = coset_from_orbit_point(rs, point)
    assert rep.act(base) == point
    assert min((rep * u).length for u in wl) == rep.length


def test_g2_agrees_with_naive_oracle():
    case = parameters("G2")[0]
    setup = case_setup(case)
    v = verify_case(setup)
    m, k_bd, ok = naive_case(setup.rs, setup.lam0, setup.delta0, setup.sigma_l, 3)
    assert ok and (m, k_bd) == (v.m, v.k_bd)
