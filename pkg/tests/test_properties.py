"""Randomised invariants over Weyl groups, pairings and the c-function cocycle."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from oracles import act, dominant_in_orbit, reflection_matrices
from unipotent_sqint.cfunction import CMultiset, c_product, cocycle_check
from unipotent_sqint.rootsys import build_root_system
from unipotent_sqint.weyl import WeylElement, dominantize, parity_action

SYSTEMS = {name: build_root_system(name) for name in ("G2", "F4", "E6")}


@st.composite
def element(draw, name, max_len=30):
    rs = SYSTEMS[name]
    word = draw(st.lists(st.integers(0, rs.rank - 1), max_size=max_len))
    return WeylElement.from_word(rs, word)


def weight(name, lo=-5, hi=5):
    return st.tuples(*[st.integers(lo, hi)] * SYSTEMS[name].rank)


def parity(name):
    return st.tuples(*[st.integers(0, 1)] * SYSTEMS[name].rank)


names = st.sampled_from(sorted(SYSTEMS))


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_length_equals_inversion_count(data):
    name = data.draw(names)
    w = data.draw(element(name))
    rs = SYSTEMS[name]
    inv = w.inversions()
    assert w.length == len(inv)
    diff = rs.weight_to_roots(tuple(a - b for a, b in zip(rs.rho, w.inverse().act(rs.rho))))
    assert tuple(diff) == tuple(sum(c) for c in zip(*inv)) if inv else not any(diff)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_action_agrees_with_reflection_matrices(data):
    name = data.draw(names)
    rs = SYSTEMS[name]
    word = data.draw(st.lists(st.integers(0, rs.rank - 1), max_size=20))
    lam = data.draw(weight(name))
    mats = reflection_matrices(rs.cartan)
    v = lam
    for i in reversed(word):
        v = act(mats[i], v)
    assert WeylElement.from_word(rs, word).act(lam) == v


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_pairing_is_weyl_invariant(data):
    name = data.draw(names)
    rs = SYSTEMS[name]
    w = data.draw(element(name))
    lam, mu = data.draw(weight(name)), data.draw(weight(name))
    assert rs.inner(w.act(lam), w.act(mu)) == rs.inner(lam, mu)
    for a in rs.positive_roots[:10]:
        assert rs.pair(w.act(lam), rs.coroot(w.act_root(a))) == rs.pair(lam, rs.coroot(a))


@settings(max_examples=40, deadline=None)
@given(weight("G2", -6, 6))
def test_dominantize_matches_orbit_search_g2(lam):
    rs = SYSTEMS["G2"]
    dom, w = dominantize(rs, lam)
    assert dom == dominant_in_orbit(rs.cartan, lam)
    assert w.act(dom) == lam


@settings(max_examples=15, deadline=None)
@given(weight("F4", -4, 4))
def test_dominantize_matches_orbit_search_f4(lam):
    assert dominantize(SYSTEMS["F4"], lam)[0] == dominant_in_orbit(SYSTEMS["F4"].cartan, lam)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_cocycle_identity(data):
    name = data.draw(names)
    w1, w2 = data.draw(element(name, 20)), data.draw(element(name, 20))
    lam, delta = data.draw(weight(name)), data.draw(parity(name))
    assert cocycle_check(w1, w2, lam, delta) == (True, None)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_c_of_inverse_inverts(data):
    """c(w^-1, w lam, w chi) c(w, lam, chi) = c(1) = 1."""
    name = data.draw(names)
    w = data.draw(element(name))
    lam, delta = data.draw(weight(name)), data.draw(parity(name))
    prod = c_product(w.inverse(), w.act(lam), parity_action(w, delta)) * c_product(w, lam, delta)
    assert prod == CMultiset()


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_parity_action_is_a_group_action(data):
    name = data.draw(names)
    w1, w2 = data.draw(element(name)), data.draw(element(name))
    delta = data.draw(parity(name))
    assert parity_action(w1 * w2, delta) == parity_action(w1, parity_action(w2, delta))


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_multiset_cancellation(data):
    items = data.draw(st.lists(st.tuples(st.integers(-6, 6), st.booleans()), max_size=12))
    m = CMultiset()
    for s, nt in items:
        m.add(Fraction(s), nt)
    for s, nt in items:
        m.add(Fraction(-s), nt)
    # each s = 0 trivial factor contributes -1 twice
    assert m == CMultiset()
