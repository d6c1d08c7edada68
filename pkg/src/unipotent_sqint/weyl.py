"""Weyl group elements, reduced words, dominantization and coset enumeration.

An element ``w`` is stored as the weight ``w(rho)``; since rho is regular this
determines ``w``.  Words ``(i1, ..., ik)`` denote ``s_i1 s_i2 ... s_ik``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

from .rootsys import RootSystem, Weight


def apply_word(rs: RootSystem, word, lam) -> Weight:
    lam = tuple(lam)
    for i in reversed(word):
        lam = rs.reflect(lam, i)
    return lam


def descent_word(rs: RootSystem, image) -> tuple[int, ...]:
    """Lexicographically first reduced word of the element with ``w(rho) = image``."""
    v = tuple(image)
    word = []
    while True:
        i = next((k for k, x in enumerate(v) if x < 0), None)
        if i is None:
            break
        word.append(i)
        v = rs.reflect(v, i)
    if any(x != 1 for x in v):
        raise ValueError("not the image of rho under a Weyl element")
    return tuple(word)


@dataclass(frozen=True)
class WeylElement:
    rs: RootSystem
    image: Weight

    @classmethod
    def identity(cls, rs: RootSystem) -> "WeylElement":
        return cls(rs, rs.rho)

    @classmethod
    def from_word(cls, rs: RootSystem, word) -> "WeylElement":
        return cls(rs, apply_word(rs, word, rs.rho))

    @classmethod
    def reflection(cls, rs: RootSystem, i: int) -> "WeylElement":
        return cls.from_word(rs, (i,))

    @cached_property
    def word(self) -> tuple[int, ...]:
        return descent_word(self.rs, self.image)

    @property
    def length(self) -> int:
        return len(self.word)

    def inverse(self) -> "WeylElement":
        return WeylElement.from_word(self.rs, tuple(reversed(self.word)))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        if other.rs is not self.rs:
            raise ValueError("elements of different Weyl groups")
        return WeylElement(self.rs, apply_word(self.rs, self.word, other.image))

    def act(self, lam) -> Weight:
        return apply_word(self.rs, self.word, lam)

    def act_root(self, a):
        for i in reversed(self.word):
            a = self.rs.reflect_root(a, i)
        return a

    def inversions(self) -> tuple:
        """Positive roots sent negative, in the order of the reduced word."""
        return reduced_word_and_inversions(self)[1]

    def __repr__(self):
        return f"WeylElement({self.rs.name}, word={self.word})"


def apply_weyl(w: WeylElement, lam) -> Weight:
    w.rs._check(lam)
    return w.act(lam)


def long_element(rs: RootSystem) -> WeylElement:
    return WeylElement(rs, tuple(-x for x in rs.rho))


def reduced_word_and_inversions(w: WeylElement):
    """Reduced word ``w = s_b1 ... s_bl`` and the roots ``s_bl ... s_b(i+1) alpha_bi``.

    The returned inversion roots are in simple-root coordinates; apply
    ``rs.coroot`` for the corresponding coroots.
    """
    rs = w.rs
    word = w.word
    inv = []
    for k, b in enumerate(word):
        a = rs.simple_roots[b]
        for j in word[k + 1:]:
            a = rs.reflect_root(a, j)
        inv.append(a)
    return word, tuple(inv)


def dominantize(rs: RootSystem, lam):
    """Return ``(lam_dom, w)`` with ``lam = w lam_dom``.

    Greedy: reflect in the smallest simple index with negative pairing.
    """
    v = tuple(lam)
    steps = []
    while True:
        i = next((k for k, x in enumerate(v) if x < 0), None)
        if i is None:
            break
        steps.append(i)
        v = rs.reflect(v, i)
    return v, WeylElement.from_word(rs, tuple(steps))


def dominantize_steps(rs: RootSystem, lam):
    """As ``dominantize`` but returns the reflection sequence applied to ``lam``."""
    v = tuple(lam)
    steps = []
    while True:
        i = next((k for k, x in enumerate(v) if x < 0), None)
        if i is None:
            return v, tuple(steps)
        steps.append(i)
        v = rs.reflect(v, i)


def parity_reflect(rs: RootSystem, delta, i: int):
    k = delta[i] & 1
    if not k:
        return tuple(delta)
    return tuple((x - c) & 1 for x, c in zip(delta, rs.cartan[i]))


def parity_action(w: WeylElement, delta):
    d = tuple(x & 1 for x in delta)
    for i in reversed(w.word):
        d = parity_reflect(w.rs, d, i)
    return d


def subgroup_elements(rs: RootSystem, subset) -> list[WeylElement]:
    """All elements of the parabolic subgroup generated by ``subset``."""
    subset = sorted(subset)
    seen = {rs.rho}
    frontier = [rs.rho]
    while frontier:
        nxt = []
        for v in frontier:
            for i in subset:
                u = rs.reflect(v, i)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted((WeylElement(rs, v) for v in seen), key=lambda w: (w.length, w.word))


def all_elements(rs: RootSystem) -> list[WeylElement]:
    return subgroup_elements(rs, range(rs.rank))


@dataclass(frozen=True)
class CosetRep:
    word: tuple[int, ...]
    orbit_point: Weight   # w' applied to the sum of fundamental weights off Sigma_L
    lam0_image: Weight | None
    signature: tuple[bool, ...]


def coset_children(rs: RootSystem, mu):
    """Children of ``mu`` in the canonical spanning tree of its orbit.

    ``s_i mu`` is a child when ``mu_i > 0`` and ``i`` is the smallest index
    with negative pairing against ``s_i mu``.
    """
    c = rs.cartan
    r = rs.rank
    for i in range(r):
        k = mu[i]
        if k <= 0:
            continue
        row = c[i]
        if all(mu[j] - k * row[j] >= 0 for j in range(i)):
            yield i, tuple(x - k * cc for x, cc in zip(mu, row))


def enumerate_min_coset_reps(rs: RootSystem, sigma_l, lam0=None, designated=(),
                             prefix=()) -> Iterator[CosetRep]:
    """Visit each minimal representative of ``W / W(sigma_l)`` once.

    The traversal is a depth-first search of the orbit of
    ``sum of fundamental weights outside sigma_l``, whose stabilizer is
    ``W(sigma_l)``.  ``designated`` is a sequence of positive roots; the
    signature records which of them are inverted by ``w'``.  ``prefix``
    restricts the search to the subtree below the given child-index path.
    """
    sigma_l = set(sigma_l)
    r = rs.rank
    mu0 = tuple(0 if i in sigma_l else 1 for i in range(r))
    designated = tuple(designated)
    didx = {rs.root_index[a]: k for k, a in enumerate(designated)}

    # t[j] = index of w'^{-1} alpha_j; the new inversion at step s_i is t[i]
    add, neg = _root_tables(rs)
    t0 = tuple(rs.root_index[a] for a in rs.simple_roots)
    sig0 = (False,) * len(designated)
    lam = tuple(lam0) if lam0 is not None else None
    word: tuple[int, ...] = ()
    mu = mu0
    t = t0
    sig = sig0
    for i in prefix:
        kids = dict(coset_children(rs, mu))
        if i not in kids:
            return
        mu, t, sig, lam = _step(rs, i, kids[i], t, sig, lam, add, neg, didx)
        word = (i,) + word
    stack = [(mu, t, sig, lam, word)]
    while stack:
        mu, t, sig, lam, word = stack.pop()
        yield CosetRep(word, mu, lam, sig)
        kids = list(coset_children(rs, mu))
        for i, nmu in reversed(kids):
            nmu, nt, nsig, nlam = _step(rs, i, nmu, t, sig, lam, add, neg, didx)
            stack.append((nmu, nt, nsig, nlam, (i,) + word))


def _step(rs, i, nmu, t, sig, lam, add, neg, didx):
    c = rs.cartan
    ti = t[i]
    nt = list(t)
    for j in range(rs.rank):
        if j == i:
            nt[j] = neg[ti]
        elif c[j][i]:
            x = t[j]
            for _ in range(-c[j][i]):
                x = add[x][ti]
            nt[j] = x
    nsig = sig
    k = didx.get(ti)
    if k is not None:
        nsig = sig[:k] + (True,) + sig[k + 1:]
    nlam = rs.reflect(lam, i) if lam is not None else None
    return nmu, tuple(nt), nsig, nlam


_TABLES: dict = {}


def _root_tables(rs: RootSystem):
    """Addition table (index or -1) and negation table over all roots."""
    key = id(rs)
    if key not in _TABLES:
        roots = rs.roots
        idx = rs.root_index
        n = len(roots)
        add = [[-1] * n for _ in range(n)]
        for a in range(n):
            ra = roots[a]
            for b in range(n):
                s = tuple(x + y for x, y in zip(ra, roots[b]))
                add[a][b] = idx.get(s, -1)
        neg = [idx[tuple(-x for x in a)] for a in roots]
        _TABLES[key] = (rs, add, neg)
    return _TABLES[key][1], _TABLES[key][2]


def root_tables(rs: RootSystem):
    return _root_tables(rs)
