"""Exact root systems built from Bourbaki Cartan matrices.

Conventions: ``cartan[i][j] = <alpha_i, alpha_j^vee>``, so row ``i`` is the
simple root ``alpha_i`` written in fundamental-weight coordinates.  Weights
are tuples of exact rationals in fundamental-weight coordinates, roots are
integer tuples in simple-root coordinates and coroots are integer tuples in
simple-coroot coordinates.  Long roots have squared length 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
import re

Weight = tuple
Root = tuple[int, ...]

EXCEPTIONAL = ("G2", "F4", "E6", "E7", "E8")


def _chain(n, bonds=()):
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    for i in range(n - 1):
        c[i][i + 1] = c[i + 1][i] = -1
    for (i, j, v) in bonds:
        c[i][j] = v
    return c


def _e_series(n):
    c = [[0] * n for _ in range(n)]
    for i in range(n):
        c[i][i] = 2
    edges = [(0, 2), (1, 3), (2, 3)] + [(k, k + 1) for k in range(3, n - 1)]
    for (i, j) in edges:
        c[i][j] = c[j][i] = -1
    return c


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Bourbaki Cartan matrix of an irreducible type."""
    n = rank
    if family == "A" and n >= 1:
        return _chain(n)
    if family == "B" and n >= 1:
        return _chain(n, [(n - 2, n - 1, -2)]) if n >= 2 else [[2]]
    if family == "C" and n >= 1:
        return _chain(n, [(n - 1, n - 2, -2)]) if n >= 2 else [[2]]
    if family == "D" and n >= 3:
        c = _chain(n)
        c[n - 2][n - 1] = c[n - 1][n - 2] = 0
        c[n - 3][n - 1] = c[n - 1][n - 3] = -1
        return c
    if family == "E" and n in (6, 7, 8):
        return _e_series(n)
    if family == "F" and n == 4:
        return _chain(4, [(1, 2, -2)])
    if family == "G" and n == 2:
        # alpha_1 short, alpha_2 long
        return [[2, -1], [-3, 2]]
    raise ValueError(f"unknown root system type {family}{rank}")


def parse_type(type_id: str) -> tuple[str, int]:
    m = re.fullmatch(r"\s*([A-Ga-g])\s*_?\s*(\d+)\s*", type_id)
    if not m:
        raise ValueError(f"unknown root system type {type_id!r}")
    return m.group(1).upper(), int(m.group(2))


def invert_matrix(m):
    """Exact inverse of a square rational matrix (Gauss-Jordan)."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def solve_linear(m, rhs):
    """Exact solution x of m x = rhs for a square nonsingular m."""
    inv = invert_matrix(m)
    return [sum(inv[i][j] * rhs[j] for j in range(len(rhs))) for i in range(len(rhs))]


def _normalize(v):
    out = []
    for x in v:
        x = Fraction(x)
        out.append(int(x) if x.denominator == 1 else x)
    return tuple(out)


def symmetrizer(cartan) -> tuple[Fraction, ...]:
    """Squared lengths of the simple roots, longest scaled to 2 per component."""
    n = len(cartan)
    lengths: list[Fraction | None] = [None] * n
    for start in range(n):
        if lengths[start] is not None:
            continue
        comp = [start]
        lengths[start] = Fraction(1)
        k = 0
        while k < len(comp):
            i = comp[k]
            k += 1
            for j in range(n):
                if j != i and cartan[i][j] != 0 and lengths[j] is None:
                    # (a_i, a_j) symmetric: C[i][j] l_j = C[j][i] l_i
                    lengths[j] = lengths[i] * cartan[j][i] / cartan[i][j]
                    comp.append(j)
        top = max(lengths[i] for i in comp)
        for i in comp:
            lengths[i] = 2 * lengths[i] / top
    return tuple(lengths)


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A root system together with its exact weight-lattice data."""

    name: str
    cartan: tuple[tuple[int, ...], ...]
    lengths: tuple[Fraction, ...] = field(init=False)
    positive_roots: tuple[Root, ...] = field(init=False)

    def __post_init__(self):
        c = self.cartan
        r = len(c)
        for i in range(r):
            if c[i][i] != 2 or any(c[i][j] > 0 for j in range(r) if j != i):
                raise ValueError("not a Cartan matrix")
        object.__setattr__(self, "lengths", symmetrizer(c))
        object.__setattr__(self, "positive_roots", _close_roots(c))

    @property
    def rank(self) -> int:
        return len(self.cartan)

    # ---- roots -------------------------------------------------------
    @cached_property
    def simple_roots(self) -> tuple[Root, ...]:
        r = self.rank
        return tuple(tuple(int(i == j) for j in range(r)) for i in range(r))

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """Positive roots followed by their negatives."""
        return self.positive_roots + tuple(tuple(-x for x in a) for a in self.positive_roots)

    @cached_property
    def root_index(self) -> dict:
        return {a: k for k, a in enumerate(self.roots)}

    @cached_property
    def highest_root(self) -> Root:
        top = max(self.positive_roots, key=sum)
        if sum(1 for a in self.positive_roots if sum(a) == sum(top)) != 1:
            raise ValueError("highest root not unique (reducible system)")
        return top

    @property
    def marks(self) -> Root:
        return self.highest_root

    def root_length(self, a: Root) -> Fraction:
        return self.inner_roots(a, a)

    def is_long(self, a: Root) -> bool:
        return self.root_length(a) == max(self.lengths)

    def coroot(self, a: Root) -> Root:
        """alpha^vee = 2 alpha/(alpha, alpha) in simple-coroot coordinates."""
        la = self.root_length(a)
        out = []
        for ai, li in zip(a, self.lengths):
            x = Fraction(ai) * li / la
            if x.denominator != 1:
                raise ValueError("coroot is not integral")
            out.append(int(x))
        return tuple(out)

    @cached_property
    def positive_coroots(self) -> tuple[Root, ...]:
        return tuple(self.coroot(a) for a in self.positive_roots)

    def is_positive(self, a) -> bool:
        return any(x > 0 for x in a)

    # ---- weights -----------------------------------------------------
    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(int(i == j) for j in range(self.rank))

    @cached_property
    def fundamental_in_roots(self):
        """Row i: simple-root coordinates of the i-th fundamental weight."""
        return tuple(tuple(row) for row in invert_matrix(self.cartan))

    def root_to_weight(self, a) -> Weight:
        r = self.rank
        return _normalize(sum(Fraction(a[i]) * self.cartan[i][j] for i in range(r))
                          for j in range(r))

    def weight_to_roots(self, lam) -> tuple:
        r = self.rank
        fr = self.fundamental_in_roots
        return _normalize(sum(Fraction(lam[i]) * fr[i][j] for i in range(r))
                          for j in range(r))

    def weight_coordinates(self, lam) -> dict:
        self._check(lam)
        lam = _normalize(lam)
        return {"fundamental": lam, "simple_roots": self.weight_to_roots(lam),
                "is_dominant": all(x >= 0 for x in lam)}

    def pair(self, lam, coroot) -> Fraction | int:
        """<lam, coroot> for lam in fundamental and coroot in simple-coroot coordinates."""
        self._check(lam)
        self._check(coroot)
        return sum(x * y for x, y in zip(lam, coroot))

    def pair_root(self, lam, a: Root):
        """<lam, a^vee> for a root a in simple-root coordinates."""
        return self.pair(lam, self.coroot(a))

    def inner_roots(self, a, b) -> Fraction:
        """(a, b) for vectors in simple-root coordinates."""
        r = self.rank
        s = Fraction(0)
        for i in range(r):
            if a[i] == 0:
                continue
            for j in range(r):
                if b[j] and self.cartan[i][j]:
                    s += Fraction(a[i] * b[j] * self.cartan[i][j]) * self.lengths[j] / 2
        return s

    def inner(self, lam, mu) -> Fraction:
        """(lam, mu) for weights in fundamental coordinates."""
        return self.inner_roots(self.weight_to_roots(lam), self.weight_to_roots(mu))

    def reflect(self, lam, i: int) -> Weight:
        """s_i lam = lam - <lam, alpha_i^vee> alpha_i."""
        k = lam[i]
        if k == 0:
            return tuple(lam)
        row = self.cartan[i]
        return tuple(x - k * c for x, c in zip(lam, row))

    def reflect_root(self, a: Root, i: int) -> Root:
        k = sum(a[j] * self.cartan[j][i] for j in range(self.rank))
        if k == 0:
            return a
        return tuple(x - k * (j == i) for j, x in enumerate(a))

    def _check(self, v):
        if len(v) != self.rank:
            raise ValueError(f"vector of length {len(v)} does not belong to {self.name}")

    # ---- duality -----------------------------------------------------
    @cached_property
    def dual(self) -> "RootSystem":
        """The dual root system; its simple roots are our simple coroots."""
        r = self.rank
        return RootSystem(self.name + "^vee",
                          tuple(tuple(self.cartan[j][i] for j in range(r)) for i in range(r)))

    @cached_property
    def dual_numbering(self) -> tuple[int, ...]:
        """Own Bourbaki index -> our index, for the simple roots of the dual.

        For the self-dual exceptional diagrams of G2 and F4 the Bourbaki
        numbering of the dual system runs backwards.
        """
        if self.name in ("G2", "F4"):
            return tuple(reversed(range(self.rank)))
        return tuple(range(self.rank))

    def __repr__(self):
        return f"RootSystem({self.name})"


def _close_roots(cartan) -> tuple[Root, ...]:
    """All positive roots, as the closure of the simple roots under reflections."""
    r = len(cartan)
    seen = set()
    frontier = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    seen.update(frontier)
    while frontier:
        nxt = []
        for a in frontier:
            for i in range(r):
                k = sum(a[j] * cartan[j][i] for j in range(r))
                if k:
                    b = tuple(x - k * (j == i) for j, x in enumerate(a))
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
        frontier = nxt
    pos = [a for a in seen if all(x >= 0 for x in a)]
    pos.sort(key=lambda a: (sum(a), tuple(-x for x in a)))
    return tuple(pos)


_CACHE: dict[str, RootSystem] = {}


def build_root_system(type_id: str) -> RootSystem:
    family, rank = parse_type(type_id)
    name = f"{family}{rank}"
    if name not in _CACHE:
        c = cartan_matrix(family, rank)
        _CACHE[name] = RootSystem(name, tuple(tuple(row) for row in c))
    return _CACHE[name]


def from_cartan(cartan, name: str = "") -> RootSystem:
    return RootSystem(name or "custom", tuple(tuple(int(x) for x in row) for row in cartan))


def weyl_group_order(family: str, rank: int) -> int:
    from math import factorial
    n = rank
    if family == "A":
        return factorial(n + 1)
    if family in "BC":
        return 2 ** n * factorial(n)
    if family == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(family, n)]


@dataclass(frozen=True)
class Component:
    """An irreducible piece of a base, with its nodes in Bourbaki order."""

    family: str
    rank: int
    nodes: tuple[int, ...]
    short: bool = False

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}" + ("~" if self.short else "")

    @property
    def algebra(self) -> str:
        return lie_algebra_name(self.family, self.rank)


def lie_algebra_name(family: str, rank: int) -> str:
    n = rank
    if family == "A" or (family in "BC" and n == 1):
        return f"sl{n + 1}"
    if family == "B":
        return f"so{2 * n + 1}"
    if family == "C":
        return f"sp{2 * n}"
    if family == "D":
        return f"so{2 * n}"
    return f"{family.lower()}{n}"


def base_cartan(rs: RootSystem, base) -> list[list[int]]:
    """Cartan matrix <b_a, b_b^vee> of a list of roots of ``rs``."""
    ln = [rs.root_length(b) for b in base]
    out = []
    for a, ba in enumerate(base):
        row = []
        for b, bb in enumerate(base):
            x = 2 * rs.inner_roots(ba, bb) / ln[b]
            if x.denominator != 1:
                raise ValueError("base does not have an integral Cartan matrix")
            row.append(int(x))
        out.append(row)
    return out


def identify_cartan(cartan, lengths=None, ambient_long=None) -> list[Component]:
    """Split a Cartan matrix into irreducible components in Bourbaki order.

    ``lengths`` (squared root lengths) and ``ambient_long`` flag components
    made of short roots of the ambient system.
    """
    n = len(cartan)
    adj = {i: [j for j in range(n) if j != i and cartan[i][j]] for i in range(n)}
    seen = set()
    comps = []
    for s in range(n):
        if s in seen:
            continue
        comp, todo = [], [s]
        seen.add(s)
        while todo:
            i = todo.pop()
            comp.append(i)
            for j in adj[i]:
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        comps.append(_classify(sorted(comp), cartan, adj))
    if lengths is not None and ambient_long is not None:
        comps = [Component(c.family, c.rank, c.nodes,
                           c.family == "A" and all(lengths[i] < ambient_long for i in c.nodes))
                 for c in comps]
    comps.sort(key=lambda c: (-c.rank, "EDCBAGF".index(c.family) if c.family in "EDCBAGF" else 9,
                              c.short, c.nodes))
    return comps


def _path_from(start, adj, nodes):
    order = [start]
    prev = None
    while True:
        nxt = [j for j in adj[order[-1]] if j != prev and j in nodes]
        if not nxt:
            return order
        prev = order[-1]
        order.append(nxt[0])


def _classify(nodes, c, adj) -> Component:
    k = len(nodes)
    ns = set(nodes)
    if k == 1:
        return Component("A", 1, tuple(nodes))
    ends = [i for i in nodes if len(adj[i]) == 1]
    bonds = {(i, j): c[i][j] * c[j][i] for i in nodes for j in adj[i]}
    if any(v == 3 for v in bonds.values()):
        a, b = nodes
        # node 1 is the short one: <long, short^vee> = -3
        first = a if c[b][a] == -3 else b
        return Component("G", 2, (first, b if first == a else a))
    double = [(i, j) for (i, j), v in bonds.items() if v == 2]
    if double:
        i, j = double[0]
        if k == 2:
            # B2: node 2 short
            short = i if c[j][i] == -2 else j
            long_ = j if short == i else i
            return Component("B", 2, (long_, short))
        if k == 4 and all(len(adj[x]) == 2 for x in (i, j)):
            # <long, short^vee> = -2 picks the long middle node
            long_mid, short_mid = (i, j) if c[i][j] == -2 else (j, i)
            start = next(x for x in adj[long_mid] if x != short_mid)
            return Component("F", 4, tuple(_path_from(start, adj, ns)))
        end = i if len(adj[i]) == 1 else j
        other = j if end == i else i
        start = next(e for e in ends if e != end)
        order = _path_from(start, adj, ns)
        # end node short (c[other][end] = -2) gives B, long gives C
        fam = "B" if c[other][end] == -2 else "C"
        return Component(fam, k, tuple(order))
    branch = [i for i in nodes if len(adj[i]) == 3]
    if not branch:
        start = min(ends)
        return Component("A", k, tuple(_path_from(start, adj, ns)))
    b = branch[0]
    arms = []
    for x in adj[b]:
        arm = [x]
        prev = b
        while True:
            nxt = [y for y in adj[arm[-1]] if y != prev]
            if not nxt:
                break
            prev = arm[-1]
            arm.append(nxt[0])
        arms.append(arm)
    arms.sort(key=lambda a: (len(a), a))
    lens = [len(a) for a in arms]
    if lens[0] == 1 and lens[1] == 1:
        long_arm = arms[2]
        order = list(reversed(long_arm)) + [b, arms[0][0], arms[1][0]]
        return Component("D", k, tuple(order))
    if lens[0] == 1 and lens[1] == 2 and lens[2] in (2, 3, 4):
        two = arms[1]
        rest = arms[2]
        order = [two[1], arms[0][0], two[0], b] + rest
        return Component("E", k, tuple(order))
    raise ValueError("not a Dynkin diagram")


def identify_base(rs: RootSystem, base) -> list[Component]:
    """Components of the subsystem with simple system ``base`` (roots of ``rs``)."""
    c = base_cartan(rs, base)
    lengths = [rs.root_length(b) for b in base]
    return identify_cartan(c, lengths, max(rs.lengths))


def components_label(names) -> str:
    """Join component names, merging equal neighbours as in ``2A1``."""
    out = []
    for nm in names:
        if out and out[-1][1] == nm:
            out[-1][0] += 1
        else:
            out.append([1, nm])
    return "+".join((f"{k}{nm}" if k > 1 else nm) for k, nm in out)


def simple_system(rs: RootSystem, positive_subset) -> list[Root]:
    """Simple roots of the root subsystem whose positive roots are given.

    A positive root of the subsystem is simple iff its reflection keeps every
    other positive root of the subsystem positive.
    """
    pos = set(positive_subset)
    out = []
    for a in positive_subset:
        la = rs.root_length(a)
        ok = True
        for b in pos:
            if b == a:
                continue
            k = 2 * rs.inner_roots(b, a) / la
            if k > 0 and any(x < 0 for x in (bi - k * ai for bi, ai in zip(b, a))):
                ok = False
                break
        if ok:
            out.append(a)
    return out
