"""Nilpotent orbit tables from Levi subalgebras and distinguished parabolics.

Every nilpotent orbit is distinguished in a unique Levi up to conjugacy.  For
each subset ``J`` of simple roots and each distinguished 0/2 labeling of ``J``
we solve for the neutral element inside the Levi, move it to the dominant
chamber and read off the weighted Dynkin diagram.  This is used to check the
embedded orbit tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .rootsys import (RootSystem, cartan_matrix, from_cartan, identify_cartan,
                      solve_linear, components_label)


@dataclass(frozen=True)
class Orbit:
    label: str
    diagram: tuple[int, ...]
    dim: int


def root_values(rs: RootSystem, values):
    """alpha(h) for every positive root, where ``values`` are the simple-root values."""
    return [sum(a * v for a, v in zip(root, values)) for root in rs.positive_roots]


def orbit_dimension(rs: RootSystem, values) -> int:
    vals = root_values(rs, values)
    n0 = sum(1 for v in vals if v == 0)
    n1 = sum(1 for v in vals if v == 1)
    dim_g = rs.rank + 2 * len(vals)
    return dim_g - (rs.rank + 2 * n0) - n1


def is_distinguished(rs: RootSystem, labels) -> bool:
    """A 0/2 labeling is distinguished iff dim g_0 = dim g_2."""
    if any(x not in (0, 2) for x in labels):
        return False
    vals = root_values(rs, labels)
    return rs.rank + 2 * vals.count(0) == vals.count(2)


def distinguished_labelings(rs: RootSystem) -> list[tuple[int, ...]]:
    return [lab for lab in product((0, 2), repeat=rs.rank) if is_distinguished(rs, lab)]


def _sub_cartan(c, nodes):
    return [[c[i][j] for j in nodes] for i in nodes]


def dominant_values(rs: RootSystem, values):
    """Dominant representative of simple-root values under the Weyl group."""
    v = list(values)
    c = rs.cartan
    r = rs.rank
    while True:
        k = next((i for i in range(r) if v[i] < 0), None)
        if k is None:
            return tuple(v)
        x = v[k]
        # s_k h changes alpha_i(h) by -alpha_i(h_k) <alpha_k, .>: column k of C
        v = [v[i] - x * c[i][k] for i in range(r)]


def component_name(sub: RootSystem, fam: str, rank: int, labels, tie_rank: dict) -> str:
    """Name of a distinguished orbit in a simple component."""
    zeros = sum(1 for x in labels if x == 0)
    base = f"{fam}{rank}"
    if zeros == 0:
        return base
    letter = "a"
    peers = tie_rank.get(zeros)
    if peers and len(peers) > 1:
        # larger orbit dimension gets "a"
        dims = sorted(peers, reverse=True)
        letter = "ab"[dims.index(orbit_dimension(sub, labels))]
    return f"{base}({letter}{zeros})"


def bala_carter(rs: RootSystem) -> list[Orbit]:
    """All nilpotent orbits of the Lie algebra with root system ``rs``."""
    r = rs.rank
    c = rs.cartan
    long_len = max(rs.lengths)
    found: dict[tuple, tuple[str, int, str]] = {}
    comp_cache: dict = {}
    for size in range(r + 1):
        for J in combinations(range(r), size):
            sub_c = _sub_cartan(c, J)
            comps = identify_cartan(sub_c, [rs.lengths[j] for j in J], long_len)
            choices = []
            for comp in comps:
                nodes = comp.nodes
                key = (comp.family, comp.rank)
                if key not in comp_cache:
                    sub = from_cartan(cartan_matrix(comp.family, comp.rank))
                    labs = distinguished_labelings(sub)
                    ties: dict = {}
                    for lab in labs:
                        ties.setdefault(sum(1 for x in lab if x == 0), []).append(
                            orbit_dimension(sub, lab))
                    comp_cache[key] = [(lab, component_name(sub, comp.family, comp.rank, lab, ties))
                                       for lab in labs]
                tag = "~" if comp.short else ""
                choices.append([(nodes, lab, name.replace(f"{comp.family}{comp.rank}",
                                                          f"{comp.family}{comp.rank}{tag}", 1))
                                for lab, name in comp_cache[key]])
            for pick in product(*choices):
                d = [0] * r
                names = []
                for nodes, lab, name in pick:
                    for pos, val in zip(nodes, lab):
                        d[J[pos]] = val
                    names.append(name)
                values = _levi_values(c, J, d)
                dom = dominant_values(rs, values)
                if dom not in found:
                    label = components_label(names) or "0"
                    found[dom] = label
    # primes for repeated labels
    by_label: dict[str, list] = {}
    for dom, label in found.items():
        by_label.setdefault(label, []).append(dom)
    out = []
    for label, doms in by_label.items():
        if len(doms) == 1:
            out.append(Orbit(label, doms[0], orbit_dimension(rs, doms[0])))
            continue
        ranked = sorted(doms, key=lambda d: orbit_dimension(rs, d))
        for k, dom in enumerate(ranked):
            out.append(Orbit(f"({label})" + "'" * (len(ranked) - k), dom, orbit_dimension(rs, dom)))
    out.sort(key=lambda o: (o.dim, o.diagram))
    return out


def _levi_values(c, J, labels):
    """Simple-root values of the neutral element of a Levi labeling.

    ``h`` lies in the span of the coroots of ``J`` with ``alpha_j(h)`` given
    for ``j`` in ``J``.
    """
    r = len(c)
    if not J:
        return tuple([0] * r)
    m = [[c[i][j] for j in J] for i in J]
    x = solve_linear(m, [labels[j] for j in J])
    vals = []
    for i in range(r):
        v = sum(xj * c[i][j] for xj, j in zip(x, J))
        if v.denominator != 1:
            raise ValueError("non-integral neutral element")
        vals.append(int(v))
    return tuple(vals)
