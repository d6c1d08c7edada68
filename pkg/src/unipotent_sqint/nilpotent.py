"""Distinguished orbits of fixed subalgebras and the induced Arthur data.

For an involution whose fixed subalgebra has base ``{-theta^vee, alpha_j^vee}``
(coroots of the group), a distinguished orbit gives a weighted Dynkin
diagram on that base.  Solving ``<2 lam, beta> = d_beta`` yields ``lam`` and
``lambda1 = -lam``; moving ``lambda1`` into the dominant chamber gives
``lambda0``, whose doubled coordinates name the saturated orbit.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
import re

from .expected import row_position
from .involutions import OrderTwoClass, classify_order_two
from .orbit_data import DISTINGUISHED, DUAL_ORBITS
from .rootsys import (Component, RootSystem, build_root_system, identify_base,
                      solve_linear, EXCEPTIONAL)
from .weyl import dominantize_steps, long_element, parity_reflect


@dataclass(frozen=True)
class DistinguishedOrbit:
    label: str
    diagram: tuple[int, ...]   # over the base nodes, in base order


def distinct_part_partitions(n: int, parity: int) -> list[tuple[int, ...]]:
    """Partitions of n into distinct parts congruent to ``parity`` mod 2."""
    out = []

    def rec(rest, cap, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rest, cap), 0, -1):
            if p % 2 == parity:
                rec(rest - p, p - 1, acc + [p])
    rec(n, n, [])
    return out


def h_sequence(partition) -> list[int]:
    vals = []
    for p in partition:
        vals.extend(range(p - 1, -p, -2))
    return sorted(vals, reverse=True)


def classical_diagram(family: str, rank: int, partition) -> tuple[int, ...]:
    """Weighted Dynkin diagram of a nilpotent orbit given by its Jordan type."""
    h = h_sequence(partition)
    n = rank
    if family == "A":
        return tuple(h[i] - h[i + 1] for i in range(n))
    top = h[:n]
    diffs = [top[i] - top[i + 1] for i in range(n - 1)]
    if family == "B":
        return tuple(diffs + [top[-1]])
    if family == "C":
        return tuple(diffs + [2 * top[-1]])
    if family == "D":
        return tuple(diffs + [top[-2] + top[-1]])
    raise ValueError(family)


def component_orbits(family: str, rank: int) -> list[tuple[str, tuple[int, ...]]]:
    """Distinguished orbits of a simple algebra, diagrams in Bourbaki order."""
    name = f"{family}{rank}"
    if family == "A" or (family in "BC" and rank == 1):
        return [(f"[{rank + 1}]", (2,) * rank)]
    if family == "B":
        parts = distinct_part_partitions(2 * rank + 1, 1)
    elif family == "C":
        parts = distinct_part_partitions(2 * rank, 0)
    elif family == "D":
        parts = [p for p in distinct_part_partitions(2 * rank, 1)]
    elif name in DISTINGUISHED:
        return [(lab, tuple(int(c) for c in d)) for lab, d in DISTINGUISHED[name]]
    else:
        raise ValueError(f"unsupported subalgebra type {name}")
    return [("[" + ",".join(map(str, p)) + "]", classical_diagram(family, rank, p))
            for p in parts]


def distinguished_orbits(components, n_nodes: int | None = None) -> list[DistinguishedOrbit]:
    """Distinguished orbits of a semisimple algebra given by its components."""
    components = list(components)
    if n_nodes is None:
        n_nodes = sum(c.rank for c in components)
    lists = [component_orbits(c.family, c.rank) for c in components]
    out = []
    for pick in product(*lists):
        d = [0] * n_nodes
        labels = []
        for comp, (lab, diag) in zip(components, pick):
            for node, v in zip(comp.nodes, diag):
                d[node] = v
            labels.append(lab if lab.startswith("[") or lab[0] in "EFG"
                          else f"{comp.family}{comp.rank}{lab}")
        out.append(DistinguishedOrbit(" x ".join(labels), tuple(d)))
    return out


def parse_algebra(name: str) -> list[Component]:
    """Components of a product like ``e7+sl2`` or ``so16``, nodes numbered consecutively."""
    comps = []
    start = 0
    for part in name.split("+"):
        m = re.fullmatch(r"(sl|so|sp|e|f|g)(\d+)", part.strip())
        if not m:
            raise ValueError(f"unsupported subalgebra type {name}")
        kind, n = m.group(1), int(m.group(2))
        if kind == "sl":
            fam, r = "A", n - 1
        elif kind == "so":
            fam, r = ("B", (n - 1) // 2) if n % 2 else ("D", n // 2)
        elif kind == "sp":
            fam, r = "C", n // 2
        else:
            fam, r = kind.upper(), n
        if r < 1 or (fam == "D" and r < 3):
            raise ValueError(f"unsupported subalgebra type {name}")
        comps.append(Component(fam, r, tuple(range(start, start + r))))
        start += r
    return comps


def distinguished_orbits_of(name: str) -> list[DistinguishedOrbit]:
    return distinguished_orbits(parse_algebra(name))


@dataclass(frozen=True)
class SubalgebraEmbedding:
    group: str
    involution: OrderTwoClass
    base: tuple[tuple[int, ...], ...]   # coroots of the group
    k: int                              # position of minus the highest coroot
    tau: tuple[int | None, ...]         # base position -> simple coroot index
    components: tuple[Component, ...]

    @property
    def is_levi(self) -> bool:
        return self.involution.is_levi


def embedding_of(cls: OrderTwoClass) -> SubalgebraEmbedding:
    g = build_root_system(cls.group)
    dual = g.dual
    base = cls.base
    if cls.is_levi:
        raise ValueError(f"{cls.fixed_type} is a Levi subalgebra; no affine node is kept")
    k = next(i for i, b in enumerate(base) if all(x <= 0 for x in b))
    tau = tuple(None if i == k else b.index(1) for i, b in enumerate(base))
    comps = tuple(identify_base(dual, base))
    return SubalgebraEmbedding(cls.group, cls, base, k, tau, comps)


def lambda1_from_orbit(emb: SubalgebraEmbedding, orbit: DistinguishedOrbit):
    """``(lambda1, delta1)`` for a distinguished orbit of a non-Levi fixed subalgebra."""
    if emb.is_levi:
        raise ValueError("Levi fixed subalgebras give no distinguished parameter")
    x = solve_linear([list(b) for b in emb.base], [Fraction(v, 2) for v in orbit.diagram])
    lam = []
    for v in x:
        if v.denominator != 1:
            raise ValueError("non-integral weight: orientation or data error")
        lam.append(-int(v))
    r = len(lam)
    node = emb.involution.deleted[0]
    delta = tuple(int(j == node - 1) for j in range(r))
    return tuple(lam), delta


def stabilizer_parity_orbit(rs: RootSystem, lam0, delta) -> set:
    """Orbit of a parity weight under the stabilizer of the dominant ``lam0``."""
    gens = [i for i, x in enumerate(lam0) if x == 0]
    seen = {tuple(delta)}
    todo = [tuple(delta)]
    while todo:
        d = todo.pop()
        for i in gens:
            e = parity_reflect(rs, d, i)
            if e not in seen:
                seen.add(e)
                todo.append(e)
    return seen


@dataclass(frozen=True)
class ArthurCase:
    group: str
    fixed_type: str
    orbit_label: str              # label in the fixed subalgebra
    lambda1: tuple[int, ...]
    delta1: tuple[int, ...]
    lambda0: tuple[int, ...]
    delta0: tuple[int, ...]       # canonical representative
    delta0_greedy: tuple[int, ...]
    saturation: str
    deleted: tuple[int, ...]
    long_element_property: bool = field(default=True)

    def record(self) -> dict:
        return {"group": self.group, "fixed_type": self.fixed_type,
                "orbit_label": self.orbit_label, "lambda1": list(self.lambda1),
                "delta1": list(self.delta1), "lambda0": list(self.lambda0),
                "delta0": list(self.delta0), "saturation_label": self.saturation}


def saturation_label(group: str, lam0) -> str:
    diagram = "".join(str(2 * x) for x in lam0)
    hits = [lab for lab, d, _ in DUAL_ORBITS[group] if d == diagram]
    if len(hits) != 1:
        raise ValueError(f"no unique orbit with weighted diagram {diagram} in {group}")
    return hits[0]


def arthur_case(cls: OrderTwoClass, orbit: DistinguishedOrbit) -> ArthurCase:
    g = build_root_system(cls.group)
    emb = embedding_of(cls)
    lam1, delta1 = lambda1_from_orbit(emb, orbit)
    lam0, steps = dominantize_steps(g, lam1)
    d = delta1
    for i in steps:
        d = parity_reflect(g, d, i)
    canon = min(stabilizer_parity_orbit(g, lam0, d))
    lam_orbit = tuple(-x for x in lam1)
    prop = long_element(g).act(lam_orbit) == lam1
    return ArthurCase(cls.group, cls.fixed_type, orbit.label, lam1, delta1, lam0, canon, d,
                      saturation_label(cls.group, lam0), cls.deleted, prop)


def parameters(group: str) -> list[ArthurCase]:
    """All distinguished parameters with nontrivial involution for one group."""
    out = []
    for cls in classify_order_two(group):
        if cls.is_levi:
            continue
        emb = embedding_of(cls)
        for orb in distinguished_orbits(emb.components, len(emb.base)):
            out.append(arthur_case(cls, orb))
    out.sort(key=lambda c: (row_position(c.group, c.fixed_type, c.saturation), c.lambda0))
    return out


def parameter_table(groups=EXCEPTIONAL) -> list[ArthurCase]:
    out = []
    for g in groups:
        out.extend(parameters(g))
    return out
