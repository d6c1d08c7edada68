"""Order-two elements of the adjoint dual groups via affine Dynkin diagrams.

The affine diagram of the dual Lie algebra has one extra node ``0`` for the
negative highest root; its simple nodes are the simple coroots of the group,
numbered as in the group.  Deleting one node of mark 2, or two nodes of mark
1, leaves a base of the fixed subalgebra of an involution.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .rootsys import (RootSystem, Root, base_cartan, build_root_system,
                      from_cartan, identify_base, simple_system, EXCEPTIONAL)

# torus lifts as exponents e_j of prod_j h_{alpha_j}(i^{e_j}), e_j in Z/4
TORUS_LIFTS = {
    ("G2", "sl2+sl2"): (2, 0),
    ("F4", "sp6+sl2"): (0, 2, 0, 2),
    ("F4", "so9"): (0, 0, 2, 0),
    ("E6", "so10+a"): (0, 2, 0, 0, 2, 0),
    ("E6", "sl6+sl2"): (2, 0, 0, 2, 0, 2),
    ("E7", "e6+a"): (2, 1, 0, 2, 3, 0, 1),
    ("E7", "sl8"): (0, 1, 0, 0, 3, 2, 1),
    ("E7", "so12+sl2"): (0, 2, 2, 0, 0, 0, 0),
    ("E8", "so16"): (0, 2, 2, 0, 0, 0, 0, 0),
    ("E8", "e7+sl2"): (0, 2, 0, 0, 2, 0, 2, 0),
}

# nontrivial central elements of the simply connected groups, same encoding
CENTER_EXPONENTS = {"E7": (0, 2, 0, 0, 2, 0, 2)}


@dataclass(frozen=True)
class AffineDiagram:
    rs: RootSystem            # the root system whose affine diagram this is
    base: tuple[Root, ...]    # node 0 is minus the highest root
    marks: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def nodes(self) -> range:
        return range(len(self.base))

    def neighbours(self, i: int) -> list[int]:
        return sorted({b for a, b in self.edges if a == i} | {a for a, b in self.edges if b == i})


def affine_diagram(rs: RootSystem) -> AffineDiagram:
    theta = rs.highest_root
    base = (tuple(-x for x in theta),) + rs.simple_roots
    edges = []
    for a, b in combinations(range(len(base)), 2):
        if rs.inner_roots(base[a], base[b]) != 0:
            edges.append((a, b))
    return AffineDiagram(rs, base, (1,) + tuple(theta), tuple(edges))


def dual_affine_diagram(type_id: str) -> AffineDiagram:
    """Affine diagram of the dual algebra, nodes numbered by our coroots."""
    return affine_diagram(build_root_system(type_id).dual)


@dataclass(frozen=True)
class OrderTwoClass:
    group: str
    deleted: tuple[int, ...]
    base: tuple[Root, ...]          # coroots of the group, simple-coroot coordinates
    fixed_type: str                 # e.g. "so9", "e7+sl2", "so10+a"
    components: tuple[str, ...]     # root-system types, e.g. ("B4",)
    is_levi: bool
    dimension: int
    conjugate_deletions: tuple[tuple[int, ...], ...] = ()
    lift: tuple[int, ...] | None = field(default=None, compare=False)

    def record(self) -> dict:
        return {"group": self.group, "fixed_type": self.fixed_type, "is_levi": self.is_levi,
                "deleted_nodes": list(self.deleted),
                "lift_exponents": list(self.lift) if self.lift is not None else None}


def _deletion_class(group: str, diag: AffineDiagram, deleted) -> OrderTwoClass:
    rs = diag.rs
    base = tuple(b for k, b in enumerate(diag.base) if k not in deleted)
    comps = identify_base(rs, base)
    levi = len(deleted) == 2
    label = "+".join(c.algebra for c in comps)
    if levi:
        label += "+a"
    # fixed subalgebra: Cartan plus the root spaces of the generated subsystem
    sub = from_cartan(base_cartan(rs, base)) if base else None
    n_pos = len(sub.positive_roots) if sub else 0
    return OrderTwoClass(group, tuple(deleted), base, label,
                         tuple(c.label.rstrip("~") for c in comps), levi,
                         rs.rank + 2 * n_pos)


def classify_order_two(type_id: str) -> list[OrderTwoClass]:
    """Involution classes of the adjoint dual group, one per fixed-subalgebra type."""
    g = build_root_system(type_id)
    if g.name not in EXCEPTIONAL:
        raise ValueError(f"{type_id} is not exceptional")
    diag = dual_affine_diagram(g.name)
    deletions = [(i,) for i in diag.nodes if diag.marks[i] == 2]
    ones = [i for i in diag.nodes if diag.marks[i] == 1]
    deletions += list(combinations(ones, 2))
    groups: dict[tuple, list] = {}
    for d in deletions:
        cls = _deletion_class(g.name, diag, d)
        groups.setdefault((cls.fixed_type, cls.is_levi), []).append(cls)
    out = []
    for (label, levi), members in groups.items():
        rep = min(members, key=_preference)
        lift = TORUS_LIFTS.get((g.name, label))
        out.append(OrderTwoClass(rep.group, rep.deleted, rep.base, rep.fixed_type,
                                 rep.components, rep.is_levi, rep.dimension,
                                 tuple(sorted(m.deleted for m in members)), lift))
    out.sort(key=lambda c: (not c.is_levi, c.dimension, c.deleted))
    return out


def _preference(cls: OrderTwoClass):
    d = cls.deleted
    if len(d) == 1:
        return (0, d[0])
    # pairs: prefer those containing node 0, then the farthest partner
    return (1, 0 not in d, -max(d))


def lift_root_exponent(rs: RootSystem, lift, root) -> int:
    """Exponent k such that the lift acts on the root space of ``root`` by i^k."""
    return sum(e * _pair_simple(rs, root, j) for j, e in enumerate(lift)) % 4


def _pair_simple(rs: RootSystem, root, j) -> int:
    """<root, alpha_j^vee> for a root in simple-root coordinates."""
    return sum(a * rs.cartan[i][j] for i, a in enumerate(root))


@dataclass
class LiftReport:
    ok: bool
    fixed_components: tuple[str, ...]
    fixed_type: str
    square_exponents: tuple[int, ...]
    square_central: bool
    message: str = ""


def verify_torus_lift(cls: OrderTwoClass, lift=None) -> LiftReport:
    """Check that the lift has order two in the adjoint group and fixes the claimed type."""
    g = build_root_system(cls.group)
    lift = cls.lift if lift is None else lift
    if lift is None:
        return LiftReport(False, (), "", (), False, "no torus lift recorded for this class")
    lift = tuple(lift)
    if len(lift) != g.rank:
        raise ValueError("lift has the wrong length")
    square = tuple((2 * e) % 4 for e in lift)
    fixed = []
    for a in g.positive_roots:
        k = lift_root_exponent(g, lift, a)
        if k % 2:
            return LiftReport(False, (), "", square, False,
                              f"root {a} is scaled by i^{k}, not by a sign")
        if k == 0:
            fixed.append(a)
    comps = identify_base(g, simple_system(g, fixed)) if fixed else []
    label = "+".join(c.algebra for c in comps)
    rank_fixed = sum(c.rank for c in comps)
    if rank_fixed < g.rank:
        label = (label + "+a") if label else "a"
    # the square acts on every root space by i^(2k) = 1 since k is even
    square_central = all(lift_root_exponent(g, square, a) == 0 for a in g.positive_roots)
    ok = label == cls.fixed_type and square_central
    msg = "" if ok else f"fixed subsystem {label or 'trivial'} differs from {cls.fixed_type}"
    return LiftReport(ok, tuple(c.label for c in comps), label, square, square_central, msg)


def involution_table(groups=EXCEPTIONAL) -> list[OrderTwoClass]:
    out = []
    for g in groups:
        out.extend(classify_order_two(g))
    return out
