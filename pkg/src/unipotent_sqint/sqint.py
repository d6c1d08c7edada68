"""Square-integrability check of residual Eisenstein series by coset enumeration.

For a dominant ``lam0`` and parity weight ``delta0`` the constant term is
grouped by minimal coset representatives ``w'`` of ``W / W_L``.  Each coset
block has a pole of order ``#S(w')`` from the c-functions and may vanish to
some extra depth through cancellation over ``W_L``.  We look for an order
``m`` realized exactly by some coset with ``w' lam0`` strictly negative while
every other coset vanishes beyond ``m``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import prod

from .cosets import run_enumeration
from .nilpotent import ArthurCase, stabilizer_parity_orbit
from .rootsys import RootSystem, build_root_system, identify_base, identify_cartan, \
    simple_system, weyl_group_order
from .weyl import WeylElement, descent_word, parity_reflect, root_tables, subgroup_elements

MOD = 2147483647


@dataclass
class CaseSetup:
    rs: RootSystem
    lam0: tuple[int, ...]
    delta0: tuple[int, ...]
    sigma_prime: tuple[int, ...]
    sigma_l: tuple[int, ...]
    wl_order: int
    wl_type: str
    supported: bool
    reason: str
    p1: tuple[tuple[int, ...], ...]
    mu: tuple
    case: ArthurCase | None = None

    @property
    def subsets(self) -> list[tuple[int, ...]]:
        """Subsets of Sigma_L, indexed by bitmask."""
        s = self.sigma_l
        return [tuple(b for k, b in enumerate(s) if mask >> k & 1) for mask in range(1 << len(s))]


def _group_order(rs: RootSystem, nodes) -> int:
    nodes = list(nodes)
    if not nodes:
        return 1
    comps = identify_cartan([[rs.cartan[i][j] for j in nodes] for i in nodes])
    return prod(weyl_group_order(c.family, c.rank) for c in comps)


def sigma_l_of(lam0, delta0) -> tuple[int, ...]:
    return tuple(i for i, (x, d) in enumerate(zip(lam0, delta0)) if x == 0 and d % 2 == 0)


def wl_order(rs: RootSystem, lam0, delta0) -> int:
    """Order of the common stabilizer of ``lam0`` and ``delta0`` mod 2 (orbit-stabilizer)."""
    sp = [i for i, x in enumerate(lam0) if x == 0]
    orbit = stabilizer_parity_orbit(rs, lam0, delta0)
    return _group_order(rs, sp) // len(orbit)


def is_standard(rs: RootSystem, lam0, delta0) -> bool:
    return wl_order(rs, lam0, delta0) == _group_order(rs, sigma_l_of(lam0, delta0))


def standard_representative(rs: RootSystem, lam0, delta0):
    """Smallest parity weight in the stabilizer orbit whose W_L is a standard parabolic.

    Falls back to the smallest orbit element when no such representative exists.
    """
    orbit = sorted(stabilizer_parity_orbit(rs, lam0, delta0))
    for d in orbit:
        if is_standard(rs, lam0, d):
            return d
    return orbit[0]


def wl_reflection_type(rs: RootSystem, lam0, delta0) -> tuple[str, int]:
    """Type of the reflection subgroup of W_L and its order."""
    sp = set(i for i, x in enumerate(lam0) if x == 0)
    roots = [a for a in rs.positive_roots
             if all(a[i] == 0 for i in range(rs.rank) if i not in sp)
             and rs.pair(delta0, rs.coroot(a)) % 2 == 0]
    if not roots:
        return "1", 1
    comps = identify_base(rs, simple_system(rs, roots))
    order = prod(weyl_group_order(c.family, c.rank) for c in comps)
    return "x".join(c.label.rstrip("~") for c in comps), order


def wl_elements(setup: CaseSetup) -> list[WeylElement]:
    """All elements of W_L (by filtering the stabilizer of lam0)."""
    rs = setup.rs
    out = []
    for w in subgroup_elements(rs, setup.sigma_prime):
        d = tuple(setup.delta0)
        for i in reversed(w.word):
            d = parity_reflect(rs, d, i)
        if d == tuple(x % 2 for x in setup.delta0):
            out.append(w)
    return out


def case_setup(case: ArthurCase | None = None, *, group: str | None = None, lam0=None,
               delta0=None, mu=None, representative: str = "standard") -> CaseSetup:
    """Data of the coset computation for one case.

    ``representative`` picks delta0 in its stabilizer orbit: ``"standard"``
    prefers a choice for which W_L is generated by simple reflections,
    ``"given"`` uses delta0 as supplied.
    """
    if case is not None:
        group = group or case.group
        lam0 = case.lambda0 if lam0 is None else lam0
        delta0 = case.delta0 if delta0 is None else delta0
    rs = build_root_system(group)
    lam0 = tuple(lam0)
    delta0 = tuple(x % 2 for x in delta0)
    if any(x < 0 for x in lam0):
        raise ValueError("lambda0 must be dominant")
    if representative == "standard":
        delta0 = standard_representative(rs, lam0, delta0)
    sp = tuple(i for i, x in enumerate(lam0) if x == 0)
    sl = sigma_l_of(lam0, delta0)
    order = wl_order(rs, lam0, delta0)
    rtype, rorder = wl_reflection_type(rs, lam0, delta0)
    if rorder == order:
        wtype = rtype
    elif rtype == "1" and order == 2:
        wtype = "A1"
    else:
        wtype = f"order {order}"
    orthogonal = all(rs.cartan[i][j] == 0 for i, j in combinations(sl, 2))
    standard = order == _group_order(rs, sl)
    supported = standard and orthogonal
    if not standard:
        reason = "W_L is not generated by the simple reflections of Sigma_L"
    elif not orthogonal:
        reason = f"W_L of type {wtype} is not a product of commuting reflections"
    else:
        reason = ""
    p1 = tuple(a for a in rs.positive_roots
               if rs.pair(lam0, rs.coroot(a)) == 1 and rs.pair(delta0, rs.coroot(a)) % 2 == 0)
    return CaseSetup(rs, lam0, delta0, sp, sl, order, wtype, supported, reason, p1,
                     tuple(mu) if mu is not None else rs.rho, case)


def langlands_negative(rs: RootSystem, mu0) -> bool:
    """True iff every simple-root coefficient of ``mu0`` is negative."""
    return all(x < 0 for x in rs.weight_to_roots(mu0))


def reflect_subset(rs: RootSystem, lam, subset):
    for b in subset:
        lam = rs.reflect(lam, b)
    return lam


def tensor_sum(setup: CaseSetup, S, T, k: int, mu=None):
    """Sum over T <= S_L <= Sigma_L of (-1)^|S_L| prod_S <w_S_L mu, a^vee>^-1 (w_S_L mu)^(x k).

    ``S`` is a collection of positive roots; the result is a flat tuple of
    length ``r**k`` (fundamental-weight coordinates), exact.
    """
    rs = setup.rs
    mu = setup.mu if mu is None else tuple(mu)
    T = set(T)
    coroots = [rs.coroot(a) for a in S]
    r = rs.rank
    total = [Fraction(0)] * (r ** k)
    for sub in setup.subsets:
        if not T <= set(sub):
            continue
        u = reflect_subset(rs, mu, sub)
        p = Fraction(1)
        for c in coroots:
            v = rs.pair(u, c)
            if v == 0:
                raise ZeroDivisionError("zero denominator: deformation not in general position")
            p /= v
        if len(sub) % 2:
            p = -p
        for idx in range(r ** k):
            term = p
            x = idx
            for _ in range(k):
                term *= u[x % r]
                x //= r
            total[idx] += term
    return tuple(total)


# ---- kinds and keys ---------------------------------------------------------

@dataclass
class KeySpace:
    """Encoding of S(w') up to what the tests can see."""

    kinds: list[tuple]             # per kind: values <w_S mu, a^vee> over subsets S
    kind_of_root: dict             # P1 root -> kind index or -1 (no interaction)
    capacity: list[int]            # roots per kind
    radix: list[int]
    s_radix: int

    def decode(self, key: int) -> tuple[list[int], int]:
        counts = [(key // rd) % (cap + 1) for rd, cap in zip(self.radix, self.capacity)]
        return counts, key // self.s_radix


def key_space(setup: CaseSetup) -> KeySpace:
    rs = setup.rs
    us = [reflect_subset(rs, setup.mu, sub) for sub in setup.subsets]
    kinds: list[tuple] = []
    kind_of = {}
    cap: list[int] = []
    for a in setup.p1:
        c = rs.coroot(a)
        vals = tuple(rs.pair(u, c) for u in us)
        if any(v == 0 for v in vals):
            raise ZeroDivisionError("zero denominator: deformation not in general position")
        if len(set(vals)) == 1:
            kind_of[a] = -1
            continue
        if vals not in kinds:
            kinds.append(vals)
            cap.append(0)
        k = kinds.index(vals)
        kind_of[a] = k
        cap[k] += 1
    radix = []
    acc = 1
    for c in cap:
        radix.append(acc)
        acc *= c + 1
    if acc * (len(setup.p1) + 1) >= 1 << 62:
        raise OverflowError("signature space too large for 64-bit keys")
    return KeySpace(kinds, kind_of, cap, radix, acc)


def key_tensor(setup: CaseSetup, ks: KeySpace, counts, T, k: int):
    """``tensor_sum`` for a signature, dropping factors common to all subsets."""
    rs = setup.rs
    r = rs.rank
    T = set(T)
    total = [Fraction(0)] * (r ** k)
    for m, sub in enumerate(setup.subsets):
        if not T <= set(sub):
            continue
        u = reflect_subset(rs, setup.mu, sub)
        p = Fraction(1)
        for vals, n in zip(ks.kinds, counts):
            if n:
                p /= Fraction(vals[m]) ** n
        if len(sub) % 2:
            p = -p
        for idx in range(r ** k):
            term = p
            x = idx
            for _ in range(k):
                term *= u[x % r]
                x //= r
            total[idx] += term
    return total


def vanishing_depth(setup: CaseSetup, ks: KeySpace, counts, kmax: int) -> int:
    """Largest d <= kmax with all (T, k), |T| + k <= d, vanishing; -1 if none."""
    sl = setup.sigma_l
    d = -1
    for level in range(kmax + 1):
        for tsize in range(min(level, len(sl)) + 1):
            k = level - tsize
            for T in combinations(sl, tsize):
                if any(key_tensor(setup, ks, counts, T, k)):
                    return d
        d = level
    return d


# ---- kernel tables ------------------------------------------------------------

def _lcd(values) -> int:
    from math import lcm
    out = 1
    for v in values:
        out = lcm(out, Fraction(v).denominator)
    return out


def kernel_tables(setup: CaseSetup, ks: KeySpace, kmax: int) -> dict:
    rs = setup.rs
    add, neg = root_tables(rs)
    roots = rs.roots
    idx = rs.root_index
    r = rs.rank
    lam_c = rs.weight_to_roots(setup.lam0)
    cscale = _lcd(lam_c)
    # also scale the reflection increment (alpha_i has root coordinates e_i)
    kind = []
    npos = len(rs.positive_roots)
    for n, a in enumerate(roots):
        if n < npos and a in ks.kind_of_root:
            kind.append(ks.kind_of_root[a])
        else:
            kind.append(-2)
    us = [reflect_subset(rs, setup.mu, sub) for sub in setup.subsets]
    ipf = [[rs.inner(u, rs.root_to_weight(a)) for a in roots] for u in us]
    basef = [rs.inner(u, rs.rho) for u in us]
    iscale = _lcd([x for row in ipf for x in row] + basef)
    invval = [[pow(int(vals[m]) % MOD, MOD - 2, MOD) for vals in ks.kinds]
              for m in range(len(us))]
    return {
        "rank": r,
        "cartan": [list(row) for row in rs.cartan],
        "add": add,
        "neg": neg,
        "simple_idx": [idx[a] for a in rs.simple_roots],
        "mu0": [0 if i in setup.sigma_l else 1 for i in range(r)],
        "lam_f0": list(setup.lam0),
        "lam_c0": [int(x * cscale) for x in lam_c],
        "scale": cscale,
        "kind": kind,
        "radix": ks.radix or [0],
        "s_radix": ks.s_radix,
        "signs": [(-1) ** len(sub) for sub in setup.subsets],
        "invval": [row or [1] for row in invval],
        "ip": [[int(x * iscale) for x in row] for row in ipf],
        "base": [int(x * iscale) for x in basef],
        "levels": kmax + 2,
    }


# ---- verdict ----------------------------------------------------------------------

@dataclass
class CaseVerdict:
    group: str
    fixed_type: str
    orbit: str
    supported: bool
    sigma_l: tuple[int, ...]
    wl_order: int
    wl_type: str
    m: int | None = None
    k_bd: int | None = None
    status: str = "ok"
    good_count: int = 0
    bad_count: int = 0
    witness: dict | None = None
    bad_depths: dict = field(default_factory=dict)
    elapsed_sec: float = 0.0
    checkpoint: str | None = None
    delta0: tuple[int, ...] = ()
    kmax: int = 3
    metadata: dict = field(default_factory=dict)

    def record(self) -> dict:
        return {"group": self.group, "fixed_type": self.fixed_type, "orbit": self.orbit,
                "supported": self.supported, "sigma_L": [i + 1 for i in self.sigma_l],
                "wl_order": self.wl_order, "wl_type": self.wl_type, "m": self.m,
                "k_bd": self.k_bd, "status": self.status, "good_count": self.good_count,
                "bad_count": self.bad_count, "witness": self.witness,
                "elapsed_sec": round(self.elapsed_sec, 3)}


def coset_from_orbit_point(rs: RootSystem, mu) -> WeylElement:
    """The minimal representative w' with w'(sum of fundamental weights off Sigma_L) = mu."""
    word = []
    v = tuple(mu)
    while True:
        i = next((k for k, x in enumerate(v) if x < 0), None)
        if i is None:
            break
        word.append(i)
        v = rs.reflect(v, i)
    return WeylElement.from_word(rs, tuple(word))


def certification_scalar(setup: CaseSetup, w: WeylElement, level: int) -> Fraction:
    """sum_S (-1)^|S| prod_{a in S(w)} <w_S mu, a^vee>^-1 (w w_S mu, rho)^level, exactly."""
    rs = setup.rs
    inv = set(w.inversions())
    S = [a for a in setup.p1 if a in inv]
    total = Fraction(0)
    for sub in setup.subsets:
        u = reflect_subset(rs, setup.mu, sub)
        p = Fraction(1)
        for a in S:
            p /= rs.pair(u, rs.coroot(a))
        x = rs.inner(w.act(u), rs.rho)
        total += (-1) ** len(sub) * p * x ** level
    return total


def analyze(setup: CaseSetup, ks: KeySpace, agg: dict, kmax: int) -> dict:
    """Turn per-signature aggregates into m, k_bd and a status."""
    depth_cache: dict[int, int] = {}

    def depth(key):
        if key not in depth_cache:
            counts, _ = ks.decode(key)
            depth_cache[key] = vanishing_depth(setup, ks, counts, kmax)
        return depth_cache[key]

    best = None
    for key, (good, bad, mask, wit) in agg.items():
        if not good:
            continue
        d = depth(key)
        if mask >> (d + 1) & 1:
            _, s = ks.decode(key)
            order = -s + d + 1
            # among cosets realizing the least order prefer the largest pole
            cand = (order, -s, wit[d + 1], key, d)
            if best is None or cand[:3] < best[:3]:
                best = cand
    out = {"good": sum(v[0] for v in agg.values()), "bad": sum(v[1] for v in agg.values())}
    if best is None:
        out["status"] = "inconclusive"
        return out
    m, _, (length, point), wkey, d = best
    out["m"] = m
    needs = {}
    status = "ok"
    for key, (good, bad, mask, wit) in agg.items():
        if not bad:
            continue
        _, s = ks.decode(key)
        need = m + s          # depth required: o + d + 1 > m  <=>  d >= m - o
        dk = depth(key)
        needs[key] = (need, dk)
        if dk < need:
            status = "kmax exhausted" if dk >= kmax else "bad coset does not vanish"
    out["status"] = status
    if setup.sigma_l:
        # the witness is certified through its own depth, so it counts as well
        out["k_bd"] = max([0, d] + [n for n, _ in needs.values()])
    else:
        out["k_bd"] = None
    out["bad_depths"] = {str(k): {"o": -ks.decode(k)[1], "depth": v[1], "needed": v[0]}
                         for k, v in needs.items()}
    w = coset_from_orbit_point(setup.rs, point)
    exact = certification_scalar(setup, w, d + 1)
    if exact == 0:
        out["status"] = "inconclusive"
    out["witness"] = {"w_rho": list(w.image), "word": [i + 1 for i in w.word],
                      "o": -ks.decode(wkey)[1], "depth": d, "length": length,
                      "scalar": str(exact)}
    return out


def verify_case(case: ArthurCase | CaseSetup, kmax: int = 3, workers: int = 1,
                checkpoint: str | None = None, split_depth: int | None = None,
                backend: str | None = None, progress=None) -> CaseVerdict:
    """Run the coset enumeration for one case and certify m and k_bd."""
    t0 = time.time()
    setup = case if isinstance(case, CaseSetup) else case_setup(case)
    c = setup.case
    verdict = CaseVerdict(c.group if c else setup.rs.name, c.fixed_type if c else "",
                          c.saturation if c else "", setup.supported, setup.sigma_l,
                          setup.wl_order, setup.wl_type, delta0=setup.delta0, kmax=kmax)
    verdict.metadata = {"mu": list(setup.mu), "log_b": "rho", "delta0": list(setup.delta0)}
    if not setup.supported:
        verdict.status = "unsupported: " + setup.reason
        verdict.elapsed_sec = time.time() - t0
        return verdict
    ks = key_space(setup)
    tables = kernel_tables(setup, ks, kmax)
    agg, nodes = run_enumeration(setup.rs, tables, workers=workers, checkpoint=checkpoint,
                                 split_depth=split_depth, backend=backend, progress=progress)
    res = analyze(setup, ks, agg, kmax)
    verdict.good_count = res["good"]
    verdict.bad_count = res["bad"]
    verdict.m = res.get("m")
    verdict.k_bd = res.get("k_bd")
    verdict.status = res["status"]
    verdict.witness = res.get("witness")
    verdict.bad_depths = res.get("bad_depths", {})
    verdict.checkpoint = checkpoint
    verdict.metadata["cosets"] = nodes
    verdict.elapsed_sec = time.time() - t0
    return verdict
