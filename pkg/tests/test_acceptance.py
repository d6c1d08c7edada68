"""Acceptance criteria 1-10; each test records one pass/fail line in the terminal summary.

Timed criteria run in a fresh interpreter so that caches warmed by other
tests do not flatter the runtime.
"""

import json
import os
import random
import subprocess
import sys
import textwrap
import time
from itertools import combinations

import pytest

from oracles import naive_case, weyl_group_matrices, act
from unipotent_sqint.cfunction import cocycle_check, numeric_selftest
from unipotent_sqint.expected import INVOLUTIONS, PARAMETERS, VERIFICATION
from unipotent_sqint.nilpotent import parameters, stabilizer_parity_orbit
from unipotent_sqint.rootsys import build_root_system
from unipotent_sqint.sqint import case_setup, verify_case
from unipotent_sqint.weyl import WeylElement, all_elements, enumerate_min_coset_reps


def fresh(code: str) -> dict:
    """Run ``code`` in a new interpreter; it must print one JSON object."""
    res = subprocess.run([sys.executable, "-c", textwrap.dedent(code)],
                         capture_output=True, text=True, check=True)
    return json.loads(res.stdout.strip().splitlines()[-1])


def verification_rows(groups):
    return [r for r in VERIFICATION if r[0] in groups]


def verdict_tuple(v):
    return (v.group, v.fixed_type, v.orbit, v.wl_type, v.m, v.k_bd)


def test_criterion_1_involution_table(criterion):
    out = fresh("""
        import json, time
        from unipotent_sqint.involutions import involution_table, verify_torus_lift
        t = time.perf_counter()
        rows = involution_table()
        lifts = [verify_torus_lift(c).ok for c in rows]
        dt = time.perf_counter() - t
        print(json.dumps({"rows": [[c.group, c.fixed_type, c.is_levi, list(c.deleted)] for c in rows],
                          "lifts": lifts, "elapsed": dt}))
    """)
    want = [[g, f, levi, list(d)] for g, f, levi, d, _ in INVOLUTIONS]
    ok = out["rows"] == want and all(out["lifts"]) and out["elapsed"] < 1.0
    criterion(1, ok, f"{len(out['rows'])} classes, lifts {sum(out['lifts'])}/{len(out['lifts'])}, "
                     f"{out['elapsed']:.3f}s (limit 1s)")


def test_criterion_2_parameter_table(criterion):
    out = fresh("""
        import json, time
        from unipotent_sqint.nilpotent import parameter_table
        t = time.perf_counter()
        rows = parameter_table()
        dt = time.perf_counter() - t
        print(json.dumps({"rows": [[c.group, c.fixed_type, c.saturation, c.lambda1, c.delta1,
                                    c.lambda0, c.delta0] for c in rows], "elapsed": dt}))
    """)
    bad = []
    for got, want in zip(out["rows"], PARAMETERS):
        g, f, orbit, lam1, delta1, lam0, delta0 = want
        same = got[:3] == [g, f, orbit] and tuple(got[3]) == lam1 and tuple(got[4]) == delta1 \
            and tuple(got[5]) == lam0
        rs = build_root_system(g)
        same = same and delta0 in stabilizer_parity_orbit(rs, lam0, tuple(got[6]))
        if not same:
            bad.append(want[:3])
    ok = len(out["rows"]) == 21 and not bad and out["elapsed"] < 10
    criterion(2, ok, f"{len(out['rows'])} rows, {len(bad)} differ, {out['elapsed']:.2f}s (limit 10s)")


def test_criterion_3_small_groups(criterion):
    out = fresh("""
        import json, time
        from unipotent_sqint.nilpotent import parameters
        from unipotent_sqint.sqint import verify_case
        t = time.perf_counter()
        rows = []
        for g in ("G2", "F4", "E6"):
            for c in parameters(g):
                v = verify_case(c)
                rows.append([v.group, v.fixed_type, v.orbit, v.wl_type, v.m, v.k_bd, v.status])
        print(json.dumps({"rows": rows, "elapsed": time.perf_counter() - t}))
    """)
    want = [list(r) for r in verification_rows(("G2", "F4", "E6"))]
    got = [r[:6] for r in out["rows"]]
    ok = got == want and all(r[6] == "ok" for r in out["rows"]) and out["elapsed"] < 60
    summary = "; ".join(f"{r[2]}:{r[4]},{'NA' if r[5] is None else r[5]}" for r in got)
    criterion(3, ok, f"{summary}; {out['elapsed']:.2f}s (limit 60s)")


def test_criterion_4_e7(criterion):
    workers = min(8, os.cpu_count() or 1)
    t = time.perf_counter()
    got = [verdict_tuple(verify_case(c, workers=workers)) for c in parameters("E7")]
    dt = time.perf_counter() - t
    want = verification_rows(("E7",))
    ok = got == want and dt < 30 * 60
    criterion(4, ok, f"m/k_bd {[(g[4], g[5]) for g in got]}, {dt:.1f}s on {workers} workers "
                     f"(limit 30 min)")


@pytest.mark.extended
def test_criterion_5_e8(criterion, tmp_path):
    workers = max(1, os.cpu_count() or 1)
    t = time.perf_counter()
    got = []
    for c in parameters("E8"):
        ck = str(tmp_path / f"{c.fixed_type}_{c.saturation}.journal")
        v = verify_case(c, workers=workers, checkpoint=ck)
        got.append(verdict_tuple(v))
    dt = time.perf_counter() - t
    want = verification_rows(("E8",))
    bounds = all(m <= -8 - len(case_setup(c).sigma_l) for c, (*_, m, k) in zip(parameters("E8"), got)
                 if m is not None)
    ok = got == want and bounds and dt < 24 * 3600
    criterion(5, ok, f"{sum(g == w for g, w in zip(got, want))}/{len(want)} rows, "
                     f"{dt / 60:.1f} min on {workers} workers (limit 24 h)")


def test_criterion_6_bounds(criterion):
    checked, bad = 0, []
    for g in ("G2", "F4", "E6", "E7"):
        rs = build_root_system(g)
        for c in parameters(g):
            setup = case_setup(c)
            if not setup.supported:
                continue
            v = verify_case(setup)
            n = len(setup.sigma_l)
            checked += 1
            if v.m is None or v.m > -rs.rank - n:
                bad.append((g, c.saturation, "m"))
            if n and (v.k_bd is None or v.k_bd > n - 1):
                bad.append((g, c.saturation, "k_bd"))
    criterion(6, not bad and checked == 9, f"{checked} supported cases through E7, violations {bad}")


def test_criterion_7_cocycle(criterion):
    rng = random.Random(2024)
    g2 = build_root_system("G2")
    els = all_elements(g2)
    fails = 0
    pairs = 0
    for w1 in els:
        for w2 in els:
            pairs += 1
            for _ in range(10):
                lam = tuple(rng.randint(-6, 6) for _ in range(2))
                delta = tuple(rng.randint(0, 1) for _ in range(2))
                fails += not cocycle_check(w1, w2, lam, delta)[0]
    triples = {}
    for name in ("F4", "E6"):
        rs = build_root_system(name)
        for _ in range(1000):
            w1, w2 = (WeylElement.from_word(rs, [rng.randrange(rs.rank) for _ in range(rng.randrange(40))])
                      for _ in range(2))
            lam = tuple(rng.randint(-6, 6) for _ in range(rs.rank))
            delta = tuple(rng.randint(0, 1) for _ in range(rs.rank))
            fails += not cocycle_check(w1, w2, lam, delta)[0]
        triples[name] = 1000
    criterion(7, fails == 0 and pairs == 144,
              f"G2 {pairs} pairs x 10, F4/E6 {triples['F4']}/{triples['E6']} triples, {fails} failures")


def test_criterion_8_weyl_invariants(criterion):
    rng = random.Random(8)
    fails = 0
    for name in ("G2", "F4", "E6"):
        rs = build_root_system(name)
        for _ in range(1000):
            w = WeylElement.from_word(rs, [rng.randrange(rs.rank) for _ in range(rng.randrange(60))])
            inv = w.inversions()
            diff = rs.weight_to_roots(tuple(a - b for a, b in zip(rs.rho, w.inverse().act(rs.rho))))
            total = tuple(sum(c) for c in zip(*inv)) if inv else (0,) * rs.rank
            fails += w.length != len(inv) or tuple(diff) != total
    cosets = 0
    for name in ("G2", "F4"):
        rs = build_root_system(name)
        mats = weyl_group_matrices(rs.cartan)
        for k in range(rs.rank + 1):
            for sub in combinations(range(rs.rank), k):
                # the stabilizer of this weight is exactly W(sub)
                base = tuple(0 if i in sub else 1 for i in range(rs.rank))
                brute = len({act(m, base) for m in mats})
                walk = sum(1 for _ in enumerate_min_coset_reps(rs, sub))
                fails += brute != walk
                cosets += 1
    criterion(8, fails == 0, f"3000 random words, {cosets} parabolic quotients, {fails} failures")


def test_criterion_9_oracle(criterion):
    t = time.perf_counter()
    rows, bad = 0, []
    for g in ("G2", "F4"):
        for c in parameters(g):
            setup = case_setup(c)
            v = verify_case(setup)
            m, k_bd, ok = naive_case(setup.rs, setup.lam0, setup.delta0, setup.sigma_l, 3)
            rows += 1
            if not ok or (m, k_bd) != (v.m, v.k_bd):
                bad.append((g, c.fixed_type, c.saturation, (m, k_bd), (v.m, v.k_bd)))
    dt = time.perf_counter() - t
    criterion(9, not bad and dt < 300, f"{rows} cases agree with the full-W evaluation, "
                                       f"mismatches {bad}, {dt:.1f}s (limit 5 min)")


def test_criterion_10_numerics(criterion):
    t = time.perf_counter()
    results = numeric_selftest()
    dt = time.perf_counter() - t
    required = {"c(0) = -1 (limit)": 1e-10, "residue of c at 1 = 6/pi": 1e-20,
                "c'(-1) = -pi/6": 1e-10, "c(0, chi_4) = 1": 1e-20}
    by_name = {r["check"]: r for r in results}
    unit = [r for r in results if r["check"].startswith("|c(")]
    ok = all(n in by_name and by_name[n]["abs_error"] <= tol for n, tol in required.items())
    ok = ok and unit and all(r["abs_error"] <= 1e-20 for r in unit) and all(r["ok"] for r in results)
    worst = max(r["abs_error"] for r in results)
    criterion(10, ok and dt < 10, f"{len(results)} checks, worst error {worst:.1e}, {dt:.2f}s (limit 10s)")
