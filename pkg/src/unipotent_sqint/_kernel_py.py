"""Pure-Python coset kernel; mirrors the compiled ``_kernel`` module."""

from __future__ import annotations

MOD = 2147483647


class CosetKernel:
    """Depth-first walk over minimal coset representatives with per-key aggregates.

    ``tables`` is the dictionary produced by ``sqint.kernel_tables``.  Each
    visited coset ``w'`` contributes to the aggregate of its key (the pole
    signature of ``S(w')``): counts of good and bad cosets, a bitmask of the
    levels ``j`` at which some good coset has a nonzero certification scalar
    ``sum_S (-1)^|S| P_S(w') X_S(w')^j`` mod ``MOD``, and for each level the
    witness with the smallest ``(length, orbit point)``.
    """

    def __init__(self, tables: dict):
        t = tables
        self.r = int(t["rank"])
        self.cartan = [list(map(int, row)) for row in t["cartan"]]
        self.add = [list(map(int, row)) for row in t["add"]]
        self.neg = list(map(int, t["neg"]))
        self.simple_idx = list(map(int, t["simple_idx"]))
        self.mu0 = list(map(int, t["mu0"]))
        self.lam_f0 = list(map(int, t["lam_f0"]))
        self.lam_c0 = list(map(int, t["lam_c0"]))
        self.scale = int(t["scale"])
        self.kind = list(map(int, t["kind"]))
        self.radix = list(map(int, t["radix"]))
        self.s_radix = int(t["s_radix"])
        self.signs = list(map(int, t["signs"]))
        self.invval = [list(map(int, row)) for row in t["invval"]]
        self.ip = [list(map(int, row)) for row in t["ip"]]
        self.base = list(map(int, t["base"]))
        self.levels = int(t["levels"])
        self.nbr = [[j for j in range(self.r) if j != i and self.cartan[j][i]]
                    for i in range(self.r)]

    def _root_state(self):
        nl = len(self.signs)
        return (list(self.mu0), list(self.lam_f0), list(self.lam_c0),
                list(self.simple_idx), 0, [1] * nl, [0] * nl)

    def _step(self, state, i):
        mu, f, c, t, key, prod, acc = state
        cart = self.cartan
        k = mu[i]
        nmu = [x - k * cc for x, cc in zip(mu, cart[i])]
        fi = f[i]
        nf = [x - fi * cc for x, cc in zip(f, cart[i])]
        nc = list(c)
        nc[i] -= self.scale * fi
        ti = t[i]
        nt = list(t)
        nt[i] = self.neg[ti]
        for j in self.nbr[i]:
            x = t[j]
            for _ in range(-cart[j][i]):
                x = self.add[x][ti]
            nt[j] = x
        kd = self.kind[ti]
        nprod = prod
        if kd >= -1:
            key += self.s_radix
            if kd >= 0:
                key += self.radix[kd]
                nprod = [(p * row[kd]) % MOD for p, row in zip(prod, self.invval)]
        nacc = [a + row[ti] for a, row in zip(acc, self.ip)]
        return (nmu, nf, nc, nt, key, nprod, nacc)

    def _children(self, mu):
        cart = self.cartan
        for i in range(self.r):
            k = mu[i]
            if k > 0 and all(mu[j] - k * cart[i][j] >= 0 for j in range(i)):
                yield i

    def _visit(self, state, depth, agg):
        mu, f, c, t, key, prod, acc = state
        rec = agg.get(key)
        if rec is None:
            rec = agg[key] = [0, 0, 0, [None] * self.levels]
        if all(x < 0 for x in c):
            rec[0] += 1
            mask = 0
            xs = [(b - a) % MOD for b, a in zip(self.base, acc)]
            powers = [1] * len(xs)
            wit = rec[3]
            point = (depth, tuple(mu))
            for j in range(self.levels):
                s = 0
                for sg, p, xp in zip(self.signs, prod, powers):
                    s += sg * p * xp
                if s % MOD:
                    mask |= 1 << j
                    if wit[j] is None or point < wit[j]:
                        wit[j] = point
                powers = [(xp * x) % MOD for xp, x in zip(powers, xs)]
            rec[2] |= mask
        else:
            rec[1] += 1

    def run(self, prefix=(), stop_depth: int = -1):
        """Aggregate over the subtree below ``prefix``; ``stop_depth`` >= 0 limits the depth."""
        state = self._root_state()
        for i in prefix:
            state = self._step(state, i)
        agg: dict = {}
        nodes = 0
        stack = [(state, len(prefix))]
        while stack:
            st, depth = stack.pop()
            if 0 <= stop_depth <= depth:
                continue
            self._visit(st, depth, agg)
            nodes += 1
            for i in reversed(list(self._children(st[0]))):
                stack.append((self._step(st, i), depth + 1))
        return nodes, agg
