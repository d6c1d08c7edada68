# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, auto_pickle=False
# distutils: language = c++
"""Compiled coset kernel; same interface and results as ``_kernel_py``."""

from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

cdef enum:
    MAXR = 8
    MAXROOTS = 240
    MAXSUB = 16
    MAXLEV = 16
    MAXDEPTH = 128

cdef int64_t MOD = 2147483647

cdef struct Rec:
    int64_t good
    int64_t bad
    uint64_t mask
    int wdepth[MAXLEV]
    int wmu[MAXLEV][MAXR]


cdef class CosetKernel:
    cdef int r, nroots, nl, nkinds, levels
    cdef int64_t scale, s_radix
    cdef int cart[MAXR][MAXR]
    cdef int add[MAXROOTS][MAXROOTS]
    cdef int neg[MAXROOTS]
    cdef int simple_idx[MAXR]
    cdef int mu0[MAXR]
    cdef int64_t lam_f0[MAXR]
    cdef int64_t lam_c0[MAXR]
    cdef int kind[MAXROOTS]
    cdef vector[int64_t] radix
    cdef int signs[MAXSUB]
    cdef vector[int64_t] invval      # nl x nkinds
    cdef int64_t ip[MAXSUB][MAXROOTS]
    cdef int64_t base[MAXSUB]
    cdef int nbr[MAXR][MAXR]
    cdef int nnbr[MAXR]
    # DFS state per depth
    cdef int mu[MAXDEPTH][MAXR]
    cdef int64_t f[MAXDEPTH][MAXR]
    cdef int64_t c[MAXDEPTH][MAXR]
    cdef int t[MAXDEPTH][MAXR]
    cdef int64_t key[MAXDEPTH]
    cdef int64_t prod[MAXDEPTH][MAXSUB]
    cdef int64_t acc[MAXDEPTH][MAXSUB]

    def __init__(self, dict tables):
        cdef int i, j
        self.r = tables["rank"]
        self.nroots = len(tables["neg"])
        self.nl = len(tables["signs"])
        self.levels = tables["levels"]
        if self.r > MAXR or self.nroots > MAXROOTS or self.nl > MAXSUB or self.levels > MAXLEV:
            raise ValueError("tables exceed compiled kernel limits")
        self.scale = tables["scale"]
        self.s_radix = tables["s_radix"]
        for i in range(self.r):
            for j in range(self.r):
                self.cart[i][j] = tables["cartan"][i][j]
            self.simple_idx[i] = tables["simple_idx"][i]
            self.mu0[i] = tables["mu0"][i]
            self.lam_f0[i] = tables["lam_f0"][i]
            self.lam_c0[i] = tables["lam_c0"][i]
        for i in range(self.nroots):
            self.neg[i] = tables["neg"][i]
            self.kind[i] = tables["kind"][i]
            for j in range(self.nroots):
                self.add[i][j] = tables["add"][i][j]
        for x in tables["radix"]:
            self.radix.push_back(x)
        self.nkinds = len(tables["invval"][0])
        for i in range(self.nl):
            self.signs[i] = tables["signs"][i]
            self.base[i] = tables["base"][i]
            for x in tables["invval"][i]:
                self.invval.push_back(x)
            for j in range(self.nroots):
                self.ip[i][j] = tables["ip"][i][j]
        for i in range(self.r):
            self.nnbr[i] = 0
            for j in range(self.r):
                if j != i and self.cart[j][i] != 0:
                    self.nbr[i][self.nnbr[i]] = j
                    self.nnbr[i] += 1

    def run(self, prefix=(), int stop_depth=-1):
        """Aggregate over the subtree below ``prefix``; ``stop_depth`` >= 0 limits the depth."""
        cdef int r = self.r
        cdef int nl = self.nl
        cdef int npre = len(prefix)
        if npre + self.nroots // 2 + 1 >= MAXDEPTH:
            raise ValueError("prefix too long")
        cdef int nxt[MAXDEPTH]
        cdef unordered_map[int64_t, Rec] agg
        cdef int i, j, k, lev, d, m, ti, x, kd
        cdef int64_t nodes = 0
        for i in range(r):
            self.mu[0][i] = self.mu0[i]
            self.f[0][i] = self.lam_f0[i]
            self.c[0][i] = self.lam_c0[i]
            self.t[0][i] = self.simple_idx[i]
        self.key[0] = 0
        for m in range(nl):
            self.prod[0][m] = 1
            self.acc[0][m] = 0
        d = 0
        for i in prefix:
            self._step(d, i)
            d += 1
        cdef int start = d
        cdef int depth = npre
        nxt[d] = 0
        if not (0 <= stop_depth <= depth):
            self._visit(d, depth, agg)
            nodes += 1
        else:
            nxt[d] = r
        while d >= start:
            i = nxt[d]
            # find next child of self.mu[d]
            while i < r:
                k = self.mu[d][i]
                if k > 0:
                    for j in range(i):
                        if self.mu[d][j] - k * self.cart[i][j] < 0:
                            break
                    else:
                        break
                i += 1
            if i >= r:
                d -= 1
                continue
            nxt[d] = i + 1
            self._step(d, i)
            d += 1
            depth = npre + d - start
            if 0 <= stop_depth <= depth:
                d -= 1
                continue
            self._visit(d, depth, agg)
            nodes += 1
            nxt[d] = 0
        out = {}
        cdef Rec rec
        for item in agg:
            rec = item.second
            wits = []
            for lev in range(self.levels):
                if rec.wdepth[lev] < 0:
                    wits.append(None)
                else:
                    wits.append((rec.wdepth[lev], tuple(rec.wmu[lev][x] for x in range(r))))
            out[item.first] = [rec.good, rec.bad, rec.mask, wits]
        return nodes, out

    cdef inline void _step(self, int d, int i):
        cdef int r = self.r
        cdef int j, n, m, x, reps
        cdef int k = self.mu[d][i]
        cdef int64_t fi = self.f[d][i]
        cdef int ti = self.t[d][i]
        cdef int kd
        for j in range(r):
            self.mu[d + 1][j] = self.mu[d][j] - k * self.cart[i][j]
            self.f[d + 1][j] = self.f[d][j] - fi * self.cart[i][j]
            self.c[d + 1][j] = self.c[d][j]
            self.t[d + 1][j] = self.t[d][j]
        self.c[d + 1][i] -= self.scale * fi
        self.t[d + 1][i] = self.neg[ti]
        for n in range(self.nnbr[i]):
            j = self.nbr[i][n]
            x = self.t[d][j]
            reps = -self.cart[j][i]
            while reps > 0:
                x = self.add[x][ti]
                reps -= 1
            self.t[d + 1][j] = x
        kd = self.kind[ti]
        self.key[d + 1] = self.key[d]
        for m in range(self.nl):
            self.prod[d + 1][m] = self.prod[d][m]
            self.acc[d + 1][m] = self.acc[d][m] + self.ip[m][ti]
        if kd >= -1:
            self.key[d + 1] += self.s_radix
            if kd >= 0:
                self.key[d + 1] += self.radix[kd]
                for m in range(self.nl):
                    self.prod[d + 1][m] = (self.prod[d][m] * self.invval[m * self.nkinds + kd]) % MOD

    cdef inline void _visit(self, int d, int depth, unordered_map[int64_t, Rec] &agg):
        cdef int r = self.r
        cdef int *mu = self.mu[d]
        cdef int64_t *c = self.c[d]
        cdef int64_t key = self.key[d]
        cdef int64_t *prod = self.prod[d]
        cdef int64_t *acc = self.acc[d]
        cdef int i, m, lev
        cdef int64_t xs[MAXSUB]
        cdef int64_t pw[MAXSUB]
        cdef int64_t s, term
        cdef bint good = True
        cdef Rec *rec
        if agg.count(key) == 0:
            rec = &agg[key]
            rec.good = 0
            rec.bad = 0
            rec.mask = 0
            for lev in range(MAXLEV):
                rec.wdepth[lev] = -1
        rec = &agg[key]
        for i in range(r):
            if c[i] >= 0:
                good = False
                break
        if not good:
            rec.bad += 1
            return
        rec.good += 1
        for m in range(self.nl):
            xs[m] = ((self.base[m] - acc[m]) % MOD + MOD) % MOD
            pw[m] = 1
        for lev in range(self.levels):
            s = 0
            for m in range(self.nl):
                term = (prod[m] * pw[m]) % MOD
                if self.signs[m] > 0:
                    s += term
                else:
                    s += MOD - term
            if s % MOD != 0:
                rec.mask |= (<uint64_t>1) << lev
                if _wit_less(depth, mu, rec.wdepth[lev], rec.wmu[lev], r):
                    rec.wdepth[lev] = depth
                    for i in range(r):
                        rec.wmu[lev][i] = mu[i]
            for m in range(self.nl):
                pw[m] = (pw[m] * xs[m]) % MOD


cdef inline bint _wit_less(int depth, int *mu, int wdepth, int *wmu, int r):
    cdef int i
    if wdepth < 0 or depth < wdepth:
        return True
    if depth > wdepth:
        return False
    for i in range(r):
        if mu[i] != wmu[i]:
            return mu[i] < wmu[i]
    return False
