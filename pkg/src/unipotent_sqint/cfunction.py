"""Orders of rank-one c-functions at integers and their products over inversion sets.

``c(s) = Z(1-s)/Z(1+s)`` with ``Z(s) = pi^(-s/2) Gamma(s/2) zeta(s)``, and
``c(s, xi)`` is the same ratio of completed L-functions for a nontrivial
quadratic Dirichlet character.  Only the parity of ``chi o alpha^vee``
matters for orders at integers, so characters are carried as a boolean.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .rootsys import RootSystem
from .weyl import WeylElement, parity_action


def char_parity(rs: RootSystem, delta, coroot) -> bool:
    """True iff the character ``xi o delta`` restricted along ``coroot`` is nontrivial."""
    return rs.pair(delta, coroot) % 2 == 1


@dataclass(frozen=True)
class GermOrder:
    """Vanishing order of a germ (negative for a pole) and its value when order is 0 and known."""

    order: int
    value: int | None = None


def c_order_at_integer(n: int, nontrivial: bool) -> GermOrder:
    if nontrivial:
        return GermOrder(0, 1 if n == 0 else None)
    if n == 1:
        return GermOrder(-1)
    if n == -1:
        return GermOrder(1)
    if n == 0:
        return GermOrder(0, -1)
    return GermOrder(0)


@dataclass(frozen=True)
class FactorGerm:
    """One factor ``c(n + eps * slope, parity)`` of an inversion-set product."""

    base: int
    slope: Fraction
    nontrivial: bool
    coroot: tuple[int, ...]

    @property
    def order(self) -> int:
        return c_order_at_integer(self.base, self.nontrivial).order


def factor_germs(w: WeylElement, lam0, delta0, mu=None) -> list[FactorGerm]:
    rs = w.rs
    mu = rs.rho if mu is None else mu
    out = []
    for a in w.inversions():
        c = rs.coroot(a)
        slope = Fraction(rs.pair(mu, c))
        if slope == 0:
            raise ZeroDivisionError("deformation direction is orthogonal to an inversion")
        out.append(FactorGerm(int(rs.pair(lam0, c)), slope, char_parity(rs, delta0, c), c))
    return out


def pole_data(w: WeylElement, lam0, delta0) -> tuple[tuple, int]:
    """Roots contributing simple poles to ``c(w, lam0 + eps mu, chi)`` and minus their number."""
    rs = w.rs
    if any(x < 0 for x in lam0):
        raise ValueError("lambda0 must be dominant")
    s = tuple(a for a in w.inversions()
              if rs.pair(lam0, rs.coroot(a)) == 1 and not char_parity(rs, delta0, rs.coroot(a)))
    return s, -len(s)


class CMultiset:
    """Formal product of factors ``c(s, parity)`` with signed multiplicities.

    ``c(s) c(-s) = 1`` lets every factor be written with ``s >= 0``; at ``s = 0``
    only the sign ``c(0) = -1`` survives (``c(0, xi) = 1``).
    """

    def __init__(self):
        self.factors: Counter = Counter()
        self.sign = 1

    def add(self, s, nontrivial: bool, mult: int = 1) -> None:
        s = Fraction(s)
        if s == 0:
            if not nontrivial and mult % 2:
                self.sign = -self.sign
            return
        if s < 0:
            s, mult = -s, -mult
        self.factors[(s, nontrivial)] += mult
        if self.factors[(s, nontrivial)] == 0:
            del self.factors[(s, nontrivial)]

    def __mul__(self, other: "CMultiset") -> "CMultiset":
        out = CMultiset()
        out.factors = Counter(self.factors)
        out.sign = self.sign * other.sign
        for k, v in other.factors.items():
            out.factors[k] += v
            if out.factors[k] == 0:
                del out.factors[k]
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, CMultiset) and self.sign == other.sign and \
            dict(self.factors) == dict(other.factors)

    def difference(self, other: "CMultiset") -> dict:
        keys = set(self.factors) | set(other.factors)
        return {k: self.factors[k] - other.factors[k] for k in keys
                if self.factors[k] != other.factors[k]}

    def __repr__(self):
        return f"CMultiset(sign={self.sign}, {dict(self.factors)})"


def c_product(w: WeylElement, lam, delta) -> CMultiset:
    """``c(w, lam, chi)`` for ``chi = xi o delta`` as a formal product."""
    rs = w.rs
    out = CMultiset()
    for a in w.inversions():
        c = rs.coroot(a)
        out.add(rs.pair(lam, c), char_parity(rs, delta, c))
    return out


def cocycle_check(w1: WeylElement, w2: WeylElement, lam, delta):
    """Check ``c(w1 w2, lam, chi) = c(w1, w2 lam, w2 chi) c(w2, lam, chi)``.

    Returns ``(True, None)`` or ``(False, offending factors)``.
    """
    lhs = c_product(w1 * w2, lam, delta)
    rhs = c_product(w1, w2.act(lam), parity_action(w2, delta)) * c_product(w2, lam, delta)
    if lhs == rhs:
        return True, None
    diff = lhs.difference(rhs)
    if lhs.sign != rhs.sign:
        diff["sign"] = (lhs.sign, rhs.sign)
    return False, diff


# ---- numerics --------------------------------------------------------------

PRECISION_DIGITS = 30


def zeta_em(s, dps: int = PRECISION_DIGITS + 10):
    """Riemann zeta by Euler-Maclaurin summation, valid for all complex s != 1."""
    with mpmath.workdps(dps):
        s = mpmath.mpmathify(s)
        if s == 1:
            raise ZeroDivisionError("pole of zeta at s = 1")
        return _hurwitz_em(s, mpmath.mpf(1), dps)


def _hurwitz_em(s, a, dps):
    """sum_{n>=0} (n + a)^(-s) by Euler-Maclaurin with N terms and p Bernoulli corrections.

    At s = 1 the divergent tail integral is replaced by its finite part
    ``-log x``, which is what differences of such sums need.
    """
    p = dps + 10
    n_terms = int(abs(s)) + dps + 10
    total = mpmath.fsum((k + a) ** (-s) for k in range(n_terms))
    x = n_terms + a
    total += (-mpmath.log(x) if s == 1 else x ** (1 - s) / (s - 1)) + x ** (-s) / 2
    fall = s           # s (s+1) ... (s+2j-2)
    xp = x ** (-s - 1)
    for j in range(1, p + 1):
        term = mpmath.bernoulli(2 * j) / mpmath.factorial(2 * j) * fall * xp
        total += term
        fall *= (s + 2 * j - 1) * (s + 2 * j)
        xp /= x * x
    return total


def l_chi4(s, dps: int = PRECISION_DIGITS + 10):
    """L(s, chi_4) = 4^-s (zeta(s, 1/4) - zeta(s, 3/4)) with Euler-Maclaurin Hurwitz sums."""
    with mpmath.workdps(dps):
        s = mpmath.mpmathify(s)
        return 4 ** (-s) * (_hurwitz_em(s, mpmath.mpf(1) / 4, dps)
                            - _hurwitz_em(s, mpmath.mpf(3) / 4, dps))


def zeta_star(s, dps: int = PRECISION_DIGITS + 10):
    with mpmath.workdps(dps):
        s = mpmath.mpmathify(s)
        return mpmath.pi ** (-s / 2) * mpmath.gamma(s / 2) * zeta_em(s, dps)


def l_star_chi4(s, dps: int = PRECISION_DIGITS + 10):
    """Completed L-function of the odd character mod 4 (without the conductor power)."""
    with mpmath.workdps(dps):
        s = mpmath.mpmathify(s)
        return mpmath.pi ** (-(s + 1) / 2) * mpmath.gamma((s + 1) / 2) * l_chi4(s, dps)


def c_numeric(s, character: str = "trivial", dps: int = PRECISION_DIGITS + 10):
    """``c(s)`` or ``c(s, chi_4)`` as ``L*(1-s)/L*(1+s)``."""
    with mpmath.workdps(dps):
        s = mpmath.mpmathify(s)
        if abs(s) > 20:
            raise ValueError("|s| must be at most 20")
        if character == "trivial":
            return zeta_star(1 - s, dps) / zeta_star(1 + s, dps)
        if character == "mod4":
            return l_star_chi4(1 - s, dps) / l_star_chi4(1 + s, dps)
        raise ValueError(f"unknown character {character!r}")


def numeric_selftest(dps: int = PRECISION_DIGITS + 10) -> list[dict]:
    """Numerical checks of the analytic facts used for orders at integers."""
    out = []

    def check(name, expected, observed, tol):
        err = abs(observed - expected)
        out.append({"check": name, "expected": mpmath.nstr(expected, 25),
                    "observed": mpmath.nstr(observed, 25), "abs_error": float(err),
                    "tolerance": tol, "ok": bool(err <= tol)})

    with mpmath.workdps(dps):
        pi = mpmath.pi
        h = mpmath.mpf(10) ** (-12)
        check("zeta(2) = pi^2/6", pi ** 2 / 6, zeta_em(2, dps), 1e-28)
        check("L(1, chi_4) = pi/4", pi / 4, l_chi4(1, dps), 1e-28)
        check("c(0) = -1 (limit)", mpmath.mpf(-1), (c_numeric(h, dps=dps) + c_numeric(-h, dps=dps)) / 2,
              1e-10)
        check("residue of c at 1 = 6/pi", 6 / pi,
              (h * c_numeric(1 + h, dps=dps) - h * c_numeric(1 - h, dps=dps)) / 2, 1e-20)
        check("c'(-1) = -pi/6", -pi / 6,
              (c_numeric(-1 + h, dps=dps) - c_numeric(-1 - h, dps=dps)) / (2 * h), 1e-10)
        check("c(0, chi_4) = 1", mpmath.mpf(1), c_numeric(0, "mod4", dps), 1e-25)
        check("c(s) c(-s) = 1 at s = 0.37", mpmath.mpf(1),
              c_numeric("0.37", dps=dps) * c_numeric("-0.37", dps=dps), 1e-25)
        for t in ("0.5", "1", "3"):
            it = mpmath.mpc(0, mpmath.mpf(t))
            check(f"|c({t}i)| = 1", mpmath.mpf(1), abs(c_numeric(it, dps=dps)), 1e-20)
            check(f"|c({t}i, chi_4)| = 1", mpmath.mpf(1), abs(c_numeric(it, "mod4", dps)), 1e-20)
    return out
