"""The 4-vector representation Lambda, metric tables, the 16x16 R-matrix and
numeric spin-j representations of U_q(su2).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import tables
from .algebra import Element, has_momentum, monomial_word
from .linalg import equal, identity, inverse, matmul, transpose
from .scalars import ZERO
from .tables import (
    EPS_MIXED, EPS_UP, ETA_DOWN, ETA_UP, G_DOWN, G_UP, GEN_NAMES, KINV, LAMBDA_GEN,
    LORENTZ7, SPATIAL,
)

__all__ = [
    "MetricTables",
    "METRICS",
    "lambda_of",
    "lambda_word",
    "check_lambda",
    "rmatrix4",
    "rmatrix4_inverse",
    "check_rmatrix",
    "SpinRep",
    "spin_rep",
]

SMatrix = list  # list of rows of Scalars


@dataclass(frozen=True)
class MetricTables:
    g_up: SMatrix
    g_down: SMatrix
    eta_up: SMatrix
    eta_down: SMatrix
    eps_up: list
    eps_mixed: list

    def check(self) -> list[dict]:
        out = []
        g = matmul([[self.g_down[i][j] for j in SPATIAL] for i in SPATIAL],
                   [[self.g_up[i][j] for j in SPATIAL] for i in SPATIAL])
        out.append({"id": "metric.g_inverse", "ok": equal(g, identity(3)), "witness": ""})
        out.append({"id": "metric.eta_inverse",
                    "ok": equal(matmul(self.eta_down, self.eta_up), identity(4)), "witness": ""})
        ok = all(self.eta_up[a][b] == -self.g_up[a][b] for a in SPATIAL for b in SPATIAL)
        out.append({"id": "metric.eta_g_block", "ok": ok, "witness": ""})
        return out


METRICS = MetricTables(G_UP, G_DOWN, ETA_UP, ETA_DOWN, EPS_UP, EPS_MIXED)

_LAMBDA_CACHE: dict = {}


def lambda_word(word) -> SMatrix:
    """Product of generator matrices along a word of Lorentz generators."""
    out = identity(4)
    for g in word:
        if g not in LAMBDA_GEN:
            raise ValueError(f"Lambda is not defined on {GEN_NAMES[g]}")
        out = matmul(out, LAMBDA_GEN[g])
    return out


def _lambda_mono(m) -> SMatrix:
    hit = _LAMBDA_CACHE.get(m)
    if hit is None:
        hit = lambda_word(monomial_word(m))
        _LAMBDA_CACHE[m] = hit
    return hit


def lambda_of(h: Element) -> SMatrix:
    """Lambda(h) for h in the Lorentz subalgebra; entry [mu][nu] is Lambda^mu_nu."""
    out = [[ZERO] * 4 for _ in range(4)]
    for m, c in h.terms.items():
        if has_momentum(m):
            raise ValueError("Lambda is defined on the Lorentz subalgebra only")
        lm = _lambda_mono(m)
        for i in range(4):
            for j in range(4):
                if lm[i][j]:
                    out[i][j] = out[i][j] + c * lm[i][j]
    return out


def _lambda_poly(poly) -> SMatrix:
    out = [[ZERO] * 4 for _ in range(4)]
    for c, w in poly:
        lw = lambda_word(w)
        out = [[out[i][j] + c * lw[i][j] for j in range(4)] for i in range(4)]
    return out


def _star_matrix() -> SMatrix:
    """C with P_mu^* = P_nu C^nu_mu."""
    from .algebra import gen, star

    out = [[ZERO] * 4 for _ in range(4)]
    for mu, code in enumerate(tables.MOMENTA):
        img = star(gen(code))
        for m, c in img.terms.items():
            nu = tables.MOMENTA.index(monomial_word(m)[0])
            out[nu][mu] = c
    return out


def check_lambda() -> list[dict]:
    """Lambda respects the Lorentz relations, the metric law and the * law."""
    from .algebra import gen, star
    from .hopf import antipode
    from .relations import lorentz_relations

    results = []
    for rid, pairs in lorentz_relations().items():
        ok = all(equal(_lambda_poly(lhs), _lambda_poly(rhs)) for lhs, rhs in pairs)
        results.append({"id": f"lambda.relation.{rid}", "ok": ok, "witness": "" if ok else rid})

    # eta^{nu nu'} Lambda(h)^{mu'}_{nu'} eta_{mu' mu} = Lambda(S h)^nu_mu
    for g in LORENTZ7 + (KINV,):
        h = gen(g)
        lhs = matmul(matmul(ETA_UP, transpose(lambda_of(h))), ETA_DOWN)
        ok = equal(lhs, lambda_of(antipode(h)))
        results.append({"id": f"lambda.metric.{GEN_NAMES[g]}", "ok": ok,
                        "witness": "" if ok else GEN_NAMES[g]})

    # Lambda((S h)^*) = C Lambda(h) C^-1 with P_mu^* = P_nu C^nu_mu
    cmat = _star_matrix()
    cinv = inverse(cmat)
    for g in LORENTZ7 + (KINV,):
        h = gen(g)
        ok = equal(lambda_of(star(antipode(h))), matmul(matmul(cmat, lambda_of(h)), cinv))
        results.append({"id": f"lambda.star.{GEN_NAMES[g]}", "ok": ok,
                        "witness": "" if ok else GEN_NAMES[g]})
    return results


# -- the 16 x 16 R-matrix --------------------------------------------------------

_R_CACHE: dict = {}


def _pair(i: int, j: int) -> int:
    return 4 * i + j


def rmatrix4() -> SMatrix:
    """R^{mu nu}_{sigma tau} = Lambda((L+)^nu_tau)^mu_sigma, rows (mu,nu), cols (sigma,tau)."""
    if "R" not in _R_CACHE:
        from .pl import l_plus

        lp = l_plus()
        r = [[ZERO] * 16 for _ in range(16)]
        for nu in range(4):
            for tau in range(4):
                lam = lambda_of(lp[nu][tau])
                for mu in range(4):
                    for sigma in range(4):
                        r[_pair(mu, nu)][_pair(sigma, tau)] = lam[mu][sigma]
        _R_CACHE["R"] = r
    return _R_CACHE["R"]


def rmatrix4_inverse() -> SMatrix:
    """R^-1 read off from L-: (R^-1)^{mu alpha}_{nu beta} = Lambda((L-)^mu_nu)^alpha_beta."""
    if "Rinv" not in _R_CACHE:
        from .pl import l_minus

        lm = l_minus()
        r = [[ZERO] * 16 for _ in range(16)]
        for mu in range(4):
            for nu in range(4):
                lam = lambda_of(lm[mu][nu])
                for alpha in range(4):
                    for beta in range(4):
                        r[_pair(mu, alpha)][_pair(nu, beta)] = lam[alpha][beta]
        _R_CACHE["Rinv"] = r
    return _R_CACHE["Rinv"]


def _sparse(m) -> dict:
    return {(i, j): v for i, row in enumerate(m) for j, v in enumerate(row) if v}


def _sparse_mul(x: dict, y: dict) -> dict:
    by_row: dict = {}
    for (k, j), v in y.items():
        by_row.setdefault(k, []).append((j, v))
    out: dict = {}
    for (i, k), u in x.items():
        for j, v in by_row.get(k, ()):
            key = (i, j)
            s = out.get(key, ZERO) + u * v
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def _embed(r: SMatrix, which: str) -> dict:
    """R_12, R_13 or R_23 on the 64-dimensional triple tensor power."""
    rs = _sparse(r)
    out = {}
    for (row, col), v in rs.items():
        i, j = divmod(row, 4)
        l, m = divmod(col, 4)
        for k in range(4):
            if which == "12":
                key = (16 * i + 4 * j + k, 16 * l + 4 * m + k)
            elif which == "23":
                key = (16 * k + 4 * i + j, 16 * k + 4 * l + m)
            else:
                key = (16 * i + 4 * k + j, 16 * l + 4 * k + m)
            out[key] = v
    return out


def check_rmatrix() -> list[dict]:
    """QYBE, eta-invariance, R R^-1 = 1 and the momentum relations from R."""
    from .algebra import momentum

    r = rmatrix4()
    rinv = rmatrix4_inverse()
    results = []

    ok = equal(matmul(r, rinv), identity(16))
    results.append({"id": "rmatrix.inverse_from_lminus", "ok": ok, "witness": ""})
    rinv_direct = inverse(r)
    results.append({"id": "rmatrix.invertible", "ok": equal(rinv_direct, rinv), "witness": ""})

    r12, r13, r23 = _embed(r, "12"), _embed(r, "13"), _embed(r, "23")
    lhs = _sparse_mul(_sparse_mul(r12, r13), r23)
    rhs = _sparse_mul(_sparse_mul(r23, r13), r12)
    ok = lhs == rhs
    witness = "" if ok else str(next(k for k in set(lhs) | set(rhs) if lhs.get(k) != rhs.get(k)))
    results.append({"id": "rmatrix.qybe", "ok": ok, "witness": witness})

    # (R^-1)^{tau' nu'}_{nu tau} eta^{tau nu} = eta^{tau' nu'}
    bad = []
    for tp in range(4):
        for np_ in range(4):
            s = ZERO
            for nu in range(4):
                for tau in range(4):
                    if ETA_UP[tau][nu]:
                        s = s + rinv[_pair(tp, np_)][_pair(nu, tau)] * ETA_UP[tau][nu]
            if s != ETA_UP[tp][np_]:
                bad.append((tp, np_))
    results.append({"id": "rmatrix.eta_invariance", "ok": not bad, "witness": str(bad) if bad else ""})

    # P_mu P_nu R^{nu mu}_{sigma tau} = P_sigma P_tau
    ps = [momentum(i) for i in range(4)]
    for sigma in range(4):
        for tau in range(4):
            lhs_el = Element()
            for mu in range(4):
                for nu in range(4):
                    c = r[_pair(nu, mu)][_pair(sigma, tau)]
                    if c:
                        lhs_el = lhs_el + (ps[mu] * ps[nu]).scale(c)
            ok = lhs_el == ps[sigma] * ps[tau]
            idx = tables.IDX_NAMES
            results.append({"id": f"rmatrix.minkrel.{idx[sigma]}{idx[tau]}", "ok": ok,
                            "witness": "" if ok else str(lhs_el - ps[sigma] * ps[tau])})
    return results


# -- numeric spin-j representations --------------------------------------------------


def _qnum(n: float, q: float) -> float:
    return (q**n - q**-n) / (q - 1 / q)


@dataclass(frozen=True)
class SpinRep:
    """rho^j at a numeric q; basis |j,m> with m = j, j-1, ..., -j."""

    j: Fraction
    q: float
    E: np.ndarray
    F: np.ndarray
    K: np.ndarray

    @property
    def Kinv(self) -> np.ndarray:
        return np.linalg.inv(self.K)

    @property
    def W(self) -> np.ndarray:
        """K - lam [2]^-1 (q^-1 EF - q FE)."""
        q = self.q
        lam = q - 1 / q
        two = q + 1 / q
        return self.K - lam / two * (self.E @ self.F / q - q * self.F @ self.E)

    def residuals(self) -> dict[str, float]:
        q = self.q
        lam = q - 1 / q
        ef = self.E @ self.F - self.F @ self.E - (self.K - self.Kinv) / lam
        kek = self.K @ self.E @ self.Kinv - q**2 * self.E
        kfk = self.K @ self.F @ self.Kinv - q**-2 * self.F
        return {
            "EF": float(np.max(np.abs(ef))),
            "KEKinv": float(np.max(np.abs(kek))),
            "KFKinv": float(np.max(np.abs(kfk))),
        }


SUPPORTED_SPINS = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2))


def spin_rep(j, q: float) -> SpinRep:
    j = Fraction(j)
    if j not in SUPPORTED_SPINS:
        raise ValueError(f"unsupported spin {j}; expected one of 0, 1/2, 1, 3/2, 2")
    n = int(2 * j + 1)
    ms = [j - i for i in range(n)]
    e = np.zeros((n, n))
    f = np.zeros((n, n))
    k = np.zeros((n, n))
    for col, m in enumerate(ms):
        k[col, col] = q ** float(2 * m)
        if m < j:
            e[col - 1, col] = np.sqrt(_qnum(float(j - m), q) * _qnum(float(j + m + 1), q))
        if m > -j:
            f[col + 1, col] = np.sqrt(_qnum(float(j + m), q) * _qnum(float(j - m + 1), q))
    return SpinRep(j, q, e, f, k)


def w_value(j, q: float) -> float:
    """Eigenvalue of W on spin j from a highest-weight vector: q^2j - lam q^-1 [2j]/[2]."""
    j = float(j)
    if j == 0:
        return 1.0
    lam = q - 1 / q
    return q ** (2 * j) - lam / q * _qnum(2 * j, q) / (q + 1 / q)

