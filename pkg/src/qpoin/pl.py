"""L-matrices, the Sigma construction, the q-Pauli-Lubanski vector and the
spin Casimir.

Sigma is computed through the L-matrices: for a left 4-vector operator P_mu,
``Sigma_L(P_nu) = S^2(L^mu_nu) P_mu``.  Variant ``"I"`` uses L+ and variant
``"I21inv"`` uses L-.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element, commutator, gen, momentum, star
from .hopf import ad_right, antipode, antipode_inv
from .rep import lambda_of, spin_rep
from .scalars import BETA, LAM, ONE, P, POLE, Q, QINV, Scalar, Sqrt2Value, limit_q1
from .tables import (
    A, B, C, D, E, ETA_UP, F, G_UP, GEN_NAMES, IDX_NAMES, K, KINV, LORENTZ7, SPATIAL, TWO,
)

__all__ = [
    "HMatrix",
    "j_minus", "j_plus", "j_three", "casimir_w",
    "l_plus", "l_minus",
    "sigma",
    "PauliLubanski", "PLConstructionError", "pauli_lubanski",
    "w0_closed_form",
    "check_prop3", "check_pl1", "check_pl2", "check_w0",
    "check_classical_limit",
    "spin_casimir", "spin_casimir_simplified", "check_casimir",
    "check_lmatrix_identities", "eta_contraction",
    "check_negative_sigma", "check_prop1", "check_casimir_star",
]

HMatrix = list  # 4 x 4 rows of Element

VARIANTS = ("I", "I21inv")


# -- angular momentum and the Casimir W ----------------------------------------


def j_minus() -> Element:
    """J- = q [2]^(-1/2) K F."""
    return (gen(K) * gen(F)).scale(Q / BETA)


def j_plus() -> Element:
    """J+ = -[2]^(-1/2) E."""
    return gen(E).scale(-ONE / BETA)


def j_three() -> Element:
    """J3 = [2]^-1 (q^-1 EF - q FE)."""
    return (gen(E) * gen(F)).scale(QINV / TWO) - (gen(F) * gen(E)).scale(Q / TWO)


def casimir_w() -> Element:
    """W = K - lam J3."""
    return gen(K) - j_three().scale(LAM)


# -- L-matrices ------------------------------------------------------------------

_CACHE: dict = {}


def _cached(key, build):
    if key not in _CACHE:
        _CACHE[key] = build()
    return _CACHE[key]


def l_plus() -> HMatrix:
    def build():
        a, b, c, d = gen(A), gen(B), gen(C), gen(D)
        pb = P * BETA
        z, one = Element(), Element.one()
        return [
            [one, z, z, z],
            [z, a * a, b * b, (a * b).scale(pb)],
            [z, c * c, d * d, (c * d).scale(pb)],
            [z, (a * c).scale(pb), (b * d).scale(pb), one + (b * c).scale(TWO)],
        ]

    return _cached("l_plus", build)


def l_minus() -> HMatrix:
    def build():
        w, jm, jp, j3 = casimir_w(), j_minus(), j_plus(), j_three()
        kinv = gen(KINV)
        z, one = Element(), Element.one()
        kjm = (kinv * jm).scale(LAM)
        kjp = (kinv * jp).scale(LAM)
        row1 = jp.scale(-QINV * LAM)
        row2 = jm.scale(-Q * LAM)
        return [
            [w, kjm, kjp, w - kinv],
            [row1, one, z, row1],
            [row2, z, one, row2],
            [j3.scale(LAM), -kjm, -kjp, j3.scale(LAM) + kinv],
        ]

    return _cached("l_minus", build)


def _lmatrix(variant: str) -> HMatrix:
    if variant == "I":
        return l_plus()
    if variant == "I21inv":
        return l_minus()
    raise ValueError(f"unknown variant {variant!r}; expected one of {VARIANTS}")


def s2(h: Element) -> Element:
    return antipode(antipode(h))


def sigma(nu: int, variant: str = "I") -> Element:
    """Sigma(P_nu) = S^2(L^mu_nu) P_mu."""

    def build():
        lm = _lmatrix(variant)
        out = Element()
        for mu in range(4):
            if lm[mu][nu]:
                out = out + s2(lm[mu][nu]) * momentum(mu)
        return out

    return _cached(("sigma", nu, variant), build)


# -- the Pauli-Lubanski vector --------------------------------------------------


class PLConstructionError(ArithmeticError):
    """Sigma_I21inv - Sigma_I does not vanish at q = 1."""


def _specialize_q1(x: Element) -> dict | None:
    """Image at q = 1; None if some coefficient has a pole there.

    K = q^H and the boost coordinates tend to their counit values, so K, a, d
    map to 1 and b, c to 0.  E, F and the momenta are kept.
    """
    out: dict = {}
    for m, c in x.terms.items():
        if m[8] or m[9]:
            continue
        v = limit_q1(c)
        if v is POLE:
            return None
        if not isinstance(v, Sqrt2Value):
            v = Sqrt2Value(Fraction(v), Fraction(0))
        key = m[:5] + (0, m[6], 0, 0, 0, 0)
        r, s = out.get(key, (Fraction(0), Fraction(0)))
        out[key] = (r + v.rational, s + v.coeff)
    return {k: v for k, v in out.items() if v != (0, 0)}


def lambda_divisible(x: Element) -> bool:
    """True if x has no pole at q = 1 and vanishes there."""
    spec = _specialize_q1(x)
    return spec is not None and not spec


@dataclass(frozen=True)
class PauliLubanski:
    components: tuple

    def __getitem__(self, nu: int) -> Element:
        return self.components[nu]

    def __iter__(self):
        return iter(self.components)


def pauli_lubanski() -> PauliLubanski:
    """W_nu = lam^-1 [Sigma_I21inv(P_nu) - Sigma_I(P_nu)]."""

    def build():
        comps = []
        lam_inv = LAM.inverse()
        for nu in range(4):
            diff = sigma(nu, "I21inv") - sigma(nu, "I")
            if not lambda_divisible(diff):
                raise PLConstructionError(f"Sigma difference for index {IDX_NAMES[nu]} is not O(lam)")
            comps.append(diff.scale(lam_inv))
        return PauliLubanski(tuple(comps))

    return _cached("pl", build)


def w0_closed_form() -> Element:
    """lam^-1 (W - 1) P0 + J_A P_B g^{AB}."""
    js = {1: j_minus(), 2: j_plus(), 3: j_three()}
    out = (casimir_w() - 1).scale(LAM.inverse()) * momentum(0)
    for a in SPATIAL:
        for b in SPATIAL:
            if G_UP[a][b]:
                out = out + (js[a] * momentum(b)).scale(G_UP[a][b])
    return out


def _rec(cid: str, ok: bool, witness: str = "") -> dict:
    return {"id": cid, "ok": ok, "witness": "" if ok else witness}


def check_prop3() -> list[dict]:
    out = []
    for variant in VARIANTS:
        for nu in range(4):
            for mu in range(4):
                c = commutator(sigma(nu, variant), momentum(mu))
                out.append(_rec(f"prop3.{variant}.{IDX_NAMES[nu]}{IDX_NAMES[mu]}", c.is_zero(), str(c)))
    return out


def check_pl2() -> list[dict]:
    w = pauli_lubanski()
    out = []
    for nu in range(4):
        for mu in range(4):
            c = commutator(w[nu], momentum(mu))
            out.append(_rec(f"pl2.{IDX_NAMES[nu]}{IDX_NAMES[mu]}", c.is_zero(), str(c)))
    return out


def check_pl1() -> list[dict]:
    """ad_right(W_nu, h) = W_mu Lambda(S^-1 h)^mu_nu."""
    w = pauli_lubanski()
    out = []
    for g in LORENTZ7:
        h = gen(g)
        lam = lambda_of(antipode_inv(h))
        for nu in range(4):
            lhs = ad_right(w[nu], h)
            rhs = Element()
            for mu in range(4):
                if lam[mu][nu]:
                    rhs = rhs + w[mu].scale(lam[mu][nu])
            out.append(_rec(f"pl1.{GEN_NAMES[g]}.{IDX_NAMES[nu]}", lhs == rhs, str(lhs - rhs)))
    return out


def check_w0() -> list[dict]:
    out = []
    try:
        w = pauli_lubanski()
        out.append(_rec("pl.lambda_divisibility", True))
    except PLConstructionError as exc:
        return [_rec("pl.lambda_divisibility", False, str(exc))]
    diff = w[0] - w0_closed_form()
    out.append(_rec("pl.w0_closed_form", diff.is_zero(), str(diff)))
    return out


# -- q -> 1 limit ---------------------------------------------------------------

LIMIT_SPINS = (Fraction(1, 2), Fraction(1), Fraction(3, 2))
LIMIT_KS = (2, 3, 4, 5, 6)


def _loglog_slope(xs, ys) -> float:
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    num = sum((a - mx) * (b - my) for a, b in zip(lx, ly))
    den = sum((a - mx) ** 2 for a in lx)
    return num / den


def limit_series(j, ks=LIMIT_KS) -> list[tuple[float, float]]:
    """(q - 1, max |lam^-1 (rho^j(W) - 1)|) for q = 1 + 10^-k."""
    import numpy as np

    rows = []
    for k in ks:
        q = 1 + 10.0**-k
        rep = spin_rep(j, q)
        lam = q - 1 / q
        val = float(np.max(np.abs((rep.W - np.eye(rep.W.shape[0])) / lam)))
        rows.append((q - 1, val))
    return rows


def check_classical_limit(spins=LIMIT_SPINS, ks=LIMIT_KS, slope_tol: float = 0.1) -> list[dict]:
    out = []
    kk, kinv = gen(K), gen(KINV)
    lhs = (casimir_w() - 1).scale(LAM.inverse())
    rhs = (kk.scale(QINV) + kinv.scale(Q) - Element.scalar(TWO)).scale(ONE / (LAM * TWO)) + (
        gen(E) * gen(F)
    ).scale(LAM / TWO)
    out.append(_rec("limit.w_identity", lhs == rhs, str(lhs - rhs)))
    for j in spins:
        rows = limit_series(j, ks)
        slope = _loglog_slope([r[0] for r in rows], [r[1] for r in rows])
        ok = abs(slope - 1) <= slope_tol
        out.append(_rec(f"limit.slope.j={j}", ok, f"slope={slope:.4f}"))
    return out


# -- the spin Casimir -------------------------------------------------------------


def spin_casimir() -> Element:
    """Omega = eta^{tau nu} W_nu W_tau."""

    def build():
        w = pauli_lubanski()
        out = Element()
        for tau in range(4):
            for nu in range(4):
                if ETA_UP[tau][nu]:
                    out = out + (w[nu] * w[tau]).scale(ETA_UP[tau][nu])
        return out

    return _cached("omega", build)


def spin_casimir_simplified() -> Element:
    """2 lam^-2 S^2[eta^{sigma mu} - eta^{tau nu} (L+)^mu_nu (L-)^sigma_tau] P_sigma P_mu.

    The first term is 2 lam^-2 m^2.  With the index order eta^{mu sigma} the
    result is off by 2 (P0 P3 - P3^2); see :func:`eta_contraction`.
    """
    lp, lm = l_plus(), l_minus()
    out = Element()
    for mu in range(4):
        for sg in range(4):
            h = Element.scalar(ETA_UP[sg][mu])
            for tau in range(4):
                for nu in range(4):
                    e = ETA_UP[tau][nu]
                    if e and lp[mu][nu] and lm[sg][tau]:
                        h = h - (lp[mu][nu] * lm[sg][tau]).scale(e)
            if h:
                out = out + s2(h) * momentum(sg) * momentum(mu)
    return out.scale(Scalar(2) / (LAM * LAM))


ALL_GENERATORS = ("P0", "Pm", "Pp", "P3", "E", "F", "K", "a", "b", "c", "d")


def check_casimir() -> list[dict]:
    omega = spin_casimir()
    diff = omega - spin_casimir_simplified()
    out = [_rec("casimir.simplified", diff.is_zero(), str(diff))]
    for name in ALL_GENERATORS:
        c = commutator(omega, gen(name))
        out.append(_rec(f"casimir.central.{name}", c.is_zero(), str(c)))
    return out


def check_lmatrix_identities() -> list[dict]:
    lp, lm = l_plus(), l_minus()
    out = []
    # (i) mixed-order swap under the momentum relations
    mixed = {"-+": Element(), "+-": Element()}
    for mu in range(4):
        for sg in range(4):
            pp = momentum(sg) * momentum(mu)
            for tau in range(4):
                for nu in range(4):
                    e = ETA_UP[tau][nu]
                    if not e:
                        continue
                    if lm[mu][nu] and lp[sg][tau]:
                        mixed["-+"] = mixed["-+"] + (lm[mu][nu] * lp[sg][tau]).scale(e) * pp
                    if lp[mu][nu] and lm[sg][tau]:
                        mixed["+-"] = mixed["+-"] + (lp[mu][nu] * lm[sg][tau]).scale(e) * pp
    diff = mixed["-+"] - mixed["+-"]
    out.append(_rec("lmatrix.swap", diff.is_zero(), str(diff)))
    # (ii) eta^{tau nu} L^mu_nu L^sigma_tau = eta^{sigma mu}
    for sign in ("plus", "minus"):
        got = eta_contraction(sign)
        bad = [f"{IDX_NAMES[mu]}{IDX_NAMES[sg]}" for mu in range(4) for sg in range(4)
               if got[mu][sg] != Element.scalar(ETA_UP[sg][mu])]
        out.append(_rec(f"lmatrix.eta_contraction.{sign}", not bad, ",".join(bad)))
    return out


def eta_contraction(sign: str) -> HMatrix:
    """Entry [mu][sigma] is eta^{tau nu} L^mu_nu L^sigma_tau for L = L+ or L-.

    The result is the constant matrix eta^{sigma mu}; the 4-metric is not
    symmetric (eta^{-+} = q^-1, eta^{+-} = q), so the order matters.
    """
    lmat = l_plus() if sign == "plus" else l_minus()
    rows = []
    for mu in range(4):
        row = []
        for sg in range(4):
            h = Element()
            for tau in range(4):
                for nu in range(4):
                    e = ETA_UP[tau][nu]
                    if e and lmat[mu][nu] and lmat[sg][tau]:
                        h = h + (lmat[mu][nu] * lmat[sg][tau]).scale(e)
            row.append(h)
        rows.append(row)
    return rows


# -- controls and exploratory checks ------------------------------------------------


def sigma_without_s2(nu: int) -> Element:
    """Sigma'(P_nu) = (L+)^mu_nu P_mu, the left-transported combination."""
    lp = l_plus()
    out = Element()
    for mu in range(4):
        if lp[mu][nu]:
            out = out + lp[mu][nu] * momentum(mu)
    return out


def check_negative_sigma() -> list[dict]:
    """Passes when dropping S^2 breaks commutation with some momentum."""
    broken = []
    for nu in range(4):
        for mu in range(4):
            if not commutator(sigma_without_s2(nu), momentum(mu)).is_zero():
                broken.append(f"{IDX_NAMES[nu]}{IDX_NAMES[mu]}")
    return [_rec("negative.sigma_without_s2", bool(broken), "all 16 commutators vanish")]


def check_prop1() -> list[dict]:
    """The centralizer of the momenta is stable under ad_right; instance a = W_0."""
    w0 = pauli_lubanski()[0]
    out = []
    for g in LORENTZ7:
        x = ad_right(w0, gen(g))
        ok = all(commutator(x, momentum(mu)).is_zero() for mu in range(4))
        out.append(_rec(f"prop1.W0.{GEN_NAMES[g]}", ok, GEN_NAMES[g]))
    return out


def check_casimir_star() -> dict:
    """Exploratory: is Omega fixed by *?  Reported, not asserted."""
    omega = spin_casimir()
    diff = star(omega) - omega
    return {"id": "casimir.star_exploratory", "ok": diff.is_zero(), "witness": "" if diff.is_zero() else str(diff)}

