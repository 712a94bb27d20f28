"""Momentum characters, the map hat-chi and the massive and massless little
algebras.

hat-chi is defined on the H-left form sum h_i x_i.  Normal forms here are
X-left, so each term x h is first rewritten with

    x h = h_(2) (S^-1(h_(1)) |> x)

which follows from h x = (h_(1) |> x) h_(2).  Substituting chi directly into
the X-left form gives a different map whenever h does not act trivially on x
(e.g. for boosts in the massless case).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import UNIT, Element, gen, momentum, monomial_word, star
from .hopf import TensorElement, antipode_inv, coproduct, module_action
from .pl import casimir_w, j_minus, j_plus, l_plus, pauli_lubanski
from .relations import momentum_relations
from .scalars import BETA, LAM, ONE, P, Q, QINV, ZERO, Scalar, eval_numeric, qpow
from .tables import E, EPS_UP, F, G_UP, IDX_NAMES, K, KINV, MOMENTA, SPATIAL, TWO, WEIGHT

__all__ = [
    "InvalidCharacterError",
    "MomentumCharacter",
    "CharacterFamily",
    "classify_characters",
    "classify",
    "fuzz_invalid_characters",
    "in_families",
    "hat_chi",
    "hat_chi_naive",
    "LittleAlgebraReport",
    "little_algebra_massive",
    "little_algebra_massless",
    "massive_expected",
    "massless_expected",
    "sphere_generators",
]


class InvalidCharacterError(ValueError):
    """The tuple is not a one-dimensional *-representation with real mass."""


@dataclass(frozen=True)
class MomentumCharacter:
    """chi(P_mu) = p_mu, stored in basis order (0, -, +, 3)."""

    p0: Scalar
    pm: Scalar
    pp: Scalar
    p3: Scalar

    @classmethod
    def of(cls, p0, pm, pp, p3) -> MomentumCharacter:
        return cls(*(Scalar.coerce(v) for v in (p0, pm, pp, p3)))

    @property
    def values(self) -> tuple:
        return (self.p0, self.pm, self.pp, self.p3)

    def mass_squared(self) -> Scalar:
        """p0^2 + q^-1 p- p+ + q p+ p- - p3^2."""
        return self.p0 * self.p0 + (QINV + Q) * self.pm * self.pp - self.p3 * self.p3

    def evaluate(self, x: Element) -> Scalar:
        """chi on a momentum-algebra element (the values commute)."""
        if not x.in_momentum():
            raise ValueError("chi is defined on the momentum algebra only")
        total = ZERO
        for m, c in x.terms.items():
            v = c
            for g in monomial_word(m):
                v = v * self.values[MOMENTA.index(g)]
            total = total + v
        return total

    def relation_defects(self) -> dict[str, Scalar]:
        """chi applied to lhs - rhs of every momentum relation."""
        out = {}
        for rid, pairs in momentum_relations().items():
            d = ZERO
            for lhs, rhs in pairs:
                for sign, poly in ((ONE, lhs), (-ONE, rhs)):
                    for c, w in poly:
                        v = sign * c
                        for g in w:
                            v = v * self.values[MOMENTA.index(g)]
                        d = d + v
            out[rid] = d
        return out

    def is_star_compatible(self) -> bool:
        """p0, p3 real (automatic for real q) and p+ = -q p-."""
        return self.pp == -Q * self.pm


def classify(p: MomentumCharacter) -> str:
    """'massive' or 'massless', or raise InvalidCharacterError."""
    bad = [rid for rid, d in p.relation_defects().items() if d]
    if bad:
        raise InvalidCharacterError(f"not an algebra map: violates {', '.join(bad)}")
    if not p.is_star_compatible():
        raise InvalidCharacterError("not a *-map: p+ != -q p-")
    if p.p0 != p.p3:
        # p_A (p0 - p3) = 0 already forced p_A = 0, so p0 = +-m with m > 0
        return "massive"
    if p.pm or p.pp:
        raise InvalidCharacterError("p0 = p3 with p- != 0 has negative mass squared")
    return "massless"


@dataclass(frozen=True)
class CharacterFamily:
    name: str
    template: str
    mass_squared: str
    build: object = field(repr=False, compare=False)

    def __call__(self, t) -> MomentumCharacter:
        return self.build(t)


def classify_characters() -> list[CharacterFamily]:
    """The two families of *-characters with real mass."""
    return [
        CharacterFamily("massive", "(+-m, 0, 0, 0), m > 0", "m^2",
                        lambda m: MomentumCharacter.of(m, 0, 0, 0)),
        CharacterFamily("massless", "(k, 0, 0, k), k real", "0",
                        lambda k: MomentumCharacter.of(k, 0, 0, k)),
    ]


def in_families(p: MomentumCharacter) -> bool:
    """Membership in (+-m,0,0,0), m > 0, or (k,0,0,k), read off the templates."""
    if p.pm or p.pp:
        return False
    return p.p0 == p.p3 or (not p.p3 and bool(p.p0))


def fuzz_invalid_characters(seed: int = 0, count: int = 10) -> list[MomentumCharacter]:
    """Random rational tuples outside both families.

    Some draws set p3 = p0 or p+ = -q p- so that the rejection has to come from
    the later conditions, not only from the relations.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        vals = [Scalar.coerce(Fraction(rng.randint(-5, 5), rng.randint(1, 3))) for _ in range(4)]
        if rng.random() < 0.4:
            vals[3] = vals[0]
        if rng.random() < 0.4:
            vals[2] = -Q * vals[1]
        p = MomentumCharacter(*vals)
        if not in_families(p):
            out.append(p)
    return out


# -- hat-chi ----------------------------------------------------------------------


def _split(m):
    """Momentum and Lorentz parts of a normal monomial."""
    return m[:4] + (0,) * 7, (0,) * 4 + m[4:]


def hat_chi(p: MomentumCharacter, x: Element) -> Element:
    """chi applied to the momenta of the H-left form of x."""
    classify(p)
    out = Element()
    for m, c in x.terms.items():
        xm, hm = _split(m)
        xe = Element({xm: ONE})
        if xm == UNIT:
            out = out + Element({hm: c})
            continue
        for c2, h1, h2 in coproduct(Element({hm: ONE})).legs():
            v = p.evaluate(module_action(antipode_inv(h1), xe))
            if v:
                out = out + h2.scale(c * c2 * v)
    return out


def hat_chi_naive(p: MomentumCharacter, x: Element) -> Element:
    """chi substituted into the X-left normal form; differs from hat_chi in general."""
    out = Element()
    for m, c in x.terms.items():
        xm, hm = _split(m)
        v = p.evaluate(Element({xm: ONE}))
        if v:
            out = out + Element({hm: c * v})
    return out


# -- little algebras -------------------------------------------------------------


@dataclass
class LittleAlgebraReport:
    case: str
    generators: dict[str, Element]
    checks: list[dict]
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c["ok"] for c in self.checks)


def _rec(cid: str, lhs: Element, rhs: Element) -> dict:
    ok = lhs == rhs
    return {"id": cid, "ok": ok, "witness": "" if ok else f"{lhs} != {rhs}"}


def massive_expected() -> list[Element]:
    """Expected images divided by m: lam^-1(W-1), J- Kinv, J+ Kinv, lam^-1(W - Kinv)."""
    w, kinv = casimir_w(), gen(KINV)
    li = LAM.inverse()
    return [(w - 1).scale(li), j_minus() * kinv, j_plus() * kinv, (w - kinv).scale(li)]


def massless_expected() -> list[Element]:
    """Expected images divided by k."""
    a, b, c, d, k = (gen(n) for n in ("a", "b", "c", "d", "K"))
    li = LAM.inverse()
    return [
        (k - 1).scale(li),
        (a * c).scale(-li * qpow(-3) * BETA),
        (b * d).scale(-li * qpow(5) * BETA),
        (k - 1 - (b * c).scale(TWO)).scale(li),
    ]


def _images(p: MomentumCharacter) -> list[Element]:
    return [hat_chi(p, w) for w in pauli_lubanski()]


def little_algebra_massive(m=1) -> LittleAlgebraReport:
    p = MomentumCharacter.of(m, 0, 0, 0)
    mm = Scalar.coerce(m)
    images = _images(p)
    checks = []
    for nu, (got, want) in enumerate(zip(images, massive_expected())):
        checks.append(_rec(f"massive.hat_chi.W{IDX_NAMES[nu]}", got, want.scale(mm)))
    unit = [im.scale(mm.inverse()) for im in images]
    w = Element.one() + unit[0].scale(LAM)
    kinv = w - unit[3].scale(LAM)
    k = gen(K)
    e = (unit[2] * k).scale(-BETA)
    f = unit[1].scale(Q * BETA)
    checks.append(_rec("massive.recover.W", w, casimir_w()))
    checks.append(_rec("massive.recover.Kinv", kinv, gen(KINV)))
    checks.append(_rec("massive.recover.E", e, gen(E)))
    checks.append(_rec("massive.recover.F", f, gen(F)))
    checks.append(_rec("massive.uqsu2.K_Kinv", k * kinv, Element.one()))
    checks.append(_rec("massive.uqsu2.KEKinv", k * e * kinv, e.scale(Q * Q)))
    checks.append(_rec("massive.uqsu2.KFKinv", k * f * kinv, f.scale(QINV * QINV)))
    checks.append(_rec("massive.uqsu2.EF", e * f - f * e, (k - kinv).scale(LAM.inverse())))
    for name, g in (("E", e), ("F", f), ("K", k)):
        checks.append(_rec(f"massive.W_central.{name}", w * g, g * w))
    return LittleAlgebraReport(
        "massive",
        {"W": w, "Kinv": kinv, "JmKinv": unit[1], "JpKinv": unit[2], "K": k},
        checks,
        ["K is adjoined: Kinv stabilizes the momentum eigenspace, hence so does K"],
    )


def sphere_generators() -> dict[int, Element]:
    """N_A = (L+)^3_A keyed by 4-vector index (1: -, 2: +, 3: 3)."""
    lp = l_plus()
    return {a: lp[3][a] for a in SPATIAL}


def little_algebra_massless(k=1) -> LittleAlgebraReport:
    p = MomentumCharacter.of(k, 0, 0, k)
    kk = Scalar.coerce(k)
    images = _images(p)
    checks = []
    for nu, (got, want) in enumerate(zip(images, massless_expected())):
        checks.append(_rec(f"massless.hat_chi.W{IDX_NAMES[nu]}", got, want.scale(kk)))

    n = sphere_generators()
    a, b, c, d = (gen(x) for x in ("a", "b", "c", "d"))
    checks.append(_rec("massless.N.minus", n[1], (a * c).scale(P * BETA)))
    checks.append(_rec("massless.N.plus", n[2], (b * d).scale(P * BETA)))
    checks.append(_rec("massless.N.three", n[3], Element.one() + (b * c).scale(TWO)))

    # N_B N_A eps^{AB}_C = -lam N_C
    for cc in SPATIAL:
        lhs = Element()
        for x in SPATIAL:
            for y in SPATIAL:
                if EPS_UP[x][y][cc]:
                    lhs = lhs + (n[y] * n[x]).scale(EPS_UP[x][y][cc])
        checks.append(_rec(f"massless.sphere.eps_{IDX_NAMES[cc]}", lhs, n[cc].scale(-LAM)))
    unit = Element()
    for x in SPATIAL:
        for y in SPATIAL:
            if G_UP[y][x]:
                unit = unit + (n[x] * n[y]).scale(G_UP[y][x])
    checks.append(_rec("massless.sphere.unit", unit, Element.one()))

    # K N_A = q^{2A} N_A K with A = -1, 0, +1 for -, 3, +
    kg = gen(K)
    for x in SPATIAL:
        checks.append(_rec(f"massless.K_commutation.{IDX_NAMES[x]}", kg * n[x],
                           (n[x] * kg).scale(qpow(4 * WEIGHT[x]))))

    # N_A^* = N_B g^{BA}, K^* = K
    for x in SPATIAL:
        rhs = Element()
        for y in SPATIAL:
            if G_UP[y][x]:
                rhs = rhs + n[y].scale(G_UP[y][x])
        checks.append(_rec(f"massless.star.N{IDX_NAMES[x]}", star(n[x]), rhs))
    checks.append(_rec("massless.star.K", star(kg), kg))

    # right coideal: Delta(N_B) = N_A (x) (L+)^A_B
    lp = l_plus()
    for x in SPATIAL:
        rhs = TensorElement()
        for y in SPATIAL:
            if lp[y][x]:
                rhs = rhs + TensorElement.pure(n[y], lp[y][x])
        got = coproduct(n[x])
        ok = got == rhs
        checks.append({"id": f"massless.coideal.N{IDX_NAMES[x]}", "ok": ok,
                       "witness": "" if ok else str(got - rhs)})
    return LittleAlgebraReport("massless", {"K": kg, **{f"N{IDX_NAMES[x]}": n[x] for x in SPATIAL}}, checks)


def check_lplus_multiplicative() -> list[dict]:
    """Delta((L+)^mu_sigma) = (L+)^mu_nu (x) (L+)^nu_sigma."""
    lp = l_plus()
    out = []
    for mu in range(4):
        for sg in range(4):
            rhs = TensorElement()
            for nu in range(4):
                if lp[mu][nu] and lp[nu][sg]:
                    rhs = rhs + TensorElement.pure(lp[mu][nu], lp[nu][sg])
            ok = coproduct(lp[mu][sg]) == rhs
            out.append({"id": f"lplus.multiplicative.{IDX_NAMES[mu]}{IDX_NAMES[sg]}", "ok": ok, "witness": ""})
    return out


def check_stabilizer(p: MomentumCharacter) -> list[dict]:
    """hat_chi(W_nu P_mu) = p_mu hat_chi(W_nu)."""
    w = pauli_lubanski()
    out = []
    for nu in range(4):
        base = hat_chi(p, w[nu])
        for mu in range(4):
            lhs = hat_chi(p, w[nu] * momentum(mu))
            out.append(_rec(f"stabilizer.W{IDX_NAMES[nu]}P{IDX_NAMES[mu]}", lhs, base.scale(p.values[mu])))
    return out


def mass_squared_numeric(p: MomentumCharacter, q: float) -> float:
    return eval_numeric(p.mass_squared(), q)
