"""Verification suites shared by the CLI and the acceptance tests.

Each suite is a function returning ``{"id", "ok", "witness"}`` records; the
runner times them and turns them into report entries.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import hopf, little, pl, rep
from .algebra import Element, confluence_fuzz, from_words, gen, momentum
from .hopf import TensorElement, coproduct
from .relations import lorentz_relations, momentum_relations
from .tables import E, GEN_NAMES, IDX_NAMES, KINV, LORENTZ7

DEFAULT_SEED = 0
DEFAULT_TRIALS = 500
DEFAULT_MAX_LEN = 8
DEFAULT_QVALUES = (1.01, 1.5, 2.0)
SPIN_TOL = 1e-9


@dataclass
class Options:
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    max_len: int = DEFAULT_MAX_LEN
    qvalues: tuple = DEFAULT_QVALUES
    spin_tol: float = SPIN_TOL
    slope_tol: float = 0.1


def _rec(cid, ok, witness=""):
    return {"id": cid, "ok": bool(ok), "witness": "" if ok else str(witness)}


# -- relations ----------------------------------------------------------------------


def ph_relation(g: int, nu: int) -> tuple[Element, Element]:
    """h P_nu and sum P_mu Lambda(h_(1))^mu_nu h_(2) for a Lorentz generator h."""
    h = gen(g)
    rhs = Element()
    for c, h1, h2 in coproduct(h).legs():
        lam = rep.lambda_of(h1)
        for mu in range(4):
            if lam[mu][nu]:
                rhs = rhs + (momentum(mu) * h2).scale(c * lam[mu][nu])
    return h * momentum(nu), rhs


def suite_relations(opts: Options) -> list[dict]:
    out = []
    rels = {**lorentz_relations(), **momentum_relations()}
    for rid, pairs in rels.items():
        diffs = [from_words(lhs) - from_words(rhs) for lhs, rhs in pairs]
        bad = [d for d in diffs if d]
        out.append(_rec(f"relations.{rid}", not bad, bad[0] if bad else ""))
    for g in LORENTZ7:
        for nu in range(4):
            lhs, rhs = ph_relation(g, nu)
            out.append(_rec(f"relations.ph.{GEN_NAMES[g]}P{IDX_NAMES[nu]}", lhs == rhs, lhs - rhs))
    return out


# -- hopf ---------------------------------------------------------------------------


def suite_hopf(opts: Options) -> list[dict]:
    out = [dict(r, id=f"hopf.{r['id']}") for r in hopf.check_hopf_axioms()]
    for g in LORENTZ7:
        h = gen(g)
        for nu in range(4):
            lam = rep.lambda_of(h)
            want = Element()
            for mu in range(4):
                if lam[mu][nu]:
                    want = want + momentum(mu).scale(lam[mu][nu])
            got = hopf.module_action(h, momentum(nu))
            out.append(_rec(f"hopf.module_action.{GEN_NAMES[g]}P{IDX_NAMES[nu]}", got == want, got - want))
        x = momentum(1) * momentum(2)
        a, b = hopf.module_action(h, x), hopf.ad_left(h, x)
        out.append(_rec(f"hopf.action_is_ad_left.{GEN_NAMES[g]}", a == b, a - b))
    return out


def corrupted_coproduct(h: Element) -> TensorElement:
    """Coproduct with Delta(E) replaced by E (x) K + 1 (x) E + 1 (x) 1."""
    if h == gen(E):
        one = Element.one()
        return coproduct(h) + TensorElement.pure(one, one)
    return coproduct(h)


# -- lambda and the R-matrix ------------------------------------------------------------


def suite_lambda(opts: Options) -> list[dict]:
    out = [dict(r, id=f"lambda.{r['id']}") for r in rep.METRICS.check()]
    out += rep.check_lambda()
    gens = LORENTZ7 + (KINV,)
    bad = []
    for g in gens:
        for h in gens:
            prod = rep.lambda_of(gen(g) * gen(h))
            want = rep.lambda_word((g, h))
            if prod != want:
                bad.append(f"{GEN_NAMES[g]}{GEN_NAMES[h]}")
    out.append(_rec("lambda.homomorphism.generator_pairs", not bad, ",".join(bad)))
    out += [dict(r, id=f"lambda.{r['id']}") for r in rep.check_rmatrix()]
    return out


# -- PL, Casimir, limit ------------------------------------------------------------------


def suite_prop3(opts):
    return pl.check_prop3()


def suite_pl1(opts):
    return pl.check_pl1()


def suite_pl2(opts):
    return pl.check_pl2()


def suite_pl(opts):
    return pl.check_w0() + pl.check_prop1()


def suite_casimir(opts):
    return pl.check_casimir() + pl.check_lmatrix_identities() + [pl.check_casimir_star()]


def suite_limit(opts: Options) -> list[dict]:
    out = pl.check_classical_limit(slope_tol=opts.slope_tol)
    for q in opts.qvalues:
        for j in rep.SUPPORTED_SPINS:
            res = rep.spin_rep(j, q).residuals()
            worst = max(res.values())
            out.append(_rec(f"limit.spin_rep.j={j}.q={q}", worst < opts.spin_tol, f"residual={worst:.3e}"))
    return out


# -- little algebras ------------------------------------------------------------------------


def suite_little(opts: Options) -> list[dict]:
    out = []
    fams = little.classify_characters()
    out.append(_rec("little.families", [f.name for f in fams] == ["massive", "massless"], fams))
    for fam in fams:
        for t in (Fraction(1), Fraction(3, 2), Fraction(-2)):
            p = fam(t)
            try:
                kind = little.classify(p)
            except little.InvalidCharacterError as exc:
                kind = str(exc)
            out.append(_rec(f"little.family.{fam.name}.t={t}", kind == fam.name, kind))
    invalid = little.fuzz_invalid_characters(opts.seed, 10)
    for i, p in enumerate(invalid):
        out.append(_rec(f"little.reject_fuzzed.{i}", _rejected(p), [str(v) for v in p.values]))
    out.append(_rec("little.reject_example", _rejected(little.MomentumCharacter.of(1, 1, 0, 0)), "(1,1,0,0)"))
    for report in (little.little_algebra_massive(), little.little_algebra_massless()):
        out += [dict(c, id=f"little.{c['id']}") for c in report.checks]
    out += [dict(c, id=f"little.{c['id']}") for c in little.check_lplus_multiplicative()]
    for name, p in (("massive", little.MomentumCharacter.of(1, 0, 0, 0)),
                    ("massless", little.MomentumCharacter.of(1, 0, 0, 1))):
        out += [dict(c, id=f"little.{name}.{c['id']}") for c in little.check_stabilizer(p)]
    return out


def _rejected(p) -> bool:
    try:
        little.classify(p)
    except little.InvalidCharacterError:
        return True
    return False


# -- fuzz and negative controls ---------------------------------------------------------------


def suite_fuzz(opts: Options) -> list[dict]:
    bad = confluence_fuzz(opts.seed, opts.trials, opts.max_len)
    return [_rec(f"fuzz.confluence.seed={opts.seed}.trials={opts.trials}", not bad, bad[:3])]


def suite_negative(opts: Options) -> list[dict]:
    results = hopf.check_hopf_axioms(corrupted_coproduct)
    failed = [r["id"] for r in results if not r["ok"]]
    out = [_rec("negative.corrupted_coproduct", bool(failed) and all(f.endswith(".E") for f in failed),
                "corruption not detected" if not failed else failed)]
    out += pl.check_negative_sigma()
    return out


SUITES = {
    "relations": suite_relations,
    "hopf": suite_hopf,
    "lambda": suite_lambda,
    "prop3": suite_prop3,
    "pl1": suite_pl1,
    "pl2": suite_pl2,
    "pl": suite_pl,
    "casimir": suite_casimir,
    "limit": suite_limit,
    "little": suite_little,
    "fuzz": suite_fuzz,
    "negative": suite_negative,
}


# -- runner ---------------------------------------------------------------------------------


@dataclass
class Report:
    suite: str
    version: str
    seed: int
    checks: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "version": self.version, "seed": self.seed, "checks": self.checks}


def _version() -> str:
    from importlib.metadata import PackageNotFoundError, version

    try:
        return version("artifact")
    except PackageNotFoundError:
        return "0.0.0"


def run_suite(name: str, opts: Options | None = None) -> Report:
    """Run one suite (or "all") and return a report sorted by check id."""
    opts = opts or Options()
    names = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise KeyError(f"unknown suite {name!r}; expected one of {', '.join(['all', *SUITES])}")
    checks = []
    for n in names:
        start = time.perf_counter()
        try:
            records = SUITES[n](opts)
        except Exception as exc:  # a crashing suite is reported, not raised
            ms = round((time.perf_counter() - start) * 1000, 3)
            checks.append({"id": f"{n}.error", "status": "error", "witness": f"{type(exc).__name__}: {exc}", "ms": ms})
            continue
        ms = round((time.perf_counter() - start) * 1000 / max(len(records), 1), 3)
        for r in records:
            checks.append({"id": r["id"], "status": "pass" if r["ok"] else "fail",
                           "witness": r["witness"], "ms": ms})
    checks.sort(key=lambda c: c["id"])
    return Report(name, _version(), opts.seed, checks)

