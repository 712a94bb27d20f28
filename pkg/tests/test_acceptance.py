"""One test per acceptance criterion, each printing a single pass/fail line.

Suites run in a fresh interpreter so timings include cold caches.
"""

import json
import subprocess
import sys

import pytest

_RUNNER = """
import json, sys, time
from qpoin.checks import Options, run_suite
opts = Options(**json.loads(sys.argv[2]))
out = []
for name in sys.argv[1].split(","):
    start = time.perf_counter()
    report = run_suite(name, opts)
    out.append({"suite": name, "seconds": time.perf_counter() - start, "report": report.to_dict()})
print(json.dumps(out))
"""


def run_suites(names, **opts):
    proc = subprocess.run([sys.executable, "-c", _RUNNER, ",".join(names), json.dumps(opts)],
                          capture_output=True, text=True, check=True)
    runs = json.loads(proc.stdout)
    seconds = sum(r["seconds"] for r in runs)
    checks = [c for r in runs for c in r["report"]["checks"]]
    return checks, seconds, runs


def verdict(capsys, number, title, checks, seconds, limit, extra_ok=True, note=""):
    failed = [c["id"] for c in checks if c["status"] != "pass"]
    ok = not failed and seconds < limit and extra_ok
    line = (f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}; "
            f"{len(checks) - len(failed)}/{len(checks)} checks, {seconds:.2f} s (limit {limit} s)")
    if note:
        line += f"; {note}"
    if failed:
        line += f"; failed: {', '.join(failed[:5])}"
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


def prefixed(checks, prefix):
    return [c for c in checks if c["id"].startswith(prefix)]


def test_criterion_1_relation_tables(capsys):
    checks, seconds, _ = run_suites(["relations"])
    families = {
        "relations.uqsu2.": 4, "relations.suop.": 7, "relations.cross.": 12,
        "relations.pp.eps_": 3, "relations.pp.P0_central_": 3, "relations.ph.": 28,
    }
    counts_ok = all(len(prefixed(checks, p)) == n for p, n in families.items())
    verdict(capsys, 1, "every defining relation normalizes to 0", checks, seconds, 5, counts_ok)


def test_criterion_2_hopf_axioms(capsys):
    checks, seconds, _ = run_suites(["hopf"])
    axioms = [c for c in checks if not c["id"].startswith(("hopf.module_action", "hopf.action_is"))]
    verdict(capsys, 2, "Hopf-* axioms on the 7 Lorentz generators", axioms, seconds, 1, len(axioms) == 49)


def test_criterion_3_lambda_and_rmatrix(capsys):
    checks, seconds, _ = run_suites(["lambda"])
    needed = ["lambda.homomorphism.generator_pairs", "lambda.rmatrix.qybe", "lambda.rmatrix.eta_invariance"]
    have = {c["id"] for c in checks}
    extra = (all(n in have for n in needed) and len([c for c in prefixed(checks, "lambda.metric.")
                         if c["id"].split(".")[-1] in ("E", "F", "K", "Kinv", "a", "b", "c", "d")]) == 8
             and len(prefixed(checks, "lambda.rmatrix.minkrel.")) == 16)
    verdict(capsys, 3, "Lambda homomorphism, metric law, QYBE, eta-invariance, momentum relations",
            checks, seconds, 30, extra)


def test_criterion_4_pauli_lubanski(capsys):
    checks, seconds, _ = run_suites(["prop3", "pl1", "pl2", "pl"])
    counts = (len(prefixed(checks, "prop3.")), len(prefixed(checks, "pl1.")), len(prefixed(checks, "pl2.")))
    have = {c["id"] for c in checks}
    extra = counts == (32, 28, 16) and {"pl.lambda_divisibility", "pl.w0_closed_form"} <= have
    verdict(capsys, 4, "Sigma commutators, PL1, PL2, lambda-divisibility, W0 closed form", checks, seconds, 60, extra)


def test_criterion_5_casimir(capsys):
    checks, seconds, _ = run_suites(["casimir"])
    gated = [c for c in checks if c["id"] != "casimir.star_exploratory"]
    extra = len(prefixed(gated, "casimir.central.")) == 11 and len(prefixed(gated, "lmatrix.")) == 3
    verdict(capsys, 5, "Omega simplified form, centrality, L-matrix identities", gated, seconds, 60, extra,
            "eta contraction checked against eta^{sigma mu} (index-order conflict)")


def test_criterion_6_classical_limit(capsys):
    checks, seconds, _ = run_suites(["limit"], qvalues=[1.01, 1.5, 2.0], spin_tol=1e-9, slope_tol=0.1)
    extra = len(prefixed(checks, "limit.slope.")) == 3 and len(prefixed(checks, "limit.spin_rep.")) == 15
    verdict(capsys, 6, "lam^-1(W-1) identity, log-log slopes 1 +- 0.1, spin-rep residuals < 1e-9",
            checks, seconds, 5, extra)


def test_criterion_7_little_algebras(capsys):
    checks, seconds, _ = run_suites(["little"])
    extra = (len(prefixed(checks, "little.reject_fuzzed.")) == 10
             and len(prefixed(checks, "little.massive.hat_chi.")) == 4
             and len(prefixed(checks, "little.massless.hat_chi.")) == 4
             and len(prefixed(checks, "little.massless.K_commutation.")) == 3
             and len(prefixed(checks, "little.massless.coideal.")) == 3)
    verdict(capsys, 7, "character families, hat-chi images, sphere, * and coideal relations",
            checks, seconds, 30, extra, "K commutation checked as K N_A = q^{2A} N_A K")


def test_criterion_8_confluence_fuzz(capsys):
    checks, seconds, runs = run_suites(["fuzz"], seed=1, trials=500, max_len=8)
    again, _, _ = run_suites(["fuzz"], seed=1, trials=500, max_len=8)
    strip = lambda cs: [{k: v for k, v in c.items() if k != "ms"} for c in cs]
    deterministic = strip(checks) == strip(again)
    verdict(capsys, 8, "500 words, length <= 8, three strategies, zero mismatches", checks, seconds, 120,
            deterministic, f"deterministic rerun: {deterministic}")


def test_criterion_9_negative_controls(capsys):
    checks, seconds, _ = run_suites(["negative"])
    have = {c["id"] for c in checks}
    extra = {"negative.corrupted_coproduct", "negative.sigma_without_s2"} <= have
    verdict(capsys, 9, "corrupted coproduct detected, Sigma without S^2 breaks commutation",
            checks, seconds, 60, extra)


@pytest.mark.parametrize("suite", ["relations", "pl2"])
def test_reports_are_deterministic(suite):
    first = run_suites([suite], seed=5)[2][0]["report"]
    second = run_suites([suite], seed=5)[2][0]["report"]
    for r in (first, second):
        for c in r["checks"]:
            c.pop("ms")
    assert first == second
