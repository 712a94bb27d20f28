import math
import random
from fractions import Fraction

import numpy as np
import pytest

from qpoin import rep
from qpoin.algebra import Element, gen
from qpoin.linalg import identity, matmul
from qpoin.scalars import Q, ZERO, eval_numeric, qbracket
from qpoin.tables import ETA_UP

E, F, K, Kinv = gen("E"), gen("F"), gen("K"), gen("Kinv")
a, b, c, d = gen("a"), gen("b"), gen("c"), gen("d")
GENS = [E, F, K, Kinv, a, b, c, d]


def qnum(n, q):
    return (q**n - q**-n) / (q - 1 / q)


def test_lambda_unit_and_determinant():
    assert rep.lambda_of(Element.one()) == identity(4)
    assert rep.lambda_of(d * a - (b * c).scale(Q)) == identity(4)
    assert rep.lambda_of(K * Kinv) == identity(4)


def test_lambda_k_fixes_time():
    lk = rep.lambda_of(K)
    assert [lk[i][0] for i in range(4)] == [lk[0][0], ZERO, ZERO, ZERO]
    assert lk[0][0] == 1


def test_lambda_rejects_momenta():
    with pytest.raises(ValueError):
        rep.lambda_of(gen("P0"))


def test_lambda_is_homomorphism_on_random_words():
    rng = random.Random(11)
    for _ in range(20):
        x = rng.choice(GENS) * rng.choice(GENS)
        y = rng.choice(GENS) * rng.choice(GENS)
        assert rep.lambda_of(x * y) == matmul(rep.lambda_of(x), rep.lambda_of(y))


def test_metric_tables():
    assert all(r["ok"] for r in rep.METRICS.check())
    assert ETA_UP[0][0] == 1


def test_lambda_checks_pass():
    results = rep.check_lambda()
    assert len(results) == 39
    assert all(r["ok"] for r in results), [r["id"] for r in results if not r["ok"]]


def test_rmatrix_checks_pass():
    results = rep.check_rmatrix()
    assert {r["id"] for r in results} >= {"rmatrix.qybe", "rmatrix.eta_invariance"}
    assert all(r["ok"] for r in results), [r["id"] for r in results if not r["ok"]]


def test_rmatrix_inverse():
    r, rinv = rep.rmatrix4(), rep.rmatrix4_inverse()
    assert matmul(r, rinv) == identity(16)


@pytest.mark.parametrize("j", rep.SUPPORTED_SPINS)
@pytest.mark.parametrize("q", [1.01, 1.5, 2.0])
def test_spin_rep_relations(j, q):
    assert max(rep.spin_rep(j, q).residuals().values()) < 1e-9


def test_spin_half_matrices_at_q2():
    r = rep.spin_rep(Fraction(1, 2), 2.0)
    assert np.allclose(r.K, np.diag([2.0, 0.5]))
    assert np.allclose(r.E, [[0, 1], [0, 0]])
    assert np.allclose(r.F, [[0, 0], [1, 0]])


@pytest.mark.parametrize("j", [Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)])
def test_w_is_scalar_on_spin_reps(j):
    q = 1.7
    want = (q ** (2 * j + 1) + q ** -(2 * j + 1)) / (q + 1 / q)
    w = rep.spin_rep(j, q).W
    assert np.allclose(w, want * np.eye(w.shape[0]), atol=1e-12)
    assert math.isclose(rep.w_value(j, q), want, rel_tol=1e-12)


def test_w_spin_one_matches_symbolic():
    q = 1.3
    q3 = Q * Q * Q
    w1 = (q3 + q3.inverse()) / qbracket(2)
    assert math.isclose(rep.w_value(1, q), eval_numeric(w1, q), rel_tol=1e-12)


def test_spin_zero_and_unsupported():
    assert rep.w_value(0, 2.0) == 1.0
    with pytest.raises(ValueError):
        rep.spin_rep(Fraction(5, 2), 2.0)


def test_qnum_bracket():
    assert math.isclose(qnum(2, 2.0), 2.5)
