from fractions import Fraction

import pytest

from qpoin import little
from qpoin.algebra import Element, gen
from qpoin.little import (InvalidCharacterError, MomentumCharacter, classify, hat_chi, hat_chi_naive,
                          sphere_generators)
from qpoin.pl import pauli_lubanski
from qpoin.scalars import BETA, Q, QINV, Scalar, qbracket, qpow
from qpoin.tables import SPATIAL, WEIGHT

P0, P3 = gen("P0"), gen("P3")
a, b, c, K = gen("a"), gen("b"), gen("c"), gen("K")
MASSIVE = MomentumCharacter.of(1, 0, 0, 0)
MASSLESS = MomentumCharacter.of(1, 0, 0, 1)


def all_ok(records):
    bad = [r["id"] for r in records if not r["ok"]]
    assert not bad, bad
    return records


def test_classification():
    assert classify(MASSIVE) == "massive"
    assert classify(MomentumCharacter.of(-2, 0, 0, 0)) == "massive"
    assert classify(MASSLESS) == "massless"
    assert classify(MomentumCharacter.of(Fraction(-3, 2), 0, 0, Fraction(-3, 2))) == "massless"
    assert [f.name for f in little.classify_characters()] == ["massive", "massless"]


@pytest.mark.parametrize("values", [(1, 1, 0, 0), (1, 0, 0, 2), (0, 0, 0, 1), (1, 1, -2, 1)])
def test_invalid_characters(values):
    with pytest.raises(InvalidCharacterError):
        classify(MomentumCharacter.of(*values))


def test_star_condition_needed():
    # p0 = p3 makes the relations hold for any p-, p+; the *-condition or mass rejects
    with pytest.raises(InvalidCharacterError, match="\\*-map"):
        classify(MomentumCharacter.of(1, 1, 1, 1))
    p = MomentumCharacter(Scalar(1), Scalar(1), -Q, Scalar(1))
    with pytest.raises(InvalidCharacterError, match="negative mass"):
        classify(p)


def test_fuzzed_invalid_characters_are_rejected():
    tuples = little.fuzz_invalid_characters(0, 10)
    assert len(tuples) == 10
    for p in tuples:
        assert not little.in_families(p)
        with pytest.raises(InvalidCharacterError):
            classify(p)
    assert [t.values for t in tuples] == [t.values for t in little.fuzz_invalid_characters(0, 10)]


def test_mass_squared():
    assert MASSIVE.mass_squared() == 1
    assert MASSLESS.mass_squared() == 0
    assert little.mass_squared_numeric(MomentumCharacter.of(3, 0, 0, 0), 2.0) == 9.0


def test_massive_little_algebra():
    report = little.little_algebra_massive()
    assert report.ok, [c["id"] for c in report.checks if not c["ok"]]
    assert len(report.checks) == 15


@pytest.mark.parametrize("m", [2, Fraction(1, 3)])
def test_massive_images_scale_with_mass(m):
    p = MomentumCharacter.of(m, 0, 0, 0)
    for got, want in zip((hat_chi(p, w) for w in pauli_lubanski()), little.massive_expected()):
        assert got == want.scale(Scalar.coerce(m))


def test_massless_little_algebra():
    report = little.little_algebra_massless()
    assert report.ok, [c["id"] for c in report.checks if not c["ok"]]
    assert len(report.checks) == 21


def test_massless_images_scale():
    p = MomentumCharacter.of(Fraction(5, 2), 0, 0, Fraction(5, 2))
    for got, want in zip((hat_chi(p, w) for w in pauli_lubanski()), little.massless_expected()):
        assert got == want.scale(Scalar.coerce(Fraction(5, 2)))


def test_sphere_generators_explicit():
    n = sphere_generators()
    assert n[1] == (a * c).scale(qpow(1) * BETA)
    assert n[3] == Element.one() + (b * c).scale(qbracket(2))


def test_k_commutation_literal_sign_fails():
    n = sphere_generators()
    for x in SPATIAL:
        assert K * n[x] == (n[x] * K).scale(qpow(4 * WEIGHT[x]))
        if WEIGHT[x]:
            assert K * n[x] != (n[x] * K).scale(qpow(-4 * WEIGHT[x]))


def test_naive_hat_chi_agrees_on_pl_but_not_in_general():
    for w in pauli_lubanski():
        assert hat_chi(MASSIVE, w) == hat_chi_naive(MASSIVE, w)
    x = P0 * a
    assert hat_chi_naive(MASSIVE, x) == a
    assert hat_chi(MASSIVE, x) == a.scale((Q * Q + QINV * QINV) / qbracket(2))


def test_hat_chi_rejects_invalid_character():
    with pytest.raises(InvalidCharacterError):
        hat_chi(MomentumCharacter.of(1, 1, 0, 0), P0)


def test_stabilizer_and_coproduct_of_lplus():
    all_ok(little.check_lplus_multiplicative())
    all_ok(little.check_stabilizer(MASSIVE))
    all_ok(little.check_stabilizer(MASSLESS))


def test_evaluate_requires_momenta():
    with pytest.raises(ValueError):
        MASSIVE.evaluate(a)
    assert MASSIVE.evaluate(P0 * P0 - P3) == 1
