from fractions import Fraction

import pytest

from qpoin import pl
from qpoin.algebra import Element, commutator, gen, momentum, star
from qpoin.pl import (PLConstructionError, eta_contraction, lambda_divisible, pauli_lubanski, sigma,
                      spin_casimir, spin_casimir_simplified)
from qpoin.scalars import LAM, Scalar
from qpoin.tables import ETA_UP

P0, Pm, Pp, P3 = gen("P0"), gen("Pm"), gen("Pp"), gen("P3")


def all_ok(records):
    bad = [r["id"] for r in records if not r["ok"]]
    assert not bad, bad
    return records


def test_sigma_variants_reduce_to_momenta_classically():
    for nu in range(4):
        for variant in pl.VARIANTS:
            s = sigma(nu, variant)
            assert lambda_divisible(s - momentum(nu))
    with pytest.raises(ValueError):
        sigma(0, "II")


def test_prop3_commutators():
    assert len(all_ok(pl.check_prop3())) == 32


def test_pl_tensor_operator():
    assert len(all_ok(pl.check_pl1())) == 28


def test_pl_components_commute():
    assert len(all_ok(pl.check_pl2())) == 16


def test_w0_closed_form():
    all_ok(pl.check_w0())
    assert pauli_lubanski()[0] == pl.w0_closed_form()


def test_pl_commutes_with_momenta():
    w = pauli_lubanski()
    for nu in range(4):
        for mu in range(4):
            assert commutator(w[nu], momentum(mu)).is_zero()


def test_divisibility_detects_corrupted_lmatrix():
    lp = pl.l_plus()
    corrupted = Element()
    for mu in range(4):
        entry = lp[mu][0].scale(2) if mu == 0 else lp[mu][0]
        if entry:
            corrupted = corrupted + pl.s2(entry) * momentum(mu)
    assert not lambda_divisible(sigma(0, "I21inv") - corrupted)
    assert lambda_divisible(sigma(0, "I21inv") - sigma(0, "I"))


def test_divisibility_rejects_poles_and_constants():
    assert not lambda_divisible(P0.scale(LAM.inverse()))
    assert not lambda_divisible(P0)
    assert lambda_divisible(P0.scale(LAM))
    assert lambda_divisible(gen("b") * P0)


def test_construction_error_type():
    assert issubclass(PLConstructionError, ArithmeticError)


def test_casimir_identities():
    assert len(all_ok(pl.check_casimir())) == 12
    all_ok(pl.check_lmatrix_identities())


def test_casimir_literal_index_order_is_off():
    literal = Element()
    for mu in range(4):
        for sg in range(4):
            e = ETA_UP[mu][sg] - ETA_UP[sg][mu]
            if e:
                literal = literal + (momentum(sg) * momentum(mu)).scale(e)
    literal = spin_casimir_simplified() + literal.scale(Scalar(2) / (LAM * LAM))
    assert literal - spin_casimir() == (P3 * P3 - P0 * P3).scale(2)


def test_eta_contraction_is_transposed_metric():
    for sign in ("plus", "minus"):
        got = eta_contraction(sign)
        assert all(got[mu][sg] == Element.scalar(ETA_UP[sg][mu]) for mu in range(4) for sg in range(4))
        assert got[1][2] != Element.scalar(ETA_UP[1][2])


def test_casimir_is_star_invariant():
    assert star(spin_casimir()) == spin_casimir()


def test_classical_limit():
    records = all_ok(pl.check_classical_limit())
    assert any(r["id"].startswith("limit.slope") for r in records)
    rows = pl.limit_series(Fraction(1, 2))
    assert len(rows) == 5
    assert rows[-1][1] < rows[0][1]


def test_limit_slope_tolerance_is_respected():
    records = pl.check_classical_limit(slope_tol=1e-12)
    assert not all(r["ok"] for r in records if r["id"].startswith("limit.slope"))


def test_negative_sigma_control():
    all_ok(pl.check_negative_sigma())


def test_prop1_instance():
    assert len(all_ok(pl.check_prop1())) == 7
