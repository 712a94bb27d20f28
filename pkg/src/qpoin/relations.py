"""The defining relations, as free-algebra polynomials.

A polynomial is a list of ``(Scalar, word)`` pairs; a relation is a pair of
polynomials ``(lhs, rhs)``.  Keeping them at word level lets the same table be
pushed through the normal-form engine and through the 4-vector representation.
"""

from __future__ import annotations

from .scalars import LAM, ONE, Q, QINV, qpow
from .tables import A, B, C, D, E, EPS_UP, F, K, KINV, MOMENTA, P0, SPATIAL

Poly = list  # [(Scalar, tuple of generator codes)]


def _mono(word, c=ONE) -> Poly:
    return [(c, tuple(word))]


def uqsu2_relations() -> dict[str, list[tuple[Poly, Poly]]]:
    lam_inv = LAM.inverse()
    return {
        "uqsu2.K_Kinv": [(_mono((K, KINV)), _mono(())), (_mono((KINV, K)), _mono(()))],
        "uqsu2.KEKinv": [(_mono((K, E, KINV)), _mono((E,), Q * Q))],
        "uqsu2.KFKinv": [(_mono((K, F, KINV)), _mono((F,), QINV * QINV))],
        "uqsu2.EF": [([(ONE, (E, F)), (-ONE, (F, E))], [(lam_inv, (K,)), (-lam_inv, (KINV,))])],
    }


def suop_relations() -> dict[str, list[tuple[Poly, Poly]]]:
    return {
        "suop.ba": [(_mono((B, A)), _mono((A, B), Q))],
        "suop.ca": [(_mono((C, A)), _mono((A, C), Q))],
        "suop.db": [(_mono((D, B)), _mono((B, D), Q))],
        "suop.dc": [(_mono((D, C)), _mono((C, D), Q))],
        "suop.bc": [(_mono((B, C)), _mono((C, B)))],
        "suop.da_ad": [([(ONE, (D, A)), (-ONE, (A, D))], _mono((B, C), LAM))],
        "suop.da_qbc": [([(ONE, (D, A)), (-Q, (B, C))], _mono(()))],
    }


def cross_relations() -> dict[str, list[tuple[Poly, Poly]]]:
    """Boost-times-rotation entries of the Drinfeld double, 3 x 4 entries."""
    p3, pm1, pm5 = qpow(3), qpow(-1), qpow(-5)
    rows = {
        E: {
            A: [(Q, (E, A)), (-p3, (B,))],
            B: [(QINV, (E, B))],
            C: [(Q, (E, C)), (p3, (K, A)), (-p3, (D,))],
            D: [(QINV, (E, D)), (pm1, (K, B))],
        },
        F: {
            A: [(Q, (F, A)), (pm1, (C,))],
            B: [(Q, (F, B)), (-pm1, (KINV, A)), (pm1, (D,))],
            C: [(QINV, (F, C))],
            D: [(QINV, (F, D)), (-pm5, (KINV, C))],
        },
        K: {
            A: [(ONE, (K, A))],
            B: [(QINV * QINV, (K, B))],
            C: [(Q * Q, (K, C))],
            D: [(ONE, (K, D))],
        },
    }
    names = {A: "a", B: "b", C: "c", D: "d", E: "E", F: "F", K: "K"}
    out = {}
    for rot, entries in rows.items():
        for boost, rhs in entries.items():
            out[f"cross.{names[boost]}{names[rot]}"] = [(_mono((boost, rot)), rhs)]
    return out


def lorentz_relations() -> dict[str, list[tuple[Poly, Poly]]]:
    out = {}
    out.update(uqsu2_relations())
    out.update(suop_relations())
    out.update(cross_relations())
    return out


def momentum_relations() -> dict[str, list[tuple[Poly, Poly]]]:
    """P0 central and P_A P_B eps^{AB}_C = -lam P0 P_C for C in {-, 3, +}."""
    out = {}
    names = {1: "m", 2: "p", 3: "3"}
    for c in (1, 3, 2):
        lhs = []
        for a in SPATIAL:
            for b in SPATIAL:
                e = EPS_UP[a][b][c]
                if e:
                    lhs.append((e, (MOMENTA[a], MOMENTA[b])))
        out[f"pp.eps_{names[c]}"] = [(lhs, [(-LAM, (P0, MOMENTA[c]))])]
    for a in (1, 3, 2):
        out[f"pp.P0_central_{names[a]}"] = [
            (_mono((P0, MOMENTA[a])), _mono((MOMENTA[a], P0)))
        ]
    return out
