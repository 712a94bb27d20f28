"""Constant data of the q-Poincare algebra.

Generators, the 4-vector representation on generators, the 3- and 4-metrics,
the epsilon tensor, and the Hopf and * structure on generators.  4-vector
indices use the basis order (0, -, +, 3); 3-vector indices use (-, +, 3)
embedded at positions 1, 2, 3.
"""

from __future__ import annotations

from .linalg import diag, identity, inverse, matmul, scale
from .scalars import BETA, LAM, ONE, ZERO, P, Q, QINV, Scalar, qbracket, qpow

# Generator codes in normal-order precedence.
P0, PM, P3, PP, F, KINV, K, E, A, B, C, D = range(12)

GEN_NAMES = ["P0", "Pm", "P3", "Pp", "F", "Kinv", "K", "E", "a", "b", "c", "d"]
GEN_CODE = {name: i for i, name in enumerate(GEN_NAMES)}

MOMENTA = (P0, PM, PP, P3)  # indexed by 4-vector index 0, -, +, 3
ROTATIONS = (F, KINV, K, E)
BOOSTS = (A, B, C, D)
LORENTZ_GENS = ROTATIONS + BOOSTS
# The seven generators of the q-Lorentz algebra used in per-generator checks.
LORENTZ7 = (E, F, K, A, B, C, D)

IDX = {"0": 0, "-": 1, "+": 2, "3": 3}
IDX_NAMES = ["0", "-", "+", "3"]
SPATIAL = (1, 2, 3)  # -, +, 3
# 3-vector weight A in {-1, 0, +1}
WEIGHT = {1: -1, 2: 1, 3: 0}

TWO = qbracket(2)
BETA_INV = BETA.inverse()

# -- metrics and epsilon -------------------------------------------------------

# g^{AB} read off from W^2 - 1 = lam^2 (J3^2 - q^-1 Jm Jp - q Jp Jm)
G_UP = [[ZERO] * 4 for _ in range(4)]
G_UP[3][3] = ONE
G_UP[1][2] = -QINV
G_UP[2][1] = -Q

# eta^{mu nu} from m^2 = P0^2 + q^-1 Pm Pp + q Pp Pm - P3^2
ETA_UP = [[ZERO] * 4 for _ in range(4)]
ETA_UP[0][0] = ONE
ETA_UP[1][2] = QINV
ETA_UP[2][1] = Q
ETA_UP[3][3] = -ONE
ETA_DOWN = inverse(ETA_UP)


def _g_down():
    block = inverse([[G_UP[i][j] for j in SPATIAL] for i in SPATIAL])
    out = [[ZERO] * 4 for _ in range(4)]
    for r, i in enumerate(SPATIAL):
        for s, j in enumerate(SPATIAL):
            out[i][j] = block[r][s]
    return out


G_DOWN = _g_down()

# epsilon^{AB}_C as EPS_UP[A][B][C]
EPS_UP = [[[ZERO] * 4 for _ in range(4)] for _ in range(4)]
EPS_UP[1][3][1] = QINV
EPS_UP[3][1][1] = -Q
EPS_UP[1][2][3] = ONE
EPS_UP[2][1][3] = -ONE
EPS_UP[3][3][3] = -LAM
EPS_UP[3][2][2] = QINV
EPS_UP[2][3][2] = -Q

# epsilon_A^B_C: first index lowered with g_{AD}.  This is the convention under
# which Lambda(J_A) reproduces the U_q(su2) relations (checked in rep).
EPS_MIXED = [[[sum((G_DOWN[a][dd] * EPS_UP[dd][b][c] for dd in SPATIAL), ZERO)
               for c in range(4)] for b in range(4)] for a in range(4)]

# -- the 4-vector representation on generators --------------------------------


def lambda_j(a: int):
    """Lambda(J_A) = 0 (+) eps_A^B_C with B the row and C the column."""
    m = [[ZERO] * 4 for _ in range(4)]
    for b in SPATIAL:
        for c in SPATIAL:
            m[b][c] = EPS_MIXED[a][b][c]
    return m


# Spin-1 value of W, from a highest-weight vector: q^2 - lam q^-1 [2]/[2].
W_SPIN1 = Q * Q - LAM * QINV
LAMBDA_W = diag([ONE, W_SPIN1, W_SPIN1, W_SPIN1])

_LAMBDA_K = [[LAMBDA_W[i][j] + LAM * lambda_j(3)[i][j] for j in range(4)] for i in range(4)]
_LAMBDA_KINV = inverse(_LAMBDA_K)
# J+ = -[2]^-1/2 E,  Jm = q [2]^-1/2 K F
_LAMBDA_E = scale(-BETA, lambda_j(2))
_LAMBDA_F = scale(QINV * BETA, matmul(_LAMBDA_KINV, lambda_j(1)))

_I4 = identity(4)
_TW = TWO.inverse()


def _boost(rows, factor=ONE):
    return [[factor * Scalar.coerce(v) for v in row] for row in rows]


_Q4_2 = qbracket(4) * _TW * _TW
_LAMBDA_A = [
    [_Q4_2, ZERO, ZERO, Q * LAM * _TW],
    [ZERO, ONE, ZERO, ZERO],
    [ZERO, ZERO, ONE, ZERO],
    [QINV * LAM * _TW, ZERO, ZERO, 2 * _TW],
]
_LAMBDA_B = _boost(
    [[0, -1, 0, 0], [0, 0, 0, 0], [1, 0, 0, 1], [0, 1, 0, 0]],
    qpow(-1) * LAM * BETA_INV,
)
_LAMBDA_C = _boost(
    [[0, 0, -1, 0], [1, 0, 0, 1], [0, 0, 0, 0], [0, 0, 1, 0]],
    -P * LAM * BETA_INV,
)
_LAMBDA_D = [
    [_Q4_2, ZERO, ZERO, -QINV * LAM * _TW],
    [ZERO, ONE, ZERO, ZERO],
    [ZERO, ZERO, ONE, ZERO],
    [-Q * LAM * _TW, ZERO, ZERO, 2 * _TW],
]

LAMBDA_GEN = {
    E: _LAMBDA_E,
    F: _LAMBDA_F,
    K: _LAMBDA_K,
    KINV: _LAMBDA_KINV,
    A: _LAMBDA_A,
    B: _LAMBDA_B,
    C: _LAMBDA_C,
    D: _LAMBDA_D,
}

# -- Hopf and * structure on generators ---------------------------------------
# Words are tuples of generator codes; values are lists of (Scalar, word).

COPRODUCT_GEN = {
    E: [(ONE, (E,), (K,)), (ONE, (), (E,))],
    F: [(ONE, (F,), ()), (ONE, (KINV,), (F,))],
    K: [(ONE, (K,), (K,))],
    KINV: [(ONE, (KINV,), (KINV,))],
    A: [(ONE, (A,), (A,)), (ONE, (B,), (C,))],
    B: [(ONE, (A,), (B,)), (ONE, (B,), (D,))],
    C: [(ONE, (C,), (A,)), (ONE, (D,), (C,))],
    D: [(ONE, (C,), (B,)), (ONE, (D,), (D,))],
}

COUNIT_GEN = {E: ZERO, F: ZERO, K: ONE, KINV: ONE, A: ONE, B: ZERO, C: ZERO, D: ONE}

ANTIPODE_GEN = {
    E: [(-ONE, (E, KINV))],
    F: [(-ONE, (K, F))],
    K: [(ONE, (KINV,))],
    KINV: [(ONE, (K,))],
    A: [(ONE, (D,))],
    B: [(-Q, (B,))],
    C: [(-QINV, (C,))],
    D: [(ONE, (A,))],
}

STAR_GEN = {
    E: [(ONE, (F, K))],
    F: [(ONE, (KINV, E))],
    K: [(ONE, (K,))],
    KINV: [(ONE, (KINV,))],
    A: [(ONE, (D,))],
    B: [(-QINV, (C,))],
    C: [(-Q, (B,))],
    D: [(ONE, (A,))],
    P0: [(ONE, (P0,))],
    P3: [(ONE, (P3,))],
    # P_+^* = -q P_-, the only choice making * involutive given P_-^* = -q^-1 P_+
    PM: [(-QINV, (PP,))],
    PP: [(-Q, (PM,))],
}
