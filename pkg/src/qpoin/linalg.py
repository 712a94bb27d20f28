"""Small dense matrices over an exact ring, as lists of lists.

Entries only need ``+``, ``*`` and (for :func:`inverse`) ``inverse()`` and
``is_zero()``; both :class:`~qpoin.scalars.Scalar` and algebra elements work
for the ring operations.
"""

from __future__ import annotations

from .scalars import ONE, ZERO


def identity(n: int, one=ONE, zero=ZERO):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def diag(values):
    n = len(values)
    return [[values[i] if i == j else ZERO for j in range(n)] for i in range(n)]


def scale(c, m):
    return [[c * x for x in row] for row in m]


def matmul(x, y, zero=ZERO):
    n, k, m = len(x), len(y), len(y[0])
    out = []
    for i in range(n):
        row = []
        xi = x[i]
        for j in range(m):
            acc = zero
            for t in range(k):
                u = xi[t]
                if not u:
                    continue
                v = y[t][j]
                if not v:
                    continue
                acc = acc + u * v
            row.append(acc)
        out.append(row)
    return out


def transpose(m):
    return [list(r) for r in zip(*m)]


def inverse(m):
    """Gauss-Jordan inverse over a field."""
    n = len(m)
    aug = [list(m[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r == col or aug[r][col].is_zero():
                continue
            f = aug[r][col]
            aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def equal(x, y) -> bool:
    return all(a == b for ra, rb in zip(x, y) for a, b in zip(ra, rb))


def is_identity(m) -> bool:
    return equal(m, identity(len(m)))
