"""Text form of scalars and elements.

Output is always re-parseable by :mod:`qpoin.parser`.  Scalars are written in
``q`` with ``q^(k/2)`` for half-integer powers, ``s2`` for [2]^(1/2), and the
named factors ``lam`` and ``[n]`` pulled out where they divide.
"""

from __future__ import annotations

from fractions import Fraction

from flint import fmpz_poly

_X = fmpz_poly([0, 1])

# (name, polynomial in p, power of p in the denominator of the named scalar)
_NAMED = [
    ("lam", fmpz_poly([-1, 0, 0, 0, 1]), 2),
    ("[2]", fmpz_poly([1, 0, 0, 0, 1]), 2),
    ("[3]", fmpz_poly([1, 0, 0, 0, 1, 0, 0, 0, 1]), 4),
]


def format_qpow(k: int) -> str:
    """String for p^k = q^(k/2); empty for k = 0."""
    if k == 0:
        return ""
    if k % 2:
        return f"q^({k}/2)"
    e = k // 2
    return "q" if e == 1 else f"q^{e}"


def _format_poly(f: fmpz_poly) -> str:
    """Polynomial in p as a sum in q, highest power first."""
    parts = []
    coeffs = f.coeffs()
    for e in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[e])
        if c == 0:
            continue
        mono = format_qpow(e)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _valuation(f: fmpz_poly) -> int:
    for i, c in enumerate(f.coeffs()):
        if c != 0:
            return i
    return 0


def _strip_factor(f: fmpz_poly, g: fmpz_poly):
    m = 0
    while f.degree() >= g.degree():
        quo, rem = divmod(f, g)
        if rem.degree() >= 0:
            break
        f = quo
        m += 1
    return f, m


def format_ratfunc(num: fmpz_poly, den: fmpz_poly) -> str:
    """num/den (nonzero) as a product expression, possibly with a leading '-'."""
    const = Fraction(int(num.content()), int(den.content()))
    num = num // fmpz_poly([int(num.content())])
    den = den // fmpz_poly([int(den.content())])
    if num[num.degree()] < 0:
        num, const = -num, -const
    if den[den.degree()] < 0:
        den, const = -den, -const
    k = 0
    named = []
    for name, poly, shift in _NAMED:
        num, mn = _strip_factor(num, poly)
        den, md = _strip_factor(den, poly)
        e = mn - md
        k += shift * e
        if e:
            named.append((name, e))
    vn, vd = _valuation(num), _valuation(den)
    num = num // (_X ** vn)
    den = den // (_X ** vd)
    k += vn - vd

    factors = []
    if const.denominator != 1:
        factors.append(f"{abs(const.numerator)}/{const.denominator}")
    elif abs(const) != 1:
        factors.append(str(abs(const.numerator)))
    qp = format_qpow(k)
    if qp:
        factors.append(qp)
    for name, e in named:
        factors.append(name if e == 1 else f"{name}^{e}")
    if num.degree() > 0:
        s = _format_poly(num)
        factors.append(f"({s})")
    body = "*".join(factors) if factors else "1"
    if den.degree() > 0:
        body += f"/({_format_poly(den)})"
    return ("-" if const < 0 else "") + body


def format_scalar(x) -> str:
    if x.is_zero():
        return "0"
    a_zero = x.a.degree() < 0
    b_zero = x.b.degree() < 0
    if b_zero:
        return format_ratfunc(x.a, x.d)
    bpart = format_ratfunc(x.b, x.d)
    bpart = "s2" if bpart == "1" else ("-s2" if bpart == "-1" else f"{bpart}*s2")
    if a_zero:
        return bpart
    apart = format_ratfunc(x.a, x.d)
    if bpart.startswith("-"):
        return f"({apart} - {bpart[1:]})"
    return f"({apart} + {bpart})"


def _coefficient_prefix(c) -> str:
    """Coefficient string to multiply a monomial by; '' for 1 and '-' for -1."""
    s = format_scalar(c)
    if s == "1":
        return ""
    if s == "-1":
        return "-"
    return s + "*"


def format_element(x) -> str:
    from .algebra import format_monomial, monomial_word

    # higher degree first, then by descending generator precedence
    items = sorted(
        x.terms.items(),
        key=lambda kv: (-sum(map(abs, kv[0])), tuple(-g for g in monomial_word(kv[0]))),
    )
    if not items:
        return "0"
    lead = items[0][1]
    if format_scalar(lead).startswith("-"):
        lead = -lead
    if len(items) > 1 and lead.as_fraction() is None:
        ratios = [c / lead for _, c in items]
        if all(r.as_fraction() is not None for r in ratios):
            inner = _join_terms([(m, r) for (m, _), r in zip(items, ratios)], format_monomial)
            return f"{format_scalar(lead)}*({inner})"
    return _join_terms(items, format_monomial)


def _join_terms(items, format_monomial) -> str:
    out = ""
    for i, (mono, c) in enumerate(items):
        mono_s = format_monomial(mono)
        if mono_s == "1":
            term = format_scalar(c)
        else:
            term = _coefficient_prefix(c) + mono_s
        neg = term.startswith("-")
        body = term[1:] if neg else term
        if i == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out
