"""Normal-ordered elements of the q-Poincare algebra.

A normal monomial is stored as an exponent tuple

    (n0, n-, n3, n+,  f, k, e,  A, B, C, D)

standing for the word ``P0^n0 Pm^n- P3^n3 Pp^n+ F^f K^k E^e a^A b^B c^C d^D``
where ``K^k`` with ``k < 0`` means ``Kinv^-k`` and ``A*D == 0``.  Momenta are
ordered to the left, then rotations, then boosts.

Two independent reducers are provided.  :class:`_Engine` multiplies normal
monomials generator by generator using memoized pair rules and closed forms
for the boost block; it is what :func:`multiply` and :func:`normalize` use.
:func:`rewrite_word` applies the raw oriented rules to a word under a chosen
reduction strategy and exists to test confluence against the engine.
"""

from __future__ import annotations

import os
import random
from collections.abc import Iterable, Sequence

from .scalars import LAM, ONE, ZERO, Q, QINV, Scalar, qpow
from .tables import (
    A, B, C, D, E, F, K, KINV, P0, P3, PM, PP,
    COPRODUCT_GEN, GEN_NAMES, LAMBDA_GEN, LORENTZ_GENS, MOMENTA, STAR_GEN,
)

__all__ = [
    "Element",
    "RewriteLimitError",
    "normalize",
    "multiply",
    "commutator",
    "star",
    "rewrite_word",
    "confluence_fuzz",
    "gen",
    "momentum",
    "format_monomial",
    "monomial_word",
    "RULES",
]

DEFAULT_ITER_CAP = 10**6

Monomial = tuple  # 11 ints, see module docstring
UNIT: Monomial = (0,) * 11

_SLOT = {P0: 0, PM: 1, P3: 2, PP: 3, F: 4, E: 6, A: 7, B: 8, C: 9, D: 10}


class RewriteLimitError(RuntimeError):
    """Raised when a reduction exceeds the rule-firing cap."""


def iter_cap() -> int:
    env = os.environ.get("QPOIN_ITER_CAP")
    return int(env) if env else DEFAULT_ITER_CAP


# -- monomial helpers ---------------------------------------------------------


def monomial_word(m: Monomial) -> tuple:
    word = []
    for code in (P0, PM, P3, PP, F):
        word += [code] * m[_SLOT[code]]
    k = m[5]
    word += [K] * k if k > 0 else [KINV] * (-k)
    for code in (E, A, B, C, D):
        word += [code] * m[_SLOT[code]]
    return tuple(word)


def format_monomial(m: Monomial) -> str:
    parts = []
    for code in (P0, PM, P3, PP, F, KINV, K, E, A, B, C, D):
        if code == K:
            n = max(m[5], 0)
        elif code == KINV:
            n = max(-m[5], 0)
        else:
            n = m[_SLOT[code]]
        if n == 1:
            parts.append(GEN_NAMES[code])
        elif n > 1:
            parts.append(f"{GEN_NAMES[code]}^{n}")
    return "*".join(parts) if parts else "1"


def _bump(m: Monomial, slot: int, delta: int = 1) -> Monomial:
    lst = list(m)
    lst[slot] += delta
    return tuple(lst)


def _last(m: Monomial):
    """(last generator, monomial without it) or (None, m) for the unit."""
    for slot, code in ((10, D), (9, C), (8, B), (7, A), (6, E)):
        if m[slot]:
            return code, _bump(m, slot, -1)
    if m[5] > 0:
        return K, _bump(m, 5, -1)
    if m[5] < 0:
        return KINV, _bump(m, 5, 1)
    for slot, code in ((4, F), (3, PP), (2, P3), (1, PM), (0, P0)):
        if m[slot]:
            return code, _bump(m, slot, -1)
    return None, m


def _has_boost(m: Monomial) -> bool:
    return bool(m[7] or m[8] or m[9] or m[10])


def _has_lorentz(m: Monomial) -> bool:
    return any(m[4:11])


def has_momentum(m: Monomial) -> bool:
    return bool(m[0] or m[1] or m[2] or m[3])


# -- the oriented rule table --------------------------------------------------


def _build_rules():
    q2, qm2 = Q * Q, QINV * QINV
    lam_inv = LAM.inverse()
    rules = {}

    # momentum algebra: P0 central, eps-relations solved for the out-of-order pair
    for x in (PM, P3, PP):
        rules[(x, P0)] = [(ONE, (P0, x))]
    rules[(P3, PM)] = [(qm2, (PM, P3)), (QINV * LAM, (P0, PM))]
    rules[(PP, P3)] = [(qm2, (P3, PP)), (QINV * LAM, (P0, PP))]
    rules[(PP, PM)] = [(ONE, (PM, PP)), (LAM, (P0, P3)), (-LAM, (P3, P3))]

    # h P_nu = P_mu Lambda(h_(1))^mu_nu h_(2)
    for h in LORENTZ_GENS:
        for nu in range(4):
            acc: dict = {}
            for c, left, right in COPRODUCT_GEN[h]:
                lam = LAMBDA_GEN[left[0]] if left else None
                for mu in range(4):
                    entry = lam[mu][nu] if lam is not None else (ONE if mu == nu else ZERO)
                    if entry:
                        w = (MOMENTA[mu],) + right
                        acc[w] = acc.get(w, ZERO) + c * entry
            rules[(h, MOMENTA[nu])] = [(c, w) for w, c in acc.items() if c]

    # U_q(su2)
    rules[(K, KINV)] = [(ONE, ())]
    rules[(KINV, K)] = [(ONE, ())]
    rules[(K, F)] = [(qm2, (F, K))]
    rules[(KINV, F)] = [(q2, (F, KINV))]
    rules[(E, K)] = [(qm2, (K, E))]
    rules[(E, KINV)] = [(q2, (KINV, E))]
    rules[(E, F)] = [(ONE, (F, E)), (lam_inv, (K,)), (-lam_inv, (KINV,))]

    # Drinfeld double cross relations, boosts moved right of rotations
    p3, pm1, pm5 = qpow(3), qpow(-1), qpow(-5)
    rules[(A, E)] = [(Q, (E, A)), (-p3, (B,))]
    rules[(B, E)] = [(QINV, (E, B))]
    rules[(C, E)] = [(Q, (E, C)), (p3, (K, A)), (-p3, (D,))]
    rules[(D, E)] = [(QINV, (E, D)), (pm1, (K, B))]
    rules[(A, F)] = [(Q, (F, A)), (pm1, (C,))]
    rules[(B, F)] = [(Q, (F, B)), (-pm1, (KINV, A)), (pm1, (D,))]
    rules[(C, F)] = [(QINV, (F, C))]
    rules[(D, F)] = [(QINV, (F, D)), (-pm5, (KINV, C))]
    rules[(A, K)] = [(ONE, (K, A))]
    rules[(B, K)] = [(qm2, (K, B))]
    rules[(C, K)] = [(q2, (K, C))]
    rules[(D, K)] = [(ONE, (K, D))]
    rules[(A, KINV)] = [(ONE, (KINV, A))]
    rules[(B, KINV)] = [(q2, (KINV, B))]
    rules[(C, KINV)] = [(qm2, (KINV, C))]
    rules[(D, KINV)] = [(ONE, (KINV, D))]

    # SU_q^op
    rules[(B, A)] = [(Q, (A, B))]
    rules[(C, A)] = [(Q, (A, C))]
    rules[(C, B)] = [(ONE, (B, C))]
    rules[(D, B)] = [(Q, (B, D))]
    rules[(D, C)] = [(Q, (C, D))]
    rules[(D, A)] = [(ONE, ()), (Q, (B, C))]
    rules[(A, D)] = [(ONE, ()), (QINV, (B, C))]
    return rules


RULES = _build_rules()


# -- structured normal-ordering engine ----------------------------------------


class _Engine:
    def __init__(self):
        self.gen_cache: dict = {}
        self.mono_cache: dict = {}
        self.firings = 0
        self.cap = iter_cap()

    def _fire(self, what) -> None:
        self.firings += 1
        if self.firings > self.cap:
            self.firings = 0
            raise RewriteLimitError(
                f"rewrite cap {self.cap} exceeded while reducing {what}"
            )

    def mul_gen(self, m: Monomial, g: int):
        key = (m, g)
        hit = self.gen_cache.get(key)
        if hit is not None:
            return hit
        self._fire(format_monomial(m) + "*" + GEN_NAMES[g])
        out = self._mul_gen(m, g)
        res = tuple((mm, c) for mm, c in out.items() if c)
        self.gen_cache[key] = res
        return res

    def _by_rule(self, m: Monomial, g: int) -> dict:
        x, rest = _last(m)
        out: dict = {}
        for c, w in RULES[(x, g)]:
            for mm, cc in self.mul_word(rest, w).items():
                _acc(out, mm, c * cc)
        return out

    def _mul_gen(self, m: Monomial, g: int) -> dict:
        if g in (A, B, C, D):
            return _boost_times(m, g)
        if g in (F, KINV, K, E):
            if _has_boost(m):
                return self._by_rule(m, g)
            e, k = m[6], m[5]
            if g == E:
                return {_bump(m, 6): ONE}
            if g == K:
                return {_bump(m, 5): qpow(-4 * e)}
            if g == KINV:
                return {_bump(m, 5, -1): qpow(4 * e)}
            if e:
                return self._by_rule(m, g)
            return {_bump(m, 4): qpow(-4 * k)}
        # momentum
        if _has_lorentz(m):
            return self._by_rule(m, g)
        if g == P0:
            return {_bump(m, 0): ONE}
        x, _ = _last(m)
        if x is None or x <= g:
            return {_bump(m, _SLOT[g]): ONE}
        return self._by_rule(m, g)

    def mul_word(self, m: Monomial, word: Sequence[int]) -> dict:
        cur = {m: ONE}
        for g in word:
            nxt: dict = {}
            for mm, c in cur.items():
                for m2, c2 in self.mul_gen(mm, g):
                    _acc(nxt, m2, c * c2)
            cur = nxt
        return cur

    def mul_mono(self, m1: Monomial, m2: Monomial):
        if m2 == UNIT:
            return ((m1, ONE),)
        key = (m1, m2)
        hit = self.mono_cache.get(key)
        if hit is not None:
            return hit
        x, rest = _last(m2)
        out: dict = {}
        for mm, c in self.mul_mono(m1, rest):
            for m3, c3 in self.mul_gen(mm, x):
                _acc(out, m3, c * c3)
        res = tuple((mm, c) for mm, c in out.items() if c)
        self.mono_cache[key] = res
        return res


def _acc(d: dict, m, c) -> None:
    if not c:
        return
    old = d.get(m)
    if old is None:
        d[m] = c
    else:
        new = old + c
        if new:
            d[m] = new
        else:
            del d[m]


def _boost_times(m: Monomial, g: int) -> dict:
    """Right-multiply by a boost generator; the boost block is last in m."""
    a, b, c, d = m[7], m[8], m[9], m[10]
    if g == D:
        if a:
            base = _bump(m, 7, -1)
            f = qpow(-2 * (b + c))
            return {base: f, _bump(_bump(base, 8), 9): f * QINV}
        return {_bump(m, 10): ONE}
    if g == C:
        return {_bump(m, 9): qpow(2 * d)}
    if g == B:
        return {_bump(m, 8): qpow(2 * d)}
    # g == A
    if d:
        base = _bump(m, 10, -1)
        return {base: ONE, _bump(_bump(base, 8), 9): qpow(4 * d - 2)}
    return {_bump(m, 7): qpow(2 * (b + c))}


_ENGINE = _Engine()


def clear_caches() -> None:
    _ENGINE.gen_cache.clear()
    _ENGINE.mono_cache.clear()
    _STAR_CACHE.clear()


def set_iter_cap(cap: int) -> None:
    _ENGINE.cap = cap


# -- elements -----------------------------------------------------------------


class Element:
    """Finite linear combination of normal monomials with Scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def scalar(cls, c) -> Element:
        c = Scalar.coerce(c)
        return cls({UNIT: c}) if c else cls()

    @classmethod
    def one(cls) -> Element:
        return cls({UNIT: ONE})

    @classmethod
    def zero(cls) -> Element:
        return cls()

    # -- queries --

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def in_lorentz(self) -> bool:
        return not any(has_momentum(m) for m in self.terms)

    def in_momentum(self) -> bool:
        return not any(_has_lorentz(m) for m in self.terms)

    def coefficient(self, m: Monomial) -> Scalar:
        return self.terms.get(m, ZERO)

    def scalar_value(self) -> Scalar | None:
        """The coefficient if this is a multiple of 1, else None."""
        if not self.terms:
            return ZERO
        if len(self.terms) == 1 and UNIT in self.terms:
            return self.terms[UNIT]
        return None

    # -- arithmetic --

    def __add__(self, other) -> Element:
        other = _as_element(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            _acc(out, m, c)
        return Element(out)

    __radd__ = __add__

    def __neg__(self) -> Element:
        return Element({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> Element:
        other = _as_element(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Element:
        return _as_element(other) - self

    def scale(self, c) -> Element:
        c = Scalar.coerce(c)
        if not c:
            return Element()
        return Element({m: c * v for m, v in self.terms.items()})

    def __mul__(self, other) -> Element:
        if isinstance(other, Element):
            return multiply(self, other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other) -> Element:
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __pow__(self, n: int) -> Element:
        out = Element.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        other = _as_element(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def map_coefficients(self, fn) -> Element:
        return Element({m: fn(c) for m, c in self.terms.items()})

    def __str__(self) -> str:
        from .printing import format_element

        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({self})"


def _as_element(x):
    if isinstance(x, Element):
        return x
    if isinstance(x, (int, Scalar)):
        return Element.scalar(x)
    return NotImplemented


def gen(code: int | str) -> Element:
    """The generator with the given code or name as an Element."""
    if isinstance(code, str):
        code = GEN_NAMES.index(code)
    return Element(_ENGINE.mul_word(UNIT, (code,)))


def momentum(index: int) -> Element:
    """P_mu for 4-vector index 0, 1 (-), 2 (+), 3."""
    return gen(MOMENTA[index])


def normalize(word: Iterable[int | str], coeff=ONE) -> Element:
    """Normal form of ``coeff * word``; the word is read left to right."""
    codes = [GEN_NAMES.index(g) if isinstance(g, str) else g for g in word]
    _ENGINE.firings = 0
    return Element(_ENGINE.mul_word(UNIT, codes)).scale(coeff)


def multiply(x: Element, y: Element) -> Element:
    _ENGINE.firings = 0
    out: dict = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            c = c1 * c2
            for m, c3 in _ENGINE.mul_mono(m1, m2):
                _acc(out, m, c * c3)
    return Element(out)


def commutator(x: Element, y: Element) -> Element:
    return x * y - y * x


def from_words(terms: Iterable[tuple]) -> Element:
    """Sum of coeff * normalize(word) over (coeff, word) pairs."""
    out = Element()
    for c, w in terms:
        out = out + normalize(w, c)
    return out


# -- star ----------------------------------------------------------------------

_STAR_CACHE: dict = {}
_STAR_GEN = {g: None for g in STAR_GEN}


def _star_gen(g: int) -> Element:
    hit = _STAR_GEN[g]
    if hit is None:
        hit = from_words(STAR_GEN[g])
        _STAR_GEN[g] = hit
    return hit


def _star_mono(m: Monomial) -> Element:
    hit = _STAR_CACHE.get(m)
    if hit is None:
        hit = Element.one()
        for g in monomial_word(m):
            hit = _star_gen(g) * hit
        _STAR_CACHE[m] = hit
    return hit


def star(x: Element) -> Element:
    """Antilinear anti-automorphism; q is real so coefficients are unchanged."""
    out = Element()
    for m, c in x.terms.items():
        out = out + _star_mono(m).scale(c)
    return out


# -- raw word rewriting (for confluence testing) ---------------------------------


def _redexes(word: tuple):
    """Yield (start, stop, replacement) for every reducible subword."""
    n = len(word)
    for i in range(n - 1):
        rule = RULES.get((word[i], word[i + 1]))
        if rule is not None:
            yield i, i + 2, rule
    for i in range(n):
        if word[i] != A:
            continue
        j = i + 1
        while j < n and word[j] in (B, C):
            j += 1
        if j < n and j > i + 1 and word[j] == D:
            # a u d = q^-|u| (a d) u  with u in {b, c}*
            u = word[i + 1 : j]
            f = qpow(-2 * len(u))
            yield i, j + 1, [(f, u), (f * QINV, (B, C) + u)]


def rewrite_word(word: Sequence[int | str], strategy: str = "leftmost",
                 rng: random.Random | None = None, cap: int | None = None) -> dict:
    """Reduce a word with the raw rules; returns {normal word: coefficient}.

    ``strategy`` picks the redex to fire in each word: ``leftmost``,
    ``rightmost`` or ``random`` (with ``rng``).  Every distinct intermediate
    word is reduced once and its result reused, so equal words reached along
    different paths are merged.
    """
    cap = iter_cap() if cap is None else cap
    codes = tuple(GEN_NAMES.index(g) if isinstance(g, str) else g for g in word)
    memo: dict = {}
    children: dict = {}
    stack = [codes]
    steps = 0
    while stack:
        steps += 1
        if steps > cap:
            raise RewriteLimitError(
                f"rewrite cap {cap} exceeded while reducing "
                + "*".join(GEN_NAMES[g] for g in codes)
            )
        w = stack[-1]
        if w in memo:
            stack.pop()
            continue
        kids = children.get(w)
        if kids is None:
            found = list(_redexes(w))
            if not found:
                memo[w] = {w: ONE}
                stack.pop()
                continue
            if strategy == "leftmost":
                i, j, rule = min(found, key=lambda r: (r[0], r[1]))
            elif strategy == "rightmost":
                i, j, rule = max(found, key=lambda r: (r[1], r[0]))
            else:
                i, j, rule = found[rng.randrange(len(found))]
            kids = [(c, w[:i] + tuple(rep) + w[j:]) for c, rep in rule]
            children[w] = kids
        missing = [nw for _, nw in kids if nw not in memo]
        if missing:
            stack.extend(missing)
            continue
        out: dict = {}
        for c, nw in kids:
            for nf, c2 in memo[nw].items():
                _acc(out, nf, c * c2)
        memo[w] = out
        stack.pop()
    return memo[codes]


def word_to_monomial(word: tuple) -> Monomial:
    m = list(UNIT)
    for g in word:
        if g == K:
            m[5] += 1
        elif g == KINV:
            m[5] -= 1
        else:
            m[_SLOT[g]] += 1
    return tuple(m)


def _words_to_element(state: dict) -> Element:
    out: dict = {}
    for w, c in state.items():
        _acc(out, word_to_monomial(w), c)
    return Element(out)


STRATEGIES = ("leftmost", "rightmost", "random")


def random_word(rng: random.Random, max_len: int) -> tuple:
    n = rng.randint(1, max_len)
    return tuple(rng.randrange(12) for _ in range(n))


def confluence_fuzz(seed: int, trials: int, max_len: int) -> list[dict]:
    """Normalize random words under every strategy and the engine.

    Returns one record per mismatch (``word`` and the disagreeing strategies);
    an empty list means all reduction orders agreed.
    """
    rng = random.Random(seed)
    mismatches = []
    for _ in range(trials):
        w = random_word(rng, max_len)
        results = {}
        for s in STRATEGIES:
            sub = random.Random(rng.random())
            results[s] = _words_to_element(rewrite_word(w, s, sub))
        results["engine"] = normalize(w)
        ref = results["leftmost"]
        bad = [s for s, r in results.items() if r != ref]
        if bad:
            mismatches.append({
                "word": "*".join(GEN_NAMES[g] for g in w),
                "disagree": bad,
            })
    return mismatches

