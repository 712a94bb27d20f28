"""Hopf structure of the q-Lorentz algebra and its actions.

Coproduct, counit and antipode are defined on generators (see
:mod:`qpoin.tables`) and extended multiplicatively, resp. anti-multiplicatively,
to normal monomials.  They are only defined on the Lorentz subalgebra; any
momentum generator raises :class:`NotLorentzError`.
"""

from __future__ import annotations

from collections.abc import Callable

from .algebra import _ENGINE, UNIT, Element, _acc, from_words, momentum, monomial_word, star
from .rep import lambda_of
from .scalars import ONE, ZERO, Scalar
from .tables import ANTIPODE_GEN, COPRODUCT_GEN, COUNIT_GEN, GEN_NAMES, LORENTZ7, MOMENTA

__all__ = [
    "NotLorentzError",
    "TensorElement",
    "coproduct",
    "counit",
    "antipode",
    "antipode_inv",
    "ad_left",
    "ad_right",
    "module_action",
    "check_hopf_axioms",
]


class NotLorentzError(ValueError):
    """A Hopf map was applied to an element containing momenta."""


def _require_lorentz(x: Element, what: str) -> None:
    if not x.in_lorentz():
        raise NotLorentzError(f"{what} is defined on the Lorentz subalgebra only; got {x}")


class TensorElement:
    """Finite sum of x (x) y with both legs normal Lorentz monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def pure(cls, x: Element, y: Element) -> TensorElement:
        out: dict = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                _acc(out, (m1, m2), c1 * c2)
        return cls(out)

    def __add__(self, other: TensorElement) -> TensorElement:
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return TensorElement(out)

    def __neg__(self) -> TensorElement:
        return TensorElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: TensorElement) -> TensorElement:
        return self + (-other)

    def scale(self, c) -> TensorElement:
        c = Scalar.coerce(c)
        return TensorElement({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return self.scale(other)
        out: dict = {}
        for (x1, y1), c1 in self.terms.items():
            for (x2, y2), c2 in other.terms.items():
                c = c1 * c2
                left = _ENGINE.mul_mono(x1, x2)
                right = _ENGINE.mul_mono(y1, y2)
                for mx, cx in left:
                    for my, cy in right:
                        _acc(out, (mx, my), c * cx * cy)
        return TensorElement(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def legs(self):
        """Iterate (coefficient, left Element, right Element)."""
        for (m1, m2), c in self.terms.items():
            yield c, Element({m1: ONE}), Element({m2: ONE})

    def map(self, left: Callable, right: Callable) -> TensorElement:
        out = TensorElement()
        for c, x, y in self.legs():
            out = out + TensorElement.pure(left(x), right(y)).scale(c)
        return out

    def multiply_legs(self) -> Element:
        out = Element()
        for c, x, y in self.legs():
            out = out + (x * y).scale(c)
        return out

    def __str__(self) -> str:
        from .algebra import format_monomial
        from .printing import _coefficient_prefix

        if not self.terms:
            return "0"
        out = ""
        for (m1, m2), c in sorted(self.terms.items()):
            term = f"{_coefficient_prefix(c)}{format_monomial(m1)} (x) {format_monomial(m2)}"
            if not out:
                out = term
            elif term.startswith("-"):
                out += f" - {term[1:]}"
            else:
                out += f" + {term}"
        return out

    def __repr__(self) -> str:
        return f"TensorElement({self})"


# -- coproduct, counit, antipode ------------------------------------------------


def _word_mono(word: tuple):
    """Normal monomial of a word of length <= 1."""
    (m,) = from_words([(ONE, word)]).terms
    return m


_DELTA_GEN = {
    g: TensorElement({(_word_mono(l), _word_mono(r)): c for c, l, r in terms})
    for g, terms in COPRODUCT_GEN.items()
}
_DELTA_CACHE: dict = {}
_S_CACHE: dict = {}


def _delta_mono(m) -> TensorElement:
    hit = _DELTA_CACHE.get(m)
    if hit is None:
        hit = TensorElement({(UNIT, UNIT): ONE})
        for g in monomial_word(m):
            hit = hit * _DELTA_GEN[g]
        _DELTA_CACHE[m] = hit
    return hit


def coproduct(h: Element) -> TensorElement:
    _require_lorentz(h, "coproduct")
    out = TensorElement()
    for m, c in h.terms.items():
        out = out + _delta_mono(m).scale(c)
    return out


def counit(h: Element) -> Scalar:
    _require_lorentz(h, "counit")
    total = ZERO
    for m, c in h.terms.items():
        v = c
        for g in monomial_word(m):
            v = v * COUNIT_GEN[g]
            if not v:
                break
        total = total + v
    return total


def _antipode_mono(m) -> Element:
    hit = _S_CACHE.get(m)
    if hit is None:
        hit = Element.one()
        for g in monomial_word(m):
            hit = from_words(ANTIPODE_GEN[g]) * hit
        _S_CACHE[m] = hit
    return hit


def antipode(h: Element) -> Element:
    _require_lorentz(h, "antipode")
    out = Element()
    for m, c in h.terms.items():
        out = out + _antipode_mono(m).scale(c)
    return out


def antipode_inv(h: Element) -> Element:
    """S^-1 = * S *, valid because (S *)^2 = id in a Hopf-* algebra."""
    return star(antipode(star(h)))


# -- actions ------------------------------------------------------------------------


def ad_left(h: Element, x: Element) -> Element:
    """h_(1) x S(h_(2))."""
    out = Element()
    for c, h1, h2 in coproduct(h).legs():
        out = out + (h1 * x * antipode(h2)).scale(c)
    return out


def ad_right(x: Element, h: Element) -> Element:
    """S(h_(1)) x h_(2)."""
    out = Element()
    for c, h1, h2 in coproduct(h).legs():
        out = out + (antipode(h1) * x * h2).scale(c)
    return out


_ACT_CACHE: dict = {}


def _act_word(hm, word: tuple) -> Element:
    key = (hm, word)
    hit = _ACT_CACHE.get(key)
    if hit is not None:
        return hit
    h = Element({hm: ONE})
    if not word:
        hit = Element.scalar(counit(h))
    else:
        nu = MOMENTA.index(word[0])
        hit = Element()
        for c, h1, h2 in coproduct(h).legs():
            lam = lambda_of(h1)
            first = Element()
            for mu in range(4):
                if lam[mu][nu]:
                    first = first + momentum(mu).scale(lam[mu][nu])
            if first:
                rest = Element()
                for m2, c2 in h2.terms.items():
                    rest = rest + _act_word(m2, word[1:]).scale(c2)
                hit = hit + (first * rest).scale(c)
    _ACT_CACHE[key] = hit
    return hit


def module_action(h: Element, x: Element) -> Element:
    """h |> x for x in the momentum algebra, via Lambda and the coproduct."""
    _require_lorentz(h, "module_action")
    if not x.in_momentum():
        raise ValueError(f"module_action needs a momentum-algebra element; got {x}")
    out = Element()
    for hm, hc in h.terms.items():
        for xm, xc in x.terms.items():
            out = out + _act_word(hm, monomial_word(xm)).scale(hc * xc)
    return out


# -- axiom checks -------------------------------------------------------------------


def _triple(t: TensorElement, side: str, delta: Callable) -> dict:
    out: dict = {}
    for c, x, y in t.legs():
        if side == "left":
            for (a, b), c2 in delta(x).terms.items():
                for m, c3 in y.terms.items():
                    _acc(out, (a, b, m), c * c2 * c3)
        else:
            for (a, b), c2 in delta(y).terms.items():
                for m, c3 in x.terms.items():
                    _acc(out, (m, a, b), c * c2 * c3)
    return out


def check_hopf_axioms(delta: Callable[[Element], TensorElement] | None = None) -> list[dict]:
    """Verify the Hopf-* axioms on the seven Lorentz generators.

    ``delta`` replaces the coproduct (used for negative controls).  Returns one
    record ``{"id", "ok", "witness"}`` per axiom and generator.
    """
    delta = delta or coproduct
    results = []

    def record(axiom, g, lhs, rhs):
        ok = lhs == rhs
        witness = "" if ok else f"{lhs} != {rhs}"
        results.append({"id": f"{axiom}.{GEN_NAMES[g]}", "ok": ok, "witness": witness})

    for g in LORENTZ7:
        h = Element({_gen_mono(g): ONE})
        dh = delta(h)
        record("coassociativity", g, _triple(dh, "left", delta), _triple(dh, "right", delta))
        left_counit = Element()
        right_counit = Element()
        for c, x, y in dh.legs():
            left_counit = left_counit + y.scale(c * counit(x))
            right_counit = right_counit + x.scale(c * counit(y))
        record("counit.left", g, left_counit, h)
        record("counit.right", g, right_counit, h)
        eps = Element.scalar(counit(h))
        record("antipode.left", g, dh.map(antipode, lambda y: y).multiply_legs(), eps)
        record("antipode.right", g, dh.map(lambda x: x, antipode).multiply_legs(), eps)
        record("star", g, delta(star(h)), dh.map(star, star))
        s_star = lambda x: antipode(star(x))
        record("s_star_involution", g, s_star(s_star(h)), h)
    return results


def _gen_mono(g: int):
    return _word_mono((g,))

