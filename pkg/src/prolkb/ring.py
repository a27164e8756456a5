"""
Sparse elements of integral group rings Z[G].

A RingElement maps normal-form group elements to nonzero Python ints. Values
are treated as immutable; every operation returns a fresh element.
"""

from __future__ import annotations

import dataclasses
from typing import Iterable, Mapping

from .groups import (
    GroupDescriptor,
    GroupElement,
    GroupMorphism,
    apply_morphism,
    ginv,
    normalize,
)


class RingMismatch(ValueError):
    pass


class RingElement:
    __slots__ = ("group", "terms")

    def __init__(self, group: GroupDescriptor, terms: Mapping[GroupElement, int] | None = None):
        # terms must already be normalized with zero coefficients removed
        self.group = group
        self.terms = dict(terms) if terms else {}

    def items(self):
        """Terms in canonical order: by twist exponent, then lattice vector."""
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def is_zero(self) -> bool:
        return not self.terms

    def unit_inverse(self) -> RingElement | None:
        """The inverse of +-g, or None if this element is not of that form."""
        if len(self.terms) != 1:
            return None
        (g, a), = self.terms.items()
        if a not in (1, -1):
            return None
        return RingElement(self.group, {ginv(self.group, g): a})

    def __add__(self, other):
        return r_add(self, _coerce(self.group, other))

    __radd__ = __add__

    def __sub__(self, other):
        return r_add(self, r_neg(_coerce(self.group, other)))

    def __rsub__(self, other):
        return r_add(_coerce(self.group, other), r_neg(self))

    def __neg__(self):
        return r_neg(self)

    def __mul__(self, other):
        return r_mul(self, _coerce(self.group, other))

    def __rmul__(self, other):
        return r_mul(_coerce(self.group, other), self)

    def __eq__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.group == other.group and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"RingElement({format_element(self)})"

    def __str__(self):
        return format_element(self)


def _coerce(group, x) -> RingElement:
    if isinstance(x, RingElement):
        return x
    if isinstance(x, int):
        return r_monomial(group, x, group.identity)
    raise TypeError(f"cannot use {type(x).__name__} as a ring element")


def _check(a: RingElement, b: RingElement):
    if a.group != b.group:
        raise RingMismatch(f"elements live in different rings: {a.group} vs {b.group}")


def r_zero(group: GroupDescriptor) -> RingElement:
    return RingElement(group)


def r_one(group: GroupDescriptor) -> RingElement:
    return RingElement(group, {group.identity: 1})


def r_monomial(group: GroupDescriptor, coeff: int, g: GroupElement) -> RingElement:
    if coeff == 0:
        return RingElement(group)
    return RingElement(group, {g: int(coeff)})


def r_from_terms(group: GroupDescriptor, terms: Iterable[tuple[int, Iterable[int], int]]) -> RingElement:
    """Build from raw (coeff, v, c) triples, normalizing and merging."""
    out: dict[GroupElement, int] = {}
    for coeff, v, c in terms:
        g = normalize(group, tuple(v), c)
        s = out.get(g, 0) + int(coeff)
        if s:
            out[g] = s
        else:
            out.pop(g, None)
    return RingElement(group, out)


def r_add(a: RingElement, b: RingElement) -> RingElement:
    _check(a, b)
    out = dict(a.terms)
    for g, y in b.terms.items():
        s = out.get(g, 0) + y
        if s:
            out[g] = s
        else:
            del out[g]
    return RingElement(a.group, out)


def r_neg(a: RingElement) -> RingElement:
    return RingElement(a.group, {g: -x for g, x in a.terms.items()})


def r_mul(a: RingElement, b: RingElement) -> RingElement:
    _check(a, b)
    mul = a.group.mul
    out: dict[GroupElement, int] = {}
    for g, x in a.terms.items():
        for h, y in b.terms.items():
            k = mul(g, h)
            s = out.get(k, 0) + x * y
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return RingElement(a.group, out)


def r_equal(a: RingElement, b: RingElement) -> bool:
    _check(a, b)
    return a.terms == b.terms


def r_support_size(a: RingElement) -> int:
    return len(a.terms)


def r_augment(a: RingElement) -> int:
    """Sum of coefficients (the ring map Z[G] -> Z killing G)."""
    return sum(a.terms.values())


@dataclasses.dataclass(frozen=True)
class RingMorphism:
    """Z[G] -> Z[H] induced by a group morphism; coefficients map identically."""

    group_morphism: GroupMorphism

    @property
    def source(self) -> GroupDescriptor:
        return self.group_morphism.source

    @property
    def target(self) -> GroupDescriptor:
        return self.group_morphism.target

    def __call__(self, a: RingElement) -> RingElement:
        return r_map(self, a)


def r_map(phi: RingMorphism, a: RingElement) -> RingElement:
    if a.group != phi.source:
        raise RingMismatch(f"element of {a.group} is not in the source ring {phi.source}")
    gm = phi.group_morphism
    out: dict[GroupElement, int] = {}
    for g, x in a.terms.items():
        k = apply_morphism(gm, g)
        s = out.get(k, 0) + x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return RingElement(phi.target, out)


# -- serialization ----------------------------------------------------------

def element_to_json(a: RingElement) -> dict:
    return {"terms": [{"coeff": str(x), "v": list(g.v), "c": g.c} for g, x in a.items()]}


def element_from_json(group: GroupDescriptor, data: dict) -> RingElement:
    return r_from_terms(group, ((int(t["coeff"]), t["v"], t["c"]) for t in data["terms"]))


def _letters(m: int) -> list[str]:
    if m == 1:
        return ["q"]
    if m == 2:
        return ["q_1", "q_2"]
    return [f"x_{{{j + 1}}}" for j in range(m)]


def _monomial_tex(g: GroupElement) -> str:
    parts = []
    for name, e in zip(_letters(len(g.v)), g.v):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{{{e}}}")
    if g.c == 1:
        parts.append("t")
    elif g.c:
        parts.append(f"t^{{{g.c}}}")
    return "".join(parts)


def format_element(a: RingElement) -> str:
    """Signed sum of monomials x^v t^c in canonical order, e.g. '-q_1q_2t'."""
    if not a.terms:
        return "0"
    out = []
    for g, x in a.items():
        mono = _monomial_tex(g)
        mag = abs(x)
        body = mono if mag == 1 and mono else (f"{mag}{mono}" if mono else str(mag))
        sign = "-" if x < 0 else "+"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text
