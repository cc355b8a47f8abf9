"""Iwahori-Hecke algebra of an affine Coxeter system, with parameter q.

The algebra has basis (e_w) indexed by group elements, unit e_1, and is
generated by the e_s subject to

    (R1)  e_s * e_s = (q - 1) e_s + q e_1,
    (R2)  the braid relations of the diagram.

Products are computed from the only rule the presentation forces:

    e_s * e_w = e_{sw}                    if l(sw) > l(w),
    e_s * e_w = (q-1) e_w + q e_{sw}      if l(sw) < l(w),

extended to e_v * e_w by decomposing v into a reduced word and applying
the one-letter rule repeatedly; that the result does not depend on the
chosen reduced word is itself a tested property.  Lengths come from the
shared Cayley index of the coxeter module.

The parameter q is carried per element as an exact rational (integers in
geometric uses, arbitrary rationals allowed algebraically); products
require equal q and equal diagram.

``special_character`` is the algebra character determined by e_s -> -1,
so e_w -> (-1)^l(w).  ``convolve_chamber_function`` is the geometric
right action of a generator on functions on the chambers of a ball: the
value at C of f * e_s is the sum of f over the other p chambers sharing
C's face of the generator's type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .building import BallGraph, face_of, generator_face_types, vertex_label
from .coxeter import (
    CoxeterDiagram,
    GroupElement,
    _matmul,
    element_from_word,
    identity_element,
    length,
    reduced_word,
)

__all__ = [
    "HeckeElement",
    "unit",
    "basis_element",
    "multiply",
    "special_character",
    "convolve_chamber_function",
    "hecke_to_json",
]


@dataclass(frozen=True)
class HeckeElement:
    """Finite linear combination of basis elements e_w over one diagram.

    ``terms`` is sorted by the matrix of w and carries no zero
    coefficients, so equality of elements is equality of the fields.
    """

    diagram: CoxeterDiagram
    q: Fraction
    terms: tuple[tuple[GroupElement, Fraction], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", Fraction(self.q))
        cleaned = tuple(
            (w, Fraction(c)) for w, c in sorted(self.terms, key=lambda t: t[0].matrix) if c != 0
        )
        mats = [w.matrix for w, _ in cleaned]
        if len(set(mats)) != len(mats):
            raise ValueError("duplicate basis elements in terms")
        size = self.diagram.size
        if any(len(w.matrix) != size for w, _ in cleaned):
            raise ValueError("group elements do not match the diagram")
        object.__setattr__(self, "terms", cleaned)

    @property
    def support(self) -> tuple[GroupElement, ...]:
        return tuple(w for w, _ in self.terms)

    def coefficient(self, w: GroupElement) -> Fraction:
        for v, c in self.terms:
            if v == w:
                return c
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self.terms

    def _require_compatible(self, other: "HeckeElement") -> None:
        if self.diagram != other.diagram:
            raise ValueError("elements live over different diagrams")
        if self.q != other.q:
            raise ValueError("elements carry different parameters q")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._require_compatible(other)
        acc: dict[GroupElement, Fraction] = dict(self.terms)
        for w, c in other.terms:
            acc[w] = acc.get(w, Fraction(0)) + c
        return HeckeElement(self.diagram, self.q, tuple(acc.items()))

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.diagram, self.q, tuple((w, -c) for w, c in self.terms))

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def __rmul__(self, scalar: int | Fraction) -> "HeckeElement":
        s = Fraction(scalar)
        return HeckeElement(self.diagram, self.q, tuple((w, s * c) for w, c in self.terms))

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        if isinstance(other, HeckeElement):
            return multiply(self, other)
        return NotImplemented


def unit(diagram: CoxeterDiagram, q: int | Fraction) -> HeckeElement:
    """The identity element e_1."""
    return HeckeElement(diagram, Fraction(q), ((identity_element(diagram), Fraction(1)),))


def basis_element(
    diagram: CoxeterDiagram, w: GroupElement | Sequence[int], q: int | Fraction
) -> HeckeElement:
    """The basis element e_w; w may be given as a word in the generators."""
    if not isinstance(w, GroupElement):
        w = element_from_word(diagram, w)
    return HeckeElement(diagram, Fraction(q), ((w, Fraction(1)),))


def _left_mul_generator(
    diagram: CoxeterDiagram, q: Fraction, s: int, coeffs: Mapping[GroupElement, Fraction]
) -> dict[GroupElement, Fraction]:
    # e_s * (sum c_w e_w) by the one-letter rule
    gen = element_from_word(diagram, [s])
    out: dict[GroupElement, Fraction] = {}

    def add(w: GroupElement, c: Fraction) -> None:
        out[w] = out.get(w, Fraction(0)) + c

    for w, c in coeffs.items():
        lw = length(diagram, w)
        sw = GroupElement(_matmul(gen.matrix, w.matrix))
        lsw = length(diagram, sw)
        if lsw == lw + 1:
            add(sw, c)
        elif lsw == lw - 1:
            add(w, (q - 1) * c)
            add(sw, q * c)
        else:
            raise AssertionError("generator must change length by exactly 1")
    return {w: c for w, c in out.items() if c != 0}


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the algebra, bilinear over the one-letter rule."""
    a._require_compatible(b)
    diagram, q = a.diagram, a.q
    right = dict(b.terms)
    acc: dict[GroupElement, Fraction] = {}
    for v, cv in a.terms:
        partial = right
        for s in reversed(reduced_word(diagram, v)):
            partial = _left_mul_generator(diagram, q, s, partial)
        for w, c in partial.items():
            acc[w] = acc.get(w, Fraction(0)) + cv * c
    return HeckeElement(diagram, q, tuple(acc.items()))


def special_character(x: HeckeElement) -> Fraction:
    """The character sending every e_s to -1, hence e_w to (-1)^l(w)."""
    total = Fraction(0)
    for w, c in x.terms:
        total += c * (-1) ** length(x.diagram, w)
    return total


def convolve_chamber_function(
    f: Mapping[int, Fraction], generator: int, graph: BallGraph
) -> dict[int, Fraction]:
    """Right action of e_s on a function over a ball's chambers.

    ``f`` maps chamber indices to values (missing indices read as 0).
    The result is defined on every chamber whose face of the generator's
    type is interior to the ball; at such a chamber C it is the sum of f
    over the other p chambers sharing that face.

    Chambers of the ball whose relevant face touches the boundary are
    omitted from the result, so compositions should stay a step inside
    the radius.
    """
    ctx = graph.ctx
    ftype = generator_face_types(ctx)[generator]
    full = ctx.p + 1
    out: dict[int, Fraction] = {}
    for i, chamber in enumerate(graph.chambers):
        position = next(
            pos for pos in range(ctx.n) if vertex_label(chamber.classes[pos], ctx) == ftype
        )
        face = face_of(chamber, position)
        members = graph.faces.get(face, ())
        if len(members) != full:
            continue
        total = Fraction(0)
        for j in members:
            if j != i:
                total += f.get(j, Fraction(0))
        out[i] = total
    return out


def hecke_to_json(x: HeckeElement) -> dict:
    """Plain-data form: q and (reduced word, coefficient) pairs."""
    return {
        "q": {"num": str(x.q.numerator), "den": str(x.q.denominator)},
        "terms": [
            {
                "word": list(reduced_word(x.diagram, w)),
                "coeff": {"num": str(c.numerator), "den": str(c.denominator)},
            }
            for w, c in x.terms
        ],
    }
