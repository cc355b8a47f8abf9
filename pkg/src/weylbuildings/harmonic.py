"""Harmonic cochains on chamber sets of the building.

A cochain assigns an exact rational to each chamber.  It is harmonic at a
codimension-1 face D when the values over the p + 1 chambers containing D
sum to zero; ``harmonicity_defect`` returns that sum for an interior face
of a ball.

Two storage forms coexist.  Map form is a finite support map with no zero
entries.  Rule form holds a base chamber and an integer q >= 2 and means

    C  |->  (-1/q)^d(base, C),

the unique cochain of that decay invariant under the base chamber's
stabilizer; it evaluates lazily against a ball centered at the base.
``iwahori_vector`` builds it.  Its harmonicity is a sharp cancellation:
among the p + 1 chambers over an interior face, exactly one sits at the
minimal distance d and the other p at d + 1 (``min_distance_chamber``
checks that and returns the minimizer), so the sum is
(-1/q)^d + p (-1/q)^(d+1) = 0 exactly when q = p.

``finite_support_rigidity`` decides, by exact rational rank computation,
that the only cochain supported strictly inside a ball that is harmonic
at every fully visible face is zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .building import BallGraph, Face, FlagChamber

__all__ = [
    "Cochain",
    "cochain_from_map",
    "iwahori_vector",
    "harmonicity_defect",
    "min_distance_chamber",
    "decay_profile",
    "finite_support_rigidity",
    "cochain_to_json",
]


@dataclass(frozen=True)
class Cochain:
    """A chamber function in map form or closed-rule form, exactly one.

    Map form: ``values`` is a tuple of (chamber, nonzero rational),
    sorted canonically.  Rule form: ``rule`` is (base chamber, q) and the
    function is C -> (-1/q)^d(base, C).
    """

    values: tuple[tuple[FlagChamber, Fraction], ...] | None = None
    rule: tuple[FlagChamber, int] | None = None

    def __post_init__(self) -> None:
        if (self.values is None) == (self.rule is None):
            raise ValueError("exactly one of values and rule must be given")
        if self.values is not None:
            cleaned = tuple(
                (c, Fraction(v))
                for c, v in sorted(self.values, key=lambda t: t[0].sort_key())
                if v != 0
            )
            keys = [c for c, _ in cleaned]
            if len(set(keys)) != len(keys):
                raise ValueError("duplicate chambers in values")
            object.__setattr__(self, "values", cleaned)
        else:
            base, q = self.rule
            if not isinstance(base, FlagChamber):
                raise ValueError("rule base must be a chamber")
            if q < 2:
                raise ValueError("rule parameter q must be at least 2")

    def value(self, chamber: FlagChamber, graph: BallGraph) -> Fraction:
        """Evaluate at a chamber, resolving distances through ``graph``."""
        if self.values is not None:
            for c, v in self.values:
                if c == chamber:
                    return v
            return Fraction(0)
        base, q = self.rule
        if graph.chambers[0] != base:
            raise ValueError("rule-form cochain needs a ball centered at its base")
        i = graph.index.get(chamber)
        if i is None:
            raise ValueError("chamber outside the ball: distance unknown")
        return Fraction(-1, q) ** graph.distance[i]

    def value_at_index(self, i: int, graph: BallGraph) -> Fraction:
        if self.rule is not None:
            base, q = self.rule
            if graph.chambers[0] != base:
                raise ValueError("rule-form cochain needs a ball centered at its base")
            return Fraction(-1, q) ** graph.distance[i]
        return self.value(graph.chambers[i], graph)


def cochain_from_map(values: Mapping[FlagChamber, Fraction]) -> Cochain:
    """Map-form cochain; zero entries are dropped."""
    return Cochain(values=tuple(values.items()))


def iwahori_vector(base: FlagChamber, q: int) -> Cochain:
    """The rule-form cochain C -> (-1/q)^d(base, C), with value 1 at base."""
    return Cochain(rule=(base, q))


def harmonicity_defect(f: Cochain, face: Face, graph: BallGraph) -> Fraction:
    """Sum of f over all p + 1 chambers containing an interior face."""
    members = graph.faces.get(face)
    if members is None or len(members) != graph.ctx.p + 1:
        raise ValueError("face is not interior to the ball")
    return sum((f.value_at_index(i, graph) for i in members), Fraction(0))


def min_distance_chamber(face: Face, graph: BallGraph) -> tuple[FlagChamber, int]:
    """The unique chamber over an interior face closest to the center.

    Asserts the sharp shape of the distance multiset: one chamber at the
    minimum delta and the remaining p at delta + 1; any other shape is
    reported as a failure, not returned.
    """
    members = graph.faces.get(face)
    if members is None or len(members) != graph.ctx.p + 1:
        raise ValueError("face is not interior to the ball")
    dists = [(graph.distance[i], i) for i in members]
    dists.sort()
    delta = dists[0][0]
    if any(d != delta + 1 for d, _ in dists[1:]):
        raise AssertionError(
            "distance multiset over a face must be one minimum and p at minimum + 1"
        )
    return graph.chambers[dists[0][1]], delta


def decay_profile(f: Cochain, graph: BallGraph) -> tuple[tuple[int, Fraction], ...]:
    """Per-distance maxima of |f| over the ball: (k, max at distance k)."""
    out: list[Fraction] = [Fraction(0)] * (max(graph.distance) + 1)
    for i in range(len(graph.chambers)):
        v = abs(f.value_at_index(i, graph))
        k = graph.distance[i]
        if v > out[k]:
            out[k] = v
    return tuple(enumerate(out))


def finite_support_rigidity(graph: BallGraph) -> bool:
    """Whether zero is the only cochain supported at distance <= R - 1
    that is harmonic at every face fully visible in the ball.

    Sets up the exact linear system (one equation per interior face, one
    unknown per interior chamber) and returns True iff its kernel is
    trivial, by fraction-exact Gaussian elimination.
    """
    if graph.radius < 2:
        raise ValueError("rigidity needs radius at least 2")
    interior = [i for i, d in enumerate(graph.distance) if d <= graph.radius - 1]
    column_of = {i: j for j, i in enumerate(interior)}
    unknowns = len(interior)
    rows: list[list[Fraction]] = []
    full = graph.ctx.p + 1
    for members in graph.faces.values():
        if len(members) != full:
            continue
        row = [Fraction(0)] * unknowns
        touched = False
        for i in members:
            j = column_of.get(i)
            if j is not None:
                row[j] += 1
                touched = True
        if touched:
            rows.append(row)
    rank = 0
    for col in range(unknowns):
        sel = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if sel is None:
            continue
        rows[rank], rows[sel] = rows[sel], rows[rank]
        lead = rows[rank][col]
        rows[rank] = [x / lead for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == unknowns:
            break
    return rank == unknowns


def cochain_to_json(f: Cochain, graph: BallGraph | None = None) -> list[dict]:
    """Values as (canonical chamber form, exact rational) records.

    Map form serializes its support; rule form needs a ball and
    serializes over all its chambers.
    """
    if f.values is not None:
        pairs = f.values
    else:
        if graph is None:
            raise ValueError("rule-form serialization needs a ball")
        pairs = tuple(
            (graph.chambers[i], f.value_at_index(i, graph))
            for i in range(len(graph.chambers))
        )
    return [
        {
            "chamber": [[list(row) for row in cls.hnf] for cls in chamber.classes],
            "value": {"num": str(v.numerator), "den": str(v.denominator)},
        }
        for chamber, v in pairs
    ]
