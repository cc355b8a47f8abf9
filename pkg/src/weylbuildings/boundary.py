"""Cochain complex and boundary machinery on the GL(2) tree.

Vertices are lattice classes (n = 2); each vertex has p + 1 neighbors.
A 0-cochain is a finitely supported rational function on vertices; a
1-cochain is a finitely supported antisymmetric function on oriented
edges, omega(s, t) = -omega(t, s).  The coboundary is

    d f (s, t) = f(s) - f(t),

and ``integrate`` sums a 1-cochain along a vertex path; on a tree the
integral depends only on the endpoints.

Ends of the tree through the sphere of radius r around a base vertex o
are the (p + 1) p^(r-1) oriented rim edges (t, s) with s at depth r.  The
map ``boundary_value`` sends a 1-cochain supported inside the sphere to
the function assigning each end the integral from o out to it; this is
the ultimate value of the cochain along the end.  For a coboundary d f
the result is the constant f(o), which is the kernel half of the story;
``primitive_cochain`` inverts the other half, rebuilding a finitely
supported f with d f = omega whenever the boundary value is constant.
``lift`` realizes surjectivity: any assignment of values to the ends is
the boundary value of a 1-cochain carried by the rim edges.

When o is the standard vertex, each end is named by a point ball of the
projective line: a vertex at depth r is the line lattice
{ x : x = lambda v mod p^r } of a primitive vector v, and ``end_chart``
returns v normalized to [1 : y] (first coordinate a unit) or [x : 1]
(second a unit, p | x), with the free coordinate reduced mod p^r.  The
charts of distinct ends at one depth are disjoint residue balls.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .building import (
    Face,
    LatticeClass,
    PrimeContext,
    chambers_containing,
    classes_adjacent,
    standard_lattice,
)

__all__ = [
    "ZeroCochain",
    "zero_cochain_from_map",
    "OneCochain",
    "one_cochain_from_map",
    "coboundary",
    "integrate",
    "vertex_neighbors",
    "VertexTree",
    "vertex_tree",
    "sphere_vertex_count",
    "end_count",
    "BoundaryFunction",
    "boundary_value",
    "primitive_cochain",
    "lift",
    "end_chart",
    "boundary_function_to_json",
]


def _require_tree(ctx: PrimeContext) -> None:
    if ctx.n != 2:
        raise ValueError("the boundary machinery lives on the n = 2 tree")


# -- cochains -------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroCochain:
    """Finitely supported rational function on vertices; no zero entries."""

    values: tuple[tuple[LatticeClass, Fraction], ...]

    def __post_init__(self) -> None:
        cleaned = tuple(
            (v, Fraction(x))
            for v, x in sorted(self.values, key=lambda t: t[0].hnf)
            if x != 0
        )
        keys = [v for v, _ in cleaned]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate vertices")
        object.__setattr__(self, "values", cleaned)

    @property
    def support(self) -> tuple[LatticeClass, ...]:
        return tuple(v for v, _ in self.values)

    def value(self, vertex: LatticeClass) -> Fraction:
        for v, x in self.values:
            if v == vertex:
                return x
        return Fraction(0)


def zero_cochain_from_map(values: Mapping[LatticeClass, Fraction]) -> ZeroCochain:
    return ZeroCochain(tuple(values.items()))


Edge = tuple[LatticeClass, LatticeClass]


@dataclass(frozen=True)
class OneCochain:
    """Antisymmetric rational function on oriented edges, finite support.

    One value is stored per unordered edge, on the orientation with the
    lexicographically smaller canonical form first; lookups on either
    orientation apply the sign.
    """

    values: tuple[tuple[Edge, Fraction], ...]

    def __post_init__(self) -> None:
        acc: dict[Edge, Fraction] = {}
        for (s, t), x in self.values:
            if s == t:
                raise ValueError("an edge needs two distinct vertices")
            key, signed = ((s, t), Fraction(x)) if s.hnf < t.hnf else ((t, s), -Fraction(x))
            if key in acc and acc[key] != signed:
                raise ValueError("conflicting values on the two orientations of an edge")
            acc[key] = signed
        cleaned = tuple(
            (e, x) for e, x in sorted(acc.items(), key=lambda t: (t[0][0].hnf, t[0][1].hnf)) if x != 0
        )
        object.__setattr__(self, "values", cleaned)

    @property
    def support(self) -> tuple[Edge, ...]:
        return tuple(e for e, _ in self.values)

    def support_vertices(self) -> tuple[LatticeClass, ...]:
        out = {v for (s, t), _ in self.values for v in (s, t)}
        return tuple(sorted(out, key=lambda v: v.hnf))

    def value(self, s: LatticeClass, t: LatticeClass) -> Fraction:
        key, sign = ((s, t), 1) if s.hnf < t.hnf else ((t, s), -1)
        for e, x in self.values:
            if e == key:
                return sign * x
        return Fraction(0)


def one_cochain_from_map(values: Mapping[Edge, Fraction]) -> OneCochain:
    return OneCochain(tuple(values.items()))


# -- tree structure -----------------------------------------------------------------


def vertex_neighbors(vertex: LatticeClass, ctx: PrimeContext) -> tuple[LatticeClass, ...]:
    """The p + 1 neighbors, read off the chambers through the vertex."""
    _require_tree(ctx)
    out = []
    for chamber in chambers_containing(Face((vertex,)), ctx):
        (other,) = tuple(c for c in chamber.classes if c != vertex)
        out.append(other)
    return tuple(sorted(set(out), key=lambda v: v.hnf))


@dataclass(frozen=True)
class VertexTree:
    """Vertices within a depth around an origin, with BFS parents."""

    ctx: PrimeContext
    origin: LatticeClass
    radius: int
    vertices: tuple[LatticeClass, ...]
    depth: tuple[int, ...]
    parent: tuple[int | None, ...]
    index: Mapping[LatticeClass, int]

    def __len__(self) -> int:
        return len(self.vertices)

    def shell(self, k: int) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.depth) if d == k)

    def path_indices(self, i: int) -> tuple[int, ...]:
        out = [i]
        while self.parent[out[-1]] is not None:
            out.append(self.parent[out[-1]])
        return tuple(reversed(out))

    def ends(self) -> tuple[Edge, ...]:
        """Oriented rim edges (parent, leaf), leaves at the full depth."""
        rim = []
        for i in self.shell(self.radius):
            p = self.parent[i]
            rim.append((self.vertices[p], self.vertices[i]))
        return tuple(rim)


def vertex_tree(ctx: PrimeContext, origin: LatticeClass, radius: int) -> VertexTree:
    _require_tree(ctx)
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    vertices = [origin]
    index = {origin: 0}
    depth: list[int] = [0]
    parent: list[int | None] = [None]
    frontier = [0]
    for k in range(1, radius + 1):
        discovered: dict[LatticeClass, int] = {}
        for i in frontier:
            for nb in vertex_neighbors(vertices[i], ctx):
                if nb not in index and nb not in discovered:
                    discovered[nb] = i
        frontier = []
        for v in sorted(discovered, key=lambda v: v.hnf):
            frontier.append(len(vertices))
            index[v] = len(vertices)
            vertices.append(v)
            depth.append(k)
            parent.append(discovered[v])
    return VertexTree(
        ctx=ctx,
        origin=origin,
        radius=radius,
        vertices=tuple(vertices),
        depth=tuple(depth),
        parent=tuple(parent),
        index=index,
    )


def sphere_vertex_count(p: int, r: int) -> int:
    """1 + (p+1)(p^r - 1)/(p - 1): vertices within depth r of a vertex."""
    return 1 + (p + 1) * (p**r - 1) // (p - 1)


def end_count(p: int, r: int) -> int:
    """(p+1) p^(r-1): rim edges at depth r >= 1."""
    if r < 1:
        raise ValueError("ends need depth at least 1")
    return (p + 1) * p ** (r - 1)


# -- coboundary and integration -------------------------------------------------------


def coboundary(f: ZeroCochain, ctx: PrimeContext) -> OneCochain:
    """d f with d f (s, t) = f(s) - f(t), on all edges meeting supp(f)."""
    _require_tree(ctx)
    out: dict[Edge, Fraction] = {}
    for s in f.support:
        for t in vertex_neighbors(s, ctx):
            out[(s, t)] = f.value(s) - f.value(t)
    return OneCochain(tuple(out.items()))


def integrate(omega: OneCochain, path: Sequence[LatticeClass], ctx: PrimeContext) -> Fraction:
    """Sum of omega along consecutive oriented edges of a vertex path."""
    _require_tree(ctx)
    total = Fraction(0)
    for s, t in zip(path, path[1:]):
        if not classes_adjacent(s, t, ctx):
            raise ValueError("consecutive path vertices must be adjacent")
        total += omega.value(s, t)
    return total


# -- boundary values -------------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryFunction:
    """Function on the ends at one depth: (rim edge, value) per end,
    with an optional projective chart per end."""

    depth: int
    parts: tuple[tuple[Edge, Fraction], ...]
    chart: tuple[tuple[tuple[int, int], Fraction], ...] | None = None

    def __post_init__(self) -> None:
        ordered = tuple(
            sorted(self.parts, key=lambda t: (t[0][1].hnf, t[0][0].hnf))
        )
        object.__setattr__(self, "parts", ordered)
        if self.chart is not None and len(self.chart) != len(self.parts):
            raise ValueError("chart must name each end exactly once")

    def constant_value(self) -> Fraction | None:
        """The common value if the function is constant, else None."""
        vals = {x for _, x in self.parts}
        return vals.pop() if len(vals) == 1 else None

    def differs_by_constant(self, other: "BoundaryFunction") -> bool:
        if self.depth != other.depth or len(self.parts) != len(other.parts):
            return False
        gaps = set()
        for (e1, x1), (e2, x2) in zip(self.parts, other.parts):
            if e1 != e2:
                return False
            gaps.add(x1 - x2)
        return len(gaps) == 1


def boundary_value(
    omega: OneCochain, origin: LatticeClass, depth: int, ctx: PrimeContext
) -> BoundaryFunction:
    """Ultimate value of omega along each end at the given depth.

    Requires the support of omega to sit inside the depth-r sphere at the
    origin, so integrals out of the sphere are settled.
    """
    _require_tree(ctx)
    if depth < 1:
        raise ValueError("depth must be at least 1")
    tree = vertex_tree(ctx, origin, depth)
    for v in omega.support_vertices():
        if v not in tree.index:
            raise ValueError("cochain support escapes the sphere at this depth")
    # integral from the origin to every vertex, by depth order
    to_vertex: list[Fraction] = [Fraction(0)] * len(tree)
    for i in range(1, len(tree)):
        j = tree.parent[i]
        to_vertex[i] = to_vertex[j] + omega.value(tree.vertices[j], tree.vertices[i])
    parts = []
    for i in tree.shell(depth):
        j = tree.parent[i]
        parts.append(((tree.vertices[j], tree.vertices[i]), to_vertex[i]))
    chart = None
    if origin == standard_lattice(ctx):
        chart_pairs = []
        for (t, s), value in sorted(parts, key=lambda r: (r[0][1].hnf, r[0][0].hnf)):
            chart_pairs.append((end_chart((t, s), ctx), value))
        chart = tuple(chart_pairs)
    return BoundaryFunction(depth=depth, parts=tuple(parts), chart=chart)


def primitive_cochain(
    omega: OneCochain, origin: LatticeClass, depth: int, ctx: PrimeContext
) -> ZeroCochain:
    """A finitely supported f with d f = omega, when the boundary value
    of omega at this depth is a constant c: f(s) = c - integral(origin->s).

    Far vertices then get c - c = 0, so the support stays inside the
    sphere; a non-constant boundary value is an error (no such f exists).
    """
    _require_tree(ctx)
    bf = boundary_value(omega, origin, depth, ctx)
    c = bf.constant_value()
    if c is None:
        raise ValueError("boundary value is not constant: omega is not a coboundary")
    tree = vertex_tree(ctx, origin, depth)
    to_vertex: list[Fraction] = [Fraction(0)] * len(tree)
    for i in range(1, len(tree)):
        j = tree.parent[i]
        to_vertex[i] = to_vertex[j] + omega.value(tree.vertices[j], tree.vertices[i])
    values = {tree.vertices[i]: c - to_vertex[i] for i in range(len(tree))}
    return zero_cochain_from_map(values)


def lift(g: BoundaryFunction, origin: LatticeClass, ctx: PrimeContext) -> OneCochain:
    """A 1-cochain on the rim edges whose boundary value is exactly g.

    Realizes g as the coboundary data of the vertex function equal to g
    on the depth-r leaves and 0 inside; only the rim edges carry values.
    """
    _require_tree(ctx)
    tree = vertex_tree(ctx, origin, g.depth)
    expected = set(tree.ends())
    given = [e for e, _ in g.parts]
    if set(given) != expected or len(given) != len(expected):
        raise ValueError("parts must enumerate the ends at this depth exactly once")
    return one_cochain_from_map({e: x for e, x in g.parts})


def end_chart(edge: Edge, ctx: PrimeContext) -> tuple[int, int]:
    """Projective coordinates of the end ball behind a rim edge.

    The deep vertex at depth r is the class of { x : x = lambda v mod
    p^r } for a primitive vector v, recovered from the canonical form and
    normalized to (1, y) with y mod p^r, or (x, 1) with p | x, x mod p^r.
    """
    _require_tree(ctx)
    t, s = edge
    p = ctx.p
    r = s.det_valuation(p)
    if r < 1:
        raise ValueError("the deep vertex of an end must have positive depth")
    if t.det_valuation(p) != r - 1 or not classes_adjacent(t, s, ctx):
        raise ValueError("edge must step outward from depth r - 1 to depth r")
    (a, b), (_, d) = s.hnf
    if a == 1:
        return (1, b % p**r)
    if b % p:
        x = (a * pow(b, -1, p**r)) % p**r
        return (x, 1)
    if d == 1:
        return (0, 1)
    raise AssertionError("canonical form of a depth-r vertex must be primitive")


def boundary_function_to_json(g: BoundaryFunction) -> list[dict]:
    """Records {edge, value, chart}; chart is null when not anchored."""
    chart_by_pos = list(g.chart) if g.chart is not None else [None] * len(g.parts)
    out = []
    for ((t, s), value), chart in zip(g.parts, chart_by_pos):
        out.append(
            {
                "edge": [[list(row) for row in t.hnf], [list(row) for row in s.hnf]],
                "value": {"num": str(value.numerator), "den": str(value.denominator)},
                "chart": None if chart is None else [chart[0][0], chart[0][1]],
            }
        )
    return out
