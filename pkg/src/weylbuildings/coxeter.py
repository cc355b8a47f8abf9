"""Crystallographic Coxeter systems and affine Weyl group growth.

A Coxeter system is a group presented as

    W = < s in S | s^2 = 1, (s t)^(m_st) = 1 for s != t >,

encoded here by its diagram: the symmetric matrix of orders m_st.  Only the
crystallographic orders 2, 3, 4, 6 and infinity are admitted, which covers
every affine Weyl group.  Such a system acts faithfully on the lattice
Z^S through the reflection representation of a generalized Cartan matrix A:

    sigma_s(alpha_t) = alpha_t - A[s][t] alpha_s,

where A[s][s] = 2 and the off-diagonal pair (A[s][t], A[t][s]) is chosen
with product 4 cos^2(pi / m_st):

    m_st = 2 -> (0, 0),   3 -> (-1, -1),   4 -> (-1, -2),
    6 -> (-1, -3),   infinity -> (-2, -2).

For an asymmetric pair the smaller (more negative) entry goes to the row of
the smaller generator id.  Because the representation is faithful and has
integer matrix entries, group elements can be stored, hashed and compared
as integer matrices, and the word length of an element is exactly its
breadth-first depth in the Cayley graph of (W, S).  That is how growth
tables, lengths and reduced words are computed below: one shared BFS index
per diagram, extended on demand.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "INFINITE_ORDER",
    "CRYSTALLOGRAPHIC_ORDERS",
    "AffineTypeLabel",
    "parse_type_label",
    "CoxeterDiagram",
    "affine_diagram",
    "generator_matrices",
    "GroupElement",
    "identity_element",
    "element_from_word",
    "length",
    "reduced_word",
    "GrowthTable",
    "bfs_growth",
]

INFINITE_ORDER = math.inf
CRYSTALLOGRAPHIC_ORDERS = frozenset({2, 3, 4, 6, INFINITE_ORDER})

# off-diagonal Cartan pair (to smaller id, to larger id) for each order
_CARTAN_PAIRS = {
    2: (0, 0),
    3: (-1, -1),
    4: (-2, -1),
    6: (-3, -1),
    INFINITE_ORDER: (-2, -2),
}

Matrix = tuple[tuple[int, ...], ...]


# -- type labels -------------------------------------------------------------

_LABEL_RE = re.compile(r"\A([A-G])([0-9]+)~\Z")

# inclusive rank windows; None means unbounded above
_RANK_WINDOW = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


@dataclass(frozen=True)
class AffineTypeLabel:
    """Label of an irreducible affine type, printed as e.g. ``A2~``."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        window = _RANK_WINDOW.get(self.family)
        if window is None:
            raise ValueError(f"unknown family {self.family!r}")
        lo, hi = window
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"rank {self.rank} invalid for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}~"


def parse_type_label(text: str) -> AffineTypeLabel:
    """Parse a label string like ``"A2~"`` (family letter, rank, tilde).

    >>> parse_type_label("G2~")
    AffineTypeLabel(family='G', rank=2)
    """
    m = _LABEL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"malformed affine type label {text!r}")
    return AffineTypeLabel(m.group(1), int(m.group(2)))


# -- diagrams ----------------------------------------------------------------


@dataclass(frozen=True)
class CoxeterDiagram:
    """A Coxeter diagram: generator ids plus the symmetric order matrix.

    ``orders[i][j]`` is m(generators[i], generators[j]); the diagonal is 1
    and infinite orders are stored as ``math.inf``.
    """

    generators: tuple[int, ...]
    orders: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.generators)
        if len(set(self.generators)) != n or n == 0:
            raise ValueError("generator ids must be distinct and nonempty")
        if len(self.orders) != n or any(len(row) != n for row in self.orders):
            raise ValueError("order matrix shape must match generator count")
        for i in range(n):
            if self.orders[i][i] != 1:
                raise ValueError("diagonal orders must be 1")
            for j in range(i + 1, n):
                m = self.orders[i][j]
                if m != self.orders[j][i]:
                    raise ValueError("order matrix must be symmetric")
                if m not in CRYSTALLOGRAPHIC_ORDERS:
                    raise ValueError(f"non-crystallographic order {m!r}")

    @property
    def size(self) -> int:
        return len(self.generators)

    def order(self, s: int, t: int) -> float:
        i, j = self.generators.index(s), self.generators.index(t)
        return self.orders[i][j]


def _diagram_from_edges(count: int, edges: dict[tuple[int, int], float]) -> CoxeterDiagram:
    rows = [[2.0] * count for _ in range(count)]
    for i in range(count):
        rows[i][i] = 1
    for (a, b), m in edges.items():
        rows[a][b] = rows[b][a] = m
    orders = tuple(tuple(int(x) if x != INFINITE_ORDER else x for x in row) for row in rows)
    return CoxeterDiagram(tuple(range(count)), orders)


def affine_diagram(label: AffineTypeLabel | str) -> CoxeterDiagram:
    """Standard affine diagram for a type label; generators are 0..rank.

    A1~ is the infinite dihedral pair; A(n-1)~ for n >= 3 is an n-cycle of
    order-3 bonds.  B/C/D/E/F/G follow the usual affine extensions.
    """
    if isinstance(label, str):
        label = parse_type_label(label)
    fam, l = label.family, label.rank
    edges: dict[tuple[int, int], float]
    if fam == "A":
        if l == 1:
            edges = {(0, 1): INFINITE_ORDER}
        else:
            edges = {(i, (i + 1) % (l + 1)): 3 for i in range(l + 1)}
    elif fam == "C" or (fam == "B" and l == 2):
        # chain with order-4 bonds at both ends
        edges = {(i, i + 1): 3 for i in range(1, l - 1)}
        edges[(0, 1)] = 4
        edges[(l - 1, l)] = 4
    elif fam == "B":
        # fork at the affine end, order-4 bond at the far end
        edges = {(0, 2): 3, (1, 2): 3}
        edges.update({(i, i + 1): 3 for i in range(2, l - 1)})
        edges[(l - 1, l)] = 4
    elif fam == "D":
        # forks at both ends
        edges = {(0, 2): 3, (1, 2): 3, (l - 2, l - 1): 3, (l - 2, l): 3}
        edges.update({(i, i + 1): 3 for i in range(2, l - 2)})
    elif fam == "G":
        edges = {(0, 1): 3, (1, 2): 6}
    elif fam == "F":
        edges = {(0, 1): 3, (1, 2): 3, (2, 3): 4, (3, 4): 3}
    else:
        # E family, Bourbaki numbering with node 0 the affine one
        chains = {
            6: [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4), (0, 2)],
            7: [(0, 1), (1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)],
            8: [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4), (0, 8)],
        }
        edges = {e: 3 for e in chains[l]}
    return _diagram_from_edges(l + 1, edges)


# -- reflection representation ------------------------------------------------


def _cartan_matrix(diagram: CoxeterDiagram) -> tuple[tuple[int, ...], ...]:
    n = diagram.size
    gens = diagram.generators
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 2
        for j in range(n):
            if i == j:
                continue
            m = diagram.orders[i][j]
            lo, hi = _CARTAN_PAIRS[m]
            # the more negative entry sits in the row of the smaller id
            rows[i][j] = lo if gens[i] < gens[j] else hi
    return tuple(tuple(r) for r in rows)


def generator_matrices(diagram: CoxeterDiagram) -> tuple[Matrix, ...]:
    """Integer reflection matrix for each generator, in diagram order.

    Matrix of sigma_s in the basis (alpha_t): identity except in row s,
    where the entry at column t is delta_st - A[s][t].
    """
    cartan = _cartan_matrix(diagram)
    n = diagram.size
    out = []
    for s in range(n):
        rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for t in range(n):
            rows[s][t] = (1 if s == t else 0) - cartan[s][t]
        out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    cols = list(zip(*b))
    return tuple(
        tuple(sum(a[i][k] * col[k] for k in range(n)) for col in cols) for i in range(n)
    )


# -- group elements ----------------------------------------------------------


@dataclass(frozen=True)
class GroupElement:
    """A Weyl group element, identified with its reflection matrix.

    Equality and hashing use the matrix alone; the representation is
    faithful, so this is equality in the group.  ``cached_length`` is a
    memo, not part of the identity.
    """

    matrix: Matrix
    cached_length: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.cached_length is not None and self.cached_length < 0:
            raise ValueError("cached length must be non-negative")


def identity_element(diagram: CoxeterDiagram) -> GroupElement:
    return GroupElement(_identity(diagram.size), 0)


def element_from_word(diagram: CoxeterDiagram, word: Sequence[int]) -> GroupElement:
    """Product of generator matrices, word read left to right."""
    mats = generator_matrices(diagram)
    index = {g: i for i, g in enumerate(diagram.generators)}
    acc = _identity(diagram.size)
    for letter in word:
        if letter not in index:
            raise ValueError(f"unknown generator {letter!r}")
        acc = _matmul(acc, mats[index[letter]])
    return GroupElement(acc)


# -- shared Cayley BFS index ---------------------------------------------------


class _CayleyIndex:
    """Lazily grown BFS of the Cayley graph, shared per diagram.

    info maps a matrix to (depth, parent matrix, letter appended on the
    right); right multiplication keeps reduced words readable off the
    parent chain in left-to-right order.
    """

    def __init__(self, diagram: CoxeterDiagram):
        self.diagram = diagram
        self.mats = generator_matrices(diagram)
        self.letters = diagram.generators
        ident = _identity(diagram.size)
        self.info: dict[Matrix, tuple[int, Matrix | None, int | None]] = {
            ident: (0, None, None)
        }
        self.frontier: list[Matrix] = [ident]
        self.depth = 0

    def extend_to(self, depth: int) -> None:
        while self.depth < depth and self.frontier:
            nxt = []
            for m in self.frontier:
                for mat, letter in zip(self.mats, self.letters):
                    prod = _matmul(m, mat)
                    if prod not in self.info:
                        self.info[prod] = (self.depth + 1, m, letter)
                        nxt.append(prod)
            self.frontier = nxt
            self.depth += 1

    def locate(self, matrix: Matrix, cutoff: int) -> tuple[int, Matrix | None, int | None]:
        while matrix not in self.info:
            if self.depth >= cutoff or not self.frontier:
                raise ValueError(f"element not reachable within cutoff {cutoff}")
            self.extend_to(self.depth + 1)
        return self.info[matrix]

    def counts(self, upto: int) -> list[int]:
        self.extend_to(upto)
        out = [0] * (upto + 1)
        for depth, _, _ in self.info.values():
            if depth <= upto:
                out[depth] += 1
        return out


@lru_cache(maxsize=None)
def _index_for(diagram: CoxeterDiagram) -> _CayleyIndex:
    return _CayleyIndex(diagram)


def length(diagram: CoxeterDiagram, element: GroupElement, cutoff: int = 64) -> int:
    """Word length of an element: its BFS depth from the identity.

    Raises ValueError if the element is not found within ``cutoff`` BFS
    rounds (in particular for matrices outside the group).
    """
    if element.cached_length is not None:
        return element.cached_length
    depth, _, _ = _index_for(diagram).locate(element.matrix, cutoff)
    return depth


def reduced_word(diagram: CoxeterDiagram, element: GroupElement, cutoff: int = 64) -> tuple[int, ...]:
    """One reduced word for an element, read off the BFS parent chain."""
    idx = _index_for(diagram)
    depth, parent, letter = idx.locate(element.matrix, cutoff)
    word: list[int] = []
    while letter is not None:
        word.append(letter)
        assert parent is not None
        depth, parent, letter = idx.info[parent]
    word.reverse()
    return tuple(word)


# -- growth ------------------------------------------------------------------


@dataclass(frozen=True)
class GrowthTable:
    """counts[k] = number of group elements of length exactly k <= cutoff."""

    counts: tuple[int, ...]
    cutoff: int

    def __post_init__(self) -> None:
        if len(self.counts) != self.cutoff + 1:
            raise ValueError("counts must cover 0..cutoff")
        if self.counts[0] != 1:
            raise ValueError("counts[0] must be 1 (the identity)")
        if any(c <= 0 for c in self.counts):
            raise ValueError("affine shell counts are positive at every length")


def bfs_growth(diagram: CoxeterDiagram, cutoff: int) -> GrowthTable:
    """Count elements per word length by BFS with matrix deduplication.

    >>> bfs_growth(affine_diagram("A1~"), 4).counts
    (1, 2, 2, 2, 2)
    """
    if cutoff < 0:
        raise ValueError("cutoff must be non-negative")
    counts = _index_for(diagram).counts(cutoff)
    return GrowthTable(tuple(counts), cutoff)
