"""Lattice model of the affine building of GL(n) over Q_p, n in {2, 3}.

Vertices are homothety classes [L] of full Z_p-lattices L in Q_p^n; the
class [L] is stored as a canonical integer matrix: the upper-triangular
Hermite form of a basis (the lattice is the Z_p-span of the rows),
diagonal entries powers of p, each off-diagonal entry reduced modulo the
diagonal entry of its column, scaled by the homothety so the minimum
valuation over all entries is 0.  Two lattices are homothetic iff their
canonical matrices are equal.

A chamber is a cyclic flag

    L_0 > L_1 > ... > L_{n-1} > p L_0

with one-dimensional successive quotients over the residue field.  The n
rotations of the cycle present the same chamber; the stored representative
starts at the lexicographically least rotation.  A codimension-1 face
drops one class and is contained in exactly p + 1 chambers, one for each
line of the two-dimensional residue quotient it leaves open.  ``ball``
enumerates all chambers within a gallery radius of a base chamber, which
is the raw material for shell counts, harmonic cochains and period sums
elsewhere.

The vertex labelling lambda([L]) = v_p(det L) mod n makes every chamber
hit each label exactly once; a face's type is the label it omits.
GL_n(Q_p) acts by g.[L] = [gL]; the label permutation induced by g is the
power of an n-cycle given by v_p(det g), whence the sign character
epsilon(g) = (-1)^((n-1) v_p(det g)).  Both computations of epsilon live
here and must agree.

Arithmetic is exact.  Hermite normalization runs modulo p^(B+1) where B
bounds the determinant valuation of the matrix at hand, which recovers
the canonical form exactly because row operations are unimodular over
Z_p.  The context's declared precision is enforced as a validity
precondition: balls need precision >= radius + n + 1 and group elements
must have entry valuations within the declared window.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "PrecisionError",
    "PrimeContext",
    "LatticeClass",
    "lattice_from_rows",
    "standard_lattice",
    "vertex_label",
    "FlagChamber",
    "make_chamber",
    "standard_chamber",
    "Face",
    "face_of",
    "face_type",
    "chambers_containing",
    "classes_adjacent",
    "act",
    "epsilon",
    "epsilon_from_labels",
    "epsilon_from_determinant",
    "affine_generator_matrix",
    "label_shift_matrix",
    "generator_face_types",
    "weyl_to_chamber",
    "BallGraph",
    "ball",
    "ball_to_json",
]

IntMatrix = tuple[tuple[int, ...], ...]
QMatrix = tuple[tuple[Fraction, ...], ...]


class PrecisionError(ValueError):
    """Declared p-adic working precision does not cover the computation."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeContext:
    """Ambient data: the prime p, the dimension n, declared precision."""

    p: int
    n: int
    precision: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.n not in (2, 3):
            raise ValueError("only n = 2 and n = 3 are supported")
        if self.precision < 1:
            raise ValueError("precision must be positive")


# -- valuations and determinants ---------------------------------------------


def _val_int(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def _val_fraction(x: Fraction, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    return _val_int(x.numerator, p) - _val_int(x.denominator, p)


def _det(m: Sequence[Sequence]) -> object:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
    raise ValueError("determinants only needed for n <= 3")


# -- Hermite form over Z_p ----------------------------------------------------


def _hermite_rows(rows: Sequence[Sequence[int]], p: int, val_bound: int) -> IntMatrix:
    """Upper-triangular Z_p-Hermite form of the row span of integer rows.

    Works modulo p^(val_bound + 1); correct whenever every diagonal
    valuation of the true form is <= val_bound.  All row operations are
    unimodular over Z_p, so representative choices along the way span the
    same lattice and the fully reduced entries are exact.
    """
    n = len(rows[0])
    cap = val_bound + 1
    modulus = p**cap
    work = [[x % modulus for x in row] for row in rows]
    m = len(work)

    def val(x: int) -> int:
        return cap if x == 0 else _val_int(x, p)

    diag: list[int] = []
    for col in range(n):
        pivot, best = -1, cap
        for r in range(col, m):
            v = val(work[r][col])
            if v < best:
                pivot, best = r, v
        if pivot < 0:
            raise PrecisionError("rows not of full rank at the working precision")
        work[col], work[pivot] = work[pivot], work[col]
        a = best
        unit = work[col][col] // p**a
        inv = pow(unit, -1, modulus)
        work[col] = [(x * inv) % modulus for x in work[col]]
        work[col][col] = p**a
        diag.append(a)
        for r in range(col + 1, m):
            x = work[r][col]
            if x:
                f = x // p**a
                work[r] = [(y - f * z) % modulus for y, z in zip(work[r], work[col])]
    for col in range(1, n):
        d = p ** diag[col]
        for r in range(col):
            t = work[r][col] // d
            if t:
                work[r] = [(y - t * z) % modulus for y, z in zip(work[r], work[col])]
                work[r][col] %= d
    return tuple(tuple(row[:n]) for row in work[:n])


def _rows_min_valuation(rows: Iterable[Iterable[Fraction]], p: int) -> int:
    best: int | None = None
    for row in rows:
        for x in row:
            if x:
                v = _val_fraction(Fraction(x), p)
                if best is None or v < best:
                    best = v
    if best is None:
        raise ValueError("zero matrix spans no lattice")
    return best


# -- lattice classes -----------------------------------------------------------


@dataclass(frozen=True)
class LatticeClass:
    """Homothety class of a lattice, held as its canonical Hermite matrix."""

    hnf: IntMatrix

    @property
    def n(self) -> int:
        return len(self.hnf)

    def det_valuation(self, p: int) -> int:
        return sum(_val_int(self.hnf[i][i], p) for i in range(self.n))

    def scaled_rows(self, p: int, k: int) -> list[list[int]]:
        # integer rows of p^k times the canonical representative, k >= 0
        f = p**k
        return [[x * f for x in row] for row in self.hnf]


def lattice_from_rows(rows: Sequence[Sequence[Fraction | int]], p: int) -> LatticeClass:
    """Canonicalize the homothety class spanned by the given generating rows.

    Entries may be rational with p-power denominators.  The rows are
    rescaled to an integral primitive matrix, then put in Hermite form
    relative to an exact determinant-valuation bound read off the maximal
    minors.  Extra rows beyond n are allowed as long as the span is full.
    """
    frows = [[Fraction(x) for x in row] for row in rows]
    n = len(frows[0])
    if any(len(row) != n for row in frows) or len(frows) < n:
        raise ValueError(f"need at least {n} rows of length {n}")
    for row in frows:
        for x in row:
            d = x.denominator
            while d % p == 0:
                d //= p
            if d != 1:
                raise ValueError("denominators must be powers of p")
    shift = -_rows_min_valuation(frows, p)
    scale = Fraction(p) ** shift
    int_rows: list[list[int]] = []
    for row in frows:
        scaled = [x * scale for x in row]
        int_rows.append([x.numerator for x in scaled])
    # the lattice determinant valuation is the minimum over maximal minors
    bound: int | None = None
    for picks in itertools.combinations(range(len(int_rows)), n):
        d = _det([int_rows[i] for i in picks])
        if d:
            v = _val_int(int(d), p)
            if bound is None or v < bound:
                bound = v
    if bound is None:
        raise ValueError("rows do not span a full lattice")
    return LatticeClass(_hermite_rows(int_rows, p, bound))


def standard_lattice(ctx: PrimeContext) -> LatticeClass:
    eye = tuple(tuple(1 if i == j else 0 for j in range(ctx.n)) for i in range(ctx.n))
    return LatticeClass(eye)


def vertex_label(cls: LatticeClass, ctx: PrimeContext) -> int:
    """Label of the vertex: sum of elementary divisor exponents mod n.

    Equals v_p(det) of the canonical representative mod n; homothety
    rescaling shifts the determinant valuation by multiples of n.
    """
    return cls.det_valuation(ctx.p) % ctx.n


# -- membership ----------------------------------------------------------------


def _contains_vector(basis_rows: Sequence[Sequence[int]], vec: Sequence[int]) -> bool:
    # back-substitution against an upper-triangular basis; exact integers
    v = list(vec)
    for i in range(len(v)):
        d = basis_rows[i][i]
        if v[i] % d:
            return False
        c = v[i] // d
        if c:
            v = [y - c * z for y, z in zip(v, basis_rows[i])]
    return not any(v)


def _contains_lattice(outer_rows: Sequence[Sequence[int]], inner_rows: Sequence[Sequence[int]]) -> bool:
    return all(_contains_vector(outer_rows, row) for row in inner_rows)


def _chain_step_ok(a: LatticeClass, b: LatticeClass, ctx: PrimeContext) -> bool:
    # some homothety rescaling B of b satisfies a > B with index p
    p, n = ctx.p, ctx.n
    gap = a.det_valuation(p) + 1 - b.det_valuation(p)
    if gap % n or gap < 0:
        return False
    return _contains_lattice(a.hnf, b.scaled_rows(p, gap // n))


def classes_adjacent(u: LatticeClass, v: LatticeClass, ctx: PrimeContext) -> bool:
    """Whether [u] and [v] span an edge of the building.

    Adjacency means some representatives satisfy u > v' > p u; for n = 3
    the index of v' in u may be p or p^2, and the two possibilities are
    the two orientations of an index-p containment.
    """
    if u == v:
        return False
    return _chain_step_ok(u, v, ctx) or _chain_step_ok(v, u, ctx)


# -- chambers --------------------------------------------------------------------


@dataclass(frozen=True)
class FlagChamber:
    """Cyclic flag of n lattice classes, stored from its least rotation."""

    classes: tuple[LatticeClass, ...]

    def __post_init__(self) -> None:
        cs = self.classes
        n = len(cs)
        if n == 0:
            raise ValueError("empty flag")
        best = min(range(n), key=lambda i: tuple(cs[(i + j) % n].hnf for j in range(n)))
        if best:
            object.__setattr__(self, "classes", cs[best:] + cs[:best])

    @property
    def n(self) -> int:
        return len(self.classes)

    def sort_key(self) -> tuple:
        return tuple(c.hnf for c in self.classes)


def make_chamber(classes: Sequence[LatticeClass], ctx: PrimeContext) -> FlagChamber:
    """Validated chamber from an ordered cyclic flag of n classes."""
    cs = tuple(classes)
    if len(cs) != ctx.n:
        raise ValueError(f"a chamber needs exactly {ctx.n} classes")
    if len(set(cs)) != len(cs):
        raise ValueError("flag classes must be distinct")
    for i in range(len(cs)):
        if not _chain_step_ok(cs[i], cs[(i + 1) % len(cs)], ctx):
            raise ValueError("classes do not form an index-p cyclic flag")
    return FlagChamber(cs)


def standard_chamber(ctx: PrimeContext) -> FlagChamber:
    """The coordinate flag: L_k = diag(1, ..., 1, p, ..., p), k entries p."""
    n, p = ctx.n, ctx.p
    classes = []
    for k in range(n):
        rows = tuple(
            tuple((p if i >= n - k else 1) if i == j else 0 for j in range(n))
            for i in range(n)
        )
        classes.append(LatticeClass(rows))
    return make_chamber(classes, ctx)


# -- faces ------------------------------------------------------------------------


@dataclass(frozen=True)
class Face:
    """Codimension-1 simplex: an unordered set of n - 1 vertex classes."""

    classes: tuple[LatticeClass, ...]

    def __post_init__(self) -> None:
        ordered = tuple(sorted(self.classes, key=lambda c: c.hnf))
        object.__setattr__(self, "classes", ordered)


def face_of(chamber: FlagChamber, position: int) -> Face:
    """Face obtained by dropping the flag entry at the given position."""
    cs = chamber.classes
    return Face(tuple(c for i, c in enumerate(cs) if i != position))


def face_type(face: Face, ctx: PrimeContext) -> int:
    """The vertex label missing from the face."""
    present = {vertex_label(c, ctx) for c in face.classes}
    missing = set(range(ctx.n)) - present
    if len(missing) != 1:
        raise ValueError("face vertices do not carry distinct labels")
    return missing.pop()


def _quotient_basis(
    outer_rows: Sequence[Sequence[int]], inner_rows: Sequence[Sequence[int]], p: int
) -> tuple[list[int], list[int]]:
    """Two rows of the outer basis spanning the quotient outer / inner.

    Requires p * outer <= inner <= outer with a two-dimensional quotient.
    The inner rows are written in coordinates over the upper-triangular
    outer basis and reduced mod p; the free columns of the reduced row
    space single out two outer basis rows spanning the quotient plane.
    """
    n = len(outer_rows)
    coord_rows: list[list[int]] = []
    for row in inner_rows:
        v = [Fraction(x) for x in row]
        coords: list[Fraction] = []
        for i in range(n):
            c = v[i] / outer_rows[i][i]
            coords.append(c)
            if c:
                v = [y - c * z for y, z in zip(v, outer_rows[i])]
        ints = []
        for c in coords:
            if c.denominator != 1:
                raise ValueError("inner rows do not lie in the outer lattice")
            ints.append(c.numerator % p)
        coord_rows.append(ints)
    pivots: set[int] = set()
    r = 0
    for col in range(n):
        sel = next((i for i in range(r, len(coord_rows)) if coord_rows[i][col]), None)
        if sel is None:
            continue
        coord_rows[r], coord_rows[sel] = coord_rows[sel], coord_rows[r]
        inv = pow(coord_rows[r][col], -1, p)
        coord_rows[r] = [(x * inv) % p for x in coord_rows[r]]
        for i in range(len(coord_rows)):
            if i != r and coord_rows[i][col]:
                f = coord_rows[i][col]
                coord_rows[i] = [(x - f * y) % p for x, y in zip(coord_rows[i], coord_rows[r])]
        pivots.add(col)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 2:
        raise ValueError("quotient of the face gap is not two-dimensional")
    return list(outer_rows[free[0]]), list(outer_rows[free[1]])


def _insertions(
    outer_rows: Sequence[Sequence[int]], inner_rows: Sequence[Sequence[int]], p: int
) -> list[LatticeClass]:
    """The p + 1 classes strictly between outer and inner when the quotient
    is a plane over F_p: inner plus one of the p + 1 lines of the plane."""
    u, v = _quotient_basis(outer_rows, inner_rows, p)
    found = []
    for t in range(p):
        w = [x + t * y for x, y in zip(u, v)]
        found.append(lattice_from_rows(list(inner_rows) + [w], p))
    found.append(lattice_from_rows(list(inner_rows) + [v], p))
    return found


def chambers_containing(
    face: Face | Sequence[LatticeClass], ctx: PrimeContext
) -> tuple[FlagChamber, ...]:
    """All p + 1 chambers containing a codimension-1 face, sorted.

    The face's classes chain into the cyclic flag with exactly one gap of
    index p^2; the chambers correspond to the p + 1 lines of the residue
    plane in that gap.
    """
    classes = tuple(face.classes) if isinstance(face, Face) else tuple(face)
    p, n = ctx.p, ctx.n
    if len(classes) != n - 1:
        raise ValueError(f"a codimension-1 face has {n - 1} classes")
    chambers: list[FlagChamber] | None = None
    if n == 2:
        (a,) = classes
        middles = _insertions(a.hnf, a.scaled_rows(p, 1), p)
        chambers = [make_chamber([a, m], ctx) for m in middles]
    else:
        for a, b in ((classes[0], classes[1]), (classes[1], classes[0])):
            gap = a.det_valuation(p) - b.det_valuation(p)
            for d in (1, 2):
                if (gap + d) % n:
                    continue
                k = (gap + d) // n
                if k < 0:
                    continue
                b_rows = b.scaled_rows(p, k)
                pa_rows = [[p * x for x in row] for row in a.hnf]
                if not _contains_lattice(a.hnf, b_rows):
                    continue
                if not _contains_lattice(b_rows, pa_rows):
                    continue
                if d == 2:
                    middles = _insertions(a.hnf, b_rows, p)
                    chambers = [make_chamber([a, m, b], ctx) for m in middles]
                else:
                    middles = _insertions(b_rows, pa_rows, p)
                    chambers = [make_chamber([a, b, m], ctx) for m in middles]
                break
            if chambers is not None:
                break
        if chambers is None:
            raise ValueError("classes do not bound a codimension-1 face")
    if len(set(chambers)) != p + 1:
        raise AssertionError("a face must lie in exactly p + 1 chambers")
    return tuple(sorted(chambers, key=FlagChamber.sort_key))


# -- group action -------------------------------------------------------------------


def _to_qmatrix(g: Sequence[Sequence[Fraction | int]], n: int) -> QMatrix:
    rows = tuple(tuple(Fraction(x) for x in row) for row in g)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"matrix must be {n} x {n}")
    return rows


def _check_entries(g: QMatrix, ctx: PrimeContext) -> None:
    for row in g:
        for x in row:
            if x == 0:
                continue
            d = x.denominator
            while d % ctx.p == 0:
                d //= ctx.p
            if d != 1:
                raise ValueError("matrix denominators must be powers of p")
            if abs(_val_fraction(x, ctx.p)) > ctx.precision:
                raise PrecisionError("declared precision does not cover the matrix entries")


def act(g: Sequence[Sequence[Fraction | int]], x, ctx: PrimeContext):
    """Left action of g in GL_n(Q_p) on a lattice class or a chamber.

    Basis vectors are the rows r_i of the stored matrix; the image lattice
    is spanned by the rows r_i g^T.
    """
    gm = _to_qmatrix(g, ctx.n)
    if _det(gm) == 0:
        raise ValueError("matrix is singular")
    _check_entries(gm, ctx)
    if isinstance(x, LatticeClass):
        rows = [
            [sum(Fraction(x.hnf[i][k]) * gm[j][k] for k in range(ctx.n)) for j in range(ctx.n)]
            for i in range(ctx.n)
        ]
        return lattice_from_rows(rows, ctx.p)
    if isinstance(x, FlagChamber):
        return FlagChamber(tuple(act(gm, c, ctx) for c in x.classes))
    raise TypeError("act expects a LatticeClass or a FlagChamber")


def epsilon_from_determinant(g: Sequence[Sequence[Fraction | int]], ctx: PrimeContext) -> int:
    """Sign character via the determinant: (-1)^((n-1) v_p(det g))."""
    gm = _to_qmatrix(g, ctx.n)
    d = _det(gm)
    if d == 0:
        raise ValueError("matrix is singular")
    return -1 if ((ctx.n - 1) * _val_fraction(Fraction(d), ctx.p)) % 2 else 1


def epsilon_from_labels(g: Sequence[Sequence[Fraction | int]], ctx: PrimeContext) -> int:
    """Sign character via the signature of the induced label permutation."""
    gm = _to_qmatrix(g, ctx.n)
    perm: dict[int, int] = {}
    for cls in standard_chamber(ctx).classes:
        image = act(gm, cls, ctx)
        perm[vertex_label(cls, ctx)] = vertex_label(image, ctx)
    if sorted(perm) != list(range(ctx.n)) or sorted(perm.values()) != list(range(ctx.n)):
        raise ValueError("the matrix does not permute the vertex labels")
    sign, seen = 1, set()
    for start in perm:
        if start in seen:
            continue
        length, cur = 0, start
        while cur not in seen:
            seen.add(cur)
            cur = perm[cur]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def epsilon(g: Sequence[Sequence[Fraction | int]], ctx: PrimeContext) -> int:
    """The sign character, computed both ways; the two must agree."""
    a = epsilon_from_labels(g, ctx)
    b = epsilon_from_determinant(g, ctx)
    if a != b:
        raise AssertionError("label signature disagrees with determinant parity")
    return a


# -- affine Weyl group inside GL_n --------------------------------------------------


def label_shift_matrix(ctx: PrimeContext) -> QMatrix:
    """The cyclic element sending e_i to e_(i-1) for i >= 2 and e_1 to p e_n.

    Its determinant has valuation 1, so it shifts every vertex label by 1;
    it rotates the standard chamber's flag onto itself.
    """
    n, p = ctx.n, ctx.p
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i][i + 1] = Fraction(1)
    rows[n - 1][0] = Fraction(p)
    return tuple(tuple(r) for r in rows)


def _matmul_q(a: QMatrix, b: QMatrix) -> QMatrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


def _inverse_q(a: QMatrix) -> QMatrix:
    n = len(a)
    d = Fraction(_det(a))
    if d == 0:
        raise ValueError("matrix is singular")
    if n == 2:
        adj = ((a[1][1], -a[0][1]), (-a[1][0], a[0][0]))
    else:
        cof = [[Fraction(0)] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(3):
                sub = [[a[r][c] for c in range(3) if c != j] for r in range(3) if r != i]
                minor = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
                cof[i][j] = (-1) ** (i + j) * minor
        adj = tuple(tuple(cof[j][i] for j in range(3)) for i in range(3))
    return tuple(tuple(x / d for x in row) for row in adj)


def affine_generator_matrix(ctx: PrimeContext, i: int) -> QMatrix:
    """Matrix realizing the i-th affine Weyl generator, 0 <= i < n.

    Generators 1 .. n-1 are the adjacent-coordinate transpositions; the
    affine generator 0 is their first one conjugated by the label shift.
    """
    n = ctx.n
    if not 0 <= i < n:
        raise ValueError(f"generator index must lie in 0..{n - 1}")
    if i >= 1:
        rows = [[Fraction(1 if r == c else 0) for c in range(n)] for r in range(n)]
        rows[i - 1][i - 1] = rows[i][i] = Fraction(0)
        rows[i - 1][i] = rows[i][i - 1] = Fraction(1)
        return tuple(tuple(r) for r in rows)
    shift = label_shift_matrix(ctx)
    s1 = affine_generator_matrix(ctx, 1)
    return _matmul_q(_matmul_q(shift, s1), _inverse_q(shift))


def weyl_to_chamber(word: Sequence[int], ctx: PrimeContext) -> FlagChamber:
    """Image of the standard chamber under the product of generators."""
    n = ctx.n
    g = tuple(tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n))
    for letter in word:
        g = _matmul_q(g, affine_generator_matrix(ctx, letter))
    return act(g, standard_chamber(ctx), ctx)


def generator_face_types(ctx: PrimeContext) -> dict[int, int]:
    """Face type crossed between the standard chamber and its image under
    each generator.  The assignment is a bijection onto the labels."""
    base = standard_chamber(ctx)
    base_faces = {face_of(base, pos) for pos in range(ctx.n)}
    mapping: dict[int, int] = {}
    for i in range(ctx.n):
        image = act(affine_generator_matrix(ctx, i), base, ctx)
        if image == base:
            raise AssertionError("a generator must move the standard chamber")
        image_faces = {face_of(image, pos) for pos in range(ctx.n)}
        common = base_faces & image_faces
        if len(common) != 1:
            raise AssertionError("generator image is not adjacent to the base chamber")
        mapping[i] = face_type(common.pop(), ctx)
    if sorted(mapping.values()) != list(range(ctx.n)):
        raise AssertionError("generators do not hit each face type exactly once")
    return mapping


# -- balls of chambers ----------------------------------------------------------------


@dataclass(frozen=True)
class BallGraph:
    """All chambers within a gallery radius of a center chamber.

    Chambers are indexed breadth-first, sorted within each shell; `faces`
    records, for every face met, the sorted indices of its in-ball
    chambers (a face is interior when it has p + 1 of them).  `parent`
    and `crossed_type` trace one minimal gallery back to the center, so
    `gallery_types` / `weyl_word` read off a word for the Weyl distance
    from the center.
    """

    ctx: PrimeContext
    radius: int
    chambers: tuple[FlagChamber, ...]
    distance: tuple[int, ...]
    parent: tuple[int | None, ...]
    crossed_type: tuple[int | None, ...]
    faces: Mapping[Face, tuple[int, ...]]
    index: Mapping[FlagChamber, int] = field(compare=False)

    def __len__(self) -> int:
        return len(self.chambers)

    def shell_sizes(self) -> tuple[int, ...]:
        sizes = [0] * (self.radius + 1)
        for d in self.distance:
            sizes[d] += 1
        return tuple(sizes)

    def shell(self, k: int) -> tuple[int, ...]:
        return tuple(i for i, d in enumerate(self.distance) if d == k)

    def interior_faces(self) -> tuple[Face, ...]:
        full = self.ctx.p + 1
        return tuple(f for f, members in self.faces.items() if len(members) == full)

    def chambers_of_face(self, face: Face) -> tuple[int, ...]:
        return tuple(self.faces[face])

    def neighbors(self, i: int) -> tuple[int, ...]:
        out: set[int] = set()
        for pos in range(self.ctx.n):
            out.update(self.faces.get(face_of(self.chambers[i], pos), ()))
        out.discard(i)
        return tuple(sorted(out))

    def gallery_types(self, i: int) -> tuple[int, ...]:
        types: list[int] = []
        cur = i
        while self.parent[cur] is not None:
            types.append(self.crossed_type[cur])
            cur = self.parent[cur]
        return tuple(reversed(types))

    def weyl_word(self, i: int) -> tuple[int, ...]:
        to_generator = {t: g for g, t in generator_face_types(self.ctx).items()}
        return tuple(to_generator[t] for t in self.gallery_types(i))


def ball(ctx: PrimeContext, radius: int, center: FlagChamber | None = None) -> BallGraph:
    """Breadth-first enumeration of the chamber ball of the given radius."""
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if ctx.precision < radius + ctx.n + 1:
        raise PrecisionError(
            f"precision {ctx.precision} is below radius + n + 1 = {radius + ctx.n + 1}"
        )
    start = center if center is not None else standard_chamber(ctx)
    chambers: list[FlagChamber] = [start]
    index: dict[FlagChamber, int] = {start: 0}
    distance: list[int] = [0]
    parent: list[int | None] = [None]
    crossed: list[int | None] = [None]
    star_cache: dict[Face, tuple[FlagChamber, ...]] = {}
    frontier = [0]
    for depth in range(1, radius + 1):
        discovered: dict[FlagChamber, tuple[int, int]] = {}
        for i in frontier:
            chamber = chambers[i]
            for pos in range(ctx.n):
                face = face_of(chamber, pos)
                star = star_cache.get(face)
                if star is None:
                    star = chambers_containing(face, ctx)
                    star_cache[face] = star
                ftype = face_type(face, ctx)
                for other in star:
                    if other not in index and other not in discovered:
                        discovered[other] = (i, ftype)
        frontier = []
        for chamber in sorted(discovered, key=FlagChamber.sort_key):
            src, ftype = discovered[chamber]
            frontier.append(len(chambers))
            index[chamber] = len(chambers)
            chambers.append(chamber)
            distance.append(depth)
            parent.append(src)
            crossed.append(ftype)
        if not frontier:
            break
    faces: dict[Face, set[int]] = {}
    for i, chamber in enumerate(chambers):
        for pos in range(ctx.n):
            faces.setdefault(face_of(chamber, pos), set()).add(i)
    return BallGraph(
        ctx=ctx,
        radius=radius,
        chambers=tuple(chambers),
        distance=tuple(distance),
        parent=tuple(parent),
        crossed_type=tuple(crossed),
        faces={f: tuple(sorted(m)) for f, m in faces.items()},
        index=index,
    )


def ball_to_json(graph: BallGraph) -> dict:
    """Deterministic plain-data rendering of a chamber ball.

    ``adjacency[i]`` lists ``[face type, neighbor index]`` pairs for every
    neighbor inside the ball, sorted by face type then neighbor.
    """
    adjacency: list[list[list[int]]] = []
    for i, chamber in enumerate(graph.chambers):
        pairs: list[list[int]] = []
        for pos in range(graph.ctx.n):
            face = face_of(chamber, pos)
            ftype = face_type(face, graph.ctx)
            for j in graph.faces.get(face, ()):
                if j != i:
                    pairs.append([ftype, j])
        adjacency.append(sorted(pairs))
    return {
        "p": graph.ctx.p,
        "n": graph.ctx.n,
        "radius": graph.radius,
        "chamber_count": len(graph.chambers),
        "shell_sizes": list(graph.shell_sizes()),
        "chambers": [
            [[list(row) for row in cls.hnf] for cls in chamber.classes]
            for chamber in graph.chambers
        ],
        "adjacency": adjacency,
        "distance": list(graph.distance),
        "parent": [(-1 if x is None else x) for x in graph.parent],
        "crossed_type": [(-1 if x is None else x) for x in graph.crossed_type],
    }
