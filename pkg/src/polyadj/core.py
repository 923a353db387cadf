"""Exact standard-form polytope model: vertices, zero sets, faces, facets.

A polytope is handed to us as ``{x in R^n : Ax = b, x >= 0}`` together with
the complete list of its vertices.  Nonnegativity constraints double as the
face structure: the set of coordinates that vanish on a face determines the
face, so most questions reduce to bit operations on per-vertex zero sets.

All arithmetic uses :class:`fractions.Fraction`, so zero tests, ranks and
face dimensions are exact.  Objects are immutable after construction and
safe to share between threads for reads.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property


class ValidationError(ValueError):
    """Input data violates the standard-form polytope contract."""


class UnsupportedPolytopeError(Exception):
    """The polytope is outside the supported class for the requested operation
    (typically: not simple, or dimension too small for a pair-graph walk)."""


def as_fraction(value: int | str | Fraction) -> Fraction:
    """Coerce to Fraction. Floats are refused: binary floats are not exact input."""
    if isinstance(value, float):
        raise ValidationError(f"refusing float {value!r}; pass int, str or Fraction")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ValidationError(f"not a rational number: {value!r}") from exc


@dataclass(frozen=True)
class ZeroSet:
    """Set of coordinate positions (1-based) vanishing on a point or face.

    Stored as a bit vector: bit ``i - 1`` of ``bits`` is set when coordinate
    ``i`` is in the set.  ``width`` is the ambient coordinate count; set
    operations require equal widths.
    """

    width: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError(f"width must be nonnegative, got {self.width}")
        if not 0 <= self.bits < (1 << self.width):
            raise ValueError(f"bits 0x{self.bits:x} out of range for width {self.width}")

    @classmethod
    def of_point(cls, coords: Sequence[Fraction]) -> "ZeroSet":
        bits = 0
        for i, x in enumerate(coords):
            if x == 0:
                bits |= 1 << i
        return cls(len(coords), bits)

    @classmethod
    def of_indices(cls, width: int, indices: Iterable[int]) -> "ZeroSet":
        bits = 0
        for i in indices:
            if not 1 <= i <= width:
                raise ValueError(f"coordinate {i} out of range 1..{width}")
            bits |= 1 << (i - 1)
        return cls(width, bits)

    def _check_width(self, other: "ZeroSet") -> None:
        if self.width != other.width:
            raise ValueError(f"width mismatch: {self.width} vs {other.width}")

    def __and__(self, other: "ZeroSet") -> "ZeroSet":
        self._check_width(other)
        return ZeroSet(self.width, self.bits & other.bits)

    def __contains__(self, index: int) -> bool:
        return 1 <= index <= self.width and bool(self.bits >> (index - 1) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def issuperset(self, other: "ZeroSet") -> bool:
        self._check_width(other)
        return other.bits & ~self.bits == 0

    def indices(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(self.width) if self.bits >> i & 1)

    def __repr__(self) -> str:
        inner = "{" + ",".join(map(str, self.indices())) + "}"
        return f"ZeroSet({inner}, width={self.width})"


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form. Returns (rows, pivot column indices)."""
    pivots: list[int] = []
    r = 0
    cols = len(rows[0]) if rows else 0
    for col in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(matrix: Iterable[Iterable[Fraction | int]]) -> int:
    """Exact rank over the rationals via Gaussian elimination.

    The empty matrix has rank 0. Ragged input is rejected.
    """
    rows = [[as_fraction(x) for x in row] for row in matrix]
    if not rows:
        return 0
    width = len(rows[0])
    for i, row in enumerate(rows):
        if len(row) != width:
            raise ValueError(f"ragged matrix: row 0 has {width} entries, row {i} has {len(row)}")
    return len(_rref(rows)[1])


class Polytope:
    """Bounded polytope ``{x : Ax = b, x >= 0}`` with its complete vertex list.

    Construction validates every vertex exactly (equalities hold, coordinates
    nonnegative, vertices pairwise distinct) and caches per-vertex zero sets.
    The algorithms here presume the vertex list is correct and complete;
    boundedness and extremality of the listed points are not re-derived.
    """

    def __init__(
        self,
        A: Iterable[Iterable[Fraction | int | str]],
        b: Iterable[Fraction | int | str],
        vertices: Iterable[Iterable[Fraction | int | str]],
    ) -> None:
        verts = tuple(tuple(as_fraction(x) for x in v) for v in vertices)
        if not verts:
            raise ValidationError("at least one vertex is required")
        n = len(verts[0])
        if n == 0:
            raise ValidationError("vertices must have at least one coordinate")
        for k, v in enumerate(verts):
            if len(v) != n:
                raise ValidationError(f"vertex {k}: expected {n} coordinates, got {len(v)}")
        rows = tuple(tuple(as_fraction(x) for x in row) for row in A)
        for j, row in enumerate(rows):
            if len(row) != n:
                raise ValidationError(f"equality row {j}: expected {n} entries, got {len(row)}")
        rhs = tuple(as_fraction(x) for x in b)
        if len(rhs) != len(rows):
            raise ValidationError(f"b has {len(rhs)} entries for {len(rows)} equality rows")

        seen: dict[tuple[Fraction, ...], int] = {}
        for k, v in enumerate(verts):
            for i, x in enumerate(v):
                if x < 0:
                    raise ValidationError(f"vertex {k}: coordinate {i + 1} is negative ({x})")
            for j, (row, rj) in enumerate(zip(rows, rhs)):
                lhs = sum(c * x for c, x in zip(row, v))
                if lhs != rj:
                    raise ValidationError(
                        f"vertex {k}: equality row {j} gives {lhs}, expected {rj}"
                    )
            dup = seen.get(v)
            if dup is not None:
                raise ValidationError(f"vertices {dup} and {k} are identical")
            seen[v] = k

        self._A = rows
        self._b = rhs
        self._vertices = verts
        self._zero_sets = tuple(ZeroSet.of_point(v) for v in verts)

    @property
    def A(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._A

    @property
    def b(self) -> tuple[Fraction, ...]:
        return self._b

    @property
    def vertices(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices[0])

    @property
    def m(self) -> int:
        return len(self._A)

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def zero_sets(self) -> tuple[ZeroSet, ...]:
        return self._zero_sets

    def zero_set(self, vertex_index: int) -> ZeroSet:
        self._check_vertex_index(vertex_index)
        return self._zero_sets[vertex_index]

    def _check_vertex_index(self, k: int) -> None:
        if not 0 <= k < len(self._vertices):
            raise ValueError(f"vertex index {k} out of range 0..{len(self._vertices) - 1}")

    @cached_property
    def dimension(self) -> int:
        """Affine dimension: rank of the vertex-difference matrix."""
        base = self._vertices[0]
        return rank([[x - y for x, y in zip(v, base)] for v in self._vertices[1:]])

    def __repr__(self) -> str:
        return f"Polytope(n={self.n}, m={self.m}, vertices={self.vertex_count})"


def face_vertices(p: Polytope, s: ZeroSet) -> list[int]:
    """Indices of vertices on the face where every coordinate in ``s`` vanishes.

    Ascending order. Empty when no vertex satisfies ``s``.
    """
    if s.width != p.n:
        raise ValueError(f"zero set width {s.width} does not match n={p.n}")
    return [w for w in range(p.vertex_count) if p.zero_sets[w].issuperset(s)]


def _affine_rank(p: Polytope, vertex_indices: Sequence[int]) -> int:
    base = p.vertices[vertex_indices[0]]
    return rank(
        [[x - y for x, y in zip(p.vertices[w], base)] for w in vertex_indices[1:]]
    )


def face_dimension(p: Polytope, s: ZeroSet) -> int | None:
    """Dimension of the face selected by ``s``; None for the empty face."""
    verts = face_vertices(p, s)
    if not verts:
        return None
    return _affine_rank(p, verts)


@dataclass(frozen=True)
class Facet:
    """One facet: the coordinates that cut it out and the vertices on it.

    Several coordinates may define the same facet; they are merged here, so
    ``coordinates`` can have more than one element.
    """

    id: int
    coordinates: ZeroSet
    vertex_indices: frozenset[int]


class Facets(Sequence[Facet]):
    """Facet catalogue of a polytope, with per-vertex facet memberships.

    Sequence of :class:`Facet`, ordered by smallest defining coordinate.
    Coordinates whose vanishing locus is not a facet (empty, or dimension
    below dim P - 1) are listed in ``non_facet_coordinates``.
    """

    def __init__(
        self,
        facets: Sequence[Facet],
        non_facet_coordinates: Sequence[int],
        vertex_count: int,
        width: int,
        vanishing_bits: int,
    ) -> None:
        self._facets = tuple(facets)
        self.non_facet_coordinates = tuple(non_facet_coordinates)
        self.width = width
        mask = 0
        per_vertex: list[set[int]] = [set() for _ in range(vertex_count)]
        for f in self._facets:
            mask |= f.coordinates.bits
            for w in f.vertex_indices:
                per_vertex[w].add(f.id)
        self.coordinate_mask = mask
        # facet coordinates that vanish on every vertex; empty for well-posed
        # input, kept so the complementarity test below is an identity
        self.vanishing_mask = vanishing_bits & mask
        self._of_vertex = tuple(frozenset(s) for s in per_vertex)

    def __len__(self) -> int:
        return len(self._facets)

    def __getitem__(self, i):  # type: ignore[override]
        return self._facets[i]

    def of_vertex(self, vertex_index: int) -> frozenset[int]:
        """Ids of the facets containing the given vertex."""
        return self._of_vertex[vertex_index]

    def common(self, u: int, v: int) -> frozenset[int]:
        """Ids of facets containing both vertices."""
        return self._of_vertex[u] & self._of_vertex[v]


def detect_facets(p: Polytope) -> Facets:
    """Group coordinates into facets by their vertex sets.

    A coordinate defines a facet when its vanishing locus has dimension
    dim P - 1; coordinates with identical vertex sets name the same facet
    and are merged. Requires dim P >= 1.
    """
    d = p.dimension
    if d < 1:
        raise ValueError("facet detection requires dimension >= 1")
    groups: dict[tuple[int, ...], list[int]] = {}
    non_facets: list[int] = []
    for coord in range(1, p.n + 1):
        verts = face_vertices(p, ZeroSet.of_indices(p.n, (coord,)))
        if verts and _affine_rank(p, verts) == d - 1:
            groups.setdefault(tuple(verts), []).append(coord)
        else:
            non_facets.append(coord)
    facets = [
        Facet(fid, ZeroSet.of_indices(p.n, coords), frozenset(verts))
        for fid, (verts, coords) in enumerate(groups.items())
    ]
    vanishing = p.zero_sets[0].bits
    for zs in p.zero_sets[1:]:
        vanishing &= zs.bits
    return Facets(facets, non_facets, p.vertex_count, p.n, vanishing)


def is_complementary(p: Polytope, u: int, v: int, facets: Facets | None = None) -> bool:
    """True when vertices u and v lie on no common facet.

    Implemented as a bit test: the common zero coordinates, restricted to
    facet-defining positions, must be exactly those vanishing on all of P.
    Computes the facet catalogue when one is not supplied (not cheap; pass
    ``facets`` when calling repeatedly).
    """
    p._check_vertex_index(u)
    p._check_vertex_index(v)
    if u == v:
        raise ValueError("complementarity needs two distinct vertices")
    if facets is None:
        facets = detect_facets(p)
    common = p.zero_sets[u].bits & p.zero_sets[v].bits & facets.coordinate_mask
    return common == facets.vanishing_mask


def is_simple(p: Polytope, facets: Facets | None = None) -> bool:
    """True when every vertex lies on exactly dim P facets."""
    d = p.dimension
    if d == 0:
        return True
    if facets is None:
        facets = detect_facets(p)
    return all(len(facets.of_vertex(w)) == d for w in range(p.vertex_count))
