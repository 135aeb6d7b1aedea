"""Combinatorial simple polytopes via vertex-facet incidence.

A simple n-polytope is recorded purely combinatorially: each vertex is the
set of the n facets through it.  For simple polytopes this determines the
whole face lattice (a codimension-c face is a c-subset of facets with a
nonempty common vertex set), so vertex and face truncations, f- and
h-vectors, and combinatorial isomorphism all work on this data alone.
Geometric realizations are out of scope.

Vertex truncation models the blow-up of a toric variety at a fixed point;
truncating a k-face of the fresh simplex facet models the follow-up blow-up
along a k-dimensional invariant subspace of the exceptional divisor.
``apply_plan`` plays a whole modification plan on the moment polytope of the
plan's base, and ``rigidity_demo`` exhibits the pair of modifications with
combinatorially equivalent polytopes but different Milnor-number changes.
"""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import TYPE_CHECKING, Iterable, Optional

from . import milnor

if TYPE_CHECKING:  # pragma: no cover
    from .planner import ModificationPlan

# f-vector enumeration touches every subset of every vertex's facet set;
# beyond this much estimated work an explicit force flag is required.
_FVECTOR_WORK_LIMIT = 2**25


class SimplePolytope:
    """Combinatorial simple polytope: dim, facet count, vertex-facet sets.

    Vertices are stored canonically (each as a frozenset, listed in
    lexicographic order of the sorted index tuples).  Construction validates
    simplicity, distinctness, that no facet is redundant, and that every
    ridge (an (n-1)-subset of some vertex's facets) lies in exactly two
    vertices, which is the edge condition of a polytope boundary.
    """

    __slots__ = ("dim", "facet_count", "vertices")

    def __init__(self, dim: int, facet_count: int, vertices: Iterable[Iterable[int]]):
        self.dim = int(dim)
        self.facet_count = int(facet_count)
        ordered = sorted(tuple(sorted(v)) for v in vertices)
        self.vertices: tuple[frozenset[int], ...] = tuple(frozenset(v) for v in ordered)
        self._validate(ordered)

    def _validate(self, ordered: list[tuple[int, ...]]) -> None:
        if self.dim < 1:
            raise ValueError("dimension must be >= 1")
        if self.facet_count < self.dim + 1:
            raise ValueError("an n-polytope needs at least n+1 facets")
        used: set[int] = set()
        for vt in ordered:
            if len(vt) != self.dim or len(set(vt)) != self.dim:
                raise ValueError("each vertex must lie on exactly dim distinct facets")
            if vt[0] < 0 or vt[-1] >= self.facet_count:
                raise ValueError("facet index out of range")
            used.update(vt)
        if len(set(ordered)) != len(ordered):
            raise ValueError("duplicate vertex")
        if used != set(range(self.facet_count)):
            raise ValueError("facet without any vertex")
        ridges: Counter = Counter()
        for v in self.vertices:
            for f in v:
                ridges[v - {f}] += 1
        bad = [r for r, c in ridges.items() if c != 2]
        if bad:
            raise ValueError(f"ridge contained in {ridges[bad[0]]} vertices, expected 2")

    def vertex_tuples(self) -> list[list[int]]:
        return [sorted(v) for v in self.vertices]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplePolytope):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.facet_count == other.facet_count
            and self.vertices == other.vertices
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.facet_count, self.vertices))

    def __repr__(self) -> str:
        return (
            f"SimplePolytope(dim={self.dim}, facets={self.facet_count}, "
            f"vertices={len(self.vertices)})"
        )


@dataclass(frozen=True)
class Face:
    """A face of a simple polytope, named by its defining facet set.

    In a simple polytope a nonempty intersection of c facets has codimension
    exactly c; ``vertex_set`` lists the vertices lying on the face.
    """

    defining_facets: frozenset[int]
    codim: int
    vertex_set: tuple[frozenset[int], ...]


def face(p: SimplePolytope, defining_facets: Iterable[int]) -> Face:
    """The face cut out by the given facets; raises if the intersection is empty."""
    defining = frozenset(int(f) for f in defining_facets)
    if not defining:
        raise ValueError("a face needs at least one defining facet")
    if any(not 0 <= f < p.facet_count for f in defining):
        raise ValueError("facet index out of range")
    verts = tuple(v for v in p.vertices if defining <= v)
    if not verts:
        raise ValueError("the given facets have empty intersection")
    return Face(defining_facets=defining, codim=len(defining), vertex_set=verts)


def simplex(n: int) -> SimplePolytope:
    """The n-simplex: n+1 facets, each vertex omitting exactly one."""
    if n < 1:
        raise ValueError("simplex dimension must be >= 1")
    verts = [[f for f in range(n + 1) if f != skip] for skip in range(n + 1)]
    return SimplePolytope(n, n + 1, verts)


def product(p: SimplePolytope, q: SimplePolytope) -> SimplePolytope:
    """Product polytope: facets are the disjoint union, vertices are pairs."""
    shift = p.facet_count
    verts = [
        sorted(u) + [f + shift for f in sorted(w)]
        for u in p.vertices
        for w in q.vertices
    ]
    return SimplePolytope(p.dim + q.dim, p.facet_count + q.facet_count, verts)


def cut_vertex(p: SimplePolytope, vertex_index: int) -> SimplePolytope:
    """Truncate one vertex: a new facet replaces it by dim new vertices.

    The i-th new vertex lies on the new facet and on all old facets of the
    vertex except the i-th (in sorted order).
    """
    if p.dim < 2:
        raise ValueError("vertex truncation needs dimension >= 2")
    if not 0 <= vertex_index < len(p.vertices):
        raise ValueError(f"vertex index {vertex_index} out of range")
    v = p.vertices[vertex_index]
    g = p.facet_count
    verts = [sorted(w) for w in p.vertices if w != v]
    for f in sorted(v):
        verts.append(sorted((v - {f}) | {g}))
    return SimplePolytope(p.dim, p.facet_count + 1, verts)


def cut_face(p: SimplePolytope, defining_facets: Iterable[int]) -> SimplePolytope:
    """Truncate the face cut out by ``defining_facets`` (codimension c >= 2).

    Every vertex of the face, lying on the c defining facets plus n-c
    others, is replaced by c new vertices: the j-th keeps the n-c others,
    picks up the new facet, and drops the j-th defining facet.  With c = n
    this is exactly a vertex truncation.  The new facet is combinatorially
    the product of the face with a (c-1)-simplex.
    """
    if p.dim < 2:
        raise ValueError("face truncation needs dimension >= 2")
    cut = face(p, defining_facets)
    if cut.codim < 2:
        raise ValueError("face truncation needs codimension >= 2")
    defining = sorted(cut.defining_facets)
    g = p.facet_count
    on_face = set(cut.vertex_set)
    verts = [sorted(w) for w in p.vertices if w not in on_face]
    for v in cut.vertex_set:
        rest = v - cut.defining_facets
        for drop in defining:
            verts.append(sorted(rest | {g} | (cut.defining_facets - {drop})))
    return SimplePolytope(p.dim, p.facet_count + 1, verts)


def f_vector(p: SimplePolytope, force: bool = False) -> tuple[int, ...]:
    """Face counts (f_0, ..., f_n), with f_n = 1 for the whole polytope.

    A codimension-c face is a c-subset of facets with a nonempty common
    vertex set, and every such subset occurs inside some vertex's facet set,
    so enumeration walks the subsets of each vertex.  The work grows like
    (number of vertices) * 2^dim; pass force=True to run past the guard.
    """
    if len(p.vertices) << p.dim > _FVECTOR_WORK_LIMIT and not force:
        raise ValueError(
            "f-vector enumeration would be expensive for this polytope; "
            "pass force=True to run it anyway"
        )
    seen: list[set[tuple[int, ...]]] = [set() for _ in range(p.dim + 1)]
    for v in p.vertices:
        vt = sorted(v)
        for c in range(p.dim + 1):
            seen[c].update(itertools.combinations(vt, c))
    return tuple(len(seen[p.dim - j]) for j in range(p.dim + 1))


def h_vector(p: SimplePolytope, force: bool = False) -> tuple[int, ...]:
    """The h-vector (h_0, ..., h_n): coefficients of sum_j f_j (t-1)^j.

    h_0 = h_n = 1, the entries are symmetric (Dehn-Sommerville), and they
    sum to the vertex count.
    """
    fv = f_vector(p, force=force)
    n = p.dim
    from .arith import binomial

    coeffs = [0] * (n + 1)
    for j, fj in enumerate(fv):
        for i in range(j + 1):
            sign = 1 if (j - i) % 2 == 0 else -1
            coeffs[i] += fj * binomial(j, i) * sign
    return tuple(coeffs)


@dataclass(frozen=True)
class ChiPolynomial:
    """Homogeneous polynomial sum_i coefficients[i] * a^i * b^(n-i).

    With the h-vector as coefficients this is the two-parameter genus of the
    toric variety of the polytope; at a = b = 1 it evaluates to the vertex
    count (the Euler characteristic).
    """

    coefficients: tuple[int, ...]

    def __call__(self, a: int, b: int) -> int:
        n = len(self.coefficients) - 1
        return sum(c * a**i * b ** (n - i) for i, c in enumerate(self.coefficients))

    def degree(self) -> int:
        return len(self.coefficients) - 1


def chi_ab(p: SimplePolytope, force: bool = False) -> ChiPolynomial:
    """The two-parameter genus polynomial sum_i h_i(P) a^i b^(n-i)."""
    return ChiPolynomial(h_vector(p, force=force))


def _facet_adjacency(p: SimplePolytope) -> list[set[int]]:
    adj: list[set[int]] = [set() for _ in range(p.facet_count)]
    for v in p.vertices:
        vt = sorted(v)
        for i, a in enumerate(vt):
            for b in vt[i + 1 :]:
                adj[a].add(b)
                adj[b].add(a)
    return adj


def _refined_labels(p: SimplePolytope) -> tuple[list[int], list[set[int]]]:
    """Iteratively refined facet labels from vertex degrees and adjacency."""
    adj = _facet_adjacency(p)
    degree = [0] * p.facet_count
    for v in p.vertices:
        for f in v:
            degree[f] += 1
    labels = list(degree)
    for _ in range(p.facet_count):
        sigs = [
            (labels[i], tuple(sorted(labels[j] for j in adj[i])))
            for i in range(p.facet_count)
        ]
        compress = {s: t for t, s in enumerate(sorted(set(sigs)))}
        renamed = [compress[s] for s in sigs]
        if renamed == labels:
            break
        labels = renamed
    return labels, adj


def comb_iso(p: SimplePolytope, q: SimplePolytope) -> Optional[tuple[int, ...]]:
    """A facet bijection carrying vertex sets of p onto vertex sets of q.

    For simple polytopes such a bijection is a combinatorial isomorphism,
    because the maximal facet intersections determine the face lattice.
    Backtracking over facet images, pruned by refined labels, adjacency
    consistency, and early rejection of any fully-mapped vertex whose image
    is not a vertex of q.  Returns the mapping (facet i of p goes to entry
    i) or None.
    """
    if (
        p.dim != q.dim
        or p.facet_count != q.facet_count
        or len(p.vertices) != len(q.vertices)
    ):
        return None
    labels_p, adj_p = _refined_labels(p)
    labels_q, adj_q = _refined_labels(q)
    if sorted(labels_p) != sorted(labels_q):
        return None

    m = p.facet_count
    q_vertex_set = set(q.vertices)
    by_label_q: dict[int, list[int]] = defaultdict(list)
    for j in range(m):
        by_label_q[labels_q[j]].append(j)
    order = sorted(
        range(m), key=lambda i: (len(by_label_q[labels_p[i]]), -len(adj_p[i]), i)
    )

    p_verts = [tuple(v) for v in p.vertices]
    verts_with_facet: dict[int, list[int]] = defaultdict(list)
    for vid, vt in enumerate(p_verts):
        for f in vt:
            verts_with_facet[f].append(vid)
    pending = [len(vt) for vt in p_verts]

    mapping = [-1] * m
    used = [False] * m
    assigned: list[int] = []

    def place(pos: int) -> bool:
        if pos == m:
            return all(
                frozenset(mapping[f] for f in vt) in q_vertex_set for vt in p_verts
            )
        i = order[pos]
        for j in by_label_q[labels_p[i]]:
            if used[j]:
                continue
            if any((u in adj_p[i]) != (mapping[u] in adj_q[j]) for u in assigned):
                continue
            mapping[i] = j
            used[j] = True
            assigned.append(i)
            touched = []
            consistent = True
            for vid in verts_with_facet[i]:
                pending[vid] -= 1
                touched.append(vid)
                if pending[vid] == 0:
                    image = frozenset(mapping[f] for f in p_verts[vid])
                    if image not in q_vertex_set:
                        consistent = False
                        break
            if consistent and place(pos + 1):
                return True
            for vid in touched:
                pending[vid] += 1
            assigned.pop()
            used[j] = False
            mapping[i] = -1
        return False

    return tuple(mapping) if place(0) else None


def _new_facet_vertices(p: SimplePolytope, g: int) -> list[frozenset[int]]:
    """Vertices on facet g, in the polytope's canonical vertex order."""
    return [v for v in p.vertices if g in v]


def verify_complementary_equiv(p: SimplePolytope, vertex_index: int, k: int) -> bool:
    """Truncating complementary faces of the fresh facet gives equivalent polytopes.

    Cut the chosen vertex; on the new simplex facet take the face spanned by
    its first k+1 vertices and the complementary face spanned by the
    remaining n-k-1.  Truncating either must produce combinatorially
    isomorphic polytopes; this runs both truncations and the isomorphism
    search.
    """
    n = p.dim
    if not 0 <= k <= n - 2:
        raise ValueError(f"k must satisfy 0 <= k <= n-2, got {k}")
    g = p.facet_count
    q = cut_vertex(p, vertex_index)
    gverts = _new_facet_vertices(q, g)
    span_first = gverts[: k + 1]
    span_rest = gverts[k + 1 :]
    d1 = frozenset.intersection(*span_first)
    d2 = frozenset.intersection(*span_rest)
    p1 = cut_face(q, d1)
    p2 = cut_face(q, d2)
    return comb_iso(p1, p2) is not None


def apply_plan(plan: "ModificationPlan") -> SimplePolytope:
    """Play a modification plan on the moment polytope of its base.

    The base bundle's polytope is the product of two segments and an
    (n-2)-simplex.  Each modification with parameter k cuts the polytope's
    first vertex (canonical order) and then the k-face of the fresh simplex
    facet spanned by its first k+1 vertices; any deterministic choice policy
    yields the same Milnor-number bookkeeping, so this fixed one is used for
    reproducibility.
    """
    n = plan.n
    if n < 3:
        raise ValueError("plan application needs dimension >= 3")
    if len(plan.counts) != n - 1:
        raise ValueError("plan dimension mismatch: counts must cover k = 0..n-2")
    poly = product(product(simplex(1), simplex(1)), simplex(n - 2))
    for k, count in enumerate(plan.counts):
        for _ in range(count):
            poly = _apply_modification(poly, k)
    return poly


def _apply_modification(poly: SimplePolytope, k: int) -> SimplePolytope:
    g = poly.facet_count
    poly = cut_vertex(poly, 0)
    gverts = _new_facet_vertices(poly, g)
    d = frozenset.intersection(*gverts[: k + 1])
    return cut_face(poly, d)


@dataclass(frozen=True)
class RigidityReport:
    """Isomorphic polytopes from the extreme modifications of a simplex.

    ``delta_point`` and ``delta_top`` are the Milnor-number changes of the
    k = 0 and k = n-2 modifications; they differ although the two moment
    polytopes are combinatorially equivalent, so no combinatorial invariant
    of the polytope can see the difference.
    """

    n: int
    facet_bijection: Optional[tuple[int, ...]]
    h_first: tuple[int, ...]
    h_last: tuple[int, ...]
    delta_point: int
    delta_top: int

    @property
    def iso_found(self) -> bool:
        return self.facet_bijection is not None

    @property
    def h_match(self) -> bool:
        return self.h_first == self.h_last

    @property
    def chi(self) -> ChiPolynomial:
        return ChiPolynomial(self.h_first)

    @property
    def deltas_differ(self) -> bool:
        return self.delta_point != self.delta_top

    @property
    def passed(self) -> bool:
        return self.iso_found and self.h_match and self.deltas_differ


def rigidity_demo(n: int) -> RigidityReport:
    """Compare the k = 0 and k = n-2 modifications of the n-simplex.

    Both arise from truncating complementary faces (a vertex and the
    opposite (n-2)-face) of the fresh facet after a vertex cut, so their
    polytopes are combinatorially equivalent with equal h-vectors, while the
    Milnor-number changes s_kn(n, 0) and s_kn(n, n-2) differ.
    """
    if n < 3:
        raise ValueError("rigidity demo needs n >= 3")
    base = simplex(n)
    g = base.facet_count
    q = cut_vertex(base, 0)
    gverts = _new_facet_vertices(q, g)
    first = cut_face(q, frozenset.intersection(*gverts[:1]))
    last = cut_face(q, frozenset.intersection(*gverts[1:]))
    return RigidityReport(
        n=n,
        facet_bijection=comb_iso(first, last),
        h_first=h_vector(first),
        h_last=h_vector(last),
        delta_point=milnor.s_kn(n, 0),
        delta_top=milnor.s_kn(n, n - 2),
    )


def to_dict(p: SimplePolytope) -> dict:
    """Canonical JSON-ready form: sorted vertex tuples in sorted order."""
    return {"dim": p.dim, "facets": p.facet_count, "vertices": p.vertex_tuples()}


def from_dict(data: dict) -> SimplePolytope:
    try:
        return SimplePolytope(data["dim"], data["facets"], data["vertices"])
    except KeyError as exc:
        raise ValueError(f"polytope document missing field {exc}") from exc
