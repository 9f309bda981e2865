# hommodels/complex.py
# -----------------------------------------------------------------------------
# Finite abstract simplicial complexes: faces stored per dimension as sorted
# vertex tuples, with links, joins, subdivisions, simplicial neighbourhoods
# and graded sphere/ball verdicts.
# -----------------------------------------------------------------------------
from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .errors import ComplexError
from .models import (
    CERTIFIED_BALL,
    CERTIFIED_SPHERE,
    HOMOLOGY_BALL,
    HOMOLOGY_SPHERE,
    NO,
    OTHER,
    FVector,
    SphereVerdict,
)

LOGGER = logging.getLogger(__name__)

Face = Tuple[int, ...]


class SimplicialComplex:
    """
    Downward-closed family of nonempty faces on integer vertices.

    Two degenerate complexes are kept apart: `empty()` has only the empty
    face (the (-1)-sphere) and `void()` has no faces at all.
    """

    def __init__(self, levels: Sequence[Sequence[Face]], void: bool = False):
        self._levels: Tuple[Tuple[Face, ...], ...] = tuple(tuple(lvl) for lvl in levels)
        while self._levels and not self._levels[-1]:
            self._levels = self._levels[:-1]
        self._void = void and not self._levels
        self._index: Optional[List[Dict[Face, int]]] = None
        self._cofaces: Optional[Dict[int, List[Face]]] = None

    # ---------- constructors ----------
    @classmethod
    def from_levels(cls, levels: Sequence[Sequence[Face]]) -> "SimplicialComplex":
        """Trusted: levels[d] is the sorted list of closed d-faces."""
        return cls(levels)

    @classmethod
    def from_faces(cls, faces: Iterable[Iterable[int]], check: bool = True) -> "SimplicialComplex":
        by_dim: Dict[int, set] = {}
        for f in faces:
            t = tuple(sorted(set(f)))
            if t:
                by_dim.setdefault(len(t) - 1, set()).add(t)
        top = max(by_dim, default=-1)
        levels = [sorted(by_dim.get(d, ())) for d in range(top + 1)]
        k = cls(levels)
        if check:
            for d in range(1, top + 1):
                lower = set(levels[d - 1])
                for f in levels[d]:
                    for i in range(len(f)):
                        if f[:i] + f[i + 1:] not in lower:
                            raise ComplexError(f"face {f} is missing its facet {f[:i] + f[i + 1:]}")
        return k

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        faces = set()
        for f in facets:
            t = tuple(sorted(set(f)))
            for k in range(1, len(t) + 1):
                faces.update(combinations(t, k))
        return cls.from_faces(faces, check=False)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        return cls(())

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls((), void=True)

    # ---------- queries ----------
    @property
    def is_void(self) -> bool:
        return self._void

    @property
    def is_empty(self) -> bool:
        return not self._levels and not self._void

    @property
    def dim(self) -> int:
        return len(self._levels) - 1

    def faces(self, d: int) -> Tuple[Face, ...]:
        return self._levels[d] if 0 <= d < len(self._levels) else ()

    def all_faces(self) -> Iterator[Face]:
        for lvl in self._levels:
            yield from lvl

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(f[0] for f in self.faces(0))

    def __len__(self) -> int:
        return sum(len(lvl) for lvl in self._levels)

    def __contains__(self, face: Iterable[int]) -> bool:
        t = tuple(sorted(set(face)))
        if not t:
            return not self._void
        d = len(t) - 1
        return d < len(self._levels) and t in self.index_map(d)

    def index_map(self, d: int) -> Dict[Face, int]:
        if self._index is None:
            self._index = [{f: i for i, f in enumerate(lvl)} for lvl in self._levels]
        return self._index[d] if 0 <= d < len(self._index) else {}

    def facets(self) -> List[Face]:
        out = []
        for d, lvl in enumerate(self._levels):
            if d + 1 < len(self._levels):
                covered = {g for f in self._levels[d + 1] for g in _boundary_faces(f)}
                out.extend(f for f in lvl if f not in covered)
            else:
                out.extend(lvl)
        return sorted(out)

    def cofaces(self, v: int) -> List[Face]:
        """All faces containing vertex v."""
        if self._cofaces is None:
            star: Dict[int, List[Face]] = {}
            for f in self.all_faces():
                for x in f:
                    star.setdefault(x, []).append(f)
            self._cofaces = star
        return self._cofaces.get(v, [])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._levels == other._levels and self._void == other._void

    def __hash__(self) -> int:
        return hash((self._levels, self._void))

    def __repr__(self) -> str:
        if self._void:
            return "SimplicialComplex(void)"
        return f"SimplicialComplex(dim={self.dim}, f={tuple(len(lvl) for lvl in self._levels)})"


def _boundary_faces(f: Face) -> Iterator[Face]:
    if len(f) > 1:
        for i in range(len(f)):
            yield f[:i] + f[i + 1:]


def _require_face(k: SimplicialComplex, sigma: Iterable[int]) -> Face:
    t = tuple(sorted(set(sigma)))
    if t and t not in k:
        raise ComplexError(f"{t} is not a face of the complex")
    return t


# ======================
# Standard complexes
# ======================

def simplex(k: int, vertices: Optional[Sequence[int]] = None) -> SimplicialComplex:
    """The full k-simplex Δ^k."""
    verts = tuple(vertices) if vertices is not None else tuple(range(k + 1))
    if len(verts) != k + 1:
        raise ComplexError(f"Δ^{k} needs {k + 1} vertices")
    return SimplicialComplex.from_facets([verts])


def boundary_of_simplex(k: int, vertices: Optional[Sequence[int]] = None) -> SimplicialComplex:
    """∂Δ^k: all proper nonempty subsets of a (k+1)-set."""
    verts = tuple(vertices) if vertices is not None else tuple(range(k + 1))
    if len(verts) != k + 1:
        raise ComplexError(f"∂Δ^{k} needs {k + 1} vertices")
    if k == 0:
        return SimplicialComplex.empty()
    return SimplicialComplex.from_facets(combinations(verts, k))


def f_vector(k: SimplicialComplex) -> FVector:
    return FVector(tuple(len(k.faces(d)) for d in range(k.dim + 1)))


def face_poset(k: SimplicialComplex):
    """Nonempty faces ordered by inclusion; payloads are the sorted vertex tuples."""
    from .poset import Poset

    if k.is_void or k.is_empty:
        raise ComplexError("the face poset of an empty complex is undefined")
    faces = list(k.all_faces())
    masks = [sum(1 << v for v in f) for f in faces]
    if max(max(f) for f in faces) > 63:
        return Poset.from_order(faces, lambda a, b: set(a) <= set(b), name="F(K)")
    return Poset.from_masks(faces, masks, name="F(K)")


def barycentric(k: SimplicialComplex) -> SimplicialComplex:
    from .poset import order_complex

    return order_complex(face_poset(k))


# ======================
# Local structure
# ======================

def link(k: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """{τ : τ ∩ σ = ∅, τ ∪ σ ∈ K}; the link of the empty face is K itself."""
    s = _require_face(k, sigma)
    if not s:
        return k
    pivot = min(s, key=lambda v: len(k.cofaces(v)))
    sset = set(s)
    faces = [tuple(x for x in f if x not in sset) for f in k.cofaces(pivot) if sset.issubset(f)]
    return SimplicialComplex.from_faces([f for f in faces if f], check=False)


def star(k: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """Closed star: all faces of faces containing σ."""
    s = _require_face(k, sigma)
    if not s:
        return k
    sset = set(s)
    pivot = s[0]
    return SimplicialComplex.from_facets(f for f in k.cofaces(pivot) if sset.issubset(f))


def induced_subcomplex(k: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    keep = set(vertices)
    return SimplicialComplex.from_levels([[f for f in k.faces(d) if keep.issuperset(f)] for d in range(k.dim + 1)])


def is_subcomplex(x: SimplicialComplex, y: SimplicialComplex) -> bool:
    return all(f in y for f in x.all_faces())


def is_full_subcomplex(x: SimplicialComplex, y: SimplicialComplex) -> bool:
    """X ⊆ Y and every face of Y spanned by vertices of X lies in X."""
    return is_subcomplex(x, y) and induced_subcomplex(y, x.vertices) == x


def first_difference(x: SimplicialComplex, y: SimplicialComplex) -> Optional[Face]:
    """Smallest face (by dimension, then labels) lying in exactly one of X, Y."""
    diff = set(x.all_faces()) ^ set(y.all_faces())
    return min(diff, key=lambda f: (len(f), f)) if diff else None


def _relabel_apart(k: SimplicialComplex, l: SimplicialComplex) -> SimplicialComplex:
    if not set(k.vertices) & set(l.vertices):
        return l
    shift = max(k.vertices) + 1 - min(l.vertices)
    return SimplicialComplex.from_levels([[tuple(v + shift for v in f) for f in l.faces(d)] for d in range(l.dim + 1)])


def join(k: SimplicialComplex, l: SimplicialComplex) -> SimplicialComplex:
    """K ∗ L; L is shifted past K's labels when the vertex sets meet."""
    if k.is_void or l.is_void:
        return SimplicialComplex.void()
    l = _relabel_apart(k, l)
    kf = [()] + list(k.all_faces())
    lf = [()] + list(l.all_faces())
    return SimplicialComplex.from_faces((a + b for a in kf for b in lf if a or b), check=False)


def cone(k: SimplicialComplex, apex: Optional[int] = None) -> SimplicialComplex:
    apex = (max(k.vertices, default=-1) + 1) if apex is None else apex
    if apex in k.vertices:
        raise ComplexError(f"cone apex {apex} is already a vertex")
    return join(k, SimplicialComplex.from_facets([(apex,)]))


def boundary_complex(k: SimplicialComplex) -> SimplicialComplex:
    """Closure of the codimension-one faces lying in exactly one top face."""
    if k.dim < 1:
        return SimplicialComplex.empty()
    counts = Counter(g for f in k.faces(k.dim) for g in _boundary_faces(f))
    return SimplicialComplex.from_facets(g for g, c in sorted(counts.items()) if c == 1)


def is_pure(k: SimplicialComplex) -> bool:
    return all(len(f) == k.dim + 1 for f in k.facets())


def is_flag(k: SimplicialComplex) -> bool:
    """Every vertex set whose 2-subsets are all faces is a face."""
    g = one_skeleton(k)
    cliques = {tuple(sorted(c)) for c in nx.enumerate_all_cliques(g)}
    return cliques == set(k.all_faces())


def one_skeleton(k: SimplicialComplex) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(k.vertices)
    g.add_edges_from(k.faces(1))
    return g


def connected_components(k: SimplicialComplex) -> int:
    return nx.number_connected_components(one_skeleton(k)) if k.vertices else 0


# ======================
# Simplicial neighbourhoods
# ======================

@dataclass(frozen=True)
class Neighborhood:
    closed: SimplicialComplex
    boundary: SimplicialComplex
    full: bool

    def __iter__(self):
        yield self.closed
        yield self.boundary


def simplicial_neighborhood(y: SimplicialComplex, x: SimplicialComplex) -> Neighborhood:
    """N = {σ : σ ∪ τ ∈ Y for some τ ∈ X}, Ṅ = {σ ∈ N : σ misses every vertex of X}."""
    if not is_subcomplex(x, y):
        raise ComplexError("X is not a subcomplex of Y")
    xv = set(x.vertices)
    closed = set()
    for v in sorted(xv):
        for f in y.cofaces(v):
            for k in range(1, len(f) + 1):
                closed.update(combinations(f, k))
    nb = SimplicialComplex.from_faces(closed, check=False)
    boundary = SimplicialComplex.from_faces((f for f in closed if xv.isdisjoint(f)), check=False)
    return Neighborhood(nb, boundary, is_full_subcomplex(x, y))


# ======================
# Sphere and ball verdicts
# ======================

def _is_path_or_cycle(k: SimplicialComplex) -> Tuple[bool, bool]:
    """(is a path, is a cycle) for a connected 1-dimensional complex."""
    deg = Counter(v for e in k.faces(1) for v in e)
    if len(k.vertices) != len(deg):
        return False, False
    degrees = sorted(deg.values())
    if connected_components(k) != 1:
        return False, False
    if all(d == 2 for d in degrees):
        return False, True
    return degrees.count(1) == 2 and all(d in (1, 2) for d in degrees), False


def _verdict_dim2(k: SimplicialComplex) -> SphereVerdict:
    if connected_components(k) != 1:
        return SphereVerdict(NO, 2, "disconnected")
    if not is_pure(k):
        return SphereVerdict(NO, 2, "not pure")
    edge_use = Counter(g for f in k.faces(2) for g in _boundary_faces(f))
    if any(c > 2 for c in edge_use.values()):
        return SphereVerdict(NO, 2, "edge in more than two triangles")
    boundary_edges = [e for e, c in edge_use.items() if c == 1]
    for v in k.vertices:
        path, cycle = _is_path_or_cycle(link(k, (v,)))
        if not (path or cycle):
            return SphereVerdict(NO, 2, f"vertex link at {v} is not a circle or an arc")
    chi = f_vector(k).euler
    if not boundary_edges:
        if chi == 2:
            return SphereVerdict(CERTIFIED_SPHERE, 2)
        return SphereVerdict(OTHER, 2, f"closed surface with chi={chi}")
    bd = boundary_complex(k)
    if chi == 1 and connected_components(bd) == 1:
        return SphereVerdict(CERTIFIED_BALL, 2)
    return SphereVerdict(OTHER, 2, f"surface with boundary, chi={chi}")


def _homology_verdict(k: SimplicialComplex, d: int, depth: int) -> SphereVerdict:
    from .homology import homology_summary

    if not is_pure(k):
        return SphereVerdict(NO, d, "not pure")
    link_kinds = set()
    for v in k.vertices:
        lv = _verdict(link(k, (v,)), depth + 1)
        if not (lv.is_sphere or lv.is_ball) or lv.dim != d - 1:
            return SphereVerdict(NO, d, f"vertex link at {v}: {lv}")
        link_kinds.add("ball" if lv.is_ball else "sphere")
    h = homology_summary(k)
    reduced = h.reduced_betti()
    torsion_free = not any(h.torsion)
    if "ball" not in link_kinds:
        if torsion_free and reduced == tuple([0] * d + [1]):
            return SphereVerdict(HOMOLOGY_SPHERE, d)
        return SphereVerdict(OTHER, d, f"closed manifold with homology {h.describe()}")
    if torsion_free and not any(reduced):
        return SphereVerdict(HOMOLOGY_BALL, d)
    return SphereVerdict(OTHER, d, f"manifold with boundary, homology {h.describe()}")


def _verdict(k: SimplicialComplex, depth: int = 0) -> SphereVerdict:
    if k.is_void:
        return SphereVerdict(NO, -1, "void complex")
    if k.is_empty:
        return SphereVerdict(CERTIFIED_SPHERE, -1)
    d = k.dim
    if d == 0:
        n = len(k.vertices)
        if n == 2:
            return SphereVerdict(CERTIFIED_SPHERE, 0)
        if n == 1:
            return SphereVerdict(CERTIFIED_BALL, 0)
        return SphereVerdict(NO, 0, f"{n} points")
    if d == 1:
        path, cycle = _is_path_or_cycle(k)
        if cycle:
            return SphereVerdict(CERTIFIED_SPHERE, 1)
        if path:
            return SphereVerdict(CERTIFIED_BALL, 1)
        return SphereVerdict(NO, 1, "not a single cycle or arc")
    if d == 2:
        return _verdict_dim2(k)
    return _homology_verdict(k, d, depth)


def sphere_verdict(k: SimplicialComplex) -> SphereVerdict:
    """Exact in dimension <= 2; homology plus recursive vertex links above."""
    verdict = _verdict(k)
    LOGGER.debug("sphere verdict for %r: %s", k, verdict)
    return verdict
