# hommodels/graph.py
# -----------------------------------------------------------------------------
# Finite simple graphs, the named families P_n / K_n / C_n, common neighbours
# and the independence structures ind(G) / Ind(G).
# -----------------------------------------------------------------------------
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple, Union

from .errors import GraphError
from .models import MAX_LABEL, VertexSet

Labels = Union[VertexSet, Iterable[int]]

KINDS = ("path", "complete", "cycle")


@dataclass(frozen=True)
class Graph:
    """Loopless simple graph on small integer labels (at most 64 of them)."""

    vertices: Tuple[int, ...]
    edges: FrozenSet[Tuple[int, int]]
    name: str = ""
    _adj: Dict[int, int] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = tuple(sorted(set(int(v) for v in self.vertices)))
        if len(verts) != len(self.vertices):
            raise GraphError("duplicate vertex labels")
        for v in verts:
            if v < 0 or v > MAX_LABEL:
                raise GraphError(f"vertex label {v} outside 0..{MAX_LABEL} (bitmask overflow)")
        vset = set(verts)
        norm = set()
        for e in self.edges:
            u, v = (int(x) for x in e)
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if u not in vset or v not in vset:
                raise GraphError(f"edge {{{u},{v}}} has an endpoint outside the vertex set")
            norm.add((min(u, v), max(u, v)))
        adj = {v: 0 for v in verts}
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "_adj", adj)

    @classmethod
    def from_edges(cls, vertices: Iterable[int], edges: Iterable[Tuple[int, int]], name: str = "") -> "Graph":
        """Like the constructor, but duplicate edges are an error instead of collapsing."""
        edges = list(edges)
        seen = set()
        for u, v in edges:
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge {{{u},{v}}}")
            seen.add(key)
        return cls(tuple(vertices), frozenset(edges), name)

    # ---------- queries ----------
    @property
    def vertex_set(self) -> VertexSet:
        return VertexSet.of(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def neighbors(self, v: int) -> VertexSet:
        try:
            return VertexSet(self._adj[v])
        except KeyError:
            raise GraphError(f"unknown vertex {v}") from None

    def is_edge(self, u: int, v: int) -> bool:
        return u in self._adj and bool(self._adj[u] >> v & 1)

    def is_complete(self) -> bool:
        n = len(self.vertices)
        return len(self.edges) == n * (n - 1) // 2

    def is_independent(self, s: Labels) -> bool:
        s = as_vertex_set(self, s)
        return all(self._adj[v] & s.mask == 0 for v in s)

    def label(self) -> str:
        return self.name or f"G[{len(self.vertices)}v,{len(self.edges)}e]"

    def __str__(self) -> str:
        return self.label()


def as_vertex_set(g: Graph, s: Labels) -> VertexSet:
    """Coerce to a VertexSet and check it lies inside V(g)."""
    vs = s if isinstance(s, VertexSet) else VertexSet.of(s)
    unknown = vs - g.vertex_set
    if unknown:
        raise GraphError(f"unknown vertex labels {unknown} for {g.label()}")
    return vs


# ======================
# Named families
# ======================

def build_named(kind: str, n: int) -> Graph:
    """P_n on {0..n}; K_n and C_n on {1..n}."""
    if kind == "path":
        if n < 0:
            raise GraphError(f"path needs n >= 0, got {n}")
        return Graph(tuple(range(n + 1)), frozenset((i, i + 1) for i in range(n)), f"P_{n}")
    if kind == "complete":
        if n < 1:
            raise GraphError(f"complete graph needs n >= 1, got {n}")
        return Graph(tuple(range(1, n + 1)), frozenset(combinations(range(1, n + 1), 2)), f"K_{n}")
    if kind == "cycle":
        if n < 3:
            raise GraphError(f"cycle needs n >= 3, got {n}")
        edges = {(i, i + 1) for i in range(1, n)} | {(1, n)}
        return Graph(tuple(range(1, n + 1)), frozenset(edges), f"C_{n}")
    raise GraphError(f"unknown graph family {kind!r} (expected one of {', '.join(KINDS)})")


# ======================
# Neighbourhoods and subgraphs
# ======================

def common_neighbors(g: Graph, s: Labels) -> VertexSet:
    """ν(S): vertices adjacent to every element of S; ν(∅) = V(G)."""
    s = as_vertex_set(g, s)
    mask = g.vertex_set.mask
    for v in s:
        mask &= g._adj[v]
    return VertexSet(mask)


def delete_vertices(g: Graph, s: Labels) -> Graph:
    """Induced subgraph on V(G) \\ S, keeping the original labels."""
    s = as_vertex_set(g, s)
    keep = tuple(v for v in g.vertices if v not in s)
    edges = frozenset(e for e in g.edges if e[0] not in s and e[1] not in s)
    name = f"{g.label()}\\{s}" if s else g.name
    return Graph(keep, edges, name)


# ======================
# Independence structures
# ======================

def independent_masks(g: Graph) -> List[int]:
    """All independent sets (∅ included) as masks, ordered by size then mask."""
    out: List[int] = []
    verts = g.vertices

    def grow(start: int, mask: int, blocked: int) -> None:
        out.append(mask)
        for i in range(start, len(verts)):
            v = verts[i]
            if not blocked >> v & 1:
                grow(i + 1, mask | 1 << v, blocked | g._adj[v] | 1 << v)

    grow(0, 0, 0)
    out.sort(key=lambda m: (bin(m).count("1"), m))
    return out


def independent_sets(g: Graph):
    """ind(G): independent subsets including ∅, ordered by inclusion."""
    from .poset import Poset

    masks = independent_masks(g)
    return Poset.from_masks([VertexSet(m) for m in masks], masks, name=f"ind({g.label()})")


def independence_complex(g: Graph):
    """Ind(G): nonempty independent sets as a simplicial complex on V(G)."""
    from .complex import SimplicialComplex

    faces = [tuple(VertexSet(m)) for m in independent_masks(g) if m]
    return SimplicialComplex.from_faces(faces, check=False)


def neighborhood_complex(h: Graph):
    """Nonempty A ⊆ V(H) with ν(A) ≠ ∅; facets are the vertex neighbourhoods."""
    from .complex import SimplicialComplex

    facets = [tuple(h.neighbors(w)) for w in h.vertices if h._adj[w]]
    return SimplicialComplex.from_facets(facets)


def chromatic_number(g: Graph) -> int:
    if not g.vertices:
        return 0
    order = sorted(g.vertices, key=lambda v: -len(g.neighbors(v)))

    def colourable(k: int) -> bool:
        colour: Dict[int, int] = {}

        def place(i: int) -> bool:
            if i == len(order):
                return True
            v = order[i]
            used = {colour[u] for u in g.neighbors(v) if u in colour}
            # symmetry: never open more than one new colour at a time
            top = max(colour.values(), default=-1)
            for c in range(min(k, top + 2)):
                if c not in used:
                    colour[v] = c
                    if place(i + 1):
                        return True
                    del colour[v]
            return False

        return place(0)

    k = 1
    while not colourable(k):
        k += 1
    return k


# ======================
# Graph homomorphisms
# ======================

def is_homomorphism(mapping: Mapping[int, int], source: Graph, target: Graph) -> bool:
    if set(mapping) != set(source.vertices):
        return False
    if any(mapping[v] not in target._adj for v in source.vertices):
        return False
    return all(target.is_edge(mapping[u], mapping[v]) for u, v in source.edges)


@dataclass(frozen=True)
class GraphHom:
    source: Graph
    target: Graph
    mapping: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        m = dict(self.mapping)
        if not is_homomorphism(m, self.source, self.target):
            raise GraphError(f"{m} is not a graph homomorphism {self.source.label()} -> {self.target.label()}")
        object.__setattr__(self, "mapping", tuple(sorted(m.items())))

    @classmethod
    def of(cls, source: Graph, target: Graph, mapping: Mapping[int, int]) -> "GraphHom":
        return cls(source, target, tuple(mapping.items()))

    @classmethod
    def identity(cls, g: Graph) -> "GraphHom":
        return cls(g, g, tuple((v, v) for v in g.vertices))

    @classmethod
    def inclusion(cls, sub: Graph, g: Graph) -> "GraphHom":
        return cls(sub, g, tuple((v, v) for v in sub.vertices))

    def __call__(self, v: int) -> int:
        return dict(self.mapping)[v]

    def image(self, s: VertexSet) -> VertexSet:
        m = dict(self.mapping)
        return VertexSet.of(m[v] for v in s)
