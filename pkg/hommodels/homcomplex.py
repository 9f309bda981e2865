# hommodels/homcomplex.py
# -----------------------------------------------------------------------------
# Face posets of Hom(G,H), the restricted models Hom_S(G,H), induced maps,
# the j -> 6-j flip on C_5, colour slices and the families A_v / B_v / C_M.
# -----------------------------------------------------------------------------
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import config
from .errors import BudgetExceeded, HomComplexError
from .graph import Graph, GraphHom, Labels, as_vertex_set, build_named, delete_vertices, independent_sets
from .homology import ChainComplex, SparseMatrix
from .models import MultiHom, VertexSet
from .poset import Poset, PosetMap

LOGGER = logging.getLogger(__name__)

# largest target for which the full ν table is built before threaded enumeration
PREFILL_COLOURS = 16


# ======================
# Enumeration
# ======================

def _submasks(mask: int) -> Iterator[int]:
    """Nonempty submasks of mask in increasing order."""
    sub = -mask & mask
    while sub:
        yield sub
        sub = (sub - mask) & mask


class _Enumerator:
    def __init__(self, g: Graph, h: Graph, specialize: bool = True):
        self.g = g
        self.h = h
        self.order = g.vertices
        pos = {v: i for i, v in enumerate(self.order)}
        # neighbours already placed when vertex i is reached
        self.earlier = [[pos[u] for u in g.neighbors(v) if pos[u] < i] for i, v in enumerate(self.order)]
        self.full = h.vertex_set.mask
        self.complete = specialize and h.is_complete()
        self._nu: Dict[int, int] = {}

    def nu(self, mask: int) -> int:
        """ν_H of a colour set, as a mask."""
        if self.complete:
            return self.full & ~mask if mask else self.full
        out = self._nu.get(mask)
        if out is None:
            out = self.full
            for c in VertexSet(mask):
                out &= self.h.neighbors(c).mask
            self._nu[mask] = out
        return out

    def prefill(self) -> None:
        """Fill the ν cache for every colour set; worker threads then only read it."""
        if self.complete:
            return
        table = {0: self.full}
        for sub in _submasks(self.full):
            low = sub & -sub
            table[sub] = table[sub ^ low] & self.h.neighbors(low.bit_length() - 1).mask
        self._nu = table

    def allowed(self, i: int, chosen: Sequence[int]) -> int:
        mask = self.full
        for j in self.earlier[i]:
            mask &= self.nu(chosen[j])
        return mask

    def subtree(self, prefix: Tuple[int, ...]) -> List[Tuple[int, ...]]:
        out: List[Tuple[int, ...]] = []
        chosen = list(prefix)
        n = len(self.order)

        def grow(i: int) -> None:
            if i == n:
                out.append(tuple(chosen))
                return
            for sub in _submasks(self.allowed(i, chosen)):
                chosen.append(sub)
                grow(i + 1)
                chosen.pop()

        grow(len(prefix))
        return out


def multihoms(
    g: Graph,
    h: Graph,
    threads: int = 1,
    max_cells: Optional[int] = None,
    specialize: bool = True,
) -> List[MultiHom]:
    """All cells of Hom(G,H), lexicographic in (φ(v_1), φ(v_2), ...) by colour mask."""
    en = _Enumerator(g, h, specialize)
    if not g.vertices:
        return [MultiHom((), ())]
    seeds = [(m,) for m in _submasks(en.allowed(0, []))]
    if threads > 1 and len(seeds) > 1 and (en.complete or len(h) <= PREFILL_COLOURS):
        en.prefill()
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(en.subtree, seeds))
    else:
        parts = [en.subtree(s) for s in seeds]
    keys = [k for part in parts for k in part]
    limit = config.MAX_POSET_SIZE if max_cells is None else max_cells
    if len(keys) > limit:
        raise BudgetExceeded("cells", limit, len(keys))
    LOGGER.debug("Hom(%s,%s): %d cells", g.label(), h.label(), len(keys))
    return [MultiHom(g.vertices, tuple(VertexSet(m) for m in k)) for k in keys]


def is_multihom(phi: MultiHom, g: Graph, h: Graph) -> bool:
    if phi.vertices != g.vertices or any(not c or not c.issubset(h.vertex_set) for c in phi.colours):
        return False
    for u, v in g.edges:
        for a in phi[u]:
            if not phi[v].issubset(h.neighbors(a)):
                return False
    return True


def _poset_of(cells: Sequence[MultiHom], name: str) -> Poset:
    return Poset.from_masks(cells, [c.key() for c in cells], name=name)


def hom_poset(g: Graph, h: Graph, threads: int = 1, max_size: Optional[int] = None) -> Poset:
    """Face poset of Hom(G,H) under vertex-wise inclusion."""
    return _poset_of(multihoms(g, h, threads, max_size), f"Hom({g.label()},{h.label()})")


# ======================
# Restricted models
# ======================

def restrict(phi: MultiHom, s: Labels) -> MultiHom:
    drop = set(s)
    return phi.restrict(v for v in phi.vertices if v not in drop)


def _check_subset(g: Graph, s: Labels) -> VertexSet:
    s = as_vertex_set(g, s)
    if s == g.vertex_set:
        raise HomComplexError("S must be a proper subset of V(G)")
    return s


def restricted_cells(
    g: Graph,
    h: Graph,
    s: Labels,
    method: str = "auto",
    threads: int = 1,
    max_cells: Optional[int] = None,
) -> List[MultiHom]:
    """
    Cells of Hom_S(G,H) on G \\ S.

    method="image" restricts every cell of Hom(G,H); method="criterion"
    keeps the cells φ of Hom(G\\S,H) with ν_H(∪_{u ∈ ν_G(v)} φ(u)) ≠ ∅ for
    every v in S, which needs S independent. "auto" picks the criterion when
    it applies.
    """
    s = _check_subset(g, s)
    sub = delete_vertices(g, s)
    independent = g.is_independent(s)
    if method == "auto":
        method = "criterion" if independent else "image"
    if method == "image":
        keep = sub.vertices
        seen = {phi.restrict(keep) for phi in multihoms(g, h, threads, max_cells)}
        return sorted(seen, key=MultiHom.key)
    if method != "criterion":
        raise HomComplexError(f"unknown method {method!r}")
    if not independent:
        raise HomComplexError(f"the criterion needs an independent S, got {s}")
    en = _Enumerator(sub, h)
    nbrs = {v: list(g.neighbors(v)) for v in s}
    out = []
    for phi in multihoms(sub, h, threads, max_cells):
        ok = True
        for v in s:
            union = 0
            for u in nbrs[v]:
                union |= phi[u].mask
            if not en.nu(union):
                ok = False
                break
        if ok:
            out.append(phi)
    return out


def restricted_hom_poset(
    g: Graph,
    h: Graph,
    s: Labels,
    method: str = "auto",
    threads: int = 1,
    max_size: Optional[int] = None,
) -> Poset:
    s_set = _check_subset(g, s)
    cells = restricted_cells(g, h, s_set, method, threads, max_size)
    return _poset_of(cells, f"Hom_{s_set}({g.label()},{h.label()})")


# ======================
# Maps
# ======================

def induced_map(f: GraphHom, g: GraphHom, source: Poset, target: Poset) -> PosetMap:
    """Hom(f, g): φ ↦ (v ↦ g[φ(f(v))]) from Hom(G,H) to Hom(G',H') for f: G' -> G, g: H -> H'."""
    verts = f.source.vertices

    def push(phi: MultiHom) -> MultiHom:
        if not isinstance(phi, MultiHom) or phi.vertices != f.target.vertices:
            raise HomComplexError(f"source poset is not Hom({f.target.label()},{g.source.label()})")
        return MultiHom(verts, tuple(g.image(phi[f(v)]) for v in verts))

    return PosetMap.from_payload_fn(source, target, push)


def _shape(g: Graph) -> Tuple[Tuple[int, ...], frozenset]:
    return g.vertices, g.edges


def flip_hosts() -> Tuple[Tuple[Tuple[int, ...], frozenset], ...]:
    """C_5 and C_5 \\ {2,4}, as (vertices, edges)."""
    c5 = build_named("cycle", 5)
    return _shape(c5), _shape(delete_vertices(c5, (2, 4)))


def flip_cell(phi: MultiHom) -> MultiHom:
    return MultiHom(phi.vertices, tuple(phi[6 - v] for v in phi.vertices))


def c5_flip_involution(p: Poset, g: Graph) -> PosetMap:
    """φ ↦ φ ∘ (j ↦ 6-j) on a poset of cells over G = C_5 or G = C_5 \\ {2,4}."""
    if _shape(g) not in flip_hosts():
        raise HomComplexError(f"flip needs G = C_5 or C_5\\{{2,4}}, got {g.label()}")
    for phi in p.payloads:
        if not isinstance(phi, MultiHom) or phi.vertices != g.vertices:
            raise HomComplexError(f"cell {phi!r} is not a cell over {g.label()}")
    return PosetMap.from_payload_fn(p, p, flip_cell)


def color_slices(phi: MultiHom, h: Graph) -> Tuple[VertexSet, ...]:
    """For each colour c of H (in label order): {u : c ∈ φ(u)}."""
    return tuple(
        VertexSet.of(u for u, cs in zip(phi.vertices, phi.colours) if c in cs) for c in h.vertices
    )


# ======================
# Families A_v, B_v, C_M
# ======================

@dataclass(frozen=True)
class Families:
    a: Dict[int, Poset]
    b: Dict[int, Poset]
    c: Dict[VertexSet, Poset]
    ind_g: Poset
    ind_sub: Poset


def families_A_B_C(g: Graph, s: Labels) -> Families:
    s = _check_subset(g, s)
    if not g.is_independent(s):
        raise HomComplexError(f"S = {s} is not independent in {g.label()}")
    ind_g = independent_sets(g)
    sub = delete_vertices(g, s)
    ind_sub = independent_sets(sub)
    a = {v: ind_g.subposet(lambda i, v=v: v in i, name=f"A_{v}") for v in g.vertices}
    b = {}
    for v in g.vertices:
        if v in s:
            single = VertexSet.of([v])
            b[v] = ind_sub.subposet(lambda i, m=single: g.is_independent(i | m), name=f"B_{v}")
        else:
            b[v] = ind_sub.subposet(lambda i, v=v: v in i, name=f"B_{v}")
    c = {}
    for m in ind_g.payloads:
        if m:
            rest = m - s
            c[m] = ind_sub.subposet(
                lambda i, m=m, rest=rest: rest.issubset(i) and g.is_independent(i | m), name=f"C_{m}"
            )
    return Families(a, b, c, ind_g, ind_sub)


# ======================
# Cellular chains
# ======================

def cellular_chain_complex(cells: Sequence[MultiHom]) -> ChainComplex:
    """
    Cellular chains of a closed family of product-of-simplex cells.

    The face dropping the j-th colour (ascending) of vertex v_l has sign
    (-1)^(dim φ(v_1) + ... + dim φ(v_{l-1}) + j).
    """
    if not cells:
        return ChainComplex([])
    top = max(c.dim for c in cells)
    by_dim: List[List[MultiHom]] = [[] for _ in range(top + 1)]
    for c in cells:
        by_dim[c.dim].append(c)
    for lvl in by_dim:
        lvl.sort(key=MultiHom.key)
    index = [{c.key(): i for i, c in enumerate(lvl)} for lvl in by_dim]
    bds: Dict[int, SparseMatrix] = {}
    for d in range(1, top + 1):
        cols = []
        for c in by_dim[d]:
            col: Dict[int, int] = {}
            key = list(c.key())
            offset = 0
            for l, colours in enumerate(c.colours):
                if len(colours) > 1:
                    for j, colour in enumerate(colours):
                        face = key.copy()
                        face[l] &= ~(1 << colour)
                        row = index[d - 1].get(tuple(face))
                        if row is None:
                            raise HomComplexError(f"cell family is not closed under faces at {c.key()}")
                        col[row] = (-1) ** (offset + j)
                offset += len(colours) - 1
            cols.append(col)
        bds[d] = SparseMatrix(len(by_dim[d - 1]), len(by_dim[d]), cols)
    return ChainComplex([len(lvl) for lvl in by_dim], bds, by_dim)
