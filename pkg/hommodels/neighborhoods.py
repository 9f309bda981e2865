# hommodels/neighborhoods.py
# -----------------------------------------------------------------------------
# Triples (p^op, q, r^op) over a face poset P, i.e. elements of P^op × Int P,
# and the subposets
#   N = {q ⊆ r, p ∩ r ≠ ∅}   B = N ∩ {p ⊄ q}   D = {p ⊆ q}
# together with the check that (ΔN, ΔB) is a manifold with boundary and the
# simplicial neighbourhood of ΔD.
# -----------------------------------------------------------------------------
from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Tuple

import numpy as np

from .complex import (
    SimplicialComplex,
    boundary_complex,
    first_difference,
    is_full_subcomplex,
    simplicial_neighborhood,
    sphere_verdict,
)
from .config import DEFAULT_BUDGETS, Budgets
from .errors import BudgetExceeded, DomainError
from .homology import homology_summary
from .logs import progress
from .models import SphereVerdict, TripleElement, VerificationReport, VertexSet
from .poset import Poset, order_complex

LOGGER = logging.getLogger(__name__)

Predicate = Callable[[VertexSet, VertexSet, VertexSet], bool]


def _as_face(x: Any) -> VertexSet:
    if isinstance(x, VertexSet):
        return x
    if isinstance(x, (tuple, list, set, frozenset)) and all(isinstance(v, (int, np.integer)) for v in x):
        return VertexSet.of(x)
    raise DomainError(f"face poset payload {x!r} is not a vertex set")


def faces_of(p: Poset) -> List[VertexSet]:
    """Payloads of a face poset as vertex sets; the order must be inclusion."""
    faces = [_as_face(x) for x in p.payloads]
    masks = np.array([f.mask for f in faces], dtype=np.uint64)
    incl = (masks[:, None] & ~masks[None, :]) == 0
    if not np.array_equal(incl, p.leq_matrix):
        raise DomainError(f"{p.label()} is not ordered by inclusion of its vertex sets")
    return faces


def _triple_poset(faces: List[VertexSet], keep: Predicate, name: str) -> Poset:
    """Triples with q ⊆ r satisfying keep, ordered inside P^op × Int P."""
    universe = 0
    for f in faces:
        universe |= f.mask
    triples = []
    for p in faces:
        for q in faces:
            for r in faces:
                if q.issubset(r) and keep(p, q, r):
                    triples.append(TripleElement(p, q, r))
    # op coordinates compare by complements
    masks = [(universe & ~t.p.mask, t.q.mask, universe & ~t.r.mask) for t in triples]
    return Poset.from_masks(triples, masks, name=name)


def ambient_poset(p: Poset) -> Poset:
    return _triple_poset(faces_of(p), lambda a, b, c: True, "P^op x Int P")


def _in_n(p: VertexSet, q: VertexSet, r: VertexSet) -> bool:
    return not p.isdisjoint(r)


def _in_b(p: VertexSet, q: VertexSet, r: VertexSet) -> bool:
    return not p.isdisjoint(r) and not p.issubset(q)


def _in_d(p: VertexSet, q: VertexSet, r: VertexSet) -> bool:
    return p.issubset(q)


def build_NB(p: Poset) -> Tuple[Poset, Poset]:
    faces = faces_of(p)
    return _triple_poset(faces, _in_n, "N"), _triple_poset(faces, _in_b, "B")


def build_D(p: Poset) -> Poset:
    return _triple_poset(faces_of(p), _in_d, "D")


def closed_from_above(sub: Poset, ambient: Poset) -> Optional[TripleElement]:
    """First element of ambient above an element of sub but outside it, if any."""
    inside = np.zeros(len(ambient), dtype=bool)
    idx = [ambient.index(x) for x in sub.payloads]
    inside[idx] = True
    if not idx:
        return None
    above = ambient.leq_matrix[idx].any(axis=0)
    escaped = np.flatnonzero(above & ~inside)
    return ambient.payload(int(escaped[0])) if len(escaped) else None


def order_complex_in(ambient: Poset, sub: Poset, max_faces: Optional[int] = None) -> SimplicialComplex:
    """Δ(sub) with vertices labelled by their index in ambient."""
    idx = [ambient.index(x) for x in sub.payloads]
    return order_complex(sub, max_faces=max_faces, labels=idx)


# ======================
# Links in ΔN
# ======================

@dataclass(frozen=True)
class LinkCheck:
    element: TripleElement
    boundary: bool
    verdict: SphereVerdict

    def ok(self, dim: int) -> bool:
        if self.verdict.dim != dim:
            return False
        return self.verdict.is_ball if self.boundary else self.verdict.is_sphere


def _vertex_link(n: Poset, i: int, max_faces: Optional[int]) -> SimplicialComplex:
    """Link of vertex i in ΔN: the chains of elements strictly comparable to i."""
    row = n.leq_matrix[i] | n.leq_matrix[:, i]
    row = row.copy()
    row[i] = False
    return order_complex(n.subposet(np.flatnonzero(row).tolist()), max_faces=max_faces)


def link_checks(n: Poset, b: Poset, threads: int = 1, max_faces: Optional[int] = None) -> List[LinkCheck]:
    boundary = set(b.payloads)

    def one(i: int) -> LinkCheck:
        x = n.payload(i)
        return LinkCheck(x, x in boundary, sphere_verdict(_vertex_link(n, i, max_faces)))

    ids = list(range(len(n)))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(progress(pool.map(one, ids), desc="vertex links", total=len(ids)))
    return [one(i) for i in progress(ids, desc="vertex links", total=len(ids))]


# ======================
# Verification
# ======================

def _chain_witness(ambient: Poset, x: SimplicialComplex, y: SimplicialComplex) -> Optional[str]:
    """The first face in exactly one of X, Y, as a chain of ambient elements."""
    face = first_difference(x, y)
    if face is None:
        return None
    return " < ".join(str(ambient.payload(i)) for i in face)


def _check_same(report: VerificationReport, name: str, ambient: Poset, x: SimplicialComplex, y: SimplicialComplex) -> None:
    report.check(name, x == y, f"{len(x)} vs {len(y)} faces", _chain_witness(ambient, x, y))


def verify_neighborhood_pair(
    p: Poset,
    budgets: Budgets = DEFAULT_BUDGETS,
    links: bool = True,
    name: str = "",
) -> VerificationReport:
    started = time.perf_counter()
    report = VerificationReport("neighborhood", {"P": name or p.label(), "faces": len(p)})
    faces = faces_of(p)
    dim_p = max((len(f) for f in faces), default=0) - 1
    ambient = _triple_poset(faces, lambda a, b, c: True, "P^op x Int P")
    n = ambient.subposet(lambda t: _in_n(t.p, t.q, t.r), name="N")
    b = ambient.subposet(lambda t: _in_b(t.p, t.q, t.r), name="B")
    d = ambient.subposet(lambda t: _in_d(t.p, t.q, t.r), name="D")
    report.counts.update({"ambient": len(ambient), "N": len(n), "B": len(b), "D": len(d)})

    n_set, b_set, d_set = set(n.payloads), set(b.payloads), set(d.payloads)
    report.check("B inside N", b_set <= n_set)
    report.check("D and B disjoint", not (d_set & b_set))
    report.check("B = N minus D", b_set == n_set - d_set)
    escaped = closed_from_above(d, ambient)
    report.check("D closed from above", escaped is None, witness=None if escaped is None else str(escaped))

    limit = budgets.max_order_faces
    try:
        delta_n = order_complex_in(ambient, n, limit)
        delta_b = order_complex_in(ambient, b, limit)
    except BudgetExceeded as exc:
        report.skip("order complexes of N and B", str(exc))
        report.wall_time = time.perf_counter() - started
        return report
    report.counts["faces(N)"] = len(delta_n)
    report.counts["faces(B)"] = len(delta_b)
    report.check("dim N = 2 dim P", delta_n.dim == 2 * dim_p, f"dim N = {delta_n.dim}, dim P = {dim_p}")

    try:
        delta_amb = order_complex(ambient, max_faces=limit)
        delta_d = order_complex_in(ambient, d, limit)
        nb = simplicial_neighborhood(delta_amb, delta_d)
        report.check("D full in ambient", nb.full)
        _check_same(report, "neighbourhood of D is N", ambient, nb.closed, delta_n)
        _check_same(report, "boundary of neighbourhood is B", ambient, nb.boundary, delta_b)
    except BudgetExceeded as exc:
        report.skip("simplicial neighbourhood of D", str(exc))

    _check_same(report, "boundary of N is B", ambient, boundary_complex(delta_n), delta_b)

    if links:
        try:
            results = link_checks(n, b, budgets.threads, limit)
            want = delta_n.dim - 1
            bad = [r for r in results if not r.ok(want)]
            witness = f"{bad[0].element}: {bad[0].verdict}" if bad else None
            report.check(
                "vertex links of N",
                not bad,
                f"{len(results) - len(b)} sphere links and {len(b)} ball links of dim {want}",
                witness,
            )
        except BudgetExceeded as exc:
            report.skip("vertex links of N", str(exc))

    try:
        report.homology["B"] = homology_summary(delta_b, budgets.threads, budgets.max_matrix_columns)
    except BudgetExceeded as exc:
        report.skip("homology of B", str(exc))
    report.wall_time = time.perf_counter() - started
    LOGGER.info("neighbourhood pair over %s: %s", report.params["P"], report.status)
    return report
