# hommodels/verify.py
# -----------------------------------------------------------------------------
# Verification scenarios. Every scenario returns a VerificationReport whose
# checks are pass / fail / skipped; a budget overrun is always `skipped`.
# -----------------------------------------------------------------------------
from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache, wraps
from itertools import combinations, product
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from . import config
from .complex import (
    f_vector,
    face_poset,
    induced_subcomplex,
    simplex,
    simplicial_neighborhood,
    sphere_verdict,
)
from .config import DEFAULT_BUDGETS, Budgets
from .errors import BudgetExceeded, DomainError, HomComplexError, PosetError
from .formats import format_payload, parse_poset_literal
from .graph import Graph, build_named, chromatic_number, delete_vertices, independence_complex, neighborhood_complex
from .homcomplex import (
    c5_flip_involution,
    cellular_chain_complex,
    color_slices,
    families_A_B_C,
    hom_poset,
    multihoms,
    restricted_cells,
    restricted_hom_poset,
)
from .homology import boundary_matrices, homology_from_chain_complex, homology_summary
from .logs import progress
from .models import FAIL, MultiHom, TripleElement, VerificationReport, VertexSet
from .neighborhoods import build_NB, verify_neighborhood_pair
from .poset import (
    Poset,
    PosetMap,
    chain32_poset,
    find_isomorphism,
    int_int_to_chains,
    interval_poset,
    iterated_interval_poset,
    opposite,
    order_complex,
)

LOGGER = logging.getLogger(__name__)

STIEFEL_S = (2, 4)


def _timed(fn: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
    @wraps(fn)
    def wrapper(*args, **kwargs) -> VerificationReport:
        started = time.perf_counter()
        report = fn(*args, **kwargs)
        report.wall_time = time.perf_counter() - started
        LOGGER.info("%s %s: %s (%.2fs)", report.scenario, report.params, report.status, report.wall_time)
        return report

    return wrapper


def _check_n(n: int, limit: int, low: int = 0) -> None:
    if n < low or n > limit:
        raise DomainError(f"n must lie in {low}..{limit}, got {n}")


# ======================
# Stiefel model pieces
# ======================

@lru_cache(maxsize=1)
def _stiefel_table() -> Dict[str, Any]:
    with open(config.STIEFEL_TABLE, "r", encoding="utf-8") as f:
        return json.load(f)


def expected_stiefel(n: int) -> Dict[str, Any]:
    """Expected homology of V_2(R^{n+1}): {'groups': [...], 'mod2': [...], 'provenance': ...}."""
    entries = _stiefel_table()["entries"]
    if str(n) not in entries:
        raise DomainError(f"no expected homology recorded for n={n}")
    return entries[str(n)]


def universe(n: int) -> VertexSet:
    return VertexSet.of(range(1, n + 3))


def stiefel_faces(n: int) -> Poset:
    """Face poset of ∂Δ^{n+1} on {1..n+2}, payloads as vertex sets."""
    return parse_poset_literal(f"boundary:{n + 1}")


def stiefel_target(n: int) -> Poset:
    """{(p^op, q, r^op) : q ⊆ r, p ⊄ q, p ∩ r ≠ ∅} over proper nonempty subsets of {1..n+2}."""
    u = universe(n)
    faces = [VertexSet(m) for m in range(1, u.mask + 1) if m & ~u.mask == 0 and m != u.mask]
    triples = [
        TripleElement(p, q, r)
        for p, q, r in product(faces, repeat=3)
        if q.issubset(r) and not p.issubset(q) and not p.isdisjoint(r)
    ]
    triples.sort(key=lambda t: (t.p.mask, t.q.mask, t.r.mask))
    masks = [(u.mask & ~t.p.mask, t.q.mask, u.mask & ~t.r.mask) for t in triples]
    return Poset.from_masks(triples, masks, name=f"Stiefel triples n={n}")


def stiefel_map(n: int) -> Callable[[MultiHom], TripleElement]:
    """φ ↦ (∁φ(3), φ(1), ∁φ(5))."""
    u = universe(n)

    def fn(phi: MultiHom) -> TripleElement:
        return TripleElement(u - phi[3], phi[1], u - phi[5])

    return fn


def triple_involution(n: int) -> Callable[[TripleElement], TripleElement]:
    """(p, q, r) ↦ (p, a(r), a(q)) with a the complement in {1..n+2}."""
    u = universe(n)
    return lambda t: TripleElement(t.p, u - t.r, u - t.q)


def _small_model(n: int, budgets: Budgets, cycle: int = 5) -> Poset:
    g = build_named("cycle", cycle)
    h = build_named("complete", n + 2)
    return restricted_hom_poset(g, h, STIEFEL_S, threads=budgets.threads, max_size=budgets.max_poset_size)


# ======================
# Scenarios
# ======================

@_timed
def verify_stiefel_iso(n: int, budgets: Budgets = DEFAULT_BUDGETS, cycle: int = 5) -> VerificationReport:
    _check_n(n, budgets.max_n)
    params: Dict[str, Any] = {"n": n}
    if cycle != 5:
        params["cycle"] = cycle
    report = VerificationReport("stiefel", params)
    small = _small_model(n, budgets, cycle)
    target = stiefel_target(n)
    _, b = build_NB(stiefel_faces(n))
    report.counts.update({"small": len(small), "target": len(target)})
    report.check("target equals B", target.same_as(b), f"|B| = {len(b)}")
    report.check("counts agree", len(small) == len(target), f"{len(small)} vs {len(target)}")
    try:
        f = PosetMap.from_payload_fn(small, target, stiefel_map(n))
    except (PosetError, KeyError) as exc:
        report.check("map well defined and monotone", False, witness=str(exc))
        return report
    report.check("map well defined and monotone", True)
    report.check("map bijective", f.is_bijective())
    report.check("inverse monotone", f.reflects_order())
    return report


@_timed
def verify_stiefel_negative_control(budgets: Budgets = DEFAULT_BUDGETS, n: int = 1) -> VerificationReport:
    """The same map on the C_7 model must be rejected."""
    report = VerificationReport("negative-control", {"n": n, "cycle": 7})
    inner = verify_stiefel_iso(n, budgets, cycle=7)
    failed = [c.name for c in inner.checks if c.status == FAIL]
    report.check("C_7 model rejected", inner.failed, ", ".join(failed))
    return report


@_timed
def verify_neighborhood_negative_control(budgets: Budgets = DEFAULT_BUDGETS) -> VerificationReport:
    """Δ¹ is a ball, so its N/B pair must not pass as a neighbourhood of the diagonal."""
    report = VerificationReport("neighborhood-negative-control", {"P": "simplex:1"})
    inner = verify_neighborhood_pair(parse_poset_literal("simplex:1"), budgets, True, "simplex:1")
    failed = [c.name for c in inner.checks if c.status == FAIL]
    report.check("Δ¹ pair rejected", inner.failed, ", ".join(failed))
    return report


def _small_homology(
    cells: List[MultiHom],
    budgets: Budgets,
    integral: bool,
) -> Tuple[Any, str, int]:
    """(summary, method, euler from cells) via the order complex, else cellular chains."""
    mod2_only = not integral
    if len(cells) <= budgets.max_poset_size:
        try:
            p = Poset.from_masks(cells, [c.key() for c in cells])
            k = order_complex(p, max_faces=budgets.max_order_faces)
            h = homology_summary(k, budgets.threads, budgets.max_matrix_columns, mod2_only)
            return h, "order complex", f_vector(k).euler if not k.is_empty else 0
        except BudgetExceeded as exc:
            LOGGER.info("order complex over budget (%s); using cellular chains", exc)
    cc = cellular_chain_complex(cells)
    h = homology_from_chain_complex(cc, budgets.threads, budgets.max_matrix_columns, mod2_only)
    return h, "cellular", cc.euler()


@_timed
def verify_small_model_homology(
    n: int, mod2_only: bool = False, budgets: Budgets = DEFAULT_BUDGETS
) -> VerificationReport:
    _check_n(n, max(budgets.max_n, budgets.stretch_n))
    integral = not mod2_only and n <= budgets.max_n
    report = VerificationReport("small-homology", {"n": n, "mod2_only": not integral})
    expected = expected_stiefel(n)
    try:
        cells = restricted_cells(
            build_named("cycle", 5), build_named("complete", n + 2), STIEFEL_S,
            threads=budgets.threads, max_cells=max(budgets.max_poset_size, budgets.max_matrix_columns),
        )
        report.counts["cells"] = len(cells)
        h, method, euler = _small_homology(cells, budgets, integral)
    except BudgetExceeded as exc:
        report.skip("small model homology", str(exc))
        return report
    report.homology["small"] = h
    if integral:
        report.check(f"integral homology ({method})", h.groups() == expected["groups"],
                     f"{h.describe()} vs ({', '.join(expected['groups'])})")
    report.check(f"mod 2 Betti numbers ({method})", list(h.mod2()) == expected["mod2"],
                 f"{list(h.mod2())} vs {expected['mod2']}")
    b2_euler = sum((-1) ** d * b for d, b in enumerate(h.betti_mod2))
    report.check("euler characteristic", euler == b2_euler, f"cells {euler}, Betti {b2_euler}")
    return report


@_timed
def verify_full_vs_small_homology(n: int, budgets: Budgets = DEFAULT_BUDGETS) -> VerificationReport:
    _check_n(n, 2)
    report = VerificationReport("full-vs-small", {"n": n})
    g, h = build_named("cycle", 5), build_named("complete", n + 2)
    try:
        full = hom_poset(g, h, budgets.threads, budgets.max_poset_size)
        small = restricted_hom_poset(g, h, STIEFEL_S, threads=budgets.threads, max_size=budgets.max_poset_size)
        k_full = order_complex(full, budgets.max_order_faces)
        k_small = order_complex(small, budgets.max_order_faces)
    except BudgetExceeded as exc:
        report.skip("order complexes", str(exc))
        return report
    report.counts.update({
        "full": len(full),
        "full vertex cells": sum(1 for c in full.payloads if c.dim == 0),
        "small": len(small),
    })
    cc_full = boundary_matrices(k_full)
    cc_small = boundary_matrices(k_small)
    report.check("boundary squared zero", cc_full.boundary_squared_zero() and cc_small.boundary_squared_zero())
    try:
        hf = homology_from_chain_complex(cc_full, budgets.threads, budgets.max_matrix_columns)
        hs = homology_from_chain_complex(cc_small, budgets.threads, budgets.max_matrix_columns)
    except BudgetExceeded as exc:
        report.skip("homology", str(exc))
        return report
    report.homology.update({"full": hf, "small": hs})
    report.check("full and small homology agree", hf.same_as(hs), f"{hf.describe()} vs {hs.describe()}")
    cellular = homology_from_chain_complex(cellular_chain_complex(list(full.payloads)), budgets.threads)
    report.check("cellular chains agree", cellular.same_as(hf), cellular.describe())
    return report


@_timed
def verify_involution_equivariance(n: int, budgets: Budgets = DEFAULT_BUDGETS) -> VerificationReport:
    _check_n(n, budgets.max_n)
    report = VerificationReport("involution", {"n": n})
    small = _small_model(n, budgets)
    target = stiefel_target(n)
    report.counts.update({"small": len(small), "target": len(target)})
    try:
        f = PosetMap.from_payload_fn(small, target, stiefel_map(n))
        flip = c5_flip_involution(small, delete_vertices(build_named("cycle", 5), STIEFEL_S))
        tau = PosetMap.from_payload_fn(target, target, triple_involution(n))
    except (PosetError, HomComplexError) as exc:
        report.check("maps well defined", False, witness=str(exc))
        return report
    report.check("flip is an involution", flip.is_involution())
    report.check("triple involution is an order automorphism", tau.is_isomorphism() and tau.is_involution())
    report.check("flip is free on cells", all(flip(i) != i for i in range(len(small))))
    left = flip.then(f)
    right = f.then(tau)
    bad = [i for i in range(len(small)) if left(i) != right(i)]
    witness = format_payload(small.payload(bad[0])) if bad else None
    report.check("map intertwines the involutions", not bad, f"{len(small)} cells", witness)
    return report


def _same_graph(g: Graph, other: Graph) -> bool:
    return g.vertices == other.vertices and g.edges == other.edges


def known_hom_homology(g: Graph, n: int) -> Optional[List[str]]:
    """Homology groups of Hom(G,K_n) when the space is known: C_5 (Stiefel table) and K_2 (S^{n-2})."""
    if n < 2:
        return None
    if _same_graph(g, build_named("complete", 2)):
        return ["Z^2"] if n == 2 else ["Z"] + ["0"] * (n - 3) + ["Z"]
    if _same_graph(g, build_named("cycle", 5)):
        try:
            return list(expected_stiefel(n - 2)["groups"])
        except DomainError:
            return None
    return None


def _link_verdicts(p: Poset, threads: int, max_faces: int) -> List[Tuple[int, Any, Any]]:
    """Per cell: (dim, verdict of Δ(P_{>x}), verdict of Δ(P_{<x}))."""

    def one(i: int):
        up = order_complex(p.subposet(p.up(i).tolist()), max_faces)
        down = order_complex(p.subposet(p.down(i).tolist()), max_faces)
        return p.payload(i).dim, sphere_verdict(up), sphere_verdict(down)

    ids = list(range(len(p)))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(progress(pool.map(one, ids), desc="cell links", total=len(ids)))
    return [one(i) for i in progress(ids, desc="cell links", total=len(ids))]


@_timed
def verify_manifold_criterion(g: Graph, n: Optional[int] = None, budgets: Budgets = DEFAULT_BUDGETS) -> VerificationReport:
    n = chromatic_number(g) + 1 if n is None else n
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    report = VerificationReport("manifold", {"G": g.label(), "n": n})
    ind = independence_complex(g)
    verdict = sphere_verdict(ind)
    report.check("Ind(G) is a sphere", verdict.is_sphere, str(verdict))
    want = n * (ind.dim + 1) - len(g)
    try:
        p = hom_poset(g, build_named("complete", n), budgets.threads, budgets.max_poset_size)
    except BudgetExceeded as exc:
        report.skip("Hom(G,K_n)", str(exc))
        return report
    top = max((c.dim for c in p.payloads), default=-1)
    report.counts.update({"cells": len(p), "vertex cells": sum(1 for c in p.payloads if c.dim == 0), "dim": top})
    report.check("dimension formula", top == want, f"dim {top}, formula {want}")
    try:
        links = _link_verdicts(p, budgets.threads, budgets.max_order_faces)
    except BudgetExceeded as exc:
        report.skip("cell links", str(exc))
        links = None
    if links is not None:
        bad_up = [(i, v) for i, (d, v, _) in enumerate(links) if not (v.is_sphere and v.dim == top - d - 1)]
        bad_down = [(i, v) for i, (d, _, v) in enumerate(links) if not (v.is_sphere and v.dim == d - 1)]
        report.check(
            "links are spheres", not bad_up, f"{len(links)} cells",
            f"{format_payload(p.payload(bad_up[0][0]))}: {bad_up[0][1]}" if bad_up else None,
        )
        report.check(
            "cell boundaries are spheres", not bad_down, "",
            f"{format_payload(p.payload(bad_down[0][0]))}: {bad_down[0][1]}" if bad_down else None,
        )
    try:
        h = homology_summary(order_complex(p, budgets.max_order_faces), budgets.threads, budgets.max_matrix_columns)
    except BudgetExceeded as exc:
        report.skip("homology of Hom(G,K_n)", str(exc))
        return report
    report.homology["Hom"] = h
    known = known_hom_homology(g, n)
    if known is not None:
        report.check("homology of the known space", h.groups() == known, f"expected ({', '.join(known)}), got {h.describe()}")
    return report


@_timed
def verify_dual_decomposition(g: Graph, s: Sequence[int], budgets: Budgets = DEFAULT_BUDGETS) -> VerificationReport:
    s_set = VertexSet.of(s)
    report = VerificationReport("dual", {"G": g.label(), "S": str(s_set)})
    ind = independence_complex(g)
    if not sphere_verdict(ind).is_sphere:
        raise DomainError(f"Ind({g.label()}) is not a sphere")
    fam = families_A_B_C(g, s_set)
    sets = {m: set(c.payloads) for m, c in fam.c.items()}
    bad = None
    for m, other in combinations(sorted(sets, key=lambda x: (len(x), x.mask)), 2):
        meet = sets[m] & sets[other]
        union = m | other
        expect = sets[union] if union in sets else set()
        if meet != expect:
            bad = f"C_{m} and C_{other}"
            break
    report.check("intersection law", bad is None, f"{len(sets)} sets", bad)
    report.check("B_v = C_{v}", all(set(fam.b[v].payloads) == sets[VertexSet.of([v])] for v in g.vertices))

    nonempty = [m for m in sets if sets[m]]
    report.counts.update({"C_M": len(sets), "nonempty C_M": len(nonempty), "faces": len(ind)})
    faces = face_poset(ind)
    try:
        index = Poset.from_order(nonempty, lambda x, y: sets[x] <= sets[y], name="C_M")
    except PosetError as exc:
        report.check("C_M ordered by inclusion", False, witness=str(exc))
        return report
    flipped = opposite(index)
    report.check("C_M anti-isomorphic to F(Ind G)", find_isomorphism(flipped, faces) is not None)
    try:
        explicit = PosetMap.from_payload_fn(flipped, faces, lambda m: m.inner.labels())
        report.check("C_M -> M is an anti-isomorphism", explicit.is_isomorphism())
    except PosetError as exc:
        report.check("C_M -> M is an anti-isomorphism", False, witness=str(exc))

    covered = set()
    for v in g.vertices:
        covered |= set(fam.b[v].payloads)
    all_c = set().union(*sets.values()) if sets else set()
    inside = all(any(sets[m] <= set(fam.b[v].payloads) for v in m) for m in sets)
    report.check("B_v cover the C_M", covered == all_c and inside)
    return report


@_timed
def verify_subdivision_suite(p: Poset, budgets: Budgets = DEFAULT_BUDGETS, name: str = "") -> VerificationReport:
    report = VerificationReport("subdivision", {"P": name or p.label()})
    try:
        ip = interval_poset(p, budgets.max_poset_size)
        iip = interval_poset(ip, budgets.max_poset_size)
        chains4 = iterated_interval_poset(p, budgets.max_poset_size)
        c32 = chain32_poset(p, budgets.max_poset_size)
        k_p = order_complex(p, budgets.max_order_faces)
        k_ip = order_complex(ip, budgets.max_order_faces)
        k_32 = order_complex(c32, budgets.max_order_faces)
    except BudgetExceeded as exc:
        report.skip("subdivision posets", str(exc))
        return report
    report.counts.update({"P": len(p), "Int P": len(ip), "Int Int P": len(iip), "4-chains": len(chains4), "3-chains": len(c32)})
    h_p = homology_summary(k_p, budgets.threads)
    h_ip = homology_summary(k_ip, budgets.threads)
    h_32 = homology_summary(k_32, budgets.threads)
    report.homology.update({"P": h_p, "Int P": h_ip, "3-chains": h_32})
    report.check("Int P homology", h_ip.same_as(h_p), f"{h_ip.describe()} vs {h_p.describe()}")
    report.check("Int P euler", f_vector(k_ip).euler == f_vector(k_p).euler)
    pairs = int(p.leq_matrix.sum())
    report.check("Int P vertices are the pairs p <= q", len(k_ip.vertices) == pairs, f"{pairs} pairs")
    try:
        explicit = PosetMap.from_payload_fn(iip, chains4, int_int_to_chains)
        explicit_ok = explicit.is_isomorphism()
    except PosetError:
        explicit_ok = False
    report.check("Int Int P = 4-chains (explicit)", explicit_ok)
    report.check("Int Int P = 4-chains (search)", find_isomorphism(iip, chains4) is not None)
    report.check("3-chain homology", h_32.same_as(h_p), h_32.describe())
    return report


@_timed
def verify_restriction_example(n: int, budgets: Budgets = DEFAULT_BUDGETS) -> VerificationReport:
    _check_n(n, max(budgets.max_n, budgets.stretch_n))
    report = VerificationReport("restriction", {"n": n})
    small = restricted_hom_poset(build_named("complete", 2), build_named("complete", n + 2), [1])
    faces = stiefel_faces(n)
    report.counts.update({"small": len(small), "faces": len(faces)})
    try:
        f = PosetMap.from_payload_fn(small, faces, lambda phi: phi[2])
        report.check("φ ↦ φ(2) is an isomorphism", f.is_isomorphism())
    except PosetError as exc:
        report.check("φ ↦ φ(2) is an isomorphism", False, witness=str(exc))
    report.check("isomorphism search", find_isomorphism(small, faces) is not None)
    return report


@_timed
def verify_box_vs_neighborhood(h: Graph, budgets: Budgets = DEFAULT_BUDGETS) -> VerificationReport:
    report = VerificationReport("box", {"H": h.label()})
    k2 = build_named("complete", 2)
    cells = restricted_cells(k2, h, [1], method="image")
    crit = restricted_cells(k2, h, [1], method="criterion")
    nbhd = neighborhood_complex(h)
    faces = {tuple(c[2]) for c in cells}
    report.counts.update({"cells": len(cells), "faces": len(nbhd)})
    report.check("criterion agrees with image", crit == cells)
    report.check("Hom_{1}(K_2,H) = N(H)", faces == set(nbhd.all_faces()))
    try:
        hom = homology_summary(order_complex(hom_poset(k2, h), budgets.max_order_faces), budgets.threads)
    except BudgetExceeded as exc:
        report.skip("homology of Hom(K_2,H)", str(exc))
        return report
    hn = homology_summary(nbhd, budgets.threads)
    report.homology.update({"Hom": hom, "N": hn})
    report.check("Hom(K_2,H) and N(H) homology agree", hom.same_as(hn), f"{hom.describe()} vs {hn.describe()}")
    return report


@_timed
def verify_independence_ball(g: Graph, s: Sequence[int], budgets: Budgets = DEFAULT_BUDGETS) -> VerificationReport:
    s_set = VertexSet.of(s)
    report = VerificationReport("independence-ball", {"G": g.label(), "S": str(s_set)})
    if not s_set or not g.is_independent(s_set):
        raise DomainError(f"S = {s_set} must be a nonempty independent set")
    ind = independence_complex(g)
    rest = independence_complex(delete_vertices(g, s_set))
    report.check("Ind(G\\S) = faces missing S", rest == induced_subcomplex(ind, [v for v in g.vertices if v not in s_set]))
    nb = simplicial_neighborhood(ind, simplex(len(s_set) - 1, tuple(s_set)))
    faces_n, faces_rest = set(nb.closed.all_faces()), set(rest.all_faces())
    report.check("neighbourhood and Ind(G\\S) cover Ind(G)", faces_n | faces_rest == set(ind.all_faces()))
    report.check("they meet in the boundary", faces_n & faces_rest == set(nb.boundary.all_faces()))
    sphere = sphere_verdict(ind)
    ball = sphere_verdict(rest)
    report.counts.update({"faces": len(ind), "faces(G\\S)": len(rest)})
    if sphere.is_sphere:
        report.check("Ind(G\\S) is a ball", ball.is_ball and ball.dim == sphere.dim, str(ball))
    else:
        report.skip("Ind(G\\S) is a ball", f"Ind(G) is {sphere}")
    return report


@_timed
def verify_slice_cover(g: Graph, s: Sequence[int], budgets: Budgets = DEFAULT_BUDGETS) -> VerificationReport:
    s_set = VertexSet.of(s)
    report = VerificationReport("slice-cover", {"G": g.label(), "S": str(s_set)})
    fam = families_A_B_C(g, s_set)
    bad_nerve, bad_point = None, None
    checked = 0
    for k in range(1, len(g) + 1):
        for w in combinations(g.vertices, k):
            a = set.intersection(*(set(fam.a[v].payloads) for v in w))
            b = set.intersection(*(set(fam.b[v].payloads) for v in w))
            checked += 1
            if bool(a) != bool(b):
                bad_nerve = bad_nerve or str(w)
            for part, src in ((a, fam.ind_g), (b, fam.ind_sub)):
                if part:
                    h = homology_summary(order_complex(src.subposet(lambda x: x in part)), budgets.threads)
                    if any(h.reduced_betti()) or any(h.torsion):
                        bad_point = bad_point or str(w)
    report.counts["subsets"] = checked
    report.check("A and B covers have the same nerve", bad_nerve is None, witness=bad_nerve)
    report.check("nonempty intersections are acyclic", bad_point is None, witness=bad_point)
    return report


@_timed
def verify_slice_embedding(g: Graph, n: int, budgets: Budgets = DEFAULT_BUDGETS, s: Sequence[int] = ()) -> VerificationReport:
    """γ: φ ↦ (colour classes) embeds Hom(G,K_n) (or Hom_S) into a power of ind(G) (or ind(G\\S))."""
    h = build_named("complete", n)
    s_set = VertexSet.of(s)
    report = VerificationReport("slice-embedding", {"G": g.label(), "n": n, "S": str(s_set)})
    fam = families_A_B_C(g, s_set)
    if s_set:
        cells = restricted_cells(g, h, s_set, threads=budgets.threads)
        base, cover = fam.ind_sub, fam.b
    else:
        cells = multihoms(g, h, budgets.threads)
        base, cover = fam.ind_g, fam.a
    gammas = [color_slices(c, h) for c in cells]
    report.counts.update({"cells": len(cells), "base": len(base)})
    report.check("slices lie in the base", all(x in base for t in gammas for x in t))
    if not report.check("γ injective", len(set(gammas)) == len(gammas)):
        return report
    domain = Poset.from_masks(cells, [c.key() for c in cells])
    image = Poset.from_masks(gammas, [tuple(x.mask for x in t) for t in gammas])
    report.check("γ is an order embedding", PosetMap(domain, image, tuple(range(len(cells)))).is_isomorphism())
    if len(base) ** n > budgets.max_poset_size * 100:
        report.skip("image is the covering tuples", f"{len(base)}^{n} tuples")
        return report
    members = {v: set(cover[v].payloads) for v in g.vertices}
    covering = {
        t for t in product(base.payloads, repeat=n)
        if all(any(x in members[v] for x in t) for v in g.vertices)
    }
    report.check("image is the covering tuples", covering == set(gammas), f"{len(covering)} tuples")
    return report


# ======================
# Suite
# ======================

SCENARIOS = (
    "stiefel", "small-homology", "full-vs-small", "involution", "manifold", "dual",
    "subdivision", "restriction", "neighborhood", "box", "independence-ball",
    "slice-cover", "slice-embedding", "negative-control", "neighborhood-negative-control",
)


def run_scenario(name: str, params: Dict[str, Any], budgets: Budgets = DEFAULT_BUDGETS) -> VerificationReport:
    """Dispatch by scenario name; params carry n / graph / S / poset literals."""
    n = params.get("n")
    g = params.get("graph") or build_named("cycle", 5)
    s = params.get("S", STIEFEL_S)
    need_n = name in ("stiefel", "small-homology", "full-vs-small", "involution", "restriction", "slice-embedding")
    if need_n and n is None:
        raise DomainError(f"scenario {name!r} needs --n")
    if name == "stiefel":
        return verify_stiefel_iso(n, budgets)
    if name == "small-homology":
        return verify_small_model_homology(n, bool(params.get("mod2_only")), budgets)
    if name == "full-vs-small":
        return verify_full_vs_small_homology(n, budgets)
    if name == "involution":
        return verify_involution_equivariance(n, budgets)
    if name == "restriction":
        return verify_restriction_example(n, budgets)
    if name == "manifold":
        return verify_manifold_criterion(g, n, budgets)
    if name == "dual":
        return verify_dual_decomposition(g, s, budgets)
    if name == "independence-ball":
        return verify_independence_ball(g, s, budgets)
    if name == "slice-cover":
        return verify_slice_cover(g, s, budgets)
    if name == "slice-embedding":
        return verify_slice_embedding(g, n, budgets, params.get("S", ()))
    if name == "box":
        return verify_box_vs_neighborhood(params.get("graph") or build_named("complete", 3), budgets)
    if name == "subdivision":
        literal = params.get("poset", "boundary:2")
        return verify_subdivision_suite(parse_poset_literal(literal), budgets, literal)
    if name == "neighborhood":
        literal = params.get("poset", "boundary:2")
        return verify_neighborhood_pair(parse_poset_literal(literal), budgets, params.get("links", True), literal)
    if name == "negative-control":
        return verify_stiefel_negative_control(budgets)
    if name == "neighborhood-negative-control":
        return verify_neighborhood_negative_control(budgets)
    raise DomainError(f"unknown scenario {name!r} (expected one of {', '.join(SCENARIOS)})")


def acceptance_battery(budgets: Budgets = DEFAULT_BUDGETS) -> List[Tuple[str, Dict[str, Any]]]:
    c5, k2 = build_named("cycle", 5), build_named("complete", 2)
    top = budgets.max_n
    jobs: List[Tuple[str, Dict[str, Any]]] = []
    jobs += [("manifold", {"graph": c5, "n": 3}), ("manifold", {"graph": c5, "n": 4}), ("manifold", {"graph": k2, "n": 4})]
    jobs += [("full-vs-small", {"n": n}) for n in range(3)]
    jobs += [("stiefel", {"n": n}) for n in range(top + 1)]
    jobs += [("small-homology", {"n": n, "mod2_only": n >= 3}) for n in range(1, top + 1)]
    if budgets.stretch_n > top:
        jobs += [("small-homology", {"n": n, "mod2_only": True}) for n in range(top + 1, budgets.stretch_n + 1)]
    jobs += [("restriction", {"n": n}) for n in range(budgets.stretch_n + 1)]
    jobs += [("involution", {"n": n}) for n in range(top + 1)]
    jobs += [("neighborhood", {"poset": "boundary:2"}), ("neighborhood", {"poset": "boundary:3", "links": False})]
    jobs += [("dual", {"graph": c5, "S": (2, 4)}), ("dual", {"graph": k2, "S": (1,)}), ("dual", {"graph": c5, "S": (2,)})]
    jobs += [("subdivision", {"poset": lit}) for lit in ("chain:3", "boundary:2", "boundary:3")]
    jobs += [("box", {"graph": build_named("complete", 3)}), ("independence-ball", {"graph": c5, "S": (2, 4)})]
    jobs += [("slice-cover", {"graph": c5, "S": (2, 4)}), ("slice-embedding", {"graph": c5, "n": 3})]
    jobs += [("slice-embedding", {"graph": c5, "n": 3, "S": (2, 4)}), ("negative-control", {})]
    jobs += [("neighborhood-negative-control", {})]
    return jobs


def run_suite(
    jobs: Sequence[Tuple[str, Dict[str, Any]]],
    budgets: Budgets = DEFAULT_BUDGETS,
) -> List[VerificationReport]:
    return [run_scenario(name, params, budgets) for name, params in progress(jobs, desc="scenarios", total=len(jobs))]
