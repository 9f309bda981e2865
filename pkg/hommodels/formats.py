# hommodels/formats.py
# -----------------------------------------------------------------------------
# Plain-text formats: edge lists, face lists, MultiHom blocks, cover
# relations and homology tables; plus the short literals the CLI accepts
# ("cycle:5", "boundary:2", ...).
# -----------------------------------------------------------------------------
from __future__ import annotations

import re
from pathlib import Path
from typing import Any, Iterable, List, Tuple

from .complex import SimplicialComplex, boundary_of_simplex, face_poset, simplex
from .errors import DomainError, FormatError, GraphError
from .graph import KINDS, Graph, build_named
from .models import HomologySummary, MultiHom, VertexSet
from .poset import Interval, Op, Poset, antichain, chain


def _lines(text: str) -> Iterable[Tuple[int, str]]:
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _ints(line: str, no: int) -> List[int]:
    try:
        return [int(tok) for tok in line.replace(",", " ").split()]
    except ValueError:
        raise FormatError(f"expected integers, got {line!r}", no) from None


# ======================
# Edge lists
# ======================

def parse_edge_list(text: str, name: str = "") -> Graph:
    """`n <count> [base]` then one `u v` per line; base defaults to 1."""
    rows = list(_lines(text))
    if not rows:
        raise FormatError("empty edge list")
    no, head = rows[0]
    parts = head.split()
    if parts[0] != "n" or len(parts) not in (2, 3):
        raise FormatError(f"first line must be 'n <vertex_count> [base]', got {head!r}", no)
    count, base = _ints(" ".join(parts[1:]), no) + ([1] if len(parts) == 2 else [])
    if count < 0 or base not in (0, 1):
        raise FormatError("vertex count must be >= 0 and base 0 or 1", no)
    verts = range(base, base + count)
    seen = set()
    edges = []
    for no, line in rows[1:]:
        pair = _ints(line, no)
        if len(pair) != 2:
            raise FormatError(f"edge line needs two labels, got {line!r}", no)
        u, v = pair
        if u == v:
            raise FormatError(f"loop at vertex {u}", no)
        if u not in verts or v not in verts:
            raise FormatError(f"label outside {base}..{base + count - 1}", no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {u} {v}", no)
        seen.add(key)
        edges.append(key)
    try:
        return Graph(tuple(verts), frozenset(edges), name)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def format_edge_list(g: Graph) -> str:
    verts = g.vertices
    base = verts[0] if verts else 1
    if verts and (base not in (0, 1) or verts != tuple(range(base, base + len(verts)))):
        raise FormatError("edge-list format needs consecutive labels starting at 0 or 1")
    head = f"n {len(verts)}" + (" 0" if base == 0 else "")
    return "\n".join([head] + [f"{u} {v}" for u, v in sorted(g.edges)]) + "\n"


# ======================
# Face lists
# ======================

def parse_face_list(text: str) -> SimplicialComplex:
    """One face per line; missing subfaces are added, so facets alone suffice."""
    faces = []
    for no, line in _lines(text):
        face = _ints(line, no)
        if len(set(face)) != len(face):
            raise FormatError(f"repeated vertex in face {line!r}", no)
        faces.append(face)
    return SimplicialComplex.from_facets(faces)


def format_face_list(k: SimplicialComplex) -> str:
    return "".join(" ".join(str(v) for v in f) + "\n" for f in k.all_faces())


def read_face_list(path: str | Path) -> SimplicialComplex:
    return parse_face_list(Path(path).read_text(encoding="utf-8"))


def read_edge_list(path: str | Path) -> Graph:
    p = Path(path)
    return parse_edge_list(p.read_text(encoding="utf-8"), name=p.stem)


# ======================
# MultiHoms
# ======================

_MH_LINE = re.compile(r"^(-?\d+)\s*:\s*\{([^}]*)\}$")


def format_multihom(phi: MultiHom) -> str:
    return str(phi) + "\n"


def parse_multihom(text: str) -> MultiHom:
    verts, colours = [], []
    for no, line in _lines(text):
        m = _MH_LINE.match(line)
        if not m:
            raise FormatError(f"expected 'v: {{c1,c2,...}}', got {line!r}", no)
        cs = _ints(m.group(2), no)
        if not cs:
            raise FormatError("colour sets must be nonempty", no)
        verts.append(int(m.group(1)))
        colours.append(VertexSet.of(cs))
    order = sorted(range(len(verts)), key=lambda i: verts[i])
    return MultiHom(tuple(verts[i] for i in order), tuple(colours[i] for i in order))


# ======================
# Posets and homology
# ======================

def format_payload(x: Any) -> str:
    if isinstance(x, Op):
        return f"{format_payload(x.inner)}^op"
    if isinstance(x, Interval):
        return f"[{format_payload(x.low)},{format_payload(x.high)}]"
    if isinstance(x, MultiHom):
        return "(" + " ".join(f"{v}:{c}" for v, c in zip(x.vertices, x.colours)) + ")"
    if isinstance(x, tuple):
        if x and all(isinstance(v, int) for v in x):
            return "{" + ",".join(str(v) for v in x) + "}"
        return "(" + ", ".join(format_payload(v) for v in x) + ")"
    return str(x)


def format_covers(p: Poset) -> str:
    """Stable cover-relation listing, one `a < b` per line."""
    return "".join(f"{format_payload(p.payload(i))} < {format_payload(p.payload(j))}\n" for i, j in p.covers())


_H_LINE = re.compile(r"^(\d+):\s*b=(\d+)\s+torsion=\[([\d,\s]*)\]\s+b2=(\d+)$")


def format_homology(h: HomologySummary) -> str:
    return "".join(line + "\n" for line in h.lines())


def parse_homology(text: str) -> HomologySummary:
    betti, torsion, b2 = [], [], []
    for no, line in _lines(text):
        m = _H_LINE.match(line)
        if not m or int(m.group(1)) != len(betti):
            raise FormatError(f"expected 'd: b=.. torsion=[..] b2=..' for d={len(betti)}", no)
        betti.append(int(m.group(2)))
        torsion.append(tuple(int(t) for t in m.group(3).replace(",", " ").split()))
        b2.append(int(m.group(4)))
    return HomologySummary(tuple(betti), tuple(torsion), tuple(b2))


# ======================
# CLI literals
# ======================

def _split_literal(text: str) -> Tuple[str, int]:
    kind, sep, num = text.partition(":")
    if not sep:
        raise DomainError(f"expected '<kind>:<n>', got {text!r}")
    try:
        return kind.strip(), int(num)
    except ValueError:
        raise DomainError(f"expected an integer after ':', got {text!r}") from None


def parse_graph_literal(text: str) -> Graph:
    kind, n = _split_literal(text)
    if kind not in KINDS:
        raise DomainError(f"unknown graph family {kind!r} (expected one of {', '.join(KINDS)})")
    return build_named(kind, n)


POSET_KINDS = ("chain", "antichain", "boundary", "simplex")


def parse_poset_literal(text: str) -> Poset:
    """chain:k, antichain:k, or the face poset of boundary:k (∂Δ^k) / simplex:k (Δ^k) on 1..k+1."""
    kind, n = _split_literal(text)
    if n < 0:
        raise DomainError(f"{kind} needs a nonnegative size")
    if kind == "chain":
        return chain(n)
    if kind == "antichain":
        return antichain(n)
    if kind in ("boundary", "simplex"):
        verts = range(1, n + 2)
        k = boundary_of_simplex(n, verts) if kind == "boundary" else simplex(n, verts)
        name = f"F(∂Δ^{n})" if kind == "boundary" else f"F(Δ^{n})"
        return face_poset(k).relabel(VertexSet.of, name=name)
    raise DomainError(f"unknown poset {kind!r} (expected one of {', '.join(POSET_KINDS)})")
