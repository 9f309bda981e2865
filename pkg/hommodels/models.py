# hommodels/models.py
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Optional, Tuple

import pandas as pd

from .errors import GraphError

MAX_LABEL = 63

# ======================
# Vertex sets (bitmask semantics)
# ======================

@dataclass(frozen=True)
class VertexSet:
    """A set of small integer labels stored as a bitmask (bit i = label i)."""

    mask: int = 0

    @classmethod
    def of(cls, labels: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in labels:
            v = int(v)
            if v < 0 or v > MAX_LABEL:
                raise GraphError(f"vertex label {v} outside 0..{MAX_LABEL}")
            mask |= 1 << v
        return cls(mask)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, label: object) -> bool:
        return isinstance(label, int) and 0 <= label <= MAX_LABEL and bool(self.mask >> label & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask)

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self.mask & other.mask == 0

    def labels(self) -> Tuple[int, ...]:
        return tuple(self)

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self) + "}"

    __repr__ = __str__


# ======================
# Multi-homomorphisms
# ======================

@dataclass(frozen=True)
class MultiHom:
    """Cell of Hom(G,H): a nonempty colour set for every vertex of G."""

    vertices: Tuple[int, ...]
    colours: Tuple[VertexSet, ...]

    def __getitem__(self, v: int) -> VertexSet:
        try:
            return self.colours[self.vertices.index(v)]
        except ValueError:
            raise KeyError(v) from None

    @property
    def dim(self) -> int:
        return sum(len(c) - 1 for c in self.colours)

    def key(self) -> Tuple[int, ...]:
        return tuple(c.mask for c in self.colours)

    def issubset(self, other: "MultiHom") -> bool:
        return all(a.issubset(b) for a, b in zip(self.colours, other.colours))

    def restrict(self, keep: Iterable[int]) -> "MultiHom":
        keep = set(keep)
        pairs = [(v, c) for v, c in zip(self.vertices, self.colours) if v in keep]
        return MultiHom(tuple(v for v, _ in pairs), tuple(c for _, c in pairs))

    def as_dict(self) -> Dict[int, VertexSet]:
        return dict(zip(self.vertices, self.colours))

    def __str__(self) -> str:
        return "\n".join(f"{v}: {c}" for v, c in zip(self.vertices, self.colours))


# ======================
# Counts and homology
# ======================

@dataclass(frozen=True)
class FVector:
    counts: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.counts) - 1

    @property
    def euler(self) -> int:
        return sum((-1) ** i * f for i, f in enumerate(self.counts))

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({"dim": range(len(self.counts)), "faces": list(self.counts)})

    def __str__(self) -> str:
        return "(" + ",".join(str(f) for f in self.counts) + f") chi={self.euler}"


@dataclass(frozen=True)
class HomologySummary:
    """Integral homology per dimension plus mod-2 Betti numbers."""

    betti: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]
    betti_mod2: Tuple[int, ...]

    @property
    def euler(self) -> int:
        return sum((-1) ** d * b for d, b in enumerate(self.betti))

    def reduced_betti(self) -> Tuple[int, ...]:
        if not self.betti:
            return ()
        return (max(self.betti[0] - 1, 0),) + self.betti[1:]

    def groups(self) -> List[str]:
        """Groups H_0..H_top as strings, trailing zero groups dropped."""
        out = []
        for b, tors in zip(self.betti, self.torsion):
            parts = []
            if b == 1:
                parts.append("Z")
            elif b > 1:
                parts.append(f"Z^{b}")
            parts.extend(f"Z/{t}" for t in tors)
            out.append("+".join(parts) if parts else "0")
        while out and out[-1] == "0":
            out.pop()
        return out

    def mod2(self) -> Tuple[int, ...]:
        out = list(self.betti_mod2)
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def same_as(self, other: "HomologySummary") -> bool:
        return self.groups() == other.groups() and self.mod2() == other.mod2()

    def describe(self) -> str:
        if not self.betti and self.betti_mod2:
            return "mod2 b=(" + ",".join(str(b) for b in self.mod2()) + ")"
        g = self.groups()
        return "(" + ", ".join(g) + ")" if g else "(empty)"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "betti": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
            "betti_mod2": list(self.betti_mod2),
            "groups": self.groups(),
        }

    def to_frame(self) -> pd.DataFrame:
        if not self.betti:
            return pd.DataFrame({"dim": range(len(self.betti_mod2)), "b2": list(self.betti_mod2)})
        return pd.DataFrame({
            "dim": range(len(self.betti)),
            "b": list(self.betti),
            "torsion": [list(t) for t in self.torsion],
            "b2": list(self.betti_mod2),
        })

    def lines(self) -> List[str]:
        if not self.betti:
            return [f"{d}: b2={b2}" for d, b2 in enumerate(self.betti_mod2)]
        return [
            f"{d}: b={b} torsion=[{','.join(str(t) for t in tors)}] b2={b2}"
            for d, (b, tors, b2) in enumerate(zip(self.betti, self.torsion, self.betti_mod2))
        ]


# ======================
# Sphere verdicts
# ======================

CERTIFIED_SPHERE = "certified_sphere"
CERTIFIED_BALL = "certified_ball"
HOMOLOGY_SPHERE = "homology_sphere"
HOMOLOGY_BALL = "homology_ball"
NO = "no"
OTHER = "other"


@dataclass(frozen=True)
class SphereVerdict:
    kind: str
    dim: int
    reason: str = ""

    @property
    def is_sphere(self) -> bool:
        return self.kind in (CERTIFIED_SPHERE, HOMOLOGY_SPHERE)

    @property
    def is_ball(self) -> bool:
        return self.kind in (CERTIFIED_BALL, HOMOLOGY_BALL)

    @property
    def certified(self) -> bool:
        return self.kind in (CERTIFIED_SPHERE, CERTIFIED_BALL)

    def __str__(self) -> str:
        if self.kind in (NO, OTHER):
            return f"{self.kind}" + (f" ({self.reason})" if self.reason else "")
        return f"{self.kind}({self.dim})"


# ======================
# Triples over a face poset
# ======================

@dataclass(frozen=True)
class TripleElement:
    """(p^op, q, r^op) with q ⊆ r, faces given as vertex sets."""

    p: VertexSet
    q: VertexSet
    r: VertexSet

    def __str__(self) -> str:
        return f"({self.p}^op, {self.q}, {self.r}^op)"


# ======================
# Verification reports
# ======================

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass
class Check:
    name: str
    status: str
    detail: str = ""
    witness: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        d: Dict[str, Any] = {"name": self.name, "status": self.status, "detail": self.detail}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


def combine_status(states: Iterable[str]) -> str:
    """fail beats skipped beats pass; nothing run counts as skipped."""
    states = set(states)
    if FAIL in states:
        return FAIL
    if SKIPPED in states or not states:
        return SKIPPED
    return PASS


@dataclass
class VerificationReport:
    scenario: str
    params: Dict[str, Any] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    counts: Dict[str, int] = field(default_factory=dict)
    homology: Dict[str, HomologySummary] = field(default_factory=dict)
    wall_time: float = 0.0

    def check(self, name: str, ok: bool, detail: str = "", witness: Optional[str] = None) -> bool:
        self.checks.append(Check(name, PASS if ok else FAIL, detail, None if ok else witness))
        return ok

    def skip(self, name: str, detail: str) -> None:
        self.checks.append(Check(name, SKIPPED, detail))

    @property
    def status(self) -> str:
        return combine_status(c.status for c in self.checks)

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self, timings: bool = False) -> Dict[str, Any]:
        d: Dict[str, Any] = {
            "scenario": self.scenario,
            "params": self.params,
            "status": self.status,
            "checks": [c.to_dict() for c in self.checks],
            "counts": dict(sorted(self.counts.items())),
            "homology": {k: v.to_dict() for k, v in sorted(self.homology.items())},
        }
        if timings:
            d["wall_time"] = round(self.wall_time, 3)
        return d
