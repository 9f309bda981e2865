# hommodels/poset.py
# -----------------------------------------------------------------------------
# Finite posets stored as a dense boolean order matrix (leq[i, j] <=> i <= j),
# the constructions P^op, P × Q, Int P and its chain models, order complexes
# and isomorphism search on Hasse diagrams.
# -----------------------------------------------------------------------------
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import DiGraphMatcher

from . import config
from .errors import BudgetExceeded, PosetError

LOGGER = logging.getLogger(__name__)

# transitivity is re-checked with a matrix product only up to this size
CHECK_LIMIT = 3000
_MASK_BLOCK = 512


# ======================
# Payload tags
# ======================

@dataclass(frozen=True)
class Op:
    """An element of P^op; dualizing twice gives back the plain payload."""

    inner: Any

    def __str__(self) -> str:
        return f"{self.inner}^op"


def dual(x: Any) -> Any:
    return x.inner if isinstance(x, Op) else Op(x)


@dataclass(frozen=True)
class Interval:
    """Closed interval [low, high] of Int P."""

    low: Any
    high: Any

    def __str__(self) -> str:
        return f"[{self.low},{self.high}]"


# ======================
# Poset
# ======================

class Poset:
    """Elements are indices 0..n-1 with hashable, distinct payloads."""

    def __init__(self, payloads: Sequence[Any], leq: np.ndarray, name: str = "", check: bool = True):
        self._payloads = tuple(payloads)
        n = len(self._payloads)
        leq = np.array(leq, dtype=bool).reshape(n, n) if n else np.zeros((0, 0), dtype=bool)
        leq.setflags(write=False)
        self._leq = leq
        self.name = name
        self._index = {p: i for i, p in enumerate(self._payloads)}
        if len(self._index) != n:
            raise PosetError("duplicate element payloads")
        self._covers: Optional[List[Tuple[int, int]]] = None
        self._rank: Optional[np.ndarray] = None
        if check:
            _check_order(self._leq, self._payloads)

    # ---------- constructors ----------
    @classmethod
    def from_relation(cls, payloads: Sequence[Any], pairs: Iterable[Tuple[Any, Any]], name: str = "") -> "Poset":
        """Reflexive-transitive closure of a relation given on payloads."""
        payloads = tuple(payloads)
        idx = {p: i for i, p in enumerate(payloads)}
        n = len(payloads)
        leq = np.eye(n, dtype=bool)
        for a, b in pairs:
            try:
                leq[idx[a], idx[b]] = True
            except KeyError as exc:
                raise PosetError(f"relation mentions unknown element {exc.args[0]}") from None
        for k in range(n):
            leq |= leq[:, k:k + 1] & leq[k:k + 1, :]
        both = leq & leq.T
        np.fill_diagonal(both, False)
        if both.any():
            i, j = (int(x) for x in np.argwhere(both)[0])
            raise PosetError(f"relation has a cycle through {payloads[i]} and {payloads[j]}")
        return cls(payloads, leq, name=name, check=False)

    @classmethod
    def from_order(cls, payloads: Sequence[Any], leq_fn: Callable[[Any, Any], bool], name: str = "") -> "Poset":
        payloads = tuple(payloads)
        leq = np.array([[bool(leq_fn(a, b)) for b in payloads] for a in payloads], dtype=bool)
        return cls(payloads, leq, name=name)

    @classmethod
    def from_masks(cls, payloads: Sequence[Any], masks: Sequence[Any], name: str = "") -> "Poset":
        """Inclusion order on bitmasks; a row of masks compares componentwise."""
        payloads = tuple(payloads)
        m = np.array(masks, dtype=np.uint64)
        if m.ndim == 1:
            m = m.reshape(-1, 1)
        n = m.shape[0]
        _guard_size(n)
        leq = np.zeros((n, n), dtype=bool)
        inv = ~m
        for start in range(0, n, _MASK_BLOCK):
            block = m[start:start + _MASK_BLOCK]
            leq[start:start + len(block)] = np.all((block[:, None, :] & inv[None, :, :]) == 0, axis=2)
        return cls(payloads, leq, name=name, check=False)

    # ---------- element access ----------
    def __len__(self) -> int:
        return len(self._payloads)

    @property
    def payloads(self) -> Tuple[Any, ...]:
        return self._payloads

    @property
    def leq_matrix(self) -> np.ndarray:
        return self._leq

    def payload(self, i: int) -> Any:
        return self._payloads[i]

    def index(self, x: Any) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise PosetError(f"{x} is not an element of {self.label()}") from None

    def __contains__(self, x: Any) -> bool:
        return x in self._index

    def leq(self, a: int, b: int) -> bool:
        return bool(self._leq[a, b])

    def lt(self, a: int, b: int) -> bool:
        return a != b and bool(self._leq[a, b])

    def up(self, i: int, strict: bool = True) -> np.ndarray:
        row = self._leq[i].copy()
        if strict:
            row[i] = False
        return np.flatnonzero(row)

    def down(self, i: int, strict: bool = True) -> np.ndarray:
        col = self._leq[:, i].copy()
        if strict:
            col[i] = False
        return np.flatnonzero(col)

    def minimal(self) -> List[int]:
        return [int(i) for i in np.flatnonzero(self._leq.sum(axis=0) == 1)]

    def maximal(self) -> List[int]:
        return [int(i) for i in np.flatnonzero(self._leq.sum(axis=1) == 1)]

    # ---------- derived structure ----------
    def covers(self) -> List[Tuple[int, int]]:
        """Cover relations i ⋖ j, sorted."""
        if self._covers is None:
            lt = self._leq.copy()
            np.fill_diagonal(lt, False)
            out = []
            for i in range(len(self)):
                above = lt[i]
                if not above.any():
                    continue
                shadowed = lt[above].any(axis=0)
                out.extend((i, int(j)) for j in np.flatnonzero(above & ~shadowed))
            self._covers = out
        return list(self._covers)

    def rank(self) -> np.ndarray:
        """Length of the longest chain ending at each element."""
        if self._rank is None:
            n = len(self)
            rank = np.zeros(n, dtype=np.int64)
            # down-set sizes give a linear extension
            order = np.argsort(self._leq.sum(axis=0), kind="stable")
            below: Dict[int, List[int]] = {}
            for i, j in self.covers():
                below.setdefault(j, []).append(i)
            for j in order:
                preds = below.get(int(j))
                if preds:
                    rank[j] = max(rank[i] for i in preds) + 1
            self._rank = rank
        return self._rank

    def height(self) -> int:
        return int(self.rank().max()) if len(self) else -1

    def hasse(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self)))
        g.add_edges_from(self.covers())
        return g

    # ---------- new posets from old ----------
    def subposet(self, selector: Union[Callable[[Any], bool], Iterable[int]], name: str = "") -> "Poset":
        if callable(selector):
            idx = [i for i, p in enumerate(self._payloads) if selector(p)]
        else:
            idx = sorted(set(int(i) for i in selector))
        sub = self._leq[np.ix_(idx, idx)] if idx else np.zeros((0, 0), dtype=bool)
        return Poset([self._payloads[i] for i in idx], sub, name=name or self.name, check=False)

    def relabel(self, fn: Callable[[Any], Any], name: str = "") -> "Poset":
        return Poset([fn(p) for p in self._payloads], self._leq, name=name or self.name, check=False)

    def same_as(self, other: "Poset") -> bool:
        """Element-wise equality: same payloads, same relation between them."""
        if len(self) != len(other) or set(self._payloads) != set(other._payloads):
            return False
        perm = [other._index[p] for p in self._payloads]
        return bool(np.array_equal(self._leq, other._leq[np.ix_(perm, perm)])) if perm else True

    def label(self) -> str:
        return self.name or f"poset[{len(self)}]"

    def __repr__(self) -> str:
        return f"Poset({self.label()}, {len(self)} elements)"


def _check_order(leq: np.ndarray, payloads: Sequence[Any]) -> None:
    n = leq.shape[0]
    if n == 0:
        return
    if not leq.diagonal().all():
        i = int(np.flatnonzero(~leq.diagonal())[0])
        raise PosetError(f"relation is not reflexive at {payloads[i]}")
    both = leq & leq.T
    np.fill_diagonal(both, False)
    if both.any():
        i, j = (int(x) for x in np.argwhere(both)[0])
        raise PosetError(f"relation is not antisymmetric: {payloads[i]} <= {payloads[j]} <= {payloads[i]}")
    if n <= CHECK_LIMIT:
        m = leq.astype(np.float32)
        closed = (m @ m) > 0
        if (closed & ~leq).any():
            i, j = (int(x) for x in np.argwhere(closed & ~leq)[0])
            raise PosetError(f"relation is not transitive: {payloads[i]} <= ... <= {payloads[j]} missing")


def _guard_size(n: int, limit: Optional[int] = None) -> None:
    limit = config.MAX_POSET_SIZE if limit is None else limit
    if n > limit:
        raise BudgetExceeded("poset size", limit, n)


# ======================
# Small posets
# ======================

def chain(k: int) -> Poset:
    return Poset(range(k), np.triu(np.ones((k, k), dtype=bool)), name=f"chain{k}", check=False)


def antichain(k: int) -> Poset:
    return Poset(range(k), np.eye(k, dtype=bool), name=f"antichain{k}", check=False)


# ======================
# Constructions
# ======================

def opposite(p: Poset) -> Poset:
    return Poset([dual(x) for x in p.payloads], p.leq_matrix.T, name=f"{p.label()}^op", check=False)


def product(p: Poset, q: Poset, max_size: Optional[int] = None) -> Poset:
    """Componentwise order on pairs, row-major in (p, q)."""
    _guard_size(len(p) * len(q), max_size)
    payloads = [(a, b) for a in p.payloads for b in q.payloads]
    leq = np.kron(p.leq_matrix.astype(np.uint8), q.leq_matrix.astype(np.uint8)).astype(bool)
    return Poset(payloads, leq, name=f"{p.label()}x{q.label()}", check=False)


def _increasing_tuples(p: Poset, length: int) -> List[Tuple[int, ...]]:
    """Index tuples i_1 <= i_2 <= ... <= i_length in the order of p."""
    ups = [np.flatnonzero(p.leq_matrix[i]).tolist() for i in range(len(p))]
    tuples: List[Tuple[int, ...]] = [(i,) for i in range(len(p))]
    for _ in range(length - 1):
        tuples = [t + (j,) for t in tuples for j in ups[t[-1]]]
    return tuples


def _chain_model(p: Poset, length: int, max_size: Optional[int]) -> Tuple[np.ndarray, np.ndarray]:
    """Index tuples and the order of P × P^op × P × ... restricted to them."""
    tuples = _increasing_tuples(p, length)
    _guard_size(len(tuples), max_size)
    if not tuples:
        return np.zeros((0, length), dtype=np.int64), np.zeros((0, 0), dtype=bool)
    idx = np.array(tuples, dtype=np.int64)
    base = p.leq_matrix
    leq = np.ones((len(tuples), len(tuples)), dtype=bool)
    for k in range(length):
        col = idx[:, k]
        block = base[np.ix_(col, col)]
        # odd coordinates live in P^op
        leq &= block if k % 2 == 0 else block.T
    return idx, leq


def interval_poset(p: Poset, max_size: Optional[int] = None) -> Poset:
    """Int P: pairs p <= q, with [p0,q0] <= [p1,q1] iff p0 <= p1 and q1 <= q0."""
    idx, leq = _chain_model(p, 2, max_size)
    payloads = [Interval(p.payload(a), p.payload(b)) for a, b in idx.tolist()]
    return Poset(payloads, leq, name=f"Int({p.label()})", check=False)


def iterated_interval_poset(p: Poset, max_size: Optional[int] = None) -> Poset:
    """4-chains p <= q <= r <= s inside P × P^op × P × P^op."""
    idx, leq = _chain_model(p, 4, max_size)
    payloads = [
        (p.payload(a), Op(p.payload(b)), p.payload(c), Op(p.payload(d)))
        for a, b, c, d in idx.tolist()
    ]
    return Poset(payloads, leq, name=f"Chain4({p.label()})", check=False)


def chain32_poset(p: Poset, max_size: Optional[int] = None) -> Poset:
    """Triples p <= q <= r inside P × P^op × P."""
    idx, leq = _chain_model(p, 3, max_size)
    payloads = [(p.payload(a), Op(p.payload(b)), p.payload(c)) for a, b, c in idx.tolist()]
    return Poset(payloads, leq, name=f"Chain3({p.label()})", check=False)


def int_int_to_chains(x: Interval) -> Tuple[Any, Any, Any, Any]:
    """[[a,b],[c,d]] in Int(Int P) (so a <= c <= d <= b) as the 4-chain (a, c^op, d, b^op)."""
    outer_low, outer_high = x.low, x.high
    return (outer_low.low, Op(outer_high.low), outer_high.high, Op(outer_low.high))


# ======================
# Order complex
# ======================

def order_complex(p: Poset, max_faces: Optional[int] = None, labels: Optional[Sequence[int]] = None):
    """Chains of p as a simplicial complex; vertex i is labels[i] (default: i)."""
    from .complex import SimplicialComplex

    limit = config.MAX_ORDER_FACES if max_faces is None else max_faces
    n = len(p)
    if n == 0:
        return SimplicialComplex.empty()
    if n > limit:
        raise BudgetExceeded("order-complex faces", limit, n)
    lt = p.leq_matrix.copy()
    np.fill_diagonal(lt, False)
    ups = [np.flatnonzero(lt[i]).tolist() for i in range(n)]
    levels: List[List[Tuple[int, ...]]] = [[(i,) for i in range(n)]]
    total = n
    while True:
        nxt: List[Tuple[int, ...]] = []
        for c in levels[-1]:
            nxt.extend(c + (j,) for j in ups[c[-1]])
            if total + len(nxt) > limit:
                raise BudgetExceeded("order-complex faces", limit, total + len(nxt))
        if not nxt:
            break
        total += len(nxt)
        levels.append(nxt)
    LOGGER.debug("order complex of %s: %d faces, dim %d", p.label(), total, len(levels) - 1)
    if labels is not None:
        lab = list(labels)
        levels = [[tuple(lab[i] for i in c) for c in lvl] for lvl in levels]
    return SimplicialComplex.from_levels([sorted(tuple(sorted(c)) for c in lvl) for lvl in levels])


# ======================
# Monotone maps
# ======================

@dataclass(frozen=True)
class PosetMap:
    """Monotone map given by an index assignment; monotonicity is checked."""

    source: Poset
    target: Poset
    assignment: Tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.assignment)
        object.__setattr__(self, "assignment", a)
        if len(a) != len(self.source):
            raise PosetError(f"assignment has {len(a)} entries for {len(self.source)} elements")
        if any(x < 0 or x >= len(self.target) for x in a):
            raise PosetError("assignment points outside the target poset")
        if not a:
            return
        arr = np.array(a, dtype=np.int64)
        bad = self.source.leq_matrix & ~self.target.leq_matrix[np.ix_(arr, arr)]
        if bad.any():
            i, j = (int(x) for x in np.argwhere(bad)[0])
            raise PosetError(
                f"map is not monotone: {self.source.payload(i)} <= {self.source.payload(j)} "
                f"but {self.target.payload(a[i])} !<= {self.target.payload(a[j])}"
            )

    @classmethod
    def from_payload_fn(cls, source: Poset, target: Poset, fn: Callable[[Any], Any]) -> "PosetMap":
        assignment = []
        for x in source.payloads:
            y = fn(x)
            if y not in target:
                raise PosetError(f"map undefined at {x}: image {y} is not in {target.label()}")
            assignment.append(target.index(y))
        return cls(source, target, tuple(assignment))

    @classmethod
    def identity(cls, p: Poset) -> "PosetMap":
        return cls(p, p, tuple(range(len(p))))

    def __call__(self, i: int) -> int:
        return self.assignment[i]

    def apply(self, x: Any) -> Any:
        return self.target.payload(self.assignment[self.source.index(x)])

    def image(self) -> List[int]:
        return sorted(set(self.assignment))

    def is_injective(self) -> bool:
        return len(set(self.assignment)) == len(self.assignment)

    def is_bijective(self) -> bool:
        return self.is_injective() and len(self.source) == len(self.target)

    def reflects_order(self) -> bool:
        if not self.assignment:
            return True
        arr = np.array(self.assignment, dtype=np.int64)
        return bool(np.array_equal(self.source.leq_matrix, self.target.leq_matrix[np.ix_(arr, arr)]))

    def is_isomorphism(self) -> bool:
        return self.is_bijective() and self.reflects_order()

    def inverse(self) -> "PosetMap":
        if not self.is_bijective():
            raise PosetError("only bijections have an inverse")
        inv = [0] * len(self.assignment)
        for i, j in enumerate(self.assignment):
            inv[j] = i
        return PosetMap(self.target, self.source, tuple(inv))

    def then(self, g: "PosetMap") -> "PosetMap":
        """g ∘ self."""
        if g.source is not self.target and not g.source.same_as(self.target):
            raise PosetError("maps do not compose")
        return PosetMap(self.source, g.target, tuple(g.assignment[j] for j in self.assignment))

    def is_identity(self) -> bool:
        return self.source is self.target and self.assignment == tuple(range(len(self.source)))

    def is_involution(self) -> bool:
        return self.source is self.target and all(self.assignment[j] == i for i, j in enumerate(self.assignment))


def is_monotone(source: Poset, target: Poset, fn: Callable[[Any], Any]) -> bool:
    try:
        PosetMap.from_payload_fn(source, target, fn)
    except PosetError:
        return False
    return True


def interval_map(f: PosetMap, source: Optional[Poset] = None, target: Optional[Poset] = None) -> PosetMap:
    """Int f: [a,b] -> [f a, f b]."""
    source = source if source is not None else interval_poset(f.source)
    target = target if target is not None else interval_poset(f.target)
    return PosetMap.from_payload_fn(source, target, lambda iv: Interval(f.apply(iv.low), f.apply(iv.high)))


# ======================
# Isomorphism search
# ======================

def _grading(p: Poset) -> List[Tuple[int, int, int]]:
    downs = p.leq_matrix.sum(axis=0)
    ups = p.leq_matrix.sum(axis=1)
    rank = p.rank()
    return [(int(downs[i]), int(ups[i]), int(rank[i])) for i in range(len(p))]


def _graded_hasse(p: Poset, grades: List[Tuple[int, int, int]]) -> nx.DiGraph:
    g = p.hasse()
    nx.set_node_attributes(g, dict(enumerate(grades)), "grade")
    return g


def find_isomorphism(p: Poset, q: Poset) -> Optional[PosetMap]:
    """An order isomorphism p -> q, or None. Deterministic for fixed inputs."""
    if len(p) != len(q):
        return None
    if len(p) == 0:
        return PosetMap(p, q, ())
    gp, gq = _grading(p), _grading(q)
    if sorted(gp) != sorted(gq):
        return None
    hp, hq = _graded_hasse(p, gp), _graded_hasse(q, gq)
    degrees = lambda h: sorted((h.in_degree(v), h.out_degree(v)) for v in h)  # noqa: E731
    if degrees(hp) != degrees(hq):
        return None
    matcher = DiGraphMatcher(hp, hq, node_match=lambda a, b: a["grade"] == b["grade"])
    for mapping in matcher.isomorphisms_iter():
        f = PosetMap(p, q, tuple(mapping[i] for i in range(len(p))))
        if f.reflects_order():
            return f
    return None
