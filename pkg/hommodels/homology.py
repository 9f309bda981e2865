# hommodels/homology.py
# -----------------------------------------------------------------------------
# Exact homology: sparse integer boundary matrices, Smith normal form with
# small-pivot elimination, and an independent GF(2) rank path.
# -----------------------------------------------------------------------------
from __future__ import annotations

import logging
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

import numpy as np

from . import config
from .complex import SimplicialComplex
from .errors import BudgetExceeded, HomModelsError
from .logs import progress
from .models import HomologySummary

LOGGER = logging.getLogger(__name__)

# entries above this switch the dense path to Python integers
_INT64_SAFE = 2 ** 62


# ======================
# Matrices and chain complexes
# ======================

@dataclass
class SparseMatrix:
    """Integer matrix as a list of columns {row: value}, zeros omitted."""

    nrows: int
    ncols: int
    columns: List[Dict[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if not self.columns:
            self.columns = [{} for _ in range(self.ncols)]
        if len(self.columns) != self.ncols:
            raise HomModelsError(f"{len(self.columns)} columns given for ncols={self.ncols}")

    @classmethod
    def from_dense(cls, rows: Union[np.ndarray, Sequence[Sequence[int]]]) -> "SparseMatrix":
        arr = np.asarray(rows, dtype=object)
        if arr.size == 0:
            nrows = arr.shape[0] if arr.ndim == 2 else 0
            ncols = arr.shape[1] if arr.ndim == 2 else 0
            return cls(nrows, ncols, [{} for _ in range(ncols)])
        nrows, ncols = arr.shape
        cols = [{i: int(arr[i, j]) for i in range(nrows) if arr[i, j] != 0} for j in range(ncols)]
        return cls(nrows, ncols, cols)

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.nrows, self.ncols), dtype=object)
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i, j] = v
        return out

    @property
    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def is_zero(self) -> bool:
        return all(not c for c in self.columns)

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        """self @ other."""
        if self.ncols != other.nrows:
            raise HomModelsError(f"shape mismatch {self.nrows}x{self.ncols} @ {other.nrows}x{other.ncols}")
        out = []
        for col in other.columns:
            acc: Dict[int, int] = defaultdict(int)
            for k, v in col.items():
                for i, w in self.columns[k].items():
                    acc[i] += v * w
            out.append({i: x for i, x in acc.items() if x})
        return SparseMatrix(self.nrows, other.ncols, out)


@dataclass
class ChainComplex:
    """sizes[d] cells in dimension d; boundaries[d] maps C_d -> C_{d-1} (d >= 1)."""

    sizes: List[int]
    boundaries: Dict[int, SparseMatrix] = field(default_factory=dict)
    labels: Optional[List[Sequence]] = None

    @property
    def top(self) -> int:
        return len(self.sizes) - 1

    def boundary(self, d: int) -> SparseMatrix:
        if d in self.boundaries:
            return self.boundaries[d]
        rows = self.sizes[d - 1] if 0 < d <= self.top + 1 and d - 1 <= self.top else 0
        cols = self.sizes[d] if 0 <= d <= self.top else 0
        return SparseMatrix(rows, cols)

    def boundary_squared_zero(self) -> bool:
        return all(self.boundary(d - 1).matmul(self.boundary(d)).is_zero() for d in range(2, self.top + 1))

    def euler(self) -> int:
        return sum((-1) ** d * n for d, n in enumerate(self.sizes))


def boundary_matrices(k: SimplicialComplex) -> ChainComplex:
    """Simplicial boundary with sorted-vertex orientation: omitting vertex i gives (-1)^i."""
    sizes = [len(k.faces(d)) for d in range(k.dim + 1)]
    bds: Dict[int, SparseMatrix] = {}
    for d in range(1, k.dim + 1):
        lower = k.index_map(d - 1)
        cols = []
        for f in k.faces(d):
            cols.append({lower[f[:i] + f[i + 1:]]: (-1) ** i for i in range(len(f))})
        bds[d] = SparseMatrix(sizes[d - 1], sizes[d], cols)
    return ChainComplex(sizes, bds, [list(k.faces(d)) for d in range(k.dim + 1)])


# ======================
# Smith normal form
# ======================

@dataclass(frozen=True)
class SmithForm:
    invariant_factors: Tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> Tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


class _Eliminator:
    """
    Column-sparse elimination that records |pivot| for every eliminated
    row/column pair. Unit pivots go first (Markowitz order: short column,
    then short row); whatever is left is reduced with smallest-entry pivots,
    densely with numpy once it is small enough.
    """

    def __init__(self, matrix: SparseMatrix, dense_limit: int):
        self.cols: Dict[int, Dict[int, int]] = {j: dict(c) for j, c in enumerate(matrix.columns) if c}
        self.rows: Dict[int, Set[int]] = defaultdict(set)
        for j, c in self.cols.items():
            for i in c:
                self.rows[i].add(j)
        self.dense_limit = dense_limit
        self.diagonal: List[int] = []

    # ---------- elementary operations ----------
    def _add_col(self, k: int, src: Dict[int, int], factor: int) -> None:
        ck = self.cols[k]
        for i, x in src.items():
            y = ck.get(i, 0) + factor * x
            if y:
                if i not in ck:
                    self.rows[i].add(k)
                ck[i] = y
            elif i in ck:
                del ck[i]
                self.rows[i].discard(k)

    def _pivot(self, r: int, c: int) -> None:
        while True:
            pcol = self.cols[c]
            v = pcol[r]
            # clear row r with column operations
            for k in sorted(self.rows[r] - {c}):
                q = self.cols[k][r] // v
                if q:
                    self._add_col(k, pcol, -q)
            rest = [(abs(self.cols[k][r]), k) for k in self.rows[r] if k != c]
            if rest:
                c = min(rest)[1]
                continue
            # row r now meets only column c, so row operations only touch column c
            rem = {}
            for i, x in pcol.items():
                if i != r and x % v:
                    rem[i] = x - (x // v) * v
            if rem:
                for i in [i for i in pcol if i != r and i not in rem]:
                    del pcol[i]
                    self.rows[i].discard(c)
                pcol.update(rem)
                r = min((abs(x), i) for i, x in rem.items())[1]
                continue
            break
        self.diagonal.append(abs(v))
        for i in self.cols.pop(c):
            self.rows[i].discard(c)
        self.rows.pop(r, None)

    def _drop_empty(self) -> None:
        for j in [j for j, c in self.cols.items() if not c]:
            del self.cols[j]

    # ---------- phases ----------
    def unit_sweeps(self) -> None:
        while True:
            self._drop_empty()
            moved = False
            for j in sorted(self.cols, key=lambda j: (len(self.cols[j]), j)):
                col = self.cols.get(j)
                if not col:
                    continue
                units = [i for i, x in col.items() if x == 1 or x == -1]
                if not units:
                    continue
                r = min(units, key=lambda i: (len(self.rows[i]), i))
                self._pivot(r, j)
                moved = True
            if not moved:
                return

    def residual(self) -> None:
        self._drop_empty()
        if not self.cols:
            return
        row_ids = sorted(i for i, s in self.rows.items() if s)
        col_ids = sorted(self.cols)
        if len(row_ids) * len(col_ids) <= self.dense_limit:
            pos = {i: k for k, i in enumerate(row_ids)}
            dense = np.zeros((len(row_ids), len(col_ids)), dtype=np.int64)
            wide = any(abs(x) >= _INT64_SAFE for c in self.cols.values() for x in c.values())
            if wide:
                dense = dense.astype(object)
            for k, j in enumerate(col_ids):
                for i, x in self.cols[j].items():
                    dense[pos[i], k] = x
            self.diagonal.extend(dense_diagonal(dense))
            self.cols.clear()
            return
        LOGGER.info("sparse residual block %dx%d", len(row_ids), len(col_ids))
        while self.cols:
            _, r, c = min((abs(x), i, j) for j, col in self.cols.items() for i, x in col.items())
            self._pivot(r, c)
            self._drop_empty()

    def run(self) -> List[int]:
        self.unit_sweeps()
        self.residual()
        return self.diagonal


def _checked(a: np.ndarray, bound: int) -> np.ndarray:
    if a.dtype != object and bound >= _INT64_SAFE:
        return a.astype(object)
    return a


def dense_diagonal(a: np.ndarray) -> List[int]:
    """|pivots| of a small-pivot diagonalization of a dense integer matrix."""
    a = a.copy()
    diag: List[int] = []
    while a.size and np.any(a != 0):
        nz = np.argwhere(a != 0)
        vals = np.array([abs(a[i, j]) for i, j in nz], dtype=object)
        r, c = (int(x) for x in nz[int(np.argmin(vals))])
        while True:
            v = a[r, c]
            q = np.array([x // v for x in a[r, :]], dtype=object)
            q[c] = 0
            if np.any(q != 0):
                bound = int(np.max(np.abs(a))) * (1 + int(np.max(np.abs(q))))
                a = _checked(a, bound)
                a = a - np.outer(a[:, c], q.astype(a.dtype))
            row = [(abs(a[r, j]), j) for j in range(a.shape[1]) if j != c and a[r, j] != 0]
            if row:
                c = min(row)[1]
                continue
            col = a[:, c].copy()
            for i in range(a.shape[0]):
                if i != r:
                    col[i] = col[i] - (col[i] // v) * v
            a[:, c] = col
            rest = [(abs(a[i, c]), i) for i in range(a.shape[0]) if i != r and a[i, c] != 0]
            if rest:
                r = min(rest)[1]
                continue
            break
        diag.append(abs(int(v)))
        a = np.delete(np.delete(a, r, axis=0), c, axis=1)
    return diag


def invariant_chain(diagonal: Sequence[int]) -> Tuple[int, ...]:
    """Turn a diagonal into invariant factors d_1 | d_2 | ... (zeros dropped)."""
    ones = sum(1 for d in diagonal if d == 1)
    rest = sorted(abs(d) for d in diagonal if abs(d) > 1)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            g = gcd(rest[i], rest[j])
            rest[i], rest[j] = g, rest[i] * rest[j] // g
    return (1,) * ones + tuple(sorted(rest, key=lambda d: d))


def smith_normal_form(m: Union[SparseMatrix, np.ndarray, Sequence[Sequence[int]]], dense_limit: Optional[int] = None) -> SmithForm:
    matrix = m if isinstance(m, SparseMatrix) else SparseMatrix.from_dense(m)
    limit = config.DENSE_LIMIT if dense_limit is None else dense_limit
    diag = _Eliminator(matrix, limit).run()
    return SmithForm(invariant_chain(diag))


# ======================
# GF(2)
# ======================

def mod2_rank(m: SparseMatrix) -> int:
    """Rank over GF(2) by bitset column reduction."""
    pivots: Dict[int, int] = {}
    rank = 0
    for col in m.columns:
        x = 0
        for i, v in col.items():
            if v & 1:
                x |= 1 << i
        while x:
            top = x.bit_length() - 1
            p = pivots.get(top)
            if p is None:
                pivots[top] = x
                rank += 1
                break
            x ^= p
    return rank


# ======================
# Homology
# ======================

def _guard_columns(cc: ChainComplex, limit: Optional[int]) -> None:
    limit = config.MAX_MATRIX_COLUMNS if limit is None else limit
    widest = max(cc.sizes, default=0)
    if widest > limit:
        raise BudgetExceeded("matrix columns", limit, widest)


def _map_dims(fn, dims: List[int], threads: int, desc: str) -> Dict[int, object]:
    if threads > 1 and len(dims) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(progress(pool.map(fn, dims), desc=desc, total=len(dims)))
    else:
        results = [fn(d) for d in progress(dims, desc=desc, total=len(dims))]
    return dict(zip(dims, results))


def mod2_betti(cc: ChainComplex, threads: int = 1, max_columns: Optional[int] = None) -> Tuple[int, ...]:
    _guard_columns(cc, max_columns)
    dims = list(range(1, cc.top + 1))
    ranks = _map_dims(lambda d: mod2_rank(cc.boundary(d)), dims, threads, "GF(2) ranks")
    return tuple(
        n - ranks.get(d, 0) - ranks.get(d + 1, 0) for d, n in enumerate(cc.sizes)
    )


def homology_from_chain_complex(
    cc: ChainComplex,
    threads: int = 1,
    max_columns: Optional[int] = None,
    mod2_only: bool = False,
) -> HomologySummary:
    """Betti numbers and torsion per dimension; mod_2 Betti numbers from a separate elimination."""
    _guard_columns(cc, max_columns)
    b2 = mod2_betti(cc, threads, max_columns)
    if mod2_only:
        return HomologySummary((), (), b2)
    dims = list(range(1, cc.top + 1))
    forms = _map_dims(lambda d: smith_normal_form(cc.boundary(d)), dims, threads, "Smith normal form")
    betti, torsion = [], []
    for d, n in enumerate(cc.sizes):
        rank_d = forms[d].rank if d in forms else 0
        rank_up = forms[d + 1].rank if d + 1 in forms else 0
        betti.append(n - rank_d - rank_up)
        torsion.append(forms[d + 1].torsion if d + 1 in forms else ())
    LOGGER.debug("homology sizes=%s betti=%s", cc.sizes, betti)
    return HomologySummary(tuple(betti), tuple(torsion), b2)


def homology_summary(
    k: SimplicialComplex,
    threads: int = 1,
    max_columns: Optional[int] = None,
    mod2_only: bool = False,
) -> HomologySummary:
    return homology_from_chain_complex(boundary_matrices(k), threads, max_columns, mod2_only)
