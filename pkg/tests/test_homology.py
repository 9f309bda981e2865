from __future__ import annotations

import numpy as np
import pytest
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from hommodels.complex import SimplicialComplex, boundary_of_simplex, f_vector
from hommodels.errors import BudgetExceeded
from hommodels.graph import build_named
from hommodels.homcomplex import cellular_chain_complex, multihoms
from hommodels.homology import (
    SparseMatrix,
    boundary_matrices,
    homology_from_chain_complex,
    homology_summary,
    invariant_chain,
    mod2_rank,
    smith_normal_form,
)
from hommodels.verify import expected_stiefel


def _sympy_factors(a: np.ndarray):
    d = sympy_snf(Matrix(a.tolist()), domain=ZZ)
    return sorted(abs(int(d[i, i])) for i in range(min(d.shape)) if d[i, i] != 0)


@pytest.mark.parametrize(
    "rows,factors",
    [
        ([[2, 0], [0, 3]], (1, 6)),
        ([[2, 4], [6, 8]], (2, 4)),
        ([[0, 0], [0, 0]], ()),
        ([[1, 2, 3], [4, 5, 6], [7, 8, 9]], (1, 3)),
    ],
)
def test_smith_normal_form_small(rows, factors):
    assert smith_normal_form(rows).invariant_factors == factors


@pytest.mark.parametrize("seed", range(8))
def test_smith_normal_form_against_sympy(seed):
    rng = np.random.default_rng(seed)
    a = rng.integers(-4, 5, size=(5, 6))
    a[:, 0] = 2 * a[:, 1]
    ours = smith_normal_form(a)
    assert sorted(ours.invariant_factors) == _sympy_factors(a)
    # sparse elimination and the dense residual give the same answer
    assert smith_normal_form(a, dense_limit=0) == smith_normal_form(a, dense_limit=10**9)


def test_invariant_chain_enforces_divisibility():
    assert invariant_chain([4, 6, 1, 0]) == (1, 2, 12)


def test_mod2_rank():
    m = SparseMatrix.from_dense([[2, 0], [0, 1], [1, 1]])
    assert mod2_rank(m) == 2
    assert mod2_rank(SparseMatrix.from_dense([[2, 4], [6, 8]])) == 0


def test_boundary_squares_to_zero():
    cc = boundary_matrices(boundary_of_simplex(4))
    assert cc.boundary_squared_zero()
    assert cc.euler() == f_vector(boundary_of_simplex(4)).euler


def test_spheres_and_hexagon(hexagon):
    assert homology_summary(hexagon).groups() == ["Z", "Z"]
    assert homology_summary(boundary_of_simplex(3)).groups() == ["Z", "0", "Z"]
    assert homology_summary(SimplicialComplex.empty()).groups() == []


def test_projective_plane_torsion(rp2):
    h = homology_summary(rp2)
    assert h.betti == (1, 0, 0)
    assert h.torsion == ((), (2,), ())
    assert h.betti_mod2 == (1, 1, 1)
    assert h.groups() == ["Z", "Z/2"]
    assert h.euler == f_vector(rp2).euler == 1
    mod2 = homology_summary(rp2, mod2_only=True)
    assert mod2.betti == () and mod2.mod2() == (1, 1, 1)


def test_threads_do_not_change_results(rp2):
    assert homology_summary(rp2, threads=4) == homology_summary(rp2, threads=1)


def test_column_budget():
    with pytest.raises(BudgetExceeded):
        homology_summary(boundary_of_simplex(3), max_columns=3)


def _mod2_from_integral(betti, torsion):
    even = [sum(1 for t in tors if t % 2 == 0) for tors in torsion]
    return tuple(b + even[d] + (even[d - 1] if d else 0) for d, b in enumerate(betti))


def test_mod2_betti_from_integral_homology(rp2):
    for k in (rp2, boundary_of_simplex(3)):
        h = homology_summary(k)
        assert h.betti_mod2 == _mod2_from_integral(h.betti, h.torsion)


def test_mod2_betti_of_the_rp3_cell_complex(c5):
    h = homology_from_chain_complex(cellular_chain_complex(multihoms(c5, build_named("complete", 4))))
    assert h.groups() == expected_stiefel(2)["groups"]
    assert h.betti_mod2 == _mod2_from_integral(h.betti, h.torsion)
    assert list(h.mod2()) == expected_stiefel(2)["mod2"]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_recorded_stiefel_mod2_agrees_with_recorded_groups(n):
    entry = expected_stiefel(n)
    betti, torsion = [], []
    for g in entry["groups"]:
        free = [p for p in g.split("+") if p.startswith("Z") and not p.startswith("Z/")]
        betti.append(sum(int(p[2:]) if p.startswith("Z^") else 1 for p in free))
        torsion.append(tuple(int(p[2:]) for p in g.split("+") if p.startswith("Z/")))
    assert list(_mod2_from_integral(betti, torsion)) == entry["mod2"]
