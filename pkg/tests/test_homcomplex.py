from __future__ import annotations

from itertools import combinations, product

import pytest

from hommodels.complex import boundary_of_simplex, f_vector, face_poset
from hommodels.errors import BudgetExceeded, HomComplexError
from hommodels.graph import Graph, GraphHom, build_named, delete_vertices
from hommodels.homcomplex import (
    c5_flip_involution,
    cellular_chain_complex,
    color_slices,
    families_A_B_C,
    hom_poset,
    induced_map,
    is_multihom,
    multihoms,
    restrict,
    restricted_cells,
    restricted_hom_poset,
)
from hommodels.homology import homology_from_chain_complex, homology_summary
from hommodels.models import MultiHom, VertexSet
from hommodels.poset import find_isomorphism, order_complex


def _mh(vertices, *colours):
    return MultiHom(tuple(vertices), tuple(VertexSet.of(c) for c in colours))


def test_c5_has_no_two_colouring(c5, k2):
    assert multihoms(c5, k2) == []
    assert len(hom_poset(c5, k2)) == 0


def test_hom_c5_k3_counts(c5, k3):
    p = hom_poset(c5, k3)
    dims = [phi.dim for phi in p.payloads]
    assert dims.count(0) == 30
    assert dims.count(1) == 30
    assert max(dims) == 1
    assert all(is_multihom(phi, c5, k3) for phi in p.payloads)


def test_hom_c5_k4_vertex_cells(c5):
    cells = multihoms(c5, build_named("complete", 4))
    assert sum(1 for c in cells if c.dim == 0) == 240
    assert max(c.dim for c in cells) == 3


def test_enumeration_is_deterministic(c5):
    k4 = build_named("complete", 4)
    assert multihoms(c5, k4, threads=1) == multihoms(c5, k4, threads=3)
    assert multihoms(c5, k4, specialize=False) == multihoms(c5, k4)


def test_cell_budget(c5, k3):
    with pytest.raises(BudgetExceeded):
        multihoms(c5, k3, max_cells=10)


def test_is_multihom(c5, k3):
    good = _mh(range(1, 6), [1], [2], [1], [2], [3])
    assert is_multihom(good, c5, k3)
    assert not is_multihom(_mh(range(1, 6), [1], [1], [1], [2], [3]), c5, k3)
    assert not is_multihom(_mh(range(1, 6), [1], [2, 3], [1, 3], [2], [3]), c5, k3)


def test_small_model_has_36_cells(c5, k3):
    small = restricted_hom_poset(c5, k3, [2, 4])
    assert len(small) == 36
    assert all(phi.vertices == (1, 3, 5) for phi in small.payloads)


@pytest.mark.parametrize(
    "g,n,s",
    [
        (build_named("cycle", 5), 3, (2, 4)),
        (build_named("cycle", 5), 4, (2, 4)),
        (build_named("cycle", 5), 4, (3,)),
        (build_named("cycle", 6), 3, (1, 3, 5)),
        (build_named("path", 3), 3, (0, 2)),
        (build_named("complete", 2), 4, (1,)),
        (build_named("complete", 2), 2, (1,)),
        (build_named("complete", 2), 5, (1,)),
        (build_named("complete", 2), 6, (1,)),
        (build_named("path", 2), 3, (1,)),
        (build_named("path", 2), 4, (0, 2)),
    ],
)
def test_criterion_matches_image(g, n, s):
    h = build_named("complete", n)
    assert restricted_cells(g, h, s, method="criterion") == restricted_cells(g, h, s, method="image")


def test_restriction_preconditions(c5, k3):
    with pytest.raises(HomComplexError):
        restricted_cells(c5, k3, range(1, 6))
    with pytest.raises(HomComplexError):
        restricted_cells(c5, k3, [1, 2], method="criterion")
    # a dependent S still works through the image
    assert restricted_cells(c5, k3, [1, 2], method="image")


def test_restrict_drops_vertices():
    phi = _mh(range(1, 6), [1], [2], [1], [2], [3])
    assert restrict(phi, [2, 4]) == _mh((1, 3, 5), [1], [1], [3])


def test_flip_is_a_free_involution(c5, k3):
    small = restricted_hom_poset(c5, k3, [2, 4])
    flip = c5_flip_involution(small, _c5_minus_24())
    assert flip.is_involution()
    assert all(flip(i) != i for i in range(len(small)))
    with pytest.raises(HomComplexError):
        c5_flip_involution(hom_poset(build_named("cycle", 6), k3), build_named("cycle", 6))


def test_induced_map_by_identities(c5, k3):
    p = hom_poset(c5, k3)
    f = induced_map(GraphHom.identity(c5), GraphHom.identity(k3), p, p)
    assert f.is_identity()


def test_induced_map_into_bigger_target(c5, k3):
    k4 = build_named("complete", 4)
    f = induced_map(GraphHom.identity(c5), GraphHom.inclusion(k3, k4), hom_poset(c5, k3), hom_poset(c5, k4))
    assert f.is_injective() and f.reflects_order()


def test_color_slices(k3):
    phi = _mh((1, 3, 5), [1], [1, 2], [3])
    assert color_slices(phi, k3) == (VertexSet.of([1, 3]), VertexSet.of([3]), VertexSet.of([5]))


def test_families_for_c5(c5):
    fam = families_A_B_C(c5, [2, 4])
    assert len(fam.ind_g) == 11
    # ind(C_5 \ {2,4}): {}, {1}, {3}, {5}, {1,3}, {3,5}
    assert len(fam.ind_sub) == 6
    assert set(fam.b[2].payloads) == set(fam.c[VertexSet.of([2])].payloads)
    assert set(fam.b[1].payloads) == {VertexSet.of([1]), VertexSet.of([1, 3])}
    with pytest.raises(HomComplexError):
        families_A_B_C(c5, [1, 2])


def test_cellular_homology_matches_order_complex(c5, k3):
    cells = multihoms(c5, k3)
    cc = cellular_chain_complex(cells)
    assert cc.boundary_squared_zero()
    cellular = homology_from_chain_complex(cc)
    simplicial = homology_summary(order_complex(hom_poset(c5, k3)))
    assert cellular.groups() == simplicial.groups() == ["Z^2", "Z^2"]


def test_cellular_boundary_of_hom_c5_k4(c5):
    cc = cellular_chain_complex(multihoms(c5, build_named("complete", 4)))
    assert cc.boundary_squared_zero()
    h = homology_from_chain_complex(cc)
    assert h.groups() == ["Z", "Z/2", "0", "Z"]


def test_cellular_rejects_unclosed_families(c5, k3):
    top = [c for c in multihoms(c5, k3) if c.dim == 1]
    with pytest.raises(HomComplexError):
        cellular_chain_complex(top)


def test_face_poset_of_small_model_for_k2(k2):
    # Hom_{1}(K_2, K_3) is the face poset of the boundary of a triangle
    small = restricted_hom_poset(k2, build_named("complete", 3), [1])
    assert len(small) == 6
    assert find_isomorphism(small, face_poset(boundary_of_simplex(2))) is not None


def _c5_minus_24():
    return delete_vertices(build_named("cycle", 5), (2, 4))


def _nonempty_subsets(labels):
    return [frozenset(c) for k in range(1, len(labels) + 1) for c in combinations(labels, k)]


def test_small_model_count_by_brute_force(c5, k3):
    # φ(1), φ(3), φ(5) with φ(1) ∩ φ(5) = ∅ and a free colour left at 2 and at 4
    colours = frozenset((1, 2, 3))
    triples = [
        (a, b, c)
        for a, b, c in product(_nonempty_subsets(sorted(colours)), repeat=3)
        if not a & c and a | b != colours and b | c != colours
    ]
    assert len(triples) == 36
    image = {restrict(phi, [2, 4]) for phi in multihoms(c5, k3)}
    assert len(image) == 36
    assert image == set(restricted_cells(c5, k3, [2, 4]))
    assert {tuple(frozenset(col) for col in phi.colours) for phi in image} == set(triples)


def test_hom_poset_is_closed_downward(c5):
    cells = set(multihoms(c5, build_named("complete", 4)))
    for phi in cells:
        for i, col in enumerate(phi.colours):
            if len(col) == 1:
                continue
            for c in col:
                face = MultiHom(phi.vertices, phi.colours[:i] + (col - VertexSet.of([c]),) + phi.colours[i + 1:])
                assert face in cells


@pytest.mark.slow
def test_hom_c5_k5_has_dimension_five(c5):
    cells = multihoms(c5, build_named("complete", 5), max_cells=50_000)
    assert len(cells) == 45540
    assert max(c.dim for c in cells) == 5


def test_euler_characteristic_from_cells_and_betti(c5, k3):
    k = order_complex(hom_poset(c5, k3))
    assert f_vector(k).euler == homology_summary(k).euler == 0
    cc = cellular_chain_complex(multihoms(c5, build_named("complete", 4)))
    assert cc.euler() == homology_from_chain_complex(cc).euler == 0


def test_flip_of_the_example_cell(k3):
    flip = c5_flip_involution(restricted_hom_poset(build_named("cycle", 5), k3, [2, 4]), _c5_minus_24())
    cell = _mh((1, 3, 5), [1], [2], [3])
    image = flip.source.payload(flip(flip.source.index(cell)))
    assert image == _mh((1, 3, 5), [3], [2], [1])


def test_flip_needs_a_c5_host(c5, k3):
    k5 = build_named("complete", 5)
    with pytest.raises(HomComplexError):
        c5_flip_involution(hom_poset(k5, k5), k5)
    small = restricted_hom_poset(c5, k3, [2, 4])
    with pytest.raises(HomComplexError):
        c5_flip_involution(small, c5)
    assert c5_flip_involution(hom_poset(c5, k3), c5).is_involution()


def test_threaded_enumeration_over_a_general_target(c5):
    k4_minus_edge = Graph.from_edges((1, 2, 3, 4), [(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)])
    for h in (build_named("cycle", 5), k4_minus_edge):
        assert multihoms(c5, h)
        assert multihoms(c5, h, threads=3) == multihoms(c5, h)
    k4 = build_named("complete", 4)
    assert multihoms(c5, k4, threads=3, specialize=False) == multihoms(c5, k4)
