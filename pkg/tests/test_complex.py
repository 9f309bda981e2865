from __future__ import annotations

import pytest

from hommodels.complex import (
    SimplicialComplex,
    barycentric,
    boundary_complex,
    boundary_of_simplex,
    cone,
    connected_components,
    f_vector,
    face_poset,
    induced_subcomplex,
    is_flag,
    is_full_subcomplex,
    is_pure,
    join,
    link,
    simplex,
    simplicial_neighborhood,
    sphere_verdict,
    star,
)
from hommodels.errors import ComplexError
from hommodels.homology import homology_summary
from hommodels.models import CERTIFIED_BALL, CERTIFIED_SPHERE, HOMOLOGY_SPHERE, NO, OTHER


def test_from_faces_requires_closure():
    with pytest.raises(ComplexError):
        SimplicialComplex.from_faces([(0, 1)])
    k = SimplicialComplex.from_facets([(0, 1, 2)])
    assert f_vector(k).counts == (3, 3, 1)
    assert (0, 2) in k and (0, 3) not in k


def test_empty_and_void_are_distinct():
    empty, void = SimplicialComplex.empty(), SimplicialComplex.void()
    assert empty.is_empty and not empty.is_void
    assert void.is_void and not void.is_empty
    assert empty != void
    assert () in empty and () not in void
    circle = boundary_of_simplex(2)
    assert join(circle, empty) == circle
    assert join(circle, void).is_void


def test_join_of_two_s0_is_a_square():
    s0 = boundary_of_simplex(1)
    square = join(s0, s0)
    assert f_vector(square).counts == (4, 4)
    assert sphere_verdict(square).kind == CERTIFIED_SPHERE


def test_link_and_star():
    tetra = boundary_of_simplex(3)
    assert f_vector(link(tetra, (0,))).counts == (3, 3)
    assert f_vector(link(tetra, (0, 1))).counts == (2,)
    assert link(tetra, ()) == tetra
    assert f_vector(star(tetra, (0,))).counts == (4, 6, 3)
    with pytest.raises(ComplexError):
        link(tetra, (0, 1, 2, 3))


def test_induced_and_full_subcomplexes():
    tetra = boundary_of_simplex(3)
    tri = induced_subcomplex(tetra, [0, 1, 2])
    assert tri == simplex(2)
    assert is_full_subcomplex(tri, tetra)
    assert not is_full_subcomplex(boundary_of_simplex(2), tetra)


def test_face_poset_and_barycentric():
    assert len(face_poset(boundary_of_simplex(3))) == 14
    assert f_vector(barycentric(simplex(2))).counts == (7, 12, 6)
    with pytest.raises(ComplexError):
        face_poset(SimplicialComplex.empty())


def test_boundary_cone_and_flags():
    assert boundary_complex(simplex(2)) == boundary_of_simplex(2)
    disk = cone(boundary_of_simplex(2))
    assert f_vector(disk).counts == (4, 6, 3)
    assert is_pure(disk)
    assert not is_flag(boundary_of_simplex(2))
    assert is_flag(simplex(2))
    assert connected_components(boundary_of_simplex(1)) == 2


def test_simplicial_neighborhood_of_a_vertex_on_a_path():
    path = SimplicialComplex.from_facets([(0, 1), (1, 2), (2, 3), (3, 4)])
    point = SimplicialComplex.from_facets([(2,)])
    nb = simplicial_neighborhood(path, point)
    assert nb.closed == SimplicialComplex.from_facets([(1, 2), (2, 3)])
    assert nb.boundary == SimplicialComplex.from_facets([(1,), (3,)])
    assert nb.full
    with pytest.raises(ComplexError):
        simplicial_neighborhood(path, SimplicialComplex.from_facets([(0, 4)]))


@pytest.mark.parametrize(
    "k,kind,dim",
    [
        (SimplicialComplex.empty(), CERTIFIED_SPHERE, -1),
        (boundary_of_simplex(1), CERTIFIED_SPHERE, 0),
        (simplex(0), CERTIFIED_BALL, 0),
        (boundary_of_simplex(2), CERTIFIED_SPHERE, 1),
        (simplex(1), CERTIFIED_BALL, 1),
        (boundary_of_simplex(3), CERTIFIED_SPHERE, 2),
        (simplex(2), CERTIFIED_BALL, 2),
        (boundary_of_simplex(4), HOMOLOGY_SPHERE, 3),
    ],
)
def test_sphere_verdicts(k, kind, dim):
    verdict = sphere_verdict(k)
    assert (verdict.kind, verdict.dim) == (kind, dim)


def test_non_spheres(rp2):
    assert sphere_verdict(SimplicialComplex.void()).kind == NO
    assert sphere_verdict(SimplicialComplex.from_facets([(0,), (1,), (2,)])).kind == NO
    assert sphere_verdict(rp2).kind == OTHER
    bowtie = SimplicialComplex.from_facets([(0, 1, 2), (0, 3, 4)])
    assert sphere_verdict(bowtie).kind == NO


def _triangle_and_far_triangle():
    return boundary_of_simplex(2, (1, 2, 3)), boundary_of_simplex(2, (4, 5, 6))


@pytest.mark.parametrize("sigma,tau", [((1,), (4,)), ((1,), ()), ((), (5,)), ((1, 2), (4,)), ((2, 3), (5, 6))])
def test_link_of_a_join_face_is_the_join_of_links(sigma, tau):
    k, l = _triangle_and_far_triangle()
    expected = join(link(k, sigma), link(l, tau))
    assert link(join(k, l), sigma + tau) == expected


@pytest.mark.parametrize(
    "k,l",
    [
        _triangle_and_far_triangle(),
        (boundary_of_simplex(2), boundary_of_simplex(1, (7, 8))),
        (simplex(2), boundary_of_simplex(1, (7, 8))),
        (boundary_of_simplex(1), boundary_of_simplex(1, (5, 6))),
    ],
)
def test_reduced_euler_characteristic_of_a_join(k, l):
    def reduced(x):
        return f_vector(x).euler - 1

    assert reduced(join(k, l)) == -reduced(k) * reduced(l)


def test_barycentric_subdivision_keeps_homology(rp2, hexagon):
    for k in (rp2, hexagon, boundary_of_simplex(3)):
        before, after = homology_summary(k), homology_summary(barycentric(k))
        assert after.groups() == before.groups()
        assert after.betti_mod2 == before.betti_mod2


@pytest.mark.parametrize("x_facets", [[(0,)], [(0, 1)], [(0, 1), (1, 2)], [(0,), (3,)]])
def test_simplicial_neighborhood_contains_x_and_its_boundary_avoids_x(hexagon, x_facets):
    x = SimplicialComplex.from_facets(x_facets)
    nb = simplicial_neighborhood(hexagon, x)
    x_faces = set(x.all_faces())
    assert x_faces <= set(nb.closed.all_faces())
    assert x_faces.isdisjoint(nb.boundary.all_faces())
    assert set(nb.boundary.all_faces()) <= set(nb.closed.all_faces())
