from __future__ import annotations

import pytest

from hommodels.config import Budgets
from hommodels.errors import DomainError
from hommodels.formats import parse_poset_literal
from hommodels.graph import build_named
from hommodels.models import FAIL, PASS, SKIPPED
from hommodels.neighborhoods import build_NB
from hommodels.poset import PosetMap
from hommodels.verify import (
    acceptance_battery,
    expected_stiefel,
    known_hom_homology,
    run_scenario,
    stiefel_faces,
    stiefel_map,
    stiefel_target,
    triple_involution,
    verify_box_vs_neighborhood,
    verify_dual_decomposition,
    verify_full_vs_small_homology,
    verify_independence_ball,
    verify_involution_equivariance,
    verify_manifold_criterion,
    verify_neighborhood_negative_control,
    verify_restriction_example,
    verify_slice_cover,
    verify_slice_embedding,
    verify_small_model_homology,
    verify_stiefel_iso,
    verify_stiefel_negative_control,
    verify_subdivision_suite,
)


def _passed(report):
    assert report.status == PASS, [c for c in report.checks if c.status != PASS]
    return report


def test_expected_table():
    assert expected_stiefel(2)["groups"] == ["Z", "Z/2", "0", "Z"]
    assert expected_stiefel(3)["mod2"] == [1, 0, 1, 1, 0, 1]
    assert expected_stiefel(4)["groups"] == ["Z", "0", "0", "Z/2", "0", "0", "0", "Z"]
    with pytest.raises(DomainError):
        expected_stiefel(9)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_stiefel_target_is_b(n):
    _, b = build_NB(stiefel_faces(n))
    assert stiefel_target(n).same_as(b)


def test_stiefel_iso_n0_is_empty():
    report = _passed(verify_stiefel_iso(0))
    assert report.counts == {"small": 0, "target": 0}


def test_stiefel_iso_n1():
    report = _passed(verify_stiefel_iso(1))
    assert report.counts == {"small": 36, "target": 36}


def test_stiefel_iso_n2():
    _passed(verify_stiefel_iso(2))


@pytest.mark.slow
def test_stiefel_iso_n3():
    _passed(verify_stiefel_iso(3))


def test_stiefel_iso_rejects_n_out_of_range():
    with pytest.raises(DomainError):
        verify_stiefel_iso(4)
    with pytest.raises(DomainError):
        verify_stiefel_iso(-1)


def test_negative_control_fails_on_c7():
    inner = verify_stiefel_iso(1, cycle=7)
    assert inner.status == FAIL
    _passed(verify_stiefel_negative_control())


def test_triple_involution_is_an_automorphism():
    target = stiefel_target(1)
    tau = PosetMap.from_payload_fn(target, target, triple_involution(1))
    assert tau.is_isomorphism() and tau.is_involution()
    assert stiefel_map(1) is not None


@pytest.mark.parametrize("n,groups", [(0, []), (1, ["Z^2", "Z^2"]), (2, ["Z", "Z/2", "0", "Z"])])
def test_small_model_homology(n, groups):
    report = _passed(verify_small_model_homology(n))
    assert report.homology["small"].groups() == groups


@pytest.mark.slow
def test_small_model_homology_n3_mod2():
    report = _passed(verify_small_model_homology(3, mod2_only=True))
    assert list(report.homology["small"].mod2()) == [1, 0, 1, 1, 0, 1]


def test_small_model_homology_skips_over_budget(tiny_budgets):
    report = verify_small_model_homology(1, budgets=tiny_budgets)
    assert report.status == SKIPPED
    assert not report.failed


@pytest.mark.parametrize("n", [0, 1])
def test_full_vs_small(n):
    _passed(verify_full_vs_small_homology(n))


def test_full_vs_small_counts_for_k3():
    report = verify_full_vs_small_homology(1)
    assert report.counts["full vertex cells"] == 30
    assert report.counts["small"] == 36


@pytest.mark.slow
def test_full_vs_small_n2():
    report = _passed(verify_full_vs_small_homology(2))
    assert report.counts["full vertex cells"] == 240


def test_full_vs_small_limited_to_n2():
    with pytest.raises(DomainError):
        verify_full_vs_small_homology(3)


@pytest.mark.parametrize("n", [0, 1, 2])
def test_involution_equivariance(n):
    _passed(verify_involution_equivariance(n))


def test_manifold_criterion_c5_k3(c5):
    report = _passed(verify_manifold_criterion(c5, 3))
    assert report.counts["dim"] == 1
    assert report.counts["vertex cells"] == 30
    assert report.homology["Hom"].groups() == ["Z^2", "Z^2"]


def test_manifold_criterion_k2_k4(k2):
    report = _passed(verify_manifold_criterion(k2, 4))
    assert report.counts["dim"] == 2
    assert report.homology["Hom"].groups() == ["Z", "0", "Z"]


@pytest.mark.slow
def test_manifold_criterion_c5_default_n(c5):
    report = _passed(verify_manifold_criterion(c5))
    assert report.params["n"] == 4
    assert report.counts["dim"] == 3
    assert report.homology["Hom"].groups() == ["Z", "Z/2", "0", "Z"]


def test_dual_decomposition_c5(c5):
    report = _passed(verify_dual_decomposition(c5, [2, 4]))
    assert report.counts["nonempty C_M"] == 10


@pytest.mark.parametrize("graph,s", [(build_named("complete", 2), [1]), (build_named("cycle", 5), [2])])
def test_dual_decomposition_other_cases(graph, s):
    _passed(verify_dual_decomposition(graph, s))


def test_dual_decomposition_preconditions(c5):
    with pytest.raises(DomainError):
        verify_dual_decomposition(c5, [1, 2])
    with pytest.raises(DomainError):
        verify_dual_decomposition(build_named("path", 2), [0])


@pytest.mark.parametrize("literal", ["chain:3", "boundary:2"])
def test_subdivision_suite(literal):
    report = _passed(verify_subdivision_suite(parse_poset_literal(literal), name=literal))
    if literal == "boundary:2":
        assert report.counts["Int P"] == 12
        assert report.homology["Int P"].groups() == ["Z", "Z"]


@pytest.mark.slow
def test_subdivision_suite_tetrahedron():
    report = _passed(verify_subdivision_suite(parse_poset_literal("boundary:3"), name="boundary:3"))
    assert report.homology["Int P"].groups() == ["Z", "0", "Z"]


@pytest.mark.parametrize("n", range(5))
def test_restriction_example(n):
    report = _passed(verify_restriction_example(n))
    assert report.counts["small"] == 2 ** (n + 2) - 2


@pytest.mark.parametrize("h", [build_named("complete", 3), build_named("cycle", 5), build_named("path", 3)])
def test_box_vs_neighborhood(h):
    _passed(verify_box_vs_neighborhood(h))


def test_independence_ball(c5):
    _passed(verify_independence_ball(c5, [2, 4]))
    _passed(verify_independence_ball(c5, [3]))
    with pytest.raises(DomainError):
        verify_independence_ball(c5, [])


def test_slice_cover(c5):
    report = _passed(verify_slice_cover(c5, [2, 4]))
    assert report.counts["subsets"] == 31


@pytest.mark.parametrize("s", [(), (2, 4)])
def test_slice_embedding(c5, s):
    _passed(verify_slice_embedding(c5, 3, s=s))


def test_run_scenario_dispatch():
    assert run_scenario("stiefel", {"n": 1}).status == PASS
    with pytest.raises(DomainError):
        run_scenario("stiefel", {})
    with pytest.raises(DomainError):
        run_scenario("nonsense", {"n": 1})


def test_reports_do_not_depend_on_threads():
    one = verify_stiefel_iso(1, Budgets(threads=1)).to_dict()
    many = verify_stiefel_iso(1, Budgets(threads=4)).to_dict()
    assert one == many


def test_acceptance_battery_respects_budgets():
    jobs = acceptance_battery(Budgets(max_n=2, stretch_n=2))
    assert ("stiefel", {"n": 3}) not in jobs
    assert ("stiefel", {"n": 2}) in jobs
    assert not any(name == "small-homology" and params.get("n") == 4 for name, params in jobs)


def test_neighborhood_negative_control_rejects_the_segment():
    report = _passed(verify_neighborhood_negative_control())
    assert report.params == {"P": "simplex:1"}
    assert run_scenario("neighborhood-negative-control", {}).status == PASS
    assert ("neighborhood-negative-control", {}) in acceptance_battery(Budgets(max_n=1, stretch_n=1))


@pytest.mark.parametrize(
    "graph,n,groups",
    [
        (build_named("cycle", 5), 3, ["Z^2", "Z^2"]),
        (build_named("cycle", 5), 4, ["Z", "Z/2", "0", "Z"]),
        (build_named("complete", 2), 4, ["Z", "0", "Z"]),
        (build_named("complete", 2), 3, ["Z", "Z"]),
        (build_named("complete", 2), 2, ["Z^2"]),
        (build_named("path", 2), 3, None),
        (build_named("cycle", 5), 1, None),
        (build_named("cycle", 5), 20, None),
    ],
)
def test_known_hom_homology(graph, n, groups):
    assert known_hom_homology(graph, n) == groups


def test_manifold_criterion_compares_known_homology(c5, k2):
    for g, n in ((c5, 3), (k2, 4)):
        report = _passed(verify_manifold_criterion(g, n))
        (known,) = [c for c in report.checks if c.name == "homology of the known space"]
        assert known.status == PASS
    report = verify_manifold_criterion(build_named("path", 2), 3)
    assert not [c for c in report.checks if c.name == "homology of the known space"]
