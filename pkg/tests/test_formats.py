from __future__ import annotations

from pathlib import Path

import pytest

from hommodels.complex import f_vector
from hommodels.errors import DomainError, FormatError
from hommodels.formats import (
    format_covers,
    format_edge_list,
    format_face_list,
    format_homology,
    format_multihom,
    format_payload,
    parse_edge_list,
    parse_face_list,
    parse_graph_literal,
    parse_homology,
    parse_multihom,
    parse_poset_literal,
    read_edge_list,
)
from hommodels.graph import build_named
from hommodels.homcomplex import hom_poset
from hommodels.homology import homology_summary
from hommodels.models import MultiHom, VertexSet
from hommodels.poset import Interval, Op, chain

GOLDEN = Path(__file__).parent / "golden"

PENTAGON = """\
# the 5-cycle
n 5
1 2
2 3
3 4
4 5
1 5
"""


def test_parse_edge_list():
    g = parse_edge_list(PENTAGON, name="C_5")
    assert g.vertices == build_named("cycle", 5).vertices
    assert g.edges == build_named("cycle", 5).edges
    assert format_edge_list(g).splitlines()[0] == "n 5"
    zero_based = parse_edge_list("n 3 0\n0 1\n1 2\n")
    assert zero_based.vertices == (0, 1, 2)
    assert format_edge_list(zero_based).startswith("n 3 0\n")


@pytest.mark.parametrize(
    "text,line",
    [
        ("n 3\n1 1\n", 2),
        ("n 3\n1 2\n2 1\n", 3),
        ("n 3\n1 4\n", 2),
        ("n 3\n1 2 3\n", 2),
        ("n 3\n1 x\n", 2),
        ("edges 3\n", 1),
    ],
)
def test_edge_list_errors_carry_line(text, line):
    with pytest.raises(FormatError) as err:
        parse_edge_list(text)
    assert err.value.line == line


def test_read_edge_list_uses_file_stem(tmp_path):
    path = tmp_path / "pentagon.txt"
    path.write_text(PENTAGON, encoding="utf-8")
    assert read_edge_list(path).label() == "pentagon"


def test_face_lists(hexagon):
    text = format_face_list(hexagon)
    assert parse_face_list(text) == hexagon
    closed = parse_face_list("0 1 2\n")
    assert f_vector(closed).counts == (3, 3, 1)
    with pytest.raises(FormatError):
        parse_face_list("0 0 1\n")


def test_multihom_text():
    phi = MultiHom((1, 3, 5), (VertexSet.of([1]), VertexSet.of([1, 2]), VertexSet.of([3])))
    text = format_multihom(phi)
    assert text == "1: {1}\n3: {1,2}\n5: {3}\n"
    assert parse_multihom(text) == phi
    with pytest.raises(FormatError):
        parse_multihom("1: {}\n")


def test_payload_formatting():
    assert format_payload(Op(Interval(1, 2))) == "[1,2]^op"
    assert format_payload((1, 2, 3)) == "{1,2,3}"
    assert format_payload(VertexSet.of([2, 4])) == "{2,4}"
    assert format_covers(chain(3)) == "0 < 1\n1 < 2\n"


def test_homology_text(rp2):
    h = homology_summary(rp2)
    text = format_homology(h)
    assert text.splitlines()[1] == "1: b=0 torsion=[2] b2=1"
    assert parse_homology(text) == h
    with pytest.raises(FormatError):
        parse_homology("1: b=0 torsion=[] b2=0\n")


def test_literals():
    assert parse_graph_literal("complete:4").label() == "K_4"
    assert len(parse_poset_literal("boundary:2")) == 6
    assert len(parse_poset_literal("simplex:2")) == 7
    assert len(parse_poset_literal("antichain:4")) == 4
    for bad in ("cycle", "cycle:x", "torus:3"):
        with pytest.raises(DomainError):
            parse_graph_literal(bad)
    with pytest.raises(DomainError):
        parse_poset_literal("lattice:3")


def test_cover_listing_matches_golden_file():
    expected = (GOLDEN / "hom_p1_k3_covers.txt").read_text(encoding="utf-8")
    assert format_covers(hom_poset(build_named("path", 1), build_named("complete", 3))) == expected
