from fractions import Fraction

import pytest

import subgroup_genus as sg


def test_group_and_lattice():
    g = sg.build_group("S(4)")
    assert g.order == 24 and not g.is_abelian
    lat = sg.subgroup_lattice(g)
    assert len(lat) == 30
    assert lat.census() == {1: 1, 2: 9, 3: 4, 4: 7, 6: 4, 8: 3, 12: 1, 24: 1}
    other = sg.subgroup_lattice(g, algorithm="extension")
    assert other.orders() == lat.orders()


def test_klein_hasse_graph():
    h = sg.subgroup_lattice(sg.build_group("A(2,2)")).hasse_graph()
    assert (h.vertex_count, h.edge_count) == (5, 6)
    assert sg.is_triangle_free(h) and sg.is_planar(h)
    assert sg.Graph.from_json(h.to_json()) == h


def test_genus():
    k33 = sg.complete_bipartite(3, 3)
    assert not sg.is_planar(k33)
    assert sg.euler_lower_bound(k33) == (Fraction(1, 4), 1)
    assert sg.exact_genus(k33) == 1
    assert sg.exact_genus(sg.complete(5)) == 1
    assert sg.exact_genus(sg.hypercube(4)) == 1


def test_closed_forms():
    assert sg.qbin(4, 2, 3) == 130
    assert sg.rango_bound(5, 3) == Fraction(31, 2)
    assert sg.ciclo_bound(3) == Fraction(-3, 2)
    b = sg.pls_bound(11)
    assert (b["n"], b["a"], b["b"]) == (6, 2, 3)
    assert b["raw"] == Fraction(1, 4) == b["n_over_24"]


def test_families():
    fam = sg.rank_layer_family(3, 3)
    g = fam.graph()
    assert (g.vertex_count, g.edge_count) == (26, 52)
    assert all(ok for _, ok, _ in fam.invariants())
    assert fam.bounds()["euler_raw"] == sg.rango_bound(3, 3) + 1
    cube = sg.sylow_hypercube(sg.build_group("C(30)"))
    assert cube.parameters == {"t": 3}
    pls = sg.psl_dihedral_family(13)
    assert pls.kind == "psl-dihedral" or pls.parameters["q"] == 13


def test_errors():
    with pytest.raises(sg.Error) as exc:
        sg.build_group("PSL(2,")
    assert exc.value.kind == "ParseError"
    with pytest.raises(sg.Error) as exc:
        sg.euler_lower_bound(sg.complete(3))
    assert exc.value.kind == "NotTriangleFree"
    with pytest.raises(sg.Error):
        sg.build_group("C(30000)")
