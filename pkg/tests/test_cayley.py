import json

import pytest

from cactuskit.cayley import CayleyGraph, build_window, export_dot, export_json
from cactuskit.degree3 import CanonicalForm, canonicalize, mul, to_word
from cactuskit.words import Word


def test_zero_radius_window():
    g = build_window("J3_2", 0)
    assert g.vertices == (CanonicalForm(0, 0),)
    assert g.edges == ()


def test_small_dihedral_window_is_a_path():
    g = build_window("J3_2", 2)
    assert sorted(v.m for v in g.vertices) == [-2, -1, 0, 1, 2]
    assert all(v.eps == 0 for v in g.vertices)
    assert len(g.edges) == 4
    assert sorted((src.m, dst.m) for src, dst, _ in g.edges) == [
        (-2, -1),
        (-1, 0),
        (0, 1),
        (1, 2),
    ]


def test_small_full_window():
    g = build_window("J3", 1)
    assert set(g.vertices) == {
        CanonicalForm(0, 0),
        CanonicalForm(1, 0),
        CanonicalForm(-1, 0),
        CanonicalForm(0, 1),
    }
    assert len(g.edges) == 3
    for src, dst, _ in g.edges:
        assert CanonicalForm(0, 0) in (src, dst)


def test_dihedral_window_path_shape():
    g = build_window("J3_2", 10)
    assert len(g.vertices) == 21
    for v in g.vertices:
        expected = 1 if abs(v.m) == 10 else 2
        assert g.degree_of(v) == expected


def test_edges_are_right_multiplications():
    for group in ("J3", "J3_2"):
        g = build_window(group, 4)
        for src, dst, gen in g.edges:
            gf = canonicalize(Word(3, (gen,)))
            assert mul(src, gf) == dst
            assert mul(dst, gf) == src  # involutions give undirected edges


def test_edge_label_is_last_letter_of_longer_endpoint():
    g = build_window("J3_2", 12)
    for src, dst, gen in g.edges:
        longer = src if abs(src.m) > abs(dst.m) else dst
        assert to_word(longer).letters[-1] == gen


def test_full_window_vertex_count():
    g = build_window("J3", 3)
    expected = {(m, e) for e in (0, 1) for m in range(-3 + e, 4 - e)}
    assert {(v.m, v.eps) for v in g.vertices} == expected
    assert len(g.vertices) == 12


def test_build_window_validation():
    with pytest.raises(ValueError):
        build_window("J4", 2)
    with pytest.raises(ValueError):
        build_window("J3_2", -1)


def test_export_json_schema():
    g = build_window("J3_2", 1)
    payload = json.loads(export_json(g))
    assert set(payload) == {"group", "radius", "nodes", "edges"}
    assert payload["group"] == "J3_2"
    assert payload["radius"] == 1
    assert [set(n) for n in payload["nodes"]] == [{"id", "m", "eps", "label"}] * 3
    assert payload["nodes"][0] == {"id": 0, "m": -1, "eps": 0, "label": "(m=-1, eps=0)"}
    assert payload["edges"] == [
        {"src": 0, "dst": 1, "gen": "s2,3"},
        {"src": 1, "dst": 2, "gen": "s1,2"},
    ]
    assert export_json(g).endswith("\n")


def test_export_json_ids_index_sorted_nodes():
    g = build_window("J3", 2)
    payload = json.loads(export_json(g))
    keys = [(n["m"], n["eps"]) for n in payload["nodes"]]
    assert keys == sorted(keys)
    assert len(payload["nodes"]) == len(g.vertices)
    for e in payload["edges"]:
        assert e["src"] < e["dst"]


def test_export_dot_golden():
    got = export_dot(build_window("J3_2", 1))
    assert got == (
        'graph "J3_2" {\n'
        '  "(m=-1, eps=0)";\n'
        '  "(m=0, eps=0)";\n'
        '  "(m=1, eps=0)";\n'
        '  "(m=-1, eps=0)" -- "(m=0, eps=0)" [label="s2,3"];\n'
        '  "(m=0, eps=0)" -- "(m=1, eps=0)" [label="s1,2"];\n'
        "}\n"
    )


def test_exports_are_deterministic():
    a = build_window("J3", 3)
    b = build_window("J3", 3)
    assert a == b
    assert export_dot(a) == export_dot(b)
    assert export_json(a) == export_json(b)


def test_degree_of_counts_incident_edges():
    g = CayleyGraph(
        "J3_2",
        1,
        (CanonicalForm(0, 0), CanonicalForm(1, 0)),
        ((CanonicalForm(0, 0), CanonicalForm(1, 0), to_word(CanonicalForm(1, 0)).letters[0]),),
    )
    assert g.degree_of(CanonicalForm(0, 0)) == 1
    assert g.degree_of(CanonicalForm(1, 0)) == 1
