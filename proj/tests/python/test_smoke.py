"""Smoke tests for the python module."""

import liecoh


def test_root_system_basics():
    rs = liecoh.RootSystem("B2")
    assert rs.rank == 2
    assert not rs.simply_laced
    assert len(rs.positive_roots) == 4
    assert rs.rho == [1, 1]
    assert rs.highest_root[0] == [1, 2]
    assert rs.cartan_matrix == [[2, -1], [-2, 2]]
    # the short/long orientation
    assert rs.pairing(rs.simple_root(1), [0, 1]) == -2
    assert rs.pairing(rs.simple_root(2), [1, 0]) == -1


def test_weyl_queries():
    rs = liecoh.RootSystem("B2")
    assert liecoh.w0_word(rs) == [1, 2, 1, 2]
    assert liecoh.length(rs, [1, 2, 1, 2]) == 4
    assert liecoh.weyl_order(rs, [1, 2]) == 8
    assert liecoh.all_reduced_words(rs, [1, 2, 1]) == [[1, 2, 1]]
    assert liecoh.left_descents(rs, [1, 2, 1]) == [1]
    assert liecoh.bruhat_leq(rs, [2], [1, 2, 1])
    a2 = liecoh.RootSystem("A2")
    assert sorted(liecoh.all_reduced_words(a2, [1, 2, 1])) == [[1, 2, 1], [2, 1, 2]]


def test_demazure_and_weyl_characters():
    rs = liecoh.RootSystem("B2")
    v = dict((tuple(w), m) for w, m in liecoh.weyl_character(rs, [1, 0]))
    assert v == {(1, 0): 1, (-1, 2): 1, (0, 0): 1, (1, -2): 1, (-1, 0): 1}
    assert liecoh.weyl_dim(rs, [1, 0]) == 5
    a1 = liecoh.RootSystem("A1")
    assert liecoh.demazure_char(a1, [1], [-1]) == []


def test_witness_tower():
    rs = liecoh.RootSystem("B2")
    alpha1 = rs.simple_root(1)
    h = liecoh.h_line_bundle(rs, [1, 2, 1], alpha1)
    assert h["status"] == "exact"
    assert h["degrees"]["1"] == [
        {"mult": 1, "weight": [-1, 2]},
        {"mult": 1, "weight": [1, 0]},
    ]
    theta = liecoh.bsdh_tangent(rs, [1, 2, 1])
    assert theta["status"] == "exact"
    assert theta["degrees"]["1"] == h["degrees"]["1"]
    transfer = liecoh.h_module_coefficients(rs, [([1, 0], 1), ([-1, 2], 1)])
    assert transfer["status"] == "exact"
    assert len(transfer["degrees"]["0"]) == 5
    assert list(transfer["degrees"].keys()) == ["0"]


def test_twisted_reports():
    a2 = liecoh.RootSystem("A2")
    rep = liecoh.twisted_bsdh_report(a2, [1, 2])
    assert rep["aut0"] == "G"
    assert rep["h1"]["degrees"] == {}
    b2 = liecoh.RootSystem("B2")
    rep = liecoh.twisted_bsdh_report(b2, [1, 2, 1])
    assert rep["aut0"] == "G"
    assert rep["h1"] == {"not_determined": "H^1(G/B, H^0(F, Theta_F)) != 0"}
    try:
        liecoh.twisted_schubert_report(b2, [1])
        assert False, "expected a refusal"
    except liecoh.RefusalError:
        pass


def test_closed_form_and_index():
    rs = liecoh.RootSystem("B2")
    assert rs.is_singular([0, 0])
    assert not rs.is_singular([1, 1])
    assert rs.index([1, 1]) == 0
    g = liecoh.h_full_flag(rs, rs.simple_root(1))
    assert list(g["degrees"].keys()) == ["1"]
    assert len(g["degrees"]["1"]) == 5


def test_string_decomposition_debug_view():
    a1 = liecoh.RootSystem("A1")
    d = liecoh.decompose(a1, [([2], 1), ([0], 2), ([-2], 1)], 1, "strict")
    assert d["ambiguous"] is True
    assert [s["size"] for s in d["strings"]] == [1, 3]
    d = liecoh.decompose(a1, [([0], 1), ([-2], 1)], 1)
    assert d["strings"] == [{"top": [0], "size": 2, "alpha": 1, "twist": -1}]


def test_verify_witness_suite():
    results = liecoh.verify_suite("example-4-12")
    assert all(r["pass"] for r in results)
