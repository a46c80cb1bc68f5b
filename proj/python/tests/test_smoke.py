import json
import os
import pathlib

import pytest

import labelkit as lk

SOURCE = pathlib.Path(os.environ.get("LABELKIT_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))


def test_version_and_tricks():
    assert lk.__version__ == "0.1.0"
    assert set(lk.tricks()) >= {"zero_one", "drnl", "de", "de_plus", "hasse", "linear"}


def test_graph_basics():
    g = lk.Graph(3, [(0, 1), (1, 2)])
    assert g.n == 3
    assert g.has_edge(1, 0)
    assert g.edges() == [(0, 1), (1, 2)]
    assert lk.Graph.from_json(g.to_json()) == g
    with pytest.raises(lk.LabelkitError):
        lk.Graph(2, [(0, 5)])


def test_drnl_on_cycle():
    c6 = lk.cycle_graph(6)
    assert [row[0] for row in lk.label("drnl", [0, 1], c6)] == [1, 1, 6, 7, 7, 6]
    assert lk.drnl_label(2, 2) == 5


def test_c6_link_needs_labels():
    c6 = lk.cycle_graph(6)
    assert not lk.wl_distinguishes(c6, [0, 1], c6, [0, 2], trick="none")
    assert lk.wl_distinguishes(c6, [0, 1], c6, [0, 2])
    assert not lk.is_isomorphic(c6, [0, 1], c6, [0, 2])
    assert lk.is_isomorphic(c6, [0, 1], c6, [3, 4])
    assert lk.canonical_code(c6, [0]) == lk.canonical_code(c6, [3])


def test_cycle_versus_triangles():
    c6 = lk.cycle_graph(6)
    tt = lk.disjoint_union(lk.complete_graph(3), lk.complete_graph(3))
    everything = list(range(6))
    assert lk.subset_pooling_distinguishes(c6, everything, tt, everything, k=1, readout="labeled_node")
    assert lk.kwl_graph_colors([c6, tt], 2)[0] == lk.kwl_graph_colors([c6, tt], 2)[1]
    colors = lk.kwl_graph_colors([c6, tt], 3)
    assert colors[0] != colors[1]


def test_wl_rounds_and_poset_targets():
    rounds = lk.wl_refine(lk.star_graph(3), depth=1)
    assert len(set(rounds[1])) == 2
    labels = lk.label("linear", "2<0,0<1", lk.path_graph(4))
    assert [r[0] for r in labels] == [2, 3, 1, 0]


def test_heuristics():
    s = lk.score_pair(lk.path_graph(3), 0, 2)
    assert s["cn"] == 1
    assert s["ra"] == pytest.approx(0.5)
    assert s["aa"] == pytest.approx(1.4427, abs=1e-4)


def test_validator_and_audit():
    assert lk.validate_trick("drnl", trials=30, n_max=6)["passed"]
    (res,) = lk.audit("tricks", quick=True)
    assert res["verdict"] == "PASS"
    with pytest.raises(lk.InvalidArgument):
        lk.audit("nope")


def test_shipped_gallery_verifies():
    stored = json.loads((SOURCE / "data" / "gallery.json").read_text())
    assert lk.check_gallery(stored) == len(stored)
    assert lk.gallery() == stored
    stored[0]["expected"]["oracle"] = not stored[0]["expected"]["oracle"]
    with pytest.raises(lk.ValidationError):
        lk.check_gallery(stored)


def test_small_benchmark():
    g = lk.watts_strogatz(60, 4, 0.1, 3)
    m = lk.benchmark(g, labelings=["no", "zo"], seeds=[0], epochs=3)
    assert [r["variant"] for r in m["results"]] == ["no", "zo"]
    assert lk.gradient_check() < 1e-4
    assert lk.evaluate_auc([0.9, 0.1], [1, 0]) == 1.0
