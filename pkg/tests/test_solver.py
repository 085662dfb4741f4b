import json
from itertools import product

import pytest

from stardecomp.graphs import (
    complete_graph,
    disjoint_cliques,
    empty_graph,
    graph_from_edges,
)
from stardecomp.oracle import enumerate_min_deficiency
from stardecomp.solver import (
    DeficiencyWitness,
    RepairLimitReached,
    Star,
    StarDecomposition,
    balanced_gamma,
    decide_star_decomposition,
    decompose_complete,
    decompose_with_repair,
    decomposition_to_dot,
    deficiency,
    is_precentral,
    shrink_witness,
    two_star_decompose,
    validate_decomposition,
)


def test_deficiency_empty_set_is_zero():
    g = complete_graph(4)
    w = deficiency(g, 2, (1, 1, 1, 0), ())
    assert (w.delta_plus, w.delta_minus, w.delta) == (0, 0, 0)


def test_deficiency_hand_counts_on_claw():
    g = graph_from_edges(3, [(0, 1), (0, 2)])  # star with center 0
    center = deficiency(g, 2, (1, 0, 0), [0])
    assert (center.delta_plus, center.delta_minus, center.delta) == (2, 2, 0)
    leaf = deficiency(g, 2, (1, 0, 0), [1])
    assert (leaf.delta_plus, leaf.delta_minus, leaf.delta) == (1, 0, 1)


def test_is_precentral():
    g = complete_graph(6)
    assert is_precentral(g, 3, (1, 1, 1, 1, 1, 0))
    assert not is_precentral(g, 3, (1, 1, 1, 1, 1, 1))


def test_decide_on_k6_keeps_requested_centers():
    g = complete_graph(6)
    gamma = (1, 1, 1, 1, 1, 0)
    result = decide_star_decomposition(g, 3, gamma)
    assert isinstance(result, StarDecomposition)
    assert validate_decomposition(g, result) is None
    assert result.central_function(6) == gamma


def test_decide_on_empty_graph():
    result = decide_star_decomposition(empty_graph(4), 3, (0, 0, 0, 0))
    assert isinstance(result, StarDecomposition)
    assert result.stars == ()


def test_decide_rejects_non_precentral():
    with pytest.raises(ValueError):
        decide_star_decomposition(complete_graph(4), 2, (1, 1, 1, 1))


def test_no_gamma_succeeds_on_two_odd_triangles():
    # each component has 3 edges, so no 2-star decomposition at all; every
    # one of the C(8,5) = 56 raw 2-precentral functions must get a witness
    g = disjoint_cliques([3, 3])
    seen = 0
    for gamma in product(range(4), repeat=6):
        if sum(gamma) != 3:
            continue
        seen += 1
        result = decide_star_decomposition(g, 2, gamma)
        assert isinstance(result, DeficiencyWitness)
        assert result.delta < 0
        recheck = deficiency(g, 2, gamma, result.vertices)
        assert recheck.delta == result.delta
    assert seen == 56


def test_witness_is_within_gamma_support_and_matches_oracle():
    g = disjoint_cliques([3, 3])
    gamma = (1, 1, 0, 1, 0, 0)
    result = decide_star_decomposition(g, 2, gamma)
    assert isinstance(result, DeficiencyWitness)
    assert all(gamma[x] >= 1 for x in result.vertices)
    best_delta, _ = enumerate_min_deficiency(g, 2, gamma)
    assert best_delta < 0
    assert result.delta >= best_delta


def test_validate_reports_duplicate_and_missing_edges():
    g = complete_graph(4)
    dup = StarDecomposition(
        2, (Star(0, (1, 2)), Star(0, (1, 3)), Star(2, (1, 3)))
    )
    assert "covered twice" in validate_decomposition(g, dup)
    partial = StarDecomposition(2, (Star(0, (1, 2)), Star(3, (1, 2))))
    assert "uncovered" in validate_decomposition(g, partial)
    assert validate_decomposition(g, partial, require_full=False) is None


def test_validate_reports_structural_problems():
    g = complete_graph(4)
    assert "leaves" in validate_decomposition(g, StarDecomposition(2, (Star(0, (1,)),)))
    assert "repeats" in validate_decomposition(g, StarDecomposition(2, (Star(0, (1, 1)),)))
    assert "center" in validate_decomposition(g, StarDecomposition(2, (Star(0, (0, 1)),)))
    assert "not in the graph" in validate_decomposition(
        graph_from_edges(4, [(0, 1)]), StarDecomposition(2, (Star(0, (1, 2)),))
    )


@pytest.mark.parametrize(
    "n,k,stars", [(6, 3, 5), (9, 4, 9), (1, 5, 0), (2, 2, None), (5, 3, None)]
)
def test_decompose_complete_cases(n, k, stars):
    result = decompose_complete(n, k)
    if stars is None:
        assert result is None
    else:
        assert len(result.stars) == stars
        assert validate_decomposition(complete_graph(n), result) is None


def test_balanced_gamma_spread():
    g = complete_graph(9)
    assert balanced_gamma(g, 4) == (1, 1, 1, 1, 1, 1, 1, 1, 1)
    g6 = complete_graph(6)
    assert balanced_gamma(g6, 3) == (1, 1, 1, 1, 1, 0)


def test_decompose_with_repair_on_near_complete_graph():
    g = complete_graph(8).without_edges({(0, 1)})
    dec = decompose_with_repair(g, 3)
    assert len(dec.stars) == 9
    assert validate_decomposition(g, dec) is None


def test_decompose_with_repair_gives_up_cleanly():
    # two triangles admit no 2-star decomposition at all
    with pytest.raises(RepairLimitReached):
        decompose_with_repair(disjoint_cliques([3, 3]), 2)


def test_two_star_path():
    path = graph_from_edges(3, [(0, 1), (1, 2)])
    dec = two_star_decompose(path)
    assert len(dec.stars) == 1
    assert validate_decomposition(path, dec) is None


def test_two_star_triangle_fails():
    assert two_star_decompose(complete_graph(3)) is None


def test_two_star_k5():
    g = complete_graph(5)
    dec = two_star_decompose(g)
    assert len(dec.stars) == 5
    assert validate_decomposition(g, dec) is None


def test_two_star_disconnected_components():
    g = graph_from_edges(7, [(0, 1), (1, 2), (3, 4), (4, 5), (5, 3), (3, 6)])
    dec = two_star_decompose(g)
    assert validate_decomposition(g, dec) is None


def test_shrink_drops_zero_gamma_vertices():
    g = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])  # claw, center 0
    gamma = (0, 1, 0, 0)
    start = deficiency(g, 3, gamma, [1, 2])
    assert start.delta < 0
    shrunk = shrink_witness(g, 3, gamma, [1, 2])
    assert shrunk == (1,)
    assert deficiency(g, 3, gamma, shrunk).delta <= start.delta


def test_shrink_keeps_clean_witness():
    g = graph_from_edges(4, [(0, 1), (0, 2), (0, 3)])
    gamma = (0, 1, 0, 0)
    assert shrink_witness(g, 3, gamma, [1]) == (1,)


def test_shrink_requires_negative_deficiency():
    g = complete_graph(3)
    # T = {1} has deficiency 2 - 0 = 2, not a witness
    with pytest.raises(ValueError):
        shrink_witness(g, 3, (1, 0, 0), [1])


def test_decomposition_json_round_trip():
    dec = decompose_complete(6, 3)
    data = json.loads(json.dumps(dec.to_json_dict()))
    assert StarDecomposition.from_json_dict(data) == dec


def test_witness_json_round_trip():
    w = DeficiencyWitness((1, 4), 3, 6)
    assert DeficiencyWitness.from_json_dict(w.to_json_dict()) == w
    bad = w.to_json_dict() | {"delta": 99}
    with pytest.raises(ValueError):
        DeficiencyWitness.from_json_dict(bad)


def test_dot_export_mentions_every_edge():
    g = complete_graph(4)
    dec = two_star_decompose(g)
    dot = decomposition_to_dot(g, dec)
    assert dot.startswith("graph stars {")
    for u, v in g.sorted_edges:
        assert f"{u} -- {v}" in dot
