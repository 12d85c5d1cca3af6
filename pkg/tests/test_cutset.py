import random

from conftest import complete, cycle, path, random_graph
from p7c4c5.cutset import (
    decompose,
    has_clique_cutset,
    merge_colorings,
    tree_violations,
)
from p7c4c5.graph import Graph, bit_list, bits, mask_of
from p7c4c5.oracle import brute_chromatic


def _check_cut(g, res):
    s, a, b = res
    assert g.is_clique(s)
    assert a and b
    assert (s | a | b) == g.all_mask
    assert not (s & a) and not (s & b) and not (a & b)
    assert g.is_anticomplete_to(a, b)


def _reference_has_cutset(g):
    """Exponential check: does any clique separate the graph?"""
    if len(g.components()) > 1:
        return True
    import itertools

    for r in range(0, g.n - 1):
        for sub in itertools.combinations(range(g.n), r):
            s = mask_of(sub)
            if not g.is_clique(s):
                continue
            if len(g.components(within=g.all_mask & ~s)) > 1:
                return True
    return False


def test_atoms_and_cuts_small():
    assert has_clique_cutset(complete(5)) is None
    assert has_clique_cutset(cycle(6)) is None
    res = has_clique_cutset(path(5))
    assert res is not None
    _check_cut(path(5), res)


def test_per_vertex_scan_alone_can_miss():
    # three disjoint edges cross-linked so that {0,1} is the only clique
    # cutset; no vertex's deleted neighborhood reveals it
    g = Graph.build(6, [(0, 1), (2, 3), (4, 5), (2, 0), (3, 1), (4, 0), (5, 1)])
    assert has_clique_cutset(g, use_fallback=False) is None
    res = has_clique_cutset(g)
    assert res is not None
    _check_cut(g, res)
    assert bit_list(res[0]) == [0, 1]


def test_cutset_detection_matches_reference():
    rng = random.Random(1)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 8), rng.choice([0.2, 0.4, 0.6, 0.8]))
        res = has_clique_cutset(g)
        assert (res is not None) == _reference_has_cutset(g), g.edges()
        if res is not None and len(g.components()) == 1:
            _check_cut(g, res)


def test_decompose_tree_invariants():
    rng = random.Random(2)
    for _ in range(250):
        g = random_graph(rng, rng.randint(1, 10), rng.choice([0.2, 0.4, 0.6, 0.8]))
        tree = decompose(g)
        assert tree_violations(g, tree) == []


def test_merge_colorings_produces_proper_optimal():
    from p7c4c5.chordal import chordal_coloring, is_chordal

    rng = random.Random(3)
    done = 0
    for _ in range(400):
        g = random_graph(rng, rng.randint(2, 10), rng.choice([0.3, 0.5]))
        if not is_chordal(g):
            continue
        done += 1
        tree = decompose(g)
        leaf_colorings = {
            id(leaf): chordal_coloring(leaf.graph) for leaf in tree.leaves()
        }
        colors = merge_colorings(g, tree, leaf_colorings)
        assert all(colors[u] != colors[v] for u, v in g.edges())
        assert max(colors) == brute_chromatic(g)
    assert done > 100
