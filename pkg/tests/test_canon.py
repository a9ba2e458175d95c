import random
from itertools import combinations, permutations

from defram import (
    canonical_form,
    canonical_labeling,
    automorphism_generators,
    automorphism_orbit,
    complete_graph,
    cycle_graph,
    empty_graph,
    isomorphic_bruteforce,
    make_graph,
    path_graph,
    star_graph,
)
from defram.graphs import relabel


def test_canonical_form_examples():
    c4 = cycle_graph(4)
    for perm in permutations(range(4)):
        assert canonical_form(relabel(c4, perm)) == canonical_form(c4)
    assert canonical_form(path_graph(4)) != canonical_form(star_graph(3))


def test_labeled_census_order_4():
    forms = set()
    for bits_ in range(1 << 6):
        edges = [e for idx, e in enumerate(combinations(range(4), 2))
                 if (bits_ >> idx) & 1]
        forms.add(canonical_form(make_graph(4, edges)))
    assert len(forms) == 11


def test_labeled_census_order_5():
    forms = set()
    for bits_ in range(1 << 10):
        edges = [e for idx, e in enumerate(combinations(range(5), 2))
                 if (bits_ >> idx) & 1]
        forms.add(canonical_form(make_graph(5, edges)))
    assert len(forms) == 34


def test_canonical_labeling_realises_form():
    g = make_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (4, 5)])
    lab = canonical_labeling(g)
    inverse = [0] * 6
    for pos, v in enumerate(lab):
        inverse[v] = pos
    assert canonical_form(relabel(g, tuple(inverse))) == canonical_form(g)


def test_canonical_soundness_all_pairs_order_6(all_levels_6):
    graphs = all_levels_6[6]
    forms = [canonical_form(g) for g in graphs]
    assert len(set(forms)) == len(graphs)
    rng = random.Random(3)
    # enumerated representatives are pairwise non-isomorphic
    for a in range(len(graphs)):
        for b in range(a + 1, len(graphs)):
            assert not isomorphic_bruteforce(graphs[a], graphs[b])
    # and relabelings always land on the same form
    for g in graphs:
        perm = list(range(6))
        rng.shuffle(perm)
        h = relabel(g, tuple(perm))
        assert canonical_form(h) == canonical_form(g)
        assert isomorphic_bruteforce(g, h)


def test_automorphism_generators_generate_symmetries():
    assert automorphism_orbit(cycle_graph(5), 0) == set(range(5))
    assert automorphism_orbit(empty_graph(7), 3) == set(range(7))
    assert automorphism_orbit(complete_graph(6), 0) == set(range(6))
    star = star_graph(4)
    assert automorphism_orbit(star, 1) == {1, 2, 3, 4}
    assert automorphism_orbit(star, 0) == {0}
    for gen in automorphism_generators(cycle_graph(8)):
        assert relabel(cycle_graph(8), gen) == cycle_graph(8)


def test_highly_symmetric_graphs_do_not_blow_up():
    # factorial-shaped searches would hang on these
    for g in (empty_graph(16), complete_graph(16), complete_graph(8),
              cycle_graph(12), star_graph(15)):
        canonical_form(g)
