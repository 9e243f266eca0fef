"""Graph families, stable-partition counting, and coloring counts against
brute enumeration."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    brute_stable_type_counts,
    chromatic_by_colorings,
    cycle_chromatic,
    falling_factorial,
    tree_chromatic,
)

from cslab import (
    BadSpec,
    Graph,
    NotBipartite,
    Partition,
    TooManyBlocks,
    balanced_stable_bipartition,
    build_family,
    chromatic_polynomial,
    count_stable_partitions,
    enumerate_stable_partitions,
    has_connected_partition,
    independence_number,
    parse_graph_spec,
    random_graph,
    random_tree,
    spider_legs,
)


def is_connected(G: Graph) -> bool:
    if G.n == 0:
        return True
    seen = {0}
    stack = [0]
    adjacency = {v: set() for v in range(G.n)}
    for u, v in G.edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    while stack:
        v = stack.pop()
        for w in adjacency[v] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == G.n


class TestGraphBasics:
    def test_normalizes_edges(self):
        G = Graph(3, frozenset({(2, 0), (0, 1)}))
        assert G.edges == frozenset({(0, 2), (0, 1)})

    def test_rejects_loops_and_out_of_range(self):
        with pytest.raises(BadSpec):
            Graph(3, frozenset({(1, 1)}))
        with pytest.raises(BadSpec):
            Graph(3, frozenset({(0, 3)}))

    def test_degree(self):
        G = build_family("star", 4)
        degrees = sorted(G.degree(v) for v in range(G.n))
        assert degrees == [1, 1, 1, 1, 4]


class TestFamilies:
    def test_path_cycle_star_complete_shapes(self):
        path = build_family("path", 5)
        assert (path.n, path.edge_count) == (5, 4)
        assert max(path.degree(v) for v in range(5)) == 2

        cycle = build_family("cycle", 5)
        assert (cycle.n, cycle.edge_count) == (5, 5)
        assert all(cycle.degree(v) == 2 for v in range(5))

        complete = build_family("complete", 5)
        assert complete.edge_count == 10

        claw = build_family("claw")
        star = build_family("star", 3)
        assert claw.n == 4 and claw.edges == star.edges

    def test_spider_legs_meet_at_one_center(self):
        G = build_family("spider", 4, 2, 1)
        assert (G.n, G.edge_count) == (8, 7)
        degrees = sorted(G.degree(v) for v in range(G.n))
        assert degrees == [1, 1, 1, 2, 2, 2, 2, 3]
        assert spider_legs(G) == Partition((4, 2, 1))

    def test_broom_is_path_plus_pendant_leaves(self):
        G = build_family("broom", 5, 3)
        assert (G.n, G.edge_count) == (9, 8)
        assert spider_legs(G) == Partition((5, 1, 1, 1))

    def test_double_broom_has_two_leaf_bundles(self):
        # dbroom:l,p,r — l and r leaves on two hubs at path distance p.
        G = build_family("dbroom", 2, 3, 4)
        assert (G.n, G.edge_count) == (10, 9)
        degrees = sorted(G.degree(v) for v in range(G.n))
        assert degrees.count(1) == 6
        assert degrees[-2:] == [3, 5]

    def test_spider_legs_rejects_non_spiders(self):
        assert spider_legs(build_family("cycle", 5)) is None
        assert spider_legs(build_family("dbroom", 2, 1, 2)) is None
        # A bare path has no branch vertex, so it is not a spider here.
        assert spider_legs(build_family("path", 5)) is None
        assert spider_legs(build_family("claw")) == Partition((1, 1, 1))

    def test_families_are_connected(self):
        for spec in ("path:6", "cycle:6", "star:5", "complete:4", "claw",
                     "spider:3,2,2", "broom:4,2", "dbroom:3,2,3"):
            assert is_connected(parse_graph_spec(spec)), spec


class TestParsing:
    def test_parses_edge_lists(self):
        G = parse_graph_spec("edges:4:0-1,1-2,2-3")
        assert G.n == 4 and G.edge_count == 3

    def test_round_trips_family_specs(self):
        for spec, n in (("claw", 4), ("path:7", 7), ("spider:4,4,2", 11),
                        ("broom:6,2", 9), ("dbroom:2,5,3", 11)):
            assert parse_graph_spec(spec).n == n, spec

    @pytest.mark.parametrize(
        "bad", ["", "path", "path:", "path:x", "spider:4", "unknown:3",
                "edges:3:0-1,0-5", "edges:3:0"]
    )
    def test_rejects_malformed_specs(self, bad):
        with pytest.raises((BadSpec, ValueError)):
            parse_graph_spec(bad)


class TestStablePartitions:
    @pytest.mark.parametrize(
        "spec",
        ["path:5", "cycle:5", "claw", "complete:4", "spider:2,2,1", "edges:5:0-1,2-3"],
    )
    def test_counts_match_brute_set_partitions(self, spec):
        G = parse_graph_spec(spec)
        assert enumerate_stable_partitions(G) == brute_stable_type_counts(G)

    def test_count_single_type_matches_enumeration(self):
        G = build_family("spider", 3, 2, 1)
        table = enumerate_stable_partitions(G)
        for lam, count in table.items():
            record = count_stable_partitions(G, lam)
            assert record.count == count
            assert record.semi_ordered_count == count * lam.multiplicity_factorial()

    def test_count_scales_past_full_enumeration(self):
        G = build_family("path", 20)
        record = count_stable_partitions(G, Partition((10, 10)))
        assert record.count > 0
        assert record.semi_ordered_count == 2 * record.count

    def test_block_bound_is_enforced(self):
        G = build_family("path", 18)
        with pytest.raises(TooManyBlocks):
            count_stable_partitions(G, Partition((2,) * 9))

    def test_complete_graph_admits_only_singletons(self):
        G = build_family("complete", 5)
        assert enumerate_stable_partitions(G) == {Partition((1,) * 5): 1}


class TestConnectedPartitions:
    def test_path_has_all_types(self):
        G = build_family("path", 7)
        from cslab import enumerate_partitions

        assert all(has_connected_partition(G, lam) for lam in enumerate_partitions(7))

    def test_claw_misses_the_two_two_split(self):
        claw = build_family("claw")
        assert not has_connected_partition(claw, Partition((2, 2)))
        assert has_connected_partition(claw, Partition((3, 1)))


class TestBipartition:
    def test_balanced_and_unbalanced_trees(self):
        assert balanced_stable_bipartition(build_family("path", 6))
        assert not balanced_stable_bipartition(build_family("star", 4))

    def test_odd_cycle_is_not_bipartite(self):
        with pytest.raises(NotBipartite):
            balanced_stable_bipartition(build_family("cycle", 5))


class TestChromaticPolynomial:
    def test_small_graphs_match_coloring_enumeration(self):
        rng = random.Random(3)
        for _ in range(10):
            G = random_graph(5, 0.5, rng)
            for k in range(0, 4):
                assert chromatic_polynomial(G, k) == chromatic_by_colorings(G, k)

    def test_tree_cycle_complete_closed_forms(self):
        for n in range(2, 8):
            tree = random_tree(n, random.Random(n))
            cycle = build_family("cycle", max(n, 3))
            complete = build_family("complete", n)
            for k in range(1, 6):
                assert chromatic_polynomial(tree, k) == tree_chromatic(n, k)
                assert chromatic_polynomial(cycle, k) == cycle_chromatic(max(n, 3), k)
                assert chromatic_polynomial(complete, k) == falling_factorial(k, n)


class TestRandomGenerators:
    def test_random_tree_is_a_spanning_tree(self):
        rng = random.Random(11)
        for _ in range(25):
            n = rng.randrange(1, 12)
            G = random_tree(n, rng)
            assert G.edge_count == n - 1 if n else 0
            assert is_connected(G)

    def test_seeded_generators_are_deterministic(self):
        a = random_tree(9, random.Random(5))
        b = random_tree(9, random.Random(5))
        assert a == b
        c = random_graph(8, 0.4, random.Random(5))
        d = random_graph(8, 0.4, random.Random(5))
        assert c == d


class TestIndependenceNumber:
    def test_knowns(self):
        assert independence_number(build_family("complete", 6)) == 1
        assert independence_number(build_family("star", 5)) == 5
        assert independence_number(build_family("path", 7)) == 4
        assert independence_number(build_family("cycle", 6)) == 3


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.integers(0, 10**6))
def test_property_stable_counts_match_brute(n, seed):
    G = random_graph(n, 0.45, random.Random(seed))
    assert enumerate_stable_partitions(G) == brute_stable_type_counts(G)
