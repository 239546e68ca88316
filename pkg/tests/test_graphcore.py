import pytest
from hypothesis import given, settings, strategies as st

from biregular.errors import BadParams, MalformedInput
from biregular.exact import ExactMatrix
from biregular.graphcore import (PAPER_G_PRIME, Graph, classify, make_named,
                                 neighbor_degree_sums, parse_edge_list,
                                 parse_family, parse_graph, parse_graph6,
                                 subspace_layer, to_edge_list, to_graph6,
                                 two_coloring)
from biregular.harness import enumerate_connected


def test_graph6_k4():
    # n=4 -> chr(4+63)='C'; six 1-bits -> chr(63+63)='~'
    g = parse_graph("C~")
    assert g.n == 4 and g.m == 6
    assert to_graph6(g) == "C~"


def test_graph6_header_and_padding():
    assert parse_graph(">>graph6<<C~") == make_named("complete", 4)
    with pytest.raises(MalformedInput):
        parse_graph6("C" + chr(127))
    with pytest.raises(MalformedInput):
        parse_graph6("C " )
    # n=3 has 3 bits; a fourth set bit is padding and must be zero
    with pytest.raises(MalformedInput):
        parse_graph6("B" + chr(63 + 0b000100))
    with pytest.raises(MalformedInput):
        parse_graph6("C~~")


def test_graph6_known_strings():
    # P3 with edges 0-1, 1-2: bits x01=1, x02=0, x12=1 -> 101000 = 40
    assert to_graph6(make_named("path", 3)) == "B" + chr(63 + 40)


def test_edge_list():
    g = parse_graph("0-1,1-2")
    assert g == make_named("path", 3)
    g2 = parse_edge_list("# triangle\n0-1\n1-2 2-0\n5")
    assert g2.n == 6 and g2.m == 3 and g2.degrees[5] == 0
    assert parse_edge_list(to_edge_list(g2)) == g2
    with pytest.raises(MalformedInput):
        parse_graph("0-0")
    with pytest.raises(MalformedInput):
        parse_graph("0-x")


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12).flatmap(
    lambda n: st.tuples(st.just(n), st.integers(0, (1 << (n * (n - 1) // 2)) - 1))))
def test_graph6_roundtrip(nm):
    n, mask = nm
    g = Graph.from_mask(n, mask)
    s = to_graph6(g)
    assert parse_graph6(s) == g
    assert to_graph6(parse_graph6(s)) == s


def test_graph_rejects_bad_rows():
    with pytest.raises(MalformedInput):
        Graph(2, (0b10, 0b00))
    with pytest.raises(MalformedInput):
        Graph(1, (0b1,))


def test_classify_examples(named):
    c4 = classify(named["C4"])
    assert c4.kind == "regular" and c4.d1 == 2 and c4.connected
    star = classify(named["K13"])
    assert star.kind == "biregular"
    assert (star.d1, star.d2, star.n1, star.n2) == (1, 3, 3, 1)
    assert classify(named["paw"]).kind == "neither"
    # regular bipartite stays Regular
    assert classify(named["K33"]).kind == "regular"


def test_classify_tie_break():
    # equal part sizes: smaller degree first. Two disjoint P3's joined? use
    # K_{1,2} + edge-free: build a biregular graph with n1 == n2
    g = Graph.from_edges(6, [(0, 3), (0, 4), (1, 4), (1, 5), (2, 5), (2, 3)])  # C6: regular
    assert classify(g).kind == "regular"
    # disconnected: K_{1,2} plus K_{2,1} mirrored gives n1 == n2 == 3
    h = Graph.from_edges(6, [(0, 1), (0, 2), (3, 5), (4, 5)])
    c = classify(h)
    assert c.kind == "biregular" and not c.connected
    assert (c.n1, c.n2) == (4, 2)


def test_biregular_invariants_exhaustive():
    for n in range(2, 8):
        for g in enumerate_connected(n, dedup=True):
            c = classify(g)
            if c.kind != "biregular":
                continue
            assert c.d1 != c.d2 and c.n1 >= c.n2
            assert all(g.degrees[v] == c.d1 for v in c.part1)
            assert all(g.degrees[v] == c.d2 for v in c.part2)
            for part in (c.part1, c.part2):
                assert not any(g.has_edge(u, v) for u in part for v in part)


def test_neighbor_degree_sums(named):
    assert neighbor_degree_sums(named["K13"]) == [3, 3, 3, 3]
    assert neighbor_degree_sums(named["P4"]) == [2, 3, 3, 2]
    assert neighbor_degree_sums(named["petersen"]) == [9] * 10


def test_neighbor_degree_sums_are_row_sums_of_a_squared(named):
    for g in named.values():
        a = ExactMatrix(g.adjacency())
        a2 = a @ a
        assert neighbor_degree_sums(g) == [sum(r) for r in a2.rows]


def test_constant_neighbor_sums_force_biregular():
    # bipartite connected graph with constant neighbour-degree sums is
    # regular or biregular
    for n in range(2, 8):
        for g in enumerate_connected(n, dedup=True):
            if two_coloring(g) is None:
                continue
            if len(set(neighbor_degree_sums(g))) == 1:
                assert classify(g).kind in ("regular", "biregular")


def _isomorphic_to_star(g, k):
    return g.n == k + 1 and sorted(g.degrees) == [1] * k + [k] and g.is_connected()


def test_named_layers():
    assert _isomorphic_to_star(make_named("cube_layer", 3, 1), 3)
    assert _isomorphic_to_star(make_named("subspace_layer", 2, 1, 2), 3)
    assert _isomorphic_to_star(make_named("subspace_layer", 3, 1, 2), 7)
    g = subspace_layer(4, 2, 2)
    assert g.n == 50
    c = classify(g)
    # (k, n-k+1) in q-integers: ([2], [3]) = (3, 7)
    assert (c.d1, c.d2, c.n1, c.n2) == (3, 7, 35, 15)
    cube = make_named("cube_layer", 4, 2)
    c = classify(cube)
    assert (c.d1, c.d2, c.n1, c.n2) == (2, 3, 6, 4)


def test_subspace_layer_q3():
    g = subspace_layer(2, 1, 3)
    assert _isomorphic_to_star(g, 4)


def test_fixture_matrices():
    g = make_named("paper_G_prime")
    assert tuple(tuple(r) for r in g.adjacency()) == PAPER_G_PRIME
    assert make_named("paper_A_G").degrees == (4, 4, 3, 3, 2)


def test_named_errors():
    with pytest.raises(BadParams):
        make_named("cube_layer", 3, 4)
    with pytest.raises(BadParams):
        make_named("subspace_layer", 3, 1, 4)
    with pytest.raises(BadParams):
        make_named("nosuch", 1)
    with pytest.raises(BadParams):
        make_named("cube_layer", 30, 15)
    assert parse_family("cube:4,2") == make_named("cube_layer", 4, 2)
