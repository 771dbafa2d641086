import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hthresh.algebra import threshold_product
from hthresh.canonical import graph_key
from hthresh.digraph_algos import topological_sort
from hthresh.graphs import Digraph, Graph, all_digraphs, complement, disjoint_union
from hthresh.named import BULL, C4, C5, H0, P4, TWO_K2, complete_bipartite, path, star
from hthresh.obstructions import enumerate_graphs
from hthresh.threshold import (
    DESCENDING,
    EMPTY,
    FULL,
    Family,
    OrderingCertificate,
    OrderingFailure,
    PartitionFailure,
    ThresholdRepresentation,
    all_realizations,
    build_F,
    build_family,
    build_R,
    certificate_variants,
    check_neighborhood_ordering,
    family_of_digraph,
    homogeneous_partitions,
    is_difference,
    is_h_threshold,
    is_threshold,
    realize_family,
    realizes,
    recognize_width2,
    test_partition,
    threshold_width,
)

from oracles import peel_oracle, positional_graph

SPLIT = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2)])  # clique {0, 1}, independent {2, 3}
SYMMETRIC_LOOPLESS = Digraph.from_class_arcs(2, [(1, 2), (2, 1)])


def fs(*xs):
    return frozenset(xs)


def labelled_parts(g, labels, k):
    return [[v for v in range(g.n) if labels[v] == c] for c in range(1, k + 1)]


@st.composite
def graphs(draw, max_n=7, min_n=0):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph.from_edges(n, [p for p in pairs if draw(st.booleans())])


# neighbourhood ordering

def test_ordering_examples():
    cert = check_neighborhood_ordering(complete_bipartite(2, 3), [[0, 1], [2, 3, 4]])
    assert isinstance(cert, OrderingCertificate)
    diff = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2)])
    assert isinstance(check_neighborhood_ordering(diff, [[0, 1], [2, 3, 4]]), OrderingCertificate)

    fail = check_neighborhood_ordering(TWO_K2, [[0, 2], [1, 3]])
    assert isinstance(fail, OrderingFailure) and fail.reason == "incomparable"
    assert set(fail.vertices) == {0, 2}

    k4 = check_neighborhood_ordering(Graph.complete(4), [[0, 1, 2, 3]])
    assert isinstance(k4, OrderingCertificate) and k4.cliques == (True,)

    mixed = check_neighborhood_ordering(P4, [[0, 1, 2], [3]])
    assert mixed.reason == "mixed-part"
    a, b, c, d = mixed.vertices
    assert P4.has_edge(a, b) and not P4.has_edge(c, d)


def test_ordering_rejects_non_partitions():
    for bad in ([[0, 1], [1, 2, 3]], [[0, 1], [2]], [[0, 1, 2, 3, 4]], []):
        with pytest.raises(ValueError):
            check_neighborhood_ordering(P4, bad)


def test_ordering_certificates_and_witnesses_are_valid():
    """Exhaustive n <= 5, every partition into at most 3 classes."""
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            for k in (1, 2, 3):
                for labels in itertools.product(range(1, k + 1), repeat=n):
                    parts = labelled_parts(g, labels, k)
                    result = check_neighborhood_ordering(g, parts)
                    _check_ordering(g, parts, result)


def _check_ordering(g, parts, result):
    masks = [sum(1 << v for v in p) for p in parts]
    if isinstance(result, OrderingFailure):
        if result.reason == "incomparable":
            u, v = result.vertices
            m = masks[result.other - 1]
            nu, nv = g.adj[u] & m, g.adj[v] & m
            assert nu & ~nv and nv & ~nu
        elif result.reason == "mixed-part":
            m = masks[result.cls - 1]
            assert not g.is_clique(m) and not g.is_independent(m)
        else:
            # no single order of the class can serve all chains: confirm by brute force
            i = result.cls
            assert not any(
                all(_chain_ok(g, order, masks[j]) for j in range(len(parts)) if j != i - 1)
                for order in itertools.permutations(parts[i - 1])
            )
        return
    for i, part in enumerate(parts, start=1):
        m = masks[i - 1]
        assert (g.is_clique(m) and len(part) >= 2) == result.cliques[i - 1]
        assert g.is_independent(m) or result.cliques[i - 1]
        order = result.psi[i - 1]
        assert sorted(order) == sorted(part)
        for j in range(1, len(parts) + 1):
            if j == i:
                continue
            rows = [g.adj[u] & masks[j - 1] for u in order]
            flag = result.directions[(i, j)]
            if flag == FULL:
                assert all(r == masks[j - 1] for r in rows)
            elif flag == EMPTY:
                assert not any(rows)
            elif flag == DESCENDING:
                assert all(b & ~a == 0 for a, b in zip(rows, rows[1:]))
            else:
                assert all(a & ~b == 0 for a, b in zip(rows, rows[1:]))


def _chain_ok(g, order, mask):
    rows = [g.adj[u] & mask for u in order]
    down = all(b & ~a == 0 for a, b in zip(rows, rows[1:]))
    up = all(a & ~b == 0 for a, b in zip(rows, rows[1:]))
    return down or up


# families and realisations

def test_family_examples():
    cert = check_neighborhood_ordering(complete_bipartite(2, 2), [[0, 1], [2, 3]])
    assert build_family(cert).sets == ((fs(), fs()), (fs(), fs()))

    fam = build_family(check_neighborhood_ordering(SPLIT, [[0, 1], [2, 3]]))
    assert set(fam.sets[0]) == {fs(), fs(2)} and set(fam.sets[1]) == {fs(), fs(1)}

    # class 3 is joined completely to class 1 and not at all to class 2
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (4, 0), (4, 1)])
    fam = build_family(check_neighborhood_ordering(g, [[0, 1], [2, 3], [4]]))
    assert 3 not in fam.union(1) and 1 not in fam.union(3) and 3 not in fam.union(2)
    assert fam.is_proper()


def test_slot_graph_examples():
    r = build_R(Family(((fs(), fs()), (fs(), fs()))))
    assert sorted(r.edges()) == [(0, 1), (2, 3)]
    split = Family(((fs(), fs(2)), (fs(1), fs())))
    r = build_R(split)
    assert sorted(r.edges()) == [(0, 1), (1, 2), (2, 3)]
    with pytest.raises(ValueError):
        build_R(Family(((fs(2), fs()), (fs(), fs()))))


def test_realisation_examples():
    assert realize_family(Family(((fs(), fs()), (fs(), fs())))).digraph.arcs == frozenset()
    d = realize_family(Family(((fs(), fs(2)), (fs(1), fs())))).digraph
    assert d.class_arcs() in ([(1, 2)], [(2, 1)])

    triangle = Family(((fs(2, 3), fs()), (fs(1, 3), fs()), (fs(1, 2), fs())))
    real = realize_family(triangle)
    assert real.digraph is None
    assert len(real.odd_cycle) % 2 == 1

    two_pieces = Family(((fs(2), fs()), (fs(), fs(1)), (fs(4), fs()), (fs(), fs(3))))
    reals = all_realizations(two_pieces)
    assert len(reals) == 4
    assert all(realizes(d, two_pieces) for d in reals)


@settings(max_examples=200)
@given(st.integers(1, 5), st.data())
def test_family_of_any_loopless_oriented_digraph_is_realisable(k, data):
    arcs = set()
    for i, j in itertools.combinations(range(k), 2):
        pick = data.draw(st.sampled_from([None, (i, j), (j, i)]))
        if pick:
            arcs.add(pick)
    d = Digraph(k, frozenset(arcs))
    fam = family_of_digraph(d)
    assert fam.is_proper()
    real = realize_family(fam)
    assert real.digraph is not None and realizes(real.digraph, fam)
    reals = all_realizations(fam)
    assert d in reals
    assert all(realizes(x, fam) for x in reals)


# F and the partition test

def test_F_examples():
    g = Graph.complete(3)
    cert = check_neighborhood_ordering(disjoint_union(g, g), [[0, 1, 2], [3, 4, 5]])
    d = realize_family(build_family(cert)).digraph
    f = build_F(disjoint_union(g, g), cert, d)
    assert sorted(f.arcs) == [(0, 1), (1, 2), (3, 4), (4, 5)]

    diff = Graph.from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2)])
    cert = check_neighborhood_ordering(diff, [[0, 1], [2, 3, 4]])
    d = realize_family(build_family(cert)).digraph
    assert topological_sort(build_F(diff, cert, d)).order is not None

    with pytest.raises(ValueError):
        cert = check_neighborhood_ordering(SPLIT, [[0, 1], [2, 3]])
        build_F(SPLIT, cert, Digraph(2, frozenset()))


def test_some_k3_instance_has_a_cyclic_F():
    for n in range(3, 7):
        for g in enumerate_graphs(n):
            for labels in homogeneous_partitions(g, 3):
                result = test_partition(g, labelled_parts(g, labels, 3))
                if isinstance(result, PartitionFailure) and result.stage == "acyclic":
                    assert len(result.detail) >= 2
                    return
    pytest.fail("no partition failed at the acyclicity stage")


def test_partition_examples():
    rep = test_partition(Graph.complete(4), [[0, 1, 2, 3]])
    assert rep.digraph.class_arcs() == [(1, 1)] and rep.reproduces(Graph.complete(4))

    # the split partition of P4 fails: its clique vertices see different ends
    fail = test_partition(P4, [[1, 2], [0, 3]])
    assert fail.stage == "ordering" and fail.detail.reason == "incomparable"
    rep = test_partition(P4, [[0, 2], [1, 3]])
    assert isinstance(rep, ThresholdRepresentation) and rep.k == 2 and rep.reproduces(P4)

    for labels in itertools.product((1, 2), repeat=5):
        assert isinstance(test_partition(C5, labelled_parts(C5, labels, 2)), PartitionFailure)


def test_partition_test_matches_peeling_oracle():
    """n <= 6, every clique/independent partition into at most 3 classes.

    The oracle tries every digraph on the classes and peels vertices greedily.
    """
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            for k in (1, 2, 3):
                for labels in homogeneous_partitions(g, k):
                    result = test_partition(g, labelled_parts(g, labels, k))
                    ok = isinstance(result, ThresholdRepresentation)
                    assert ok == peel_oracle(g, labels, k), (g, labels)
                    if ok:
                        assert result.reproduces(g)
                        assert [labels[v] for v in result.order] == list(result.sequence)


def test_certificate_variants_start_with_the_certificate():
    seen_more = False
    for g in enumerate_graphs(5):
        for labels in homogeneous_partitions(g, 3):
            cert = check_neighborhood_ordering(g, labelled_parts(g, labels, 3))
            if isinstance(cert, OrderingFailure):
                continue
            variants = list(certificate_variants(cert))
            assert variants[0] is cert
            assert all(v.parts == cert.parts and v.psi == cert.psi for v in variants)
            for v in variants[1:]:
                changed = {p for p in cert.directions if v.directions[p] != cert.directions[p]}
                assert changed and changed <= cert.flexible
            seen_more = seen_more or len(variants) > 1
    assert seen_more


def test_realisation_independence_small():
    for n in range(2, 6):
        for g in enumerate_graphs(n):
            for k in (2, 3):
                for labels in homogeneous_partitions(g, k):
                    cert = check_neighborhood_ordering(g, labelled_parts(g, labels, k))
                    if isinstance(cert, OrderingFailure):
                        continue
                    for variant in certificate_variants(cert):
                        reals = all_realizations(build_family(variant))
                        verdicts = {topological_sort(build_F(g, variant, d)).order is None for d in reals}
                        assert len(verdicts) <= 1


# width

def test_width_examples():
    assert threshold_width(Graph.complete(5), 3).width == 1
    assert threshold_width(Graph.empty(5), 3).width == 1
    assert threshold_width(P4, 3).width == 2
    c5 = threshold_width(C5, 3)
    assert c5.width == 3 and c5.representation.reproduces(C5)
    assert threshold_width(C5, 2).label() == ">2"
    assert threshold_width(Graph.empty(0), 1).width == 1
    with pytest.raises(ValueError):
        threshold_width(P4, 0)


def test_homogeneous_partitions_are_canonical_and_complete():
    for g in enumerate_graphs(5):
        for k in (1, 2, 3):
            found = list(homogeneous_partitions(g, k))
            expected = []
            for labels in itertools.product(range(1, k + 1), repeat=g.n):
                firsts = [labels.index(c) for c in range(1, k + 1) if c in labels]
                if len(firsts) != k or firsts != sorted(firsts):
                    continue
                masks = [sum(1 << v for v in range(g.n) if labels[v] == c) for c in range(1, k + 1)]
                if all(g.is_clique(m) or g.is_independent(m) for m in masks):
                    expected.append(list(labels))
            assert found == expected


@settings(max_examples=25, deadline=None)
@given(graphs(max_n=7, min_n=7))
def test_width_is_complement_invariant_at_seven(g):
    assert threshold_width(g, 4).label() == threshold_width(complement(g), 4).label()


# fixed H

def test_h_threshold_examples():
    kmn = complete_bipartite(2, 3)
    rep = is_h_threshold(kmn, SYMMETRIC_LOOPLESS)
    assert rep.reproduces(kmn)
    assert sorted(rep.sequence).count(rep.sequence[0]) in (2, 3)
    assert is_h_threshold(star(3), H0).reproduces(star(3))
    for h in all_digraphs(2):
        assert is_h_threshold(C5, h) is None
    assert is_h_threshold(Graph.empty(0), H0).sequence == ()


def test_h_threshold_matches_sequence_enumeration():
    """For n <= 5 and every 2-vertex H, the graphs reached by some class sequence."""
    for h in all_digraphs(2):
        reached = {n: set() for n in range(1, 6)}
        for n in range(1, 6):
            for seq in itertools.product((1, 2), repeat=n):
                reached[n].add(graph_key(positional_graph(h, list(seq))))
        for n in range(1, 6):
            for g in enumerate_graphs(n):
                rep = is_h_threshold(g, h)
                assert (rep is not None) == (graph_key(g) in reached[n])
                if rep is not None:
                    assert rep.reproduces(g)
                    assert threshold_product(h, rep.sequence).graph == g.relabel(rep.order)


def test_partition_search_is_complete_at_two_classes():
    for n in range(1, 7):
        for g in enumerate_graphs(n):
            searched = threshold_width(g, 2).width is not None
            direct = any(is_h_threshold(g, h) is not None for h in all_digraphs(2))
            assert searched == direct


# recognisers

def test_recogniser_examples():
    assert is_threshold(star(3))
    assert not is_threshold(P4)
    assert is_threshold(Graph.empty(1))
    assert is_difference(complete_bipartite(3, 2))
    assert not is_difference(TWO_K2)
    assert is_difference(Graph.complete(2))
    assert not is_difference(Graph.complete(3))
    assert is_difference(disjoint_union(path(3), Graph.empty(2)))

    assert recognize_width2(Graph.complete(3)).label() == "1"
    assert recognize_width2(C4).label() == "2 difference"
    assert recognize_width2(BULL).label() == ">2"
    assert recognize_width2(star(3)).route == "threshold"
    assert recognize_width2(complement(TWO_K2)).label() == "2 difference"
    assert recognize_width2(TWO_K2).label() == "2 co-difference"


@settings(max_examples=200)
@given(graphs(max_n=8))
def test_recognisers_against_definitions(g):
    vicinal = all(
        (g.adj[u] & ~(1 << v)) & ~g.adj[v] == 0 or (g.adj[v] & ~(1 << u)) & ~g.adj[u] == 0
        for u in range(g.n) for v in range(g.n)
    )
    assert is_threshold(g) == vicinal
    result = recognize_width2(g)
    if result.representation is not None:
        assert result.representation.reproduces(g)
