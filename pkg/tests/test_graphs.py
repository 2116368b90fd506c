import json

import pytest
from conftest import brute_hom_maps, graph_pairs, small_graphs
from hypothesis import given, settings

from monocat import (
    GraphHom,
    ModeMismatchError,
    ReflexiveGraph,
    VertexPartition,
    compose,
    discrete_partition,
    disjoint_union,
    enumerate_homs,
    graph_from_json,
    graph_from_json_dict,
    identity,
    inverse,
    is_hom,
    is_iso,
    is_isomorphic,
    make_named,
    make_path,
    quotient,
    to_dot,
)


def test_make_path_examples():
    j0 = make_path(0, "directed")
    assert j0.vertices == ("0",) and not j0.edges
    j1 = make_path(1, "directed")
    assert j1.vertices == ("0", "1") and j1.edges == frozenset({("0", "1")})
    i2 = make_path(2, "undirected")
    assert i2.vertices == ("0", "1", "2")
    assert i2.edges == frozenset({("0", "1"), ("1", "2")})


def test_make_named():
    csq = make_named("csq", "directed")
    assert csq.edges == frozenset({("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")})
    dsq = make_named("dsq", "directed")
    assert dsq.edges == csq.edges | {("a", "d")}
    assert make_named("empty", "undirected").vertices == ()
    assert len(make_named("k4r", "undirected").edges) == 6
    c4 = make_named("c4", "undirected")
    assert c4.edges == frozenset({("a", "b"), ("b", "d"), ("c", "d"), ("a", "c")})
    with pytest.raises(ModeMismatchError):
        make_named("csq", "undirected")
    with pytest.raises(ValueError):
        make_named("bogus", "directed")


def test_constructor_invariants():
    with pytest.raises(ValueError):
        ReflexiveGraph("directed", ("a",), frozenset({("a", "a")}))
    with pytest.raises(ValueError):
        ReflexiveGraph("directed", ("a",), frozenset({("a", "b")}))
    with pytest.raises(ValueError):
        ReflexiveGraph("sideways", ("a",))
    # undirected edges normalize to sorted endpoints
    g = ReflexiveGraph("undirected", ("a", "b"), frozenset({("b", "a")}))
    assert g.edges == frozenset({("a", "b")})
    assert g.related("b", "a") and g.related("a", "b") and g.related("a", "a")


def test_disjoint_union():
    j0 = make_path(0, "directed")
    two = disjoint_union(j0, j0)
    assert len(two.vertices) == 2 and not two.edges
    j1 = make_path(1, "directed")
    both = disjoint_union(j1, j1)
    assert len(both.vertices) == 4 and len(both.edges) == 2
    iso = is_isomorphic(disjoint_union(make_named("empty", "directed"), j1), j1)
    assert iso is not None
    with pytest.raises(ModeMismatchError):
        disjoint_union(j1, make_path(1, "undirected"))


def test_is_hom_examples():
    j0 = make_path(0, "directed")
    j1 = make_path(1, "directed")
    assert is_hom({"0": "0", "1": "0"}, j1, j0)
    assert not is_hom({"0": "1", "1": "0"}, j1, j1)
    csq = make_named("csq", "directed")
    assert is_hom({v: v for v in csq.vertices}, csq, csq)
    with pytest.raises(ValueError):
        is_hom({"0": "0"}, j1, j1)  # not total
    with pytest.raises(ValueError):
        is_hom({"0": "9", "1": "0"}, j1, j1)  # image outside


def test_enumerate_homs_frozen_counts():
    # Expected values confirmed by the brute-force oracle.
    j1 = make_path(1, "directed")
    j2 = make_path(2, "directed")
    homs = enumerate_homs(j1, j1)
    assert [(h("0"), h("1")) for h in homs] == [("0", "0"), ("0", "1"), ("1", "1")]
    assert [(h("0"), h("1")) for h in enumerate_homs(j1, j2)] == [
        ("0", "0"), ("0", "1"), ("1", "1"), ("1", "2"), ("2", "2")]
    g = make_named("csq", "directed")
    assert len(enumerate_homs(make_path(0, "directed"), g)) == len(g.vertices)


@settings(max_examples=60, deadline=None)
@given(graph_pairs())
def test_enumerate_homs_matches_brute_force(pair):
    G, H = pair
    if len(G.vertices) * len(H.vertices) > 12:
        return
    expected = [tuple(sorted(m.items())) for m in brute_hom_maps(G, H)]
    got = [h.mapping for h in enumerate_homs(G, H)]
    assert sorted(expected) == sorted(got)
    assert got == sorted(got, key=lambda m: tuple(v for _, v in m))


@settings(max_examples=60, deadline=None)
@given(graph_pairs())
def test_hom_closure_under_composition(pair):
    G, H = pair
    for f in enumerate_homs(G, H)[:4]:
        for g in enumerate_homs(H, G)[:4]:
            fg = compose(f, g)
            assert is_hom(fg.as_dict, G, G)


def test_graph_hom_validation():
    j1 = make_path(1, "directed")
    with pytest.raises(ValueError):
        GraphHom(j1, j1, {"0": "1", "1": "0"})
    with pytest.raises(ModeMismatchError):
        GraphHom(j1, make_path(1, "undirected"), {"0": "0", "1": "1"})
    f = GraphHom(j1, j1, {"0": "0", "1": "1"})
    assert f == identity(j1)


def test_compose_identities():
    j0 = make_path(0, "directed")
    j1 = make_path(1, "directed")
    f = GraphHom(j0, j1, {"0": "0"})
    r = GraphHom(j1, j0, {"0": "0", "1": "0"})
    assert compose(identity(j0), f) == f
    assert compose(f, identity(j1)) == f
    assert compose(f, r) == identity(j0)
    with pytest.raises(ValueError):
        compose(r, r)


def test_is_isomorphic_examples():
    csq = make_named("csq", "directed")
    dsq = make_named("dsq", "directed")
    assert is_isomorphic(csq, dsq) is None
    ident = is_isomorphic(csq, csq)
    assert ident is not None and ident == identity(csq)
    j0 = make_path(0, "directed")
    j1 = make_path(1, "directed")
    w = is_isomorphic(disjoint_union(j1, j0), disjoint_union(j0, j1))
    assert w is not None and is_iso(w)


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_isomorphism_reflexive_and_relabel_invariant(G):
    w = is_isomorphic(G, G)
    assert w is not None
    relabeled = ReflexiveGraph(
        G.mode,
        tuple(f"x{v}" for v in G.vertices),
        frozenset((f"x{u}", f"x{v}") for u, v in G.edges))
    w2 = is_isomorphic(G, relabeled)
    assert w2 is not None
    back = inverse(w2)
    assert is_hom(back.as_dict, relabeled, G)


def test_quotient_examples():
    j1 = make_path(1, "directed")
    assert quotient(j1, [{"0", "1"}]) == ReflexiveGraph("directed", ("{0,1}",))
    csq = make_named("csq", "directed")
    assert quotient(csq, discrete_partition(csq)) == csq
    q = quotient(csq, [{"a", "d"}, {"b"}, {"c"}])
    assert set(q.vertices) == {"{a,d}", "b", "c"}
    assert q.edges == frozenset({("{a,d}", "b"), ("{a,d}", "c"),
                                 ("b", "{a,d}"), ("c", "{a,d}")})
    with pytest.raises(ValueError):
        quotient(csq, [{"a"}, {"b"}])  # not covering
    with pytest.raises(ValueError):
        VertexPartition(csq, ({"a", "b"}, {"b", "c", "d"}))  # overlap


@settings(max_examples=40, deadline=None)
@given(small_graphs())
def test_quotient_discrete_is_identity(G):
    assert is_isomorphic(quotient(G, discrete_partition(G)), G) is not None


@settings(max_examples=50, deadline=None)
@given(small_graphs())
def test_no_stored_loops_and_undirected_closure(G):
    assert all(u != v for u, v in G.edges)
    for u in G.vertices:
        assert G.related(u, u)
    if G.mode == "undirected":
        for u in G.vertices:
            for v in G.vertices:
                assert G.related(u, v) == G.related(v, u)


def test_json_round_trip_and_canonical_order():
    g = ReflexiveGraph("directed", ("b", "a", "c"), frozenset({("c", "a"), ("a", "b")}))
    data = g.to_json_dict()
    assert data["vertices"] == ["a", "b", "c"]
    assert data["edges"] == [["a", "b"], ["c", "a"]]
    assert graph_from_json(g.to_json()) == g
    with pytest.raises(ValueError):
        graph_from_json_dict({"mode": "directed", "vertices": ["a"]})
    with pytest.raises(ValueError):
        graph_from_json_dict({"mode": "directed", "vertices": ["a"],
                              "edges": [["a", "a"]]})
    assert json.loads(g.to_json()) == data


def test_dot_export():
    j1 = make_path(1, "directed")
    dot = to_dot(j1)
    assert dot.startswith("digraph {") and '"0" -> "1";' in dot
    i1 = make_path(1, "undirected")
    dot = to_dot(i1)
    assert dot.startswith("graph {") and '"0" -- "1";' in dot
    assert "->" not in dot
