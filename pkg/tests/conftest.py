"""Shared test helpers: an independent brute-force hom oracle and random
small-graph strategies for property tests."""

from __future__ import annotations

import itertools

import hypothesis.strategies as st

from monocat import ReflexiveGraph


def brute_hom_maps(G, H):
    """Every vertex map G -> H that preserves the stored edges, by exhaustive
    generation.  Independent of the library's backtracking enumerator."""
    out = []
    for images in itertools.product(H.vertices, repeat=len(G.vertices)):
        m = dict(zip(G.vertices, images))
        if all(H.related(m[u], m[v]) for u, v in G.edges):
            out.append(m)
    return out


def brute_hom_count(G, H):
    return len(brute_hom_maps(G, H))


@st.composite
def small_graphs(draw, mode=None, max_vertices=4):
    m = mode if mode is not None else draw(st.sampled_from(["directed", "undirected"]))
    n = draw(st.integers(min_value=0, max_value=max_vertices))
    verts = tuple(str(i) for i in range(n))
    pairs = [(u, v) for u in verts for v in verts if u != v]
    edges = draw(st.frozensets(st.sampled_from(pairs))) if pairs else frozenset()
    return ReflexiveGraph(m, verts, frozenset(edges))


@st.composite
def graph_pairs(draw, mode=None, max_vertices=3):
    m = mode if mode is not None else draw(st.sampled_from(["directed", "undirected"]))
    return (draw(small_graphs(mode=m, max_vertices=max_vertices)),
            draw(small_graphs(mode=m, max_vertices=max_vertices)))
