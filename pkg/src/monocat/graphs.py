"""Finite reflexive graphs and their homomorphisms.

Every graph here carries an implicitly reflexive edge relation: loops are
never stored, and ``related(u, u)`` is always true.  Undirected graphs store
one representative per edge with endpoints in sorted order.  Vertex labels
are opaque strings kept in lexicographic order, so equal graphs serialize
identically and all enumeration output is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache

DIRECTED = "directed"
UNDIRECTED = "undirected"
MODES = (DIRECTED, UNDIRECTED)

NAMED_GRAPHS = ("empty", "point", "csq", "dsq", "c4", "k4r")


class ModeMismatchError(ValueError):
    """An operation mixed directed and undirected values."""


def _check_mode(mode):
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def require_same_mode(*items):
    """Return the shared mode of the arguments, or raise ModeMismatchError."""
    modes = {item.mode for item in items}
    if len(modes) != 1:
        raise ModeMismatchError(f"mixed modes: {sorted(modes)}")
    return modes.pop()


@dataclass(frozen=True)
class ReflexiveGraph:
    """A finite graph whose edge relation is reflexive by convention.

    ``edges`` holds ordered pairs in directed mode and sorted pairs in
    undirected mode; loops are rejected (reflexivity is implicit).
    """

    mode: str
    vertices: tuple[str, ...] = ()
    edges: frozenset[tuple[str, str]] = frozenset()

    def __post_init__(self):
        _check_mode(self.mode)
        verts = tuple(sorted(str(v) for v in self.vertices))
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex labels")
        present = set(verts)
        edges = set()
        for u, v in self.edges:
            u, v = str(u), str(v)
            if u not in present or v not in present:
                raise ValueError(f"edge ({u!r}, {v!r}) mentions an unknown vertex")
            if u == v:
                raise ValueError(f"loop on {u!r}: reflexivity is implicit, loops are not stored")
            if self.mode == UNDIRECTED and v < u:
                u, v = v, u
            edges.add((u, v))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(edges))

    def __hash__(self):
        # Cached: graphs are hashed heavily as memoization keys.
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.mode, self.vertices, self.edges))
            self.__dict__["_hash"] = h
        return h

    @cached_property
    def vertex_set(self) -> frozenset[str]:
        return frozenset(self.vertices)

    @cached_property
    def relation(self) -> frozenset[tuple[str, str]]:
        """All related ordered pairs, including loops and both orientations."""
        rel = {(v, v) for v in self.vertices}
        rel.update(self.edges)
        if self.mode == UNDIRECTED:
            rel.update((v, u) for u, v in self.edges)
        return frozenset(rel)

    def related(self, u, v) -> bool:
        """True iff u ~> v; every vertex is related to itself."""
        if u == v:
            return True
        if self.mode == UNDIRECTED and v < u:
            u, v = v, u
        return (u, v) in self.edges

    @cached_property
    def sorted_edges(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted(self.edges))

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "vertices": list(self.vertices),
            "edges": [list(e) for e in self.sorted_edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), separators=(",", ":"))


def graph_from_json_dict(data) -> ReflexiveGraph:
    """Parse the canonical graph JSON object; raise ValueError if malformed."""
    if not isinstance(data, dict):
        raise ValueError("graph JSON must be an object")
    keys = {"mode", "vertices", "edges"}
    if set(data) != keys:
        raise ValueError(f"graph JSON must have exactly the keys {sorted(keys)}")
    vertices = data["vertices"]
    edges = data["edges"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ValueError("vertices must be a list of strings")
    if not isinstance(edges, list) or not all(
        isinstance(e, list) and len(e) == 2 and all(isinstance(x, str) for x in e)
        for e in edges
    ):
        raise ValueError("edges must be a list of two-element string lists")
    return ReflexiveGraph(data["mode"], tuple(vertices), frozenset(tuple(e) for e in edges))


def graph_from_json(text: str) -> ReflexiveGraph:
    return graph_from_json_dict(json.loads(text))


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(G: ReflexiveGraph) -> str:
    """Render in DOT; loops omitted, undirected edges written once."""
    head, arrow = ("digraph", "->") if G.mode == DIRECTED else ("graph", "--")
    lines = [head + " {"]
    lines.extend(f"  {_dot_quote(v)};" for v in G.vertices)
    lines.extend(f"  {_dot_quote(u)} {arrow} {_dot_quote(v)};" for u, v in G.sorted_edges)
    lines.append("}")
    return "\n".join(lines) + "\n"


def make_path(n: int, mode: str) -> ReflexiveGraph:
    """The path with n+1 vertices "0".."n" and edges i -> i+1."""
    if n < 0:
        raise ValueError("path length must be non-negative")
    vertices = tuple(str(i) for i in range(n + 1))
    edges = frozenset((str(i), str(i + 1)) for i in range(n))
    return ReflexiveGraph(mode, vertices, edges)


_NAMED_SPECS = {
    # name: (allowed modes, vertices, edges)
    "empty": (MODES, (), ()),
    "point": (MODES, ("0",), ()),
    "csq": ((DIRECTED,), "abcd", (("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"))),
    "dsq": ((DIRECTED,), "abcd", (("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("a", "d"))),
    "c4": ((UNDIRECTED,), "abcd", (("a", "b"), ("b", "d"), ("c", "d"), ("a", "c"))),
    "k4r": ((UNDIRECTED,), "abcd",
            (("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d"))),
}


def make_named(name: str, mode: str) -> ReflexiveGraph:
    """Build one of the standard named graphs; the name must fit the mode."""
    _check_mode(mode)
    if name not in _NAMED_SPECS:
        raise ValueError(f"unknown named graph {name!r}; expected one of {NAMED_GRAPHS}")
    allowed, vertices, edges = _NAMED_SPECS[name]
    if mode not in allowed:
        raise ModeMismatchError(f"named graph {name!r} is only available in {allowed[0]} mode")
    return ReflexiveGraph(mode, tuple(vertices), frozenset(edges))


def union_left(v: str) -> str:
    return f"l.{v}"


def union_right(v: str) -> str:
    return f"r.{v}"


def disjoint_union(G: ReflexiveGraph, H: ReflexiveGraph) -> ReflexiveGraph:
    """Coproduct; vertex labels are tagged by side to avoid collisions."""
    mode = require_same_mode(G, H)
    vertices = [union_left(v) for v in G.vertices] + [union_right(v) for v in H.vertices]
    edges = [(union_left(u), union_left(v)) for u, v in G.edges]
    edges += [(union_right(u), union_right(v)) for u, v in H.edges]
    return ReflexiveGraph(mode, tuple(vertices), frozenset(edges))


@dataclass(frozen=True)
class GraphHom:
    """A vertex mapping between two same-mode graphs preserving the relation."""

    dom: ReflexiveGraph
    cod: ReflexiveGraph
    mapping: tuple[tuple[str, str], ...]

    def __post_init__(self):
        dom, cod = self.dom, self.cod
        if dom.mode != cod.mode:
            raise ModeMismatchError(f"mixed modes: {sorted({dom.mode, cod.mode})}")
        raw = self.mapping
        items = raw.items() if isinstance(raw, dict) else tuple(raw)
        m = {str(k): str(v) for k, v in items}
        if frozenset(m) != dom.vertex_set:
            raise ValueError("mapping is not total on the domain vertices")
        cod_verts = cod.vertex_set
        for v, w in m.items():
            if w not in cod_verts:
                raise ValueError(f"image {w!r} of {v!r} is not a codomain vertex")
        rel = cod.relation
        for u, v in dom.edges:
            if (m[u], m[v]) not in rel:
                raise ValueError(
                    f"edge ({u!r}, {v!r}) is not preserved: ({m[u]!r}, {m[v]!r}) unrelated")
        object.__setattr__(self, "mapping", tuple(sorted(m.items())))

    @cached_property
    def as_dict(self) -> dict[str, str]:
        return dict(self.mapping)

    def __call__(self, v: str) -> str:
        return self.as_dict[v]

    @property
    def mode(self) -> str:
        return self.dom.mode

    def to_json_dict(self) -> dict:
        return {k: v for k, v in self.mapping}


def identity(G: ReflexiveGraph) -> GraphHom:
    return GraphHom(G, G, {v: v for v in G.vertices})


def compose(f: GraphHom, g: GraphHom) -> GraphHom:
    """Apply ``f`` then ``g``; defined when f.cod equals g.dom."""
    if f.cod != g.dom:
        raise ValueError("not composable: f.cod differs from g.dom")
    # Composites of validated homs are homs; skip re-validation.
    g_at = g.as_dict
    out = object.__new__(GraphHom)
    object.__setattr__(out, "dom", f.dom)
    object.__setattr__(out, "cod", g.cod)
    object.__setattr__(out, "mapping", tuple((v, g_at[w]) for v, w in f.mapping))
    return out


def inverse(f: GraphHom) -> GraphHom:
    """Invert an isomorphism; raise ValueError if f is not one."""
    values = [w for _, w in f.mapping]
    if len(set(values)) != len(values) or len(values) != len(f.cod.vertices):
        raise ValueError("homomorphism is not bijective on vertices")
    return GraphHom(f.cod, f.dom, {w: v for v, w in f.mapping})


def is_iso(f: GraphHom) -> bool:
    try:
        inverse(f)
    except ValueError:
        return False
    return True


def is_hom(mapping, G: ReflexiveGraph, H: ReflexiveGraph) -> bool:
    """True iff the vertex mapping preserves every stored edge of G."""
    require_same_mode(G, H)
    m = dict(mapping)
    if set(m) != set(G.vertices):
        raise ValueError("mapping is not total on the domain vertices")
    if not set(m.values()) <= set(H.vertices):
        raise ValueError("mapping image is not contained in the codomain vertices")
    return all(H.related(m[u], m[v]) for u, v in G.edges)


@lru_cache(maxsize=None)
def _hom_image_tuples(G: ReflexiveGraph, H: ReflexiveGraph) -> tuple[tuple[str, ...], ...]:
    """All homomorphisms G -> H as image tuples over G.vertices, lexicographic."""
    require_same_mode(G, H)
    gv = G.vertices
    n = len(gv)
    if n == 0:
        return ((),)
    if not H.vertices:
        return ()
    index = {v: i for i, v in enumerate(gv)}
    # For position k, constraints against already-placed vertices.
    forward = [[] for _ in range(n)]   # i < k with gv[i] ~> gv[k]
    backward = [[] for _ in range(n)]  # j < k with gv[k] ~> gv[j]
    for u, v in G.edges:
        i, j = index[u], index[v]
        if i < j:
            forward[j].append(i)
        else:
            backward[i].append(j)
    rel = H.relation
    hv = H.vertices
    out = []
    images = [""] * n

    def place(k):
        if k == n:
            out.append(tuple(images))
            return
        fwd = forward[k]
        bwd = backward[k]
        for w in hv:
            if all((images[i], w) in rel for i in fwd) and all((w, images[j]) in rel for j in bwd):
                images[k] = w
                place(k + 1)

    place(0)
    return tuple(out)


@lru_cache(maxsize=None)
def _homs_cached(G, H) -> tuple[GraphHom, ...]:
    return tuple(GraphHom(G, H, dict(zip(G.vertices, t))) for t in _hom_image_tuples(G, H))


def enumerate_homs(G: ReflexiveGraph, H: ReflexiveGraph) -> list[GraphHom]:
    """All homomorphisms G -> H in canonical (lexicographic-on-images) order."""
    return list(_homs_cached(G, H))


def _degree_signature(G, v):
    if G.mode == UNDIRECTED:
        return (sum(1 for e in G.edges if v in e),)
    return (sum(1 for u, _ in G.edges if u == v), sum(1 for _, w in G.edges if w == v))


def is_isomorphic(G: ReflexiveGraph, H: ReflexiveGraph) -> GraphHom | None:
    """First isomorphism witness in canonical search order, or None.

    Backtracking with degree-signature pruning; fine for the small graphs
    this library works with.
    """
    require_same_mode(G, H)
    if len(G.vertices) != len(H.vertices) or len(G.edges) != len(H.edges):
        return None
    sig_g = {v: _degree_signature(G, v) for v in G.vertices}
    sig_h = {w: _degree_signature(H, w) for w in H.vertices}
    if sorted(sig_g.values()) != sorted(sig_h.values()):
        return None
    gv = G.vertices
    n = len(gv)
    images: dict[str, str] = {}
    used: set[str] = set()

    def place(k):
        if k == n:
            return dict(images)
        u = gv[k]
        for w in H.vertices:
            if w in used or sig_h[w] != sig_g[u]:
                continue
            ok = True
            for j in range(k):
                u2 = gv[j]
                w2 = images[u2]
                if G.related(u, u2) != H.related(w, w2) or G.related(u2, u) != H.related(w2, w):
                    ok = False
                    break
            if ok:
                images[u] = w
                used.add(w)
                res = place(k + 1)
                if res is not None:
                    return res
                del images[u]
                used.discard(w)
        return None

    found = place(0)
    return None if found is None else GraphHom(G, H, found)


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint nonempty vertex blocks covering the base graph exactly."""

    base: ReflexiveGraph
    blocks: tuple[frozenset[str], ...]

    def __post_init__(self):
        blocks = tuple(sorted((frozenset(str(v) for v in b) for b in self.blocks),
                              key=lambda b: sorted(b)))
        seen: set[str] = set()
        for block in blocks:
            if not block:
                raise ValueError("empty block in partition")
            if block & seen:
                raise ValueError("blocks are not disjoint")
            seen |= block
        if seen != set(self.base.vertices):
            raise ValueError("blocks do not cover the vertex set exactly")
        object.__setattr__(self, "blocks", blocks)


def discrete_partition(G: ReflexiveGraph) -> VertexPartition:
    return VertexPartition(G, tuple(frozenset((v,)) for v in G.vertices))


def block_label(block) -> str:
    members = sorted(block)
    return members[0] if len(members) == 1 else "{" + ",".join(members) + "}"


def quotient(G: ReflexiveGraph, partition) -> ReflexiveGraph:
    """Collapse each block to one vertex; loops induced by merging are dropped."""
    if not isinstance(partition, VertexPartition):
        partition = VertexPartition(G, tuple(partition))
    elif partition.base != G:
        raise ValueError("partition does not belong to this graph")
    label_of = {}
    labels = []
    for block in partition.blocks:
        label = block_label(block)
        labels.append(label)
        for v in block:
            label_of[v] = label
    if len(set(labels)) != len(labels):
        raise ValueError("block label collision")
    edges = {(label_of[u], label_of[v]) for u, v in G.edges if label_of[u] != label_of[v]}
    return ReflexiveGraph(G.mode, tuple(labels), frozenset(edges))
