"""Index categories for reflexive graphs, presheaves over them, and the
reflector into graphs.

The directed index category has three objects V, V2, E and generators
delta: V -> V2, p, q: V2 -> V, sigma: V2 -> V2, e: E -> V2, ell: V -> E,
subject to

    p delta = q delta = id_V      p sigma = q      sigma delta = delta
    delta = e ell                 q sigma = p      sigma sigma = id_V2

The undirected variant adds an edge reversal s: E -> E with
e s = sigma e, s ell = ell, s s = id_E.  Set-valued functors out of these
categories are "marked directed multigraphs": a vertex set, a multiset of
ordered vertex pairs, and a multiset of edges.  The functors whose pairing
(p, q) is a bijection onto V x V and whose e is injective are exactly the
reflexive graphs; ``reflect`` is the left adjoint collapsing an arbitrary
presheaf onto its underlying graph by image factorization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .graphs import (
    DIRECTED,
    UNDIRECTED,
    GraphHom,
    ReflexiveGraph,
    _hom_image_tuples,
    disjoint_union,
    inverse,
    make_path,
    require_same_mode,
)
from .products import pair_label

OBJECTS = ("V", "V2", "E")

# generator name -> (domain object, codomain object)
GENERATOR_TYPES = {
    "delta": ("V", "V2"),
    "p": ("V2", "V"),
    "q": ("V2", "V"),
    "sigma": ("V2", "V2"),
    "e": ("E", "V2"),
    "ell": ("V", "E"),
    "s": ("E", "E"),
}

_CODES = {"delta": "D", "p": "p", "q": "q", "sigma": "S", "e": "e", "ell": "l", "s": "s"}
_NAMES = {code: name for name, code in _CODES.items()}

# Rewrite rules on generator-code words (rightmost letter applies first).
_RULES_DIRECTED = (
    ("pD", ""), ("qD", ""), ("el", "D"), ("pS", "q"), ("qS", "p"), ("SD", "D"), ("SS", ""),
)
_RULES_UNDIRECTED = _RULES_DIRECTED + (("es", "Se"), ("sl", "l"), ("ss", ""))

# Defining relations checked pointwise on presheaves:
# (name, lhs word, rhs word, object the words start from).
RELATIONS_DIRECTED = (
    ("p*delta = id_V", ("p", "delta"), (), "V"),
    ("q*delta = id_V", ("q", "delta"), (), "V"),
    ("e*ell = delta", ("e", "ell"), ("delta",), "V"),
    ("p*sigma = q", ("p", "sigma"), ("q",), "V2"),
    ("q*sigma = p", ("q", "sigma"), ("p",), "V2"),
    ("sigma*delta = delta", ("sigma", "delta"), ("delta",), "V"),
    ("sigma*sigma = id_V2", ("sigma", "sigma"), (), "V2"),
)
RELATIONS_UNDIRECTED = RELATIONS_DIRECTED + (
    ("e*s = sigma*e", ("e", "s"), ("sigma", "e"), "E"),
    ("s*ell = ell", ("s", "ell"), ("ell",), "V"),
    ("s*s = id_E", ("s", "s"), (), "E"),
)


def generators_for_mode(mode: str) -> tuple[str, ...]:
    gens = tuple(g for g in GENERATOR_TYPES if g != "s")
    return gens + ("s",) if mode == UNDIRECTED else gens


def _normalize(word: str, rules) -> str:
    changed = True
    while changed:
        changed = False
        for lhs, rhs in rules:
            i = word.find(lhs)
            if i >= 0:
                word = word[:i] + rhs + word[i + len(lhs):]
                changed = True
                break
    return word


def morphism_name(dom: str, word: str) -> str:
    if not word:
        return f"id_{dom}"
    return "*".join(_NAMES[c] for c in word)


class IndexCategory:
    """The finite index category, with its hom-sets closed under composition.

    The composition table is computed once from the generators by rewriting
    words to normal form with the defining relations.
    """

    def __init__(self, mode: str):
        if mode not in (DIRECTED, UNDIRECTED):
            raise ValueError(f"unknown mode {mode!r}")
        self.mode = mode
        self._rules = _RULES_UNDIRECTED if mode == UNDIRECTED else _RULES_DIRECTED
        morphisms = {(obj, obj, "") for obj in OBJECTS}
        for gen in generators_for_mode(mode):
            dom, cod = GENERATOR_TYPES[gen]
            morphisms.add((dom, cod, _CODES[gen]))
        while True:
            new = set()
            for d1, c1, w1 in morphisms:
                for d2, c2, w2 in morphisms:
                    if c1 == d2:
                        composite = (d1, c2, _normalize(w2 + w1, self._rules))
                        if composite not in morphisms:
                            new.add(composite)
            if not new:
                break
            morphisms |= new
        self._homs: dict[tuple[str, str], tuple[str, ...]] = {}
        for x in OBJECTS:
            for y in OBJECTS:
                words = sorted((w for d, c, w in morphisms if d == x and c == y),
                               key=lambda w: (len(w), w))
                self._homs[(x, y)] = tuple(words)

    def hom_words(self, x: str, y: str) -> tuple[str, ...]:
        return self._homs[(x, y)]

    def hom_names(self, x: str, y: str) -> tuple[str, ...]:
        return tuple(morphism_name(x, w) for w in self._homs[(x, y)])

    def hom_counts(self) -> list[list[int]]:
        """3x3 grid of hom-set sizes, rows by domain, columns by codomain."""
        return [[len(self._homs[(x, y)]) for y in OBJECTS] for x in OBJECTS]

    def compose_words(self, first: str, then: str) -> str:
        """Normal form of applying ``first`` and then ``then``."""
        return _normalize(then + first, self._rules)


@lru_cache(maxsize=None)
def index_category(mode: str) -> IndexCategory:
    return IndexCategory(mode)


@dataclass(frozen=True)
class Presheaf:
    """A set-valued functor out of the index category.

    Carriers are finite sets of string labels; ``maps`` assigns to every
    generator a total mapping between the right carriers.  Construction
    enforces the shapes; ``validate_presheaf`` checks the equations.
    """

    mode: str
    v_elems: tuple[str, ...]
    pair_elems: tuple[str, ...]
    edge_elems: tuple[str, ...]
    maps: dict[str, dict[str, str]]

    def __post_init__(self):
        if self.mode not in (DIRECTED, UNDIRECTED):
            raise ValueError(f"unknown mode {self.mode!r}")
        carriers = {}
        for attr, value in (("v_elems", self.v_elems), ("pair_elems", self.pair_elems),
                            ("edge_elems", self.edge_elems)):
            elems = tuple(sorted(str(x) for x in value))
            if len(set(elems)) != len(elems):
                raise ValueError(f"duplicate elements in {attr}")
            object.__setattr__(self, attr, elems)
            carriers[attr] = elems
        expected = generators_for_mode(self.mode)
        if set(self.maps) != set(expected):
            raise ValueError(f"maps must have exactly the keys {sorted(expected)}")
        by_object = {"V": self.v_elems, "V2": self.pair_elems, "E": self.edge_elems}
        clean: dict[str, dict[str, str]] = {}
        for gen in expected:
            dom, cod = GENERATOR_TYPES[gen]
            raw = {str(k): str(v) for k, v in dict(self.maps[gen]).items()}
            if set(raw) != set(by_object[dom]):
                raise ValueError(f"map {gen!r} is not total on its domain carrier")
            bad = set(raw.values()) - set(by_object[cod])
            if bad:
                raise ValueError(f"map {gen!r} has values outside its codomain carrier: {sorted(bad)}")
            clean[gen] = raw
        object.__setattr__(self, "maps", clean)

    def carrier(self, obj: str) -> tuple[str, ...]:
        return {"V": self.v_elems, "V2": self.pair_elems, "E": self.edge_elems}[obj]

    def apply(self, names, x: str) -> str:
        """Apply a composite word of generator names, rightmost first."""
        for name in reversed(names):
            x = self.maps[name][x]
        return x

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "V": list(self.v_elems),
            "V2": list(self.pair_elems),
            "E": list(self.edge_elems),
            "maps": {gen: dict(sorted(self.maps[gen].items()))
                     for gen in generators_for_mode(self.mode)},
        }


def presheaf_from_json_dict(data) -> Presheaf:
    if not isinstance(data, dict):
        raise ValueError("presheaf JSON must be an object")
    keys = {"mode", "V", "V2", "E", "maps"}
    if set(data) != keys:
        raise ValueError(f"presheaf JSON must have exactly the keys {sorted(keys)}")
    if not isinstance(data["maps"], dict):
        raise ValueError("maps must be an object")
    return Presheaf(data["mode"], tuple(data["V"]), tuple(data["V2"]), tuple(data["E"]),
                    {k: dict(v) for k, v in data["maps"].items()})


@dataclass(frozen=True)
class PresheafViolation:
    relation: str
    element: str
    lhs: str
    rhs: str

    def __str__(self):
        return (f"{self.relation} fails at {self.element!r}: "
                f"lhs {self.lhs!r} != rhs {self.rhs!r}")


def validate_presheaf(X: Presheaf) -> list[PresheafViolation]:
    """Check every defining equation pointwise; empty list iff X is a functor.

    Each violated relation is reported once, with its first witness in
    canonical element order.
    """
    relations = RELATIONS_UNDIRECTED if X.mode == UNDIRECTED else RELATIONS_DIRECTED
    violations = []
    for name, lhs, rhs, obj in relations:
        for x in X.carrier(obj):
            a = X.apply(lhs, x)
            b = X.apply(rhs, x)
            if a != b:
                violations.append(PresheafViolation(name, x, a, b))
                break
    return violations


def _require_valid(X: Presheaf):
    violations = validate_presheaf(X)
    if violations:
        raise ValueError("invalid presheaf: " + "; ".join(str(v) for v in violations))


def _pairing(X: Presheaf) -> dict[str, tuple[str, str]]:
    return {x: (X.maps["p"][x], X.maps["q"][x]) for x in X.pair_elems}


def is_graph_presheaf(X: Presheaf) -> bool:
    """True iff X presents an honest graph: the (p, q) pairing is a bijection
    onto V x V and e is injective.

    These are the finite-limit conditions that cut the graphs out of the
    presheaf category.
    """
    _require_valid(X)
    pairing = _pairing(X)
    n = len(X.v_elems)
    if len(X.pair_elems) != n * n or len(set(pairing.values())) != len(X.pair_elems):
        return False
    e_images = [X.maps["e"][a] for a in X.edge_elems]
    return len(set(e_images)) == len(e_images)


def reflect(X: Presheaf) -> ReflexiveGraph:
    """The underlying graph of a presheaf: image factorization of the edges.

    Vertices are X_V; u ~> v iff some edge element sits over the pair (u, v).
    Loops are guaranteed by ell and dropped from storage; in undirected mode
    symmetry is guaranteed by s.
    """
    _require_valid(X)
    pairing = _pairing(X)
    edges = set()
    for alpha in X.edge_elems:
        u, v = pairing[X.maps["e"][alpha]]
        if u != v:
            edges.add((u, v))
    return ReflexiveGraph(X.mode, X.v_elems, frozenset(edges))


def embed(G: ReflexiveGraph) -> Presheaf:
    """The presheaf of a graph: all ordered pairs, and one edge element per
    related pair (loops, and both orientations in undirected mode)."""
    verts = G.vertices
    pair_of = {(u, v): pair_label(u, v) for u in verts for v in verts}
    related = [(u, v) for u in verts for v in verts if G.related(u, v)]
    maps = {
        "p": {pair_of[(u, v)]: u for u, v in pair_of},
        "q": {pair_of[(u, v)]: v for u, v in pair_of},
        "delta": {u: pair_of[(u, u)] for u in verts},
        "sigma": {pair_of[(u, v)]: pair_of[(v, u)] for u, v in pair_of},
        "e": {pair_of[(u, v)]: pair_of[(u, v)] for u, v in related},
        "ell": {u: pair_of[(u, u)] for u in verts},
    }
    if G.mode == UNDIRECTED:
        maps["s"] = {pair_of[(u, v)]: pair_of[(v, u)] for u, v in related}
    return Presheaf(G.mode, verts, tuple(pair_of.values()),
                    tuple(pair_of[p] for p in related), maps)


def representable(obj: str, mode: str) -> ReflexiveGraph:
    """The graph presented by an index object: a point for V, two points for
    V2, a single edge for E."""
    if obj == "V":
        return make_path(0, mode)
    if obj == "V2":
        point = make_path(0, mode)
        return disjoint_union(point, point)
    if obj == "E":
        return make_path(1, mode)
    raise ValueError(f"unknown index object {obj!r}; expected one of {OBJECTS}")


@dataclass(frozen=True)
class Colimit:
    graph: ReflexiveGraph
    cocone: tuple[GraphHom, ...]


def colimit(graphs, homs) -> Colimit:
    """Colimit of a finite diagram of graphs.

    ``homs`` is a sequence of (source index, target index, mapping) triples;
    mappings may be dicts or GraphHom values.  Vertices of the colimit are
    the classes of the equivalence generated by the diagram's homs (computed
    by union-find); edges are the images of all stored edges, with induced
    loops dropped.
    """
    graphs = list(graphs)
    if not graphs:
        raise ValueError("empty diagram: at least one graph is required")
    mode = require_same_mode(*graphs)
    arrows = []
    for src, dst, mapping in homs:
        if isinstance(mapping, GraphHom):
            if mapping.dom != graphs[src] or mapping.cod != graphs[dst]:
                raise ValueError("diagram hom endpoints do not match the indexed graphs")
            arrow = mapping
        else:
            arrow = GraphHom(graphs[src], graphs[dst], mapping)
        arrows.append((src, dst, arrow))

    parent: dict[tuple[int, str], tuple[int, str]] = {}
    for i, g in enumerate(graphs):
        for v in g.vertices:
            parent[(i, v)] = (i, v)

    def find(t):
        root = t
        while parent[root] != root:
            root = parent[root]
        while parent[t] != root:
            parent[t], t = root, parent[t]
        return root

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for src, dst, arrow in arrows:
        for v in graphs[src].vertices:
            union((src, v), (dst, arrow(v)))

    members: dict[tuple[int, str], list[str]] = {}
    for i, g in enumerate(graphs):
        for v in g.vertices:
            members.setdefault(find((i, v)), []).append(f"{i}.{v}")
    label = {root: min(tags) for root, tags in members.items()}

    edges = set()
    for i, g in enumerate(graphs):
        for u, v in g.edges:
            a, b = label[find((i, u))], label[find((i, v))]
            if a != b:
                edges.add((a, b))
    result = ReflexiveGraph(mode, tuple(label.values()), frozenset(edges))
    cocone = tuple(
        GraphHom(g, result, {v: label[find((i, v))] for v in g.vertices})
        for i, g in enumerate(graphs))
    for src, dst, arrow in arrows:
        for v in graphs[src].vertices:
            if cocone[dst](arrow(v)) != cocone[src](v):
                raise RuntimeError("cocone does not commute with a diagram hom")
    return Colimit(result, cocone)


@dataclass(frozen=True)
class DensityResult:
    graph: ReflexiveGraph
    witness: GraphHom
    points: int
    edge_copies: int


def density_recolimit(G: ReflexiveGraph) -> DensityResult:
    """Rebuild G as the canonical colimit of representables.

    One point per vertex and one single-edge graph per stored edge (one per
    orientation in undirected mode), glued along the endpoint inclusions.
    The returned witness is an isomorphism from the colimit back to G.
    """
    point = make_path(0, G.mode)
    edge = make_path(1, G.mode)
    graphs = [point for _ in G.vertices]
    point_index = {v: i for i, v in enumerate(G.vertices)}
    homs = []
    edge_copies = 0
    for u, v in sorted(G.edges):
        orientations = [(u, v)] if G.mode == DIRECTED else [(u, v), (v, u)]
        for x, y in orientations:
            k = len(graphs)
            graphs.append(edge)
            homs.append((point_index[x], k, {"0": "0"}))
            homs.append((point_index[y], k, {"0": "1"}))
            edge_copies += 1
    if not graphs:
        empty = ReflexiveGraph(G.mode)
        return DensityResult(empty, GraphHom(empty, G, {}), 0, 0)
    col = colimit(graphs, homs)
    mapping = {col.cocone[point_index[v]]("0"): v for v in G.vertices}
    if len(mapping) != len(col.graph.vertices):
        raise ValueError("density colimit does not have one class per vertex")
    witness = GraphHom(col.graph, G, mapping)
    inverse(witness)  # raises unless the witness is an isomorphism
    return DensityResult(col.graph, witness, len(G.vertices), edge_copies)


@dataclass(frozen=True)
class AdjunctionCheck:
    presheaf_morphisms: int
    graph_homs: int
    bijective: bool

    @property
    def ok(self) -> bool:
        return self.bijective


def _natural_extension(X: Presheaf, Y: Presheaf, m_v: dict[str, str]):
    """Extend a vertex-component map to a natural transformation X -> Y,
    for Y a graph presheaf (pair and edge components are forced)."""
    pairing_x = _pairing(X)
    pair_of_y = {(Y.maps["p"][x], Y.maps["q"][x]): x for x in Y.pair_elems}
    edge_of_y = {Y.maps["e"][a]: a for a in Y.edge_elems}
    m_pair = {}
    for x in X.pair_elems:
        u, v = pairing_x[x]
        target = pair_of_y.get((m_v[u], m_v[v]))
        if target is None:
            return None
        m_pair[x] = target
    m_edge = {}
    for alpha in X.edge_elems:
        target = edge_of_y.get(m_pair[X.maps["e"][alpha]])
        if target is None:
            return None
        m_edge[alpha] = target
    components = {"V": m_v, "V2": m_pair, "E": m_edge}
    for gen in generators_for_mode(X.mode):
        dom, cod = GENERATOR_TYPES[gen]
        m_dom, m_cod = components[dom], components[cod]
        for x in X.carrier(dom):
            if m_cod[X.maps[gen][x]] != Y.maps[gen][m_dom[x]]:
                return None
    return components


def reflector_adjunction_check(X: Presheaf, G: ReflexiveGraph) -> AdjunctionCheck:
    """Verify the reflector adjunction on one pair: restriction to vertex
    components is a bijection between presheaf morphisms X -> embed(G) and
    graph homs reflect(X) -> G."""
    _require_valid(X)
    if X.mode != G.mode:
        raise ValueError("presheaf and graph modes differ")
    Y = embed(G)
    presheaf_side = set()
    for images in itertools.product(G.vertices, repeat=len(X.v_elems)):
        m_v = dict(zip(X.v_elems, images))
        if _natural_extension(X, Y, m_v) is not None:
            presheaf_side.add(images)
    R = reflect(X)
    graph_side = set(_hom_image_tuples(R, G))  # R.vertices == X.v_elems, sorted
    return AdjunctionCheck(len(presheaf_side), len(graph_side),
                           presheaf_side == graph_side)
