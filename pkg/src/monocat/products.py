"""The box and categorical products on reflexive graphs.

Both products share the vertex set G x H; they differ in when a product
pair may step: the box product moves in exactly one coordinate, while the
categorical product also allows both coordinates to move at once.  The
categorical rule is implemented in its three-clause form; because the
relation is reflexive this coincides with the two-clause joint-step rule,
which is exposed separately so the coincidence can be checked rather than
assumed.

Internal homs make both products biclosed: the hom graph on Hom(B, C)
is built explicitly and ``curry``/``uncurry`` witness the bijection
Hom(A (x) B, C) = Hom(A, hom(B, C)).
"""

from __future__ import annotations

from functools import lru_cache

from .graphs import (
    GraphHom,
    ReflexiveGraph,
    _hom_image_tuples,
    make_path,
    require_same_mode,
)

BOX = "box"
CATEGORICAL = "categorical"
PRODUCT_KINDS = (BOX, CATEGORICAL)

_ESCAPES = str.maketrans({
    "\\": "\\\\", ",": "\\,", "(": "\\(", ")": "\\)", "[": "\\[", "]": "\\]",
})


def _check_kind(kind):
    if kind not in PRODUCT_KINDS:
        raise ValueError(f"unknown product kind {kind!r}; expected one of {PRODUCT_KINDS}")


def _escape(label: str) -> str:
    return label.translate(_ESCAPES)


def pair_label(g: str, h: str) -> str:
    """Canonical, collision-free label for a product vertex."""
    return f"({_escape(g)},{_escape(h)})"


def hom_label(images) -> str:
    """Canonical label for an internal-hom vertex (images in domain order)."""
    return "[" + ",".join(_escape(x) for x in images) + "]"


def _build_product(mode, G, H, step):
    verts = {(g, h): pair_label(g, h) for g in G.vertices for h in H.vertices}
    pairs = list(verts)
    edges = set()
    for g, h in pairs:
        for g2, h2 in pairs:
            if (g, h) != (g2, h2) and step(g, h, g2, h2):
                edges.add((verts[(g, h)], verts[(g2, h2)]))
    return ReflexiveGraph(mode, tuple(verts.values()), frozenset(edges))


@lru_cache(maxsize=None)
def tensor(kind: str, G: ReflexiveGraph, H: ReflexiveGraph) -> ReflexiveGraph:
    """Product graph of the given kind on the vertex set G x H."""
    _check_kind(kind)
    mode = require_same_mode(G, H)
    if kind == BOX:
        def step(g, h, g2, h2):
            return (g == g2 and H.related(h, h2)) or (G.related(g, g2) and h == h2)
    else:
        def step(g, h, g2, h2):
            return ((g == g2 and H.related(h, h2))
                    or (G.related(g, g2) and h == h2)
                    or (G.related(g, g2) and H.related(h, h2)))
    return _build_product(mode, G, H, step)


def categorical_joint_rule(G: ReflexiveGraph, H: ReflexiveGraph) -> ReflexiveGraph:
    """Two-clause categorical product: both coordinates step simultaneously.

    Each coordinate may rest on its loop, so on reflexive graphs this must
    produce the same edge set as the three-clause rule used by ``tensor``.
    """
    mode = require_same_mode(G, H)
    return _build_product(mode, G, H,
                          lambda g, h, g2, h2: G.related(g, g2) and H.related(h, h2))


def tensor_hom(kind: str, f: GraphHom, g: GraphHom) -> GraphHom:
    """Functorial action: (u, v) -> (f(u), g(v))."""
    require_same_mode(f.dom, g.dom)
    dom_pairs = _pair_table(f.dom, g.dom)
    cod_pairs = _pair_table(f.cod, g.cod)
    f_at, g_at = f.as_dict, g.as_dict
    mapping = {dom_pairs[(u, v)]: cod_pairs[(f_at[u], g_at[v])]
               for u in f.dom.vertices for v in g.dom.vertices}
    return GraphHom(tensor(kind, f.dom, g.dom), tensor(kind, f.cod, g.cod), mapping)


def _related_index_pairs(B):
    verts = B.vertices
    n = len(verts)
    return tuple((i, j) for i in range(n) for j in range(n) if B.related(verts[i], verts[j]))


@lru_cache(maxsize=None)
def internal_hom(kind: str, B: ReflexiveGraph, C: ReflexiveGraph) -> ReflexiveGraph:
    """The exponential graph on Hom(B, C) for the given product kind.

    box:          f ~> g  iff  f(b) ~> g(b) in C for every vertex b;
    categorical:  f ~> g  iff  f(b) ~> g(b') in C for every related b ~> b'
                  (loops included).
    """
    _check_kind(kind)
    mode = require_same_mode(B, C)
    homs = _hom_image_tuples(B, C)
    labels = [hom_label(t) for t in homs]
    rel = C.relation
    if kind == BOX:
        idx = tuple(range(len(B.vertices)))

        def related(ft, gt):
            return all((ft[i], gt[i]) in rel for i in idx)
    else:
        pairs = _related_index_pairs(B)

        def related(ft, gt):
            return all((ft[i], gt[j]) in rel for i, j in pairs)

    edges = set()
    for i, ft in enumerate(homs):
        for j, gt in enumerate(homs):
            if i != j and related(ft, gt):
                edges.add((labels[i], labels[j]))
    return ReflexiveGraph(mode, tuple(labels), frozenset(edges))


@lru_cache(maxsize=None)
def _pair_table(A, B):
    return {(a, b): pair_label(a, b) for a in A.vertices for b in B.vertices}


@lru_cache(maxsize=None)
def _label_by_images(B, C):
    return {t: hom_label(t) for t in _hom_image_tuples(B, C)}


@lru_cache(maxsize=None)
def _images_by_label(B, C):
    return {label: t for t, label in _label_by_images(B, C).items()}


def curry(kind: str, phi: GraphHom, A: ReflexiveGraph, B: ReflexiveGraph) -> GraphHom:
    """Transpose phi: A (x) B -> C into A -> hom(B, C)."""
    C = phi.cod
    if phi.dom != tensor(kind, A, B):
        raise ValueError("phi domain is not the stated tensor product")
    H = internal_hom(kind, B, C)
    label_by_images = _label_by_images(B, C)
    pairs = _pair_table(A, B)
    phi_at = phi.as_dict
    bv = B.vertices
    mapping = {}
    for a in A.vertices:
        images = tuple(phi_at[pairs[(a, b)]] for b in bv)
        label = label_by_images.get(images)
        if label is None:
            raise ValueError(f"phi({a!r}, -) is not a homomorphism B -> C")
        mapping[a] = label
    return GraphHom(A, H, mapping)


def uncurry(kind: str, psi: GraphHom, B: ReflexiveGraph, C: ReflexiveGraph) -> GraphHom:
    """Transpose psi: A -> hom(B, C) back into A (x) B -> C."""
    if psi.cod != internal_hom(kind, B, C):
        raise ValueError("psi codomain is not the stated internal hom")
    A = psi.dom
    images_by_label = _images_by_label(B, C)
    pairs = _pair_table(A, B)
    psi_at = psi.as_dict
    index = {b: i for i, b in enumerate(B.vertices)}
    mapping = {pairs[(a, b)]: images_by_label[psi_at[a]][index[b]]
               for a in A.vertices for b in B.vertices}
    return GraphHom(tensor(kind, A, B), C, mapping)


def internal_hom_postcompose(kind: str, B: ReflexiveGraph, c: GraphHom) -> GraphHom:
    """hom(B, -) applied to c: C -> C', sending f to c o f."""
    mapping = {hom_label(t): hom_label(tuple(c(x) for x in t))
               for t in _hom_image_tuples(B, c.dom)}
    return GraphHom(internal_hom(kind, B, c.dom), internal_hom(kind, B, c.cod), mapping)


def canonical_associator(kind: str, A: ReflexiveGraph, B: ReflexiveGraph,
                         C: ReflexiveGraph) -> GraphHom:
    """Re-bracketing ((a,b),c) -> (a,(b,c)); an isomorphism for both kinds."""
    require_same_mode(A, B, C)
    dom = tensor(kind, tensor(kind, A, B), C)
    cod = tensor(kind, A, tensor(kind, B, C))
    mapping = {pair_label(pair_label(a, b), c): pair_label(a, pair_label(b, c))
               for a in A.vertices for b in B.vertices for c in C.vertices}
    return GraphHom(dom, cod, mapping)


def canonical_unitors(kind: str, A: ReflexiveGraph) -> tuple[GraphHom, GraphHom]:
    """The projections (unit, a) -> a and (a, unit) -> a, as (left, right)."""
    unit = make_path(0, A.mode)
    left = GraphHom(tensor(kind, unit, A), A,
                    {pair_label("0", a): a for a in A.vertices})
    right = GraphHom(tensor(kind, A, unit), A,
                     {pair_label(a, "0"): a for a in A.vertices})
    return left, right


def swap_hom(kind: str, G: ReflexiveGraph, H: ReflexiveGraph) -> GraphHom:
    """The symmetry (g, h) -> (h, g) from G (x) H to H (x) G."""
    mapping = {pair_label(g, h): pair_label(h, g)
               for g in G.vertices for h in H.vertices}
    return GraphHom(tensor(kind, G, H), tensor(kind, H, G), mapping)
