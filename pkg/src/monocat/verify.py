"""Monoidal-structure verification over a finite corpus of graphs.

Each check takes a tensor oracle (a candidate monoidal structure) and a
corpus, and returns a CoherenceReport whose failing laws carry a replayable
counterexample.  Sweeps are deterministic: objects, homs and composable
chains are enumerated in canonical order and truncated by the fixed caps
below, so repeated runs produce byte-identical reports.

Oracles must follow the canonical labeling contract: product vertices are
labeled with the pair rendering of ``products.pair_label`` and internal-hom
vertices with ``products.hom_label`` over the codomain's hom enumeration.
The two built-in oracles (box and categorical) wrap the products module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from . import products
from .graphs import (
    GraphHom,
    ModeMismatchError,
    ReflexiveGraph,
    _hom_image_tuples,
    compose,
    disjoint_union,
    enumerate_homs,
    identity,
    is_iso,
    make_named,
    make_path,
    require_same_mode,
    union_left,
    union_right,
)
from .presheaves import colimit
from .products import hom_label, pair_label

# Deterministic sweep caps.  Tuned so that the full four-check suite stays
# well inside the runtime budget while covering every law shape.
HOM_CAP = 2                    # homs per object pair in naturality sweeps
CHAIN_CAP = 8                  # composable hom chains per object triple
INTERCHANGE_COMBO_CAP = 16     # chain pairs tested per triple
INTERCHANGE_CROSS_CAP = 4      # chain pairs per 6-tuple of small objects
SMALL_MAX_VERTICES = 2         # sub-corpus bound for cross-shaped sweeps
PENTAGON_MAX_VERTICES = 2      # sub-corpus bound for pentagon 4-tuples
ASSOCIATOR_MAX_PRODUCT = 36    # |A|*|B|*|C| bound for associator sweeps
BICLOSED_MAX_PAIR = 12         # |A|*|B| and |B|*|C| bound for adjunction triples
BICLOSED_MAX_PRODUCT = 30     # |A|*|B|*|C| bound for adjunction triples
BICLOSED_PHI_CAP = 3           # transposes per triple in naturality sweeps
BICLOSED_ROUNDTRIP_CAP = 128   # round-tripped homs per side per triple


@dataclass(frozen=True)
class TensorOracle:
    """A pluggable candidate monoidal structure.

    All fields beyond ``unit`` are callables: ``tensor_ob(G, H)``,
    ``tensor_hom(f, g)``, ``associator(A, B, C)``, ``left_unitor(A)``,
    ``right_unitor(A)``, ``internal_hom(B, C)``, ``curry(phi, A, B, C)``
    and ``uncurry(psi, A, B, C)``.
    """

    name: str
    mode: str
    unit: ReflexiveGraph
    tensor_ob: Callable
    tensor_hom: Callable
    associator: Callable
    left_unitor: Callable
    right_unitor: Callable
    internal_hom: Callable
    curry: Callable
    uncurry: Callable


def builtin_oracle(kind: str, mode: str) -> TensorOracle:
    """The box or categorical product as a tensor oracle."""
    products._check_kind(kind)

    def unitor(side):
        return lambda A: products.canonical_unitors(kind, A)[side]

    return TensorOracle(
        name=kind,
        mode=mode,
        unit=make_path(0, mode),
        tensor_ob=lambda G, H: products.tensor(kind, G, H),
        tensor_hom=lambda f, g: products.tensor_hom(kind, f, g),
        associator=lambda A, B, C: products.canonical_associator(kind, A, B, C),
        left_unitor=unitor(0),
        right_unitor=unitor(1),
        internal_hom=lambda B, C: products.internal_hom(kind, B, C),
        curry=lambda phi, A, B, C: products.curry(kind, phi, A, B),
        uncurry=lambda psi, A, B, C: products.uncurry(kind, psi, B, C),
    )


def default_corpus(mode: str) -> list[ReflexiveGraph]:
    """The standard verification corpus: empty, point, edge, length-2 path,
    the two squares of the edge graph, and edge + point."""
    edge = make_path(1, mode)
    square_names = ("csq", "dsq") if mode == "directed" else ("c4", "k4r")
    return [
        make_named("empty", mode),
        make_path(0, mode),
        edge,
        make_path(2, mode),
        make_named(square_names[0], mode),
        make_named(square_names[1], mode),
        disjoint_union(edge, make_path(0, mode)),
    ]


@dataclass(frozen=True)
class LawResult:
    law: str
    passed: bool
    instances: int
    counterexample: dict | None

    def to_json_dict(self) -> dict:
        out = {"law": self.law, "passed": self.passed, "instances": self.instances}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass(frozen=True)
class CoherenceReport:
    oracle: str
    mode: str
    check: str
    laws: tuple[LawResult, ...]

    @property
    def passed(self) -> bool:
        return all(law.passed for law in self.laws)

    def to_json_dict(self) -> dict:
        return {
            "oracle": self.oracle,
            "mode": self.mode,
            "check": self.check,
            "passed": self.passed,
            "laws": [law.to_json_dict() for law in self.laws],
        }


class _Law:
    """Accumulates instances of one law, keeping the first counterexample."""

    def __init__(self, name: str):
        self.name = name
        self.instances = 0
        self.counterexample: dict | None = None

    @property
    def failed(self) -> bool:
        return self.counterexample is not None

    def check(self, context: dict, fn: Callable[[], bool]):
        """Run one instance; an exception from the oracle is a failure."""
        if self.failed:
            return
        self.instances += 1
        try:
            ok = fn()
            error = None
        except Exception as exc:  # broken oracle output
            ok = False
            error = str(exc)
        if not ok:
            ce = dict(context)
            if error is not None:
                ce["error"] = error
            self.counterexample = ce

    def result(self) -> LawResult:
        return LawResult(self.name, not self.failed, self.instances, self.counterexample)


def _report(oracle, check, laws) -> CoherenceReport:
    return CoherenceReport(oracle.name, oracle.mode, check,
                           tuple(law.result() for law in laws))


def _gjson(G: ReflexiveGraph) -> dict:
    return G.to_json_dict()


def _hjson(f: GraphHom) -> dict:
    return f.to_json_dict()


def _require_corpus(oracle, corpus):
    corpus = list(corpus)
    if corpus and require_same_mode(*corpus) != oracle.mode:
        raise ModeMismatchError("corpus mode differs from oracle mode")
    return corpus


def _capped_homs(A, B, cap):
    return enumerate_homs(A, B)[:cap]


def _chains(A, B, C, cap=CHAIN_CAP):
    """First composable hom pairs A -> B -> C in canonical order."""
    pairs = itertools.product(enumerate_homs(A, B), enumerate_homs(B, C))
    return list(itertools.islice(pairs, cap))


def check_bifunctoriality(oracle: TensorOracle, corpus) -> CoherenceReport:
    """Identity preservation and the interchange law for the tensor's action
    on homomorphisms."""
    corpus = _require_corpus(oracle, corpus)
    law_id = _Law("tensor-identity")
    law_inter = _Law("tensor-interchange")

    for A, B in itertools.product(corpus, repeat=2):
        context = {"objects": [_gjson(A), _gjson(B)]}
        law_id.check(context, lambda A=A, B=B: (
            oracle.tensor_hom(identity(A), identity(B)) == identity(oracle.tensor_ob(A, B))))

    def interchange(f1, f2, g1, g2):
        lhs = oracle.tensor_hom(compose(f1, f2), compose(g1, g2))
        rhs = compose(oracle.tensor_hom(f1, g1), oracle.tensor_hom(f2, g2))
        return lhs == rhs

    # Chain pairs drawn from the same object triple, over the whole corpus.
    for A, B, C in itertools.product(corpus, repeat=3):
        if law_inter.failed:
            break
        chains = _chains(A, B, C)
        combos = itertools.islice(itertools.product(chains, chains), INTERCHANGE_COMBO_CAP)
        for (f1, f2), (g1, g2) in combos:
            context = {"objects": [_gjson(A), _gjson(B), _gjson(C)],
                       "homs": [_hjson(f1), _hjson(f2), _hjson(g1), _hjson(g2)]}
            law_inter.check(context, lambda f1=f1, f2=f2, g1=g1, g2=g2: (
                interchange(f1, f2, g1, g2)))
    # Chain pairs across different small triples.
    small = [G for G in corpus if len(G.vertices) <= SMALL_MAX_VERTICES]
    for tf in itertools.product(small, repeat=3):
        if law_inter.failed:
            break
        for tg in itertools.product(small, repeat=3):
            combos = itertools.islice(
                itertools.product(_chains(*tf), _chains(*tg)), INTERCHANGE_CROSS_CAP)
            for (f1, f2), (g1, g2) in combos:
                context = {"objects": [_gjson(X) for X in tf + tg],
                           "homs": [_hjson(f1), _hjson(f2), _hjson(g1), _hjson(g2)]}
                law_inter.check(context, lambda f1=f1, f2=f2, g1=g1, g2=g2: (
                    interchange(f1, f2, g1, g2)))
    return _report(oracle, "bifunctoriality", [law_id, law_inter])


def _iso_between(f: GraphHom, dom: ReflexiveGraph, cod: ReflexiveGraph) -> bool:
    return f.dom == dom and f.cod == cod and is_iso(f)


def check_coherence(oracle: TensorOracle, corpus) -> CoherenceReport:
    """Associator and unitor isomorphisms, their naturality, and the pentagon
    and triangle identities."""
    corpus = _require_corpus(oracle, corpus)
    unit = oracle.unit
    law_assoc_iso = _Law("associator-iso")
    law_unitor_iso = _Law("unitor-iso")
    law_assoc_nat = _Law("associator-naturality")
    law_lambda_nat = _Law("left-unitor-naturality")
    law_rho_nat = _Law("right-unitor-naturality")
    law_pentagon = _Law("pentagon")
    law_triangle = _Law("triangle")

    def size(*graphs):
        n = 1
        for G in graphs:
            n *= len(G.vertices)
        return n

    for A, B, C in itertools.product(corpus, repeat=3):
        if size(A, B, C) > ASSOCIATOR_MAX_PRODUCT:
            continue
        context = {"objects": [_gjson(A), _gjson(B), _gjson(C)]}
        law_assoc_iso.check(context, lambda A=A, B=B, C=C: _iso_between(
            oracle.associator(A, B, C),
            oracle.tensor_ob(oracle.tensor_ob(A, B), C),
            oracle.tensor_ob(A, oracle.tensor_ob(B, C))))

    for A in corpus:
        context = {"objects": [_gjson(A)]}
        law_unitor_iso.check(context, lambda A=A: (
            _iso_between(oracle.left_unitor(A), oracle.tensor_ob(unit, A), A)
            and _iso_between(oracle.right_unitor(A), oracle.tensor_ob(A, unit), A)))

    small = [G for G in corpus if len(G.vertices) <= SMALL_MAX_VERTICES]

    def assoc_nat(f, g, h):
        lhs = compose(oracle.tensor_hom(oracle.tensor_hom(f, g), h),
                      oracle.associator(f.cod, g.cod, h.cod))
        rhs = compose(oracle.associator(f.dom, g.dom, h.dom),
                      oracle.tensor_hom(f, oracle.tensor_hom(g, h)))
        return lhs == rhs

    # Naturality in each slot separately; identities elsewhere.  Joint
    # naturality follows from the interchange law checked independently.
    for slot in range(3):
        for X, Y in itertools.product(corpus, repeat=2):
            for P, Q in itertools.product(small, repeat=2):
                for f in _capped_homs(X, Y, HOM_CAP):
                    parts = [identity(P), identity(Q)]
                    parts.insert(slot, f)
                    context = {"slot": slot,
                               "objects": [_gjson(g.dom) for g in parts],
                               "homs": [_hjson(g) for g in parts]}
                    law_assoc_nat.check(context, lambda parts=parts: assoc_nat(*parts))

    for X, Y in itertools.product(corpus, repeat=2):
        for f in _capped_homs(X, Y, HOM_CAP):
            context = {"objects": [_gjson(X), _gjson(Y)], "homs": [_hjson(f)]}
            law_lambda_nat.check(context, lambda f=f, X=X, Y=Y: (
                compose(oracle.tensor_hom(identity(unit), f), oracle.left_unitor(Y))
                == compose(oracle.left_unitor(X), f)))
            law_rho_nat.check(context, lambda f=f, X=X, Y=Y: (
                compose(oracle.tensor_hom(f, identity(unit)), oracle.right_unitor(Y))
                == compose(oracle.right_unitor(X), f)))

    pentagon_corpus = [G for G in corpus if len(G.vertices) <= PENTAGON_MAX_VERTICES]
    for A, B, C, D in itertools.product(pentagon_corpus, repeat=4):
        context = {"objects": [_gjson(A), _gjson(B), _gjson(C), _gjson(D)]}

        def pentagon(A=A, B=B, C=C, D=D):
            AB = oracle.tensor_ob(A, B)
            CD = oracle.tensor_ob(C, D)
            BC = oracle.tensor_ob(B, C)
            path_right = compose(oracle.associator(AB, C, D), oracle.associator(A, B, CD))
            path_left = compose(
                compose(oracle.tensor_hom(oracle.associator(A, B, C), identity(D)),
                        oracle.associator(A, BC, D)),
                oracle.tensor_hom(identity(A), oracle.associator(B, C, D)))
            return path_right == path_left

        law_pentagon.check(context, pentagon)

    for X, Y in itertools.product(corpus, repeat=2):
        context = {"objects": [_gjson(X), _gjson(Y)]}
        law_triangle.check(context, lambda X=X, Y=Y: (
            compose(oracle.associator(X, unit, Y),
                    oracle.tensor_hom(identity(X), oracle.left_unitor(Y)))
            == oracle.tensor_hom(oracle.right_unitor(X), identity(Y))))

    return _report(oracle, "coherence",
                   [law_assoc_iso, law_unitor_iso, law_assoc_nat, law_lambda_nat,
                    law_rho_nat, law_pentagon, law_triangle])


def _biclosed_triples(corpus):
    for A, B, C in itertools.product(corpus, repeat=3):
        a, b, c = len(A.vertices), len(B.vertices), len(C.vertices)
        if a * b <= BICLOSED_MAX_PAIR and b * c <= BICLOSED_MAX_PAIR \
                and a * b * c <= BICLOSED_MAX_PRODUCT:
            yield A, B, C


def _generic_swap(oracle, G, H) -> GraphHom:
    """The symmetry G (x) H -> H (x) G under the canonical label contract."""
    mapping = {pair_label(g, h): pair_label(h, g)
               for g in G.vertices for h in H.vertices}
    return GraphHom(oracle.tensor_ob(G, H), oracle.tensor_ob(H, G), mapping)


def _prefix_homs(G, H, cap):
    """The first homs G -> H in canonical order, built without caching."""
    tuples = _hom_image_tuples(G, H)
    return [GraphHom(G, H, dict(zip(G.vertices, t))) for t in tuples[:cap]]


def check_biclosed(oracle: TensorOracle, corpus) -> CoherenceReport:
    """Currying round trips, hom-set cardinalities, naturality of currying,
    and the left adjunction obtained through the swap symmetry.

    Triples are restricted by the deterministic size caps.  Cardinalities
    compare fully enumerated hom-sets; the round trips run over a canonical
    prefix of each side when a hom-set exceeds BICLOSED_ROUNDTRIP_CAP.
    """
    corpus = _require_corpus(oracle, corpus)
    law_card = _Law("hom-set-cardinality")
    law_curry_rt = _Law("curry-round-trip")
    law_uncurry_rt = _Law("uncurry-round-trip")
    law_nat_dom = _Law("curry-naturality-domain")
    law_nat_cod = _Law("curry-naturality-codomain")
    law_left = _Law("left-adjunction-via-swap")

    small = [G for G in corpus if len(G.vertices) <= SMALL_MAX_VERTICES]

    for A, B, C in _biclosed_triples(corpus):
        context3 = {"objects": [_gjson(A), _gjson(B), _gjson(C)]}
        try:
            T = oracle.tensor_ob(A, B)
            H = oracle.internal_hom(B, C)
        except Exception as exc:
            law_card.check(context3, lambda exc=exc: (_ for _ in ()).throw(exc))
            continue
        n_left = len(_hom_image_tuples(T, C))
        n_right = len(_hom_image_tuples(A, H))
        law_card.check(dict(context3, counts=[n_left, n_right]),
                       lambda a=n_left, b=n_right: a == b)
        left_side = _prefix_homs(T, C, BICLOSED_ROUNDTRIP_CAP)
        right_side = _prefix_homs(A, H, BICLOSED_ROUNDTRIP_CAP)

        for phi in left_side:
            context = dict(context3, phi=_hjson(phi))
            law_curry_rt.check(context, lambda phi=phi, A=A, B=B, C=C, T=T, H=H: (
                (lambda psi: psi.dom == A and psi.cod == H
                 and oracle.uncurry(psi, A, B, C) == phi)(oracle.curry(phi, A, B, C))))
        for psi in right_side:
            context = dict(context3, psi=_hjson(psi))
            law_uncurry_rt.check(context, lambda psi=psi, A=A, B=B, C=C, T=T: (
                (lambda phi: phi.dom == T and phi.cod == C
                 and oracle.curry(phi, A, B, C) == psi)(oracle.uncurry(psi, A, B, C))))

        # Left closure: |Hom(A (x) B, C)| agrees with Hom(B, hom(A, C)) via
        # the swap; the swap itself must be an isomorphism.  Same pair bound
        # as the triple filter, now applied to the (A, C) hom graph.
        if len(A.vertices) * len(C.vertices) <= BICLOSED_MAX_PAIR:

            def left_adjunction(A=A, B=B, C=C, T=T, n=n_left):
                sw = _generic_swap(oracle, B, A)
                if not (is_iso(sw) and sw.cod == T):
                    return False
                return n == len(_hom_image_tuples(B, oracle.internal_hom(A, C)))

            law_left.check(context3, left_adjunction)

        phis = left_side[:BICLOSED_PHI_CAP]
        for A2 in small:
            if len(A2.vertices) * len(B.vertices) > BICLOSED_MAX_PAIR:
                continue
            for a in _capped_homs(A2, A, HOM_CAP):
                for phi in phis:
                    context = dict(context3, pre=_hjson(a), phi=_hjson(phi))

                    def nat_dom(a=a, phi=phi, A=A, A2=A2, B=B, C=C):
                        pre = oracle.tensor_hom(a, identity(B))
                        lhs = oracle.curry(compose(pre, phi), A2, B, C)
                        rhs = compose(a, oracle.curry(phi, A, B, C))
                        return lhs == rhs

                    law_nat_dom.check(context, nat_dom)
        for C2 in small:
            for c in _capped_homs(C, C2, HOM_CAP):
                for phi in phis:
                    context = dict(context3, post=_hjson(c), phi=_hjson(phi))

                    def nat_cod(c=c, phi=phi, A=A, B=B, C=C, C2=C2):
                        lhs = oracle.curry(compose(phi, c), A, B, C2)
                        post = _posthom(oracle, B, c)
                        rhs = compose(oracle.curry(phi, A, B, C), post)
                        return lhs == rhs

                    law_nat_cod.check(context, nat_cod)

    return _report(oracle, "biclosed",
                   [law_card, law_curry_rt, law_uncurry_rt, law_left,
                    law_nat_dom, law_nat_cod])


def _posthom(oracle, B, c) -> GraphHom:
    """hom(B, -) on a codomain hom, built from the canonical hom labels."""
    mapping = {hom_label(t): hom_label(tuple(c(x) for x in t))
               for t in _hom_image_tuples(B, c.dom)}
    return GraphHom(oracle.internal_hom(B, c.dom), oracle.internal_hom(B, c.cod), mapping)


def _comparison_iso(f: GraphHom) -> bool:
    return is_iso(f)


def check_cocontinuity(oracle: TensorOracle, corpus) -> CoherenceReport:
    """Preservation of the initial object, binary coproducts, and a fixed
    coequalizer and pushout, each via an explicit comparison isomorphism."""
    corpus = _require_corpus(oracle, corpus)
    mode = oracle.mode
    empty = make_named("empty", mode)
    law_initial = _Law("initial-object")
    law_coproduct = _Law("binary-coproduct")
    law_coeq = _Law("coequalizer")
    law_pushout = _Law("pushout")

    for A in corpus:
        context = {"objects": [_gjson(A)]}
        law_initial.check(context, lambda A=A: (
            not oracle.tensor_ob(A, empty).vertices
            and not oracle.tensor_ob(empty, A).vertices))

    for A in corpus:
        for G, H in itertools.product(corpus, repeat=2):
            context = {"objects": [_gjson(A), _gjson(G), _gjson(H)]}

            def coproduct(A=A, G=G, H=H):
                lhs = oracle.tensor_ob(A, disjoint_union(G, H))
                rhs = disjoint_union(oracle.tensor_ob(A, G), oracle.tensor_ob(A, H))
                mapping = {}
                for a in A.vertices:
                    for g in G.vertices:
                        mapping[union_left(pair_label(a, g))] = pair_label(a, union_left(g))
                    for h in H.vertices:
                        mapping[union_right(pair_label(a, h))] = pair_label(a, union_right(h))
                return _comparison_iso(GraphHom(rhs, lhs, mapping))

            law_coproduct.check(context, coproduct)

    point = make_path(0, mode)
    edge = make_path(1, mode)
    fixed = (
        (law_coeq, "coequalizer", [point, edge],
         [(0, 1, {"0": "0"}), (0, 1, {"0": "1"})]),
        (law_pushout, "pushout", [point, edge, edge],
         [(0, 1, {"0": "1"}), (0, 2, {"0": "0"})]),
    )
    for law, name, graphs, homs in fixed:
        base = colimit(graphs, homs)
        for A in corpus:
            context = {"diagram": name, "objects": [_gjson(A)]}

            def preserved(A=A, graphs=graphs, homs=homs, base=base):
                mapped_graphs = [oracle.tensor_ob(A, D) for D in graphs]
                mapped_homs = []
                for i, j, m in homs:
                    arrow = GraphHom(graphs[i], graphs[j], m)
                    mapped_homs.append((i, j, oracle.tensor_hom(identity(A), arrow)))
                mapped = colimit(mapped_graphs, mapped_homs)
                target = oracle.tensor_ob(A, base.graph)
                mapping = {}
                for i, D in enumerate(graphs):
                    for a in A.vertices:
                        for v in D.vertices:
                            src = mapped.cocone[i](pair_label(a, v))
                            dst = pair_label(a, base.cocone[i](v))
                            if mapping.setdefault(src, dst) != dst:
                                return False
                return _comparison_iso(GraphHom(mapped.graph, target, mapping))

            law.check(context, preserved)

    return _report(oracle, "cocontinuity", [law_initial, law_coproduct, law_coeq, law_pushout])


ALL_CHECKS = (check_bifunctoriality, check_coherence, check_biclosed, check_cocontinuity)


def run_all(oracle: TensorOracle, corpus=None) -> list[CoherenceReport]:
    """Run the four checks; returns one report per check."""
    if corpus is None:
        corpus = default_corpus(oracle.mode)
    return [check(oracle, corpus) for check in ALL_CHECKS]


def square_edge_flips(oracle: TensorOracle):
    """All single-edge toggles of the oracle's square of the edge graph."""
    edge = make_path(1, oracle.mode)
    square = oracle.tensor_ob(edge, edge)
    verts = square.vertices
    if oracle.mode == "directed":
        candidates = [(u, v) for u in verts for v in verts if u != v]
    else:
        candidates = [(u, v) for i, u in enumerate(verts) for v in verts[i + 1:]]
    for pair in candidates:
        edges = set(square.edges)
        if pair in edges:
            edges.discard(pair)
        else:
            edges.add(pair)
        yield pair, ReflexiveGraph(oracle.mode, verts, frozenset(edges))


def with_square(oracle: TensorOracle, square: ReflexiveGraph) -> TensorOracle:
    """A copy of the oracle whose product of the edge graph with itself is
    replaced by the given square.  Used for fault injection."""
    edge = make_path(1, oracle.mode)

    def tensor_ob(G, H):
        if G == edge and H == edge:
            return square
        return oracle.tensor_ob(G, H)

    def tensor_hom(f, g):
        mapping = {pair_label(u, v): pair_label(f(u), g(v))
                   for u in f.dom.vertices for v in g.dom.vertices}
        return GraphHom(tensor_ob(f.dom, g.dom), tensor_ob(f.cod, g.cod), mapping)

    def associator(A, B, C):
        mapping = {pair_label(pair_label(a, b), c): pair_label(a, pair_label(b, c))
                   for a in A.vertices for b in B.vertices for c in C.vertices}
        return GraphHom(tensor_ob(tensor_ob(A, B), C), tensor_ob(A, tensor_ob(B, C)), mapping)

    return TensorOracle(
        name=f"{oracle.name}+flip",
        mode=oracle.mode,
        unit=oracle.unit,
        tensor_ob=tensor_ob,
        tensor_hom=tensor_hom,
        associator=associator,
        left_unitor=oracle.left_unitor,
        right_unitor=oracle.right_unitor,
        internal_hom=oracle.internal_hom,
        curry=oracle.curry,
        uncurry=oracle.uncurry,
    )


def first_failure(oracle: TensorOracle, corpus=None):
    """Run the checks until one reports a failing law; None if all pass.

    Cheap checks run first so fault-injection sweeps stay fast.
    """
    if corpus is None:
        corpus = default_corpus(oracle.mode)
    for check in (check_biclosed, check_bifunctoriality, check_coherence,
                  check_cocontinuity):
        report = check(oracle, corpus)
        if not report.passed:
            return report
    return None
