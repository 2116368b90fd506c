"""Exhaustive classification of the candidate squares of the edge graph.

A biclosed monoidal structure on reflexive graphs is pinned down by three
facts this module mechanizes: the unit must be the one-vertex graph, the
square of the edge graph is a quotient of the labeled four-vertex square
carrying four edge-picking maps and two collapse retractions onto the edge
graph (plus two coordinate swaps in undirected mode), and only two such
squares survive — the ones realized by the box and categorical products.

The search space is every set partition of {a, b, c, d} times every
reflexive edge set on the blocks; constraints:

  C1  the four picked edges [a]->[b], [c]->[d], [a]->[c], [b]->[d] are
      present (or collapse to a block equality);
  C2  the row and column collapses are well defined on blocks and are
      vertex-surjective homomorphisms onto the edge graph;
  C3  (undirected) the horizontal and vertical flips descend to
      automorphisms.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import (
    DIRECTED,
    UNDIRECTED,
    GraphHom,
    ReflexiveGraph,
    block_label,
    is_isomorphic,
    make_path,
    require_same_mode,
)
from .products import BOX, CATEGORICAL, tensor
from .verify import CoherenceReport, builtin_oracle, default_corpus, run_all

SQUARE_VERTICES = ("a", "b", "c", "d")
PICKED_EDGES = (("a", "b"), ("c", "d"), ("a", "c"), ("b", "d"))

# a,b sit in the top row and a,c in the left column.
ROW_INDEX = {"a": "0", "b": "0", "c": "1", "d": "1"}
COL_INDEX = {"a": "0", "b": "1", "c": "0", "d": "1"}
HORIZONTAL_FLIP = {"a": "b", "b": "a", "c": "d", "d": "c"}
VERTICAL_FLIP = {"a": "c", "c": "a", "b": "d", "d": "b"}


@dataclass(frozen=True)
class ConstraintSystem:
    """Everything a candidate square of the edge graph must carry: the four
    edge-picking maps, the two collapse retractions onto the edge graph, and
    (undirected) the two coordinate swaps.

    The collapse fibers intersect in singletons, which is what forces a
    surviving square to keep all four vertices distinct.
    """

    mode: str
    picked_edges: tuple[tuple[str, str], ...]
    row_index: dict
    col_index: dict
    swaps: tuple

    @classmethod
    def for_mode(cls, mode: str) -> "ConstraintSystem":
        if mode not in (DIRECTED, UNDIRECTED):
            raise ValueError(f"unknown mode {mode!r}")
        swaps = (HORIZONTAL_FLIP, VERTICAL_FLIP) if mode == UNDIRECTED else ()
        return cls(mode, PICKED_EDGES, dict(ROW_INDEX), dict(COL_INDEX), swaps)

    def fiber_intersections_are_singletons(self) -> bool:
        for r in set(self.row_index.values()):
            for c in set(self.col_index.values()):
                cell = [v for v in SQUARE_VERTICES
                        if self.row_index[v] == r and self.col_index[v] == c]
                if len(cell) != 1:
                    return False
        return True


def set_partitions(items):
    """All set partitions, in a fixed deterministic order."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def subgraphs(G: ReflexiveGraph) -> list[ReflexiveGraph]:
    """All subgraphs (any vertex subset, any edge subset between them)."""
    out = []
    verts = G.vertices
    for r in range(len(verts) + 1):
        for chosen in itertools.combinations(verts, r):
            inside = set(chosen)
            available = [e for e in G.sorted_edges if e[0] in inside and e[1] in inside]
            for k in range(len(available) + 1):
                for picked in itertools.combinations(available, k):
                    out.append(ReflexiveGraph(G.mode, chosen, frozenset(picked)))
    return out


def terminal_object(mode: str) -> ReflexiveGraph:
    return make_path(0, mode)


def determine_unit(mode: str) -> tuple[ReflexiveGraph, dict]:
    """The forced monoidal unit, with a certificate.

    The unit embeds in the terminal object (one looped vertex), whose only
    subgraphs are the empty graph and the point.  An empty unit is ruled out
    because tensoring preserves the empty graph in each variable, which
    would collapse every graph; the point remains.
    """
    term = terminal_object(mode)
    candidates = sorted(subgraphs(term), key=lambda g: len(g.vertices))
    witness = make_path(1, mode)
    certificate = {
        "terminal_subobjects": [g.to_json_dict() for g in candidates],
        "rejected": {
            "empty": "tensoring preserves the empty graph in each variable, so an "
                     "empty unit forces G = G (x) empty = empty for the nonempty "
                     "witness " + witness.to_json(),
        },
        "conclusion": "the one-vertex graph is the only remaining unit candidate",
    }
    return candidates[-1], certificate


@dataclass(frozen=True)
class PartitionOutcome:
    blocks: tuple[tuple[str, ...], ...]
    candidates: int
    survivors: int
    fiber_violation: str | None

    def to_json_dict(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "candidates": self.candidates,
            "survivors": self.survivors,
            "fiber_violation": self.fiber_violation,
        }


@dataclass(frozen=True)
class SquareSearch:
    mode: str
    labeled: tuple[ReflexiveGraph, ...]
    up_to_iso: tuple[ReflexiveGraph, ...]
    partitions: tuple[PartitionOutcome, ...]
    candidates_total: int

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "candidates_total": self.candidates_total,
            "labeled_survivors": [g.to_json_dict() for g in self.labeled],
            "survivors_up_to_iso": [g.to_json_dict() for g in self.up_to_iso],
            "partitions": [p.to_json_dict() for p in self.partitions],
        }


def _collapse_well_defined(blocks, index):
    """First block (in canonical order) straddling the collapse's fibers."""
    for block in sorted(blocks, key=sorted):
        if len({index[v] for v in block}) > 1:
            return block
    return None


def _block_pairs(labels, mode):
    if mode == DIRECTED:
        return [(x, y) for x in labels for y in labels if x != y]
    return [(x, y) for i, x in enumerate(labels) for y in labels[i + 1:]]


def _descends_to_automorphism(flip, blocks, label_of, Q):
    """Whether a vertex involution of the square induces an automorphism of
    the quotient candidate Q."""
    induced = {}
    for block in blocks:
        image = frozenset(flip[v] for v in block)
        if image not in blocks:
            return False
        induced[label_of[next(iter(block))]] = label_of[next(iter(image))]
    for u, v in Q.edges:
        if not Q.related(induced[u], induced[v]):
            return False
    return True


def enumerate_squares(mode: str, partitions=None, require_retractions: bool = True) -> SquareSearch:
    """Search every quotient of the four-vertex square for candidate tensor
    squares of the edge graph.

    ``partitions`` restricts the searched set partitions (labeled blocks of
    {a, b, c, d}); ``require_retractions`` toggles the collapse constraints
    (C2), which is what forces four distinct vertices.
    """
    cs = ConstraintSystem.for_mode(mode)
    edge = make_path(1, mode)
    if partitions is None:
        partitions = set_partitions(SQUARE_VERTICES)
    outcomes = []
    survivors = []
    total = 0
    for raw in partitions:
        blocks = frozenset(frozenset(b) for b in raw)
        label_of = {}
        for block in blocks:
            lab = block_label(block)
            for v in block:
                label_of[v] = lab
        labels = tuple(sorted({label_of[v] for v in SQUARE_VERTICES}))
        pairs = _block_pairs(labels, mode)
        candidates = 2 ** len(pairs)
        total += candidates
        blocks_key = tuple(sorted(tuple(sorted(b)) for b in blocks))

        violation = None
        if require_retractions:
            for name, index in (("row-collapse", cs.row_index),
                                ("column-collapse", cs.col_index)):
                bad = _collapse_well_defined(blocks, index)
                if bad is not None:
                    violation = (f"block {{{','.join(sorted(bad))}}} straddles the "
                                 f"{name} fibers")
                    break
        if violation is not None:
            outcomes.append(PartitionOutcome(blocks_key, candidates, 0, violation))
            continue

        required = set()
        for u, v in cs.picked_edges:
            bu, bv = label_of[u], label_of[v]
            if bu == bv:
                continue
            if mode == UNDIRECTED and bv < bu:
                bu, bv = bv, bu
            required.add((bu, bv))
        free = [p for p in pairs if p not in required]
        found = []
        row_of = {label_of[v]: cs.row_index[v] for v in SQUARE_VERTICES}
        col_of = {label_of[v]: cs.col_index[v] for v in SQUARE_VERTICES}
        for r in range(len(free) + 1):
            for extra in itertools.combinations(free, r):
                Q = ReflexiveGraph(mode, labels, frozenset(required) | set(extra))
                if require_retractions:
                    collapses_ok = all(
                        edge.related(index[u], index[v]) for index in (row_of, col_of)
                        for u, v in Q.edges)
                    surjective = (set(row_of.values()) == {"0", "1"}
                                  and set(col_of.values()) == {"0", "1"})
                    if not (collapses_ok and surjective):
                        continue
                if not all(_descends_to_automorphism(swap, blocks, label_of, Q)
                           for swap in cs.swaps):
                    continue
                found.append(Q)
        survivors.extend(found)
        outcomes.append(PartitionOutcome(blocks_key, candidates, len(found), None))

    labeled = tuple(sorted(set(survivors), key=lambda g: (g.vertices, g.sorted_edges)))
    up_to_iso = []
    for g in labeled:
        if not any(is_isomorphic(g, h) for h in up_to_iso):
            up_to_iso.append(g)
    return SquareSearch(mode, labeled, tuple(up_to_iso), tuple(outcomes), total)


@dataclass(frozen=True)
class ReverseEdgeEntry:
    edge: tuple[str, str]
    row_image: tuple[str, str]
    col_image: tuple[str, str]
    killed_by: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {
            "edge": list(self.edge),
            "row_image": list(self.row_image),
            "col_image": list(self.col_image),
            "killed_by": list(self.killed_by),
        }


@dataclass(frozen=True)
class ReverseEdgeReport:
    mode: str
    vacuous: bool
    entries: tuple[ReverseEdgeEntry, ...]

    @property
    def killed(self) -> tuple[tuple[str, str], ...]:
        return tuple(e.edge for e in self.entries if e.killed_by)

    @property
    def free(self) -> tuple[tuple[str, str], ...]:
        return tuple(e.edge for e in self.entries if not e.killed_by)

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "vacuous": self.vacuous,
            "entries": [e.to_json_dict() for e in self.entries],
            "free": [list(e) for e in self.free],
        }


def check_no_reverse_edges(mode: str) -> ReverseEdgeReport:
    """Case analysis of the extra edges a four-vertex square could carry.

    For each ordered pair beyond the four picked edges, records which of the
    two collapses maps it onto the missing reverse edge of the edge graph.
    In directed mode exactly seven candidates are killed and only a -> d is
    left free; in undirected mode the collapses kill nothing (the edge graph
    relation is total) and the report says so.
    """
    edge = make_path(1, mode)
    if mode == UNDIRECTED:
        return ReverseEdgeReport(mode, True, ())
    cs = ConstraintSystem.for_mode(mode)
    extra = [(u, v) for u in SQUARE_VERTICES for v in SQUARE_VERTICES
             if u != v and (u, v) not in cs.picked_edges]
    entries = []
    for u, v in sorted(extra):
        row = (cs.row_index[u], cs.row_index[v])
        col = (cs.col_index[u], cs.col_index[v])
        killers = []
        if not edge.related(*row):
            killers.append("row-collapse")
        if not edge.related(*col):
            killers.append("column-collapse")
        entries.append(ReverseEdgeEntry((u, v), row, col, tuple(killers)))
    return ReverseEdgeReport(mode, False, tuple(entries))


@dataclass(frozen=True)
class SquareMatch:
    square: ReflexiveGraph
    kind: str | None
    witness: GraphHom | None
    reports: tuple[CoherenceReport, ...]

    @property
    def verified(self) -> bool:
        return self.kind is not None and all(r.passed for r in self.reports)

    def to_json_dict(self) -> dict:
        return {
            "square": self.square.to_json_dict(),
            "kind": self.kind,
            "witness": None if self.witness is None else self.witness.to_json_dict(),
            "verified": self.verified,
            "reports": [r.to_json_dict() for r in self.reports],
        }


@dataclass(frozen=True)
class ClassificationReport:
    mode: str
    unit: ReflexiveGraph
    unit_certificate: dict
    search: SquareSearch
    matches: tuple[SquareMatch, ...]

    @property
    def theorem_holds(self) -> bool:
        return (len(self.matches) == 2
                and all(m.verified for m in self.matches)
                and {m.kind for m in self.matches} == {BOX, CATEGORICAL}
                and len(self.unit.vertices) == 1)

    def to_json_dict(self) -> dict:
        return {
            "mode": self.mode,
            "unit": self.unit.to_json_dict(),
            "unit_certificate": self.unit_certificate,
            "search": self.search.to_json_dict(),
            "matches": [m.to_json_dict() for m in self.matches],
            "theorem_holds": self.theorem_holds,
        }


def classify(mode: str, corpus=None) -> ClassificationReport:
    """Full pipeline: force the unit, enumerate candidate squares, match each
    survivor to a built-in product and verify that product's laws."""
    if corpus is None:
        corpus = default_corpus(mode)
    else:
        corpus = list(corpus)
        if corpus:
            got = require_same_mode(*corpus)
            if got != mode:
                raise ValueError("corpus mode differs from the requested mode")
    unit, certificate = determine_unit(mode)
    search = enumerate_squares(mode)
    edge = make_path(1, mode)
    matches = []
    for square in search.up_to_iso:
        kind = None
        witness = None
        for candidate in (BOX, CATEGORICAL):
            witness = is_isomorphic(square, tensor(candidate, edge, edge))
            if witness is not None:
                kind = candidate
                break
        reports = () if kind is None else tuple(run_all(builtin_oracle(kind, mode), corpus))
        matches.append(SquareMatch(square, kind, witness, reports))
    return ClassificationReport(mode, unit, certificate, search, tuple(matches))
