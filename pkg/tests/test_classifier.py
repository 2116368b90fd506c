import pytest

from monocat import (
    check_no_reverse_edges,
    classify,
    determine_unit,
    enumerate_squares,
    is_isomorphic,
    make_named,
    make_path,
    set_partitions,
    tensor,
)
from monocat.classifier import (
    SQUARE_VERTICES,
    ConstraintSystem,
    subgraphs,
    terminal_object,
)


def test_constraint_system_fibers():
    for mode in ("directed", "undirected"):
        cs = ConstraintSystem.for_mode(mode)
        assert cs.fiber_intersections_are_singletons()
        assert len(cs.picked_edges) == 4
        assert len(cs.swaps) == (2 if mode == "undirected" else 0)
    with pytest.raises(ValueError):
        ConstraintSystem.for_mode("optional-loops")


def test_set_partitions_count():
    parts = list(set_partitions(SQUARE_VERTICES))
    assert len(parts) == 15
    assert sum(1 for p in parts if len(p) == 4) == 1
    assert sum(1 for p in parts if len(p) == 1) == 1


def test_terminal_subobject_enumeration():
    term = terminal_object("directed")
    subs = subgraphs(term)
    assert len(subs) == 2
    assert sorted(len(g.vertices) for g in subs) == [0, 1]


def test_determine_unit():
    for mode, name in (("directed", "J0"), ("undirected", "I0")):
        unit, cert = determine_unit(mode)
        assert unit == make_path(0, mode)
        assert len(cert["terminal_subobjects"]) == 2
        assert "empty" in cert["rejected"]


def test_enumerate_squares_directed():
    search = enumerate_squares("directed")
    assert len(search.up_to_iso) == 2
    csq = make_named("csq", "directed")
    dsq = make_named("dsq", "directed")
    assert any(is_isomorphic(g, csq) for g in search.up_to_iso)
    assert any(is_isomorphic(g, dsq) for g in search.up_to_iso)
    assert search.candidates_total == 4509  # 1 + 7*4 + 6*64 + 4096


def test_enumerate_squares_undirected():
    search = enumerate_squares("undirected")
    assert len(search.up_to_iso) == 2
    assert any(is_isomorphic(g, make_named("c4", "undirected")) for g in search.up_to_iso)
    assert any(is_isomorphic(g, make_named("k4r", "undirected")) for g in search.up_to_iso)
    assert search.candidates_total == 127  # 1 + 7*2 + 6*8 + 64


def test_non_discrete_partitions_all_die():
    nondiscrete = [p for p in set_partitions(SQUARE_VERTICES) if len(p) < 4]
    assert len(nondiscrete) == 14
    search = enumerate_squares("directed", partitions=nondiscrete)
    assert search.labeled == ()
    assert all(o.survivors == 0 for o in search.partitions)
    assert all(o.fiber_violation is not None for o in search.partitions)


def test_dropping_retractions_enlarges_survivors():
    strict = enumerate_squares("directed")
    loose = enumerate_squares("directed", require_retractions=False)
    assert set(strict.labeled) < set(loose.labeled)
    strict_u = enumerate_squares("undirected")
    loose_u = enumerate_squares("undirected", require_retractions=False)
    assert set(strict_u.labeled) < set(loose_u.labeled)


def test_survivors_match_builtin_squares():
    edge_d = make_path(1, "directed")
    edge_u = make_path(1, "undirected")
    for mode, edge in (("directed", edge_d), ("undirected", edge_u)):
        search = enumerate_squares(mode)
        squares = {kind: tensor(kind, edge, edge) for kind in ("box", "categorical")}
        for survivor in search.up_to_iso:
            assert any(is_isomorphic(survivor, sq) for sq in squares.values())


def test_undirected_survivors_are_flip_invariant():
    from monocat.classifier import HORIZONTAL_FLIP, VERTICAL_FLIP
    search = enumerate_squares("undirected")
    for g in search.labeled:
        for flip in (HORIZONTAL_FLIP, VERTICAL_FLIP):
            mapped = {tuple(sorted((flip[u], flip[v]))) for u, v in g.edges}
            assert mapped == set(g.edges)


def test_search_statistics_partition_breakdown():
    search = enumerate_squares("directed")
    by_blocks = sorted(len(o.blocks) for o in search.partitions)
    assert by_blocks == [1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 4]
    for o in search.partitions:
        k = len(o.blocks)
        assert o.candidates == 2 ** (k * (k - 1))


def test_reverse_edge_report_directed():
    report = check_no_reverse_edges("directed")
    assert not report.vacuous
    killed = set(report.killed)
    assert killed == {("b", "a"), ("d", "c"), ("c", "a"), ("d", "b"),
                      ("d", "a"), ("b", "c"), ("c", "b")}
    assert report.free == (("a", "d"),)
    by_edge = {e.edge: e for e in report.entries}
    assert by_edge[("b", "a")].killed_by == ("column-collapse",)
    assert by_edge[("b", "c")].killed_by == ("column-collapse",)
    assert by_edge[("c", "a")].killed_by == ("row-collapse",)
    assert set(by_edge[("d", "a")].killed_by) == {"row-collapse", "column-collapse"}


def test_reverse_edge_report_undirected_vacuous():
    report = check_no_reverse_edges("undirected")
    assert report.vacuous and report.entries == ()


def test_classify_with_unit_corpus():
    report = classify("directed", [make_path(0, "directed")])
    assert report.theorem_holds
    assert {m.kind for m in report.matches} == {"box", "categorical"}


def test_classify_rejects_mixed_corpus():
    with pytest.raises(ValueError):
        classify("directed", [make_path(0, "undirected")])


def test_enumerate_squares_label_order_independent():
    # permuting the search-order of partitions must not change the output
    parts = list(set_partitions(SQUARE_VERTICES))
    a = enumerate_squares("directed", partitions=parts)
    b = enumerate_squares("directed", partitions=list(reversed(parts)))
    assert a.labeled == b.labeled
    assert a.up_to_iso == b.up_to_iso
