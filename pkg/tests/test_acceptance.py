"""Acceptance gate: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria execute.  Runtime bounds are asserted with wall-clock timing.
"""

import json
import time
from contextlib import contextmanager

from conftest import brute_hom_count

from monocat import (
    builtin_oracle,
    categorical_joint_rule,
    check_no_reverse_edges,
    default_corpus,
    density_recolimit,
    embed,
    enumerate_homs,
    enumerate_squares,
    index_category,
    internal_hom,
    is_isomorphic,
    make_named,
    make_path,
    reflect,
    reflector_adjunction_check,
    run_all,
    set_partitions,
    square_edge_flips,
    tensor,
    validate_presheaf,
    with_square,
)
from monocat.classifier import SQUARE_VERTICES
from monocat.cli import main
from monocat.verify import first_failure
from test_presheaves import parallel_edge_presheaf


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"criterion {number:2d} FAIL {description}")
        raise
    print(f"criterion {number:2d} PASS {description}")


def classify_via_cli(mode, capsys):
    start = time.perf_counter()
    code = main(["classify", "--mode", mode, "--json"])
    elapsed = time.perf_counter() - start
    out = capsys.readouterr().out
    return code, json.loads(out), elapsed


def test_criterion_1_classification_directed(capsys):
    with criterion(1, "directed classification: unit J0, squares CSq and CSq+{a->d}"):
        code, data, elapsed = classify_via_cli("directed", capsys)
        assert code == 0 and data["theorem_holds"] is True
        assert data["unit"] == make_path(0, "directed").to_json_dict()
        squares = [m["square"] for m in data["matches"]]
        assert len(squares) == 2
        from monocat import graph_from_json_dict

        got = [graph_from_json_dict(s) for s in squares]
        csq = make_named("csq", "directed")
        dsq = make_named("dsq", "directed")
        assert sum(1 for g in got if is_isomorphic(g, csq)) == 1
        assert sum(1 for g in got if is_isomorphic(g, dsq)) == 1
        assert all(m["verified"] for m in data["matches"])
        assert elapsed < 5.0, f"took {elapsed:.2f}s"


def test_criterion_2_classification_undirected(capsys):
    with criterion(2, "undirected classification: unit I0, squares C4 and K4r"):
        code, data, elapsed = classify_via_cli("undirected", capsys)
        assert code == 0 and data["theorem_holds"] is True
        assert data["unit"] == make_path(0, "undirected").to_json_dict()
        from monocat import graph_from_json_dict

        got = [graph_from_json_dict(m["square"]) for m in data["matches"]]
        assert len(got) == 2
        assert sum(1 for g in got if is_isomorphic(g, make_named("c4", "undirected"))) == 1
        assert sum(1 for g in got if is_isomorphic(g, make_named("k4r", "undirected"))) == 1
        assert all(m["verified"] for m in data["matches"])
        assert elapsed < 5.0, f"took {elapsed:.2f}s"


def test_criterion_3_four_vertex_lemma():
    with criterion(3, "non-discrete partitions yield zero survivors"):
        nondiscrete = [p for p in set_partitions(SQUARE_VERTICES) if len(p) < 4]
        assert len(nondiscrete) == 14
        for mode in ("directed", "undirected"):
            search = enumerate_squares(mode, partitions=nondiscrete)
            assert search.labeled == ()
            assert all(o.survivors == 0 and o.fiber_violation is not None
                       for o in search.partitions)


def test_criterion_4_reverse_edge_case_analysis():
    with criterion(4, "seven reverse edges killed, only a->d left free"):
        report = check_no_reverse_edges("directed")
        assert set(report.killed) == {
            ("b", "a"), ("d", "c"), ("c", "a"), ("d", "b"),
            ("d", "a"), ("b", "c"), ("c", "b")}
        assert report.free == (("a", "d"),)
        for entry in report.entries:
            if entry.edge != ("a", "d"):
                assert entry.killed_by


def test_criterion_5_adjunction_counts():
    with criterion(5, "adjunction counts 12 (box) and 11 (categorical)"):
        start = time.perf_counter()
        J1 = make_path(1, "directed")
        J2 = make_path(2, "directed")
        box_sq = tensor("box", J1, J1)
        cat_sq = tensor("categorical", J1, J1)
        # brute-force oracle on the left, library enumeration on the right
        assert brute_hom_count(box_sq, J2) == 12
        assert brute_hom_count(cat_sq, J2) == 11
        assert len(enumerate_homs(box_sq, J2)) == 12
        assert len(enumerate_homs(cat_sq, J2)) == 11
        assert len(enumerate_homs(J1, internal_hom("box", J1, J2))) == 12
        assert len(enumerate_homs(J1, internal_hom("categorical", J1, J2))) == 11
        assert time.perf_counter() - start < 1.0


def test_criterion_6_coherence_suite():
    with criterion(6, "all four checks pass for both oracles in both modes"):
        start = time.perf_counter()
        for mode in ("directed", "undirected"):
            for kind in ("box", "categorical"):
                reports = run_all(builtin_oracle(kind, mode))
                for report in reports:
                    assert report.passed, report.to_json_dict()
        assert time.perf_counter() - start < 60.0


def test_criterion_7_sensitivity_to_square_flips():
    with criterion(7, "every single-edge flip of either square breaks a law"):
        start = time.perf_counter()
        for mode in ("directed", "undirected"):
            corpus = [make_named("empty", mode), make_path(0, mode),
                      make_path(1, mode), make_path(2, mode)]
            expected = 12 if mode == "directed" else 6
            for kind in ("box", "categorical"):
                base = builtin_oracle(kind, mode)
                flips = list(square_edge_flips(base))
                assert len(flips) == expected
                for pair, square in flips:
                    failure = first_failure(with_square(base, square), corpus)
                    assert failure is not None, (mode, kind, pair)
        assert time.perf_counter() - start < 60.0


def test_criterion_8_presheaf_layer():
    with criterion(8, "presheaf validation, reflection, adjunction family, hom table"):
        for mode in ("directed", "undirected"):
            for g in default_corpus(mode):
                X = embed(g)
                assert validate_presheaf(X) == []
                assert reflect(X) == g
        # fixed family of ten presheaf/graph pairs, parallel edges included
        J0 = make_path(0, "directed")
        J1 = make_path(1, "directed")
        J2 = make_path(2, "directed")
        I1 = make_path(1, "undirected")
        family = [
            (embed(J1), J1),
            (embed(J1), J2),
            (embed(J0), J1),
            (embed(make_named("empty", "directed")), J0),
            (embed(make_named("csq", "directed")), make_named("csq", "directed")),
            (parallel_edge_presheaf("directed"), J1),
            (parallel_edge_presheaf("directed"), J2),
            (embed(I1), I1),
            (parallel_edge_presheaf("undirected"), I1),
            (embed(make_named("c4", "undirected")), I1),
        ]
        assert len(family) == 10
        for X, G in family:
            assert reflector_adjunction_check(X, G).ok
        assert index_category("directed").hom_counts() == [[1, 1, 1], [2, 4, 2], [2, 4, 3]]


def test_criterion_9_density():
    with criterion(9, "density recolimit is isomorphic to every corpus graph"):
        for mode in ("directed", "undirected"):
            for g in default_corpus(mode):
                result = density_recolimit(g)
                assert is_isomorphic(result.graph, g) is not None
                assert result.witness.cod == g


def test_criterion_10_reflexive_collapse():
    with criterion(10, "three-clause and two-clause categorical products agree"):
        for mode in ("directed", "undirected"):
            corpus = default_corpus(mode)
            for G in corpus:
                for H in corpus:
                    assert tensor("categorical", G, H) == categorical_joint_rule(G, H)
