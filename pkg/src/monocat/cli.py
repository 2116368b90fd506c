"""Batch command-line front end.

Every command is pure: the same inputs produce byte-identical output.
Exit codes: 0 success / all laws pass, 1 law violation or theorem mismatch,
2 usage or parse error.  MONOCAT_THREADS is accepted and validated for
compatibility with parallel runners; the implementation is sequential, so
it never affects output bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import classifier, presheaves, products, verify
from .graphs import (
    ReflexiveGraph,
    enumerate_homs,
    graph_from_json_dict,
    to_dot,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

_KIND_ALIASES = {"box": products.BOX, "cat": products.CATEGORICAL,
                 "categorical": products.CATEGORICAL}


class UsageError(ValueError):
    """Bad flags or malformed input files (exit code 2)."""


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc


def _load_graph(path) -> ReflexiveGraph:
    try:
        return graph_from_json_dict(_load_json(path))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _load_presheaf(path) -> presheaves.Presheaf:
    try:
        return presheaves.presheaf_from_json_dict(_load_json(path))
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _load_corpus(path, mode) -> list[ReflexiveGraph]:
    data = _load_json(path)
    if not isinstance(data, list):
        raise UsageError(f"{path}: corpus JSON must be an array of graphs")
    try:
        graphs = [graph_from_json_dict(item) for item in data]
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    if any(g.mode != mode for g in graphs):
        raise UsageError(f"{path}: corpus mode differs from --mode {mode}")
    return graphs


def _parse_kind(kind: str) -> str:
    if kind not in _KIND_ALIASES:
        raise UsageError(f"unknown product kind {kind!r}; expected box or cat")
    return _KIND_ALIASES[kind]


def _parse_mode(mode: str) -> str:
    if mode == "optional-loops":
        raise UsageError(
            "mode 'optional-loops' is not supported: for graphs with optional "
            "loops the classification (conjecturally three structures, "
            "including the strong product, with two possible units) is an "
            "open conjecture and outside this tool's scope")
    if mode not in ("directed", "undirected"):
        raise UsageError(f"unknown mode {mode!r}; expected directed or undirected")
    return mode


def _check_threads_env():
    value = os.environ.get("MONOCAT_THREADS")
    if value is None:
        return
    try:
        n = int(value)
    except ValueError as exc:
        raise UsageError(f"MONOCAT_THREADS must be an integer, got {value!r}") from exc
    if n < 1:
        raise UsageError("MONOCAT_THREADS must be at least 1")


def _emit_graph(G: ReflexiveGraph, dot: bool):
    sys.stdout.write(to_dot(G) if dot else _dumps(G.to_json_dict()) + "\n")


def _cmd_product(args) -> int:
    kind = _parse_kind(args.kind)
    A = _load_graph(args.a)
    B = _load_graph(args.b)
    _emit_graph(products.tensor(kind, A, B), args.dot)
    return EXIT_OK


def _cmd_hom(args) -> int:
    kind = _parse_kind(args.kind)
    B = _load_graph(args.b)
    C = _load_graph(args.c)
    _emit_graph(products.internal_hom(kind, B, C), args.dot)
    return EXIT_OK


def _cmd_homs(args) -> int:
    G = _load_graph(args.g)
    H = _load_graph(args.h)
    homs = enumerate_homs(G, H)
    if args.count:
        sys.stdout.write(f"{len(homs)}\n")
    else:
        payload = {
            "dom": G.to_json_dict(),
            "cod": H.to_json_dict(),
            "count": len(homs),
            "homs": [f.to_json_dict() for f in homs],
        }
        sys.stdout.write(_dumps(payload) + "\n")
    return EXIT_OK


def _cmd_reflect(args) -> int:
    X = _load_presheaf(args.x)
    violations = presheaves.validate_presheaf(X)
    if violations:
        for v in violations:
            sys.stderr.write(f"violation: {v}\n")
        return EXIT_VIOLATION
    _emit_graph(presheaves.reflect(X), args.dot)
    return EXIT_OK


def _cmd_decompose(args) -> int:
    G = _load_graph(args.g)
    try:
        result = presheaves.density_recolimit(G)
    except ValueError as exc:
        sys.stderr.write(f"density reconstruction failed: {exc}\n")
        return EXIT_VIOLATION
    payload = {
        "graph": G.to_json_dict(),
        "diagram": {"points": result.points, "edge_copies": result.edge_copies},
        "recolimit": result.graph.to_json_dict(),
        "isomorphic": True,
        "witness": result.witness.to_json_dict(),
    }
    sys.stdout.write(_dumps(payload) + "\n")
    return EXIT_OK


def _print_reports(reports):
    for report in reports:
        for law in report.laws:
            status = "PASS" if law.passed else "FAIL"
            sys.stdout.write(
                f"{report.check}/{law.law}: {status} ({law.instances} instances)\n")


def _cmd_verify(args) -> int:
    mode = _parse_mode(args.mode)
    kind = _parse_kind(args.kind)
    corpus = (_load_corpus(args.corpus, mode) if args.corpus
              else verify.default_corpus(mode))
    reports = verify.run_all(verify.builtin_oracle(kind, mode), corpus)
    passed = all(r.passed for r in reports)
    if args.json:
        payload = {
            "oracle": kind,
            "mode": mode,
            "passed": passed,
            "checks": [r.to_json_dict() for r in reports],
        }
        sys.stdout.write(_dumps(payload) + "\n")
    else:
        _print_reports(reports)
        sys.stdout.write(f"verify {kind} ({mode}): {'PASS' if passed else 'FAIL'}\n")
    return EXIT_OK if passed else EXIT_VIOLATION


def _cmd_classify(args) -> int:
    mode = _parse_mode(args.mode)
    corpus = (_load_corpus(args.corpus, mode) if args.corpus else None)
    report = classifier.classify(mode, corpus)
    if args.json:
        sys.stdout.write(_dumps(report.to_json_dict()) + "\n")
    else:
        sys.stdout.write(f"mode: {mode}\n")
        sys.stdout.write(f"unit: {report.unit.to_json()}\n")
        sys.stdout.write(f"candidates explored: {report.search.candidates_total}\n")
        sys.stdout.write(f"labeled survivors: {len(report.search.labeled)}\n")
        for match in report.matches:
            sys.stdout.write(
                f"survivor {match.square.to_json()} -> {match.kind} "
                f"({'verified' if match.verified else 'NOT verified'})\n")
        sys.stdout.write(
            "classification: "
            + ("exactly two squares, both realized by verified biclosed products\n"
               if report.theorem_holds else "MISMATCH with the expected theorem\n"))
    return EXIT_OK if report.theorem_holds else EXIT_VIOLATION


def _cmd_export_dot(args) -> int:
    G = _load_graph(args.g)
    sys.stdout.write(to_dot(G))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monocat",
        description="Reflexive graph products, presheaf reflectors, and the "
                    "classification of biclosed monoidal structures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("product", help="tensor two graphs")
    p.add_argument("--kind", required=True)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("hom", help="internal hom of two graphs")
    p.add_argument("--kind", required=True)
    p.add_argument("b")
    p.add_argument("c")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=_cmd_hom)

    p = sub.add_parser("homs", help="enumerate homomorphisms")
    p.add_argument("g")
    p.add_argument("h")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=_cmd_homs)

    p = sub.add_parser("reflect", help="reflect a presheaf onto its graph")
    p.add_argument("x")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=_cmd_reflect)

    p = sub.add_parser("decompose", help="density diagram and recolimit check")
    p.add_argument("g")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("verify", help="run the coherence suite on a built-in product")
    p.add_argument("--kind", required=True)
    p.add_argument("--mode", required=True)
    p.add_argument("--corpus")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="classify the candidate tensor squares")
    p.add_argument("--mode", required=True)
    p.add_argument("--corpus")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("export-dot", help="render a graph file as DOT")
    p.add_argument("g")
    p.set_defaults(func=_cmd_export_dot)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _check_threads_env()
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        # Mode mismatches and malformed values surface here.
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
