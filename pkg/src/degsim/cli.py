"""Command-line interface.

Subcommands: psi, check-pair, construct, snf, zeta, report.  Graphs come in
as graph6 strings or edge-list JSON ({"n": ..., "edges": [[u, v], ...]}),
inline, from a file path, or from stdin ("-").  All outputs are JSON on
stdout.

Exit codes (stable contract): 0 success, 1 verdict refuted/invalid, 2 parse
error, 3 dimension mismatch, 4 construction precondition failure.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from fractions import Fraction

from . import instances
from .algebra import UniPoly
from .certify import (
    Certificate,
    certificate_for_addjoin,
    certificate_for_class_join,
    certificate_for_complement,
    certificate_for_join,
    certificate_for_ksum,
    certificate_for_pendants,
    certificate_for_product,
    certificate_for_rooted_product,
    certificate_for_switching,
    certificate_for_union,
    certificate_for_vertex_deletion,
    necessary_battery,
    verify_certificate,
)
from .errors import (
    DimensionMismatchError,
    ParseError,
    PreconditionError,
    SingularMatrixError,
)
from .graphs import (
    Graph,
    RootedGraph,
    SwitchingPartition,
    coalesce,
    complement,
    emit_graph6,
    find_isomorphism,
    mckay_tree_1,
    mckay_tree_2,
    parse_graph6,
)
from .instances import demo_switch_instance
from .pencil import pencil_charpoly, pencil_snf, spectral_profile
from .zeta import ihara_reciprocal

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_PRECONDITION = 4


# ---------------------------------------------------------------------------
# input plumbing
# ---------------------------------------------------------------------------

def _read_source(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        with open(arg, "r", encoding="utf-8") as fh:
            return fh.read()
    return arg


def _graph_from_text(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise ParseError("empty graph input")
    if s.startswith("{"):
        try:
            data = json.loads(s)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON graph: {exc}") from exc
        return _graph_from_json(data)
    return parse_graph6(s)


def _graph_from_json(data) -> Graph:
    if isinstance(data, str):
        return parse_graph6(data)
    if isinstance(data, dict) and "n" in data and "edges" in data:
        try:
            return Graph.from_json(data)
        except (TypeError, ValueError, KeyError) as exc:
            raise ParseError(f"bad edge-list JSON: {exc}") from exc
    raise ParseError("graph must be a graph6 string or {n, edges} object")


def _load_graph(arg: str) -> Graph:
    return _graph_from_text(_read_source(arg))


def _load_json(arg: str) -> dict:
    text = _read_source(arg)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON input: {exc}") from exc


def _certificate_from_json(data) -> Certificate:
    if isinstance(data, dict) and "certificate" in data:
        data = data["certificate"]  # accept a whole construct output document
    try:
        return Certificate.from_json(data)
    except (TypeError, ValueError, KeyError) as exc:
        raise ParseError(f"bad certificate JSON: {exc}") from exc


def _emit(doc) -> None:
    print(json.dumps(doc))


def _unipoly_ints(p: UniPoly) -> list[int]:
    return [int(c) for c in p.coeffs]


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _batch_lines(arg: str) -> list[str]:
    return [line.strip() for line in _read_source(arg).splitlines() if line.strip()]


def _cmd_psi(args) -> int:
    def run(g: Graph):
        psi = pencil_charpoly(g)
        if args.at_mu is not None:
            return psi.eval_mu(Fraction(args.at_mu)).to_json()
        return psi.to_json()

    if args.batch:
        for line in _batch_lines(args.graph):
            _emit(run(_graph_from_text(line)))
        return EXIT_OK
    _emit(run(_load_graph(args.graph)))
    return EXIT_OK


def _cmd_snf(args) -> int:
    def run(g: Graph):
        return pencil_snf(g).to_json()

    if args.batch:
        for line in _batch_lines(args.graph):
            _emit(run(_graph_from_text(line)))
        return EXIT_OK
    _emit(run(_load_graph(args.graph)))
    return EXIT_OK


def _cmd_zeta(args) -> int:
    def run(g: Graph):
        det, exponent = ihara_reciprocal(g)
        return {"det": _unipoly_ints(det), "exponent": exponent}

    if args.batch:
        for line in _batch_lines(args.graph):
            _emit(run(_graph_from_text(line)))
        return EXIT_OK
    _emit(run(_load_graph(args.graph)))
    return EXIT_OK


def _cmd_report(args) -> int:
    def run(g: Graph):
        profile = spectral_profile(g)
        warnings = []
        try:
            det, exponent = ihara_reciprocal(g)
            zeta_doc = {"det": _unipoly_ints(det), "exponent": exponent}
        except PreconditionError as exc:
            zeta_doc = None
            warnings.append(f"zeta unavailable: {exc}")
        scaled = profile.deg_scaled_charpoly
        if scaled is None:
            warnings.append("deg-scaled charpoly unavailable: isolated vertex")
        return {
            "psi": profile.psi.to_json(),
            "adj_charpoly": profile.adj_charpoly.to_json(),
            "laplacian_charpoly": profile.laplacian_charpoly.to_json(),
            "signless_charpoly": profile.signless_charpoly.to_json(),
            "deg_scaled_charpoly": None if scaled is None else scaled.to_json(),
            "degree_multiset": list(profile.degree_multiset),
            "snf": pencil_snf(g).to_json(),
            "zeta": zeta_doc,
            "warnings": warnings,
        }

    if args.batch:
        for line in _batch_lines(args.graph):
            _emit(run(_graph_from_text(line)))
        return EXIT_OK
    _emit(run(_load_graph(args.graph)))
    return EXIT_OK


def _cmd_check_pair(args) -> int:
    g = _load_graph(args.graph1)
    h = _load_graph(args.graph2)
    if args.certificate is not None:
        cert = _certificate_from_json(_load_json(args.certificate))
        try:
            ok = verify_certificate(g, h, cert)
        except SingularMatrixError as exc:
            _emit({"status": "invalid", "evidence": {"reason": str(exc)}})
            return EXIT_VERDICT
        if ok:
            _emit({"status": "certified", "evidence": {"certificate": cert.to_json()}})
            return EXIT_OK
        _emit({"status": "invalid",
               "evidence": {"reason": "conjugation identities fail"}})
        return EXIT_VERDICT

    if args.trees:
        if not (g.is_tree() and h.is_tree()):
            raise PreconditionError("--trees requires two trees")
        perm = find_isomorphism(g, h)
        if perm is None:
            _emit({"status": "refuted",
                   "evidence": {"failed_condition": "trees_isomorphism",
                                "witness": {"isomorphic": False}}})
            return EXIT_VERDICT
        cert = Certificate.permutation(perm)
        _emit({"status": "certified",
               "evidence": {"certificate": cert.to_json(),
                            "note": "isomorphic trees"}})
        return EXIT_OK

    report = necessary_battery(g, h)
    failed = report.failed_conditions()
    doc = report.to_json()
    if failed:
        name = failed[0]
        witness_key = {"psi": "psi_witness", "class_cospectral": "class_witness",
                       "snf": "snf_witness"}.get(name)
        witness = doc.get(witness_key) if witness_key else {
            "degree_multisets": [list(g.degree_multiset()),
                                 list(h.degree_multiset())]}
        _emit({"status": "refuted",
               "evidence": {"failed_condition": name, "witness": witness,
                            "report": doc}})
        return EXIT_VERDICT
    passed = sorted(report.condition_values())
    _emit({"status": "unknown",
           "evidence": {"passed_conditions": passed, "report": doc}})
    return EXIT_OK


CONSTRUCT_KINDS = ("switch", "complement", "union", "join", "class-join",
                   "product", "ksum", "rooted", "pendants", "addjoin",
                   "delete-vertex", "coalesce-T1T2")


def _pair_from_instance(doc: dict):
    g1 = _graph_from_json(doc["graph1"])
    g2 = _graph_from_json(doc["graph2"])
    cert = _certificate_from_json(doc["certificate"])
    return g1, g2, cert


def _partition_from_json(data) -> SwitchingPartition:
    try:
        return SwitchingPartition.from_json(data)
    except (TypeError, ValueError, KeyError) as exc:
        raise ParseError(f"bad partition JSON: {exc}") from exc


def _generate_instance(kind: str, seed: int, extra: list[str]) -> dict:
    """Build a random instance document for a construction kind."""
    rng = random.Random(seed)
    if kind == "switch":
        g, pi = instances.random_switch_instance(rng)
        return {"graph": g.to_json(), "partition": pi.to_json()}
    if kind == "complement":
        g1, g2, cert = instances.random_certified_pair(rng, connected=True)
        return {"graph1": g1.to_json(), "graph2": g2.to_json(),
                "certificate": cert.to_json()}
    if kind in ("union", "join"):
        if kind == "join":
            g1, g2, cert = instances.random_certified_pair(rng, regular=True)
        else:
            g1, g2, cert = instances.random_certified_pair(rng)
        h = instances.random_graph(rng, rng.choice((2, 3, 4)))
        return {"graph1": g1.to_json(), "graph2": g2.to_json(),
                "certificate": cert.to_json(), "h": h.to_json()}
    if kind == "class-join":
        g, pi = instances.random_switch_instance(rng)
        y = instances.random_graph(rng, rng.choice((1, 2, 3)))
        k = len(pi.cells)
        cells = sorted(rng.sample(range(k + 1), rng.randint(1, k + 1)))
        return {"graph": g.to_json(), "partition": pi.to_json(),
                "y": y.to_json(), "cells": cells}
    if kind == "product":
        pkind = extra[0] if extra else rng.choice(
            ("cartesian", "tensor", "strong", "lexicographic"))
        g1, g2, cert = instances.random_certified_pair(rng)
        k2 = Graph(2, [(0, 1)])
        return {"kind": pkind,
                "pair1": {"graph1": g1.to_json(), "graph2": g2.to_json(),
                          "certificate": cert.to_json()},
                "pair2": {"graph1": k2.to_json(), "graph2": k2.to_json(),
                          "certificate": Certificate.identity(2).to_json()}}
    if kind == "ksum":
        k = rng.choice((1, 2))
        g1, g2, cert, v1, v2 = instances.random_unique_degree_pair(rng, k=k)
        y = instances.random_connected_graph(rng, k + rng.choice((1, 2)))
        return {"graph1": g1.to_json(), "graph2": g2.to_json(),
                "certificate": cert.to_json(), "verts1": v1, "verts2": v2,
                "y": y.to_json(), "y_verts": list(range(k))}
    if kind == "rooted":
        k = rng.choice((1, 2))
        g1, g2, cert, v1, v2 = instances.random_unique_degree_pair(rng, k=k)
        ys = []
        for _ in range(k):
            base = instances.random_connected_graph(rng, rng.choice((2, 3)))
            ys.append({"graph": base.to_json(), "root": 0})
        return {"graph1": g1.to_json(), "graph2": g2.to_json(),
                "certificate": cert.to_json(), "verts1": v1, "verts2": v2,
                "ys": ys}
    if kind == "pendants":
        g1, g2, cert = instances.random_certified_pair(rng, connected=True)
        degrees = sorted(g1.degree_classes())
        per = {str(d): rng.choice((1, 2)) for d in degrees if rng.random() < 0.7}
        if not per:
            per = {str(degrees[0]): 1}
        return {"graph1": g1.to_json(), "graph2": g2.to_json(),
                "certificate": cert.to_json(), "per_degree": per}
    if kind == "addjoin":
        g1, g2, cert = instances.random_certified_pair(rng, connected=True)
        degrees = sorted(g1.degree_classes())
        chosen = [d for d in degrees if rng.random() < 0.6] or [degrees[0]]
        return {"graph1": g1.to_json(), "graph2": g2.to_json(),
                "certificate": cert.to_json(), "degrees": chosen}
    if kind == "delete-vertex":
        while True:
            g, pi = instances.random_switch_instance(rng, connected=True)
            if max(g.degrees()) < g.n - 1:
                break
        y = Graph(1)
        k = len(pi.cells)
        g1, g2, cert = certificate_for_class_join(g, pi, y, list(range(k + 1)))
        return {"graph1": g1.to_json(), "graph2": g2.to_json(),
                "certificate": cert.to_json(), "u1": g.n, "u2": g.n}
    raise PreconditionError(f"cannot generate an instance for {kind!r}")


def _run_construction(kind: str, doc: dict) -> dict:
    if kind == "switch":
        g = _graph_from_json(doc["graph"])
        pi = _partition_from_json(doc["partition"])
        switched, cert = certificate_for_switching(g, pi)
        g1, g2 = g, switched
    elif kind == "complement":
        b1, b2, cert0 = _pair_from_instance(doc)
        cert = certificate_for_complement(b1, b2, cert0)
        g1, g2 = complement(b1), complement(b2)
    elif kind in ("union", "join"):
        b1, b2, cert0 = _pair_from_instance(doc)
        h = _graph_from_json(doc["h"])
        fn = certificate_for_union if kind == "union" else certificate_for_join
        g1, g2, cert = fn(b1, b2, cert0, h)
    elif kind == "class-join":
        g = _graph_from_json(doc["graph"])
        pi = _partition_from_json(doc["partition"])
        y = _graph_from_json(doc["y"])
        g1, g2, cert = certificate_for_class_join(g, pi, y, list(doc["cells"]))
    elif kind == "product":
        p1 = doc["pair1"]
        p2 = doc["pair2"]
        x1, x2, c1 = _pair_from_instance(p1)
        y1, y2, c2 = _pair_from_instance(p2)
        g1, g2, cert = certificate_for_product(x1, x2, c1, y1, y2, c2, doc["kind"])
    elif kind == "ksum":
        b1, b2, cert0 = _pair_from_instance(doc)
        y = _graph_from_json(doc["y"])
        g1, g2, cert = certificate_for_ksum(
            b1, b2, cert0, list(doc["verts1"]), list(doc["verts2"]),
            y, list(doc["y_verts"]))
    elif kind == "rooted":
        b1, b2, cert0 = _pair_from_instance(doc)
        ys = [RootedGraph(_graph_from_json(y["graph"]), int(y["root"]))
              for y in doc["ys"]]
        g1, g2, cert = certificate_for_rooted_product(
            b1, b2, cert0, list(doc["verts1"]), list(doc["verts2"]), ys)
    elif kind == "pendants":
        b1, b2, cert0 = _pair_from_instance(doc)
        per = {int(d): int(s) for d, s in doc["per_degree"].items()}
        g1, g2, cert = certificate_for_pendants(b1, b2, cert0, per)
    elif kind == "addjoin":
        b1, b2, cert0 = _pair_from_instance(doc)
        g1, g2, cert = certificate_for_addjoin(b1, b2, cert0, list(doc["degrees"]))
    elif kind == "delete-vertex":
        b1, b2, cert0 = _pair_from_instance(doc)
        g1, g2, cert = certificate_for_vertex_deletion(
            b1, b2, cert0, int(doc["u1"]), int(doc["u2"]))
    else:
        raise PreconditionError(f"unknown construction kind {kind!r}")
    verified = verify_certificate(g1, g2, cert)
    return {"kind": kind, "graph1": emit_graph6(g1), "graph2": emit_graph6(g2),
            "certificate": cert.to_json(), "verified": verified}


def _cmd_construct(args) -> int:
    kind = args.kind
    if kind == "coalesce-T1T2":
        if len(args.args) < 2:
            raise PreconditionError("coalesce-T1T2 needs <graph> <root>")
        s = _graph_from_text(args.args[0])
        root = int(args.args[1])
        rooted = RootedGraph(s, root)
        g1 = coalesce(rooted, mckay_tree_1())
        g2 = coalesce(rooted, mckay_tree_2())
        report = necessary_battery(g1, g2)
        _emit({"kind": kind, "graph1": emit_graph6(g1), "graph2": emit_graph6(g2),
               "report": report.to_json()})
        return EXIT_OK
    if args.instance is not None:
        doc = _load_json(args.instance)
    elif kind == "switch" and args.seed is None:
        g, pi = demo_switch_instance()
        doc = {"graph": g.to_json(), "partition": pi.to_json()}
    else:
        doc = _generate_instance(kind, args.seed or 0, args.args)
    if kind == "product" and args.args:
        doc = dict(doc)
        doc["kind"] = args.args[0]
    _emit(_run_construction(kind, doc))
    return EXIT_OK


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="degsim",
        description="Exact analysis of graph pencils A - mu*D: generalized "
                    "charpolys, Smith normal forms, Ihara zeta polynomials, "
                    "and certified degree-similar constructions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_cmd(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", help="graph6 string, edge-list JSON, file, or -")
        p.add_argument("--batch", action="store_true",
                       help="treat input as newline-delimited graph6")
        return p

    p_psi = add_graph_cmd("psi", "generalized characteristic polynomial")
    p_psi.add_argument("--at-mu", metavar="RAT", default=None,
                       help="specialize mu to a rational like 2/3")
    p_psi.set_defaults(func=_cmd_psi)

    p_snf = add_graph_cmd("snf", "Smith normal form of tI - (A - mu*D)")
    p_snf.set_defaults(func=_cmd_snf)

    p_zeta = add_graph_cmd("zeta", "Ihara zeta reciprocal polynomial")
    p_zeta.set_defaults(func=_cmd_zeta)

    p_rep = add_graph_cmd("report", "bundled spectral profile, SNF and zeta")
    p_rep.set_defaults(func=_cmd_report)

    p_chk = sub.add_parser("check-pair", help="certify or refute a pair")
    p_chk.add_argument("graph1")
    p_chk.add_argument("graph2")
    p_chk.add_argument("--certificate", metavar="FILE",
                       help="verify this certificate instead of running the battery")
    p_chk.add_argument("--trees", action="store_true",
                       help="decide via the trees theorem (both inputs must be trees)")
    p_chk.set_defaults(func=_cmd_check_pair)

    p_con = sub.add_parser("construct", help="build a certified pair")
    p_con.add_argument("kind", choices=CONSTRUCT_KINDS)
    p_con.add_argument("args", nargs="*",
                       help="extra arguments (product kind; coalesce graph and root)")
    p_con.add_argument("--instance", metavar="FILE",
                       help="JSON instance document")
    p_con.add_argument("--seed", type=int, default=None,
                       help="generate a random instance with this seed")
    p_con.set_defaults(func=_cmd_construct)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DimensionMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
