"""Command line entry point.

Every analysis prints canonical JSON on stdout (``--pretty`` switches to
human-oriented output where available).  Exit codes: 0 on success, 1 when
an ``--expect-*`` assertion fails, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import corpus, jsonio
from .complexes import ComplexDocument, chain_from_coeffs, parse_complex
from .errors import ChipfireError, InputError
from .homology import ORDINARY, REDUCED, RELATIVE, critical_group, homology

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


def _load_document(path: str) -> ComplexDocument:
    if path.startswith("example:"):
        name = path[len("example:") :]
        if name not in corpus.names():
            raise InputError(
                f"unknown example {name!r}; available: {', '.join(corpus.names())}"
            )
        return corpus.document_named(name)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})") from None
    return parse_complex(data)


def _load_chain(doc: ComplexDocument, dim: int, spec: str | None):
    if spec is None:
        if doc.chain is not None and doc.chain.dim == dim:
            return doc.chain
        raise InputError("no chain given and the file has none for this dimension")
    text = spec.strip()
    if not text.startswith("["):
        try:
            with open(text, "r", encoding="utf-8") as fh:
                text = fh.read().strip()
        except FileNotFoundError:
            raise InputError(f"chain file not found: {spec}") from None
    try:
        values = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad chain JSON: {exc.msg}") from None
    return chain_from_coeffs(doc.complex, dim, jsonio.coerce_int_list(values))


def _emit(args, payload) -> None:
    if getattr(args, "pretty", False):
        print(jsonio.dumps_pretty(payload))
    else:
        print(jsonio.dumps(payload))


def _group_json(group) -> dict:
    return {"free_rank": group.free_rank, "torsion": list(group.torsion)}


def _cmd_analyze(args) -> int:
    doc = _load_document(args.file)
    c = doc.complex
    payload = {
        "dim": c.dim,
        "num_vertices": c.n,
        "f": [c.face_count(i) for i in range(-1, c.dim + 1)],
        "facets": [list(f) for f in c.facets],
    }
    _emit(args, payload)
    return EXIT_OK


def _cmd_hilbert(args) -> int:
    from .cones import hilbert_basis

    doc = _load_document(args.file)
    basis = hilbert_basis(doc.complex, args.dim)
    rows = [list(h.coeffs) for h in basis]
    if args.rays_only:
        rows = [r for r, flag in zip(rows, basis.ray_flags) if flag]
    _emit(args, rows)
    return EXIT_OK


def _cmd_degree(args) -> int:
    from .cones import degree

    doc = _load_document(args.file)
    sigma = _load_chain(doc, args.dim, args.chain)
    values = degree(doc.complex, args.dim, sigma, rays_only=args.rays_only)
    _emit(args, list(values))
    return EXIT_OK


def _cmd_winnable(args) -> int:
    from .winnability import is_winnable

    doc = _load_document(args.file)
    sigma = _load_chain(doc, args.dim, args.chain)
    verdict = is_winnable(doc.complex, args.dim, sigma)
    payload: dict = {"winnable": verdict.winnable, "reason": verdict.reason}
    if verdict.winnable:
        payload["certificate"] = {
            "firing_vector": list(verdict.firing_vector),
            "winning_chain": list(verdict.winning_chain.coeffs),
        }
    _emit(args, payload)
    if args.expect_winnable and not verdict.winnable:
        return EXIT_NEGATIVE
    if args.expect_unwinnable and verdict.winnable:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_equivalent(args) -> int:
    from .winnability import linearly_equivalent

    doc = _load_document(args.file)
    sigma = _load_chain(doc, args.dim, args.chain)
    tau = _load_chain(doc, args.dim, args.other)
    v = linearly_equivalent(doc.complex, args.dim, sigma, tau)
    payload: dict = {"equivalent": v is not None}
    if v is not None:
        payload["firing_vector"] = list(v)
    _emit(args, payload)
    if args.expect_equivalent and v is None:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_critgroup(args) -> int:
    doc = _load_document(args.file)
    res = critical_group(doc.complex, args.dim)
    payload = _group_json(res.group)
    if args.reps:
        payload["torsion_representatives"] = [
            list(chain.coeffs) for chain in res.torsion_representatives
        ]
    _emit(args, payload)
    return EXIT_OK


def _cmd_homology(args) -> int:
    doc = _load_document(args.file)
    relative_to = None
    if args.variant == RELATIVE and args.rel:
        relative_to = _load_document(args.rel).complex
    res = homology(doc.complex, args.dim, args.variant, relative_to)
    payload = _group_json(res.group)
    payload["variant"] = res.variant
    payload["dim"] = args.dim
    _emit(args, payload)
    return EXIT_OK


def _cmd_pseudo(args) -> int:
    from .pseudomanifolds import analyze, incidence_graph

    doc = _load_document(args.file)
    info = analyze(doc.complex)
    payload = {
        "pure": info.is_pure,
        "nonbranching": info.is_nonbranching,
        "strongly_connected": info.is_strongly_connected,
        "pseudomanifold": info.is_pseudomanifold,
        "boundary": [list(f) for f in info.boundary_faces],
        "orientable": info.orientable,
    }
    if info.gamma is not None:
        payload["gamma"] = list(info.gamma)
    if info.predicted_crit is not None:
        payload["predicted_critical_group"] = _group_json(info.predicted_crit)
    if args.graph:
        if info.gamma is None:
            raise InputError("incidence graph needs an orientable pseudomanifold")
        graph = incidence_graph(doc.complex, info.gamma)
        payload["graph"] = {
            "nodes": [graph.node_label(k) for k in range(graph.node_count)],
            "edges": [
                {
                    "from": graph.node_label(a),
                    "to": graph.node_label(b),
                    "label": list(ridge),
                }
                for a, b, ridge in graph.edges
            ],
        }
    _emit(args, payload)
    return EXIT_OK


def _cmd_forests(args) -> int:
    from .forests import spanning_forests

    doc = _load_document(args.file)
    subset = json.loads(args.subset) if args.subset else None
    forests = spanning_forests(doc.complex, args.dim, args.mode, subset)
    faces = doc.complex.faces(args.dim)
    rows = [
        {
            "faces": [list(faces[k]) for k in f.face_subset],
            "torsion_order": f.torsion_order,
            "checks": list(f.checks),
        }
        for f in forests
    ]
    tau = sum(f.torsion_order**2 for f in forests if f.is_spanning_forest)
    payload = {"forests": rows, "count": len(rows)}
    if args.mode == "all":
        payload["tau"] = tau
    if args.pretty:
        for row in rows:
            faces_txt = " ".join("".join(map(str, f)) for f in row["faces"])
            print(f"{faces_txt}\ttorsion={row['torsion_order']}")
        if args.mode == "all":
            print(f"tau_{args.dim} = {tau}")
        return EXIT_OK
    _emit(args, payload)
    return EXIT_OK


def _cmd_reduced(args) -> int:
    from .forests import reduced_laplacian_group

    doc = _load_document(args.file)
    try:
        forest = json.loads(args.forest)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad forest JSON: {exc.msg}") from None
    res = reduced_laplacian_group(doc.complex, args.dim, forest)
    payload = {
        "theta": [list(f) for f in res.theta],
        "matrix": [list(r) for r in res.matrix],
        "hypothesis_ok": res.hypothesis_ok,
        "cokernel": _group_json(res.cokernel),
    }
    _emit(args, payload)
    return EXIT_OK


def _cmd_mindeg(args) -> int:
    from .winnability import minimal_winning_degrees

    doc = _load_document(args.file)
    report = minimal_winning_degrees(doc.complex, args.dim, args.bound)
    payload = {
        "minimal_degrees": [list(d) for d in report.minimal_degrees],
        "complete": report.complete,
        "bound": report.search_bound,
    }
    _emit(args, payload)
    return EXIT_OK


def _cmd_xset(args) -> int:
    from .winnability import in_X

    doc = _load_document(args.file)
    sigma = _load_chain(doc, args.dim, args.chain)
    member = in_X(doc.complex, args.dim, sigma)
    _emit(args, {"in_x": member})
    if args.expect_member and not member:
        return EXIT_NEGATIVE
    return EXIT_OK


def _cmd_play(args) -> int:
    from .engine import serve_stdio

    serve_stdio()
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .server import serve_http

    ui = args.ui
    if ui is None:
        bundled = os.path.join(os.path.dirname(__file__), "..", "..", "frontend", "dist")
        if os.path.isdir(bundled):
            ui = bundled
    print(f"serving on http://{args.host}:{args.port}/", file=sys.stderr)
    serve_http(args.host, args.port, ui)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chipfire",
        description="Exact dollar-game workbench for simplicial complexes",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=int(os.environ.get("CHIPFIRE_THREADS", "1")),
        help="solver parallelism (never affects output)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--pretty", action="store_true")
        return p

    p = add("analyze", _cmd_analyze, help="face counts and facets")
    p.add_argument("file")

    p = add("hilbert", _cmd_hilbert, help="Hilbert basis of the nonnegative kernel")
    p.add_argument("file")
    p.add_argument("-i", "--dim", type=int, required=True)
    p.add_argument("--rays-only", action="store_true")

    p = add("degree", _cmd_degree, help="degree vector of a chain")
    p.add_argument("file")
    p.add_argument("-i", "--dim", type=int, required=True)
    p.add_argument("--chain")
    p.add_argument("--rays-only", action="store_true")

    p = add("winnable", _cmd_winnable, help="decide the dollar game")
    p.add_argument("file")
    p.add_argument("-i", "--dim", type=int, required=True)
    p.add_argument("--chain")
    p.add_argument("--expect-winnable", action="store_true")
    p.add_argument("--expect-unwinnable", action="store_true")

    p = add("equivalent", _cmd_equivalent, help="linear equivalence of two chains")
    p.add_argument("file")
    p.add_argument("-i", "--dim", type=int, required=True)
    p.add_argument("--chain", required=True)
    p.add_argument("--other", required=True)
    p.add_argument("--expect-equivalent", action="store_true")

    p = add("critgroup", _cmd_critgroup, help="critical group")
    p.add_argument("file")
    p.add_argument("-i", "--dim", type=int, required=True)
    p.add_argument("--reps", action="store_true")

    p = add("homology", _cmd_homology, help="homology groups")
    p.add_argument("file")
    p.add_argument("-i", "--dim", type=int, required=True)
    p.add_argument("--variant", choices=[REDUCED, ORDINARY, RELATIVE], default=REDUCED)
    p.add_argument("--rel", help="subcomplex file for the relative variant")

    p = add("pseudo", _cmd_pseudo, help="pseudomanifold analysis")
    p.add_argument("file")
    p.add_argument("--graph", action="store_true", help="emit the incidence digraph")

    p = add("forests", _cmd_forests, help="spanning forests and forest number")
    p.add_argument("file")
    p.add_argument("-i", "--dim", type=int, required=True)
    p.add_argument("--mode", choices=["first", "all", "check"], default="all")
    p.add_argument("--subset", help="JSON list of face indices (check mode)")

    p = add("reduced", _cmd_reduced, help="reduced Laplacian cokernel")
    p.add_argument("file")
    p.add_argument("-i", "--dim", type=int, required=True)
    p.add_argument("--forest", required=True, help="JSON list of faces")

    p = add("mindeg", _cmd_mindeg, help="minimal winning degrees (bounded search)")
    p.add_argument("file")
    p.add_argument("-i", "--dim", type=int, required=True)
    p.add_argument("--bound", type=int, default=6)

    p = add("xset", _cmd_xset, help="membership in the nonnegative-boundary set")
    p.add_argument("file")
    p.add_argument("-i", "--dim", type=int, required=True)
    p.add_argument("--chain")
    p.add_argument("--expect-member", action="store_true")

    p = add("play", _cmd_play, help="line-delimited JSON game protocol on stdio")

    p = add("serve", _cmd_serve, help="HTTP binding of the protocol + playground")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8642)
    p.add_argument("--ui", help="directory with the built playground")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except ChipfireError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
