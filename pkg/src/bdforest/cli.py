"""Command-line interface.

Every artifact is canonical JSON (sorted keys, compact, ``"format": 1``) so
repeated runs with the same inputs and seed are byte-identical.  Exit codes:
0 success, 1 failed verification or unsatisfiable request, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import generators, planar
from .arboricity import arboricity_decompose, decompose_bounded, lower_bound_certificate
from .decomposer import color_forest_star
from .graph_core import (
    Graph,
    GraphError,
    InputError,
    dumps,
    graph_from_json,
)
from .verify import report_for_forest_star, verify_bounded_forest_partition

OUTPUT_DIR_ENV = "BDFOREST_OUTPUT_DIR"

PALETTE = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"]
STYLES = ["solid", "dashed", "dotted", "bold"]


class CliError(Exception):
    def __init__(self, message: str, status: int) -> None:
        super().__init__(message)
        self.status = status


# -- I/O -----------------------------------------------------------------------

def load_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}", 2) from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}", 2) from None


def _load(path: str, parser):
    data = load_json(path)
    try:
        return parser(data)
    except InputError as exc:
        raise CliError(f"{path}: {exc}", 2) from None


def _id_list(data: dict, key: str, where: str) -> list[int] | None:
    if key not in data:
        return None
    val = data[key]
    if not isinstance(val, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in val):
        raise InputError(f"field '{key}' in {where} must be a list of edge ids")
    return val


def parts_from_json(data) -> list[list[int]]:
    """Accepts a list of edge-id lists, ``{"parts": [...]}``, or
    ``{"part1": [...], "part2": [...], ...}``."""
    if isinstance(data, dict):
        if "parts" in data:
            data = data["parts"]
        else:
            keys = sorted((k for k in data if k.startswith("part") and k[4:].isdigit()), key=lambda k: int(k[4:]))
            if not keys:
                raise InputError("parts JSON needs 'parts' or 'part1', 'part2', ...")
            data = [data[k] for k in keys]
    if not isinstance(data, list):
        raise InputError("parts JSON must be a list of edge-id lists")
    for i, p in enumerate(data):
        if not isinstance(p, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in p):
            raise InputError(f"parts[{i}] must be a list of edge ids")
    return data


def write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    path = Path(out)
    base = os.environ.get(OUTPUT_DIR_ENV)
    if base and not path.is_absolute():
        path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def to_dot(g: Graph, parts: Sequence[Sequence[int]]) -> str:
    part_of = {eid: i for i, p in enumerate(parts) for eid in p}
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for eid, u, v in g.edges:
        i = part_of.get(eid)
        if i is None:
            attrs = 'color="gray", style="invis"'
        else:
            attrs = f'color="{PALETTE[i % len(PALETTE)]}", style="{STYLES[i // len(PALETTE) % len(STYLES)]}"'
        lines.append(f'  {u} -- {v} [id="e{eid}", part={"none" if i is None else i}, {attrs}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- commands ------------------------------------------------------------------

def cmd_decompose(args) -> int:
    data = load_json(args.graph)
    try:
        g = graph_from_json(data)
        extra = data if args.input is None else load_json(args.input)
        if not isinstance(extra, dict):
            raise InputError("decomposition input must be an object")
        forest = _id_list(extra, "forest", "input")
        stars = _id_list(extra, "star_forest", "input")
        if forest is None or stars is None:
            raise InputError("input needs 'forest' and 'star_forest' edge-id lists")
    except InputError as exc:
        raise CliError(str(exc), 2) from None
    res = color_forest_star(g, forest, stars)
    sub = g if res.outing.original_edge_ids == g.edge_ids else g.subgraph(res.outing.original_edge_ids)
    report = report_for_forest_star(sub, res, diameter=18)
    part1, part2 = res.decomposition.parts
    out = {
        "format": 1,
        "part1": sorted(part1),
        "part2": sorted(part2),
        "max_diameter": report.max_component_diameter,
        "max_dipath": report.max_dipath,
    }
    if args.report:
        out["report"] = report.to_json()
    write_output(dumps(out), args.out)
    if args.dot:
        write_output(to_dot(g, [sorted(part1), sorted(part2)]), args.dot)
    return 0 if report.ok else 1


def cmd_decompose_bounded(args) -> int:
    g = _load(args.graph, graph_from_json)
    res = decompose_bounded(g, jobs=args.jobs)
    out = {
        "format": 1,
        "arboricity": res.arboricity,
        "parts": res.decomposition.to_json(),
        "report": res.report.to_json(),
    }
    write_output(dumps(out), args.out)
    return 0 if res.report.ok else 1


def cmd_arboricity(args) -> int:
    g = _load(args.graph, graph_from_json)
    res = arboricity_decompose(g)
    out = {"format": 1, "k": res.k, "parts": res.parts.to_json()}
    if args.witness:
        out["witness"] = None if res.witness is None else sorted(res.witness)
    write_output(dumps(out), args.out)
    return 0


def cmd_verify(args) -> int:
    g = _load(args.graph, graph_from_json)
    parts = _load(args.parts, parts_from_json)
    try:
        for p in parts:
            g.check_ids(p)
    except InputError as exc:
        raise CliError(f"{args.parts}: {exc}", 2) from None
    report = verify_bounded_forest_partition(g, parts, args.diameter)
    write_output(dumps({"format": 1, **report.to_json()}), args.out)
    return 0 if report.ok else 1


def cmd_dual(args) -> int:
    emb = _load(args.embedding, planar.embedding_from_json)
    dm = planar.build_dual(emb)
    out = dm.dual.to_json()
    out["edge_bijection"] = [[p, d] for p, d in sorted(dm.edge_bijection.items())]
    write_output(dumps(out), args.out)
    return 0


def cmd_thin_trees(args) -> int:
    data = load_json(args.embedding)
    try:
        emb = planar.embedding_from_json(data)
        source = data if args.decomposition is None else load_json(args.decomposition)
        if not isinstance(source, dict):
            raise InputError("decomposition input must be an object")
        matching = _id_list(source, "matching", "decomposition")
        forest = _id_list(source, "forest", "decomposition")
        if args.decomposition is not None and matching is None:
            raise InputError("decomposition needs a 'matching' edge-id list")
    except InputError as exc:
        raise CliError(str(exc), 2) from None
    res = planar.thin_trees(emb, matching=matching, forest=forest, check=not args.no_check)
    write_output(dumps(res.to_json()), args.out)
    return 0 if res.thin_ok is not False else 1


def cmd_forest_star(args) -> int:
    g = _load(args.graph, graph_from_json)
    kind = "matching" if args.matching else "star"
    try:
        forest, rest = planar.find_forest_plus(g, kind, args.max_vertices)
    except GraphError as exc:
        write_output(dumps({"format": 1, "found": False, "reason": str(exc)}), args.out)
        return 1
    key = "matching" if args.matching else "star_forest"
    write_output(dumps({"format": 1, "found": True, "forest": sorted(forest), key: sorted(rest)}), args.out)
    return 0


def cmd_lower_bound(args) -> int:
    g = _load(args.graph, graph_from_json)
    holds, text = lower_bound_certificate(g, args.k, args.d, args.c)
    write_output(dumps({"format": 1, "holds": holds, "certificate": text}), args.out)
    return 0 if holds else 1


def cmd_export_dot(args) -> int:
    g = _load(args.graph, graph_from_json)
    parts = _load(args.parts, parts_from_json) if args.parts else [sorted(g.edge_ids)]
    write_output(to_dot(g, parts), args.out)
    return 0


def cmd_gen(args) -> int:
    what = args.what
    if what == "counterexample":
        out = planar.gen_counterexample(args.k).to_json()
    elif what == "honeycomb":
        emb = planar.gen_honeycomb(args.rows, args.cols)
        if args.dual:
            forest, matching = planar.find_forest_matching(emb.graph, None)
            out = planar.build_dual(emb).dual.to_json()
            out["forest"] = sorted(forest)
            out["matching"] = sorted(matching)
        else:
            out = emb.to_json()
    elif what == "triangulation-strip":
        out = planar.gen_triangulation_strip(args.n).to_json()
    elif what == "random-forest-star":
        inst = generators.random_forest_star(args.n, generators.rng_for(args.seed), args.style)
        out = {**inst.graph.to_json(), **inst.decomposition_json()}
    elif what == "random-graph":
        out = generators.random_graph(args.n, args.p, generators.rng_for(args.seed)).to_json()
    elif what == "random-triangulation":
        out = planar.random_triangulation(args.n, generators.rng_for(args.seed)).to_json()
    elif what == "bipartite-planar":
        out = planar.random_bipartite_planar(generators.rng_for(args.seed)).to_json()
    elif what == "forest-union":
        out = generators.random_k_forest_union(args.n, args.k, generators.rng_for(args.seed)).to_json()
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown generator {what}", 2)
    write_output(dumps(out), args.out)
    return 0


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bdforest", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--out", help="output file (default stdout)")
        return sp

    sp = add("decompose", cmd_decompose, "forest + star forest -> two forests of diameter <= 18")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--input", help="JSON with 'forest' and 'star_forest' (default: read from --graph)")
    sp.add_argument("--report", action="store_true", help="include the full verification report")
    sp.add_argument("--dot", help="also write a DOT file of the two parts")

    sp = add("decompose-bounded", cmd_decompose_bounded, "ceil(4k/3) forests of diameter <= 18")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("arboricity", cmd_arboricity, "exact arboricity with a forest decomposition")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--witness", action="store_true", help="include a densest vertex subset (n <= 15)")

    sp = add("verify", cmd_verify, "check a forest decomposition")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--parts", required=True)
    sp.add_argument("--diameter", type=int, default=18)

    sp = add("dual", cmd_dual, "dual of a plane embedding")
    sp.add_argument("--embedding", required=True)

    sp = add("thin-trees", cmd_thin_trees, "two edge-disjoint 18/19-thin spanning trees")
    sp.add_argument("--embedding", required=True)
    sp.add_argument("--decomposition", help="JSON with the dual's 'matching' (and optional 'forest')")
    sp.add_argument("--no-check", action="store_true", help="skip exhaustive cut enumeration")

    sp = add("forest-star", cmd_forest_star, "exhaustive forest + star forest search (tiny graphs)")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--matching", action="store_true", help="require the second part to be a matching")
    sp.add_argument("--max-vertices", type=int, default=14)

    sp = add("lower-bound", cmd_lower_bound, "counting certificate against k forests of diameter <= d")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--c", type=int, required=True)

    sp = add("export-dot", cmd_export_dot, "DOT file with edges styled by part")
    sp.add_argument("--graph", required=True)
    sp.add_argument("--parts")

    sp = add("gen", cmd_gen, "instance generators")
    sp.add_argument(
        "what",
        choices=[
            "counterexample", "honeycomb", "triangulation-strip", "random-forest-star",
            "random-graph", "random-triangulation", "bipartite-planar", "forest-union",
        ],
    )
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--rows", type=int, default=2)
    sp.add_argument("--cols", type=int, default=2)
    sp.add_argument("--dual", action="store_true", help="honeycomb: emit the dual with its forest + matching")
    sp.add_argument("--n", type=int, default=20)
    sp.add_argument("--p", type=float, default=0.3)
    sp.add_argument("--style", choices=["matching", "stars", "dense"])
    sp.add_argument("--seed", type=int, default=0)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.status
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
