"""Command-line interface: ``planarcanon {canon,iso,decompose,selftest,gen}``."""

from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence

from .canonizer import canon_planar
from .decompose import BiconTree, biconnected_decompose
from .errors import GraphFormatError, NonPlanarError, PlanarCanonError
from .fileio import format_edge_list, read_graph
from .generate import PROFILES, random_planar
from .graph_model import Graph, planar_embed

EXIT_OK, EXIT_NO, EXIT_PARSE, EXIT_NONPLANAR = 0, 1, 2, 3

log = logging.getLogger("planarcanon")


def _load(path: str) -> Graph:
    g = read_graph(path)
    planar_embed(g)  # fail early with NonPlanarError
    return g


def _cmd_canon(args) -> int:
    g = _load(args.file)
    log.debug("graph=%s", args.file)
    sys.stdout.write(canon_planar(g, args.roots).text())
    return EXIT_OK


def _cmd_iso(args) -> int:
    g, h = _load(args.file1), _load(args.file2)
    log.debug("graph=%s", args.file1)
    cg = canon_planar(g, args.roots)
    log.debug("graph=%s", args.file2)
    ch = canon_planar(h, args.roots)
    same = cg == ch
    if not args.quiet:
        print("ISOMORPHIC" if same else "NOT-ISOMORPHIC")
    return EXIT_OK if same else EXIT_NO


def _components(g: Graph) -> list[BiconTree]:
    trees = []
    for verts in g.connected_components():
        sub, old = g.induced(verts)
        trees.append((biconnected_decompose(sub), old))
    return trees


def _describe(g: Graph) -> str:
    lines = []
    for ci, (bt, old) in enumerate(_components(g)):
        lines.append(f"component {ci} vertices={','.join(map(str, old))}")
        if bt.articulation_points:
            lines.append("  articulation " + " ".join(str(old[a]) for a in bt.articulation_points))
        for b in bt.blocks:
            verts = ",".join(str(old[v]) for v in b.vertices)
            if b.tricon is None:
                lines.append(f"  block B{b.id} edge {verts}")
                continue
            lines.append(f"  block B{b.id} vertices={verts}")
            t = b.tricon
            for p in t.pairs:
                lines.append(f"    pair P{p.id} {old[p.u]}-{old[p.v]}")
            for c in t.components:
                vs = ",".join(str(old[v]) for v in c.vertices)
                pairs = ",".join(f"P{pid}" for pid in t.comp_adj[c.id]) or "-"
                lines.append(f"    component G{c.id + 1} {c.kind.name.lower()} vertices={vs} pairs={pairs}")
            center = t.center()
            lines.append(f"    center {'P' if center[0] == 'P' else 'G'}{center[1] + (center[0] == 'C')}")
    return "\n".join(lines) + "\n"


def _dot(g: Graph) -> str:
    lines = ["graph decomposition {"]
    for ci, (bt, old) in enumerate(_components(g)):
        for a in bt.articulation_points:
            lines.append(f'  "c{ci}a{a}" [shape=point, xlabel="{old[a]}"];')
        for b in bt.blocks:
            bn = f"c{ci}b{b.id}"
            lines.append(f'  subgraph "cluster_{bn}" {{')
            lines.append(f'    label="B{b.id}";')
            if b.tricon is None:
                lines.append(f'    "{bn}" [label="edge {old[b.vertices[0]]}-{old[b.vertices[1]]}", shape=box];')
            else:
                t = b.tricon
                for p in t.pairs:
                    lines.append(f'    "{bn}p{p.id}" [label="{old[p.u]},{old[p.v]}", shape=ellipse];')
                for c in t.components:
                    vs = ",".join(str(old[v]) for v in c.vertices)
                    lines.append(f'    "{bn}g{c.id}" [label="G{c.id + 1} {c.kind.name.lower()}\\n{vs}", shape=box];')
                    for pid in t.comp_adj[c.id]:
                        lines.append(f'    "{bn}g{c.id}" -- "{bn}p{pid}";')
                if not t.pairs:
                    lines.append(f'    "{bn}" [style=invis];')
            lines.append("  }")
            anchor = f"{bn}g0" if b.tricon is not None else bn
            for a in bt.block_arts[b.id]:
                lines.append(f'  "c{ci}a{a}" -- "{anchor}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_decompose(args) -> int:
    g = _load(args.file)
    sys.stdout.write(_dot(g) if args.dot else _describe(g))
    return EXIT_OK


def _cmd_selftest(args) -> int:
    from .selftest import run_selftest

    report = run_selftest(args.n, seed=args.seed)
    if not args.quiet:
        print(f"graphs={report.graphs} classes=" + ",".join(f"{n}:{k}" for n, k in report.classes_by_n.items()))
        for line in report.mismatches:
            print(line)
        print("PASS" if report.ok else "FAIL")
    return EXIT_OK if report.ok else EXIT_NO


def _cmd_gen(args) -> int:
    sys.stdout.write(format_edge_list(random_planar(args.n, args.seed, args.profile)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="suppress non-essential output")
    common.add_argument("--trace", action="store_true", help="log root candidates and orientation counters")
    common.add_argument(
        "--roots",
        choices=("exhaustive", "limited"),
        default="exhaustive",
        help="root candidates for blocks below an articulation point",
    )
    parser = argparse.ArgumentParser(prog="planarcanon", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", parents=[common], help="print the canon of a graph file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("iso", parents=[common], help="exit 0 if two graphs are isomorphic, else 1")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("decompose", parents=[common], help="print block and component trees")
    p.add_argument("file")
    p.add_argument("--dot", action="store_true", help="emit Graphviz DOT instead of text")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("selftest", parents=[common], help="compare canons with the brute-force oracle")
    p.add_argument("--n", type=int, default=6, choices=range(1, 8), metavar="N", help="max vertices (1..7)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_selftest)

    p = sub.add_parser("gen", parents=[common], help="print a random planar graph file")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--profile", choices=PROFILES, default="biconnected")
    p.set_defaults(func=_cmd_gen)
    return parser


def _configure_logging(trace: bool, quiet: bool) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    root = logging.getLogger("planarcanon")
    root.handlers[:] = [handler]
    root.propagate = False
    root.setLevel(logging.DEBUG if trace else logging.ERROR if quiet else logging.WARNING)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.trace, args.quiet)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NonPlanarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONPLANAR
    except PlanarCanonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO


def cli(argv: Sequence[str] | None = None) -> int:
    return main(argv)
