"""Command-line interface: ``hyperterrain <command> [input | --gen DESCRIPTOR] ...``.

Exit codes: 0 success (and every check passed), 1 a verification check
failed or a runtime error occurred, 2 bad input, parameters or size caps.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import __version__
from .approx import approx_pair_left, approx_tree_fast, approx_tree_middle
from .convexity import (check_disk_pseudoconvexity, check_layer_pseudoconvexity,
                        pseudoconvexity_beta, quasiconvexity_eps)
from .exact import (DEFAULT_APSP_CAP, DEFAULT_DELTA_CAP, eccentricity_profile,
                    hyperbolicity_exact)
from .exceptions import HyperterrainError, InputError, InvalidParams, MissingDelta
from .generators import Fig3Params, gen_family, gen_fig3, parse_family
from .graph import Graph, bfs, canonical_shortest_path, disk, format_edgelist, read_edgelist
from .sweeps import mutually_distant_pair
from .terrain import classify_path_kind, edge_count_identities, segment_path
from .verify import SuiteConfig, aggregate, default_corpus, resolve_threads, run_corpus, run_suite

FORMATS = ("text", "tsv", "json")
ECC_MODES = ("exact", "pair", "tree", "tree-fast")


@dataclass
class Loaded:
    graph: Graph
    source: str
    names: dict[str, int] | None = None

    def vertex(self, token: str) -> int:
        """Dense id of a vertex given by label, or by name for fig3 graphs."""
        if self.names is not None and token in self.names:
            return self.names[token]
        try:
            label = int(token)
        except ValueError:
            raise InvalidParams(f"unknown vertex {token!r}") from None
        return self.graph.index_of(label)


def _load(args) -> Loaded:
    if (args.input is None) == (args.gen is None):
        raise InvalidParams("give exactly one input: an edge-list file or --gen DESCRIPTOR")
    if args.gen is not None:
        name, fargs, fkw = parse_family(args.gen)
        if name == "fig3":
            try:
                params = Fig3Params(*fargs, **fkw)
            except TypeError as exc:
                raise InvalidParams(str(exc)) from None
            g, names = gen_fig3(params)
            return Loaded(g, args.gen, names)
        return Loaded(gen_family(args.gen), args.gen)
    if args.input == "-":
        from .graph import build_graph, parse_edgelist
        return Loaded(build_graph(parse_edgelist(sys.stdin.read())), "<stdin>")
    try:
        return Loaded(read_edgelist(args.input), args.input)
    except OSError as exc:
        raise InputError(f"cannot read {args.input}: {exc.strerror or exc}") from None


def _caps(args) -> tuple[int | None, int | None]:
    if args.force:
        return None, None
    for name in ("apsp_cap", "delta_cap"):
        if getattr(args, name) < 1:
            raise InvalidParams(f"--{name.replace('_', '-')} must be positive")
    return args.apsp_cap, args.delta_cap


def _emit(args, payload: dict, text: str, tsv: str | None = None) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    elif args.format == "tsv" and tsv is not None:
        sys.stdout.write(tsv)
    else:
        sys.stdout.write(text)


def _table(header: list[str], rows: list[list]) -> str:
    lines = ["\t".join(header)]
    lines.extend("\t".join("" if v is None else str(v) for v in row) for row in rows)
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_gen(args) -> int:
    loaded = _load(args)
    g = loaded.graph
    payload = {
        "schema": "hyperterrain.gen/1",
        "source": loaded.source,
        "n": g.n,
        "m": g.m,
        "edges": [[int(a), int(b)] for a, b in
                  ((g.labels[u], g.labels[v]) for u, v in g.edges())],
    }
    if loaded.names is not None:
        payload["names"] = {k: int(g.labels[v]) for k, v in loaded.names.items()}
    text = format_edgelist(g)
    _emit(args, payload, text, text.replace(" ", "\t"))
    return 0


def cmd_stats(args) -> int:
    loaded = _load(args)
    g = loaded.graph
    apsp_cap, delta_cap = _caps(args)
    prof = eccentricity_profile(g, cap=apsp_cap)
    labels = g.labels.tolist()
    if delta_cap is None or g.n <= delta_cap:
        cert = hyperbolicity_exact(g, cap=None)
        delta2, status = cert.delta2, "ok"
        witness = None if cert.witness is None else [labels[v] for v in cert.witness]
    else:
        delta2, status, witness = None, "skipped", None
    payload = {
        "schema": "hyperterrain.stats/1",
        "source": loaded.source,
        "n": g.n,
        "m": g.m,
        "rad": prof.rad,
        "diam": prof.diam,
        "center": [labels[c] for c in prof.center],
        "center_size": len(prof.center),
        "delta2": delta2,
        "delta2_status": status,
        "delta2_witness": witness,
        "layer_histogram": prof.histogram(),
    }
    delta_txt = f"{delta2} (delta = {delta2 / 2:g})" if delta2 is not None else \
        f"skipped (n > {delta_cap}; use --force)"
    text = (
        f"n\t{g.n}\nm\t{g.m}\nrad\t{prof.rad}\ndiam\t{prof.diam}\n"
        f"center_size\t{len(prof.center)}\n"
        f"center\t{' '.join(str(labels[c]) for c in prof.center)}\n"
        f"delta2\t{delta_txt}\n"
        f"layers\t{' '.join(map(str, prof.histogram()))}\n"
    )
    _emit(args, payload, text)
    return 0


def cmd_ecc(args) -> int:
    loaded = _load(args)
    g = loaded.graph
    apsp_cap, _ = _caps(args)
    start = 0 if args.start is None else loaded.vertex(args.start)
    delta2 = args.delta2
    if delta2 is not None and delta2 < 0:
        raise InvalidParams("--delta2 must be non-negative")
    if args.k is not None and args.mode != "tree-fast":
        raise InvalidParams("--k only applies to --mode tree-fast")
    labels = g.labels.tolist()

    exact = None
    exact_info: dict = {"status": "off"}
    if args.mode == "exact":
        prof = eccentricity_profile(g, cap=apsp_cap)
        est = prof.ecc
        meta = {"method": "exact", "params": {}, "anchors": {},
                "guarantee": {"side": "exact", "additive": "0", "bound": 0}}
    else:
        if args.mode == "pair":
            res = approx_pair_left(g, mutually_distant_pair(g, start), delta2=delta2)
        elif args.mode == "tree":
            res = approx_tree_middle(g, start=start, delta2=delta2)[1]
        else:
            k = 1 if args.k is None else args.k
            if k < 0:
                raise InvalidParams("--k must be non-negative")
            res = approx_tree_fast(g, start, k=k, delta2=delta2)[1]
        est = res.est
        meta = res.to_json(g)
        meta.pop("est")
    if args.with_exact:
        if args.mode == "exact":
            exact = est
            exact_info = {"status": "ok"}
        elif apsp_cap is not None and g.n > apsp_cap:
            exact_info = {"status": "skipped",
                          "reason": f"n={g.n} exceeds the exact-oracle cap of {apsp_cap}"}
        else:
            exact = eccentricity_profile(g, cap=None).ecc
            exact_info = {"status": "ok"}

    side = meta["guarantee"]["side"]
    est_l = est.tolist()
    if exact is not None:
        ex_l = exact.tolist()
        sign = -1 if side == "left" else 1
        err = [sign * (a - b) for a, b in zip(est_l, ex_l)]
        rows = [[labels[v], est_l[v], ex_l[v], err[v]] for v in range(g.n)]
        header = ["vertex", "estimate", "exact", "error"]
    else:
        rows = [[labels[v], est_l[v]] for v in range(g.n)]
        header = ["vertex", "estimate"]

    payload = {
        "schema": "hyperterrain.ecc/1",
        "source": loaded.source,
        "n": g.n,
        "m": g.m,
        "mode": args.mode,
        **meta,
        "exact": exact_info,
        "rows": [dict(zip(header, r)) for r in rows],
    }
    g_meta = meta["guarantee"]
    bound = "unknown (pass --delta2)" if g_meta["bound"] is None else g_meta["bound"]
    comment = (f"# method={meta['method']} side={g_meta['side']} "
               f"additive={g_meta['additive']} bound={bound}\n")
    if exact_info["status"] == "skipped":
        comment += f"# exact: skipped ({exact_info['reason']})\n"
    tsv = _table(header, rows)
    _emit(args, payload, comment + tsv, tsv)
    if exact_info["status"] == "skipped" and args.format == "tsv":
        print(f"exact: skipped ({exact_info['reason']})", file=sys.stderr)
    return 0


def cmd_terrain(args) -> int:
    loaded = _load(args)
    g = loaded.graph
    apsp_cap, _ = _caps(args)
    y = loaded.vertex(args.source)
    x = loaded.vertex(args.target)
    prof = eccentricity_profile(g, cap=apsp_cap)
    path = canonical_shortest_path(g, y, x, dist=bfs(g, y))
    seg = segment_path(g, prof, path)
    ecc = [int(prof.ecc[v]) for v in path]
    payload = {
        "schema": "hyperterrain.terrain/1",
        "source": loaded.source,
        "from": g.label(y),
        "to": g.label(x),
        **seg.to_json(g),
        "ecc": ecc,
        "kind": classify_path_kind(prof, path).value,
        "identities": edge_count_identities(seg, prof),
    }
    names = None
    if loaded.names is not None:
        inv = {v: k for k, v in loaded.names.items()}
        names = [inv[v] for v in path]
        payload["names"] = names
    shown = names or [str(g.label(v)) for v in path]
    text = (
        f"path\t{' '.join(shown)}\n"
        f"ecc\t{' '.join(map(str, ecc))}\n"
        f"classes\t{seg.classes}\n"
        f"strip\t{seg.strip()}\n"
        f"kind\t{payload['kind']}\n"
        f"counts\tU={seg.up} H={seg.horizontal} D={seg.down}\n"
    )
    for s in seg.segments:
        extra = f" ({s.plain_kind})" if s.plain_kind else ""
        text += f"segment\t{s.label}{extra} start={s.start} length={s.length}\n"
    _emit(args, payload, text)
    return 0


def _delta2_for(args, g: Graph, delta_cap) -> int:
    if args.delta2 is not None:
        if args.delta2 < 0:
            raise InvalidParams("--delta2 must be non-negative")
        return args.delta2
    if delta_cap is not None and g.n > delta_cap:
        raise MissingDelta(f"n={g.n} exceeds the exact-hyperbolicity cap of {delta_cap}; "
                           "pass --delta2 or --force")
    return hyperbolicity_exact(g, cap=None).delta2


def cmd_convexity(args) -> int:
    loaded = _load(args)
    g = loaded.graph
    apsp_cap, delta_cap = _caps(args)
    labels = g.labels.tolist()
    payload: dict = {"schema": "hyperterrain.convexity/1", "source": loaded.source}
    lines = []

    def as_labels(seq):
        return None if seq is None else [labels[v] for v in seq]

    if args.set is not None or args.disk is not None:
        if args.set is not None:
            members = [loaded.vertex(tok) for tok in args.set.split(",") if tok.strip()]
            payload["set"] = sorted(labels[v] for v in members)
        else:
            c, r = args.disk
            c = loaded.vertex(c)
            try:
                r = int(r)
            except ValueError:
                raise InvalidParams(f"disk radius must be an integer, got {r!r}") from None
            if r < 0:
                raise InvalidParams("disk radius must be non-negative")
            members = sorted(disk(g, [c], r))
            payload["disk"] = {"center": labels[c], "radius": r}
        rep = pseudoconvexity_beta(g, members)
        eps = quasiconvexity_eps(g, members)
        payload["report"] = {"size": len(rep.members), "beta_min": rep.beta_min,
                             "witness": as_labels(rep.witness), "eps_min": eps,
                             "exact": rep.exact}
        lines.append(f"size\t{len(rep.members)}\nbeta_min\t{rep.beta_min}\n"
                     f"eps_min\t{eps}\nwitness\t{as_labels(rep.witness)}\n")
    else:
        delta2 = _delta2_for(args, g, delta_cap)
        prof = eccentricity_profile(g, cap=apsp_cap)
        layers = check_layer_pseudoconvexity(g, prof, delta2)
        disks = check_disk_pseudoconvexity(g, delta2, samples=args.disks, seed=args.seed)
        payload["delta2"] = delta2
        payload["layers"] = [
            {"k": c.k, "beta_min": c.beta_min, "allowed": c.allowed, "diam": c.diam,
             "diam_bound": c.diam_bound, "ok": c.ok, "witness": as_labels(c.witness)}
            for c in layers]
        payload["disks"] = [
            {"center": labels[d.center], "radius": d.radius, "beta_min": d.beta_min,
             "ok": d.ok, "witness": as_labels(d.witness)} for d in disks]
        payload["ok"] = all(c.ok for c in layers) and all(d.ok for d in disks)
        lines.append("k\tbeta_min\tallowed\tdiam\tdiam_bound\tok\n")
        lines.extend(f"{c.k}\t{c.beta_min}\t{c.allowed}\t{c.diam}\t{c.diam_bound}\t{c.ok}\n"
                     for c in layers)
        bad = sum(1 for d in disks if not d.ok)
        lines.append(f"disks\t{len(disks)} sampled, {bad} above beta {disks[0].allowed if disks else 0}\n")
    _emit(args, payload, "".join(lines))
    return 0


def cmd_verify(args) -> int:
    config = SuiteConfig(seed=args.seed, random_paths=args.paths, disk_pairs=args.disk_pairs,
                         size_cap=None if args.force else args.delta_cap,
                         checks=tuple(args.checks.split(",")) if args.checks else None)
    threads = resolve_threads(args.threads)
    if args.corpus or (args.input is None and args.gen is None):
        fams = args.families.split(",") if args.families else None
        sizes = [int(s) for s in args.sizes.split(",")] if args.sizes else None
        seeds = [int(s) for s in args.seeds.split(",")] if args.seeds else None
        kw = {}
        if fams is not None:
            kw["families"] = fams
        if sizes is not None:
            kw["sizes"] = sizes
        if seeds is not None:
            kw["seeds"] = seeds
        descriptors = default_corpus(fig3=not args.no_fig3, **kw)
        report = run_corpus(descriptors, config, threads=threads)
    else:
        loaded = _load(args)
        single = run_suite(loaded.graph, config, graph_id=loaded.source).to_json()
        report = aggregate([single], config.seed)
    lines = []
    for r in report["graphs"]:
        bad = [c["check_id"] for c in r["checks"] if c["status"] == "fail"]
        lines.append(f"{r['graph_id']}\tdelta2={r['delta2']}\t{r['status']}"
                     + (f"\t{','.join(bad)}" if bad else "") + "\n")
    s = report["summary"]
    lines.append(f"summary\tgraphs={s['graphs']} passed={s['checks_passed']} "
                 f"failed={s['checks_failed']} skipped={s['checks_skipped']}\n")
    _emit(args, report, "".join(lines))
    return 0 if report["status"] == "pass" else 1


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="edge-list file ('-' for stdin)")
    common.add_argument("--gen", metavar="DESCRIPTOR",
                        help="generate the input, e.g. 'gnm_connected(100,300,seed=1)'")
    common.add_argument("--format", choices=FORMATS, default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $HYPERTERRAIN_THREADS or CPU count)")
    common.add_argument("--force", action="store_true", help="ignore size caps")
    common.add_argument("--apsp-cap", type=int, default=DEFAULT_APSP_CAP)
    common.add_argument("--delta-cap", type=int, default=DEFAULT_DELTA_CAP)

    p = argparse.ArgumentParser(prog="hyperterrain",
                                description="Eccentricity terrain of hyperbolic graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("gen", parents=[common], help="write a generated graph as an edge list")
    sp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("stats", parents=[common], help="n, m, radius, diameter, center, delta")
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("ecc", parents=[common], help="per-vertex eccentricity estimates")
    sp.add_argument("--mode", choices=ECC_MODES, default="pair")
    sp.add_argument("--k", type=int, default=None, help="extra sweeps for tree-fast (default 1)")
    sp.add_argument("--start", default=None, help="start vertex of the sweeps")
    sp.add_argument("--with-exact", action="store_true", help="add exact and error columns")
    sp.add_argument("--delta2", type=int, default=None,
                    help="known 2*delta, used to evaluate the guarantee")
    sp.set_defaults(func=cmd_ecc)

    sp = sub.add_parser("terrain", parents=[common], help="terrain of a canonical shortest path")
    sp.add_argument("--from", dest="source", required=True)
    sp.add_argument("--to", dest="target", required=True)
    sp.set_defaults(func=cmd_terrain)

    sp = sub.add_parser("convexity", parents=[common],
                        help="pseudoconvexity of a set, a disk, or all layers and sampled disks")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--set", help="comma-separated vertex labels")
    group.add_argument("--disk", nargs=2, metavar=("CENTER", "RADIUS"))
    sp.add_argument("--disks", type=_nonneg_int, default=200, help="sampled disks (layer mode)")
    sp.add_argument("--delta2", type=int, default=None)
    sp.set_defaults(func=cmd_convexity)

    sp = sub.add_parser("verify", parents=[common],
                        help="run every bound check on a graph or on the corpus")
    sp.add_argument("--corpus", action="store_true", help="run the default corpus")
    sp.add_argument("--families", help="comma-separated corpus families")
    sp.add_argument("--sizes", help="comma-separated corpus sizes")
    sp.add_argument("--seeds", help="comma-separated corpus seeds")
    sp.add_argument("--no-fig3", action="store_true", help="leave the fig3 graphs out")
    sp.add_argument("--checks", help="comma-separated check ids to run")
    sp.add_argument("--paths", type=_nonneg_int, default=500, help="random paths per graph")
    sp.add_argument("--disk-pairs", type=_nonneg_int, default=100)
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors are input errors
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HyperterrainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
