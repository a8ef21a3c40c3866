"""Command-line entry point: ``edgedepth <subcommand> ...``.

Exit codes: 0 when every guaranteed check holds, 1 for usage or input
errors, 2 when a guaranteed check is violated.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .campaign import ConfigError, ExperimentConfig, run_campaign, write_outputs
from .constructions import (GeneratorCapExceeded, HypothesisError, edge_ideal,
                            symbolic_power)
from .graphs import (Graph, GraphError, is_chordal, minimal_vertex_covers,
                     parse_graph, star_packing_number)
from .homology import FieldSpec, betti_table, depth
from .monomials import DimensionError, MonomialIdeal, power
from .verify import (VerificationReport, check_colon_identity, check_edge_ideal_bound,
                     check_forest_power_coincidence, check_mixed_bound,
                     check_packing_deletion_lemmas, check_symbolic_depth_bound)

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def read_ideal(path: str) -> MonomialIdeal:
    """JSON ``{"n": 3, "generators": ["x1*x2", ...]}`` or text ``n=3`` + ``(x1*x2, ...)``."""
    try:
        text = Path(path).read_text().strip()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        if text.startswith("{"):
            data = json.loads(text)
            n = data["n"]
            gens = data["generators"]
            return MonomialIdeal.parse("(" + ", ".join(gens) + ")", n)
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        if len(lines) != 2 or not lines[0].startswith("n="):
            raise ValueError("expected a line 'n=<count>' followed by '(gen, gen, ...)'")
        return MonomialIdeal.parse(lines[1], int(lines[0][2:]))
    except (ValueError, KeyError, DimensionError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _field(args) -> FieldSpec:
    try:
        return FieldSpec(args.char)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def report_line(rep: VerificationReport) -> str:
    parts = [rep.id, f"n={rep.graph.n}"]
    if rep.s is not None:
        parts.append(f"s={rep.s}")
    if rep.alpha2 is not None:
        parts.append(f"alpha2={rep.alpha2}")
    parts += [f"depth={rep.value}", f"bound={rep.bound}", f"slack={rep.slack}",
              f"verdict={rep.verdict}", f"mode={rep.mode}", f"char={rep.characteristic}"]
    return " ".join(parts)


def cmd_alpha2(args) -> int:
    G = read_graph(args.graph)
    value, witness = star_packing_number(G)
    print(f"{value}  witness: {{{','.join(str(v) for v in sorted(witness.centers))}}}")
    return EXIT_OK


def _target_ideal(args) -> MonomialIdeal:
    if args.ideal:
        if args.power or args.symbolic is not None:
            raise UsageError("--power/--symbolic apply to --graph only")
        return read_ideal(args.ideal)
    G = read_graph(args.graph)
    if args.power and args.symbolic is not None:
        raise UsageError("choose one of --power and --symbolic")
    if args.power:
        if args.power < 1:
            raise UsageError("--power needs s >= 1")
        return power(edge_ideal(G), args.power)
    if args.symbolic is not None:
        return symbolic_power(G, args.symbolic)
    return edge_ideal(G)


def cmd_depth(args) -> int:
    I = _target_ideal(args)
    if I.is_unit:
        raise UsageError("the unit ideal has no depth (S/I = 0)")
    print(depth(I, _field(args)))
    return EXIT_OK


def cmd_betti(args) -> int:
    I = _target_ideal(args)
    if I.is_unit:
        raise UsageError("the unit ideal has no Betti table")
    print(betti_table(I, _field(args)).to_json())
    return EXIT_OK


def cmd_edge_ideal(args) -> int:
    print(edge_ideal(read_graph(args.graph)))
    return EXIT_OK


def cmd_symbolic_power(args) -> int:
    print(symbolic_power(read_graph(args.graph), args.s))
    return EXIT_OK


def cmd_covers(args) -> int:
    for C in minimal_vertex_covers(read_graph(args.graph)):
        print("{" + ",".join(str(v) for v in sorted(C)) + "}")
    return EXIT_OK


def cmd_chordal(args) -> int:
    res = is_chordal(read_graph(args.graph))
    if res.chordal:
        print("chordal  peo: " + " ".join(map(str, res.ordering)))
    else:
        print("not chordal  induced cycle: " + " ".join(map(str, res.cycle)))
    return EXIT_OK


def cmd_verify(args) -> int:
    F = _field(args)
    G = read_graph(args.graph)
    thm = args.theorem
    if thm in ("thm34", "thm42", "prop33", "forest", "lem41") and args.s is None:
        args.s = 2
    if thm == "cor22":
        rep = check_edge_ideal_bound(G, F)
    elif thm == "thm34":
        rep = check_symbolic_depth_bound(G, args.s, require_chordal=True, F=F)
    elif thm == "thm42":
        rep = check_symbolic_depth_bound(G, 2, F=F)
    elif thm == "prop33":
        if not args.graph2:
            raise UsageError("prop33 needs --graph2 for H'")
        rep = check_mixed_bound(G, read_graph(args.graph2), args.s, F)
    elif thm in ("lem31", "lem32"):
        rep = check_packing_deletion_lemmas(G, args.W or [], args.A or [],
                                            "lemma31" if thm == "lem31" else "lemma32")
    elif thm == "lem41":
        if not args.edge:
            raise UsageError("lem41 needs --edge U V")
        ok = check_colon_identity(G, tuple(args.edge), args.s)
        print(f"lem41 n={G.n} edge={args.edge[0]}-{args.edge[1]} k={args.s} "
              f"verdict={'holds' if ok else 'violated'}")
        return EXIT_OK if ok else EXIT_VIOLATION
    elif thm == "forest":
        ok = check_forest_power_coincidence(G, args.s)
        print(f"forest n={G.n} s={args.s} verdict={'holds' if ok else 'violated'}")
        return EXIT_OK if ok else EXIT_VIOLATION
    else:
        raise UsageError(f"unknown theorem {thm}")
    print(report_line(rep))
    return EXIT_VIOLATION if rep.failed else EXIT_OK


def cmd_experiment(args) -> int:
    try:
        cfg = ExperimentConfig.load(args.config)
    except OSError as exc:
        raise UsageError(f"cannot read {args.config}: {exc.strerror}") from None
    except (ConfigError, TypeError) as exc:
        raise UsageError(f"{args.config}: {exc}") from None
    if args.jobs:
        cfg.jobs = args.jobs
    result = run_campaign(cfg)
    write_outputs(result)
    print(json.dumps(result.summary(), sort_keys=True))
    if result.reproducer:
        print(f"reproducer: {result.reproducer}")
    return result.exit_code


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="edgedepth",
                description="Depth of symbolic powers of edge ideals and star packing bounds.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("alpha2", help="star packing number with a witness")
    a.add_argument("graph")
    a.set_defaults(func=cmd_alpha2)

    for name, func, help_ in (("depth", cmd_depth, "exact depth of S/I"),
                              ("betti", cmd_betti, "multigraded Betti table of S/I as JSON")):
        d = sub.add_parser(name, help=help_)
        src = d.add_mutually_exclusive_group(required=True)
        src.add_argument("--ideal", help="ideal file")
        src.add_argument("--graph", help="graph file; the edge ideal unless --power/--symbolic")
        d.add_argument("--power", type=int, help="ordinary power s")
        d.add_argument("--symbolic", type=int, help="symbolic power s")
        d.add_argument("--char", type=int, default=0, help="field characteristic (0 or prime)")
        d.set_defaults(func=func)

    e = sub.add_parser("edge-ideal", help="print I(G)")
    e.add_argument("graph")
    e.set_defaults(func=cmd_edge_ideal)

    sp = sub.add_parser("symbolic-power", help="print I(G)^(s)")
    sp.add_argument("graph")
    sp.add_argument("-s", type=int, required=True)
    sp.set_defaults(func=cmd_symbolic_power)

    c = sub.add_parser("covers", help="minimal vertex covers")
    c.add_argument("graph")
    c.set_defaults(func=cmd_covers)

    ch = sub.add_parser("chordal", help="chordality test with a witness")
    ch.add_argument("graph")
    ch.set_defaults(func=cmd_chordal)

    v = sub.add_parser("verify", help="check one theorem on one instance")
    v.add_argument("--theorem", required=True,
                   choices=["cor22", "thm34", "thm42", "lem41", "prop33", "lem31", "lem32",
                            "forest"])
    v.add_argument("--graph", required=True)
    v.add_argument("--graph2", help="H' for prop33 (--graph is H)")
    v.add_argument("-s", type=int, help="power s (or k for lem41)")
    v.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
    v.add_argument("--W", type=int, nargs="*", help="W for the lemmas (lem32: first is x1)")
    v.add_argument("--A", type=int, nargs="*", help="deleted set A for the lemmas")
    v.add_argument("--char", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("experiment", help="run a campaign from a JSON config")
    x.add_argument("--config", required=True)
    x.add_argument("--jobs", type=int, help="worker processes (overrides the config)")
    x.set_defaults(func=cmd_experiment)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return args.func(args)
    except UsageError as exc:
        print(f"edgedepth: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (HypothesisError, GraphError, GeneratorCapExceeded, DimensionError) as exc:
        print(f"edgedepth: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"edgedepth: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
