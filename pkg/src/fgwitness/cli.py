"""Command-line front end: ``fgwitness witness|analyze|member|export-dot``.

Exit codes: 0 success (witness found, trivial subgroup, queries), 2 when
``H`` has finite index and no witness is searched for, 1 on any error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import FreeGroupError
from .normal_core import DEFAULT_CAP
from .stallings import INFINITE, build_core, index_or_infinite, to_dot
from .witness import DEFAULT_MAX_WITNESS_LENGTH, PipelineConfig, Status, build_context, run_pipeline
from .words import parse_word

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FINITE_INDEX = 2

TARGETS = ("H", "K", "I", "L", "N")


@dataclass(frozen=True)
class CliConfig:
    rank: int = 2
    max_cosets: int = DEFAULT_CAP
    verify_depth_disjoint: int = 6
    verify_depth_normal: int = 4
    max_witness_length: int = DEFAULT_MAX_WITNESS_LENGTH
    output_mode: str = "text"
    dot_path: Optional[str] = None

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("--rank must be >= 1")
        if self.max_cosets < 1:
            raise ValueError("--max-cosets must be >= 1")
        if self.verify_depth_disjoint < 0 or self.verify_depth_normal < 0:
            raise ValueError("verification depths must be >= 0")
        if self.max_witness_length < 1:
            raise ValueError("--max-witness-length must be >= 1")

    def pipeline(self):
        return PipelineConfig(
            max_cosets=self.max_cosets,
            verify_depth_disjoint=self.verify_depth_disjoint,
            verify_depth_normal=self.verify_depth_normal,
            max_witness_length=self.max_witness_length,
        )


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # exit code 2 is reserved for the finite-index verdict
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _common(p, generators=True):
    p.add_argument("--rank", type=int, default=2, help="rank of the ambient free group")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_CAP)
    if generators:
        p.add_argument("generators", nargs="*", help="generators of H, e.g. aa ab")


def build_parser():
    parser = _Parser(prog="fgwitness", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("witness", help="run the full construction and verify it")
    _common(p)
    p.add_argument("--depth-disjoint", type=int, default=6)
    p.add_argument("--depth-normal", type=int, default=4)
    p.add_argument(
        "--max-witness-length",
        type=int,
        default=DEFAULT_MAX_WITNESS_LENGTH,
        help="fail instead of building a longer commutator (it roughly doubles per coset)",
    )
    p.add_argument("--dot", dest="dot_path", help="also write the core graph of H as DOT")

    p = sub.add_parser("analyze", help="Stallings statistics of H")
    _common(p)

    p = sub.add_parser("member", help="membership of a word in H, K, I, L, N")
    _common(p, generators=False)
    p.add_argument("--in", dest="targets", action="append", choices=TARGETS)
    p.add_argument("-g", "--gen", dest="generators", action="append", default=[])
    p.add_argument("word")

    p = sub.add_parser("export-dot", help="write a graph as Graphviz DOT")
    _common(p)
    p.add_argument("--graph", choices=("H", "K", "I"), default="H")
    p.add_argument("--out", help="output path (stdout if omitted)")
    return parser


def _config(args):
    return CliConfig(
        rank=args.rank,
        max_cosets=args.max_cosets,
        verify_depth_disjoint=getattr(args, "depth_disjoint", 6),
        verify_depth_normal=getattr(args, "depth_normal", 4),
        max_witness_length=getattr(args, "max_witness_length", DEFAULT_MAX_WITNESS_LENGTH),
        output_mode="json" if args.json else "text",
        dot_path=getattr(args, "dot_path", None),
    )


def _dump(obj, out):
    out.write(json.dumps(obj, indent=2) + "\n")


def _write_dot(graph, path):
    try:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(to_dot(graph))
    except OSError as exc:
        raise FreeGroupError(f"cannot write {path}: {exc}") from exc


def render_text(d):
    lines = [f"status: {d['status']}", f"rank: {d['rank']}"]
    lines.append("H generators: " + (", ".join(w or "ε" for w in d["hGenerators"]) or "(none)"))
    lines.append(f"rank(H): {d['hRank']}    [F:H]: {d['hIndex']}")
    lines.append(f"[F:K]: {d['kIndex']}")
    if d["status"] != Status.FINITE_INDEX.value:
        lines.append("Q basis: " + ", ".join(d["qBasis"]))
        lines.append(f"[F:I]: {d['iIndex']}")
        lines.append("coset reps: " + ", ".join(w or "ε" for w in d["cosetReps"]))
        lines.append("I∩H basis: " + ", ".join(d["basisIH"]))
        lines.append("J basis: " + ", ".join(d["basisJ"]))
        lines.append(f"witness: {d['witness']}")
    v = d.get("verification")
    if v:
        for suite, ok in v["passed"].items():
            lines.append(f"  {suite}: {'pass' if ok else 'FAIL'} ({v['counts'][suite]} checks)")
    return "\n".join(lines) + "\n"


def command_witness(args, out):
    cfg = _config(args)
    gens = [parse_word(t, cfg.rank) for t in args.generators]
    report = run_pipeline(gens, cfg.rank, cfg.pipeline())
    if cfg.dot_path:
        _write_dot(build_core(gens, cfg.rank), cfg.dot_path)
    d = report.to_json_dict()
    if cfg.output_mode == "json":
        _dump(d, out)
    else:
        out.write(render_text(d))
    return EXIT_FINITE_INDEX if report.status is Status.FINITE_INDEX else EXIT_OK


def command_analyze(args, out):
    cfg = _config(args)
    core = build_core([parse_word(t, cfg.rank) for t in args.generators], cfg.rank)
    index = index_or_infinite(core)
    d = {
        "rank": cfg.rank,
        "vertices": core.n,
        "edges": core.edge_count,
        "subgroupRank": core.subgroup_rank,
        "index": "infinite" if index == INFINITE else index,
    }
    if cfg.output_mode == "json":
        _dump(d, out)
    else:
        out.write("".join(f"{k}: {v}\n" for k, v in d.items()))
    return EXIT_OK


def membership_verdicts(generators, rank, word, targets, max_cosets=DEFAULT_CAP):
    """Dict target -> bool for ``word`` against the subgroups built from ``generators``."""
    core = build_core(generators, rank)
    finite = core.edge_count > 0 and index_or_infinite(core) != INFINITE
    ctx = None
    if set(targets) - {"H"}:
        ctx = build_context(core, generators, rank, max_cosets)
    verdicts = {}
    for t in targets:
        if t == "H":
            verdicts[t] = core.read(word) == 0
        elif t == "K":
            verdicts[t] = ctx.in_k(word)
        elif t == "I":
            verdicts[t] = ctx.in_i(word)
        elif finite:
            raise FreeGroupError(f"{t} is undefined: H has finite index {core.n}")
        elif t == "L":
            verdicts[t] = ctx.in_l(word)
        else:
            verdicts[t] = ctx.in_n(word)
    return verdicts


def command_member(args, out):
    cfg = _config(args)
    gens = [parse_word(t, cfg.rank) for t in args.generators]
    word = parse_word(args.word, cfg.rank)
    targets = args.targets or list(TARGETS)
    verdicts = membership_verdicts(gens, cfg.rank, word, targets, cfg.max_cosets)
    if cfg.output_mode == "json":
        _dump({"word": str(word), **verdicts}, out)
    else:
        out.write("".join(f"{t}: {'true' if v else 'false'}\n" for t, v in verdicts.items()))
    return EXIT_OK


def command_export_dot(args, out):
    cfg = _config(args)
    gens = [parse_word(t, cfg.rank) for t in args.generators]
    core = build_core(gens, cfg.rank)
    if args.graph == "H":
        graph = core
    else:
        ctx = build_context(core, gens, cfg.rank, cfg.max_cosets)
        graph = ctx.hall.cover if args.graph == "K" else ctx.cover_i
    if args.out:
        _write_dot(graph, args.out)
    else:
        out.write(to_dot(graph))
    return EXIT_OK


COMMANDS = {
    "witness": command_witness,
    "analyze": command_analyze,
    "member": command_member,
    "export-dot": command_export_dot,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (FreeGroupError, ValueError) as exc:
        print(f"fgwitness: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
