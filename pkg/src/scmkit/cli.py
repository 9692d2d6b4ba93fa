"""Command line entry point: ``scmkit <subcommand> graph.json [options]``.

Exit codes: 0 success, 1 graph failed validation, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__
from .cycles import Cycle, arithmetic_genus, canonical_cycle, fundamental_cycle, is_rational
from .gen import brute_force_fundamental_cycle, paper_family, random_tree, rationalize_tree
from .graph import DualGraph, GraphError, parse_graph, validate
from .recon import ext_table, reconstruction_quiver, relations_report
from .stable import (
    ar_sequence,
    classify_projectives,
    cluster_tilting,
    dynkin_classify,
    gorenstein_partners,
    minus_two_subgraph,
    stable_ar_quiver,
)
from .syzygy import (
    MalformedModuleClass,
    ModuleClass,
    decomposition_json,
    min_generators,
    syzygy_decomposition,
    syzygy_rank,
)

GRAPH_COMMANDS = (
    "validate", "zf", "zk", "genus", "quiver", "ext", "relations", "projectives",
    "stable", "dynkin", "ar", "partners", "tilt", "syzygy", "gens", "oracle",
)
DOT_COMMANDS = ("quiver", "stable")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    inputs: list[Path] = field(default_factory=list)
    format: str = "json"
    rank: int | None = None
    chern: list[int] | None = None
    n: int | None = None
    m: int | None = None
    seed: int = 0
    bound: int | None = None
    vertex: str | None = None
    all_dir: Path | None = None
    out_dir: Path | None = None


def _module_class(graph: DualGraph, cfg: RunConfig) -> ModuleClass:
    if cfg.rank is None and cfg.chern is None:
        return ModuleClass.omega(graph)
    if cfg.rank is None or cfg.chern is None:
        raise UsageError("--rank and --chern must be given together")
    try:
        return ModuleClass(cfg.rank, tuple(cfg.chern))
    except MalformedModuleClass as exc:
        raise UsageError(str(exc)) from None


def _zf(graph):
    return Cycle.zero(graph) if len(graph) == 0 else fundamental_cycle(graph)


def compute(graph: DualGraph, cfg: RunConfig):
    """Result object for a graph subcommand; has ``to_json`` or is plain JSON data."""
    cmd = cfg.subcommand
    if cmd == "zf":
        return _zf(graph)
    if cmd == "zk":
        return canonical_cycle(graph)
    if cmd == "genus":
        return {"vertices": list(graph.ids), "p_a_fundamental": str(arithmetic_genus(graph, _zf(graph))),
                "rational": is_rational(graph)}
    if cmd == "quiver":
        return reconstruction_quiver(graph)
    if cmd == "ext":
        return ext_table(graph)
    if cmd == "relations":
        return relations_report(graph)
    if cmd == "projectives":
        return classify_projectives(graph)
    if cmd == "stable":
        return stable_ar_quiver(graph)
    if cmd == "dynkin":
        return [c.to_json() for c in dynkin_classify(minus_two_subgraph(graph))]
    if cmd == "ar":
        targets = [cfg.vertex] if cfg.vertex else list(graph.ids)
        try:
            return [ar_sequence(graph, v).to_json() for v in targets]
        except KeyError as exc:
            raise UsageError(str(exc)) from None
    if cmd == "partners":
        return gorenstein_partners(graph)
    if cmd == "tilt":
        if cfg.n is None or cfg.n < 1:
            raise UsageError("tilt needs --n >= 1")
        return cluster_tilting(graph, cfg.n)
    if cmd == "syzygy":
        m = _module_class(graph, cfg)
        try:
            return {"vertices": list(graph.ids), "rank": m.rank, "chern": list(m.chern),
                    "syzygy_rank": syzygy_rank(graph, m),
                    "decomposition": decomposition_json(syzygy_decomposition(graph, m)),
                    "note": "Omega M_i is isomorphic to the dual M_i^*"}
        except MalformedModuleClass as exc:
            raise UsageError(str(exc)) from None
    if cmd == "gens":
        m = _module_class(graph, cfg)
        try:
            return {"vertices": list(graph.ids), "rank": m.rank, "chern": list(m.chern),
                    "min_generators": min_generators(graph, m)}
        except MalformedModuleClass as exc:
            raise UsageError(str(exc)) from None
    if cmd == "oracle":
        if len(graph) == 0:
            return {}
        try:
            return brute_force_fundamental_cycle(graph, cfg.bound)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    raise UsageError(f"unknown subcommand {cmd!r}")


def _as_json(result):
    return result.to_json() if hasattr(result, "to_json") else result


def _text(data, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(data, list):
        if all(not isinstance(x, (dict, list)) for x in data):
            return pad + ", ".join(map(str, data))
        return ("\n" + pad + "-\n").join(_text(x, indent) for x in data)
    return f"{pad}{data}"


def render(result, fmt: str, subcommand: str) -> str:
    if fmt == "dot":
        if subcommand not in DOT_COMMANDS:
            raise UsageError(f"--format dot is only available for {', '.join(DOT_COMMANDS)}")
        return result.to_dot()
    data = _as_json(result)
    if fmt == "text":
        return _text(data) + "\n"
    return json.dumps(data, indent=2) + "\n"


def load_graph(path: Path) -> DualGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except GraphError as exc:
        raise UsageError(f"{path}: {exc}") from None


def run_one(path: Path, cfg: RunConfig) -> tuple[int, str]:
    """Process a single graph file; returns (exit code, emitted text)."""
    graph = load_graph(path)
    report = validate(graph)
    if cfg.subcommand == "validate":
        return (0 if report.passed else 1), render(report, cfg.format, "validate")
    if not report.passed:
        return 1, json.dumps(report.to_json(), indent=2) + "\n"
    return 0, render(compute(graph, cfg), cfg.format, cfg.subcommand)


def run_generator(cfg: RunConfig) -> tuple[int, str]:
    if cfg.subcommand == "generate":
        if cfg.n is None or cfg.n < 1:
            raise UsageError("generate needs --n >= 1")
        graph = rationalize_tree(random_tree(cfg.n, cfg.seed))
    else:
        if cfg.m is None or cfg.m < 1:
            raise UsageError("family needs m >= 1")
        graph = paper_family(cfg.m)
    return 0, json.dumps(graph.to_json(), indent=2) + "\n"


def run(cfg: RunConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        if cfg.subcommand in ("generate", "family"):
            code, text = run_generator(cfg)
            out.write(text)
            return code
        if cfg.format == "dot" and cfg.subcommand not in DOT_COMMANDS:
            raise UsageError(f"--format dot is only available for {', '.join(DOT_COMMANDS)}")
        if cfg.all_dir is not None:
            return run_batch(cfg, out)
        if len(cfg.inputs) != 1:
            raise UsageError("exactly one input file is required (or --all DIR)")
        code, text = run_one(cfg.inputs[0], cfg)
        out.write(text)
        return code
    except UsageError as exc:
        print(f"scmkit: error: {exc}", file=sys.stderr)
        return 2


def _suffix(cfg: RunConfig) -> str:
    return {"json": ".json", "dot": ".dot", "text": ".txt"}[cfg.format]


def run_batch(cfg: RunConfig, out) -> int:
    """Apply the subcommand to every ``*.json`` in a directory.

    With ``--out`` each result is written to ``OUT/<stem>.<subcommand><ext>``;
    otherwise results go to stdout, each preceded by a ``# <name>`` line.
    """
    files = sorted(Path(cfg.all_dir).glob("*.json"))
    worst = 0
    if cfg.out_dir is not None:
        Path(cfg.out_dir).mkdir(parents=True, exist_ok=True)
    for path in files:
        try:
            code, text = run_one(path, cfg)
        except UsageError as exc:
            code, text = 2, f"error: {exc}\n"
        worst = max(worst, code)
        if cfg.out_dir is not None:
            (Path(cfg.out_dir) / f"{path.stem}.{cfg.subcommand}{_suffix(cfg)}").write_text(text)
        else:
            out.write(f"# {path.name}\n{text}")
    return worst


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scmkit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"scmkit {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    helps = {
        "validate": "run all input checks", "zf": "fundamental cycle", "zk": "canonical cycle",
        "genus": "arithmetic genus of the fundamental cycle", "quiver": "reconstruction algebra quiver",
        "ext": "Ext dimensions between simples", "relations": "relation counts and global dimension",
        "projectives": "relatively projective specials", "stable": "AR quiver of the stable category",
        "dynkin": "ADE components of the (-2)-subgraph", "ar": "AR sequences",
        "partners": "Gorenstein partner types", "tilt": "n-cluster tilting decision",
        "syzygy": "first syzygy decomposition", "gens": "minimal number of generators",
        "oracle": "brute-force fundamental cycle",
    }
    for name in GRAPH_COMMANDS:
        p = sub.add_parser(name, help=helps[name])
        p.add_argument("input", nargs="?", type=Path)
        p.add_argument("--all", dest="all_dir", type=Path, metavar="DIR", help="process every *.json in DIR")
        p.add_argument("--out", dest="out_dir", type=Path, metavar="DIR", help="batch output directory")
        p.add_argument("--format", choices=("json", "dot", "text"), default="json")
        if name == "tilt":
            p.add_argument("--n", type=int, required=True)
        if name in ("syzygy", "gens"):
            p.add_argument("--rank", type=int)
            p.add_argument("--chern", type=_int_list)
        if name == "oracle":
            p.add_argument("--bound", type=int)
        if name == "ar":
            p.add_argument("--vertex")

    p = sub.add_parser("generate", help="random rational tree")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = sub.add_parser("family", help="the repeated-block rational tree with m blocks")
    p.add_argument("m", type=int)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(args.subcommand)
    for key in ("format", "rank", "chern", "n", "m", "seed", "bound", "vertex", "all_dir", "out_dir"):
        if getattr(args, key, None) is not None:
            setattr(cfg, key, getattr(args, key))
    if getattr(args, "input", None) is not None:
        cfg.inputs = [args.input]
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return run(config_from_args(args))


if __name__ == "__main__":
    sys.exit(main())
