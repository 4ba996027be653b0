"""Batch front door: generators, solvers, verification suites, reports.

Subcommands read documented JSON from --input (or stdin) and write one
artifact to --output (or stdout), so pipelines compose:

    glcycles gen escher --height 3 | glcycles cycles | glcycles pack | glcycles hit

Every artifact embeds the resolved run config; rerunning with the same
config gives byte-identical output.  The only environment knob is
GLCYCLES_OUTDIR, which re-roots relative output paths.

Exit codes: 0 success, 2 validation error, 3 bound exceeded, 4 property
violation (including a failing verification suite, which also drops a
reproducer file next to the artifact).
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass, field
from typing import Optional

from . import serialize
from .errors import BoundExceeded, PropertyViolation, ValidationError
from .graphs import enumerate_cycles, vkey
from .groups import AvoidSets, GroupSpec
from .labelling import CycleFamily, LabelledGraph, vertex_from_json, vertex_to_json
from .obstructions import (canonical_complete_instance, escher_wall,
                           grid_obstruction, modular_grid_obstruction)
from .packing import PackingProblem, duality_report, max_packing, min_hitting_set
from .suites import SUITES, run_suite
from .walls import elementary_wall

OUTDIR_ENV = "GLCYCLES_OUTDIR"

GEN_DEFAULTS = {
    "wall": {"n": 3, "height": 3},
    "escher": {"height": 3, "path_len": 1},
    "grid3": {"n": 4},
    "modgrid": {"n": 4},
    "complete": {"c": 2, "t": 1, "max_order": 5},
}


@dataclass(frozen=True)
class RunConfig:
    command: str
    input: Optional[str] = None
    output: Optional[str] = None
    format: str = "json"
    seed: int = 0
    bounds: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"command": self.command, "input": self.input,
                "output": self.output, "format": self.format,
                "seed": self.seed, "bounds": dict(sorted(self.bounds.items()))}


def _resolve_output(path: Optional[str]) -> Optional[str]:
    if path is None or path == "-":
        return path
    outdir = os.environ.get(OUTDIR_ENV)
    if outdir and not os.path.isabs(path):
        return os.path.join(outdir, path)
    return path


def _config(args, bound_names) -> RunConfig:
    bounds = {}
    for name in bound_names:
        value = getattr(args, name, None)
        if value is not None:
            bounds[name] = value
    return RunConfig(command=args.command,
                     input=getattr(args, "input", None),
                     output=getattr(args, "output", None),
                     format=args.format,
                     seed=args.seed,
                     bounds=bounds)


def _load_labelled(data) -> LabelledGraph:
    if not isinstance(data, dict):
        raise ValidationError("input must be a JSON object")
    if "labelledGraph" in data:
        data = data["labelledGraph"]
    return LabelledGraph.from_json(data)


def _family_from_artifact(data) -> tuple[LabelledGraph, CycleFamily]:
    if not isinstance(data, dict) or "cycles" not in data:
        raise ValidationError("input artifact carries no cycle family; "
                              "run `cycles` first")
    lg = _load_labelled(data)
    fam = data["cycles"]
    try:
        cycles = tuple(tuple(vertex_from_json(v) for v in c)
                       for c in fam["cycles"])
        complete = bool(fam["complete"])
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed cycle-family JSON: {exc}") from exc
    return lg, CycleFamily(lg, cycles, complete)


# ---------------------------------------------------------------------------
# subcommands

def _cmd_gen(args) -> tuple[dict, int]:
    family = args.family
    defaults = GEN_DEFAULTS[family]
    params = {k: getattr(args, k) if getattr(args, k) is not None else v
              for k, v in defaults.items()}
    if family == "wall":
        wall = elementary_wall(params["n"], params["height"])
        spec = GroupSpec((2,))
        labels = {e: spec.zero for e in wall.graph.edges}
        lg = LabelledGraph.build(wall.graph, spec, labels,
                                 AvoidSets.make(spec, [frozenset()]))
        payload = {"family": "wall",
                   "parameters": {"columns": params["n"],
                                  "rows": params["height"]},
                   "labelledGraph": lg.to_json()}
    elif family == "escher":
        payload = escher_wall(params["height"], params["path_len"]).to_json()
    elif family == "grid3":
        payload = grid_obstruction(params["n"]).to_json()
    elif family == "modgrid":
        payload = modular_grid_obstruction(params["n"]).to_json()
    else:
        payload = canonical_complete_instance(
            params["c"], params["t"], params["max_order"]).to_json()
    config = RunConfig(command=args.command, output=args.output,
                       format=args.format, seed=args.seed, bounds=params)
    return {"config": config.to_json(), **payload}, 0


def _cmd_cycles(args) -> tuple[dict, int]:
    data = serialize.read_json(args.input)
    lg = _load_labelled(data)
    cycles, truncated = enumerate_cycles(lg.graph, max_len=args.max_len,
                                         max_count=args.max_cycles)
    if truncated:
        raise BoundExceeded(
            f"cycle enumeration hit --max-cycles {args.max_cycles}")
    chosen = tuple(c for c in cycles if lg.is_avoiding(c))
    fam = CycleFamily(lg, chosen, complete=args.max_len is None)
    config = _config(args, ("max_cycles", "max_len"))
    return {"config": config.to_json(), "labelledGraph": lg.to_json(),
            "cycles": fam.to_json()}, 0


def _cmd_pack(args) -> tuple[dict, int]:
    data = serialize.read_json(args.input)
    lg, fam = _family_from_artifact(data)
    solution = max_packing(PackingProblem(fam, args.load))
    ids = {c: i for i, c in enumerate(fam.cycles)}
    config = _config(args, ("load",))
    packing = {"load": args.load, "count": len(solution),
               "chosen": [ids[c] for c in solution.chosen],
               "cycles": [[vertex_to_json(v) for v in c]
                          for c in solution.chosen]}
    return {"config": config.to_json(), "labelledGraph": lg.to_json(),
            "cycles": data["cycles"], "packing": packing}, 0


def _cmd_hit(args) -> tuple[dict, int]:
    data = serialize.read_json(args.input)
    lg, fam = _family_from_artifact(data)
    solution = min_hitting_set(fam)
    config = _config(args, ())
    hitting = {"size": len(solution),
               "vertices": [vertex_to_json(v) for v in
                            sorted(solution.vertices, key=vkey)]}
    return {"config": config.to_json(), "labelledGraph": lg.to_json(),
            "cycles": data["cycles"], "hitting": hitting}, 0


def _cmd_duality(args) -> tuple[dict, int]:
    data = serialize.read_json(args.input)
    lg = _load_labelled(data)
    report = duality_report(lg, max_len=args.max_len,
                            max_count=args.max_cycles)
    config = _config(args, ("max_cycles", "max_len"))
    return {"config": config.to_json(), "labelledGraph": lg.to_json(),
            "report": report.to_json()}, 0


def _cmd_verify(args) -> tuple[dict, int]:
    names = ("max_order", "max_len", "max_cycles", "n", "c", "t")
    config = _config(args, names)
    result = run_suite(args.suite, {**config.bounds, "seed": args.seed})
    artifact = {"config": config.to_json(), "result": result.to_json()}
    if not result.passed:
        repro = {"suite": args.suite,
                 "bounds": {**config.bounds, "seed": args.seed},
                 "violation": result.violations[0]}
        out = _resolve_output(args.output)
        base = os.path.dirname(out) if out and out != "-" else \
            os.environ.get(OUTDIR_ENV, "")
        path = os.path.join(base, f"reproducer-{args.suite}.json")
        serialize.write_text(path, serialize.canonical_json(repro))
        print(f"suite {args.suite} failed; reproducer at {path}",
              file=sys.stderr)
        return artifact, 4
    return artifact, 0


# ---------------------------------------------------------------------------
# parser

def _common(sub, with_input=True):
    if with_input:
        sub.add_argument("--input", "-i", default=None,
                         help="input JSON path ('-' or absent: stdin)")
    sub.add_argument("--output", "-o", default=None,
                     help="output path ('-' or absent: stdout)")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="glcycles",
        description="Group-labelled graphs: generators, exact packing and "
                    "hitting solvers, and lemma-verification suites.")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="emit a labelled-graph instance")
    gen.add_argument("family", choices=sorted(GEN_DEFAULTS))
    _common(gen, with_input=False)
    gen.add_argument("--n", type=int, default=None,
                     help="size parameter (wall columns, grid side)")
    gen.add_argument("--height", type=int, default=None,
                     help="wall rows / escher side")
    gen.add_argument("--path-len", type=int, default=None, dest="path_len",
                     help="escher crossing-path length")
    gen.add_argument("--c", type=int, default=None,
                     help="complete family: packing target")
    gen.add_argument("--t", type=int, default=None,
                     help="complete family: hitting floor")
    gen.add_argument("--max-order", type=int, default=None, dest="max_order",
                     help="complete family: escape multiple d")

    cyc = commands.add_parser("cycles", help="enumerate the avoiding family")
    _common(cyc)
    cyc.add_argument("--max-cycles", type=int, default=None, dest="max_cycles")
    cyc.add_argument("--max-len", type=int, default=None, dest="max_len")

    pack = commands.add_parser("pack", help="maximum packing under a load bound")
    _common(pack)
    pack.add_argument("--load", type=int, default=2)

    hit = commands.add_parser("hit", help="minimum hitting set")
    _common(hit)

    dual = commands.add_parser("duality", help="packing and hitting report")
    _common(dual)
    dual.add_argument("--max-cycles", type=int, default=None, dest="max_cycles")
    dual.add_argument("--max-len", type=int, default=None, dest="max_len")

    ver = commands.add_parser("verify", help="run a verification suite")
    ver.add_argument("--suite", required=True, choices=sorted(SUITES))
    _common(ver, with_input=False)
    for flag, dest in (("--max-order", "max_order"), ("--max-len", "max_len"),
                       ("--max-cycles", "max_cycles")):
        ver.add_argument(flag, type=int, default=None, dest=dest)
    for flag in ("--n", "--c", "--t"):
        ver.add_argument(flag, type=int, default=None)

    return parser


DISPATCH = {
    "gen": _cmd_gen,
    "cycles": _cmd_cycles,
    "pack": _cmd_pack,
    "hit": _cmd_hit,
    "duality": _cmd_duality,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        artifact, status = DISPATCH[args.command](args)
        text = serialize.render(artifact, args.format)
        serialize.write_text(_resolve_output(args.output), text)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BoundExceeded as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return 3
    except PropertyViolation as exc:
        print(f"property violation: {exc}", file=sys.stderr)
        return 4
    return status


if __name__ == "__main__":
    sys.exit(main())
