"""Artifact serialization: canonical JSON plus fixed-column CSV mirrors.

JSON is the source of truth.  Every artifact opens with a config echo; the
CSV mirrors repeat it in a leading comment line and keep their columns
frozen so downstream tables never shift.  Identical artifact dicts must
serialize to identical bytes, so everything is sorted and separators are
pinned.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from typing import Optional

from .errors import ValidationError

GRAPH_CSV_COLUMNS = ("u", "v", "label")
CYCLES_CSV_COLUMNS = ("id", "length", "value", "vertices")
PACKING_CSV_COLUMNS = ("load", "id", "length", "vertices")
HITTING_CSV_COLUMNS = ("vertex",)
DUALITY_CSV_COLUMNS = ("family_size", "tau", "load", "nu")
SUITE_CSV_COLUMNS = ("suite", "checked", "passed", "violations")


def canonical_json(data) -> str:
    return json.dumps(data, sort_keys=True, indent=2,
                      separators=(",", ": ")) + "\n"


def one_line_json(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def read_json(path: Optional[str]):
    """Parse JSON from a file, or from stdin when path is None or "-"."""
    try:
        if path is None or path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"input is not valid JSON: {exc}") from exc
    except OSError as exc:
        raise ValidationError(f"cannot read input: {exc}") from exc


def write_text(path: Optional[str], text: str) -> None:
    """Write to a file, or to stdout when path is None or "-"."""
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ValidationError(f"cannot write output: {exc}") from exc


def _cell(value) -> str:
    if isinstance(value, (list, tuple)):
        return one_line_json(list(value))
    return str(value)


def _csv(config: dict, columns: tuple, rows: list) -> str:
    out = io.StringIO()
    out.write("# config: " + one_line_json(config) + "\n")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(x) for x in row])
    return out.getvalue()


def graph_csv(artifact: dict) -> str:
    rows = [(rec["u"], rec["v"], rec["label"])
            for rec in artifact["labelledGraph"]["edges"]]
    return _csv(artifact["config"], GRAPH_CSV_COLUMNS, rows)


def cycles_csv(artifact: dict) -> str:
    fam = artifact["cycles"]
    rows = [(i, len(c), val, c)
            for i, (c, val) in enumerate(zip(fam["cycles"], fam["values"]))]
    return _csv(artifact["config"], CYCLES_CSV_COLUMNS, rows)


def packing_csv(artifact: dict) -> str:
    pack = artifact["packing"]
    rows = [(pack["load"], cid, len(c), c)
            for cid, c in zip(pack["chosen"], pack["cycles"])]
    return _csv(artifact["config"], PACKING_CSV_COLUMNS, rows)


def hitting_csv(artifact: dict) -> str:
    rows = [(v,) for v in artifact["hitting"]["vertices"]]
    return _csv(artifact["config"], HITTING_CSV_COLUMNS, rows)


def duality_csv(artifact: dict) -> str:
    rep = artifact["report"]
    rows = [(rep["family_size"], rep["tau"], load, nu)
            for load, nu in sorted(rep["nu"].items(), key=lambda kv: int(kv[0]))]
    return _csv(artifact["config"], DUALITY_CSV_COLUMNS, rows)


def suite_csv(artifact: dict) -> str:
    res = artifact["result"]
    rows = [(res["suite"], res["checked"], res["passed"],
             len(res["violations"]))]
    return _csv(artifact["config"], SUITE_CSV_COLUMNS, rows)


CSV_RENDERERS = {
    "gen": graph_csv,
    "cycles": cycles_csv,
    "pack": packing_csv,
    "hit": hitting_csv,
    "duality": duality_csv,
    "verify": suite_csv,
}


def render(artifact: dict, fmt: str) -> str:
    if fmt == "json":
        return canonical_json(artifact)
    if fmt == "csv":
        command = artifact["config"]["command"]
        try:
            return CSV_RENDERERS[command](artifact)
        except KeyError as exc:
            raise ValidationError(f"no CSV mirror for {command!r}") from exc
    raise ValidationError(f"unknown format {fmt!r}")
