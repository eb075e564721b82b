"""JSON report schema shared by every CLI command.

Top level: ``{graph: {n, edges}, results: [...], certificates: {...},
meta: {seed, budget, versions}}`` with edges as sorted ``[u, v]`` pairs.
Dumps use sorted keys so identical inputs give byte-identical files.
"""

from __future__ import annotations

import json
import platform
from typing import Any, Optional

from . import __version__
from ._kernels import BACKEND
from .graph import Graph


def graph_json(g: Graph) -> dict[str, Any]:
    return {"n": g.n, "edges": [list(e) for e in g.edges()]}


def graph_from_json(data: dict[str, Any]) -> Graph:
    return Graph.from_edges(int(data["n"]), [tuple(e) for e in data["edges"]])


def make_report(
    g: Optional[Graph],
    results: list[dict[str, Any]],
    certificates: Optional[dict[str, Any]] = None,
    seed: Optional[int] = None,
    budget: Optional[int] = None,
) -> dict[str, Any]:
    return {
        "graph": graph_json(g) if g is not None else None,
        "results": results,
        "certificates": certificates or {},
        "meta": {
            "seed": seed,
            "budget": budget,
            "versions": {
                "bchromatic": __version__,
                "kernels": BACKEND,
                "python": platform.python_version(),
            },
        },
    }


def dump_report(report: dict[str, Any]) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def write_report(report: dict[str, Any], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_report(report))
