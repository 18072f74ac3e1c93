"""Text renderings of graded modules and of the Schubert complex."""

from __future__ import annotations

import csv
import io
import json
from typing import Iterator

from .combinatorics import enumerate_subsets, check_size, dim
from .complex import boundary
from .modules import CoefficientRing, GradedModule, GroupEntry


def module_to_dict(n: int, k: int, module: GradedModule) -> dict:
    return {
        "n": n,
        "k": k,
        "coefficients": str(module.ring),
        "groups": [
            {"degree": g.degree, "free_rank": g.free_rank, "torsion": list(g.torsion)}
            for g in module.groups
        ],
    }


def module_to_json(n: int, k: int, module: GradedModule) -> str:
    return json.dumps(module_to_dict(n, k, module), indent=None, separators=(",", ":"))


def module_from_json(text: str) -> tuple[int, int, GradedModule]:
    data = json.loads(text)
    ring = CoefficientRing.parse(data["coefficients"])
    groups = tuple(GroupEntry(int(g["degree"]), int(g["free_rank"]),
                              tuple(int(t) for t in g["torsion"]))
                   for g in data["groups"])
    return int(data["n"]), int(data["k"]), GradedModule(ring, groups)


def _columns(module: GradedModule) -> list[int]:
    return module.torsion_orders()


def module_rows(module: GradedModule) -> Iterator[list[int]]:
    """``[degree, free_rank, count of Z/d for each torsion order d]`` per degree."""
    orders = _columns(module)
    for g in module.groups:
        yield [g.degree, g.free_rank, *(g.torsion.count(d) for d in orders)]


def module_to_csv(module: GradedModule) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["degree", "free_rank", *(f"torsion_{d}" for d in _columns(module))])
    writer.writerows(module_rows(module))
    return buf.getvalue()


def module_to_table(n: int, k: int, module: GradedModule) -> str:
    """Aligned text table: one row per degree, counting summands of each type."""
    orders = _columns(module)
    if module.ring.name == "Z" and not orders:
        orders = [2]
    header = [f"Gr_{k}({n})", str(module.ring), *(f"Z/{d}" for d in orders)]
    body = [[f"H^{g.degree}", str(g.free_rank), *(str(g.torsion.count(d)) for d in orders)]
            for g in module.groups]
    widths = [max(len(row[i]) for row in [header, *body]) for i in range(len(header))]
    lines = []
    for row in [header, *body]:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def parse_table(text: str) -> list[list[int]]:
    """Inverse of :func:`module_to_table` on the numeric columns."""
    rows = []
    for line in text.strip().splitlines()[1:]:
        parts = line.split()
        rows.append([int(parts[0].removeprefix("H^")), *map(int, parts[1:])])
    return rows


def complex_edges(n: int, k: int) -> list[dict]:
    """Nonzero cochain coefficients, in basis order of the source cell."""
    check_size(n, k)
    return [
        {"source": c.source.label(), "target": c.target.label(), "r": c.r, "value": c.value}
        for S in enumerate_subsets(n, k)
        for c in boundary(S)
    ]


def complex_to_json(n: int, k: int) -> str:
    cells = [{"id": S.label(), "degree": dim(S)} for S in enumerate_subsets(n, k)]
    payload = {"n": n, "k": k, "direction": "cohomological",
               "cells": cells, "edges": complex_edges(n, k)}
    return json.dumps(payload, indent=1)


def complex_to_csv(n: int, k: int) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, ["source", "target", "r", "value"], lineterminator="\n")
    writer.writeheader()
    writer.writerows(complex_edges(n, k))
    return buf.getvalue()


EDGE_STYLE = {
    2: 'color=red, style=solid',
    -2: 'color=blue, style=dotted',
}


def complex_to_dot(n: int, k: int) -> str:
    """Graphviz digraph: cells as nodes, one edge per ±2 coefficient."""
    cells = enumerate_subsets(n, k)
    by_degree: dict[int, list] = {}
    for S in cells:
        by_degree.setdefault(dim(S), []).append(S)
    lines = [f'digraph "Gr_{k}({n})" {{', "  rankdir=LR;", "  node [shape=plaintext];"]
    for m in sorted(by_degree):
        members = by_degree[m]
        lines.append(f"  subgraph deg{m} {{")
        lines.append("    rank=same;")
        for S in members:
            label = "".join(map(str, S.elements)) if n <= 9 and S.k else S.label()
            lines.append(f'    "{S.label()}" [label="{label}"];')
        lines.append("  }")
    for e in complex_edges(n, k):
        sign = "+2" if e["value"] > 0 else "-2"
        lines.append(f'  "{e["source"]}" -> "{e["target"]}" '
                     f'[label="{sign}", {EDGE_STYLE[e["value"]]}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
