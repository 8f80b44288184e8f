"""Weighted dual graph of the exceptional curves and its text exports."""

from __future__ import annotations

import json
from dataclasses import dataclass

from .proximity import ProximityMatrix, invert_proximity


@dataclass(frozen=True)
class DualGraph:
    weights: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    multiplicities: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.weights)

    def degree(self, v: int) -> int:
        return sum(v in e for e in self.edges)

    def neighbours(self, v: int) -> list[int]:
        return sorted(j if i == v else i for i, j in self.edges if v in (i, j))


def build_dual_graph(matrix: ProximityMatrix) -> DualGraph:
    n = matrix.n
    last_proximate = []
    for i in range(1, n + 1):
        later = [nu for nu in range(i + 1, n + 1) if matrix.entry(nu, i) == -1]
        last_proximate.append(max(later, default=i))
    weights = tuple(1 + k - i for i, k in enumerate(last_proximate, 1))
    edges = tuple((i, k) for i, k in enumerate(last_proximate, 1) if k != i)
    a = invert_proximity(matrix)[-1]
    return DualGraph(weights=weights, edges=edges, multiplicities=tuple(a))


def stars_and_ends(graph: DualGraph) -> tuple[list[int], list[int]]:
    vertices = range(1, graph.n + 1)
    stars = [v for v in vertices if graph.degree(v) >= 3]
    ends = [v for v in vertices if graph.degree(v) <= 1]
    return stars, ends


def _label(graph: DualGraph, v: int) -> str:
    return f"e{v} (w={graph.weights[v - 1]}, a={graph.multiplicities[v - 1]})"


def to_dot(graph: DualGraph) -> str:
    lines = ["graph dual {", "  node [shape=circle];"]
    for v in range(1, graph.n + 1):
        lines.append(f'  {v} [label="{_label(graph, v)}"];')
    for i, j in sorted(graph.edges):
        lines.append(f"  {i} -- {j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_ascii(graph: DualGraph) -> str:
    out = []
    for v in range(1, graph.n + 1):
        nbrs = ", ".join(f"e{u}" for u in graph.neighbours(v)) or "-"
        out.append(f"{_label(graph, v)}: {nbrs}")
    return "\n".join(out) + "\n"


def to_json(graph: DualGraph) -> str:
    stars, ends = stars_and_ends(graph)
    payload = {
        "n": graph.n,
        "weights": list(graph.weights),
        "multiplicities": list(graph.multiplicities),
        "edges": [list(e) for e in sorted(graph.edges)],
        "stars": stars,
        "ends": ends,
    }
    return json.dumps(payload, sort_keys=True) + "\n"
