"""Windowed Cayley graphs of the degree-3 group and its dihedral subgroup.

Vertices are canonical forms of word length at most the window radius; edges
come from right multiplication by a generator, kept when both endpoints stay
in the window.  Every generator is an involution, so each edge pair collapses
to one undirected edge, stored with endpoints in sorted order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .degree3 import CanonicalForm, canonicalize, mul
from .words import Generator, PresentationSpec, Word

GROUP_FULL = "J3"
GROUP_DIHEDRAL = "J3_2"

_GENERATORS = {
    GROUP_FULL: PresentationSpec(3, "full").generators(),
    GROUP_DIHEDRAL: PresentationSpec(3, frozenset({2})).generators(),
}

Edge = tuple[CanonicalForm, CanonicalForm, Generator]


@dataclass(frozen=True)
class CayleyGraph:
    group: str
    radius: int
    vertices: tuple[CanonicalForm, ...]
    edges: tuple[Edge, ...]

    def degree_of(self, v: CanonicalForm) -> int:
        return sum(v in (src, dst) for src, dst, _ in self.edges)


def _window_vertices(group: str, radius: int) -> list[CanonicalForm]:
    out = [CanonicalForm(m, 0) for m in range(-radius, radius + 1)]
    if group == GROUP_FULL:
        out += [CanonicalForm(m, 1) for m in range(-(radius - 1), radius)]
    return sorted(out)


def build_window(group: str, radius: int) -> CayleyGraph:
    """All elements of word length <= radius with generator-labeled edges."""
    if group not in _GENERATORS:
        raise ValueError(f"unknown group tag {group!r}; expected J3 or J3_2")
    if radius < 0:
        raise ValueError(f"radius must be nonnegative, got {radius}")
    vertices = _window_vertices(group, radius)
    in_window = set(vertices)
    gen_forms = [(g, canonicalize(Word(3, (g,)))) for g in _GENERATORS[group]]
    edges = []
    for v in vertices:
        for g, gf in gen_forms:
            w = mul(v, gf)
            if w in in_window and v < w:
                edges.append((v, w, g))
    edges.sort(key=lambda e: (e[0], e[1], str(e[2])))
    return CayleyGraph(group, radius, tuple(vertices), tuple(edges))


def export_json(g: CayleyGraph) -> str:
    index = {v: i for i, v in enumerate(g.vertices)}
    payload = {
        "group": g.group,
        "radius": g.radius,
        "nodes": [
            {"id": i, "m": v.m, "eps": v.eps, "label": str(v)}
            for i, v in enumerate(g.vertices)
        ],
        "edges": [
            {"src": index[src], "dst": index[dst], "gen": str(gen)}
            for src, dst, gen in g.edges
        ],
    }
    return json.dumps(payload, indent=2) + "\n"


def export_dot(g: CayleyGraph) -> str:
    lines = [f'graph "{g.group}" {{']
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for src, dst, gen in g.edges:
        lines.append(f'  "{src}" -- "{dst}" [label="{gen}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
