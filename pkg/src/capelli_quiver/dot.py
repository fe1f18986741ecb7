"""Graphviz DOT rendering of a window.

One node per degree labelled ``T_p (dim)``, an ``f`` arrow and a ``Δ`` arrow
per edge, non-forced edges drawn bold. Render with e.g.::

    dot -Tpng window.dot -o window.png
"""

from __future__ import annotations

from .window import GradedWindow, nonforced_roots


def window_to_dot(w: GradedWindow, name: str = "window") -> str:
    bold = set(nonforced_roots(w.spec, w.p_min))
    lines = [f"digraph {name} {{", "  rankdir=LR;", "  node [shape=box];"]
    for p, dim in zip(w.degrees, w.dims):
        lines.append(f'  "T_{p}" [label="T_{p} ({dim})"];')
    for i in range(len(w.dims) - 1):
        p, q = w.edge(i)
        style = ", style=bold" if p in bold else ""
        lines.append(f'  "T_{p}" -> "T_{q}" [label="f"{style}];')
        lines.append(f'  "T_{q}" -> "T_{p}" [label="Δ"{style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"
