"""Graphviz DOT text for quivers, translation quivers and presentations."""

import json

from .linalg import fraction_str
from .presentation import Presentation
from .quiver import Quiver
from .translation import TranslationQuiver


def _q(s):
    return json.dumps(str(s), ensure_ascii=False)


def _quiver_lines(q, highlight):
    lines = []
    for v in q.vertices:
        attrs = ' style=filled fillcolor="lightblue"' if v in highlight else ""
        lines.append(f"  {_q(v)} [label={_q(v)}{attrs}];")
    for a in q.arrows:
        lines.append(f"  {_q(a.source)} -> {_q(a.target)} [label={_q(a.id)}];")
    return lines


def _translation_lines(g, highlight):
    lines = []
    for p in sorted(g.points, key=lambda p: (p.level, p.id)):
        attrs = [f"label={_q(g.label(p.id))}"]
        if p.id in g.marked:
            attrs.append("shape=box")
        if p.id in g.frontier:
            attrs.append("style=dotted")
        elif p.id in highlight:
            attrs.append('style=filled fillcolor="lightblue"')
        lines.append(f"  {_q(p.id)} [{' '.join(attrs)}];")
    for s, t in sorted(g.arrows):
        lines.append(f"  {_q(s)} -> {_q(t)};")
    for s, t in sorted(g.tau):
        lines.append(f"  {_q(s)} -> {_q(t)} [style=dashed constraint=false arrowhead=none];")
    return lines


def render_dot(obj, highlight=(), name="G"):
    """Deterministic DOT text; ``highlight`` names points or vertices to fill."""
    highlight = set(highlight)
    head = [f"digraph {_q(name)} {{", "  rankdir=LR;"]
    if isinstance(obj, TranslationQuiver):
        body = _translation_lines(obj, highlight)
    elif isinstance(obj, Presentation):
        body = _quiver_lines(obj.quiver, highlight)
        for i, r in enumerate(obj.relations):
            text = " + ".join(f"{fraction_str(c)}*{'.'.join(p)}" for p, c in r)
            body.append(f"  // relation {i + 1}: {text} = 0")
    elif isinstance(obj, Quiver):
        body = _quiver_lines(obj, highlight)
    else:
        raise TypeError(f"cannot render {type(obj).__name__}")
    return "\n".join(head + body + ["}"]) + "\n"
