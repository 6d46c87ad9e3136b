"""Plain-text graph format.

::

    # optional comments
    g 5
    e 0 2
    e 0 3

The ``g`` line comes first; each ``e u v`` line has ``u < v`` and the edge
lines are sorted. :func:`serialize_graph` always writes this canonical form;
:func:`parse_graph` accepts edges in any order and orientation.
"""

from __future__ import annotations

from pathlib import Path

from .errors import ParseError
from .graph import Graph, build_graph


def serialize_graph(g: Graph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"g {g.vertex_count}")
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    vertex_count = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            if fields[0] == "g" and len(fields) == 2:
                if vertex_count is not None:
                    raise ParseError(f"line {lineno}: second 'g' line")
                vertex_count = int(fields[1])
                if vertex_count < 0:
                    raise ParseError(f"line {lineno}: negative vertex count")
            elif fields[0] == "e" and len(fields) == 3:
                if vertex_count is None:
                    raise ParseError(f"line {lineno}: edge before 'g' line")
                pairs.append((int(fields[1]), int(fields[2])))
            else:
                raise ParseError(f"line {lineno}: cannot parse {line!r}")
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers in {line!r}") from None
    if vertex_count is None:
        raise ParseError("missing 'g <vertex_count>' line")
    return build_graph(vertex_count, pairs)


def read_graph(path: str | Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="ascii"))


def write_graph(g: Graph, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(serialize_graph(g, comment), encoding="ascii", newline="\n")
