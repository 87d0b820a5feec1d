"""Line-oriented text formats for instances and colorings.

Instance::

    c optional comment
    p hg <vertices> <edges>
    e 0 1 2
    e 2 3

Coloring::

    s <palette_size>
    v <vertex> <color>

Ids are 0-based. Blank lines and ``c`` lines are ignored in both.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .errors import DuplicateVertexInEdge, EmptyEdge, FormatError, IsolatedVertex
from .model import Coloring, Hypergraph


@dataclass(frozen=True)
class ParsedInstance:
    hypergraph: Hypergraph
    # labels[i] is the id used in the file for vertex i
    labels: tuple[int, ...]

    @property
    def remapped(self) -> bool:
        return self.labels != tuple(range(len(self.labels)))


def _ints(fields: list[str], lineno: int) -> list[int]:
    try:
        vals = [int(f) for f in fields]
    except ValueError:
        raise FormatError(f"expected integers, got {' '.join(fields)!r}", lineno) from None
    if any(x < 0 for x in vals):
        raise FormatError("negative id", lineno)
    return vals


def _split_instances(text: str) -> list[list[tuple[int, list[str]]]]:
    blocks: list[list[tuple[int, list[str]]]] = []
    current: Optional[list[tuple[int, list[str]]]] = None
    for lineno, line in enumerate(text.splitlines(), start=1):
        fields = line.split()
        if not fields or fields[0] == "c":
            continue
        if fields[0] == "p":
            current = []
            blocks.append(current)
        elif current is None:
            current = []
            blocks.append(current)
        current.append((lineno, fields))
    return blocks


def _parse_block(lines: list[tuple[int, list[str]]]) -> ParsedInstance:
    declared: Optional[tuple[int, int]] = None
    edges: list[list[int]] = []
    for lineno, fields in lines:
        tag = fields[0]
        if tag == "p":
            if declared is not None or edges:
                raise FormatError("header must come first and only once", lineno)
            if len(fields) != 4 or fields[1] != "hg":
                raise FormatError("header must read 'p hg <vertices> <edges>'", lineno)
            nv, ne = _ints(fields[2:], lineno)
            declared = (nv, ne)
        elif tag == "e":
            members = _ints(fields[1:], lineno)
            if not members:
                raise EmptyEdge(f"line {lineno}: empty edge")
            if len(set(members)) != len(members):
                raise DuplicateVertexInEdge(f"line {lineno}: vertex repeated within edge")
            edges.append(members)
        else:
            raise FormatError(f"unknown line type {tag!r}", lineno)

    labels = sorted({v for e in edges for v in e})
    if declared is not None:
        nv, ne = declared
        if ne != len(edges):
            raise FormatError(f"header declares {ne} edges, found {len(edges)}")
        if labels != list(range(nv)):
            if all(v < nv for v in labels):
                missing = next(v for v in range(nv) if v not in set(labels))
                raise IsolatedVertex(f"vertex {missing} belongs to no edge")
            if len(labels) != nv:
                raise FormatError(f"header declares {nv} vertices, found {len(labels)} distinct labels")

    index = {lab: i for i, lab in enumerate(labels)}
    H = Hypergraph(len(labels), [[index[v] for v in e] for e in edges])
    return ParsedInstance(H, tuple(labels))


def parse_instance(text: str) -> ParsedInstance:
    blocks = _split_instances(text)
    if not blocks:
        return ParsedInstance(Hypergraph(0, []), ())
    if len(blocks) > 1:
        raise FormatError("expected a single instance, found several 'p' headers")
    return _parse_block(blocks[0])


def parse(text: str) -> Hypergraph:
    """Parse one instance; sparse labels are relabelled to 0..V-1 in sorted order."""
    return parse_instance(text).hypergraph


def parse_many(text: str) -> list[ParsedInstance]:
    return [_parse_block(b) for b in _split_instances(text)]


def serialize(H: Hypergraph, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"p hg {H.vertex_count} {H.edge_count}")
    out.extend("e " + " ".join(map(str, e)) for e in H.edges)
    return "\n".join(out) + "\n"


def serialize_coloring(coloring: Coloring, comments: Iterable[str] = ()) -> str:
    out = [f"c {c}" for c in comments]
    out.append(f"s {coloring.palette_size}")
    out.extend(f"v {v} {c}" for v, c in enumerate(coloring.colors) if c is not None)
    return "\n".join(out) + "\n"


def parse_coloring(text: str, vertex_count: int) -> Coloring:
    """Read a coloring file; vertices without a ``v`` line stay uncolored."""
    palette: Optional[int] = None
    colors: list[Optional[int]] = [None] * vertex_count
    for lineno, line in enumerate(text.splitlines(), start=1):
        fields = line.split()
        if not fields or fields[0] == "c":
            continue
        if fields[0] == "s":
            if palette is not None or len(fields) != 2:
                raise FormatError("expected one 's <palette_size>' line", lineno)
            (palette,) = _ints(fields[1:], lineno)
        elif fields[0] == "v":
            if len(fields) != 3:
                raise FormatError("expected 'v <vertex> <color>'", lineno)
            v, c = _ints(fields[1:], lineno)
            if v >= vertex_count:
                raise FormatError(f"vertex {v} out of range", lineno)
            if colors[v] is not None:
                raise FormatError(f"vertex {v} colored twice", lineno)
            colors[v] = c
        else:
            raise FormatError(f"unknown line type {fields[0]!r}", lineno)
    if palette is None:
        raise FormatError("missing 's <palette_size>' header")
    try:
        return Coloring(tuple(colors), palette)
    except ValueError as exc:
        raise FormatError(str(exc)) from None
