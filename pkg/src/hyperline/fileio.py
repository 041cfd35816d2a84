"""Line-oriented ASCII formats.

Hypergraph (.hg):   header ``H <n> <m>`` then one edge per line as
                    space-separated sorted vertices; edge order in the
                    file is the edge index.
Graph (.gr):        header ``G <n> <medges>`` then one ``u v`` line per
                    edge with u < v, in lexicographic order.
Partition (.bp):    header ``B <N> <k> <M>`` then M blocks, each opened
                    by ``S <i> <count>`` and followed by one k-set per
                    line (1-based elements).

``#`` starts a comment anywhere on a line; blank lines are ignored.
Writers emit canonical, comment-free text so identical values always
serialize to identical bytes.
"""

from __future__ import annotations

from .errors import InputError
from .graph import Graph
from .hypergraph import Hypergraph


def _content_lines(text: str) -> list[tuple[int, list[str]]]:
    """(line number, tokens) for every non-empty line, comments stripped."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body.split()))
    return out


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise InputError(f"line {lineno}: expected integers, got {' '.join(tokens)}")


def write_hypergraph(hg: Hypergraph, notes: tuple[str, ...] = ()) -> str:
    lines = [f"# {note}" for note in notes]
    lines.append(f"H {hg.n} {hg.m}")
    for e in hg.edges:
        lines.append(" ".join(str(v) for v in e))
    return "\n".join(lines) + "\n"


def read_hypergraph(text: str) -> Hypergraph:
    rows = _content_lines(text)
    if not rows:
        raise InputError("empty hypergraph file")
    lineno, header = rows[0]
    if len(header) != 3 or header[0] != "H":
        raise InputError(f"line {lineno}: expected header 'H <n> <m>'")
    n, m = _ints(header[1:], lineno)
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header promises {m} edges, file has {len(body)}")
    edges = []
    for lineno, tokens in body:
        vs = _ints(tokens, lineno)
        if vs != sorted(set(vs)):
            raise InputError(f"line {lineno}: edge must be strictly increasing")
        edges.append(tuple(vs))
    return Hypergraph(n, edges)


def write_graph(g: Graph) -> str:
    lines = [f"G {g.n} {g.edge_count}"]
    for u, v in g.edges():
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def read_graph(text: str) -> Graph:
    rows = _content_lines(text)
    if not rows:
        raise InputError("empty graph file")
    lineno, header = rows[0]
    if len(header) != 3 or header[0] != "G":
        raise InputError(f"line {lineno}: expected header 'G <n> <medges>'")
    n, m = _ints(header[1:], lineno)
    body = rows[1:]
    if len(body) != m:
        raise InputError(f"header promises {m} edges, file has {len(body)}")
    edges = []
    for lineno, tokens in body:
        if len(tokens) != 2:
            raise InputError(f"line {lineno}: expected 'u v'")
        u, v = _ints(tokens, lineno)
        if u >= v:
            raise InputError(f"line {lineno}: edges must satisfy u < v")
        edges.append((u, v))
    return Graph(n, edges)


def write_partition(
    classes: list[list[tuple[int, ...]]], ground_size: int, subset_size: int
) -> str:
    lines = [f"B {ground_size} {subset_size} {len(classes)}"]
    for i, cls in enumerate(classes):
        lines.append(f"S {i} {len(cls)}")
        for subset in cls:
            lines.append(" ".join(str(x) for x in subset))
    return "\n".join(lines) + "\n"


def read_partition(text: str) -> tuple[int, int, list[list[tuple[int, ...]]]]:
    rows = _content_lines(text)
    if not rows:
        raise InputError("empty partition file")
    lineno, header = rows[0]
    if len(header) != 4 or header[0] != "B":
        raise InputError(f"line {lineno}: expected header 'B <N> <k> <M>'")
    ground_size, subset_size, class_count = _ints(header[1:], lineno)
    classes: list[list[tuple[int, ...]]] = []
    pending = 0
    pos = 1
    while pos < len(rows):
        lineno, tokens = rows[pos]
        if tokens[0] == "S":
            if pending:
                raise InputError(f"line {lineno}: previous class is short {pending} sets")
            if len(tokens) != 3:
                raise InputError(f"line {lineno}: expected 'S <i> <count>'")
            index, count = _ints(tokens[1:], lineno)
            if index != len(classes):
                raise InputError(f"line {lineno}: classes must be numbered in order")
            classes.append([])
            pending = count
        else:
            if not classes or not pending:
                raise InputError(f"line {lineno}: set outside any class block")
            vs = _ints(tokens, lineno)
            if len(vs) != subset_size:
                raise InputError(f"line {lineno}: expected a {subset_size}-set")
            classes[-1].append(tuple(vs))
            pending -= 1
        pos += 1
    if pending:
        raise InputError(f"last class is short {pending} sets")
    if len(classes) != class_count:
        raise InputError(f"header promises {class_count} classes, file has {len(classes)}")
    return ground_size, subset_size, classes
