"""Read networks from edge-list text and a minimal GML subset."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Hashable, TextIO, Union

from .graph import DuplicateEdgeError, Graph, GraphError, SelfLoopError

Label = Union[int, str]


class ParseError(GraphError):
    """Input text that does not follow the expected format."""


@dataclass
class RawNetwork:
    """Labelled network as read from disk, before dense relabeling.

    ``to_graph`` maps ``labels[i]`` to node ``i``.
    """

    labels: list = field(default_factory=list)
    edge_pairs: list = field(default_factory=list)

    def __post_init__(self):
        if len(set(self.labels)) != len(self.labels):
            raise ParseError("node labels are not unique")
        known = set(self.labels)
        for u, v in self.edge_pairs:
            if u not in known or v not in known:
                raise ParseError(f"edge ({u!r}, {v!r}) references an undeclared node")


def _read(source) -> str:
    if hasattr(source, "read"):
        return source.read()
    return str(source)


def _label(token: str) -> Label:
    if re.fullmatch(r"[+-]?\d+", token):
        return int(token)
    return token


_NODES_DIRECTIVE = re.compile(r"#\s*nodes:\s*(\d+)\s*$")


def parse_edge_list(text: Union[str, TextIO], dedup: bool = False) -> RawNetwork:
    """Parse whitespace-separated ``u v`` lines.

    Blank lines and ``#`` comments are skipped. A ``# nodes: N`` header line
    pre-declares integer labels ``0 .. N-1`` so isolated nodes and node order
    survive a round trip through :func:`format_edge_list`.
    """
    labels: list = []
    index: dict[Hashable, int] = {}
    pairs = []
    seen = set()

    def intern(label):
        if label not in index:
            index[label] = len(labels)
            labels.append(label)

    for lineno, line in enumerate(_read(text).splitlines(), start=1):
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            match = _NODES_DIRECTIVE.fullmatch(stripped)
            if match and not labels:
                for i in range(int(match.group(1))):
                    intern(i)
            continue
        tokens = stripped.split()
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {line!r}")
        u, v = (_label(t) for t in tokens)
        if u == v:
            raise SelfLoopError(f"line {lineno}: self-loop on {u!r}")
        key = frozenset((u, v))
        if key in seen:
            if dedup:
                continue
            raise DuplicateEdgeError(f"line {lineno}: duplicate edge ({u!r}, {v!r})")
        seen.add(key)
        intern(u)
        intern(v)
        pairs.append((u, v))
    return RawNetwork(labels, pairs)


_GML_TOKEN = re.compile(r'\s*(?:(\[)|(\])|"([^"]*)"|([^\s\[\]"]+))')


def _gml_tokens(text: str):
    pos = 0
    n = len(text)
    while pos < n:
        match = _GML_TOKEN.match(text, pos)
        if match is None:
            if text[pos:].strip():
                raise ParseError(f"unparseable GML near offset {pos}")
            return
        pos = match.end()
        if match.group(1):
            yield "["
        elif match.group(2):
            yield "]"
        elif match.group(3) is not None:
            yield ("str", match.group(3))
        elif match.group(4) is not None:
            yield ("atom", match.group(4))


def _gml_tree(text: str) -> list:
    """Nested ``[(key, value), ...]`` lists; block values are lists themselves."""
    stack: list[list] = [[]]
    key = None
    for tok in _gml_tokens(text):
        if tok == "[":
            if key is None:
                raise ParseError("GML block without a key")
            block: list = []
            stack[-1].append((key, block))
            stack.append(block)
            key = None
        elif tok == "]":
            if key is not None or len(stack) == 1:
                raise ParseError("unbalanced ']' in GML")
            stack.pop()
        elif key is None:
            if tok[0] != "atom":
                raise ParseError(f"GML key expected, got string {tok[1]!r}")
            key = tok[1]
        else:
            stack[-1].append((key, tok[1] if tok[0] == "str" else _label(tok[1])))
            key = None
    if len(stack) != 1 or key is not None:
        raise ParseError("GML ended inside a block")
    return stack[0]


def _single(block: list, name: str, what: str):
    values = [v for k, v in block if k == name]
    if len(values) != 1 or isinstance(values[0], list):
        raise ParseError(f"{what} needs exactly one scalar '{name}'")
    return values[0]


def parse_gml_edges(text: Union[str, TextIO], dedup: bool = False) -> RawNetwork:
    """Extract ``node [ id .. ]`` and ``edge [ source .. target .. ]`` blocks.

    Every other key is ignored; edges are read as undirected.
    """
    tree = _gml_tree(_read(text))
    graphs = [v for k, v in tree if k == "graph" and isinstance(v, list)]
    if len(graphs) > 1:
        raise ParseError("only one graph block per GML document is supported")
    body = graphs[0] if graphs else tree

    labels = []
    for k, v in body:
        if k == "node" and isinstance(v, list):
            labels.append(_single(v, "id", "node"))
    if len(set(labels)) != len(labels):
        raise ParseError("duplicate GML node id")
    known = set(labels)

    pairs = []
    seen = set()
    for k, v in body:
        if k != "edge" or not isinstance(v, list):
            continue
        u = _single(v, "source", "edge")
        w = _single(v, "target", "edge")
        for end in (u, w):
            if end not in known:
                raise ParseError(f"edge references undeclared node {end!r}")
        if u == w:
            raise SelfLoopError(f"self-loop on GML node {u!r}")
        key = frozenset((u, w))
        if key in seen:
            if dedup:
                continue
            raise DuplicateEdgeError(f"duplicate GML edge ({u!r}, {w!r})")
        seen.add(key)
        pairs.append((u, w))
    return RawNetwork(labels, pairs)


def to_graph(raw: RawNetwork) -> tuple[Graph, list]:
    """Dense relabeling in label order; returns the graph and the label list."""
    index = {label: i for i, label in enumerate(raw.labels)}
    edges = [(index[u], index[v]) for u, v in raw.edge_pairs]
    return Graph(max(len(raw.labels), 1), edges), list(raw.labels)


def format_edge_list(graph: Graph) -> str:
    lines = [f"# nodes: {graph.node_count}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges)
    return "\n".join(lines) + "\n"


def load_graph(path: Union[str, Path], fmt: str = "edgelist", dedup: bool = False) -> tuple[Graph, list]:
    """Read ``path`` as ``edgelist`` or ``gml`` and relabel densely."""
    text = Path(path).read_text(encoding="utf-8")
    if fmt == "edgelist":
        raw = parse_edge_list(text, dedup=dedup)
    elif fmt == "gml":
        raw = parse_gml_edges(text, dedup=dedup)
    else:
        raise ValueError(f"unknown format {fmt!r}; expected 'edgelist' or 'gml'")
    return to_graph(raw)
