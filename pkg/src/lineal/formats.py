"""Graph file formats (edge list and DIMACS) and the witness exchange format.

Input labels are opaque strings mapped injectively to dense 0-based ids;
when every label is already an integer in range, ids are taken verbatim.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .graphs import Graph
from .trees import RootedSpanningTree


class GraphParseError(ValueError):
    """Base for all parse failures; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class MalformedLineError(GraphParseError):
    pass


class SelfLoopError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class LabelOverflowError(GraphParseError):
    """More distinct labels than the declared vertex count."""


@dataclass(frozen=True)
class LoadedGraph:
    """A parsed graph plus the original label of every dense id."""

    graph: Graph
    labels: tuple[str, ...]

    def id_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown vertex label {label!r}") from None


def parse_graph(text: str) -> LoadedGraph:
    """Parse an edge-list or DIMACS document (detected by its first data line)."""
    lines = text.splitlines()
    for raw in lines:
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if stripped.startswith("c ") or stripped == "c":
            return _parse_dimacs(lines)
        if stripped.startswith("p "):
            return _parse_dimacs(lines)
        return _parse_edgelist(lines)
    raise MalformedLineError("empty document")


def _parse_edgelist(lines: list[str]) -> LoadedGraph:
    n = m = -1
    raw_edges: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(lines, 1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if n < 0:
            if len(parts) != 2:
                raise MalformedLineError("expected header '<vertices> <edges>'", lineno)
            try:
                n, m = int(parts[0]), int(parts[1])
            except ValueError:
                raise MalformedLineError("header fields must be integers", lineno) from None
            if n < 0 or m < 0:
                raise MalformedLineError("header fields must be non-negative", lineno)
            continue
        if len(parts) != 2:
            raise MalformedLineError("expected an edge as two labels", lineno)
        if len(raw_edges) == m:
            raise MalformedLineError(f"more than the declared {m} edges", lineno)
        raw_edges.append((parts[0], parts[1], lineno))
    if n < 0:
        raise MalformedLineError("missing header line")
    if len(raw_edges) != m:
        raise MalformedLineError(f"declared {m} edges but found {len(raw_edges)}")
    return _assemble(n, raw_edges)


def _parse_dimacs(lines: list[str]) -> LoadedGraph:
    n = m = -1
    raw_edges: list[tuple[str, str, int]] = []
    for lineno, raw in enumerate(lines, 1):
        s = raw.strip()
        if not s or s.startswith("#") or s == "c" or s.startswith("c "):
            continue
        parts = s.split()
        if parts[0] == "p":
            if n >= 0:
                raise MalformedLineError("second problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise MalformedLineError("expected 'p edge <vertices> <edges>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise MalformedLineError("problem line fields must be integers", lineno) from None
            continue
        if parts[0] == "e":
            if n < 0:
                raise MalformedLineError("edge before the problem line", lineno)
            if len(parts) != 3:
                raise MalformedLineError("expected 'e <u> <v>'", lineno)
            if len(raw_edges) == m:
                raise MalformedLineError(f"more than the declared {m} edges", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise MalformedLineError("edge endpoints must be integers", lineno) from None
            if not (1 <= u <= n and 1 <= v <= n):
                raise MalformedLineError(f"endpoint out of range 1..{n}", lineno)
            raw_edges.append((str(u), str(v), lineno))
            continue
        raise MalformedLineError(f"unknown line type {parts[0]!r}", lineno)
    if n < 0:
        raise MalformedLineError("missing problem line")
    if len(raw_edges) != m:
        raise MalformedLineError(f"declared {m} edges but found {len(raw_edges)}")
    labels = tuple(str(i) for i in range(1, n + 1))
    return _build(n, labels, {lab: i for i, lab in enumerate(labels)}, raw_edges)


def _assemble(n: int, raw_edges: list[tuple[str, str, int]]) -> LoadedGraph:
    seen_labels = []
    for a, b, _ in raw_edges:
        for lab in (a, b):
            if lab not in seen_labels:
                seen_labels.append(lab)
    numeric = all(_as_id(lab, n) is not None for lab in seen_labels)
    if numeric:
        labels = tuple(str(i) for i in range(n))
        ids = {lab: int(lab) for lab in seen_labels}
    else:
        if len(seen_labels) > n:
            extra = seen_labels[n]
            lineno = next(ln for a, b, ln in raw_edges if extra in (a, b))
            raise LabelOverflowError(
                f"label {extra!r} is the {len(seen_labels)}th distinct label but only {n} vertices declared",
                lineno,
            )
        ids = {lab: i for i, lab in enumerate(seen_labels)}
        filler = []
        used = set(seen_labels)
        i = 0
        while len(seen_labels) + len(filler) < n:
            cand = str(i)
            if cand not in used:
                filler.append(cand)
            i += 1
        labels = tuple(seen_labels + filler)
        ids.update({lab: len(seen_labels) + j for j, lab in enumerate(filler)})
    return _build(n, labels, ids, raw_edges)


def _as_id(label: str, n: int) -> int | None:
    try:
        value = int(label)
    except ValueError:
        return None
    return value if 0 <= value < n else None


def _build(n, labels, ids, raw_edges) -> LoadedGraph:
    edges = []
    seen = set()
    for a, b, lineno in raw_edges:
        u, v = ids[a], ids[b]
        if u == v:
            raise SelfLoopError(f"self-loop at {a!r}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise DuplicateEdgeError(f"duplicate edge {a!r} {b!r}", lineno)
        seen.add(key)
        edges.append(key)
    return LoadedGraph(Graph(n, edges), labels)


def serialize_graph(g: Graph, labels: tuple[str, ...] | None = None, fmt: str = "edgelist") -> str:
    """Render a graph back to text; round-trips through parse_graph."""
    if labels is None:
        labels = tuple(str(i) for i in range(g.vertex_count))
    if fmt == "edgelist":
        out = [f"{g.vertex_count} {g.edge_count}"]
        out += [f"{labels[u]} {labels[v]}" for u, v in g.edges()]
    elif fmt == "dimacs":
        out = [f"p edge {g.vertex_count} {g.edge_count}"]
        out += [f"e {u + 1} {v + 1}" for u, v in g.edges()]
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return "\n".join(out) + "\n"


def witness_to_jsonable(t: RootedSpanningTree, labels: tuple[str, ...]) -> dict:
    """Witness exchange form: root plus a parent array in original labels."""
    return {
        "root": labels[t.root],
        "parents": {
            labels[v]: (None if p is None else labels[p])
            for v, p in sorted(t.parent.items())
        },
    }


def parse_witness(text: str, loaded: LoadedGraph) -> RootedSpanningTree:
    """Read the JSON witness form against a loaded graph's labels."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphParseError(f"witness is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or "root" not in doc or "parents" not in doc:
        raise GraphParseError("witness must be an object with 'root' and 'parents'")
    by_label = {lab: i for i, lab in enumerate(loaded.labels)}
    try:
        root = by_label[str(doc["root"])]
        parent: dict[int, int | None] = {}
        for v_lab, p_lab in doc["parents"].items():
            parent[by_label[str(v_lab)]] = None if p_lab is None else by_label[str(p_lab)]
    except KeyError as exc:
        raise GraphParseError(f"witness refers to unknown vertex label {exc.args[0]!r}") from None
    return RootedSpanningTree(root, parent)
