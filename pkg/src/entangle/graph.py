"""Finite simple (di)graphs, their text formats, and minor operations.

Graphs are immutable.  Undirected graphs keep a symmetric arc set, so the game
engine can treat every graph as a digraph.  Vertex ids are non-negative
integers; contraction keeps ``min(a, b)`` for the merged vertex and leaves a
gap at ``max(a, b)``, which is compacted only when serialising.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator

import numpy as np

from .errors import GraphDomainError, ParseError, SizeLimitError, UnsupportedOperationError

CANONICAL_MAX_N = 8
IS_MINOR_MAX_N = 7

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertices: tuple[int, ...]
    edges: frozenset[Edge]
    directed: bool = False

    def __post_init__(self):
        verts = tuple(sorted(set(self.vertices)))
        if any(v < 0 for v in verts):
            raise GraphDomainError("vertex ids must be non-negative")
        edges = frozenset((int(u), int(v)) for u, v in self.edges)
        vset = set(verts)
        for u, v in edges:
            if u == v:
                raise GraphDomainError(f"self-loop at {u}")
            if u not in vset or v not in vset:
                raise GraphDomainError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
        if not self.directed:
            edges = edges | frozenset((v, u) for u, v in edges)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int | Iterable[int], edges: Iterable[Edge], directed: bool = False) -> Graph:
        """Build a graph on ``range(n)`` (or an explicit vertex iterable)."""
        vertices = range(n) if isinstance(n, int) else n
        return cls(tuple(vertices), frozenset(edges), directed)

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        out: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            out[u].add(v)
        return {v: frozenset(ns) for v, ns in out.items()}

    @property
    def n(self) -> int:
        return len(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def edge_list(self) -> list[Edge]:
        """Sorted edges; undirected edges are reported once as ``(u, v)`` with ``u < v``."""
        if self.directed:
            return sorted(self.edges)
        return sorted((u, v) for u, v in self.edges if u < v)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def relabel(self, mapping: dict[int, int]) -> Graph:
        return Graph(
            tuple(mapping[v] for v in self.vertices),
            frozenset((mapping[u], mapping[v]) for u, v in self.edges),
            self.directed,
        )

    def compact(self) -> Graph:
        """Renumber vertices to ``0..n-1`` preserving their order."""
        return self.relabel({v: i for i, v in enumerate(self.vertices)})

    def __repr__(self) -> str:
        kind = "DiGraph" if self.directed else "Graph"
        return f"{kind}(V={list(self.vertices)}, E={self.edge_list()})"


def empty_graph(n: int, directed: bool = False) -> Graph:
    return Graph.from_edges(n, (), directed)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


# ---------------------------------------------------------------- parsing


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines with an optional ``n <count> [directed]`` header.

    Blank lines and ``#`` comments are ignored; duplicate edges collapse.
    """
    n: int | None = None
    directed = False
    edges: list[Edge] = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if seen_content:
                raise ParseError("header must precede edges", lineno)
            if len(tokens) not in (2, 3) or (len(tokens) == 3 and tokens[2] != "directed"):
                raise ParseError(f"malformed header {raw.strip()!r}", lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(f"bad vertex count {tokens[1]!r}", lineno) from None
            if n < 0:
                raise ParseError("vertex count must be non-negative", lineno)
            directed = len(tokens) == 3
            seen_content = True
            continue
        seen_content = True
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {raw.strip()!r}", lineno)
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {raw.strip()!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError("vertex ids must be non-negative", lineno)
        if u == v:
            raise ParseError(f"self-loop {u} {u} rejected", lineno)
        if n is not None and max(u, v) >= n:
            raise ParseError(f"vertex {max(u, v)} out of range for n={n}", lineno)
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph.from_edges(n, edges, directed)


def to_edge_list(g: Graph) -> str:
    g = g.compact()
    header = f"n {g.n}" + (" directed" if g.directed else "")
    return "\n".join([header] + [f"{u} {v}" for u, v in g.edge_list()]) + "\n"


def _graph6_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise ParseError("empty graph6 string")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field")
        return _sixes_to_int(data[2:8]), 8
    if len(data) < 4:
        raise ParseError("truncated graph6 size field")
    return _sixes_to_int(data[1:4]), 4


def _sixes_to_int(chunk: bytes) -> int:
    value = 0
    for c in chunk:
        value = (value << 6) | (c - 63)
    return value


def parse_graph6(text: str) -> Graph:
    """Decode one graph in graph6 format (an optional ``>>graph6<<`` header is skipped)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError:
        raise ParseError("graph6 must be printable ASCII") from None
    bad = [c for c in data if not 63 <= c <= 126]
    if bad:
        raise ParseError(f"character {chr(bad[0])!r} outside graph6 range 63..126")
    n, offset = _graph6_size(data)
    nbits = n * (n - 1) // 2
    body = data[offset:]
    if len(body) != (nbits + 5) // 6:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    bits = [(c - 63) >> (5 - i) & 1 for c in body for i in range(6)]
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[nbits:]):
        raise ParseError("nonzero graph6 padding bits")
    return Graph.from_edges(n, edges)


def to_graph6(g: Graph) -> str:
    if g.directed:
        raise UnsupportedOperationError("graph6 encodes undirected graphs only")
    g = g.compact()
    n = g.n
    if n <= 62:
        head = bytes([n + 63])
    elif n <= 258047:
        head = bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    else:
        head = bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = bytes(
        63 + sum(b << (5 - i) for i, b in enumerate(bits[p:p + 6])) for p in range(0, len(bits), 6)
    )
    return (head + body).decode("ascii")


def read_graph6_lines(text: str) -> Iterator[Graph]:
    for line in text.splitlines():
        if line.strip():
            yield parse_graph6(line)


# ------------------------------------------------------- basic operations


def _require_vertex(g: Graph, v: int) -> None:
    if v not in g.adjacency:
        raise GraphDomainError(f"vertex {v} not in graph")


def neighbors(g: Graph, v: int) -> frozenset[int]:
    """Neighbours of ``v``; out-neighbours for a digraph."""
    _require_vertex(g, v)
    return g.adjacency[v]


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphDomainError(f"edge ({u}, {v}) not in graph")
    drop = {(u, v)} if g.directed else {(u, v), (v, u)}
    return Graph(g.vertices, g.edges - drop, g.directed)


def delete_vertex(g: Graph, v: int) -> Graph:
    """Remove ``v`` with all incident edges."""
    _require_vertex(g, v)
    return Graph(
        tuple(x for x in g.vertices if x != v),
        frozenset(e for e in g.edges if v not in e),
        g.directed,
    )


@dataclass(frozen=True)
class ContractionMap:
    """The vertex map ``V_H -> V_G`` induced by contracting edge ``(a, b)`` into ``z``."""

    source: Graph
    target: Graph
    a: int
    b: int
    z: int
    map: dict[int, int] = field(hash=False, compare=False)

    def __call__(self, v: int) -> int:
        return self.map[v]

    def image(self, vertices: Iterable[int]) -> frozenset[int]:
        return frozenset(self.map[v] for v in vertices)

    def check(self) -> bool:
        """Recompute the target from the source through the map."""
        if set(self.map) != set(self.source.vertices):
            return False
        if self.map[self.a] != self.z or self.map[self.b] != self.z:
            return False
        if any(self.map[v] != v for v in self.source.vertices if v not in (self.a, self.b)):
            return False
        image_edges = {
            (self.map[x], self.map[y]) for x, y in self.source.edges if self.map[x] != self.map[y]
        }
        return (
            image_edges == set(self.target.edges)
            and set(self.map.values()) == set(self.target.vertices)
        )


def contract_edge(g: Graph, u: int, v: int) -> tuple[Graph, ContractionMap]:
    if g.directed:
        raise UnsupportedOperationError("contraction is defined for undirected graphs only")
    if not g.has_edge(u, v):
        raise GraphDomainError(f"edge ({u}, {v}) not in graph")
    z, gone = min(u, v), max(u, v)
    fmap = {x: (z if x == gone else x) for x in g.vertices}
    edges = frozenset((fmap[x], fmap[y]) for x, y in g.edges if fmap[x] != fmap[y])
    target = Graph(tuple(x for x in g.vertices if x != gone), edges)
    return target, ContractionMap(g, target, u, v, z, fmap)


# ----------------------------------------------------------- isomorphism


@lru_cache(maxsize=None)
def _permutations(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.intp).reshape(-1, n)


@lru_cache(maxsize=None)
def _bit_slots(n: int, directed: bool) -> tuple[np.ndarray, np.ndarray]:
    if directed:
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
    else:
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if not pairs:
        return np.zeros(0, dtype=np.intp), np.zeros(0, dtype=np.intp)
    rows, cols = zip(*pairs)
    return np.array(rows, dtype=np.intp), np.array(cols, dtype=np.intp)


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant code: vertex count, directedness, minimal adjacency bit string.

    Brute force over all vertex permutations, so ``n <= 8``.
    """
    n = g.n
    if n > CANONICAL_MAX_N:
        raise SizeLimitError(f"canonical_form supports n <= {CANONICAL_MAX_N}, got {n}")
    header = bytes([n, int(g.directed)])
    rows, cols = _bit_slots(n, g.directed)
    if rows.size == 0:
        return header
    index = {v: i for i, v in enumerate(g.vertices)}
    adj = np.zeros((n, n), dtype=np.uint64)
    for u, v in g.edges:
        adj[index[u], index[v]] = 1
    perms = _permutations(n)
    # permuted matrix B[i, j] = A[p[i], p[j]], read off in slot order
    bits = adj[perms[:, rows], perms[:, cols]]
    shifts = np.arange(rows.size - 1, -1, -1, dtype=np.uint64)
    codes = (bits << shifts).sum(axis=1)
    best = int(codes.min())
    return header + best.to_bytes((rows.size + 7) // 8, "big")


# ---------------------------------------------------------------- minors


@dataclass(frozen=True)
class MinorOperation:
    """One minor step: ``delete_edge``, ``contract_edge`` or ``delete_isolated_vertex``."""

    kind: str
    operands: tuple[int, ...]

    KINDS = ("delete_edge", "contract_edge", "delete_isolated_vertex")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown minor operation {self.kind!r}")

    def apply(self, g: Graph) -> Graph:
        if self.kind == "delete_edge":
            return delete_edge(g, *self.operands)
        if self.kind == "contract_edge":
            return contract_edge(g, *self.operands)[0]
        (v,) = self.operands
        _require_vertex(g, v)
        if g.adjacency[v] or any(v in ns for ns in g.adjacency.values()):
            raise GraphDomainError(f"vertex {v} is not isolated")
        return delete_vertex(g, v)

    def __str__(self) -> str:
        return f"{self.kind}{self.operands}"


def _is_isolated(g: Graph, v: int) -> bool:
    return not g.adjacency[v] and all(v not in ns for ns in g.adjacency.values())


def one_step_minors(g: Graph) -> list[tuple[MinorOperation, Graph]]:
    out = []
    for e in g.edge_list():
        op = MinorOperation("delete_edge", e)
        out.append((op, op.apply(g)))
    if not g.directed:
        for e in g.edge_list():
            op = MinorOperation("contract_edge", e)
            out.append((op, op.apply(g)))
    for v in g.vertices:
        if _is_isolated(g, v):
            op = MinorOperation("delete_isolated_vertex", (v,))
            out.append((op, op.apply(g)))
    return out


def _edge_count(g: Graph) -> int:
    return len(g.edges) if g.directed else len(g.edges) // 2


def is_minor(g: Graph, h: Graph) -> bool:
    """True iff ``g`` is isomorphic to a graph reachable from ``h`` by minor operations."""
    if h.n > IS_MINOR_MAX_N:
        raise SizeLimitError(f"is_minor supports |V_H| <= {IS_MINOR_MAX_N}, got {h.n}")
    if g.directed != h.directed or g.n > h.n:
        return False
    target = canonical_form(g)
    n_g, m_g = g.n, _edge_count(g)
    start = canonical_form(h)
    seen = {start}
    queue = deque([h])
    while queue:
        cur = queue.popleft()
        if cur.n == n_g and canonical_form(cur) == target:
            return True
        for _, m in one_step_minors(cur):
            if m.n < n_g or _edge_count(m) < m_g:
                continue
            code = canonical_form(m)
            if code not in seen:
                seen.add(code)
                queue.append(m)
    return False


# ----------------------------------------------------------- enumeration


@lru_cache(maxsize=None)
def _classes(n: int, directed: bool) -> tuple[Graph, ...]:
    if n == 0:
        return (empty_graph(0, directed),)
    # every n-vertex graph is an (n-1)-vertex class plus one new vertex
    new = n - 1
    slots = [(new, u) for u in range(new)]
    if directed:
        slots += [(u, new) for u in range(new)]
    found: dict[bytes, Graph] = {}
    for base in _classes(n - 1, directed):
        base = base.compact()
        for mask in range(1 << len(slots)):
            extra = [slots[i] for i in range(len(slots)) if mask >> i & 1]
            g = Graph(tuple(range(n)), base.edges | frozenset(extra), directed)
            found.setdefault(canonical_form(g), g)
    return tuple(found[c] for c in sorted(found))


def graphs_on(n: int, directed: bool = False) -> list[Graph]:
    """One representative per isomorphism class on exactly ``n`` vertices (``n <= 6`` undirected, ``n <= 4`` directed are cheap)."""
    limit = 5 if directed else 7
    if n > limit:
        raise SizeLimitError(f"internal enumeration supports n <= {limit}")
    return list(_classes(n, directed))


def graphs_up_to(n_max: int, directed: bool = False, min_n: int = 1) -> list[Graph]:
    return [g for n in range(min_n, n_max + 1) for g in graphs_on(n, directed)]
