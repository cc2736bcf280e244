"""Weighted graphs, named families, bridge compositions, and serialization.

Vertices are integers 0..n-1.  Weights live in a symmetric real matrix;
diagonal entries are loop weights.  Graphs are immutable once built, so
they can be shared freely between the exact and numeric layers.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphParseError",
    "CompositionSpec",
    "build_path",
    "build_cycle",
    "build_complete",
    "build_star",
    "build_regular",
    "cone",
    "build_double_star",
    "build_extended_double_star",
    "compose_bridge",
    "compose",
    "one_sum",
    "iter_ab_paths",
    "enumerate_ab_paths",
    "parse_graph",
    "serialize_graph",
    "are_isomorphic",
    "canonical_key",
    "automorphism_orbits",
    "connected_graphs",
    "marked_graphs",
]


class GraphParseError(ValueError):
    """Malformed graph text.  Carries the 1-based offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Graph:
    """Symmetric weighted adjacency structure.

    ``integer_flag`` is true when every weight is exactly an integer, which
    is what the exact polynomial layer requires.
    """

    __slots__ = ("weights", "_integer", "_poly_cache")

    def __init__(self, weights):
        w = np.array(weights, dtype=float)
        if w.ndim != 2 or w.shape[0] != w.shape[1]:
            raise ValueError("weight matrix must be square")
        if w.shape[0] < 1:
            raise ValueError("a graph needs at least one vertex")
        if not np.array_equal(w, w.T):
            raise ValueError("weight matrix must be symmetric")
        w.setflags(write=False)
        self.weights = w
        self._integer = bool(np.all(w == np.round(w)))
        self._poly_cache: dict = {}

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple] = (),
        loops: Iterable[tuple[int, float]] = (),
    ) -> "Graph":
        """Build from ``(u, v)`` or ``(u, v, w)`` edge tuples plus loop weights."""
        w = np.zeros((n, n))
        for e in edges:
            if len(e) == 2:
                u, v = e
                wt = 1.0
            else:
                u, v, wt = e
            if u == v:
                raise ValueError("self edges must be given as loops")
            w[u, v] = wt
            w[v, u] = wt
        for u, wt in loops:
            w[u, u] = wt
        return cls(w)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @property
    def integer_flag(self) -> bool:
        return self._integer

    @property
    def is_simple_unweighted(self) -> bool:
        w = self.weights
        off_ok = bool(np.all((w == 0) | (w == 1)))
        return off_ok and bool(np.all(np.diag(w) == 0))

    def int_matrix(self) -> list[list[int]]:
        """Weights as exact Python integers.  Requires integer_flag."""
        if not self._integer:
            raise ValueError("graph has non-integer weights")
        return [[int(round(x)) for x in row] for row in self.weights]

    def neighbors(self, u: int) -> list[int]:
        return [v for v in range(self.n) if v != u and self.weights[u, v] != 0]

    def degree(self, u: int) -> int:
        return len(self.neighbors(u))

    def edges(self) -> list[tuple[int, int, float]]:
        """Off-diagonal edges as (u, v, w) with u < v."""
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.weights[u, v] != 0:
                    out.append((u, v, float(self.weights[u, v])))
        return out

    def loops(self) -> list[tuple[int, float]]:
        return [(u, float(self.weights[u, u])) for u in range(self.n) if self.weights[u, u] != 0]

    def with_loop(self, v: int, weight: float) -> "Graph":
        """New graph with ``weight`` added to the loop at v."""
        self._check_vertex(v)
        w = self.weights.copy()
        w[v, v] += weight
        return Graph(w)

    def delete(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on the complement of ``vertices`` (must be proper)."""
        gone = set(vertices)
        for v in gone:
            self._check_vertex(v)
        keep = [v for v in range(self.n) if v not in gone]
        if not keep:
            raise ValueError("cannot delete every vertex; the empty graph is not representable")
        return Graph(self.weights[np.ix_(keep, keep)])

    def relabeled(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex i renamed perm[i]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation")
        w = np.zeros_like(self.weights)
        p = list(perm)
        for i in range(self.n):
            for j in range(self.n):
                w[p[i], p[j]] = self.weights[i, j]
        return Graph(w)

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def connected_between(self, a: int, b: int) -> bool:
        self._check_vertex(a)
        self._check_vertex(b)
        seen = {a}
        stack = [a]
        while stack:
            u = stack.pop()
            if u == b:
                return True
            for v in self.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return b in seen

    def articulation_points(self) -> set[int]:
        """Cut vertices, by deletion and recount.  Fine at the sizes used here."""
        if self.n <= 2:
            return set()
        base = self._component_count()
        out = set()
        for v in range(self.n):
            if self.delete([v])._component_count() > base:
                out.add(v)
        return out

    def _component_count(self) -> int:
        seen: set[int] = set()
        comps = 0
        for start in range(self.n):
            if start in seen:
                continue
            comps += 1
            stack = [start]
            seen.add(start)
            while stack:
                u = stack.pop()
                for v in self.neighbors(u):
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
        return comps

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.weights, other.weights)

    def __hash__(self):
        return hash((self.n, self.weights.tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()}, loops={self.loops()})"

    # immutable payload, safe to pickle by value
    def __getstate__(self):
        return np.asarray(self.weights)

    def __setstate__(self, state):
        w = np.array(state, dtype=float)
        w.setflags(write=False)
        self.weights = w
        self._integer = bool(np.all(w == np.round(w)))
        self._poly_cache = {}


# ---------------------------------------------------------------------------
# named families


def build_path(n: int) -> Graph:
    """Path P_n."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def build_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def build_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def build_star(k: int) -> Graph:
    """Star with k leaves, centre at vertex 0.  k = 0 gives a single vertex."""
    if k < 0:
        raise ValueError("star needs k >= 0")
    return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def build_regular(n: int, k: int) -> Graph:
    """A k-regular graph on n vertices (circulant construction).

    Raises when no k-regular graph on n vertices exists.
    """
    if n < 1 or k < 0 or k >= n or (n * k) % 2 == 1:
        raise ValueError(f"no {k}-regular graph on {n} vertices")
    edges = set()
    if k % 2 == 0:
        offsets = range(1, k // 2 + 1)
    else:
        offsets = range(1, (k - 1) // 2 + 1)
        for i in range(n // 2):
            edges.add((i, i + n // 2))
    for d in offsets:
        for i in range(n):
            j = (i + d) % n
            edges.add((min(i, j), max(i, j)))
    g = Graph.from_edges(n, edges)
    if any(g.degree(v) != k for v in range(n)):
        raise ValueError(f"no {k}-regular circulant on {n} vertices")
    return g


def cone(g: Graph) -> Graph:
    """Join a new apex vertex (index 0) to every vertex of g."""
    n = g.n
    w = np.zeros((n + 1, n + 1))
    w[1:, 1:] = g.weights
    w[0, 1:] = 1.0
    w[1:, 0] = 1.0
    return Graph(w)


def build_double_star(k: int, ell: int) -> tuple[Graph, int, int]:
    """Two stars with k and ell leaves, centres joined by an edge.

    Returns (graph, a, b) with a, b the centres.
    """
    return compose(build_star(k), 0, build_star(ell), 0, 2)


def build_extended_double_star(k: int, ell: int) -> tuple[Graph, int, int]:
    """Two stars with centres joined by a path with one middle vertex."""
    return compose(build_star(k), 0, build_star(ell), 0, 3)


# ---------------------------------------------------------------------------
# compositions


@dataclass(frozen=True)
class CompositionSpec:
    """Bridge composition: y1 and y2 joined by a path on ``bridge_path_vertices``
    vertices whose endpoints are identified with a in y1 and b in y2."""

    y1: Graph
    a: int
    y2: Graph
    b: int
    bridge_path_vertices: int = 2


def compose_bridge(spec: CompositionSpec) -> tuple[Graph, int, int]:
    """Glue spec.y1 and spec.y2 along a bridge path.

    Vertex layout: y1 keeps its labels, y2 is shifted by n1, the internal
    path vertices (if any) come last.  Returns (graph, a, b) in the new
    labelling.
    """
    y1, a, y2, b, m = spec.y1, spec.a, spec.y2, spec.b, spec.bridge_path_vertices
    y1._check_vertex(a)
    y2._check_vertex(b)
    if m < 2:
        raise ValueError("bridge path needs at least its two endpoints")
    n1, n2 = y1.n, y2.n
    inner = m - 2
    n = n1 + n2 + inner
    w = np.zeros((n, n))
    w[:n1, :n1] = y1.weights
    w[n1 : n1 + n2, n1 : n1 + n2] = y2.weights
    ga, gb = a, n1 + b
    chain = [ga] + [n1 + n2 + i for i in range(inner)] + [gb]
    for u, v in zip(chain, chain[1:]):
        w[u, v] = 1.0
        w[v, u] = 1.0
    return Graph(w), ga, gb


def compose(y1: Graph, a: int, y2: Graph, b: int, bridge_path_vertices: int = 2):
    return compose_bridge(CompositionSpec(y1, a, y2, b, bridge_path_vertices))


def one_sum(y1: Graph, b1: int, y2: Graph, b2: int) -> tuple[Graph, int]:
    """Identify vertex b1 of y1 with vertex b2 of y2 (vertex gluing).

    Loop weights at the glued vertex add.  Returns (graph, b) with b the
    glued vertex in the new labelling (y1 keeps its labels, the rest of y2
    follows).
    """
    y1._check_vertex(b1)
    y2._check_vertex(b2)
    n1, n2 = y1.n, y2.n
    n = n1 + n2 - 1
    w = np.zeros((n, n))
    w[:n1, :n1] = y1.weights
    other = [v for v in range(n2) if v != b2]
    pos = {v: n1 + i for i, v in enumerate(other)}
    pos[b2] = b1
    for u in range(n2):
        for v in range(n2):
            if y2.weights[u, v] != 0:
                if u == v == b2:
                    w[b1, b1] += y2.weights[u, v]
                else:
                    w[pos[u], pos[v]] += y2.weights[u, v]
    return Graph(w), b1


# ---------------------------------------------------------------------------
# path enumeration


def iter_ab_paths(g: Graph, a: int, b: int) -> Iterator[tuple[int, ...]]:
    """All simple a..b paths as vertex sequences, in DFS order with
    ascending neighbor exploration."""
    g._check_vertex(a)
    g._check_vertex(b)
    if a == b:
        raise ValueError("path endpoints must differ")
    path = [a]
    on_path = {a}

    def walk(u: int) -> Iterator[tuple[int, ...]]:
        if u == b:
            yield tuple(path)
            return
        for v in sorted(g.neighbors(u)):
            if v not in on_path:
                path.append(v)
                on_path.add(v)
                yield from walk(v)
                path.pop()
                on_path.remove(v)

    yield from walk(a)


def enumerate_ab_paths(g: Graph, a: int, b: int) -> list[frozenset[int]]:
    """Vertex sets of all simple a..b paths, one entry per path.

    Distinct paths through the same vertex set each contribute an entry.
    Ordered lexicographically by sorted vertex tuple.
    """
    if not g.connected_between(a, b):
        raise ValueError(f"vertices {a} and {b} are not connected")
    sets = [frozenset(p) for p in iter_ab_paths(g, a, b)]
    return sorted(sets, key=lambda s: tuple(sorted(s)))


# ---------------------------------------------------------------------------
# serialization


def _format_weight(w: float) -> str:
    if float(w).is_integer():
        return str(int(w))
    return repr(float(w))


def serialize_graph(g: Graph, fmt: str = "edgelist") -> str:
    """Canonical text form.  Edgelist carries weights and loops; graph6
    accepts simple unweighted graphs only."""
    if fmt == "edgelist":
        edges = g.edges()
        lines = [f"{g.n} {len(edges)}"]
        for u, v, w in edges:
            if w == 1.0:
                lines.append(f"{u} {v}")
            else:
                lines.append(f"{u} {v} {_format_weight(w)}")
        for u, w in g.loops():
            lines.append(f"loop {u} {_format_weight(w)}")
        return "\n".join(lines) + "\n"
    if fmt == "graph6":
        return _graph6_encode(g)
    raise ValueError(f"unknown format {fmt!r}")


def parse_graph(text: str, fmt: str = "edgelist") -> Graph:
    if fmt == "edgelist":
        return _parse_edgelist(text)
    if fmt == "graph6":
        return _graph6_decode(text)
    raise ValueError(f"unknown format {fmt!r}")


def _parse_edgelist(text: str) -> Graph:
    raw = text.splitlines()
    lines = [(i + 1, ln.strip()) for i, ln in enumerate(raw) if ln.strip()]
    if not lines:
        raise GraphParseError("empty input")
    lno, header = lines[0]
    parts = header.split()
    if len(parts) != 2:
        raise GraphParseError("header must be 'n m'", lno)
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError("header must be two integers", lno) from None
    if n < 1 or m < 0:
        raise GraphParseError("header out of range", lno)
    if len(lines) - 1 < m:
        raise GraphParseError(f"expected {m} edge lines", lno)
    w = np.zeros((n, n))
    seen: dict[tuple[int, int], float] = {}
    for lno, ln in lines[1 : 1 + m]:
        parts = ln.split()
        if len(parts) not in (2, 3):
            raise GraphParseError("edge line must be 'u v' or 'u v w'", lno)
        try:
            u, v = int(parts[0]), int(parts[1])
            wt = float(parts[2]) if len(parts) == 3 else 1.0
        except ValueError:
            raise GraphParseError("malformed edge line", lno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex index out of range in '{ln}'", lno)
        if u == v:
            raise GraphParseError("self edge; use a 'loop u w' line", lno)
        if wt == 0:
            raise GraphParseError("zero-weight edge", lno)
        key = (min(u, v), max(u, v))
        if key in seen and seen[key] != wt:
            raise GraphParseError(f"conflicting weights for edge {key}", lno)
        seen[key] = wt
        w[u, v] = wt
        w[v, u] = wt
    for lno, ln in lines[1 + m :]:
        parts = ln.split()
        if len(parts) != 3 or parts[0] != "loop":
            raise GraphParseError("expected 'loop u w'", lno)
        try:
            u, wt = int(parts[1]), float(parts[2])
        except ValueError:
            raise GraphParseError("malformed loop line", lno) from None
        if not 0 <= u < n:
            raise GraphParseError(f"vertex index out of range in '{ln}'", lno)
        w[u, u] = wt
    return Graph(w)


def _graph6_encode(g: Graph) -> str:
    if not g.is_simple_unweighted:
        raise ValueError("graph6 encodes simple unweighted graphs only")
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise ValueError("graph too large for this encoder")
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.weights[i, j] != 0 else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for bit in bits[k : k + 6]:
            val = (val << 1) | bit
        chars.append(chr(val + 63))
    return head + "".join(chars)


def _graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise GraphParseError("empty graph6 input")
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise GraphParseError(f"invalid graph6 character {ch!r}")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise GraphParseError("unsupported graph6 size form")
        n = ((ord(s[1]) - 63) << 12) | ((ord(s[2]) - 63) << 6) | (ord(s[3]) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n < 1:
        raise GraphParseError("graph6 with zero vertices")
    need = n * (n - 1) // 2
    if len(body) != (need + 5) // 6:
        raise GraphParseError("graph6 body has wrong length")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend((val >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    if any(bits[need:]):
        raise GraphParseError("graph6 padding bits must be zero")
    w = np.zeros((n, n))
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                w[i, j] = 1.0
                w[j, i] = 1.0
            k += 1
    return Graph(w)


# ---------------------------------------------------------------------------
# isomorphism and exhaustive enumeration (brute force, small n only)


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n:
        return False
    if g1.n > 8:
        raise ValueError("brute-force isomorphism is limited to n <= 8")
    d1 = sorted(g1.degree(v) for v in range(g1.n))
    d2 = sorted(g2.degree(v) for v in range(g2.n))
    if d1 != d2:
        return False
    w1, w2 = g1.weights, g2.weights
    for perm in itertools.permutations(range(g1.n)):
        if all(
            w1[i, j] == w2[perm[i], perm[j]]
            for i in range(g1.n)
            for j in range(i, g1.n)
        ):
            return True
    return False


def canonical_key(g: Graph, root: int | None = None) -> tuple:
    """Canonical form under relabelling: the minimum weight tuple over all
    permutations (fixing ``root`` to index 0 when given).  n <= 8 only."""
    n = g.n
    if n > 8:
        raise ValueError("canonical form is limited to n <= 8")
    w = g.weights
    best = None
    verts = list(range(n))
    if root is None:
        perms: Iterable = itertools.permutations(verts)
    else:
        rest = [v for v in verts if v != root]
        perms = ([root] + list(p) for p in itertools.permutations(rest))
    for order in perms:
        key = tuple(
            w[order[i], order[j]] for i in range(n) for j in range(i, n)
        )
        if best is None or key < best:
            best = key
    return (n, best)


def automorphism_orbits(g: Graph) -> list[list[int]]:
    """Vertex orbits under the automorphism group, brute force."""
    n = g.n
    if n > 8:
        raise ValueError("orbit computation is limited to n <= 8")
    w = g.weights
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in itertools.permutations(range(n)):
        if all(
            w[i, j] == w[perm[i], perm[j]] for i in range(n) for j in range(i, n)
        ):
            for v in range(n):
                ra, rb = find(v), find(perm[v])
                if ra != rb:
                    parent[rb] = ra
    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def connected_graphs(max_n: int) -> Iterator[Graph]:
    """All connected simple unweighted graphs with 1 <= n <= max_n, one per
    isomorphism class, in a deterministic order."""
    if max_n > 7:
        raise ValueError("exhaustive enumeration is limited to n <= 7")
    for n in range(1, max_n + 1):
        pairs = list(itertools.combinations(range(n), 2))
        seen: set[tuple] = set()
        found: list[tuple[tuple, Graph]] = []
        for mask in range(1 << len(pairs)):
            edges = [pairs[k] for k in range(len(pairs)) if mask >> k & 1]
            if len(edges) < n - 1:
                continue
            g = Graph.from_edges(n, edges)
            if not g.is_connected():
                continue
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
            found.append(((len(edges), key), g))
        found.sort(key=lambda item: item[0])
        for _, g in found:
            yield g


def marked_graphs(max_n: int) -> Iterator[tuple[Graph, int]]:
    """Connected graphs with a marked vertex, deduplicated by rooted
    isomorphism (one representative per vertex orbit)."""
    for g in connected_graphs(max_n):
        for orbit in automorphism_orbits(g):
            yield g, orbit[0]
