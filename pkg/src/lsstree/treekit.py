"""Trees on vertex set {1..n}: parsing, ascending labelings, path
enumeration, pendant-path peeling, and induced-subgraph helpers.

Vertex names double as labels throughout; relabeling a tree means
building a new tree whose edges carry the new names.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass


class TreeInputError(ValueError):
    """Base class for rejected tree input."""


class TreeParseError(TreeInputError):
    """The input text is not a well-formed tree description."""


class VertexRangeError(TreeInputError):
    """An edge mentions a vertex outside 1..n."""


class NotATreeError(TreeInputError):
    """The edge set is not a tree (count, duplicate, cycle, disconnected)."""


class AscendingLabelingError(ValueError):
    """The labeling is not ascending; carries the violating vertex."""

    def __init__(self, vertex):
        self.vertex = vertex
        super().__init__(
            f"labeling is not ascending: vertex {vertex} is not a pendant "
            f"of the subtree induced by 1..{vertex}"
        )


class LabeledTree:
    """A tree on vertices 1..n, validated at construction."""

    __slots__ = ("n", "edges", "adj")

    def __init__(self, n, edges):
        if not isinstance(n, int) or n < 1:
            raise TreeParseError(f"vertex count must be a positive integer, got {n!r}")
        canon = []
        seen = set()
        for e in edges:
            try:
                u, v = e
            except (TypeError, ValueError):
                raise TreeParseError(f"edge {e!r} is not a pair") from None
            if not isinstance(u, int) or not isinstance(v, int):
                raise TreeParseError(f"edge {e!r} has non-integer endpoints")
            if not (1 <= u <= n and 1 <= v <= n):
                raise VertexRangeError(f"edge ({u}, {v}) leaves the vertex range 1..{n}")
            if u == v:
                raise NotATreeError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise NotATreeError(f"duplicate edge {key}")
            seen.add(key)
            canon.append(key)
        if len(canon) != n - 1:
            raise NotATreeError(f"a tree on {n} vertices needs {n - 1} edges, got {len(canon)}")
        adj = {v: set() for v in range(1, n + 1)}
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        # n-1 edges and connected together imply acyclic
        reached = {1}
        queue = deque([1])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if w not in reached:
                    reached.add(w)
                    queue.append(w)
        if len(reached) != n:
            raise NotATreeError("the edge set is disconnected")
        self.n = n
        self.edges = tuple(sorted(canon))
        self.adj = {v: frozenset(ws) for v, ws in adj.items()}

    def degree(self, v):
        return len(self.adj[v])

    def neighbors(self, v):
        return self.adj[v]

    def pendants(self):
        """Vertices of degree one (the single vertex of a 1-vertex tree counts)."""
        if self.n == 1:
            return (1,)
        return tuple(v for v in range(1, self.n + 1) if len(self.adj[v]) == 1)

    def __eq__(self, other):
        return (
            isinstance(other, LabeledTree)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"LabeledTree(n={self.n}, edges={list(self.edges)})"

    def to_json(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges]}


def parse_tree(text):
    """Parse the plain text or JSON tree format into a LabeledTree.

    Text format: first token is n, followed by n-1 "u v" pairs in any
    order.  JSON format: {"n": int, "edges": [[u, v], ...]}.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    stripped = text.strip()
    if not stripped:
        raise TreeParseError("empty input")
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise TreeParseError(f"bad JSON: {exc}") from None
        if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
            raise TreeParseError('JSON tree needs keys "n" and "edges"')
        edges = doc["edges"]
        if not isinstance(edges, list):
            raise TreeParseError('"edges" must be a list of pairs')
        return LabeledTree(doc["n"], [tuple(e) for e in edges])
    tokens = stripped.split()
    try:
        values = [int(tok) for tok in tokens]
    except ValueError as exc:
        raise TreeParseError(f"non-integer token: {exc}") from None
    n = values[0]
    rest = values[1:]
    if len(rest) % 2 != 0:
        raise TreeParseError("dangling vertex token after the edge list")
    edges = [(rest[i], rest[i + 1]) for i in range(0, len(rest), 2)]
    return LabeledTree(n, edges)


@dataclass(frozen=True)
class TreePath:
    """A path given by its vertex sequence, endpoints canonically ordered."""

    vertices: tuple

    def __post_init__(self):
        verts = tuple(self.vertices)
        if not verts:
            raise ValueError("a path needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise ValueError(f"path vertices repeat: {verts}")
        if verts[0] > verts[-1]:
            verts = verts[::-1]
        object.__setattr__(self, "vertices", verts)

    @property
    def length(self):
        return len(self.vertices) - 1

    @property
    def odd_length(self):
        return self.length % 2 == 1

    @property
    def endpoints(self):
        return (self.vertices[0], self.vertices[-1])

    @property
    def interior(self):
        return self.vertices[1:-1]

    @property
    def vertex_set(self):
        return frozenset(self.vertices)

    def is_path_of(self, tree):
        """True when consecutive vertices are adjacent in the tree."""
        return all(
            b in tree.adj[a] for a, b in zip(self.vertices, self.vertices[1:])
        )

    def __repr__(self):
        return f"TreePath({list(self.vertices)})"


def ascending_violation(tree):
    """Largest k whose vertex breaks the ascending condition, or None."""
    deg = {v: tree.degree(v) for v in range(1, tree.n + 1)}
    removed = set()
    for k in range(tree.n, 1, -1):
        if deg[k] != 1:
            return k
        removed.add(k)
        for w in tree.adj[k]:
            if w not in removed:
                deg[w] -= 1
    return None


def is_ascending(tree):
    """True when, for each k = n..2, vertex k is a pendant of the subtree on 1..k."""
    return ascending_violation(tree) is None


def ascending_labeling(tree):
    """Relabeling by breadth-first order from vertex 1, ties by vertex number.

    Returns perm with perm[v-1] = new label of vertex v; the relabeled
    tree always satisfies is_ascending, because in BFS order every vertex
    has exactly one already-labeled neighbor (its parent).
    """
    label = [0] * (tree.n + 1)
    label[1] = 1
    nxt = 2
    queue = deque([1])
    while queue:
        v = queue.popleft()
        for w in sorted(tree.adj[v]):
            if label[w] == 0:
                label[w] = nxt
                nxt += 1
                queue.append(w)
    return tuple(label[1:])


def relabel(tree, perm):
    """Apply a vertex permutation (perm[v-1] = new name of v)."""
    if sorted(perm) != list(range(1, tree.n + 1)):
        raise ValueError("perm must be a permutation of 1..n")
    return LabeledTree(tree.n, [(perm[u - 1], perm[v - 1]) for u, v in tree.edges])


def path_between(tree, u, v):
    """The unique path from u to v, canonicalized."""
    if u == v:
        raise ValueError("path endpoints must be distinct")
    parent = {u: None}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            break
        for b in tree.adj[a]:
            if b not in parent:
                parent[b] = a
                queue.append(b)
    walk = [v]
    while walk[-1] != u:
        walk.append(parent[walk[-1]])
    return TreePath(tuple(reversed(walk)))


def all_paths(tree):
    """All n(n-1)/2 canonical paths, sorted by (first, last) endpoint."""
    out = []
    for u in range(1, tree.n + 1):
        # single BFS from u covers every path with smaller endpoint u
        parent = {u: None}
        queue = deque([u])
        orderv = []
        while queue:
            a = queue.popleft()
            orderv.append(a)
            for b in tree.adj[a]:
                if b not in parent:
                    parent[b] = a
                    queue.append(b)
        for v in range(u + 1, tree.n + 1):
            walk = [v]
            while walk[-1] != u:
                walk.append(parent[walk[-1]])
            out.append(TreePath(tuple(reversed(walk))))
    out.sort(key=lambda p: (p.vertices[0], p.vertices[-1]))
    return out


@dataclass(frozen=True)
class PendantLayer:
    """One peeling round: its maximal pendant paths, their vertices, and
    the neighboring vertices removed with them."""

    paths: tuple
    vertices: frozenset
    neighbors: frozenset


@dataclass(frozen=True)
class PendantLayers:
    layers: tuple

    @property
    def path_vertices(self):
        out = frozenset()
        for layer in self.layers:
            out |= layer.vertices
        return out

    @property
    def path_count(self):
        return sum(len(layer.paths) for layer in self.layers)


def pendant_decomposition(tree):
    """Iteratively peel maximal pendant paths and their attachment vertices.

    In each residual forest, a maximal pendant path is a maximal path all
    of whose vertices have at most two residual neighbors and which
    contains a residual vertex of degree <= 1 (an isolated residual
    vertex forms a single-vertex path).  The layer removes the path
    vertices together with their residual neighbors.
    """
    alive = set(range(1, tree.n + 1))
    adj = {v: set(tree.adj[v]) for v in alive}
    layers = []
    while alive:
        deg = {v: len(adj[v]) for v in alive}
        paths = []
        claimed = set()
        for v in sorted(alive):
            if deg[v] == 0:
                paths.append(TreePath((v,)))
                claimed.add(v)
        for p in sorted(v for v in alive if deg[v] == 1):
            if p in claimed:
                continue
            walk = [p]
            claimed.add(p)
            prev, cur = None, p
            while True:
                forward = [w for w in adj[cur] if w != prev]
                if not forward:
                    break
                w = forward[0]
                if deg[w] > 2:
                    break
                walk.append(w)
                claimed.add(w)
                prev, cur = cur, w
            paths.append(TreePath(tuple(walk)))
        path_vertices = set(claimed)
        boundary = set()
        for v in path_vertices:
            boundary |= adj[v]
        boundary -= path_vertices
        paths.sort(key=lambda p: p.vertices)
        layers.append(
            PendantLayer(tuple(paths), frozenset(path_vertices), frozenset(boundary))
        )
        gone = path_vertices | boundary
        alive -= gone
        for v in gone:
            for w in adj[v]:
                adj[w].discard(v)
            del adj[v]
    return PendantLayers(tuple(layers))


def induced_components(tree, vertices):
    """Number of connected components of the induced subgraph."""
    remaining = set(vertices)
    count = 0
    while remaining:
        count += 1
        start = remaining.pop()
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in tree.adj[v]:
                if w in remaining:
                    remaining.remove(w)
                    queue.append(w)
    return count


def is_independent(tree, vertices):
    """True when no tree edge has both endpoints in the set."""
    vs = set(vertices)
    return all(u not in vs or v not in vs for u, v in tree.edges)


def tree_from_pruefer(n, seq):
    """Decode a Pruefer sequence (entries in 1..n, length n-2)."""
    if n == 1:
        return LabeledTree(1, [])
    if len(seq) != n - 2:
        raise ValueError(f"Pruefer sequence for n={n} needs length {n - 2}")
    deg = [1] * (n + 1)
    for s in seq:
        deg[s] += 1
    import heapq

    leaves = [v for v in range(1, n + 1) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        deg[s] -= 1
        if deg[s] == 1:
            heapq.heappush(leaves, s)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((u, v))
    return LabeledTree(n, edges)


def random_tree(n, rng):
    """Uniform random labeled tree on n vertices from a seeded Random."""
    if n <= 2:
        return LabeledTree(n, [(1, 2)] if n == 2 else [])
    seq = [rng.randrange(1, n + 1) for _ in range(n - 2)]
    return tree_from_pruefer(n, seq)
