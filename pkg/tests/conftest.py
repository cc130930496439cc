"""Shared helpers: a catalog of non-isomorphic trees, random ascending
labelings, and the two-sided peeling example tree."""

from __future__ import annotations

from functools import lru_cache

from lsstree.treekit import LabeledTree, ascending_labeling, relabel


def _canonical(n, edges):
    """Isomorphism key: the minimal rooted encoding over the centroids."""
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    if n == 1:
        return "()"

    def centroids():
        size = [0] * (n + 1)
        order = [1]
        parent = {1: 0}
        for v in order:
            for w in adj[v]:
                if w not in parent:
                    parent[w] = v
                    order.append(w)
        best, out = n + 1, []
        for v in reversed(order):
            size[v] = 1 + sum(size[w] for w in adj[v] if parent.get(w) == v)
        for v in range(1, n + 1):
            heavy = max(
                [n - size[v]] + [size[w] for w in adj[v] if parent.get(w) == v],
                default=0,
            )
            if heavy < best:
                best, out = heavy, [v]
            elif heavy == best:
                out.append(v)
        return out

    def encode(root):
        parent = {root: 0}
        order = [root]
        for v in order:
            for w in adj[v]:
                if w not in parent:
                    parent[w] = v
                    order.append(w)
        label = {}
        for v in reversed(order):
            kids = sorted(label[w] for w in adj[v] if parent.get(w) == v)
            label[v] = "(" + "".join(kids) + ")"
        return label[root]

    return min(encode(c) for c in centroids())


@lru_cache(maxsize=None)
def _catalog(max_n):
    """All non-isomorphic trees up to max_n vertices, grown leaf by leaf."""
    levels = {1: [()]}
    for n in range(2, max_n + 1):
        seen = {}
        for edges in levels[n - 1]:
            for attach in range(1, n):
                cand = edges + ((attach, n),)
                key = _canonical(n, cand)
                if key not in seen:
                    seen[key] = cand
        levels[n] = [seen[k] for k in sorted(seen)]
    return levels


def all_trees(n):
    """Non-isomorphic trees on exactly n vertices."""
    return [LabeledTree(n, list(edges)) for edges in _catalog(n)[n]]


def trees_up_to(max_n):
    out = []
    for n in range(1, max_n + 1):
        out.extend(all_trees(n))
    return out


def ascending(tree):
    """BFS ascending relabeling of a tree."""
    return relabel(tree, ascending_labeling(tree))


def random_ascending_labeling(tree, rng):
    """A random connected growth order; always an ascending labeling."""
    n = tree.n
    start = rng.randrange(1, n + 1)
    label = [0] * (n + 1)
    label[start] = 1
    frontier = set(tree.adj[start])
    nxt = 2
    while frontier:
        v = rng.choice(sorted(frontier))
        label[v] = nxt
        nxt += 1
        frontier.discard(v)
        frontier |= {w for w in tree.adj[v] if label[w] == 0}
    return tuple(label[1:])


def path_tree(n):
    return LabeledTree(n, [(i, i + 1) for i in range(1, n)])


def star_tree(n, center=1):
    return LabeledTree(n, [(center, v) for v in range(1, n + 1) if v != center])


def double_broom_tree(chain=3):
    """Two mirrored three-level brooms joined at the top, with one leaf on
    each side extended by a chain; peels in exactly two layers."""
    edges = []
    counter = [0]

    def new():
        counter[0] += 1
        return counter[0]

    c0, c1 = new(), new()
    edges.append((c0, c1))
    extenders = []
    for side in (c0, c1):
        for _ in range(2):
            branch = new()
            edges.append((side, branch))
            for _ in range(2):
                attach = new()
                edges.append((branch, attach))
                leaves = []
                for _ in range(2):
                    leaf = new()
                    edges.append((attach, leaf))
                    leaves.append(leaf)
        extenders.append(leaves[-1])
    for base in extenders:
        cur = base
        for _ in range(chain):
            w = new()
            edges.append((cur, w))
            cur = w
    return LabeledTree(counter[0], edges)
