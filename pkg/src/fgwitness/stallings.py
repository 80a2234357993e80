"""Stallings core graphs of finitely generated subgroups of a free group.

A graph stores, for every generator ``g``, a partial injection
``fwd[g]: V -> V`` (``-1`` where undefined) together with its inverse
``bwd[g]``. Vertex 0 is the basepoint. Edges are triples ``(u, g, v)``
meaning ``u --g--> v``; the global edge order is ``(u, g)``.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

from .errors import AlphabetMismatch, LetterOutOfRange
from .words import Word, invert, multiply

INFINITE = math.inf


class CoreGraph:
    """Folded, based, edge-labelled graph. Immutable after construction."""

    __slots__ = ("rank", "n", "fwd", "bwd", "_edges")

    def __init__(self, rank, n, edges):
        if n < 1:
            raise ValueError("a core graph has at least the base vertex")
        fwd = [[-1] * n for _ in range(rank)]
        bwd = [[-1] * n for _ in range(rank)]
        for u, g, v in edges:
            if not (0 <= u < n and 0 <= v < n and 0 <= g < rank):
                raise ValueError(f"bad edge {(u, g, v)} for n={n}, rank={rank}")
            if fwd[g][u] != -1 and fwd[g][u] != v or bwd[g][v] != -1 and bwd[g][v] != u:
                raise ValueError(f"edge {(u, g, v)} breaks foldedness")
            fwd[g][u] = v
            bwd[g][v] = u
        self.rank = rank
        self.n = n
        self.fwd = tuple(tuple(row) for row in fwd)
        self.bwd = tuple(tuple(row) for row in bwd)
        self._edges = tuple(
            (u, g, self.fwd[g][u]) for u in range(n) for g in range(rank) if self.fwd[g][u] != -1
        )

    @property
    def vertex_count(self):
        return self.n

    def edges(self):
        """All edges sorted by ``(source, generator)``."""
        return self._edges

    @property
    def edge_count(self):
        return len(self._edges)

    @property
    def subgroup_rank(self):
        return self.edge_count - self.n + 1

    def is_cover(self):
        return all(-1 not in row for row in self.fwd)

    def step(self, v, x):
        """Follow signed letter ``x`` from ``v``; ``-1`` if there is no edge."""
        if x > 0:
            return self.fwd[x - 1][v]
        return self.bwd[-x - 1][v]

    def read(self, w, start=0):
        """End vertex of the path spelling ``w`` from ``start``, or ``None``."""
        v = start
        fwd, bwd = self.fwd, self.bwd
        for x in w.letters if isinstance(w, Word) else w:
            v = fwd[x - 1][v] if x > 0 else bwd[-x - 1][v]
            if v < 0:
                return None
        return v

    def __contains__(self, w):
        return membership(self, w)

    def __eq__(self, other):
        return isinstance(other, CoreGraph) and (self.rank, self.n, self._edges) == (
            other.rank,
            other.n,
            other._edges,
        )

    def __hash__(self):
        return hash((self.rank, self.n, self._edges))

    def __repr__(self):
        return f"CoreGraph(rank={self.rank}, n={self.n}, edges={list(self._edges)})"


# folding ---------------------------------------------------------------------


def _fold(n, rank, edges):
    """Identify vertices until every label is a partial injection.

    Returns ``(find, edge_set)`` with edges expressed on union-find roots.
    """
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    incident = [[] for _ in range(n)]
    for i, (u, _, v) in enumerate(edges):
        incident[u].append(i)
        if v != u:
            incident[v].append(i)
    out_map = {}
    in_map = {}
    stack = list(range(len(edges) - 1, -1, -1))

    def union(x, y):
        if len(incident[x]) < len(incident[y]):
            x, y = y, x
        parent[y] = x
        for g in range(rank):
            out_map.pop((y, g), None)
            in_map.pop((y, g), None)
        stack.extend(incident[y])
        incident[x].extend(incident[y])
        incident[y] = []

    while stack:
        i = stack.pop()
        u, g, v = edges[i]
        ru, rv = find(u), find(v)
        t = out_map.get((ru, g))
        if t is not None and find(t) != rv:
            union(find(t), rv)
            stack.append(i)
            continue
        s = in_map.get((rv, g))
        if s is not None and find(s) != ru:
            union(find(s), ru)
            stack.append(i)
            continue
        out_map[(ru, g)] = rv
        in_map[(rv, g)] = ru

    roots = {find(x) for x in range(n)}
    result = {(ru, g, find(v)) for (ru, g), v in out_map.items() if ru in roots}
    return find, result


def fold_edges(n, rank, edges):
    edges = list(edges)
    find, folded = _fold(n, rank, edges)
    return find(0), folded


def _trim_and_relabel(rank, base, edges):
    """Drop hanging trees (keeping ``base``) and renumber canonically."""
    edges = set(edges)
    degree = {}
    for u, _, v in edges:
        degree[u] = degree.get(u, 0) + 1
        degree[v] = degree.get(v, 0) + 1
    degree.setdefault(base, 0)
    adj = {}
    for e in edges:
        adj.setdefault(e[0], set()).add(e)
        adj.setdefault(e[2], set()).add(e)
    queue = [x for x, d in degree.items() if d <= 1 and x != base]
    while queue:
        x = queue.pop()
        for e in list(adj.get(x, ())):
            if e not in edges:
                continue
            edges.discard(e)
            for y in (e[0], e[2]):
                adj[y].discard(e)
                degree[y] -= 1
                if y != base and degree[y] == 1:
                    queue.append(y)
        degree[x] = 0
    return relabel(rank, base, edges)


def relabel(rank, base, edges):
    """Canonical BFS renumbering from ``base``; keeps only its component."""
    fwd = [dict() for _ in range(rank)]
    bwd = [dict() for _ in range(rank)]
    for u, g, v in edges:
        fwd[g][u] = v
        bwd[g][v] = u
    new_id = {base: 0}
    order = [base]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        for g in range(rank):
            for y in (fwd[g].get(x), bwd[g].get(x)):
                if y is not None and y not in new_id:
                    new_id[y] = len(order)
                    order.append(y)
    mapped = [(new_id[u], g, new_id[v]) for u, g, v in edges if u in new_id]
    return CoreGraph(rank, len(order), mapped)


def build_core(generators, rank):
    """Stallings folding of the wedge of petals spelled by ``generators``."""
    edges = []
    n = 1
    for w in generators:
        if w.rank != rank:
            raise AlphabetMismatch(f"generator rank {w.rank} != {rank}")
        letters = w.letters
        if not letters:
            continue
        prev = 0
        for k, x in enumerate(letters):
            if k == len(letters) - 1:
                nxt = 0
            else:
                nxt = n
                n += 1
            if abs(x) > rank:
                raise LetterOutOfRange(f"letter {x} outside rank {rank}")
            if x > 0:
                edges.append((prev, x - 1, nxt))
            else:
                edges.append((nxt, -x - 1, prev))
            prev = nxt
    base, folded = fold_edges(n, rank, edges)
    return _trim_and_relabel(rank, base, folded)


def trivial_graph(rank):
    return CoreGraph(rank, 1, ())


def rose(rank):
    return CoreGraph(rank, 1, [(0, g, 0) for g in range(rank)])


def membership(graph, w):
    if w.rank != graph.rank:
        raise AlphabetMismatch(f"word rank {w.rank} != graph rank {graph.rank}")
    return graph.read(w) == 0


def index_or_infinite(graph):
    """Index of the subgroup: vertex count for a cover, else ``INFINITE``."""
    return graph.n if graph.is_cover() else INFINITE


# spanning trees and bases ----------------------------------------------------


@dataclass
class SpanningTree:
    order: list
    parent: dict  # vertex -> tree edge reaching it
    paths: dict  # vertex -> Word spelled by the tree path from base
    tree_edges: frozenset
    first_part: frozenset = frozenset()  # vertices reached inside the priority edges

    def edge_word(self, e, rank):
        u, g, v = e
        gw = Word(rank, (g + 1,))
        return multiply(multiply(self.paths[u], gw), invert(self.paths[v]))


def spanning_tree(graph, first=None):
    """Deterministic BFS spanning tree from the base.

    Neighbours are explored per generator ascending, out-edge before
    in-edge. With ``first``, the tree is grown inside that edge set before
    being extended over the whole graph.
    """
    rank = graph.rank
    paths = {0: Word(rank)}
    parent = {}
    order = [0]
    tree = set()

    def grow(allowed, start):
        i = start
        while i < len(order):
            x = order[i]
            i += 1
            for g in range(rank):
                gen = Word(rank, (g + 1,))
                y = graph.fwd[g][x]
                if y != -1 and y not in paths and (allowed is None or (x, g, y) in allowed):
                    e = (x, g, y)
                    paths[y] = multiply(paths[x], gen)
                    parent[y] = e
                    tree.add(e)
                    order.append(y)
                y = graph.bwd[g][x]
                if y != -1 and y not in paths and (allowed is None or (y, g, x) in allowed):
                    e = (y, g, x)
                    paths[y] = multiply(paths[x], invert(gen))
                    parent[y] = e
                    tree.add(e)
                    order.append(y)

    first_part = frozenset()
    if first is not None:
        grow(frozenset(first), 0)
        first_part = frozenset(order)
    grow(None, 0)
    return SpanningTree(order, parent, paths, frozenset(tree), first_part)


@dataclass
class Basis:
    words: list
    tree_edges: frozenset
    non_tree_edges: list = field(default_factory=list)

    def __len__(self):
        return len(self.words)


def basis_from_tree(graph, tree=None):
    """Free basis read off the non-tree edges, in ``(source, generator)`` order."""
    tree = tree or spanning_tree(graph)
    non_tree = [e for e in graph.edges() if e not in tree.tree_edges]
    words = [tree.edge_word(e, graph.rank) for e in non_tree]
    return Basis(words, tree.tree_edges, non_tree)


# intersections ---------------------------------------------------------------


def pullback(g1, g2):
    """Core graph of the intersection of the two subgroups."""
    if g1.rank != g2.rank:
        raise AlphabetMismatch(f"rank {g1.rank} != {g2.rank}")
    rank = g1.rank
    start = (0, 0)
    seen = {start}
    queue = deque([start])
    edges = set()
    while queue:
        p, q = queue.popleft()
        for g in range(rank):
            a, b = g1.fwd[g][p], g2.fwd[g][q]
            if a != -1 and b != -1:
                edges.add(((p, q), g, (a, b)))
                if (a, b) not in seen:
                    seen.add((a, b))
                    queue.append((a, b))
            a, b = g1.bwd[g][p], g2.bwd[g][q]
            if a != -1 and b != -1:
                edges.add(((a, b), g, (p, q)))
                if (a, b) not in seen:
                    seen.add((a, b))
                    queue.append((a, b))
    return _trim_and_relabel(rank, start, edges)


def canonical_form(graph):
    """Byte encoding that is equal exactly for isomorphic based graphs."""
    g = relabel(graph.rank, 0, graph.edges())
    body = ";".join(f"{u},{k},{v}" for u, k, v in g.edges())
    return f"r{g.rank}|n{g.n}|{body}".encode("ascii")


def to_dot(graph, name="G"):
    """Graphviz DOT text; edges sorted by ``(source, generator)``."""
    from .words import render_letters

    lines = [f"digraph {name} {{"]
    for v in range(graph.n):
        shape = "doublecircle" if v == 0 else "circle"
        lines.append(f"  {v} [shape={shape}];")
    for u, g, v in graph.edges():
        lines.append(f'  {u} -> {v} [label="{render_letters([g + 1], graph.rank)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
