"""Split a free basis of the normal core ``I`` as ``(I ∩ H) * J``.

The edges of I's cover lying over the core of ``H`` form the marked set
``delta``. A spanning tree grown inside the base component of ``delta``
first makes the non-tree edges of that component a basis of ``I ∩ H``;
every other non-tree edge goes to ``J``. Because ``I`` is free on the
combined basis, deleting ``J`` letters is the retraction ``I -> I ∩ H``
whose kernel is the normal closure ``L`` of ``J`` in ``I``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CoveringMapInvalid, NotInSubgroup
from .stallings import CoreGraph, SpanningTree, spanning_tree
from .words import Word, free_reduce


def preimage_mark(cover_i: CoreGraph, covering_map, h_edges, cover_k: CoreGraph) -> frozenset:
    """Edges of ``cover_i`` whose image under ``covering_map`` lies in ``h_edges``."""
    delta = set()
    for u, g, v in cover_i.edges():
        pu, pv = covering_map[u], covering_map[v]
        if cover_k.fwd[g][pu] != pv:
            raise CoveringMapInvalid(f"edge {(u, g, v)} maps to non-edge {(pu, g, pv)}")
        if (pu, g, pv) in h_edges:
            delta.add((u, g, v))
    return frozenset(delta)


@dataclass
class FreeFactorization:
    cover_i: CoreGraph
    tree: SpanningTree
    delta: frozenset
    ih_edges: tuple
    j_edges: tuple
    basis_ih: tuple
    basis_j: tuple
    letter_of: dict  # non-tree edge -> abstract letter index (1-based)
    _table: list = field(default=None, repr=False)
    _ih_table: list = field(default=None, repr=False)

    def __post_init__(self):
        g = self.cover_i
        nxt, emit = {}, {}
        for k in range(g.rank):
            x = k + 1
            nxt[x] = list(g.fwd[k])
            nxt[-x] = list(g.bwd[k])
            emit[x] = [self.letter_of.get((v, k, g.fwd[k][v]), 0) for v in range(g.n)]
            emit[-x] = [-self.letter_of.get((g.bwd[k][v], k, v), 0) for v in range(g.n)]
        # indexed by signed letter (negative indices wrap); ih_table zeroes J letters
        n = len(self.basis_ih)
        table = [None] * (2 * g.rank + 1)
        ih_table = [None] * (2 * g.rank + 1)
        for x in nxt:
            table[x] = list(zip(nxt[x], emit[x]))
            ih_table[x] = [(t, e if -n <= e <= n else 0) for t, e in table[x]]
        self._table, self._ih_table = table, ih_table

    @property
    def n_ih(self):
        return len(self.basis_ih)

    @property
    def rank_i(self):
        return len(self.basis_ih) + len(self.basis_j)

    @property
    def basis(self):
        return self.basis_ih + self.basis_j

    def letter_name(self, x):
        k = abs(x)
        name = f"h{k}" if k <= self.n_ih else f"j{k - self.n_ih}"
        return name if x > 0 else name + "^-1"

    def trace(self, w, start=0):
        """``(end_vertex, abstract letters crossed)`` reading ``w`` from ``start``.

        ``w`` may be a Word or a raw letter sequence; the abstract letters
        come back freely reduced.
        """
        v, table = start, self._table
        out = []
        for x in w.letters if isinstance(w, Word) else w:
            v, e = table[x][v]
            if e:
                if out and out[-1] == -e:
                    out.pop()
                else:
                    out.append(e)
        return v, tuple(out)

    def in_i(self, w: Word) -> bool:
        return self.cover_i.read(w) == 0

    def express(self, w) -> tuple:
        end, seq = self.trace(w)
        if end != 0:
            raise NotInSubgroup(f"{w} is not in the normal core")
        return seq

    def expand(self, seq) -> Word:
        out = Word(self.cover_i.rank)
        basis = self.basis
        for x in seq:
            b = basis[abs(x) - 1]
            out = out * (b if x > 0 else ~b)
        return out

    def retract(self, seq) -> tuple:
        """Delete ``J`` letters and freely reduce: the map ``I -> I ∩ H``."""
        n = self.n_ih
        return free_reduce([x for x in seq if -n <= x <= n])

    def in_l(self, w: Word) -> bool:
        return self.in_l_letters(w.letters)

    def in_l_letters(self, letters) -> bool:
        """``in_l`` on a raw, possibly unreduced, letter sequence."""
        v, table = 0, self._ih_table
        stack = []
        for x in letters:
            v, e = table[x][v]
            if e:
                if stack and stack[-1] == -e:
                    stack.pop()
                else:
                    stack.append(e)
        return v == 0 and not stack


def factorize(cover_i: CoreGraph, delta) -> FreeFactorization:
    delta = frozenset(delta)
    tree = spanning_tree(cover_i, first=delta)
    inside = tree.first_part
    ih, j = [], []
    for e in cover_i.edges():
        if e in tree.tree_edges:
            continue
        (ih if e in delta and e[0] in inside else j).append(e)
    letter_of = {e: k + 1 for k, e in enumerate(ih + j)}
    rank = cover_i.rank
    return FreeFactorization(
        cover_i=cover_i,
        tree=tree,
        delta=delta,
        ih_edges=tuple(ih),
        j_edges=tuple(j),
        basis_ih=tuple(tree.edge_word(e, rank) for e in ih),
        basis_j=tuple(tree.edge_word(e, rank) for e in j),
        letter_of=letter_of,
    )


def express_in_basis(w: Word, fac: FreeFactorization) -> tuple:
    return fac.express(w)


def in_l(w: Word, fac: FreeFactorization) -> bool:
    return fac.in_l(w)
