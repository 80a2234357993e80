"""Marshall Hall completion: embed a core graph into a finite cover.

Completion adds edges only, never vertices, so the overgroup ``K`` has
index equal to the vertex count of the core of ``H``, and a spanning tree
of the core stays a spanning tree of the cover. The extra non-tree edges
give a free basis of a complement ``Q`` with ``K = H * Q``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .stallings import CoreGraph, basis_from_tree, spanning_tree


@dataclass(frozen=True)
class HallResult:
    cover: CoreGraph
    h_edges: frozenset
    added_edges: tuple
    basis_h: tuple
    basis_q: tuple

    @property
    def k_index(self):
        return self.cover.n

    @property
    def k_rank(self):
        return len(self.basis_h) + len(self.basis_q)


def deficiencies(core, g):
    """Vertices lacking an outgoing / incoming ``g``-edge, ascending."""
    missing_out = [v for v in range(core.n) if core.fwd[g][v] == -1]
    missing_in = [v for v in range(core.n) if core.bwd[g][v] == -1]
    return missing_out, missing_in


def complete(core: CoreGraph) -> HallResult:
    added = []
    for g in range(core.rank):
        missing_out, missing_in = deficiencies(core, g)
        # a partial injection on a finite set misses as many sources as targets
        assert len(missing_out) == len(missing_in), (g, missing_out, missing_in)
        added.extend((u, g, v) for u, v in zip(missing_out, missing_in))
    h_edges = frozenset(core.edges())
    cover = CoreGraph(core.rank, core.n, list(core.edges()) + added)
    tree = spanning_tree(cover, first=h_edges)
    basis = basis_from_tree(cover, tree)
    basis_h, basis_q = [], []
    for e, w in zip(basis.non_tree_edges, basis.words):
        (basis_h if e in h_edges else basis_q).append(w)
    return HallResult(cover, h_edges, tuple(sorted(added)), tuple(basis_h), tuple(basis_q))
