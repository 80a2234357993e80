"""Normal core of a finite-index subgroup via its coset permutation action.

``F`` acts on the right cosets of ``K`` (the vertices of K's cover). Words
act left to right: ``sigma_w = sigma_x1`` then ``sigma_x2`` and so on, so
``sigma_w(0)`` is the end of the path spelling ``w`` from the base. The
kernel of this action is the normal core ``I``; the image group acting on
itself by right multiplication is a cover whose subgroup is exactly ``I``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import CoreTooLarge
from .stallings import CoreGraph, spanning_tree

DEFAULT_CAP = 10_000


@dataclass(frozen=True)
class PermRep:
    degree: int
    sigma: tuple  # sigma[g] is a tuple permutation of range(degree)

    def act(self, w):
        """Permutation ``sigma_w`` as a tuple."""
        p = tuple(range(self.degree))
        for x in w.letters:
            s = self.sigma[x - 1] if x > 0 else _inverse(self.sigma[-x - 1])
            p = tuple(s[i] for i in p)
        return p


def _inverse(p):
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_rep(cover: CoreGraph) -> PermRep:
    if not cover.is_cover():
        raise ValueError("permutation representation needs a complete cover")
    return PermRep(cover.n, tuple(tuple(row) for row in cover.fwd))


@dataclass(frozen=True)
class GroupClosure:
    elements: tuple  # identity first, BFS discovery order
    cayley: tuple  # cayley[g][i] = index of elements[i] * sigma_g
    covering_map: tuple  # element index -> image of vertex 0

    @property
    def m(self):
        return len(self.elements)


def core_closure(rep: PermRep, cap: int = DEFAULT_CAP) -> GroupClosure:
    if cap < 1:
        raise ValueError("cap must be positive")
    identity = tuple(range(rep.degree))
    elements = [identity]
    index = {identity: 0}
    rank = len(rep.sigma)
    cayley = [[] for _ in range(rank)]
    i = 0
    while i < len(elements):
        p = elements[i]
        for g in range(rank):
            s = rep.sigma[g]
            q = tuple(s[x] for x in p)
            j = index.get(q)
            if j is None:
                if len(elements) >= cap:
                    raise CoreTooLarge(cap, rep.degree)
                j = len(elements)
                index[q] = j
                elements.append(q)
            cayley[g].append(j)
        i += 1
    covering = tuple(p[0] for p in elements)
    return GroupClosure(tuple(elements), tuple(tuple(c) for c in cayley), covering)


def cayley_cover(closure: GroupClosure, rank: int) -> CoreGraph:
    edges = [(i, g, closure.cayley[g][i]) for g in range(rank) for i in range(closure.m)]
    return CoreGraph(rank, closure.m, edges)


def coset_reps(cover_i: CoreGraph) -> tuple:
    """One word per vertex: the BFS tree path from the base."""
    tree = spanning_tree(cover_i)
    return tuple(tree.paths[v] for v in range(cover_i.n))


def reps_are_distinct(reps, rep: PermRep) -> bool:
    return len({rep.act(b) for b in reps}) == len(reps)
