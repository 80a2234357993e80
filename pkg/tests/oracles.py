"""Brute-force reference computations, independent of the package internals.

Words here are plain tuples of signed ints (``g + 1`` / ``-(g + 1)``).
"""
from itertools import product


def naive_reduce(seq):
    """Repeatedly delete the leftmost cancelling pair until none is left."""
    seq = list(seq)
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            if seq[i] == -seq[i + 1]:
                del seq[i : i + 2]
                changed = True
                break
    return tuple(seq)


def inv(seq):
    return tuple(-x for x in reversed(seq))


def mul(*seqs):
    out = ()
    for s in seqs:
        out = naive_reduce(out + tuple(s))
    return out


def subgroup_ball(generators, max_factors):
    """Every reduced product of at most ``max_factors`` generators or inverses."""
    gens = [tuple(g) for g in generators if g]
    gens += [inv(g) for g in gens]
    found = {()}
    frontier = {()}
    for _ in range(max_factors):
        frontier = {naive_reduce(u + g) for u in frontier for g in gens}
        found |= frontier
    return found


def all_reduced(rank, max_len):
    letters = [s * (g + 1) for g in range(rank) for s in (1, -1)]
    out = [()]
    for n in range(1, max_len + 1):
        for t in product(letters, repeat=n):
            if all(t[i] != -t[i + 1] for i in range(n - 1)):
                out.append(t)
    return out


def parse(text):
    return tuple((ord(c) - 96) if c.islower() else -(ord(c) - 64) for c in text)


def render(seq):
    return "".join(chr(96 + x) if x > 0 else chr(64 - x) for x in seq)


# Worked example F(a, b), H = <aa, ab>, written out by hand.
# Cayley cover of I: two vertices, both generators swap them.
# Spanning tree {a: 0 -> 1}; non-tree edges
#   h1 = a: 1 -> 0   (word aa)
#   h2 = b: 1 -> 0   (word ab)
#   j1 = b: 0 -> 1   (word bA)
WORKED_NEXT = {1: {0: 1, 1: 0}, 2: {0: 1, 1: 0}}
WORKED_LABEL = {(1, 1, 0): "h1", (2, 1, 0): "h2", (2, 0, 1): "j1"}


def worked_trace(seq):
    """Abstract basis letters crossed when reading ``seq`` from vertex 0."""
    v = 0
    out = []
    for x in seq:
        g = abs(x)
        if x > 0:
            u, w = v, WORKED_NEXT[g][v]
            lab = WORKED_LABEL.get((g, u, w))
            if lab:
                out.append(lab)
        else:
            # both generators are involutions on two points
            u, w = WORKED_NEXT[g][v], v
            lab = WORKED_LABEL.get((g, u, w))
            if lab:
                out.append(lab + "^-1")
        v = WORKED_NEXT[g][v]
    return v, out


def _free_reduce_names(names):
    out = []
    for s in names:
        partner = s[:-3] if s.endswith("^-1") else s + "^-1"
        if out and out[-1] == partner:
            out.pop()
        else:
            out.append(s)
    return out


def worked_in_l(seq):
    end, names = worked_trace(seq)
    if end != 0:
        return False
    return not _free_reduce_names([s for s in names if not s.startswith("j")])


def worked_in_n(seq, reps=((), (1,))):
    return all(worked_in_l(mul(b, seq, inv(b))) for b in reps)
