import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fgwitness.errors import CoreTooLarge
from fgwitness.hall import complete
from fgwitness.normal_core import (
    PermRep,
    cayley_cover,
    core_closure,
    coset_reps,
    perm_rep,
    reps_are_distinct,
)
from fgwitness.stallings import basis_from_tree, build_core, membership, rose
from fgwitness.words import all_words, conjugate, reduce

from conftest import CORPUS, words


def k_cover(texts, rank=2):
    return complete(build_core(words(texts, rank), rank)).cover


def brute_closure(gens):
    """Close a set of permutations under composition by saturation."""
    n = len(gens[0])
    group = {tuple(range(n))} | set(gens)
    while True:
        new = {tuple(q[p[i]] for i in range(n)) for p in group for q in group} - group
        if not new:
            return group
        group |= new


def test_perm_rep_examples():
    assert perm_rep(k_cover(["aa", "ab"])).sigma == ((1, 0), (1, 0))
    assert perm_rep(rose(2)).sigma == ((0,), (0,))
    assert perm_rep(k_cover(["a", "baB", "bb"])).sigma == ((0, 1), (1, 0))


def test_perm_rep_needs_cover():
    with pytest.raises(ValueError):
        perm_rep(build_core(words(["aa"]), 2))


def test_closure_examples():
    c = core_closure(perm_rep(k_cover(["aa", "ab"])))
    assert c.elements == ((0, 1), (1, 0))
    assert c.m == 2
    assert core_closure(perm_rep(rose(2))).m == 1
    s3 = PermRep(3, ((1, 2, 0), (1, 0, 2)))
    c = core_closure(s3)
    assert c.m == 6
    assert set(c.elements) == brute_closure(list(s3.sigma))
    assert c.elements[0] == (0, 1, 2)


def test_closure_cap():
    s3 = PermRep(3, ((1, 2, 0), (1, 0, 2)))
    with pytest.raises(CoreTooLarge):
        core_closure(s3, cap=5)
    assert core_closure(s3, cap=6).m == 6


def test_cayley_cover_examples():
    c2 = cayley_cover(core_closure(perm_rep(k_cover(["aa", "ab"]))), 2)
    assert set(c2.edges()) == {(0, 0, 1), (1, 0, 0), (0, 1, 1), (1, 1, 0)}
    assert cayley_cover(core_closure(perm_rep(rose(2))), 2) == rose(2)
    c6 = cayley_cover(core_closure(PermRep(3, ((1, 2, 0), (1, 0, 2)))), 2)
    assert c6.is_cover() and c6.n == 6
    assert c6.subgroup_rank == 7


def test_coset_reps_examples():
    c2 = cayley_cover(core_closure(perm_rep(k_cover(["aa", "ab"]))), 2)
    assert [str(b) for b in coset_reps(c2)] == ["", "a"]
    assert [str(b) for b in coset_reps(rose(2))] == [""]
    rep = PermRep(3, ((1, 2, 0), (1, 0, 2)))
    closure = core_closure(rep)
    reps = coset_reps(cayley_cover(closure, 2))
    assert len(reps) == 6 and reps[0].is_identity()
    assert reps_are_distinct(reps, rep)
    assert {rep.act(b) for b in reps} == set(closure.elements)


def _check_core(rank, cover_k, cap=10_000):
    rep = perm_rep(cover_k)
    closure = core_closure(rep, cap)
    cover_i = cayley_cover(closure, rank)
    reps = coset_reps(cover_i)
    m = closure.m
    assert cover_i.subgroup_rank == 1 + m * (rank - 1)
    assert m % cover_k.n == 0  # transitive action: orbit divides the group order
    for i, b in enumerate(reps):
        assert cover_i.read(b) == i
        assert rep.act(b) == closure.elements[i]
    assert {rep.act(b) for b in reps} == set(closure.elements)
    basis = basis_from_tree(cover_i).words
    for w in basis:
        assert membership(cover_k, w)  # I <= K
        assert rep.act(w) == tuple(range(cover_k.n))
    for f in all_words(rank, 4 if rank == 2 else 2):
        for w in basis:
            assert membership(cover_i, conjugate(w, f))


@pytest.mark.parametrize("name", list(CORPUS))
def test_normal_core_properties_corpus(name):
    _check_core(2, k_cover(CORPUS[name]))


gens_st = st.lists(
    st.lists(st.sampled_from([1, -1, 2, -2]), max_size=6).map(lambda xs: reduce(xs, 2)), max_size=3
)


@given(gens_st)
@settings(max_examples=25, deadline=None)
def test_normal_core_properties_random(gens):
    try:
        _check_core(2, complete(build_core(gens, 2)).cover, cap=60)
    except CoreTooLarge:
        assume(False)
