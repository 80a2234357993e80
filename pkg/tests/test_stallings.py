import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fgwitness.hall import complete
from fgwitness.stallings import (
    INFINITE,
    CoreGraph,
    basis_from_tree,
    build_core,
    canonical_form,
    index_or_infinite,
    membership,
    pullback,
    relabel,
    rose,
)
from fgwitness.words import Word, all_words, parse_word, reduce

from conftest import CORPUS, words
from oracles import subgroup_ball

H_EX = ["aa", "ab"]


def core(texts, rank=2):
    return build_core(words(texts, rank), rank)


def test_build_core_worked_example():
    g = core(H_EX)
    assert g.n == 2
    assert set(g.edges()) == {(0, 0, 1), (1, 0, 0), (1, 1, 0)}


def test_build_core_trivial():
    g = core([])
    assert g.n == 1 and g.edges() == ()
    assert core(["", "aA"]).edges() == ()


def test_build_core_finite_index_example():
    g = core(["a", "baB", "bb"])
    assert set(g.edges()) == {(0, 0, 0), (1, 0, 1), (0, 1, 1), (1, 1, 0)}


def test_build_core_keeps_base_of_degree_one():
    g = core(["abA"])
    assert set(g.edges()) == {(0, 0, 1), (1, 1, 1)}


def test_build_core_rejects_wrong_rank():
    from fgwitness.errors import AlphabetMismatch

    with pytest.raises(AlphabetMismatch):
        build_core([parse_word("a", 3)], 2)


@pytest.mark.parametrize("w, expected", [("aa", True), ("a", False), ("", True), ("abaa", True), ("b", False)])
def test_membership_examples(w, expected):
    assert membership(core(H_EX), parse_word(w, 2)) is expected


def test_index_examples():
    assert index_or_infinite(core(H_EX)) == INFINITE
    assert index_or_infinite(core(["a", "baB", "bb"])) == 2
    assert index_or_infinite(rose(2)) == 1


def test_basis_from_tree_examples():
    b = basis_from_tree(core(H_EX))
    assert b.tree_edges == {(0, 0, 1)}
    assert [str(w) for w in b.words] == ["aa", "ab"]
    assert [str(w) for w in basis_from_tree(rose(2)).words] == ["a", "b"]


def test_basis_of_completed_cover():
    cover = complete(core(H_EX)).cover
    b = basis_from_tree(cover)
    # non-tree edges are listed in (source, generator) order
    assert b.non_tree_edges == [(0, 1, 1), (1, 0, 0), (1, 1, 0)]
    assert [str(w) for w in b.words] == ["bA", "aa", "ab"]


def test_pullback_examples():
    g = core(H_EX)
    assert canonical_form(pullback(g, g)) == canonical_form(g)
    assert pullback(core(["a"]), core(["b"])).edges() == ()
    assert canonical_form(pullback(g, rose(2))) == canonical_form(g)


def test_canonical_form_examples():
    a = canonical_form(core(["aa", "ab"]))
    assert a == canonical_form(core(["ab", "aa"]))
    assert a == canonical_form(core(["aa", "ab", "aaab"]))
    assert canonical_form(core(["a"])) != canonical_form(core(["b"]))


def test_canonical_form_ignores_vertex_names():
    g = CoreGraph(2, 3, [(0, 0, 2), (2, 1, 1), (1, 0, 0)])
    h = relabel(2, 0, g.edges())
    assert canonical_form(g) == canonical_form(h)
    assert h.edges() != g.edges()


def test_folded_invariant_enforced():
    with pytest.raises(ValueError):
        CoreGraph(2, 2, [(0, 0, 1), (0, 0, 0)])


# properties ------------------------------------------------------------------

word_st = st.lists(st.sampled_from([1, -1, 2, -2]), max_size=8).map(lambda xs: reduce(xs, 2))
gens_st = st.lists(word_st, max_size=4)


def _is_core(g):
    degree = [0] * g.n
    for u, _, v in g.edges():
        degree[u] += 1
        degree[v] += 1
    return all(d >= 2 for d in degree[1:])


@given(gens_st)
def test_core_invariants(gens):
    g = build_core(gens, 2)
    assert _is_core(g)
    b = basis_from_tree(g)
    assert len(b.words) == g.edge_count - g.n + 1 == g.subgroup_rank
    for w in b.words + gens:
        assert membership(g, w)


@given(gens_st, st.randoms())
def test_generator_order_and_redundancy_irrelevant(gens, rnd):
    g = build_core(gens, 2)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    extra = [shuffled[0] * shuffled[-1]] if shuffled else []
    assert canonical_form(build_core(shuffled + extra, 2)) == canonical_form(g)
    assert canonical_form(build_core(basis_from_tree(g).words, 2)) == canonical_form(g)


@given(gens_st)
@settings(max_examples=40)
def test_membership_sound_against_products(gens):
    g = build_core(gens, 2)
    for t in subgroup_ball([w.letters for w in gens], 3):
        assert membership(g, Word(2, t))


@pytest.mark.parametrize("name", list(CORPUS))
def test_membership_matches_brute_force_corpus(name):
    gens = words(CORPUS[name])
    g = build_core(gens, 2)
    # six factors reach every word of length <= 6 in each corpus subgroup
    ball = subgroup_ball([w.letters for w in gens], 6)
    for w in all_words(2, 6):
        assert membership(g, w) == (w.letters in ball), str(w)


@given(gens_st, gens_st)
@settings(max_examples=40)
def test_pullback_is_intersection(g1, g2):
    a, b = build_core(g1, 2), build_core(g2, 2)
    p = pullback(a, b)
    assert _is_core(p)
    for w in all_words(2, 4):
        assert membership(p, w) == (membership(a, w) and membership(b, w))


perm_st = st.integers(min_value=1, max_value=6).flatmap(
    lambda n: st.tuples(st.permutations(range(n)), st.permutations(range(n)))
)


@given(perm_st)
def test_nielsen_schreier_on_random_covers(perms):
    edges = [(u, g, p[u]) for g, p in enumerate(perms) for u in range(len(p))]
    g = relabel(2, 0, edges)
    n = index_or_infinite(g)
    assert n == g.n
    assert g.subgroup_rank == 1 + n * (2 - 1)
    assert canonical_form(build_core(basis_from_tree(g).words, 2)) == canonical_form(g)
