from hypothesis import given, settings, strategies as st

from affix_trie import Trie
from affix_trie.snapshot import dumps, loads

from helpers import shadow, stability_violations

small_words = st.text(alphabet="abc", min_size=1, max_size=7)
word_lists = st.lists(small_words, max_size=50)


def build(ws):
    t = Trie()
    handles = [t.insert(w) for w in ws]
    return t, handles


@settings(deadline=None)
@given(word_lists, st.lists(st.text(alphabet="abcd", max_size=8), max_size=20))
def test_membership(ws, probes):
    t, _ = build(ws)
    ref = set(ws)
    assert set(t.words()) == ref
    for w in list(ref) + probes:
        assert t.contains(w)[0] == (w in ref)
    assert t.check_invariants().ok


@settings(deadline=None)
@given(word_lists)
def test_round_trip(ws):
    t, handles = build(ws)
    for w, h in zip(ws, handles):
        assert t.materialize(h) == w


@settings(deadline=None)
@given(word_lists, st.data())
def test_idempotence(ws, data):
    t, _ = build(ws)
    if ws:
        before = t.stats()
        t.insert(data.draw(st.sampled_from(ws)))
        assert t.stats() == before


@settings(deadline=None)
@given(word_lists, word_lists)
def test_existing_strings_never_change(first, second):
    t, _ = build(first)
    before = shadow(t)
    for w in second:
        t.insert(w)
    assert stability_violations(before, shadow(t)) == []


@settings(deadline=None)
@given(word_lists)
def test_snapshot_round_trip(ws):
    t, _ = build(ws)
    u = loads(dumps(t))
    assert u.stats() == t.stats()
    assert list(u.words()) == list(t.words())


@settings(deadline=None)
@given(word_lists)
def test_atoms_bounded_by_alphabet(ws):
    t, _ = build(ws)
    atoms = sum(1 for n in t.nodes() if type(n.label).__name__ == "Atom")
    assert atoms <= len(set("".join(ws)))


@settings(deadline=None)
@given(st.lists(small_words, min_size=1, max_size=50))
def test_search_counts_each_character(ws):
    t, _ = build(ws)
    for w in ws:
        assert t.contains(w)[1].total >= len(w)


@settings(deadline=None)
@given(word_lists, st.lists(st.tuples(st.integers(0, 10_000), st.integers(1, 6)), max_size=10))
def test_explicit_splits_keep_words(ws, cuts):
    t, handles = build(ws)
    for pick, k in cuts:
        nodes = [n.id for n in t.nodes() if n.id and n.depth - t.node(n.parent).depth > k]
        if nodes:
            t.split_node(nodes[pick % len(nodes)], k)
    assert set(t.words()) == set(ws)
    for w, h in zip(ws, handles):
        assert t.materialize(h) == w
    assert t.check_invariants().ok
