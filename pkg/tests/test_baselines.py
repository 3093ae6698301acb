import random

import pytest
from hypothesis import given, settings, strategies as st

from affix_trie import (
    AlphabetOverflow,
    AVLStringSet,
    EmptyWord,
    NativeTrie,
    RadixTrie,
    StructureKind,
    Trie,
    baseline_contains,
    baseline_stats,
    build_structure,
)
from affix_trie.baselines import build_counted

from helpers import random_words


def test_kinds_exhaustive():
    assert [k.value for k in StructureKind] == ["improved", "radix", "native", "bst"]
    assert isinstance(build_structure("improved", ["a"]), Trie)


class TestRadix:
    def test_split_at_common_prefix(self):
        r = build_structure("radix", ["abandon", "ability"])
        labels = {label for label, _, _ in r.nodes()}
        assert {"ab", "andon", "ility"} <= labels
        # "ab" + "andon" + "ility"
        assert baseline_stats(r).label_cells == 12

    def test_no_sharing(self):
        r = build_structure("radix", ["abandon", "ability", "abandonility"])
        assert [label for label, _, _ in r.nodes()].count("ility") == 2

    def test_empty(self):
        st_ = RadixTrie().stats()
        assert (st_.total_nodes, st_.label_cells) == (1, 0)

    def test_contains(self):
        r = build_structure("radix", ["abandon"])
        assert baseline_contains(r, "abandon")[0]
        assert not baseline_contains(r, "aband")[0]
        assert not baseline_contains(r, "")[0]

    def test_shape(self):
        rng = random.Random(3)
        r = build_structure("radix", random_words(rng, 500, "abc", 8))
        for i, (label, children, end) in enumerate(r.nodes()):
            firsts = [r._labels[c][0] for c in children]
            assert len(set(firsts)) == len(firsts)
            if i:
                assert label
                assert end or len(children) != 1


class TestNative:
    def test_counts(self):
        n = build_structure("native", ["ab"], 128)
        st_ = baseline_stats(n)
        assert st_.total_nodes == 3
        assert st_.child_slots == 384
        assert st_.label_cells == 0

    def test_empty_contains(self):
        assert not baseline_contains(NativeTrie(), "x")[0]

    def test_overflow(self):
        with pytest.raises(AlphabetOverflow):
            build_structure("native", ["ab", "é"], 128)
        n = build_structure("native", ["é"], 256)
        assert "é" in n
        assert "ɐ" not in n

    def test_bad_alphabet(self):
        with pytest.raises(ValueError):
            NativeTrie(0)


class TestBST:
    def test_counts(self):
        b = build_structure("bst", ["a", "b"])
        st_ = baseline_stats(b)
        assert (st_.total_nodes, st_.label_cells) == (2, 2)

    def test_absent(self):
        b = build_structure("bst", ["abandon"])
        assert not baseline_contains(b, "abandoned")[0]

    def test_balanced(self):
        b = AVLStringSet()
        for i in range(1024):
            b.insert(f"{i:05d}")
        assert b.height() <= 1.45 * 11
        assert list(b) == sorted(f"{i:05d}" for i in range(1024))


@pytest.mark.parametrize("kind", list(StructureKind))
def test_empty_word_rejected(kind):
    with pytest.raises(EmptyWord):
        build_structure(kind, ["a", ""])


def test_stats_rejects_improved():
    with pytest.raises(TypeError):
        baseline_stats(Trie())


def test_op_counts_positive():
    for kind in StructureKind:
        s, costs = build_counted(kind, ["abandon", "ability", "able"])
        assert all(c >= 0 for c in costs)
        assert s.contains("ability")[1].total >= 1


words = st.lists(st.text(alphabet="abcd", min_size=1, max_size=8), max_size=60)


@settings(max_examples=60, deadline=None)
@given(words, st.lists(st.text(alphabet="abcde", max_size=9), max_size=20))
def test_membership_matches_set(ws, probes):
    ref = set(ws)
    for kind in StructureKind:
        s = build_structure(kind, ws)
        assert len(s) == len(ref)
        for w in list(ref) + probes:
            assert s.contains(w)[0] == (w in ref)


@settings(max_examples=60, deadline=None)
@given(words)
def test_cell_dominance(ws):
    improved = build_structure("improved", ws).stats()
    radix = build_structure("radix", ws).stats()
    assert improved.direct_cells <= radix.label_cells
