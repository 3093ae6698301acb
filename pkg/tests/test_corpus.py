import pytest
from hypothesis import given, strategies as st

from affix_trie import NotUtf8, WordList, expand_corpus, load_words, write_words
from affix_trie.corpus import bundled_path, parse_expand


def test_dedupe_and_blanks(tmp_path):
    p = tmp_path / "w.txt"
    p.write_bytes(b"a\nb\n\nb\n")
    wl = load_words(p)
    assert list(wl) == ["a", "b"]
    assert wl.total_chars == 2
    assert wl.source == str(p)


def test_crlf_same_as_lf(tmp_path):
    lf, crlf = tmp_path / "lf.txt", tmp_path / "crlf.txt"
    lf.write_bytes(b"road\nabroad \n\nab\n")
    crlf.write_bytes(b"road\r\nabroad \r\n\r\nab\r\n")
    assert load_words(lf) == WordList(load_words(crlf).words, str(lf))


def test_missing_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_words(tmp_path / "nope.txt")


def test_not_utf8_offset(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_bytes(b"ok\nfine\n\xff\xfe\n")
    with pytest.raises(NotUtf8) as info:
        load_words(p)
    assert info.value.offset == 8


def test_bundled_list_is_present():
    assert bundled_path().is_file()


def test_expand_simple():
    assert list(expand_corpus(["ab"], ["1"])) == ["ab", "ab1"]


def test_expand_collision():
    assert list(expand_corpus(["a", "a1"], ["1"])) == ["a", "a1", "a11"]


def test_expand_two_suffixes_order():
    assert list(expand_corpus(["x", "y"], ["1", "2"])) == ["x", "y", "x1", "y1", "x2", "y2"]


def test_expand_rejects_empty_suffix():
    with pytest.raises(ValueError):
        expand_corpus(["a"], [""])


def test_parse_expand():
    assert parse_expand("none") == []
    assert parse_expand("1") == ["1"]
    assert parse_expand("1,2") == ["1", "2"]
    with pytest.raises(ValueError):
        parse_expand("1,")


word_lists = st.lists(st.text(alphabet=st.characters(blacklist_categories=("Zs", "Cc", "Zl", "Zp", "Cs")), min_size=1, max_size=6))


@given(word_lists)
def test_write_then_load_identity(tmp_path_factory, ws):
    wl = WordList.from_iterable(ws)
    p = tmp_path_factory.mktemp("rt") / "w.txt"
    write_words(wl, p)
    assert load_words(p).words == wl.words


@given(word_lists, st.lists(st.text(alphabet="12x", min_size=1, max_size=2), max_size=3))
def test_expand_matches_set_union(ws, suffixes):
    base = WordList.from_iterable(ws)
    out = expand_corpus(base, suffixes)
    oracle = set(base) | {w + s for w in base for s in suffixes}
    assert set(out) == oracle
    assert len(out) == len(oracle) <= len(base) * (1 + len(suffixes))
    assert list(out)[: len(base)] == list(base)
