import io

import pytest

from affix_trie import (
    MalformedSnapshot,
    SinkWriteFailure,
    Trie,
    UnsupportedVersion,
    export_snapshot,
    import_snapshot,
)
from affix_trie.snapshot import dumps, loads


def built(*words):
    t = Trie()
    for w in words:
        t.insert(w)
    return t


def test_empty_trie():
    text = dumps(Trie())
    assert text == "affix-trie-snapshot v1\nwords 0\nnode 0 parent=- key=- label=- end=0\n"
    assert loads(text).stats() == Trie().stats()


def test_byte_count_matches_output():
    t = built("naïve", "日本")
    buf = io.StringIO()
    n = export_snapshot(t, buf)
    assert n == len(buf.getvalue().encode("utf-8"))


def test_round_trip_small():
    t = built("abandon", "ability")
    u = loads(dumps(t))
    assert u.stats() == t.stats()
    assert dumps(u) == dumps(t)


def test_round_trip_membership():
    u = loads(dumps(built("abandon", "ability", "abandonility")))
    for w in ("abandon", "ability", "abandonility"):
        assert u.contains(w)[0]
    assert not u.contains("abandoni")[0]


def test_path_round_trip(tmp_path):
    t = built("road", "abroad", "ab")
    p = tmp_path / "t.snap"
    export_snapshot(t, p)
    assert import_snapshot(p).stats() == t.stats()


def test_truncated():
    text = dumps(built("abandon", "ability"))
    with pytest.raises(MalformedSnapshot):
        loads(text[:-1])
    with pytest.raises(MalformedSnapshot):
        loads(text[: len(text) // 2])
    with pytest.raises(MalformedSnapshot):
        loads("")


def test_unknown_version():
    text = dumps(built("ab")).replace("v1", "v9", 1)
    with pytest.raises(UnsupportedVersion):
        loads(text)


@pytest.mark.parametrize(
    "old, new",
    [
        ("words 2", "words 3"),
        ("words 2", "word 2"),
        ("node 1 ", "node 7 "),
        ("end=1", "end=2"),
        ("label=direct:", "label=bogus:"),
    ],
)
def test_malformed_lines_report_line(old, new):
    text = dumps(built("ab", "cd"))
    assert old in text
    with pytest.raises(MalformedSnapshot) as info:
        loads(text.replace(old, new, 1))
    assert info.value.line >= 1


def test_cycle_rejected():
    t = built("abandon", "ability", "abandonility")
    lines = dumps(t).splitlines()
    refs = [i for i, line in enumerate(lines) if "label=ref:" in line]
    a, b = refs[:2]
    id_a = lines[a].split()[1]
    id_b = lines[b].split()[1]
    lines[a] = lines[a].split("label=")[0] + f"label=ref:{id_b} " + lines[a].split()[-1]
    lines[b] = lines[b].split("label=")[0] + f"label=ref:{id_a} " + lines[b].split()[-1]
    with pytest.raises(MalformedSnapshot):
        loads("\n".join(lines) + "\n")


def test_missing_reference_target():
    text = dumps(built("abandon", "ability"))
    line = next(line for line in text.splitlines() if "label=ref:" in line)
    bad = line.split("label=")[0] + "label=ref:99 " + line.split()[-1]
    with pytest.raises(MalformedSnapshot):
        loads(text.replace(line, bad))


class BrokenSink:
    def write(self, _):
        raise OSError("disk full")


def test_sink_failure():
    with pytest.raises(SinkWriteFailure):
        export_snapshot(built("ab"), BrokenSink())
