"""Line-based text snapshot of a :class:`Trie`.

::

    affix-trie-snapshot v1
    words <count>
    node <id> parent=<id|-> key=<hexcp|-> label=<desc|-> end=<0|1>
    ...

``<desc>`` is ``atom:<hexcp>``, ``ref:<id>``, ``refsfx:<id>:<hexcps>`` or
``direct:<hexcps>`` where ``<hexcps>`` is a dash-separated list of lowercase
hex code points.  Nodes appear in increasing id order, starting with the root.
"""

from __future__ import annotations

import io
import os
import re
from typing import IO, Union

from .errors import MalformedSnapshot, SinkWriteFailure, UnsupportedVersion
from .trie import NO_PARENT, ROOT, Atom, Direct, Label, Node, Ref, RefSuffix, Trie

MAGIC = "affix-trie-snapshot"
VERSION = "v1"

_NODE_RE = re.compile(
    r"node (\d+) parent=(-|\d+) key=(-|[0-9a-f]+) label=(\S+) end=([01])"
)
_HEX = re.compile(r"[0-9a-f]+")


def _hex(text: str) -> str:
    return "-".join(format(ord(ch), "x") for ch in text)


def _unhex(field: str, lineno: int) -> str:
    parts = field.split("-")
    if not all(_HEX.fullmatch(p) for p in parts):
        raise MalformedSnapshot(lineno, f"bad code point list {field!r}")
    try:
        return "".join(chr(int(p, 16)) for p in parts)
    except (ValueError, OverflowError):
        raise MalformedSnapshot(lineno, f"code point out of range in {field!r}") from None


def _describe(label: Label) -> str:
    kind = type(label)
    if kind is Atom:
        return f"atom:{_hex(label.ch)}"
    if kind is Ref:
        return f"ref:{label.target}"
    if kind is RefSuffix:
        return f"refsfx:{label.target}:{_hex(label.suffix)}"
    return f"direct:{_hex(label.chars)}"


def _parse_label(desc: str, lineno: int) -> Label:
    kind, _, rest = desc.partition(":")
    if kind == "atom":
        text = _unhex(rest, lineno)
        if len(text) != 1:
            raise MalformedSnapshot(lineno, "atom must hold exactly one character")
        return Atom(text)
    if kind == "ref" and rest.isdigit():
        return Ref(int(rest))
    if kind == "refsfx":
        target, _, suffix = rest.partition(":")
        if target.isdigit() and suffix:
            return RefSuffix(int(target), _unhex(suffix, lineno))
    if kind == "direct" and rest:
        return Direct(_unhex(rest, lineno))
    raise MalformedSnapshot(lineno, f"bad label {desc!r}")


def iter_lines(trie: Trie):
    yield f"{MAGIC} {VERSION}"
    yield f"words {len(trie)}"
    nodes = list(trie.nodes())
    keys = {}
    for node in nodes:
        for key, child in node.children.items():
            keys[child] = key
    for node in nodes:
        if node.id == ROOT:
            yield f"node 0 parent=- key=- label=- end={int(node.word_end)}"
            continue
        yield (
            f"node {node.id} parent={node.parent} key={format(ord(keys[node.id]), 'x')} "
            f"label={_describe(node.label)} end={int(node.word_end)}"
        )


def export_snapshot(trie: Trie, sink: Union[IO[str], str, os.PathLike]) -> int:
    """Write ``trie`` to a text stream or path; returns the UTF-8 byte count."""
    written = 0
    try:
        if isinstance(sink, (str, os.PathLike)):
            with open(sink, "w", encoding="utf-8", newline="\n") as fh:
                return export_snapshot(trie, fh)
        for line in iter_lines(trie):
            sink.write(line + "\n")
            written += len(line.encode("utf-8")) + 1
    except OSError as exc:
        raise SinkWriteFailure(str(exc)) from exc
    return written


def dumps(trie: Trie) -> str:
    buf = io.StringIO()
    export_snapshot(trie, buf)
    return buf.getvalue()


def _label_length(nodes: list[Node], lineno_of: dict[int, int]) -> list[int]:
    """Root-path length of every node, computed through label references."""
    depth = [-1] * len(nodes)
    depth[ROOT] = 0
    on_stack = [False] * len(nodes)

    for start in range(1, len(nodes)):
        if depth[start] >= 0:
            continue
        stack = [start]
        while stack:
            v = stack[-1]
            if depth[v] >= 0:
                stack.pop()
                continue
            node = nodes[v]
            label = node.label
            needs = []
            if depth[node.parent] < 0:
                needs.append(node.parent)
            if type(label) in (Ref, RefSuffix) and depth[label.target] < 0:
                needs.append(label.target)
            if needs:
                if on_stack[v]:
                    raise MalformedSnapshot(lineno_of[v], f"node {v}: circular label references")
                on_stack[v] = True
                stack.extend(needs)
                continue
            on_stack[v] = False
            kind = type(label)
            if kind is Atom:
                length = 1
            elif kind is Direct:
                length = len(label.chars)
            elif kind is Ref:
                length = depth[label.target]
            else:
                length = depth[label.target] + len(label.suffix)
            depth[v] = depth[node.parent] + length
            stack.pop()
    return depth


def import_snapshot(source: Union[IO[str], str, os.PathLike]) -> Trie:
    """Rebuild a trie from a snapshot stream or path.

    Raises MalformedSnapshot with the offending line number, or
    UnsupportedVersion for a header from another format version.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            return import_snapshot(fh)

    text = source.read()
    if not text:
        raise MalformedSnapshot(1, "empty snapshot")
    lines = text.split("\n")
    if lines[-1] != "":
        raise MalformedSnapshot(len(lines), "truncated record (no final newline)")
    lines.pop()
    magic, _, version = lines[0].partition(" ")
    if magic != MAGIC:
        raise MalformedSnapshot(1, "not an affix-trie snapshot")
    if version != VERSION:
        raise UnsupportedVersion(f"snapshot version {version!r} is not supported")
    if len(lines) < 2:
        raise MalformedSnapshot(2, "missing word count")
    head, _, count = lines[1].partition(" ")
    if head != "words" or not count.isdigit():
        raise MalformedSnapshot(2, "expected 'words <count>'")
    word_count = int(count)
    if len(lines) < 3:
        raise MalformedSnapshot(3, "missing root node")

    nodes: list[Node] = []
    keys: dict[int, str] = {}
    lineno_of: dict[int, int] = {}
    for lineno, line in enumerate(lines[2:], start=3):
        m = _NODE_RE.fullmatch(line)
        if not m:
            raise MalformedSnapshot(lineno, f"bad node record {line!r}")
        nid, parent, key, desc, end = m.groups()
        nid = int(nid)
        if nid != len(nodes):
            raise MalformedSnapshot(lineno, f"expected node {len(nodes)}, found {nid}")
        lineno_of[nid] = lineno
        if nid == ROOT:
            if (parent, key, desc) != ("-", "-", "-"):
                raise MalformedSnapshot(lineno, "root must have no parent, key or label")
            node = Node(ROOT, NO_PARENT, None, 0)
        else:
            if parent == "-" or key == "-" or desc == "-":
                raise MalformedSnapshot(lineno, "non-root node needs parent, key and label")
            parent_id = int(parent)
            if parent_id == nid:
                raise MalformedSnapshot(lineno, "node is its own parent")
            node = Node(nid, parent_id, _parse_label(desc, lineno), -1)
            try:
                keys[nid] = chr(int(key, 16))
            except (ValueError, OverflowError):
                raise MalformedSnapshot(lineno, f"bad key {key!r}") from None
        node.word_end = end == "1"
        nodes.append(node)

    for node in nodes[1:]:
        if node.parent >= len(nodes):
            raise MalformedSnapshot(lineno_of[node.id], f"parent {node.parent} does not exist")
        label = node.label
        if type(label) is Ref or type(label) is RefSuffix:
            if not 0 < label.target < len(nodes):
                raise MalformedSnapshot(lineno_of[node.id], f"reference to missing node {label.target}")
        children = nodes[node.parent].children
        if keys[node.id] in children:
            raise MalformedSnapshot(lineno_of[node.id], "duplicate child key under one parent")
        children.set(keys[node.id], node.id)

    depths = _label_length(nodes, lineno_of)
    for node, d in zip(nodes, depths):
        node.depth = d

    ends = sum(node.word_end for node in nodes)
    if ends != word_count:
        raise MalformedSnapshot(2, f"header says {word_count} words, found {ends} word ends")

    trie = Trie()
    trie._nodes = nodes
    trie._word_count = word_count
    report = trie.check_invariants()
    if not report.ok:
        bad = report.failures()[0]
        line = lineno_of.get(bad.node, 0) if bad.node is not None else 0
        raise MalformedSnapshot(line, f"invariant {bad.name} violated {bad.detail}".strip())
    return trie


def loads(text: str) -> Trie:
    return import_snapshot(io.StringIO(text))
