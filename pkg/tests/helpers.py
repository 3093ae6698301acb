"""Independent oracles shared by the test modules."""

from __future__ import annotations

import random

from affix_trie import Atom, Direct, Ref, Trie


def label_texts(trie: Trie) -> dict[int, str]:
    return {n.id: trie.resolve_label(n.id) for n in trie.nodes() if n.id != 0}


def root_paths(trie: Trie, texts: dict[int, str] | None = None) -> dict[int, str]:
    """Root path of every node, built top-down from resolved labels."""
    texts = label_texts(trie) if texts is None else texts
    out = {0: ""}
    stack = [0]
    while stack:
        nid = stack.pop()
        for child in trie.node(nid).children.values:
            out[child] = out[nid] + texts[child]
            stack.append(child)
    return out


def shadow(trie: Trie) -> dict[int, tuple[int, str, str]]:
    """node -> (parent, label string, root path), read straight off the labels.

    Nodes are visited shortest root path first, so every reference target and
    parent is already known; a bad ordering shows up as a KeyError.
    """
    nodes = sorted((n for n in trie.nodes() if n.id != 0), key=lambda n: n.depth)
    path = {0: ""}
    out = {}
    for n in nodes:
        label = n.label
        if isinstance(label, Atom):
            text = label.ch
        elif isinstance(label, Direct):
            text = label.chars
        elif isinstance(label, Ref):
            text = path[label.target]
        else:
            text = path[label.target] + label.suffix
        path[n.id] = path[n.parent] + text
        out[n.id] = (n.parent, text, path[n.id])
    return out


def stability_violations(before, after) -> list[int]:
    bad = []
    for nid, (parent, text, path) in before.items():
        now = after.get(nid)
        if now is None or now[2] != path:
            bad.append(nid)
        elif now[0] == parent and now[1] != text:
            bad.append(nid)
    return bad


def random_words(rng: random.Random, n: int, alphabet: str, max_len: int) -> list[str]:
    return ["".join(rng.choices(alphabet, k=rng.randint(1, max_len))) for _ in range(n)]
