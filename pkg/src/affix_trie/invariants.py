"""Structural self-checks for :class:`~affix_trie.trie.Trie`.

Each check is independent of the fast paths in ``trie.py``: acyclicity is
verified on the explicit dependency graph rather than through root-path
lengths, and labels are resolved in the order that search produces.
"""

from __future__ import annotations

from .trie import (
    NO_PARENT,
    ROOT,
    Atom,
    Direct,
    InvariantReport,
    InvariantResult,
    Ref,
    RefSuffix,
    Trie,
)


def _targets(label):
    if type(label) is Ref or type(label) is RefSuffix:
        return label.target
    return None


def _check_root(trie: Trie) -> InvariantResult:
    root = trie._nodes[ROOT]
    ok = root.parent == NO_PARENT and root.label is None and not root.word_end and root.depth == 0
    return InvariantResult("root", ok, None if ok else ROOT)


def _check_links(trie: Trie) -> InvariantResult:
    nodes = trie._nodes
    entries = 0
    listed = [0] * len(nodes)
    for node in nodes:
        for child in node.children.values:
            entries += 1
            if not 0 < child < len(nodes) or nodes[child].parent != node.id:
                return InvariantResult("parent-links", False, node.id, f"bad child {child}")
            listed[child] += 1
    for nid in range(1, len(nodes)):
        if listed[nid] != 1:
            return InvariantResult("parent-links", False, nid, "not listed exactly once by its parent")
    if entries != len(nodes) - 1:
        return InvariantResult("parent-links", False, None, "child entries do not form a tree")
    seen = 1
    stack = [ROOT]
    while stack:
        for child in nodes[stack.pop()].children.values:
            seen += 1
            stack.append(child)
            if seen > len(nodes):
                break
    if seen != len(nodes):
        return InvariantResult("parent-links", False, None, "nodes unreachable from the root")
    return InvariantResult("parent-links", True)


def _check_labels(trie: Trie) -> InvariantResult:
    nodes = trie._nodes
    for node in nodes[1:]:
        label = node.label
        kind = type(label)
        if kind is Atom:
            ok = len(label.ch) == 1
        elif kind is Direct:
            ok = len(label.chars) >= 1
        elif kind is Ref or kind is RefSuffix:
            ok = 0 < label.target < len(nodes) and label.target != node.id
            if kind is RefSuffix:
                ok = ok and len(label.suffix) >= 1
        else:
            ok = False
        if not ok:
            return InvariantResult("label-shape", False, node.id, repr(label))
    return InvariantResult("label-shape", True)


def _check_acyclic(trie: Trie):
    """Depth-first search over v -> every node on the root path of v's target.

    Returns the result and, when acyclic, a post-order of all non-root nodes
    in which every node follows everything its label depends on.
    """
    nodes = trie._nodes
    WHITE, GREY, BLACK = 0, 1, 2
    color = [WHITE] * len(nodes)
    order: list[int] = []

    def deps(v):
        t = _targets(nodes[v].label)
        out = []
        while t is not None and t > 0:
            out.append(t)
            t = nodes[t].parent
        return out

    for start in range(1, len(nodes)):
        if color[start] != WHITE:
            continue
        color[start] = GREY
        stack = [(start, iter(deps(start)))]
        while stack:
            v, it = stack[-1]
            for u in it:
                if color[u] == GREY:
                    return InvariantResult("dependency-acyclicity", False, u, f"cycle through {v}"), []
                if color[u] == WHITE:
                    color[u] = GREY
                    stack.append((u, iter(deps(u))))
                    break
            else:
                color[v] = BLACK
                order.append(v)
                stack.pop()
    return InvariantResult("dependency-acyclicity", True), order


def _resolve_all(trie: Trie, order: list[int]) -> dict[int, str]:
    nodes = trie._nodes
    texts: dict[int, str] = {}
    for v in order:
        label = nodes[v].label
        kind = type(label)
        if kind is Atom:
            texts[v] = label.ch
        elif kind is Direct:
            texts[v] = label.chars
        else:
            path = []
            t = label.target
            while t > 0:
                path.append(texts[t])
                t = nodes[t].parent
            path.reverse()
            if kind is RefSuffix:
                path.append(label.suffix)
            texts[v] = "".join(path)
    return texts


def _check_resolution(trie: Trie, texts) -> InvariantResult:
    nodes = trie._nodes
    for node in nodes[1:]:
        expected = node.depth - nodes[node.parent].depth
        if len(texts[node.id]) != expected or expected < 1:
            return InvariantResult("resolution", False, node.id, "label length disagrees with depth")
    return InvariantResult("resolution", True)


def _check_radix(trie: Trie, texts) -> InvariantResult:
    for node in trie._nodes:
        keys = node.children.keys
        for a, b in zip(keys, keys[1:]):
            if not a < b:
                return InvariantResult("radix-property", False, node.id, "child keys not distinct")
        for key, child in node.children.items():
            if texts[child][:1] != key:
                return InvariantResult("radix-property", False, child, f"key {key!r} mismatch")
    return InvariantResult("radix-property", True)


def _check_atoms(trie: Trie, texts) -> InvariantResult:
    nodes = trie._nodes
    atoms = 0
    for node in nodes[1:]:
        if type(node.label) is Atom:
            atoms += 1
            if node.parent != ROOT:
                return InvariantResult("atom-grounding", False, node.id, "atom below a non-root node")
    # characters of the stored words: labels of every node on some word's root path
    on_word_path = [False] * len(nodes)
    for node in nodes:
        v = node.id
        if node.word_end:
            while v > 0 and not on_word_path[v]:
                on_word_path[v] = True
                v = nodes[v].parent
    alphabet = set("".join(texts[v] for v in range(1, len(nodes)) if on_word_path[v]))
    if trie._word_count and atoms > len(alphabet):
        return InvariantResult("atom-grounding", False, None, "more atoms than distinct characters")
    return InvariantResult("atom-grounding", True)


def _check_word_count(trie: Trie) -> InvariantResult:
    ends = sum(1 for node in trie._nodes if node.word_end)
    ok = ends == trie._word_count
    return InvariantResult("word-count", ok, None, "" if ok else f"{ends} word ends")


def check_invariants(trie: Trie) -> InvariantReport:
    report = InvariantReport()
    add = report.results.append
    add(_check_root(trie))
    links = _check_links(trie)
    add(links)
    shape = _check_labels(trie)
    add(shape)
    if not (links.ok and shape.ok):
        return report
    acyclic, order = _check_acyclic(trie)
    add(acyclic)
    if not acyclic.ok:
        return report
    texts = _resolve_all(trie, order)
    add(_check_resolution(trie, texts))
    add(_check_radix(trie, texts))
    add(_check_atoms(trie, texts))
    add(_check_word_count(trie))
    return report
