"""Radix trie whose edge labels are shared through root-anchored paths.

A plain radix trie stores every edge label as characters.  Here a label is
stored as characters only when nothing better exists: after a node is created
(or split) its label string is itself inserted as a path from the root, and
the node keeps a reference to the end of that path.  Resolving the reference
means reading the path's characters back from the root.  Most nodes end up
holding no characters at all; only the direct children of the root, whose
labels cannot point at themselves, keep characters.

Labels come in four kinds:

``Atom(ch)``
    one stored character, only on children of the root.
``Ref(target)``
    the label is the root path of ``target``.
``RefSuffix(target, suffix)``
    the root path of ``target`` followed by stored ``suffix`` characters.
``Direct(chars)``
    stored characters.

Node ids are dense integers and a node's root path never changes once the node
exists.  Splitting an edge inserts the new node *above* the split point, so the
original node keeps its id, its children, its word-end flag and its root path.
References and outside handles therefore never need repointing.

Every reference from a node ``v`` targets a node whose root path is strictly
shorter than the root path of ``v``.  Root-path lengths never change, so the
label-dependency graph is acyclic by construction; ``check_invariants``
verifies it independently.
"""

from __future__ import annotations

import gc
from bisect import bisect_left
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator, NewType, Optional, Union

from .childmap import ChildMap
from .errors import (
    BadSplitOffset,
    EmptyWord,
    UnknownHandle,
    UnresolvableLabel,
    WordTooLong,
)

NodeId = NewType("NodeId", int)

ROOT = NodeId(0)
NO_PARENT = -1
DEFAULT_MAX_WORD_LENGTH = 4096


@dataclass(frozen=True, slots=True)
class Atom:
    ch: str


@dataclass(frozen=True, slots=True)
class Ref:
    target: int


@dataclass(frozen=True, slots=True)
class RefSuffix:
    target: int
    suffix: str


@dataclass(frozen=True, slots=True)
class Direct:
    chars: str


Label = Union[Atom, Ref, RefSuffix, Direct]


def label_cells(label: Optional[Label]) -> int:
    """Number of characters a label stores directly."""
    kind = type(label)
    if kind is Atom:
        return 1
    if kind is Direct:
        return len(label.chars)
    if kind is RefSuffix:
        return len(label.suffix)
    return 0


@dataclass(slots=True)
class OpCount:
    traversals: int = 0
    loop_iterations: int = 0

    @property
    def total(self) -> int:
        return self.traversals + self.loop_iterations

    def __add__(self, other: "OpCount") -> "OpCount":
        return OpCount(
            self.traversals + other.traversals,
            self.loop_iterations + other.loop_iterations,
        )


@dataclass(frozen=True)
class TrieStats:
    total_nodes: int
    empty_nodes: int
    nonempty_nodes: int
    direct_cells: int
    child_entries: int
    ref_count: int
    word_count: int


@dataclass(frozen=True)
class InvariantResult:
    name: str
    ok: bool
    node: Optional[int] = None
    detail: str = ""


@dataclass
class InvariantReport:
    results: list[InvariantResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def failures(self) -> list[InvariantResult]:
        return [r for r in self.results if not r.ok]

    def get(self, name: str) -> InvariantResult:
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def __str__(self):
        lines = []
        for r in self.results:
            mark = "pass" if r.ok else "FAIL"
            extra = "" if r.ok else f" node={r.node} {r.detail}".rstrip()
            lines.append(f"{mark} {r.name}{extra}")
        return "\n".join(lines)


class Node:
    __slots__ = ("id", "parent", "label", "children", "word_end", "depth")

    def __init__(self, id: int, parent: int, label: Optional[Label], depth: int):
        self.id = id
        self.parent = parent
        self.label = label
        self.children = ChildMap()
        self.word_end = False
        # length of the root path; fixed for the node's lifetime
        self.depth = depth

    def __repr__(self):
        return (
            f"Node(id={self.id}, parent={self.parent}, label={self.label!r}, "
            f"end={self.word_end}, depth={self.depth})"
        )


# walk result: (last fully matched node, chars consumed, partially matched child or None, chars matched on it)
_Walk = tuple[int, int, Optional[int], int]


class Trie:
    """String set stored as a radix trie with deduplicated labels.

    >>> t = Trie()
    >>> h = t.insert("abandon")
    >>> _ = t.insert("ability")
    >>> t.materialize(h)
    'abandon'
    >>> "ability" in t, "abil" in t
    (True, False)
    """

    def __init__(self, max_word_length: int = DEFAULT_MAX_WORD_LENGTH):
        self.max_word_length = max_word_length
        self._nodes: list[Node] = [Node(ROOT, NO_PARENT, None, 0)]
        self._word_count = 0
        self._pending: list[int] = []

    # -- public queries -------------------------------------------------

    def __len__(self) -> int:
        return self._word_count

    def __contains__(self, word: str) -> bool:
        return self.contains(word)[0]

    def __iter__(self) -> Iterator[str]:
        return self.words()

    @property
    def node_count(self) -> int:
        return len(self._nodes)

    def node(self, node_id: int) -> Node:
        if not isinstance(node_id, int) or not 0 <= node_id < len(self._nodes):
            raise UnknownHandle(node_id)
        return self._nodes[node_id]

    def nodes(self) -> Iterator[Node]:
        return iter(self._nodes)

    def contains(self, word: str) -> tuple[bool, OpCount]:
        ops = OpCount()
        if not word:
            return False, ops
        p, i, c, _ = self._walk(word, ops)
        found = c is None and i == len(word) and self._nodes[p].word_end
        return found, ops

    def find(self, s: str) -> Optional[NodeId]:
        """Node whose root path is exactly ``s``, or None."""
        if not s:
            return ROOT
        p, i, c, _ = self._walk(s, OpCount())
        if c is None and i == len(s):
            return NodeId(p)
        return None

    def resolve_label(self, node_id: int) -> str:
        node = self.node(node_id)
        if node.parent == NO_PARENT:
            raise ValueError("the root has no label")
        return self._resolve(node_id, OpCount())

    def materialize(self, handle: int) -> str:
        self.node(handle)
        return self._pathstr(handle, OpCount())

    pathstr = materialize

    def words(self) -> Iterator[str]:
        """Every stored word, in code-point order."""
        nodes = self._nodes
        ops = OpCount()
        stack: list[tuple[int, str]] = [(ROOT, "")]
        while stack:
            nid, prefix = stack.pop()
            node = nodes[nid]
            if nid != ROOT:
                prefix += self._resolve(nid, ops)
                if node.word_end:
                    yield prefix
            values = node.children.values
            for child in reversed(values):
                stack.append((child, prefix))

    def stats(self) -> TrieStats:
        empty = cells = refs = entries = 0
        for node in self._nodes:
            label = node.label
            n = label_cells(label)
            cells += n
            if n == 0:
                empty += 1
            if type(label) is Ref or type(label) is RefSuffix:
                refs += 1
            entries += len(node.children)
        total = len(self._nodes)
        return TrieStats(
            total_nodes=total,
            empty_nodes=empty,
            nonempty_nodes=total - empty,
            direct_cells=cells,
            child_entries=entries,
            ref_count=refs,
            word_count=self._word_count,
        )

    # -- public mutation --------------------------------------------------

    def insert(self, word: str) -> NodeId:
        return self.insert_counted(word)[0]

    def insert_counted(self, word: str) -> tuple[NodeId, OpCount]:
        """Insert ``word`` and report the work spent, deduplication included."""
        if not word:
            raise EmptyWord("cannot insert the empty string")
        self._check_length(word)
        ops = OpCount()
        t = self._realize(word, self._walk(word, ops), ops)
        self._drain(ops)
        node = self._nodes[t]
        if not node.word_end:
            node.word_end = True
            self._word_count += 1
        return NodeId(t), ops

    def insert_path(self, s: str) -> NodeId:
        """Find or create the node whose root path spells ``s``; never marks a word."""
        if not s:
            raise EmptyWord("cannot create an empty path")
        self._check_length(s)
        ops = OpCount()
        t = self._realize(s, self._walk(s, ops), ops)
        self._drain(ops)
        return NodeId(t)

    def dedup_label(self, node_id: int, pending: Optional[str] = None) -> Label:
        """Re-derive the label of ``node_id`` through the sharing fallback chain.

        ``pending`` defaults to the node's current label string; when given it
        must equal it.
        """
        node = self.node(node_id)
        if node.parent == NO_PARENT:
            raise ValueError("the root has no label")
        ops = OpCount()
        current = self._resolve(node_id, ops)
        if pending is not None and pending != current:
            raise ValueError(f"node {node_id} spells {current!r}, not {pending!r}")
        node.label = Direct(current)
        self._dedup(node_id, ops)
        label = node.label
        self._drain(ops)
        return label

    def split_node(self, node_id: int, k: int) -> NodeId:
        """Split the edge into ``node_id`` after ``k`` characters.

        A new node carrying the first ``k`` characters is placed between the
        node and its parent and returned.  ``node_id`` keeps the remaining
        characters along with its children, word-end flag and root path.
        """
        node = self.node(node_id)
        if node.parent == NO_PARENT:
            raise BadSplitOffset("the root cannot be split")
        length = node.depth - self._nodes[node.parent].depth
        if not 1 <= k < length:
            raise BadSplitOffset(f"offset {k} outside 1..{length - 1}")
        ops = OpCount()
        upper = self._split(node_id, k, ops)
        self._drain(ops)
        return NodeId(upper)

    # -- descent ----------------------------------------------------------

    def _check_length(self, s: str) -> None:
        if len(s) > self.max_word_length:
            raise WordTooLong(len(s), self.max_word_length)

    def _walk(self, s: str, ops: OpCount) -> _Walk:
        """Descend along ``s`` without modifying anything.

        Edge labels are expanded inline (see ``_expand`` for the readable
        version); this loop dominates insertion time.
        """
        nodes = self._nodes
        n = len(s)
        p = ROOT
        i = 0
        visits = steps = 0
        bisect = bisect_left
        node = nodes[ROOT]
        while i < n:
            visits += 1
            children = node.children
            keys = children.keys
            nk = len(keys)
            steps += nk.bit_length()
            ch = s[i]
            j = bisect(keys, ch)
            if j == nk or keys[j] != ch:
                ops.traversals += visits
                ops.loop_iterations += steps
                return p, i, None, 0
            c = children.values[j]
            child = nodes[c]
            edge = child.depth - node.depth
            end = i + edge if i + edge < n else n
            label = child.label
            kind = type(label)
            if kind is Ref:
                # most references point straight at a root child
                target = nodes[label.target]
                if target.parent == ROOT and type(target.label) in (Direct, Atom):
                    visits += 1
                    label = target.label
                    kind = type(label)
            if kind is Direct or kind is Atom:
                # stored characters: compare without expanding anything
                visits += 1
                chunk = label.chars if kind is Direct else label.ch
                if end - i < edge:
                    chunk = chunk[: end - i]
                if s.startswith(chunk, i):
                    pos = end
                else:
                    pos = i
                    while chunk[pos - i] == s[pos]:
                        pos += 1
                    steps += 1
            else:
                pos, seen, extra = self._match_expanded(c, s, i, end, edge)
                visits += seen
                steps += extra
            m = pos - i
            steps += m
            if m < edge:
                ops.traversals += visits
                ops.loop_iterations += steps
                return p, i, c, m
            p = c
            node = child
            i = pos
        ops.traversals += visits + 1
        ops.loop_iterations += steps
        return p, n, None, 0

    def _match_expanded(self, c: int, s: str, i: int, end: int, edge: int):
        """Match the expanded label of ``c`` against ``s[i:end]``.

        Returns (position reached, nodes visited, extra failing comparisons).
        """
        nodes = self._nodes
        pos = i
        visits = 0
        budget = 4 * edge + 8
        stack: list = [c]
        pop = stack.pop
        push = stack.append
        while stack:
            item = pop()
            if type(item) is str:
                chunk = item
            else:
                visits += 1
                if visits > budget:
                    raise UnresolvableLabel(c)
                label = nodes[item].label
                kind = type(label)
                if kind is Ref or kind is RefSuffix:
                    if kind is RefSuffix:
                        push(label.suffix)
                    t = label.target
                    while t > 0:
                        push(t)
                        t = nodes[t].parent
                    continue
                if kind is Direct:
                    chunk = label.chars
                elif kind is Atom:
                    chunk = label.ch
                else:
                    raise UnresolvableLabel(item, "node has no label")
            k = len(chunk)
            if pos + k > end:
                k = end - pos
                chunk = chunk[:k]
            if s.startswith(chunk, pos):
                pos += k
                if pos == end:
                    return pos, visits, 0
            else:
                m = 0
                while chunk[m] == s[pos + m]:
                    m += 1
                # the failing comparison is a step too
                return pos + m, visits, 1
        return pos, visits, 0

    # -- label resolution ------------------------------------------------

    def _expand(self, nid: int, ops: OpCount) -> list[str]:
        """The characters of a label as stored pieces, left to right."""
        nodes = self._nodes
        own = nodes[nid]
        parent_depth = nodes[own.parent].depth if own.parent >= 0 else 0
        # a well-formed label of length L expands fewer than 3L nodes
        budget = 4 * max(own.depth - parent_depth, 1) + 8
        out: list[str] = []
        stack: list = [nid]
        visits = 0
        try:
            while stack:
                item = stack.pop()
                if type(item) is str:
                    out.append(item)
                    continue
                visits += 1
                if visits > budget:
                    raise UnresolvableLabel(nid)
                label = nodes[item].label
                kind = type(label)
                if kind is Atom:
                    out.append(label.ch)
                elif kind is Direct:
                    out.append(label.chars)
                elif kind is Ref or kind is RefSuffix:
                    if kind is RefSuffix:
                        stack.append(label.suffix)
                    t = label.target
                    while t > 0:
                        stack.append(t)
                        t = nodes[t].parent
                else:
                    raise UnresolvableLabel(item, "node has no label")
        except IndexError:
            raise UnresolvableLabel(nid, "reference to a missing node") from None
        ops.traversals += visits
        ops.loop_iterations += sum(map(len, out))
        return out

    def _resolve(self, nid: int, ops: OpCount) -> str:
        return "".join(self._expand(nid, ops))

    def _pathstr(self, nid: int, ops: OpCount) -> str:
        nodes = self._nodes
        path = []
        while nid > 0:
            path.append(nid)
            nid = nodes[nid].parent
        ops.traversals += len(path)
        return "".join(self._resolve(x, ops) for x in reversed(path))

    # -- structural mutation ------------------------------------------------

    def _new_node(self, parent: int, label: Label, key: str, depth: int) -> int:
        nid = len(self._nodes)
        self._nodes.append(Node(nid, parent, label, depth))
        self._nodes[parent].children.set(key, nid)
        self._pending.append(nid)
        return nid

    def _add_leaf(self, parent: int, rest: str, ops: OpCount) -> int:
        ops.loop_iterations += len(rest)
        depth = self._nodes[parent].depth + len(rest)
        return self._new_node(parent, Direct(rest), rest[0], depth)

    def _split(self, c: int, k: int, ops: OpCount) -> int:
        nodes = self._nodes
        node = nodes[c]
        parent = node.parent
        text = self._resolve(c, ops)
        upper = self._new_node(parent, Direct(text[:k]), text[0], nodes[parent].depth + k)
        nodes[upper].children.set(text[k], c)
        node.parent = upper
        node.label = Direct(text[k:])
        self._pending.append(c)
        return upper

    def _realize(self, s: str, walk: _Walk, ops: OpCount) -> int:
        """Finish a walk over ``s``, creating whatever is missing."""
        p, i, c, m = walk
        if c is None:
            if i == len(s):
                return p
            return self._add_leaf(p, s[i:], ops)
        upper = self._split(c, m, ops)
        if i + m == len(s):
            return upper
        return self._add_leaf(upper, s[i + m:], ops)

    # -- label deduplication ------------------------------------------------

    def _touches(self, w: int, walk: _Walk) -> bool:
        """Whether completing ``walk`` would pass through or split node ``w``."""
        p, _, c, _ = walk
        if c == w:
            return True
        nodes = self._nodes
        target_depth = nodes[w].depth
        while p > 0 and nodes[p].depth >= target_depth:
            if p == w:
                return True
            p = nodes[p].parent
        return False

    def _may_depend(self, w: int, t: int) -> bool:
        # every dependency must point at a strictly shorter root path
        return t != w and self._nodes[t].depth < self._nodes[w].depth

    def _dedup(self, w: int, ops: OpCount) -> None:
        node = self._nodes[w]
        label = node.label
        if type(label) is not Direct:
            return
        s = label.chars
        root_child = node.parent == ROOT
        if len(s) == 1 and root_child:
            node.label = Atom(s)
            return
        walk = self._walk(s, ops)
        if not self._touches(w, walk):
            t = self._realize(s, walk, ops)
            if self._may_depend(w, t):
                node.label = Ref(t)
                return
        if root_child:
            # every proper prefix path of a root child's label runs through
            # the node itself; the best left is an existing path for a suffix
            for k in range(1, len(s)):
                p, i, c, _ = self._walk(s[k:], ops)
                if c is None and i == len(s) - k:
                    self._split(w, k, ops)
                    return
            return
        for k in range(len(s) - 1, 0, -1):
            walk = self._walk(s[:k], ops)
            if self._touches(w, walk):
                continue
            t = self._realize(s[:k], walk, ops)
            if self._may_depend(w, t):
                node.label = RefSuffix(t, s[k:])
                return

    def _drain(self, ops: OpCount) -> None:
        pending = self._pending
        while pending:
            self._dedup(pending.pop(), ops)

    # -- invariants ---------------------------------------------------------

    def check_invariants(self) -> InvariantReport:
        from .invariants import check_invariants

        return check_invariants(self)


@contextmanager
def gc_paused():
    """Suspend the cycle collector for a bulk load.

    Tries hold no reference cycles, so collection passes over a growing trie
    only cost time.  The previous collector state is restored on exit.
    """
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def new_trie(max_word_length: int = DEFAULT_MAX_WORD_LENGTH) -> Trie:
    return Trie(max_word_length)
