"""Reference structures to compare the shared-label trie against.

* ``RadixTrie`` - PATRICIA-style trie, every label stored as characters.
* ``NativeTrie`` - one node per character, each with a full child array.
* ``AVLStringSet`` - balanced binary search tree of whole strings; stands in
  for both the AVL-tree and ``std::map`` comparisons.

All of them count work with the same rules as the improved trie: one
traversal per node entered, one loop step per character compared, plus the
binary-search probes of an ordered child map.
"""

from __future__ import annotations

import enum
from array import array
from bisect import bisect_left
from dataclasses import dataclass
from typing import Iterable, Optional, Union

from .childmap import ChildMap
from .errors import AlphabetOverflow, EmptyWord
from .trie import OpCount, Trie, gc_paused


class StructureKind(str, enum.Enum):
    IMPROVED = "improved"
    RADIX = "radix"
    NATIVE = "native"
    BST = "bst"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class BaselineStats:
    kind: StructureKind
    total_nodes: int
    label_cells: int
    # allocated child capacity for the native trie; links in use otherwise
    child_slots: int
    word_count: int
    empty_nodes: int = 0


def _check_word(word: str) -> None:
    if not word:
        raise EmptyWord("cannot insert the empty string")


class RadixTrie:
    kind = StructureKind.RADIX

    def __init__(self):
        self._labels: list[str] = [""]
        self._children: list[ChildMap] = [ChildMap()]
        self._end: list[bool] = [False]
        self._word_count = 0

    def __len__(self):
        return self._word_count

    def __contains__(self, word: str) -> bool:
        return self.contains(word)[0]

    def _new(self, label: str) -> int:
        self._labels.append(label)
        self._children.append(ChildMap())
        self._end.append(False)
        return len(self._labels) - 1

    def _descend(self, word: str, ops: OpCount):
        """Returns (node, consumed, partially matched child or None, matched)."""
        p, i, n = 0, 0, len(word)
        while i < n:
            ops.traversals += 1
            children = self._children[p]
            ops.loop_iterations += children.probes()
            c = children.get(word[i])
            if c is None:
                return p, i, None, 0
            label = self._labels[c]
            m = 0
            limit = min(len(label), n - i)
            while m < limit and label[m] == word[i + m]:
                m += 1
            ops.loop_iterations += m + (m < limit)
            if m < len(label):
                return p, i, c, m
            p, i = c, i + m
        ops.traversals += 1
        return p, i, None, 0

    def insert_counted(self, word: str) -> tuple[int, OpCount]:
        _check_word(word)
        ops = OpCount()
        p, i, c, m = self._descend(word, ops)
        if c is None:
            node = p if i == len(word) else self._add(p, word[i:])
        else:
            # split the edge into c at the longest common prefix
            label = self._labels[c]
            mid = self._new(label[:m])
            self._children[p].set(label[0], mid)
            self._labels[c] = label[m:]
            self._children[mid].set(label[m], c)
            ops.loop_iterations += len(label)
            node = mid if i + m == len(word) else self._add(mid, word[i + m:])
        if not self._end[node]:
            self._end[node] = True
            self._word_count += 1
        return node, ops

    def _add(self, parent: int, rest: str) -> int:
        leaf = self._new(rest)
        self._children[parent].set(rest[0], leaf)
        return leaf

    def insert(self, word: str) -> int:
        return self.insert_counted(word)[0]

    def contains(self, word: str) -> tuple[bool, OpCount]:
        ops = OpCount()
        if not word:
            return False, ops
        p, i, c, _ = self._descend(word, ops)
        return c is None and i == len(word) and self._end[p], ops

    def nodes(self):
        """(label, child ids, word_end) for every node, root first."""
        for label, children, end in zip(self._labels, self._children, self._end):
            yield label, list(children.values), end

    def stats(self) -> BaselineStats:
        return BaselineStats(
            kind=self.kind,
            total_nodes=len(self._labels),
            label_cells=sum(map(len, self._labels)),
            child_slots=sum(len(c) for c in self._children),
            word_count=self._word_count,
            empty_nodes=sum(1 for label in self._labels if not label),
        )


class NativeTrie:
    """Character-per-node trie with a fixed child array of ``alphabet_size`` slots."""

    kind = StructureKind.NATIVE

    def __init__(self, alphabet_size: int = 128):
        if alphabet_size < 1:
            raise ValueError("alphabet_size must be positive")
        self.alphabet_size = alphabet_size
        self._slots = [self._array()]
        self._end = [False]
        self._word_count = 0

    def _array(self) -> array:
        # 0 means "no child": the root is never anyone's child
        return array("i", bytes(4 * self.alphabet_size))

    def __len__(self):
        return self._word_count

    def __contains__(self, word: str) -> bool:
        return self.contains(word)[0]

    def insert_counted(self, word: str) -> tuple[int, OpCount]:
        _check_word(word)
        size = self.alphabet_size
        for ch in word:
            if ord(ch) >= size:
                raise AlphabetOverflow(ch, size)
        ops = OpCount()
        node = 0
        for ch in word:
            ops.traversals += 1
            ops.loop_iterations += 1
            slots = self._slots[node]
            nxt = slots[ord(ch)]
            if nxt == 0:
                nxt = len(self._slots)
                self._slots.append(self._array())
                self._end.append(False)
                slots[ord(ch)] = nxt
            node = nxt
        ops.traversals += 1
        if not self._end[node]:
            self._end[node] = True
            self._word_count += 1
        return node, ops

    def insert(self, word: str) -> int:
        return self.insert_counted(word)[0]

    def contains(self, word: str) -> tuple[bool, OpCount]:
        ops = OpCount()
        if not word:
            return False, ops
        size = self.alphabet_size
        node = 0
        for ch in word:
            ops.traversals += 1
            ops.loop_iterations += 1
            code = ord(ch)
            if code >= size:
                return False, ops
            node = self._slots[node][code]
            if node == 0:
                return False, ops
        ops.traversals += 1
        return self._end[node], ops

    def stats(self) -> BaselineStats:
        n = len(self._slots)
        return BaselineStats(
            kind=self.kind,
            total_nodes=n,
            label_cells=0,
            child_slots=n * self.alphabet_size,
            word_count=self._word_count,
            empty_nodes=n,
        )


class _AVLNode:
    __slots__ = ("key", "left", "right", "height")

    def __init__(self, key: str):
        self.key = key
        self.left: Optional[_AVLNode] = None
        self.right: Optional[_AVLNode] = None
        self.height = 1


def _height(node: Optional[_AVLNode]) -> int:
    return node.height if node else 0


def _compare(a: str, b: str, ops: OpCount) -> int:
    """Three-way string comparison that counts compared characters."""
    n = min(len(a), len(b))
    i = 0
    while i < n and a[i] == b[i]:
        i += 1
    ops.loop_iterations += i + 1
    if i < n:
        return -1 if a[i] < b[i] else 1
    return (len(a) > len(b)) - (len(a) < len(b))


class AVLStringSet:
    kind = StructureKind.BST

    def __init__(self):
        self._root: Optional[_AVLNode] = None
        self._size = 0

    def __len__(self):
        return self._size

    def __contains__(self, word: str) -> bool:
        return self.contains(word)[0]

    def __iter__(self):
        stack, node = [], self._root
        while stack or node:
            while node:
                stack.append(node)
                node = node.left
            node = stack.pop()
            yield node.key
            node = node.right

    def height(self) -> int:
        return _height(self._root)

    @staticmethod
    def _fix(node: _AVLNode) -> None:
        node.height = 1 + max(_height(node.left), _height(node.right))

    def _rotate_right(self, y: _AVLNode) -> _AVLNode:
        x = y.left
        y.left = x.right
        x.right = y
        self._fix(y)
        self._fix(x)
        return x

    def _rotate_left(self, x: _AVLNode) -> _AVLNode:
        y = x.right
        x.right = y.left
        y.left = x
        self._fix(x)
        self._fix(y)
        return y

    def _balance(self, node: _AVLNode) -> _AVLNode:
        self._fix(node)
        skew = _height(node.left) - _height(node.right)
        if skew > 1:
            if _height(node.left.left) < _height(node.left.right):
                node.left = self._rotate_left(node.left)
            return self._rotate_right(node)
        if skew < -1:
            if _height(node.right.right) < _height(node.right.left):
                node.right = self._rotate_right(node.right)
            return self._rotate_left(node)
        return node

    def _insert(self, node: Optional[_AVLNode], word: str, ops: OpCount) -> _AVLNode:
        if node is None:
            self._size += 1
            return _AVLNode(word)
        ops.traversals += 1
        c = _compare(word, node.key, ops)
        if c < 0:
            node.left = self._insert(node.left, word, ops)
        elif c > 0:
            node.right = self._insert(node.right, word, ops)
        else:
            return node
        return self._balance(node)

    def insert_counted(self, word: str) -> tuple[None, OpCount]:
        _check_word(word)
        ops = OpCount()
        self._root = self._insert(self._root, word, ops)
        return None, ops

    def insert(self, word: str) -> None:
        self.insert_counted(word)

    def contains(self, word: str) -> tuple[bool, OpCount]:
        ops = OpCount()
        node = self._root
        while node is not None:
            ops.traversals += 1
            c = _compare(word, node.key, ops)
            if c == 0:
                return True, ops
            node = node.left if c < 0 else node.right
        return False, ops

    def stats(self) -> BaselineStats:
        return BaselineStats(
            kind=self.kind,
            total_nodes=self._size,
            label_cells=sum(len(k) for k in self),
            child_slots=max(self._size - 1, 0),
            word_count=self._size,
        )


Structure = Union[Trie, RadixTrie, NativeTrie, AVLStringSet]


def make_structure(kind: Union[StructureKind, str], alphabet_size: int = 128) -> Structure:
    kind = StructureKind(kind)
    if kind is StructureKind.IMPROVED:
        return Trie()
    if kind is StructureKind.RADIX:
        return RadixTrie()
    if kind is StructureKind.NATIVE:
        return NativeTrie(alphabet_size)
    return AVLStringSet()


def build_counted(
    kind: Union[StructureKind, str], words: Iterable[str], alphabet_size: int = 128
) -> tuple[Structure, list[int]]:
    """Build a structure and return it with the op total of every insert."""
    words = list(words)
    for w in words:
        _check_word(w)
    if StructureKind(kind) is StructureKind.NATIVE:
        # reject before building anything
        for w in words:
            for ch in w:
                if ord(ch) >= alphabet_size:
                    raise AlphabetOverflow(ch, alphabet_size)
    structure = make_structure(kind, alphabet_size)
    with gc_paused():
        costs = [structure.insert_counted(w)[1].total for w in words]
    return structure, costs


def build_structure(kind: Union[StructureKind, str], words: Iterable[str], alphabet_size: int = 128) -> Structure:
    return build_counted(kind, words, alphabet_size)[0]


def baseline_contains(structure: Structure, word: str) -> tuple[bool, OpCount]:
    return structure.contains(word)


def baseline_stats(structure: Structure) -> BaselineStats:
    if isinstance(structure, Trie):
        raise TypeError("use Trie.stats() for the improved trie")
    return structure.stats()
