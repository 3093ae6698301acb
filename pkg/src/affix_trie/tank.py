"""Interning facade: callers keep small handles instead of strings.

Every interned word becomes a word-end node of a shared :class:`Trie`; the
handle is that node's id.  Node ids and root paths never change, so a handle
stays valid as long as the tank exists.

>>> tank = Tank()
>>> h = tank.intern("road")
>>> tank.intern("road") == h, tank.resolve(h)
(True, 'road')
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import UnknownHandle
from .trie import Trie


@dataclass(frozen=True, order=True)
class TankHandle:
    node: int


class Tank:
    def __init__(self, trie: Trie | None = None):
        self.trie = trie if trie is not None else Trie()

    def __len__(self) -> int:
        return len(self.trie)

    def __contains__(self, word: str) -> bool:
        return word in self.trie

    def intern(self, word: str) -> TankHandle:
        return TankHandle(self.trie.insert(word))

    def intern_all(self, words: Iterable[str]) -> list[TankHandle]:
        return [self.intern(w) for w in words]

    def lookup(self, word: str) -> TankHandle | None:
        """Handle of an already interned word, without interning it."""
        node = self.trie.find(word) if word else None
        if node is None or not self.trie.node(node).word_end:
            return None
        return TankHandle(node)

    def resolve(self, handle: TankHandle) -> str:
        node = handle.node if isinstance(handle, TankHandle) else None
        if not isinstance(node, int) or not 0 < node < self.trie.node_count:
            raise UnknownHandle(handle)
        if not self.trie.node(node).word_end:
            raise UnknownHandle(handle)
        return self.trie.materialize(node)
