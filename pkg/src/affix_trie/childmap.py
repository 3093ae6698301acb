"""Ordered child map used by the trie nodes.

Children are kept in two parallel lists sorted by key character, so lookup is
a binary search and iteration is in key order.  ``probes(n)`` reports how many
comparisons that search costs, which feeds the operation counters.
"""

from __future__ import annotations

from bisect import bisect_left
from typing import Iterator


class ChildMap:
    __slots__ = ("keys", "values")

    def __init__(self):
        self.keys: list[str] = []
        self.values: list[int] = []

    def __len__(self) -> int:
        return len(self.keys)

    def __iter__(self) -> Iterator[str]:
        return iter(self.keys)

    def __contains__(self, key: str) -> bool:
        i = bisect_left(self.keys, key)
        return i < len(self.keys) and self.keys[i] == key

    def probes(self) -> int:
        # comparisons made by a binary search over len(keys) entries
        return len(self.keys).bit_length()

    def get(self, key: str, default=None):
        keys = self.keys
        i = bisect_left(keys, key)
        if i < len(keys) and keys[i] == key:
            return self.values[i]
        return default

    def set(self, key: str, value: int) -> None:
        keys = self.keys
        i = bisect_left(keys, key)
        if i < len(keys) and keys[i] == key:
            self.values[i] = value
        else:
            keys.insert(i, key)
            self.values.insert(i, value)

    def items(self) -> Iterator[tuple[str, int]]:
        return zip(self.keys, self.values)

    def __repr__(self):
        return f"ChildMap({dict(self.items())!r})"
