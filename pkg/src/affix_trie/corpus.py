"""Word-list loading, writing and suffix expansion."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence, Union

from .errors import EmptyWord, NotUtf8

BUNDLED_20K = "google-20k.txt"


@dataclass(frozen=True)
class WordList:
    words: tuple[str, ...]
    source: str = "<memory>"
    total_chars: int = field(default=-1)

    def __post_init__(self):
        words = tuple(self.words)
        object.__setattr__(self, "words", words)
        if self.total_chars < 0:
            object.__setattr__(self, "total_chars", sum(map(len, words)))

    @classmethod
    def from_iterable(cls, words: Iterable[str], source: str = "<memory>") -> "WordList":
        """Drop empty strings and repeats, keeping first occurrences in order."""
        unique = dict.fromkeys(w for w in words if w)
        return cls(tuple(unique), source)

    @property
    def word_count(self) -> int:
        return len(self.words)

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __getitem__(self, index):
        return self.words[index]

    def distinct_chars(self) -> set[str]:
        return set("".join(self.words))


def load_words(path: Union[str, os.PathLike]) -> WordList:
    """Read one word per line.

    Trailing whitespace (CR included) is trimmed, blank lines are skipped and
    repeated words keep their first position.
    """
    raw = Path(path).read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise NotUtf8(os.fspath(path), exc.start) from None
    return WordList.from_iterable((line.rstrip() for line in text.split("\n")), os.fspath(path))


def write_words(words: Iterable[str], path: Union[str, os.PathLike]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for w in words:
            fh.write(w + "\n")


def expand_corpus(words: Union[WordList, Sequence[str]], suffixes: Sequence[str]) -> WordList:
    """The original words followed by one block of ``w + s`` per suffix, deduplicated."""
    for s in suffixes:
        if not s:
            raise EmptyWord("suffixes must be non-empty")
    base = list(words)
    blocks = [base] + [[w + s for w in base] for s in suffixes]
    source = getattr(words, "source", "<memory>")
    if suffixes:
        source += " +" + ",".join(suffixes)
    return WordList.from_iterable((w for block in blocks for w in block), source)


def parse_expand(mode: str) -> list[str]:
    """``"none"`` -> [], ``"1,2"`` -> ["1", "2"]."""
    if mode in ("", "none"):
        return []
    parts = mode.split(",")
    if any(not p for p in parts):
        raise ValueError(f"bad expand mode {mode!r}")
    return parts


def bundled_path(name: str = BUNDLED_20K) -> Path:
    return Path(str(resources.files("affix_trie") / "data" / name))


def load_bundled(name: str = BUNDLED_20K) -> WordList:
    return load_words(bundled_path(name))
