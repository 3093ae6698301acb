"""Exception types raised across the package."""


class TrieError(Exception):
    """Base class for all library errors."""


class EmptyWord(TrieError, ValueError):
    pass


class WordTooLong(TrieError, ValueError):
    def __init__(self, length: int, limit: int):
        super().__init__(f"word of length {length} exceeds the limit of {limit}")
        self.length = length
        self.limit = limit


class BadSplitOffset(TrieError, ValueError):
    pass


class UnresolvableLabel(TrieError):
    """A label could not be resolved; the dependency graph is broken."""

    def __init__(self, node: int, reason: str = "label resolution does not terminate"):
        super().__init__(f"node {node}: {reason}")
        self.node = node


class UnknownHandle(TrieError, KeyError):
    def __init__(self, handle):
        super().__init__(handle)
        self.handle = handle

    def __str__(self):
        return f"unknown handle {self.handle!r}"


class MalformedSnapshot(TrieError, ValueError):
    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class UnsupportedVersion(TrieError, ValueError):
    pass


class SinkWriteFailure(TrieError, OSError):
    pass


class AlphabetOverflow(TrieError, ValueError):
    def __init__(self, char: str, alphabet_size: int):
        super().__init__(
            f"character {char!r} (U+{ord(char):04X}) is outside an alphabet of size {alphabet_size}"
        )
        self.char = char
        self.alphabet_size = alphabet_size


class NotUtf8(TrieError, ValueError):
    def __init__(self, path, offset: int):
        super().__init__(f"{path}: invalid UTF-8 at byte offset {offset}")
        self.path = path
        self.offset = offset
