"""Radix trie with shared, root-anchored edge labels, plus comparison baselines."""

__version__ = "0.1.0"

from .baselines import (
    AVLStringSet,
    BaselineStats,
    NativeTrie,
    RadixTrie,
    StructureKind,
    baseline_contains,
    baseline_stats,
    build_counted,
    build_structure,
    make_structure,
)
from .corpus import WordList, expand_corpus, load_bundled, load_words, write_words
from .errors import (
    AlphabetOverflow,
    BadSplitOffset,
    EmptyWord,
    MalformedSnapshot,
    NotUtf8,
    SinkWriteFailure,
    TrieError,
    UnknownHandle,
    UnresolvableLabel,
    UnsupportedVersion,
    WordTooLong,
)
from .metrics import ComparisonRow, MemoryModel, compare_report, memory_estimate
from .snapshot import export_snapshot, import_snapshot
from .tank import Tank, TankHandle
from .trie import (
    Atom,
    Direct,
    InvariantReport,
    OpCount,
    Ref,
    RefSuffix,
    Trie,
    TrieStats,
    new_trie,
)

__all__ = [
    "AVLStringSet",
    "AlphabetOverflow",
    "Atom",
    "BadSplitOffset",
    "BaselineStats",
    "ComparisonRow",
    "Direct",
    "EmptyWord",
    "InvariantReport",
    "MalformedSnapshot",
    "MemoryModel",
    "NativeTrie",
    "NotUtf8",
    "OpCount",
    "RadixTrie",
    "Ref",
    "RefSuffix",
    "SinkWriteFailure",
    "StructureKind",
    "Tank",
    "TankHandle",
    "Trie",
    "TrieError",
    "TrieStats",
    "UnknownHandle",
    "UnresolvableLabel",
    "UnsupportedVersion",
    "WordList",
    "WordTooLong",
    "baseline_contains",
    "baseline_stats",
    "build_counted",
    "build_structure",
    "compare_report",
    "expand_corpus",
    "export_snapshot",
    "import_snapshot",
    "load_bundled",
    "load_words",
    "make_structure",
    "memory_estimate",
    "new_trie",
    "write_words",
]
