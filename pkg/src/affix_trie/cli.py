"""``affix-trie`` command line.

Exit codes: 0 success (or word found), 2 word not found, 1 any error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import __version__
from .baselines import StructureKind, build_counted
from .corpus import expand_corpus, load_words, parse_expand
from .errors import TrieError
from .metrics import InsertSummary, MemoryModel, compare_report, insert_report, make_row
from .snapshot import export_snapshot, import_snapshot

KINDS = [k.value for k in StructureKind]


def _structures(text: str) -> list[StructureKind]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    bad = [n for n in names if n not in KINDS]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown structure(s): {', '.join(bad)}")
    return [StructureKind(n) for n in names]


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="affix-trie", description="Shared-label radix trie tools.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a trie from a word list and write a snapshot")
    b.add_argument("--input", required=True)
    b.add_argument("--structure", default="improved", choices=KINDS)
    b.add_argument("--snapshot", required=True)

    q = sub.add_parser("query", help="look a word up in a snapshot")
    q.add_argument("--snapshot", required=True)
    q.add_argument("--word", required=True)
    q.add_argument("--ops", action="store_true", help="print operation counts")

    s = sub.add_parser("stats", help="structure statistics for one word list")
    s.add_argument("--input", required=True)
    s.add_argument("--structure", default="improved", choices=KINDS)
    s.add_argument("--expand", default="none", help='suffixes to append: none, "1" or "1,2"')
    s.add_argument("--format", default="table", choices=["table", "csv"])
    s.add_argument("--alphabet", type=int, default=128, help="native trie alphabet size")
    s.add_argument("--memory-model", help="JSON file overriding byte costs")

    n = sub.add_parser("bench", help="compare several structures on one word list")
    n.add_argument("--input", required=True)
    n.add_argument("--structures", required=True, type=_structures)
    n.add_argument("--expand", default="none")
    n.add_argument("--format", default="table", choices=["table", "csv"])
    n.add_argument("--alphabet", type=int, default=128)
    n.add_argument("--memory-model", help="JSON file overriding byte costs")
    return p


def _load(args):
    words = load_words(args.input)
    suffixes = parse_expand(getattr(args, "expand", "none"))
    return expand_corpus(words, suffixes) if suffixes else words


def _model(args) -> MemoryModel:
    path = getattr(args, "memory_model", None)
    return MemoryModel.from_json(path) if path else MemoryModel()


def cmd_build(args) -> int:
    if args.structure != StructureKind.IMPROVED.value:
        raise ValueError("only the improved trie can be written as a snapshot")
    words = _load(args)
    trie, costs = build_counted(StructureKind.IMPROVED, words)
    export_snapshot(trie, args.snapshot)
    print(f"words={len(trie)}")
    print(f"build_ops={sum(costs)}")
    return 0


def cmd_query(args) -> int:
    trie = import_snapshot(args.snapshot)
    found, ops = trie.contains(args.word)
    print("found" if found else "not-found")
    if args.ops:
        print(f"traversals={ops.traversals}")
        print(f"loop_iterations={ops.loop_iterations}")
        print(f"total={ops.total}")
    return 0 if found else 2


def cmd_stats(args) -> int:
    words = _load(args)
    model = _model(args)
    structure, costs = build_counted(args.structure, words, args.alphabet)
    row = make_row(args.structure, structure.stats(), sum(costs), model)
    sys.stdout.write(compare_report([row], args.format))
    return 0


def cmd_bench(args) -> int:
    if len(args.structures) < 2:
        raise ValueError("bench needs at least two structures")
    words = _load(args)
    model = _model(args)
    rows, summaries = [], []
    for kind in args.structures:
        structure, costs = build_counted(kind, words, args.alphabet)
        rows.append(make_row(kind.value, structure.stats(), sum(costs), model))
        summaries.append(InsertSummary.from_costs(kind.value, costs))
    # everything is built before anything is printed
    out = compare_report(rows, args.format) + "\n" + insert_report(summaries, args.format)
    sys.stdout.write(out)
    return 0


COMMANDS = {"build": cmd_build, "query": cmd_query, "stats": cmd_stats, "bench": cmd_bench}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; 2 is reserved for "not found"
        return 0 if exc.code == 0 else 1
    try:
        return COMMANDS[args.command](args)
    except FileNotFoundError as exc:
        print(f"error: no such file: {exc.filename}", file=sys.stderr)
    except (OSError, TrieError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
