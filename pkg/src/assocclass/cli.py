"""assocclass command line: train, classify, mine, inspect.

Exit status: 0 success, 1 usage or configuration error, 2 data error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .apriori import format_itemset_line, generate_rules, mine_frequent_itemsets, parse_transactions
from .classify import classify_document
from .corpus import (CorpusError, default_plural_exceptions, default_stopwords, load_corpus,
                     load_stopwords, load_word_list, word_list_digest)
from .errors import AssocClassError, ConfigError
from .model import MODES, ModelConfig, build_model, load_model, save_model
from .preprocess import DEFAULT_MAX_WORDS, make_transaction

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    min_support: float = 0.02
    min_confidence: float = 0.75
    max_words: int = DEFAULT_MAX_WORDS
    min_words: int | None = None
    mode: str = "subset"
    stopword_path: str | None = None
    exception_table_path: str | None = None

    def validate(self):
        if not 0 < self.min_support <= 1:
            raise ConfigError(f"--min-support must be in (0, 1], got {self.min_support}")
        if not 0 < self.min_confidence <= 1:
            raise ConfigError(f"--min-confidence must be in (0, 1], got {self.min_confidence}")
        if self.max_words < 2:
            raise ConfigError(f"--max-words must be >= 2, got {self.max_words}")
        if self.min_words is not None and self.min_words < 2:
            raise ConfigError(f"--min-words must be >= 2, got {self.min_words}")
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}")
        return self


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _word_lists(stopword_path, exception_path):
    stop = load_stopwords(stopword_path) if stopword_path else default_stopwords()
    exc = load_word_list(exception_path) if exception_path else default_plural_exceptions()
    return stop, exc


def cmd_train(args, out=None) -> int:
    out = out or sys.stdout
    cfg = RunConfig(args.min_support, args.min_confidence, args.max_words, args.min_words,
                    stopword_path=args.stopwords, exception_table_path=args.exceptions)
    try:
        cfg.validate()
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    min_words = cfg.min_words if cfg.min_words is not None else cfg.max_words

    stop, exc_words = _word_lists(cfg.stopword_path, cfg.exception_table_path)
    docs = load_corpus(args.corpus)
    transactions = [make_transaction(d, stop, cfg.max_words, min_words, exc_words) for d in docs]
    kept = [t for t in transactions if t.trainable]
    skipped = len(transactions) - len(kept)
    if skipped:
        print(f"excluded {skipped} of {len(transactions)} documents with fewer than "
              f"{min_words} frequent words", file=sys.stderr)
    if not kept:
        raise CorpusError("empty corpus: no document has enough frequent words")

    config = ModelConfig(cfg.min_support, cfg.min_confidence, cfg.max_words, min_words, cfg.mode,
                         stop.digest(), word_list_digest(exc_words))
    model = build_model(kept, cfg.min_support, cfg.max_words, config)
    save_model(model, args.out)

    prior = model.prior
    print("documents: " + ", ".join(f"{c}={model.doc_count[c]}" for c in model.classes), file=out)
    print("priors: " + ", ".join(f"{c}={float(prior[c]):.5f}" for c in model.classes), file=out)
    print(f"vocabulary={model.vocabulary_size}, "
          + ", ".join(f"{c}={model.wordset_count[c]}" for c in model.classes), file=out)
    print(f"model written to {args.out}", file=out)
    return EXIT_OK


def _fmt_prob(p) -> str:
    return f"{float(p):.4g}"


def cmd_classify(args, out=None) -> int:
    out = out or sys.stdout
    model = load_model(args.model)
    mode = args.mode or model.config.mode
    stop, exc_words = _word_lists(args.stopwords, args.exceptions)
    if model.config.stopword_digest and model.config.stopword_digest != stop.digest():
        print("warning: stop-word list differs from the one used in training", file=sys.stderr)

    for path in args.inputs:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise CorpusError(f"cannot read input {path}: {exc}") from exc
        res = classify_document(model, text, stop, mode, exc_words)
        status = "matched" if res.matched_any else "prior-only"
        if args.json:
            record = {
                "input": str(path),
                "predicted": res.predicted,
                "mode": res.mode,
                "matched_any": res.matched_any,
                "tie": res.tie,
                "scores": res.scores,
                "linear_scores": res.linear_scores,
                "frequent_words": list(res.frequent_words),
                "matches": [
                    {"word_set": list(m.feature.itemset), "shared": list(m.intersection),
                     "fraction": str(m.fraction)}
                    for m in res.matched
                ],
            }
            print(json.dumps(record, sort_keys=True), file=out)
        else:
            scores = " ".join(f"{c}={res.scores[c]:.4f}" for c in model.classes)
            tie = "\ttie" if res.tie else ""
            print(f"{path}\t{mode}\tmatches={len(res.matched)}\t{status}\tlog10 {scores}{tie}"
                  f"\t{res.predicted}", file=out)
    return EXIT_OK


def cmd_mine(args, out=None) -> int:
    out = out or sys.stdout
    if args.min_count is None and args.min_support is None:
        print("error: one of --min-count or --min-support is required", file=sys.stderr)
        return EXIT_USAGE
    if args.min_count is not None and args.min_count < 1:
        print("error: --min-count must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.min_support is not None and not 0 < args.min_support <= 1:
        print("error: --min-support must be in (0, 1]", file=sys.stderr)
        return EXIT_USAGE
    if not 0 < args.min_confidence <= 1:
        print("error: --min-confidence must be in (0, 1]", file=sys.stderr)
        return EXIT_USAGE

    path = Path(args.transactions)
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise CorpusError(f"cannot read {path}: {exc}") from exc
    try:
        db = parse_transactions(lines)
    except ValueError as exc:
        raise CorpusError(f"{path}: {exc}") from None
    if len(db) == 0:
        raise CorpusError(f"empty corpus: {path} has no transactions")

    threshold = args.min_count if args.min_count is not None else args.min_support
    result = mine_frequent_itemsets(db, threshold)
    print(f"# transactions={len(db)} min_support_count={result.min_support_count}", file=out)
    for k, level in enumerate(result.levels, 1):
        print(f"# L{k}", file=out)
        for f in level:
            print(format_itemset_line(f), file=out)
    rules = generate_rules(result, db, args.min_confidence)
    print(f"# rules min_confidence={args.min_confidence}", file=out)
    for r in rules:
        print(f"{','.join(r.antecedent)} => {','.join(r.consequent)}\t"
              f"support={r.support:.4g}\tconfidence={r.confidence:.4g}", file=out)
    return EXIT_OK


def cmd_inspect(args, out=None) -> int:
    out = out or sys.stdout
    model = load_model(args.model)
    order = {c: i for i, c in enumerate(model.classes)}
    rows = sorted(model.features,
                  key=lambda f: (order[f.owner_class], -f.per_class_count[f.owner_class], f.itemset))
    print(f"vocabulary={model.vocabulary_size}, "
          + ", ".join(f"{c}={model.wordset_count[c]}" for c in model.classes), file=out)
    for f in rows:
        counts = " ".join(f"{c}:{n}" for c, n in f.per_class_count.items() if n)
        probs = " ".join(f"{c}={_fmt_prob(f.per_class_prob[c])}" for c in model.classes)
        print(f"{', '.join(f.itemset)} | {counts} | {probs} | owner={f.owner_class}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="assocclass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("train", help="build a model from a labeled corpus directory")
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--min-support", type=float, default=0.02)
    p.add_argument("--min-confidence", type=float, default=0.75)
    p.add_argument("--max-words", type=int, default=DEFAULT_MAX_WORDS,
                   help="frequent words kept per document (K)")
    p.add_argument("--min-words", type=int, default=None,
                   help="training documents with fewer frequent words are skipped (default: K)")
    p.add_argument("--stopwords")
    p.add_argument("--exceptions", help="plural exception table")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("classify", help="classify text files with a trained model")
    p.add_argument("--model", required=True)
    p.add_argument("--mode", choices=MODES, default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--stopwords")
    p.add_argument("--exceptions")
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("mine", help="frequent itemsets and rules from a transaction file")
    p.add_argument("--transactions", required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--min-count", type=int)
    group.add_argument("--min-support", type=float)
    p.add_argument("--min-confidence", type=float, default=0.75)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("inspect", help="print a model's word-set table")
    p.add_argument("--model", required=True)
    p.set_defaults(func=cmd_inspect)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssocClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
