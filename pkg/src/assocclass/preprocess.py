"""Raw text -> transaction of frequent words.

Pipeline: tokenize, drop stop words, fold plurals onto singulars, keep words
seen at least twice, and cap the result at K words (most frequent first,
earliest first occurrence on ties).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .apriori import Itemset, itemset
from .corpus import LabeledDocument, StopWordList, default_plural_exceptions

DEFAULT_MAX_WORDS = 13
MIN_TOKEN_LENGTH = 3

# runs of letters/digits, optionally joined by single internal hyphens
_TOKEN_RE = re.compile(r"[^\W_]+(?:-[^\W_]+)*")


@dataclass(frozen=True)
class TokenOccurrence:
    token: str
    first_position: int
    count: int = 1


@dataclass(frozen=True)
class Transaction:
    doc_id: str
    class_label: str | None
    items: Itemset
    n_frequent: int = 0
    trainable: bool = True


@lru_cache(maxsize=1)
def _bundled_exceptions() -> frozenset[str]:
    return default_plural_exceptions()


def tokenize(raw_text: str) -> list[str]:
    tokens = []
    for m in _TOKEN_RE.finditer(raw_text):
        tok = m.group().lower()
        if len(tok) < MIN_TOKEN_LENGTH or tok.isdigit():
            continue
        tokens.append(tok)
    return tokens


def normalize_plural(token: str, exceptions: Iterable[str] | None = None) -> str:
    """Map a plural onto its singular with a single-suffix rule.

    Words in ``exceptions`` (the bundled table by default) and words ending
    in "ss", "us" or "is" are returned as is; otherwise one trailing "s" is
    removed.
    """
    if exceptions is None:
        exceptions = _bundled_exceptions()
    if token in exceptions or token.endswith(("ss", "us", "is")):
        return token
    if len(token) > 1 and token.endswith("s"):
        return token[:-1]
    return token


def extract_frequent_words(tokens: list[str], stopwords: StopWordList,
                           exceptions: Iterable[str] | None = None) -> list[TokenOccurrence]:
    """Normalized non-stop words occurring at least twice, in first-seen order."""
    if exceptions is None:
        exceptions = _bundled_exceptions()
    counts: dict[str, int] = {}
    first: dict[str, int] = {}
    for pos, tok in enumerate(tokens):
        if tok in stopwords:
            continue
        word = normalize_plural(tok, exceptions)
        if word in stopwords:
            continue
        counts[word] = counts.get(word, 0) + 1
        first.setdefault(word, pos)
    frequent = [TokenOccurrence(w, first[w], c) for w, c in counts.items() if c >= 2]
    frequent.sort(key=lambda o: o.first_position)
    return frequent


def select_transaction_words(frequent: list[TokenOccurrence], k: int) -> Itemset:
    if k < 1:
        raise ValueError("K must be >= 1")
    ranked = sorted(frequent, key=lambda o: (-o.count, o.first_position, o.token))
    return itemset(o.token for o in ranked[:k])


def make_transaction(doc: LabeledDocument, stopwords: StopWordList, k: int = DEFAULT_MAX_WORDS,
                     min_words: int | None = None,
                     exceptions: Iterable[str] | None = None) -> Transaction:
    """Preprocess one document.

    ``trainable`` is False when the document has fewer than ``min_words``
    frequent words (default: ``k``); such documents are still fine to
    classify.
    """
    if min_words is None:
        min_words = k
    frequent = extract_frequent_words(tokenize(doc.raw_text), stopwords, exceptions)
    items = select_transaction_words(frequent, k)
    trainable = len(frequent) >= min_words and len(items) >= 2
    return Transaction(doc.id, doc.class_label, items, len(frequent), trainable)
