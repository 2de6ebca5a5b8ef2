"""Loading of labeled documents and word lists from disk."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import CorpusError


@dataclass(frozen=True)
class LabeledDocument:
    id: str
    class_label: str
    raw_text: str


@dataclass(frozen=True)
class StopWordList:
    words: frozenset[str]

    def __contains__(self, word):
        return word in self.words

    def __len__(self):
        return len(self.words)

    def digest(self) -> str:
        return word_list_digest(self.words)


def word_list_digest(words) -> str:
    """Short stable fingerprint of a word list, recorded in trained models."""
    joined = "\n".join(sorted(words)).encode("utf-8")
    return hashlib.sha256(joined).hexdigest()[:16]


def load_corpus(root_path) -> list[LabeledDocument]:
    """Read ``<root>/<class>/<file>`` into documents sorted by id.

    Each immediate subdirectory is one class; every regular, non-hidden file
    inside it is one document. Files must be UTF-8.
    """
    root = Path(root_path)
    if not root.is_dir():
        raise CorpusError(f"corpus not found: {root}")

    docs = []
    for class_dir in sorted(p for p in root.iterdir() if p.is_dir() and not p.name.startswith(".")):
        for f in sorted(class_dir.iterdir()):
            if not f.is_file() or f.name.startswith("."):
                continue
            try:
                text = f.read_text(encoding="utf-8")
            except (OSError, UnicodeDecodeError) as exc:
                raise CorpusError(f"cannot read document {f}: {exc}") from exc
            docs.append(LabeledDocument(f"{class_dir.name}/{f.name}", class_dir.name, text))
    if not docs:
        raise CorpusError(f"empty corpus: {root}")
    docs.sort(key=lambda d: d.id)
    return docs


def _read_word_lines(lines) -> frozenset[str]:
    words = set()
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        words.add(line.lower())
    return frozenset(words)


def load_stopwords(path) -> StopWordList:
    p = Path(path)
    if not p.is_file():
        raise CorpusError(f"stopword file not found: {p}")
    words = _read_word_lines(p.read_text(encoding="utf-8").splitlines())
    bad = sorted(w for w in words if any(ch.isspace() for ch in w))
    if bad:
        raise CorpusError(f"{p}: stop words may not contain whitespace: {bad[:3]}")
    return StopWordList(words)


def load_word_list(path) -> frozenset[str]:
    """Plain word-per-line file (used for the plural exception table)."""
    p = Path(path)
    if not p.is_file():
        raise CorpusError(f"word list not found: {p}")
    return _read_word_lines(p.read_text(encoding="utf-8").splitlines())


def data_path(name: str) -> Path:
    return Path(str(resources.files("assocclass") / "data" / name))


def default_stopwords() -> StopWordList:
    return load_stopwords(data_path("stopwords.txt"))


def default_plural_exceptions() -> frozenset[str]:
    return load_word_list(data_path("plural_exceptions.txt"))
