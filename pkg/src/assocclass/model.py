"""Word-set Naive Bayes model built from maximal frequent word sets."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Sequence

from .apriori import Itemset, TransactionDB, itemset, mine_frequent_itemsets
from .errors import ModelError
from .preprocess import DEFAULT_MAX_WORDS, Transaction

SCHEMA_VERSION = 1
MODES = ("subset", "weighted")


@dataclass(frozen=True)
class ModelConfig:
    min_support: float = 0.02
    min_confidence: float = 0.75
    max_words: int = DEFAULT_MAX_WORDS
    min_words: int = DEFAULT_MAX_WORDS
    mode: str = "subset"
    stopword_digest: str = ""
    exception_digest: str = ""


@dataclass(frozen=True)
class WordSetFeature:
    itemset: Itemset
    per_class_count: dict[str, int]
    per_class_prob: dict[str, Fraction]
    owner_class: str


@dataclass
class TrainedModel:
    classes: tuple[str, ...]
    doc_count: dict[str, int]
    wordset_count: dict[str, int]
    vocabulary_size: int
    features: list[WordSetFeature]
    config: ModelConfig = field(default_factory=ModelConfig)

    @property
    def prior(self) -> dict[str, Fraction]:
        return compute_priors(self.doc_count)


def compute_priors(doc_count: Mapping[str, int]) -> dict[str, Fraction]:
    if not doc_count:
        raise ModelError("no classes")
    if any(c < 1 for c in doc_count.values()):
        raise ModelError("document counts must be positive")
    total = sum(doc_count.values())
    return {c: Fraction(n, total) for c, n in doc_count.items()}


def estimate_probability(n_k: int, n_c: int, vocabulary_size: int) -> Fraction:
    """m-estimate (n_k + 1) / (n_c + |vocabulary|), as an exact fraction."""
    if vocabulary_size < 1:
        raise ValueError("vocabulary_size must be >= 1")
    if n_k < 0 or n_c < 0:
        raise ValueError("counts must be non-negative")
    return Fraction(n_k + 1, n_c + vocabulary_size)


def assemble_model(classes: Sequence[str], doc_count: Mapping[str, int],
                   feature_counts: Mapping[Itemset, Mapping[str, int]],
                   config: ModelConfig | None = None) -> TrainedModel:
    """Derive owners, per-class word-set totals and probabilities from raw counts.

    Shared by training and loading, so a model on disk only has to carry
    counts. Each feature is owned by the class with the highest count, the
    earlier class (in ``classes`` order) winning ties.
    """
    classes = tuple(classes)
    if set(doc_count) != set(classes):
        raise ModelError("doc_count classes do not match model classes")
    counted = []
    for items, counts in feature_counts.items():
        items = itemset(items)
        if len(items) < 2:
            raise ModelError(f"word set {items} has fewer than 2 items")
        full = {c: int(counts.get(c, 0)) for c in classes}
        owner = max(classes, key=lambda c: (full[c], -classes.index(c)))
        counted.append((items, full, owner))
    counted.sort(key=lambda t: t[0])

    vocab = len(counted)
    if vocab == 0:
        raise ModelError("no features (lower min_support)")
    wordset_count = {c: 0 for c in classes}
    for _, _, owner in counted:
        wordset_count[owner] += 1

    features = [
        WordSetFeature(items, full,
                       {c: estimate_probability(full[c], wordset_count[c], vocab) for c in classes},
                       owner)
        for items, full, owner in counted
    ]
    return TrainedModel(classes, {c: int(doc_count[c]) for c in classes}, wordset_count,
                        vocab, features, config or ModelConfig())


def maximal_itemsets(result) -> list[Itemset]:
    """Frequent itemsets of size >= 2 that have no frequent proper superset."""
    out = []
    for k, level in enumerate(result.levels, 1):
        if k < 2:
            continue
        covered = set()
        for sup in result.level(k + 1):
            s = sup.itemset
            covered.update(s[:i] + s[i + 1:] for i in range(len(s)))
        out.extend(f.itemset for f in level if f.itemset not in covered)
    return sorted(out)


def build_model(transactions: Sequence[Transaction], min_support=0.02,
                max_words: int = DEFAULT_MAX_WORDS, config: ModelConfig | None = None) -> TrainedModel:
    """Mine all transactions together and keep maximal word sets as features.

    Labels are ignored while mining; per-class counts are tallied afterwards
    over the transactions of each class.
    """
    for t in transactions:
        if t.class_label is None:
            raise ModelError(f"transaction {t.doc_id} has no class label")
        if len(t.items) < 2:
            raise ModelError(f"transaction {t.doc_id} has fewer than 2 items")
    classes = tuple(sorted({t.class_label for t in transactions}))
    if len(classes) < 2:
        raise ModelError("degenerate corpus: need at least 2 classes")

    if config is None:
        config = ModelConfig(min_support=float(min_support), max_words=max_words)
    db = TransactionDB.from_itemsets([t.items for t in transactions], [t.doc_id for t in transactions])
    result = mine_frequent_itemsets(db, min_support)

    labels = [t.class_label for t in transactions]
    feature_counts = {}
    for items in maximal_itemsets(result):
        wanted = frozenset(items)
        counts = {c: 0 for c in classes}
        for label, t in zip(labels, db.transactions):
            if wanted <= t:
                counts[label] += 1
        feature_counts[items] = counts

    doc_count = {c: labels.count(c) for c in classes}
    return assemble_model(classes, doc_count, feature_counts, config)


# -- persistence ---------------------------------------------------------------

def model_to_dict(model: TrainedModel) -> dict:
    prior = model.prior
    return {
        "schema_version": SCHEMA_VERSION,
        "classes": list(model.classes),
        "priors": {c: repr(float(prior[c])) for c in model.classes},
        "doc_count": dict(model.doc_count),
        "wordset_count": dict(model.wordset_count),
        "vocabulary_size": model.vocabulary_size,
        "config": asdict(model.config),
        "features": [
            {
                "items": list(f.itemset),
                "per_class_count": dict(f.per_class_count),
                "per_class_prob": {c: repr(float(p)) for c, p in f.per_class_prob.items()},
                "owner": f.owner_class,
            }
            for f in model.features
        ],
    }


def save_model(model: TrainedModel, path) -> None:
    text = json.dumps(model_to_dict(model), indent=1, ensure_ascii=False)
    Path(path).write_text(text + "\n", encoding="utf-8")


def _require(obj, key, where, kind):
    if not isinstance(obj, dict) or key not in obj:
        raise ModelError(f"{where}: missing field {key!r}")
    val = obj[key]
    if kind is int and isinstance(val, bool) or not isinstance(val, kind):
        raise ModelError(f"{where}.{key}: expected {getattr(kind, '__name__', kind)}")
    return val


def _check_decimal(stored, exact: Fraction, where):
    try:
        value = float(stored)
    except (TypeError, ValueError):
        raise ModelError(f"{where}: not a decimal string: {stored!r}") from None
    if abs(value - float(exact)) > 1e-12:
        raise ModelError(f"{where}: stored {stored} disagrees with recomputed {float(exact)!r}")


def model_from_dict(data: dict) -> TrainedModel:
    if not isinstance(data, dict):
        raise ModelError("model file: top level must be an object")
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ModelError(f"unsupported model version: {version!r}")

    classes = _require(data, "classes", "model", list)
    doc_count = _require(data, "doc_count", "model", dict)
    if not classes or any(not isinstance(c, str) or not c for c in classes) \
            or len(set(classes)) != len(classes):
        raise ModelError("model.classes: expected distinct non-empty strings")
    for c, n in doc_count.items():
        if not isinstance(n, int) or isinstance(n, bool):
            raise ModelError(f"model.doc_count.{c}: expected int")
    config_raw = data.get("config", {})
    try:
        config = ModelConfig(**config_raw)
    except TypeError as exc:
        raise ModelError(f"model.config: {exc}") from None
    if config.mode not in MODES:
        raise ModelError(f"model.config.mode: unknown mode {config.mode!r}")

    feature_counts = {}
    stored_owner = {}
    stored_probs = {}
    for i, feat in enumerate(_require(data, "features", "model", list)):
        where = f"features[{i}]"
        items = _require(feat, "items", where, list)
        counts = _require(feat, "per_class_count", where, dict)
        if any(not isinstance(x, str) for x in items):
            raise ModelError(f"{where}.items: items must be strings")
        unknown = set(counts) - set(classes)
        if unknown:
            raise ModelError(f"{where}.per_class_count: unknown classes {sorted(unknown)}")
        key = itemset(items)
        if key in feature_counts:
            raise ModelError(f"{where}: duplicate word set {list(key)}")
        feature_counts[key] = counts
        stored_owner[key] = (_require(feat, "owner", where, str), where)
        if "per_class_prob" in feat:
            stored_probs[key] = (feat["per_class_prob"], where)

    model = assemble_model(classes, doc_count, feature_counts, config)

    for f in model.features:
        owner, where = stored_owner[f.itemset]
        if owner != f.owner_class:
            raise ModelError(f"{where}.owner: stored {owner!r}, counts give {f.owner_class!r}")
        if f.itemset in stored_probs:
            probs, where = stored_probs[f.itemset]
            for c, s in probs.items():
                if c not in f.per_class_prob:
                    raise ModelError(f"{where}.per_class_prob: unknown class {c!r}")
                _check_decimal(s, f.per_class_prob[c], f"{where}.per_class_prob.{c}")
    if _require(data, "vocabulary_size", "model", int) != model.vocabulary_size:
        raise ModelError(f"model.vocabulary_size: stored {data['vocabulary_size']}, "
                         f"features give {model.vocabulary_size}")
    if _require(data, "wordset_count", "model", dict) != model.wordset_count:
        raise ModelError("model.wordset_count disagrees with feature owners")
    prior = model.prior
    for c, s in data.get("priors", {}).items():
        if c not in prior:
            raise ModelError(f"model.priors: unknown class {c!r}")
        _check_decimal(s, prior[c], f"model.priors.{c}")
    return model


def load_model(path) -> TrainedModel:
    p = Path(path)
    try:
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ModelError(f"cannot read model {p}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ModelError(f"{p}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return model_from_dict(data)
