"""Scoring documents against the word-set features of a trained model."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .apriori import Itemset, itemset
from .corpus import LabeledDocument, StopWordList
from .model import MODES, TrainedModel, WordSetFeature
from .preprocess import make_transaction

# linear scores are only reported for products of at most this many factors
MAX_LINEAR_FACTORS = 15


@dataclass(frozen=True)
class MatchEvidence:
    feature: WordSetFeature
    intersection: Itemset

    @property
    def fraction(self) -> Fraction:
        return Fraction(len(self.intersection), len(self.feature.itemset))


@dataclass
class ClassificationResult:
    scores: dict[str, float]
    predicted: str
    matched: list[MatchEvidence]
    mode: str
    tie: bool = False
    n_factors: int = 0
    frequent_words: Itemset = ()

    @property
    def matched_any(self) -> bool:
        return bool(self.matched)

    @property
    def linear_scores(self) -> dict[str, float] | None:
        if self.n_factors > MAX_LINEAR_FACTORS:
            return None
        return {c: 10.0 ** s for c, s in self.scores.items()}


def match_word_sets(model: TrainedModel, frequent_words: Iterable[str]) -> list[MatchEvidence]:
    """Features sharing at least two words with the document's frequent words."""
    words = frozenset(frequent_words)
    matches = []
    for feat in sorted(model.features, key=lambda f: f.itemset):
        shared = itemset(w for w in feat.itemset if w in words)
        if len(shared) >= 2:
            matches.append(MatchEvidence(feat, shared))
    return matches


# log scores this close to the best are re-ranked on exact products
_NEAR_TIE = 1e-9


def _argmax(classes, scores, factors):
    best = max(scores[c] for c in classes)
    close = [c for c in classes if scores[c] >= best - _NEAR_TIE]
    if len(close) == 1:
        return close[0], False
    exact = {}
    for c in close:
        prod = Fraction(1)
        for f in factors[c]:
            prod *= f
        exact[c] = prod
    top = max(exact.values())
    winners = [c for c in close if exact[c] == top]
    return winners[0], len(winners) > 1


def score(model: TrainedModel, matches: list[MatchEvidence], mode: str = "subset") -> ClassificationResult:
    """Naive Bayes log10 scores for each class.

    subset: matches are grouped by their shared words; each group contributes
    one factor per class, the largest probability among its features.
    weighted: every match contributes its probability times the fraction of
    the feature's words that matched.
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    classes = model.classes
    prior = model.prior
    scores = {c: math.log10(prior[c]) for c in classes}
    factors = {c: [prior[c]] for c in classes}

    if mode == "subset":
        groups: dict[Itemset, list[MatchEvidence]] = {}
        for m in matches:
            groups.setdefault(m.intersection, []).append(m)
        for key in sorted(groups):
            for c in classes:
                p = max(m.feature.per_class_prob[c] for m in groups[key])
                factors[c].append(p)
                scores[c] += math.log10(p)
        n_factors = len(groups)
    else:
        for m in sorted(matches, key=lambda m: (m.feature.itemset, m.intersection)):
            for c in classes:
                p = m.feature.per_class_prob[c] * m.fraction
                factors[c].append(p)
                scores[c] += math.log10(p)
        n_factors = len(matches)

    predicted, tie = _argmax(classes, scores, factors)
    return ClassificationResult(scores, predicted, list(matches), mode, tie, n_factors)


def classify_document(model: TrainedModel, raw_text: str, stopwords: StopWordList,
                      mode: str | None = None, exceptions=None) -> ClassificationResult:
    mode = mode or model.config.mode
    doc = LabeledDocument("<input>", "", raw_text)
    trans = make_transaction(doc, stopwords, model.config.max_words, exceptions=exceptions)
    result = score(model, match_word_sets(model, trans.items), mode)
    result.frequent_words = trans.items
    return result
