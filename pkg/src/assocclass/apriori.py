"""Level-wise Apriori mining of frequent itemsets and strong association rules.

Itemsets are plain tuples of strings kept in ascending order, so equality and
hashing never depend on the order items were supplied in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

Itemset = tuple[str, ...]


def itemset(items: Iterable[str]) -> Itemset:
    """Canonical form of a collection of items: distinct and ascending."""
    return tuple(sorted(set(items)))


@dataclass(frozen=True)
class TransactionDB:
    transactions: tuple[frozenset[str], ...]
    tids: tuple[str, ...] = ()

    def __post_init__(self):
        if self.tids and len(self.tids) != len(self.transactions):
            raise ValueError("tids and transactions differ in length")

    @classmethod
    def from_itemsets(cls, rows: Iterable[Iterable[str]], tids: Sequence[str] = ()):
        return cls(tuple(frozenset(r) for r in rows), tuple(tids))

    def __len__(self):
        return len(self.transactions)

    @property
    def item_universe(self) -> frozenset[str]:
        return frozenset().union(*self.transactions)


@dataclass(frozen=True, order=True)
class FrequentItemset:
    itemset: Itemset
    support_count: int


@dataclass
class MiningResult:
    levels: list[list[FrequentItemset]]
    min_support_count: int
    total_transactions: int
    # pruned candidate list C_k for every k >= 2 that was generated
    candidates: dict[int, list[Itemset]] = field(default_factory=dict)

    def all_itemsets(self) -> list[FrequentItemset]:
        return [f for level in self.levels for f in level]

    def counts(self) -> dict[Itemset, int]:
        return {f.itemset: f.support_count for f in self.all_itemsets()}

    def level(self, k: int) -> list[FrequentItemset]:
        """Frequent k-itemsets, or an empty list past the last level."""
        return self.levels[k - 1] if 0 < k <= len(self.levels) else []


@dataclass(frozen=True)
class AssociationRule:
    antecedent: Itemset
    consequent: Itemset
    support: float
    confidence: float
    support_count: int

    def __str__(self):
        return "{%s} => {%s}" % (", ".join(self.antecedent), ", ".join(self.consequent))


def support_count(db: TransactionDB, items: Iterable[str]) -> int:
    wanted = frozenset(items)
    if not wanted:
        raise ValueError("itemset must be non-empty")
    return sum(1 for t in db.transactions if wanted <= t)


def min_count_for(min_support, n_transactions: int) -> int:
    """Translate a support threshold into an absolute transaction count.

    An ``int`` is taken as the count itself. A ``float`` or ``Fraction`` in
    (0, 1] becomes ``max(1, floor(fraction * n))``, evaluated on the decimal
    value as written so that e.g. 0.29 * 100 gives 29, not 28.
    """
    if isinstance(min_support, bool):
        raise TypeError("min_support must be a number")
    if isinstance(min_support, int):
        if min_support < 1:
            raise ValueError(f"minimum support count must be >= 1, got {min_support}")
        return min_support
    frac = min_support if isinstance(min_support, Fraction) else Fraction(repr(float(min_support)))
    if not 0 < frac <= 1:
        raise ValueError(f"fractional min_support must be in (0, 1], got {min_support}")
    return max(1, math.floor(frac * n_transactions))


def _tid_masks(db: TransactionDB) -> dict[str, int]:
    masks: dict[str, int] = {}
    for pos, t in enumerate(db.transactions):
        bit = 1 << pos
        for item in t:
            masks[item] = masks.get(item, 0) | bit
    return masks


def find_frequent_1_itemsets(db: TransactionDB, min_count: int) -> list[FrequentItemset]:
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    counts: dict[str, int] = {}
    for t in db.transactions:
        for item in t:
            counts[item] = counts.get(item, 0) + 1
    return [FrequentItemset((item,), c) for item, c in sorted(counts.items()) if c >= min_count]


def _itemsets_of(level) -> list[Itemset]:
    return [f.itemset if isinstance(f, FrequentItemset) else tuple(f) for f in level]


def apriori_join(prev_level) -> list[Itemset]:
    """Self-join a level of (k-1)-itemsets into candidate k-itemsets.

    Two itemsets join when they agree on everything but the last item; the
    candidate is their union. Accepts FrequentItemsets or bare itemsets.
    """
    prev = _itemsets_of(prev_level)
    if not prev:
        return []
    size = len(prev[0])
    if size < 1 or any(len(s) != size for s in prev):
        raise ValueError("ragged level: all itemsets must have the same size")

    by_prefix: dict[Itemset, list[str]] = {}
    for s in prev:
        by_prefix.setdefault(s[:-1], []).append(s[-1])

    out = []
    for prefix, tails in by_prefix.items():
        tails = sorted(set(tails))
        for i, a in enumerate(tails):
            for b in tails[i + 1:]:
                out.append(prefix + (a, b))
    out.sort()
    return out


def apriori_prune(candidates: Iterable[Itemset], prev_level) -> list[Itemset]:
    """Drop candidates that have an infrequent (k-1)-subset."""
    frequent = set(_itemsets_of(prev_level))
    kept = []
    for cand in candidates:
        subsets = (cand[:i] + cand[i + 1:] for i in range(len(cand)))
        if all(s in frequent for s in subsets):
            kept.append(tuple(cand))
    return kept


def mine_frequent_itemsets(db: TransactionDB, min_support) -> MiningResult:
    """Find every itemset whose support count meets ``min_support``.

    ``min_support`` is either an absolute ``int`` count or a fraction of the
    number of transactions (see :func:`min_count_for`).
    """
    if len(db) == 0:
        raise ValueError("empty transaction database")
    min_count = min_count_for(min_support, len(db))
    result = MiningResult([], min_count, len(db))

    level = find_frequent_1_itemsets(db, min_count)
    masks = _tid_masks(db)
    k = 1
    while level:
        result.levels.append(level)
        k += 1
        cands = apriori_prune(apriori_join(level), level)
        result.candidates[k] = cands
        level = []
        for cand in cands:
            mask = masks[cand[0]]
            for item in cand[1:]:
                mask &= masks[item]
            count = mask.bit_count()
            if count >= min_count:
                level.append(FrequentItemset(cand, count))
    return result


def generate_rules(result: MiningResult, db: TransactionDB | None, min_conf) -> list[AssociationRule]:
    """All rules A => F - A over frequent itemsets F with confidence >= min_conf.

    Confidence is compared as an exact fraction. Antecedent counts come from
    the mining result (every subset of a frequent set is frequent); ``db`` is
    only consulted if the result is missing one.
    """
    threshold = min_conf if isinstance(min_conf, Fraction) else Fraction(repr(float(min_conf)))
    if not 0 < threshold <= 1:
        raise ValueError(f"min_conf must be in (0, 1], got {min_conf}")
    counts = result.counts()
    n = result.total_transactions

    def count_of(s: Itemset) -> int:
        if s not in counts:
            if db is None:
                raise KeyError(s)
            counts[s] = support_count(db, s)
        return counts[s]

    rules = []
    for level in result.levels[1:]:
        for f in level:
            whole = f.itemset
            for r in range(1, len(whole)):
                for ante in combinations(whole, r):
                    conf = Fraction(f.support_count, count_of(ante))
                    if conf >= threshold:
                        cons = tuple(x for x in whole if x not in ante)
                        rules.append(AssociationRule(
                            ante, cons, f.support_count / n, float(conf), f.support_count))
    return rules


def parse_transactions(lines: Iterable[str]) -> TransactionDB:
    """Read the comma-separated transaction format, one transaction per line.

    Blank lines and lines starting with ``#`` are skipped. Raises ValueError
    naming the line for an empty item (e.g. ``a,,b``).
    """
    rows, tids = [], []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        items = [part.strip() for part in line.split(",")]
        if any(not it for it in items):
            raise ValueError(f"line {lineno}: empty item in {line!r}")
        rows.append(items)
        tids.append(f"line{lineno}")
    return TransactionDB.from_itemsets(rows, tids)


def format_itemset_line(f: FrequentItemset) -> str:
    return ",".join(f.itemset) + "\t" + str(f.support_count)
