from fractions import Fraction

import pytest

from assocclass.apriori import (FrequentItemset, TransactionDB, apriori_join, apriori_prune,
                                find_frequent_1_itemsets, generate_rules, itemset, min_count_for,
                                mine_frequent_itemsets, parse_transactions, support_count)
from assocclass.corpus import data_path
from conftest import FIG1, WORD_ROWS
from oracles import brute_frequent, brute_rules

FIG1_L1 = {("I1",): 6, ("I2",): 7, ("I3",): 6, ("I4",): 2, ("I5",): 2}
FIG1_L2 = {("I1", "I2"): 4, ("I1", "I3"): 4, ("I1", "I5"): 2,
           ("I2", "I3"): 4, ("I2", "I4"): 2, ("I2", "I5"): 2}
FIG1_L3 = {("I1", "I2", "I3"): 2, ("I1", "I2", "I5"): 2}


@pytest.fixture
def fig1():
    return TransactionDB.from_itemsets(FIG1)


@pytest.fixture
def words():
    return TransactionDB.from_itemsets(WORD_ROWS)


def as_dict(level):
    return {f.itemset: f.support_count for f in level}


def test_itemset_is_canonical():
    assert itemset(["b", "a", "b"]) == ("a", "b")
    assert itemset(["a", "b"]) == itemset(["b", "a"])


def test_support_count(fig1):
    assert support_count(fig1, ["I1"]) == 6
    assert support_count(fig1, ["I2", "I1"]) == 4
    assert support_count(fig1, ["I1", "I9"]) == 0
    with pytest.raises(ValueError):
        support_count(fig1, [])


def test_item_universe(fig1):
    assert fig1.item_universe == {"I1", "I2", "I3", "I4", "I5"}


def test_frequent_1_itemsets(fig1):
    assert as_dict(find_frequent_1_itemsets(fig1, 2)) == FIG1_L1
    assert as_dict(find_frequent_1_itemsets(fig1, 7)) == {("I2",): 7}
    assert find_frequent_1_itemsets(TransactionDB.from_itemsets([[], []]), 1) == []


def test_join_level_1_gives_all_pairs(fig1):
    c2 = apriori_join(find_frequent_1_itemsets(fig1, 2))
    assert len(c2) == 10
    assert c2 == sorted(tuple(sorted(p)) for p in
                        [("I1", "I2"), ("I1", "I3"), ("I1", "I4"), ("I1", "I5"), ("I2", "I3"),
                         ("I2", "I4"), ("I2", "I5"), ("I3", "I4"), ("I3", "I5"), ("I4", "I5")])


def test_join_level_2():
    # I2I3 + I2I4 share their prefix, so {I2,I3,I4} is a join product too;
    # the published step lists only the other five
    c3 = apriori_join(list(FIG1_L2))
    assert c3 == [("I1", "I2", "I3"), ("I1", "I2", "I5"), ("I1", "I3", "I5"),
                  ("I2", "I3", "I4"), ("I2", "I3", "I5"), ("I2", "I4", "I5")]


def test_join_edge_cases():
    assert apriori_join([("a",)]) == []
    assert apriori_join([]) == []
    with pytest.raises(ValueError, match="ragged level"):
        apriori_join([("a",), ("a", "b")])


def test_prune():
    c3 = apriori_join(list(FIG1_L2))
    assert apriori_prune(c3, list(FIG1_L2)) == [("I1", "I2", "I3"), ("I1", "I2", "I5")]
    published = [("I1", "I2", "I3"), ("I1", "I2", "I5"), ("I1", "I3", "I5"),
                 ("I2", "I3", "I5"), ("I2", "I4", "I5")]
    assert apriori_prune(published, list(FIG1_L2)) == [("I1", "I2", "I3"), ("I1", "I2", "I5")]
    assert apriori_prune([("I1", "I2", "I3", "I5")], list(FIG1_L3)) == []
    assert apriori_prune([], list(FIG1_L3)) == []


def test_mine_fig1(fig1):
    res = mine_frequent_itemsets(fig1, 2)
    assert res.min_support_count == 2
    assert [as_dict(lv) for lv in res.levels] == [FIG1_L1, FIG1_L2, FIG1_L3]
    assert res.candidates[4] == []
    assert res.candidates[3] == [("I1", "I2", "I3"), ("I1", "I2", "I5")]


def test_mine_word_transactions(words):
    res = mine_frequent_itemsets(words, 0.4)
    assert res.min_support_count == 2
    assert res.counts()[("algorithm", "graph", "parallel")] == 2


def test_mine_single_transaction():
    res = mine_frequent_itemsets(TransactionDB.from_itemsets([["a", "b"]]), 1)
    assert [as_dict(lv) for lv in res.levels] == [{("a",): 1, ("b",): 1}, {("a", "b"): 1}]


def test_mine_rejects_empty_db():
    with pytest.raises(ValueError):
        mine_frequent_itemsets(TransactionDB.from_itemsets([]), 1)


@pytest.mark.parametrize("support, n, expected", [
    (0.02, 115, 2),
    (0.4, 5, 2),
    (0.29, 100, 29),
    (0.001, 10, 1),
    (1.0, 7, 7),
    (3, 100, 3),
    (Fraction(1, 3), 9, 3),
])
def test_min_count_for(support, n, expected):
    assert min_count_for(support, n) == expected


@pytest.mark.parametrize("bad", [0.0, 1.5, -0.1, 0, True])
def test_min_count_for_rejects(bad):
    with pytest.raises((ValueError, TypeError)):
        min_count_for(bad, 10)


PUBLISHED_RULES = [
    (("algorithm", "graph"), ("parallel",)),
    (("network", "processor"), ("system",)),
    (("design",), ("system",)),
    (("load",), ("power",)),
]


def test_rules_contain_published_examples(words):
    rules = generate_rules(mine_frequent_itemsets(words, 0.4), words, 1.0)
    pairs = {(r.antecedent, r.consequent) for r in rules}
    for rule in PUBLISHED_RULES:
        assert rule in pairs
    # also strong but not in the published list
    assert (("power",), ("load",)) in pairs
    assert (("graph",), ("parallel",)) in pairs


def test_rules_equal_brute_force(words):
    rules = generate_rules(mine_frequent_itemsets(words, 0.4), words, 1.0)
    got = {(r.antecedent, r.consequent, r.support_count) for r in rules}
    assert got == brute_rules(WORD_ROWS, 2, 1)
    assert len(got) == len(rules)


def test_rule_fields(fig1):
    rules = generate_rules(mine_frequent_itemsets(fig1, 2), fig1, 0.5)
    r = next(r for r in rules if r.antecedent == ("I1", "I2") and r.consequent == ("I5",))
    assert r.confidence == 0.5
    assert r.support == pytest.approx(2 / 9)
    assert str(r) == "{I1, I2} => {I5}"


def test_rules_unreachable_confidence(fig1):
    # highest confidence on this data is 1, so nothing survives a threshold
    # just above the best non-1 value when restricted to I3-rules
    rules = generate_rules(mine_frequent_itemsets(fig1, 2), fig1, 1.0)
    assert all(r.confidence == 1.0 for r in rules)
    res = mine_frequent_itemsets(TransactionDB.from_itemsets([["a", "b"], ["a"], ["b"], ["c"]]), 1)
    assert generate_rules(res, None, 0.75) == []


def test_rules_deterministic(words):
    res = mine_frequent_itemsets(words, 0.4)
    assert generate_rules(res, words, 0.5) == generate_rules(res, words, 0.5)


def test_mining_matches_brute_force_on_fixtures(fig1, words):
    for db, rows, m in [(fig1, FIG1, 2), (words, WORD_ROWS, 2), (fig1, FIG1, 1)]:
        assert mine_frequent_itemsets(db, m).counts() == brute_frequent(rows, m)


def test_parse_transactions_file():
    lines = data_path("fig1_transactions.txt").read_text().splitlines()
    db = parse_transactions(lines)
    assert [sorted(t) for t in db.transactions] == [sorted(r) for r in FIG1]


def test_parse_transactions_errors():
    with pytest.raises(ValueError, match="line 3"):
        parse_transactions(["a,b", "# note", "a,,b"])
    db = parse_transactions(["", "# only a comment", "  x , y  "])
    assert db.transactions == (frozenset({"x", "y"}),)


def test_frequent_itemset_ordering():
    assert FrequentItemset(("a",), 3) < FrequentItemset(("b",), 1)
