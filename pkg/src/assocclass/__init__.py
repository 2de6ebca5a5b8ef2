"""Text classification with Apriori-mined word sets and Naive Bayes."""

from .apriori import (AssociationRule, FrequentItemset, MiningResult, TransactionDB,
                      apriori_join, apriori_prune, find_frequent_1_itemsets, generate_rules,
                      itemset, mine_frequent_itemsets, support_count)
from .classify import ClassificationResult, MatchEvidence, classify_document, match_word_sets, score
from .corpus import LabeledDocument, StopWordList, load_corpus, load_stopwords
from .errors import AssocClassError, ConfigError, CorpusError, ModelError
from .model import (TrainedModel, WordSetFeature, build_model, compute_priors,
                    estimate_probability, load_model, save_model)
from .preprocess import (Transaction, extract_frequent_words, make_transaction, normalize_plural,
                         select_transaction_words, tokenize)

__version__ = "0.1.0"
