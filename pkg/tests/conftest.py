from pathlib import Path

import pytest

from assocclass.corpus import data_path, default_stopwords
from assocclass.model import load_model

FIXTURES = Path(__file__).parent / "fixtures"
REPO = Path(__file__).parents[1]

CS = "Computer Science"
EE = "Electrical and Electronic Engineering"
ME = "Mechanical Engineering"

FIG1 = [
    ["I1", "I2", "I5"],
    ["I2", "I4"],
    ["I2", "I3"],
    ["I1", "I2", "I4"],
    ["I1", "I3"],
    ["I2", "I3"],
    ["I1", "I3"],
    ["I1", "I2", "I3", "I5"],
    ["I1", "I2", "I3"],
]

WORD_DOCS = [
    "algorithm, network, graph, multicast, processor, system, parallel",
    "cluster, network, design, message, processor, system, framework",
    "algorithm, software, graph, method, session, analysis, parallel",
    "switch, load, design, power, path, system, timing",
    "cable, load, energy, power, current, motor, signal",
]
WORD_ROWS = [[w.strip() for w in d.split(",")] for d in WORD_DOCS]

SUBSET_EXAMPLE_WORDS = {"feedback", "problem", "regularization", "affine", "nonlinear", "singular",
                        "system", "based", "dynamic", "algorithm", "using", "condition"}
WEIGHTED_EXAMPLE_WORDS = {"graph", "vertices", "distance", "t-spanner", "approximate", "time",
                          "algorithm", "unweighted", "require", "log", "processor"}


def write_tally_corpus(root, docs=(("CS", 47, 43), ("EE", 48, 47), ("ME", 20, 17)), k=13):
    """Write a corpus whose mining at support 0.02 yields known word-set tallies.

    For each (class, n_docs, n_sets), word set s of that class is a pair of
    words placed in documents s and s+1 only, so every set is frequent with
    count 2, maximal, and owned by its class. Each document is padded with
    words of its own to exactly ``k`` frequent words (each written twice).
    """
    root = Path(root)
    for cls, n_docs, n_sets in docs:
        assert n_sets < n_docs
        tag = cls.lower()
        d = root / cls
        d.mkdir(parents=True)
        for doc in range(n_docs):
            words = []
            for s in (doc - 1, doc):
                if 0 <= s < n_sets:
                    words += [f"set{tag}{s:03d}a", f"set{tag}{s:03d}b"]
            pad = 0
            while len(words) < k:
                words.append(f"own{tag}{doc:03d}w{pad:02d}")
                pad += 1
            text = " ".join(words) + ".\n" + " ".join(reversed(words)) + ".\n"
            (d / f"doc{doc:03d}.txt").write_text(text, encoding="utf-8")
    return root


@pytest.fixture(scope="session")
def stopwords():
    return default_stopwords()


@pytest.fixture(scope="session")
def reference_model():
    return load_model(data_path("reference_model.json"))


@pytest.fixture(scope="session")
def subset_abstract():
    return (FIXTURES / "abstract_subset_example.txt").read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def weighted_abstract():
    return (FIXTURES / "abstract_weighted_example.txt").read_text(encoding="utf-8")


@pytest.fixture
def tally_corpus(tmp_path):
    return write_tally_corpus(tmp_path / "corpus")


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(results, key=lambda k: (int(k.split(".")[0]), k)):
        status, detail = results[key]
        terminalreporter.write_line(f"criterion {key}: {status} - {detail}")
