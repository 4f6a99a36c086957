import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from idemfree import is_commutative
from idemfree.verify import run_verification


@pytest.fixture(scope="session")
def corpus_le3():
    from idemfree.verify import build_corpus

    return build_corpus(3)


@pytest.fixture(scope="session")
def corpus_le4():
    from idemfree.verify import build_corpus

    return build_corpus(4)


@pytest.fixture(scope="session")
def commutative_le4(corpus_le4):
    return [S for S in corpus_le4 if is_commutative(S)]


ACCEPTANCE_CHECKS = (
    "ghw-bound",
    "extremal-equivalence",
    "extremal-families",
    "example-formulas",
    "strong-vs-weak",
)


@pytest.fixture(scope="session")
def acceptance_logs():
    """The verification run backing acceptance criteria 1-6 and 10: once with
    a single worker, once with a pool; the logs must be byte-identical."""
    serial = run_verification(max_order=4, checks=ACCEPTANCE_CHECKS, workers=1)
    pooled = run_verification(max_order=4, checks=ACCEPTANCE_CHECKS, workers=3)
    return serial, pooled
