from pathlib import Path

import pytest

from pronaudit.lexicon import builtin_lexicon

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def en_lexicon():
    return builtin_lexicon("eng")


@pytest.fixture(scope="session")
def ja_lexicon():
    return builtin_lexicon("jpn")


@pytest.fixture(scope="session")
def matrix_fixture_path():
    return FIXTURES / "enja_reference_matrix.tsv"


@pytest.fixture(scope="session")
def desk50_path():
    return FIXTURES / "desk50.tsv"


@pytest.fixture(scope="session")
def desk50(desk50_path):
    from pronaudit.corpus import parse_parallel_tsv

    corpus, skipped = parse_parallel_tsv(desk50_path.read_bytes())
    assert skipped == 0
    return corpus


@pytest.fixture(scope="session")
def reference_matrix(matrix_fixture_path):
    from pronaudit.stats import import_matrix_tsv

    return import_matrix_tsv(matrix_fixture_path.read_bytes())
