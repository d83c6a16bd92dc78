from __future__ import annotations

import pytest

import corpus as corpus_module


@pytest.fixture(scope="session")
def corpus():
    return corpus_module.build_corpus()
