from __future__ import annotations

import pytest

from genramsey.enumeration import generate


@pytest.fixture(scope="session")
def graphs_by_order():
    """Adjacency tuples of every class of order 0..8."""
    return {p: generate(p) for p in range(9)}


@pytest.fixture(scope="session")
def order9_graphs():
    return generate(9)


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    d = tmp_path / "cache"
    monkeypatch.setenv("GENRAMSEY_CACHE_DIR", str(d))
    return d
