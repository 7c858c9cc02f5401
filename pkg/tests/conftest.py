"""
Shared fixtures: configuration reset and the small example posets.
"""

from pathlib import Path

import pytest

from config import PpartConfig, reset_config, set_config
from poset.core import LabeledPoset, poset_from_covers


@pytest.fixture(autouse=True)
def reset_singleton():
    """Reset config singleton between tests."""
    reset_config()
    set_config(PpartConfig())
    yield
    reset_config()


@pytest.fixture
def fig1() -> LabeledPoset:
    """Element 2 below 1 and 3, labels 1, 2, 3: partitions with s(2) > s(1), s(2) >= s(3)."""
    return poset_from_covers(3, [(2, 1), (2, 3)], [1, 2, 3])


@pytest.fixture
def fig1_file(tmp_path: Path) -> Path:
    path = tmp_path / "fig1.json"
    path.write_text('{"p": 3, "covers": [[2, 1], [2, 3]], "labels": [1, 2, 3]}', encoding="utf-8")
    return path


@pytest.fixture
def v_poset() -> LabeledPoset:
    """1 below 2 and 3, naturally labeled."""
    return poset_from_covers(3, [(1, 2), (1, 3)])
