from __future__ import annotations

import pytest

from padic_hyper.config import get_settings
from padic_hyper.verifier import VerifyOptions

SMALL_NMAX = 120


@pytest.fixture(autouse=True)
def small_settings(monkeypatch):
    """Keep q-expansions short and never pick up a developer's cache directory."""
    monkeypatch.setenv("PADIC_QSERIES_NMAX", str(SMALL_NMAX))
    monkeypatch.delenv("PADIC_CACHE_DIR", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def options() -> VerifyOptions:
    return VerifyOptions(qseries_nmax=SMALL_NMAX)
