"""Session fixtures shared across the suite."""

from __future__ import annotations

import pytest


@pytest.fixture(scope="session")
def warmed():
    """Compile every accelerated entry point once, outside any timed section."""
    from swscan._compiled import warmup

    warmup()
    return True
