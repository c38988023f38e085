import pytest
from click.testing import CliRunner

from l2alex.cache.store import TorsionCache
from l2alex.config.settings import settings
from l2alex.models.link import TorusLink


@pytest.fixture(autouse=True)
def cache_path(tmp_path, monkeypatch):
    """Point the default cache at a per-test file."""
    path = tmp_path / "torsions.jsonl"
    monkeypatch.setattr(settings.cache, "path", path)
    return path


@pytest.fixture
def cache(cache_path):
    return TorsionCache(cache_path)


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def trefoil():
    return TorusLink(e=1, p=2, q=3)
