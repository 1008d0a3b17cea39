import pytest

from weingarten import cache, characters


@pytest.fixture(autouse=True)
def _no_cache_by_default(monkeypatch):
    # tests opt in to the disk cache explicitly
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    cache.disable_cache()
    yield
    cache.set_cache_dir(None)


@pytest.fixture
def cache_dir(tmp_path):
    cache.set_cache_dir(tmp_path)
    characters.clear_memory_tables()
    yield tmp_path
    characters.clear_memory_tables()
