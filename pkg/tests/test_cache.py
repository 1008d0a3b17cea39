import json

from weingarten import cache, characters
from weingarten.characters import character_table, zonal_table
from weingarten.weingarten import wg_orthogonal


def test_cache_is_off_by_default(tmp_path, monkeypatch):
    cache.set_cache_dir(None)
    assert cache.cache_dir() is None
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    assert cache.cache_dir() == tmp_path


def test_tables_are_written_and_reused(cache_dir):
    cold = character_table(4)
    path = cache_dir / "characters-4.json"
    payload = json.loads(path.read_text())
    assert payload["version"] == cache.version_hash()
    assert payload["table"]["2,2"]["2,1,1"] == 0
    characters.clear_memory_tables()
    assert character_table(4) == cold


def test_warm_and_cold_results_agree(cache_dir):
    cold = zonal_table(3)
    characters.clear_memory_tables()
    warm = zonal_table(3)
    assert cold == warm


def test_corrupt_file_is_recomputed(cache_dir):
    good = character_table(5)
    path = cache_dir / "characters-5.json"
    path.write_text("{not json")
    characters.clear_memory_tables()
    assert character_table(5) == good
    assert json.loads(path.read_text())["version"] == cache.version_hash()


def test_stale_version_is_recomputed(cache_dir):
    good = character_table(3)
    path = cache_dir / "characters-3.json"
    payload = json.loads(path.read_text())
    payload["version"] = "0" * 16
    payload["table"]["3"]["3"] = 99
    path.write_text(json.dumps(payload))
    characters.clear_memory_tables()
    assert character_table(3) == good


def test_wrong_values_under_current_version_are_caught_for_zonal(cache_dir):
    # the normalization check guards against tampered zonal tables
    zonal_table(2)
    path = cache_dir / "zonal-2.json"
    payload = json.loads(path.read_text())
    payload["table"]["2"]["1,1"] = "5"
    path.write_text(json.dumps(payload))
    characters.clear_memory_tables()
    table = zonal_table(2)
    assert table[(2,), (1, 1)] == 1


def test_weingarten_values_independent_of_cache(cache_dir):
    characters.clear_memory_tables()
    first = wg_orthogonal((2, 1))
    characters.clear_memory_tables()
    assert wg_orthogonal((2, 1)) == first
