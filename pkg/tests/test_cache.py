"""On-disk structure constants."""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from cyclobrauer.algebra import WalledBrauerAlgebra
from cyclobrauer.cache import StructureCache
from cyclobrauer.params import Parameters


def test_save_and_reload(tmp_path: Path):
    store = StructureCache(tmp_path, 2, 1, 1, "abc")
    store.put("a*b", {"m": Fraction(-3, 2)})
    path = store.save()
    assert path is not None and path.is_file()
    again = StructureCache(tmp_path, 2, 1, 1, "abc")
    again.load()
    assert again.get("a*b") == {"m": Fraction(-3, 2)}


def test_foreign_key_is_ignored(tmp_path: Path):
    store = StructureCache(tmp_path, 2, 1, 1, "abc")
    store.put("a*b", {"m": Fraction(1)})
    store.save()
    other = StructureCache(tmp_path, 2, 1, 1, "abc")
    other.key = {**other.key, "digest": "zzz"}
    assert other.load() == {}


def test_corrupt_file_is_dropped(tmp_path: Path):
    store = StructureCache(tmp_path, 1, 1, 1, "d")
    assert store.path is not None
    store.path.write_text("{not json")
    assert store.load() == {}


def test_algebra_persists_products(tmp_path: Path):
    params = Parameters.create([0, 0], [0, 4])
    alg = WalledBrauerAlgebra(params, 1, 1, cache_dir=tmp_path)
    expected = alg.word("x1") * alg.word("e1")
    assert not expected.is_zero()
    path = alg.flush()
    assert path is not None and path.is_file()
    warm = WalledBrauerAlgebra(params, 1, 1, cache_dir=tmp_path)
    assert str(warm.word("x1") * warm.word("e1")) == str(expected)
