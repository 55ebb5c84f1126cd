import pytest

from gscat.config import (ConfigStoreFactory, EnvarConfigStore, FileConfigStore, RunConfig, load_run_config,
                          parse_sizes)
from gscat.errors import UsageError


def test_parse_sizes():
    assert parse_sizes("1,2,4") == (1, 2, 4)
    assert parse_sizes(" 2, 2 ,3") == (2, 3)
    assert parse_sizes([3, 1]) == (3, 1)
    with pytest.raises(UsageError):
        parse_sizes("1,x")
    with pytest.raises(UsageError):
        parse_sizes("0")
    with pytest.raises(UsageError):
        parse_sizes("")


def test_run_config_validates_bounds():
    with pytest.raises(UsageError):
        RunConfig(cap=0)
    with pytest.raises(UsageError):
        RunConfig(seed="abc")
    with pytest.raises(UsageError):
        RunConfig(output_format="xml")
    config = RunConfig(cap="100", seed="-3", exhaustive_only="yes")
    assert config.cap == 100
    assert config.seed == -3
    assert config.exhaustive_only is True


def test_file_store_profiles(tmp_path):
    path = tmp_path / "gscat.conf"
    path.write_text("[default]\ncap = 1024\n\n[quick]\nsizes = 1,2\nsamples = 10\n")
    store = FileConfigStore(config_file=str(path))
    assert store.get_profiles() == ["default", "quick"]
    assert store.get_profile("default")["cap"] == "1024"
    quick = store.get_profile("quick")
    assert quick["sizes"] == "1,2"
    assert quick["cap"] == "65536"
    with pytest.raises(UsageError):
        store.get_profile("missing")


def test_flags_override_profile(tmp_path, monkeypatch):
    monkeypatch.delenv("GSCAT_CAP", raising=False)
    path = tmp_path / "gscat.conf"
    path.write_text("[quick]\nsizes = 1,2\nseed = 5\n")
    config = load_run_config("quick", str(path), seed=9, model="pspan")
    assert config.sizes == (1, 2)
    assert config.seed == 9
    assert config.model == "pspan"


def test_envar_store(monkeypatch):
    monkeypatch.setenv("GSCAT_SEED", "42")
    monkeypatch.setenv("GSCAT_SIZES", "1,3")
    store = ConfigStoreFactory.get_config_store()
    assert isinstance(store, EnvarConfigStore)
    config = RunConfig.from_profile(store.get_profile())
    assert config.seed == 42
    assert config.sizes == (1, 3)


def test_missing_default_profile_falls_back(tmp_path):
    store = FileConfigStore(config_file=str(tmp_path / "absent.conf"))
    assert store.get_profile()["sizes"] == "1,2,4"
