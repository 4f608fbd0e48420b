import pytest
from pydantic import ValidationError

from jkpencil.config import Settings, load_settings

_KEYS = ("JKPENCIL_SAMPLING__SEED", "JKPENCIL_SAMPLING__POINTS", "JK_TEST_SEED")


@pytest.fixture(autouse=True)
def clean_env(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    for key in _KEYS:
        # recorded, so values written by load_dotenv are removed afterwards
        monkeypatch.setenv(key, "")
        monkeypatch.delenv(key)
    return tmp_path


def test_defaults_without_config_file():
    settings = load_settings()
    assert settings == Settings()
    assert settings.sampling.seed == 0
    assert settings.sampling.points == 10
    assert settings.guardrails.max_degree == 4
    assert settings.output.format == "json"
    assert settings.concurrency.workers == 1


def test_explicit_missing_config_raises(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_settings(tmp_path / "absent.yaml")


def test_values_from_config_file(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("sampling:\n  seed: 3\n  points: 4\noutput:\n  format: text\n", encoding="utf-8")
    settings = load_settings(path)
    assert settings.sampling.seed == 3
    assert settings.sampling.points == 4
    assert settings.output.format == "text"
    assert settings.guardrails.max_dim == 8


def test_env_var_substitution(tmp_path, monkeypatch):
    monkeypatch.setenv("JK_TEST_SEED", "11")
    path = tmp_path / "config.yaml"
    path.write_text("sampling:\n  seed: ${JK_TEST_SEED}\n", encoding="utf-8")
    assert load_settings(path).sampling.seed == 11


def test_environment_overrides_file(tmp_path, monkeypatch):
    monkeypatch.setenv("JKPENCIL_SAMPLING__SEED", "7")
    path = tmp_path / "config.yaml"
    path.write_text("sampling:\n  seed: 3\n  points: 4\n", encoding="utf-8")
    settings = load_settings(path)
    assert settings.sampling.seed == 7
    assert settings.sampling.points == 4


def test_dotenv_file(tmp_path):
    env = tmp_path / ".env"
    env.write_text("JKPENCIL_SAMPLING__POINTS=12\n", encoding="utf-8")
    assert load_settings(env_path=env).sampling.points == 12


def test_invalid_values_are_rejected(tmp_path):
    path = tmp_path / "config.yaml"
    path.write_text("output:\n  format: xml\n", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_settings(path)
    path.write_text("sampling:\n  points: 0\n", encoding="utf-8")
    with pytest.raises(ValidationError):
        load_settings(path)
