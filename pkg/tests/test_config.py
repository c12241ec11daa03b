import pytest

from hankel_shift.config import JOBS_VAR, NMAX_DEFAULT_VAR, Settings


def test_defaults():
    settings = Settings.from_env({})
    assert settings.nmax_default == 6
    assert settings.jobs == 1


def test_values_from_environment():
    settings = Settings.from_env({NMAX_DEFAULT_VAR: " 9 ", JOBS_VAR: "4"})
    assert settings == Settings(nmax_default=9, jobs=4)


def test_blank_values_fall_back():
    assert Settings.from_env({NMAX_DEFAULT_VAR: "", JOBS_VAR: "  "}) == Settings()


def test_reads_process_environment(monkeypatch):
    monkeypatch.setenv(NMAX_DEFAULT_VAR, "3")
    monkeypatch.delenv(JOBS_VAR, raising=False)
    assert Settings.from_env().nmax_default == 3


@pytest.mark.parametrize(
    "env, message",
    [
        ({NMAX_DEFAULT_VAR: "six"}, "HANKEL_NMAX_DEFAULT must be an integer"),
        ({NMAX_DEFAULT_VAR: "-1"}, "HANKEL_NMAX_DEFAULT must be >= 0"),
        ({JOBS_VAR: "0"}, "HANKEL_JOBS must be >= 1"),
    ],
)
def test_invalid_values(env, message):
    with pytest.raises(ValueError, match=message):
        Settings.from_env(env)
