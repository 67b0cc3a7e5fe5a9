import os

import pytest

from ice20v.util.environ import JOBS_ENV_VAR, getenv_jobs


def test_getenv_jobs_default(mocker):
    mocker.patch("ice20v.util.environ.init_dotenv")
    assert getenv_jobs() is None
    assert getenv_jobs(default=2) == 2


def test_getenv_jobs_environ(mocker):
    mocker.patch("ice20v.util.environ.init_dotenv")
    mocker.patch.dict(os.environ, {JOBS_ENV_VAR: " 4 "})
    assert getenv_jobs(default=1) == 4


@pytest.mark.parametrize("raw", ["many", "0", "-2", "1.5"])
def test_getenv_jobs_invalid(mocker, raw):
    mocker.patch("ice20v.util.environ.init_dotenv")
    mocker.patch.dict(os.environ, {JOBS_ENV_VAR: raw})
    with pytest.raises(ValueError) as ex:
        getenv_jobs(default=1)
    assert JOBS_ENV_VAR in str(ex.value)


def test_getenv_jobs_dotenv(mocker, monkeypatch, tmp_path):
    """
    A `.env` file in the working directory provides the value when the environment does not.
    """
    (tmp_path / ".env").write_text(f"{JOBS_ENV_VAR}=5\n")
    mocker.patch.dict(os.environ, {})
    monkeypatch.chdir(tmp_path)
    assert getenv_jobs(default=1) == 5
