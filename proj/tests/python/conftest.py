import json
import os
import pathlib
import subprocess

import pytest


def _env_path(name):
    value = os.environ.get(name)
    if not value:
        pytest.skip(f"{name} is not set")
    return pathlib.Path(value)


@pytest.fixture(scope="session")
def cli():
    path = _env_path("TRIFREE_CLI")

    def run(*args, check=None):
        proc = subprocess.run([str(path), *map(str, args)], capture_output=True, text=True, timeout=600)
        if check is not None:
            assert proc.returncode == check, proc.stderr
        return proc

    return run


@pytest.fixture(scope="session")
def cli_json(cli):
    def run(*args):
        return json.loads(cli("--format", "json", *args, check=0).stdout)

    return run


@pytest.fixture(scope="session")
def schemas():
    root = _env_path("TRIFREE_SCHEMAS")
    return {p.name.removesuffix(".schema.json"): json.loads(p.read_text()) for p in root.glob("*.schema.json")}


@pytest.fixture(scope="session")
def data_dir():
    return _env_path("TRIFREE_DATA_DIR")
