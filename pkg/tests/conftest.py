import json
import os

import pytest

from nilcoh.data import Settings
from nilcoh.lie import build_root_system, enumerate_weyl_group, chevalley_structure_constants

CORPUS = os.path.join(os.path.dirname(__file__), 'corpus')


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    for name in ('NILCOH_CAP', 'NILCOH_ALLOW_EXCEPTIONAL', 'NILCOH_JOBS'):
        monkeypatch.delenv(name, raising=False)
    Settings.reset()
    yield
    Settings.reset()


@pytest.fixture
def root_system():
    return build_root_system


@pytest.fixture
def weyl():
    def make(label):
        return enumerate_weyl_group(build_root_system(label))
    return make


@pytest.fixture
def algebra():
    def make(label):
        return chevalley_structure_constants(build_root_system(label))
    return make


def pytest_addoption(parser):
    parser.addoption("--regen-golden", action="store_true", default=False,
                     help="rewrite tests/corpus/*.json from the current output")


@pytest.fixture
def golden(request):
    """Compare a JSON-able value with the committed tests/corpus/<name>.json"""
    regen = request.config.getoption("--regen-golden")

    def check(name, value):
        path = os.path.join(CORPUS, f"{name}.json")
        text = json.dumps(value, sort_keys=True, indent=2) + "\n"
        if regen:
            os.makedirs(CORPUS, exist_ok=True)
            with open(path, 'w') as f:
                f.write(text)
        elif not os.path.exists(path):
            pytest.fail(f"Missing golden file {path}; run pytest --regen-golden to create it")
        with open(path) as f:
            assert f.read() == text
    return check
