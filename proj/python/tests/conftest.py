import json
import os
import pathlib
import subprocess

import pytest

ROOT = pathlib.Path(os.environ.get("ELIMDUAL_ROOT", pathlib.Path(__file__).resolve().parents[2]))
DATA = ROOT / "data"


@pytest.fixture(scope="session")
def schema():
    jsonschema = pytest.importorskip("jsonschema")
    doc = json.loads((ROOT / "schema" / "elimdual-report.schema.json").read_text())
    jsonschema.Draft202012Validator.check_schema(doc)
    return jsonschema.Draft202012Validator(doc)


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("ELIMDUAL_CLI")
    if not path or not os.path.exists(path):
        pytest.skip("ELIMDUAL_CLI not set")

    def run(*args, stdin=None):
        return subprocess.run([path, *map(str, args)], input=stdin, capture_output=True, text=True, timeout=300)

    return run


@pytest.fixture(scope="session")
def core():
    return pytest.importorskip("elimdual")


def text(name):
    return (DATA / name).read_text()
