import json
import os
import sys

import pytest

MODULE_DIR = os.environ.get("POLYPUSH_MODULE_DIR")
if MODULE_DIR:
    sys.path.insert(0, os.path.dirname(MODULE_DIR.rstrip("/")))


@pytest.fixture(scope="session")
def core():
    if MODULE_DIR:
        sys.path.insert(0, MODULE_DIR)
        import _core

        return _core
    import polypush

    return polypush


@pytest.fixture()
def triangle_json(tmp_path):
    data = {
        "vertices": [[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]],
        "simplices": [[0, 1, 2]],
        "Q": [0],
    }
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture()
def set_json(tmp_path, triangle_json, core):
    cx = core.SimplicialComplex.from_json(open(triangle_json).read())
    carrier = cx.find([0, 1, 2])
    data = {
        "a": 1.0,
        "samples": [{"point": [0.2, 0.3], "carrier": carrier, "weight": 1.0}],
        "full": [],
    }
    path = tmp_path / "set.json"
    path.write_text(json.dumps(data))
    return str(path)
