from __future__ import annotations

import json
from fractions import Fraction

import numpy as np
import pytest

from gpst.serialize import dumps


def test_dumps_basic():
    out = dumps({"b": 0.1, "a": Fraction(3, 4), "c": [np.int64(2), True, None], "z": 1 + 2j})
    assert out == '{"a":"3/4","b":0.10000000000000001,"c":[2,true,null],"z":{"im":2,"re":1}}'
    assert json.loads(out)["b"] == 0.1


def test_float_round_trip():
    for x in (1 / 3, 2**-40, 1e300, -0.0):
        assert float(dumps(x)) == x


def test_rejects():
    with pytest.raises(ValueError):
        dumps(float("nan"))
    with pytest.raises(TypeError):
        dumps(object())
