import json

import pytest

from hopfkit.hopf import same_structure, verify_hopf
from hopfkit.io import (
    ParseError,
    braided_from_json,
    braided_to_json,
    dumps,
    hopf_from_json,
    hopf_to_json,
    load,
    loads,
    save,
    yd_from_json,
    yd_to_json,
)
from hopfkit.qt import QTStructure, verify_qt
from hopfkit.yd import verify_braided_hopf, verify_yd_module
from hopfkit.zoo import build, group_algebra


def test_round_trip_members(members):
    for d, QT in members.items():
        text = dumps(hopf_to_json(QT))
        back = hopf_from_json(loads(text))
        assert isinstance(back, QTStructure)
        assert same_structure(back.H, QT.H), d
        assert back.R == QT.R
        assert dumps(hopf_to_json(back)) == text, d


def test_round_trip_plain_hopf(tmp_path):
    H = group_algebra([2, 3])
    p = tmp_path / "g.json"
    save(hopf_to_json(H), p)
    back = hopf_from_json(load(p))
    assert not isinstance(back, QTStructure)
    assert same_structure(back, H)
    assert back.grouplikes == H.grouplikes
    assert p.read_text() == dumps(hopf_to_json(back))


def test_sweedler_file_shape(sw):
    obj = hopf_to_json(sw)
    assert obj["conductor"] == 1 and obj["dim"] == 4
    assert obj["basis"] == ["1", "g", "x", "gx"]
    assert obj["unit"] == ["1", "0", "0", "0"]
    assert obj["counit"] == ["1", "1", "0", "0"]
    assert [0, 0, "1/2"] in obj["R"] and [1, 1, "-1/2"] in obj["R"]
    # S(x) = gx: column x (index 2) has coefficient 1 on gx (index 3)
    assert [3, 2, "1"] in obj["antipode"]
    assert obj["metadata"]["grouplikes"] == ["1", "g"]


def test_cyclotomic_scalars_survive():
    QT = build("gbichar:5:2:5")
    text = dumps(hopf_to_json(QT))
    assert "z" in text
    back = hopf_from_json(loads(text))
    assert verify_qt(back).ok


def test_braided_and_yd_round_trip(yd3):
    B, mods = yd3
    tb = dumps(braided_to_json(B))
    B2 = braided_from_json(loads(tb), B.qt)
    assert dumps(braided_to_json(B2)) == tb
    assert verify_braided_hopf(B2).ok
    for name, M in mods.items():
        tm = dumps(yd_to_json(M, B))
        M2 = yd_from_json(loads(tm), B2)
        assert dumps(yd_to_json(M2, B2)) == tm
        assert verify_yd_module(M2, B2).ok, name


def _sweedler_obj(sw):
    return json.loads(dumps(hopf_to_json(sw)))


@pytest.mark.parametrize("breakage", [
    lambda o: o.pop("mult"),
    lambda o: o.update(conductor=0),
    lambda o: o.update(dim="four"),
    lambda o: o.update(basis=["1", "g", "x"]),
    lambda o: o.update(basis=["1", "g", "g", "x"]),
    lambda o: o["mult"].append([0, 0, 9, "1"]),
    lambda o: o["mult"].append([0, 0, 0]),
    lambda o: o["comult"].append([0, 0, 0, "1/0"]),
    lambda o: o["antipode"].append([0, 0, "q"]),
    lambda o: o.update(unit=["1"]),
    lambda o: o.update(kind="braided_hopf"),
    lambda o: o["metadata"].update(grouplikes=["h"]),
    lambda o: o["R"].append([0, 0, 1.5]),
])
def test_parse_errors(sw, breakage):
    obj = _sweedler_obj(sw)
    breakage(obj)
    with pytest.raises(ParseError):
        hopf_from_json(obj)


def test_garbage_text():
    with pytest.raises(ParseError):
        loads("{not json")
    with pytest.raises(ParseError):
        hopf_from_json([1, 2, 3])


def test_duplicate_entries_rejected(sw):
    obj = _sweedler_obj(sw)
    obj["mult"].append(list(obj["mult"][0]))
    with pytest.raises(ParseError):
        hopf_from_json(obj)


def test_loaded_structure_is_rechecked(sw):
    obj = _sweedler_obj(sw)
    obj["mult"] = [e for e in obj["mult"] if e[:3] != [2, 1, 3]]
    H = hopf_from_json(obj).H
    assert not verify_hopf(H).ok
