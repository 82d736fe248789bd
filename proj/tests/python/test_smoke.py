import math
import os
from pathlib import Path

import pytest

import chemgenus

CORPUS = Path(os.environ.get("CHEMGENUS_CORPUS", Path(__file__).resolve().parents[2] / "corpus"))


def test_atomic_numbers():
    assert chemgenus.atomic_number("H") == 1
    assert chemgenus.atomic_number("Cl") == 17
    with pytest.raises(chemgenus.ChemgenusError) as err:
        chemgenus.atomic_number("Xx")
    assert err.value.kind == "UnknownElement"


def test_side_encoding():
    doc = chemgenus.Document.load(CORPUS / "ch4cl2.mdf")
    assert doc.molecule_names == ["CH4", "Cl2", "CH3Cl", "HCl"]
    side = doc.encode_side("CH4 + Cl2")
    assert [f["genus"] for f in side["factors"]] == [10, 34]
    assert [f["canonical_multiplicity"] for f in side["factors"]] == [8, 2]
    assert side["rendered"].startswith("(pi_1^* L_CH4)^8 (+) (pi_2^* L_Cl2)^2 (+) E_2 (+) E_32")


def test_check_and_solve():
    doc = chemgenus.Document.load(CORPUS / "mgo.mdf")
    assert doc.check(2)["balanced"]
    result = doc.solve(1, elements=["O"], max_atoms=4)
    c = result["constraints"]
    assert (c["genus_required"], c["canonical_required"], c["trivial_rank_required"]) == (16, 4, 12)
    [cand] = result["candidates"]
    assert cand["formula"] == "O2"
    assert cand["witness"]["bonds"] == [{"a": "O1", "b": "O2", "kind": "cov", "order": 2}]
    with pytest.raises(IndexError):
        doc.check(7)
    with pytest.raises(chemgenus.ChemgenusError) as err:
        doc.constraints(3)
    assert err.value.kind == "NegativeDelta"


def test_composition_only():
    doc = chemgenus.Document.load(CORPUS / "lactose.mdf")
    assert doc.encode("Lactase")["genus"] == 218648
    assert doc.encode("Lactase")["composition_only"]
    assert doc.constraints(3)["structure_unavailable"]


def test_json_matches_mdf():
    mdf = chemgenus.Document.load(CORPUS / "mgo.mdf")
    json_doc = chemgenus.Document.load(CORPUS / "mgo.json")
    assert mdf.encode("MgO") == json_doc.encode("MgO")
    again = chemgenus.Document.from_mdf(mdf.render())
    assert again.reactions == mdf.reactions


def test_tail_ratio():
    times = [i * 1e-3 for i in range(30001)]
    values = [math.exp(-t) for t in times]
    expected = math.exp(-5) / (1 - math.exp(-5))
    assert abs(chemgenus.tail_ratio(times, values, 5.0) - expected) < 1e-4
    assert chemgenus.meets_threshold(times, values, 5.0, 0.01)
    assert not chemgenus.meets_threshold(times, values, 5.0, 0.001)
    with pytest.raises(chemgenus.ChemgenusError) as err:
        chemgenus.tail_ratio([0, 1, 2], [0, 0, 1], 1.0)
    assert err.value.kind == "ZeroDenominator"
