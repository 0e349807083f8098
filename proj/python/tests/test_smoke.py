import json

import pytest

import kantor


def test_catalog_inventory():
    entries = kantor.list_entries()
    assert len(entries) == 23
    by_id = {e["id"]: e for e in entries}
    assert by_id["E8-eP-7"]["expected"]["tkk_dims"] == [14, 64, 92, 64, 14]
    assert len(kantor.list_entries(classical=True)) > 23


def test_verify_small_entry_exhaustively():
    r = kantor.verify("G2")
    assert r["ok"]
    assert r["axioms"]["mode"] == "exhaustive"


def test_tkk_report_for_f4():
    r = kantor.tkk("F4-contact")
    assert r["ok"]
    assert r["dims"] == [1, 14, 22, 14, 1]
    assert r["named_type"] == "F4"


def test_derivations_match_prediction():
    r = kantor.derivations("E7-eP-5")
    assert r["ok"]
    assert r["measured"] == 21


def test_counts():
    assert kantor.count_kts("E7")["total"] == 7
    assert kantor.count_kts("sl(5)")["total"] == 7
    assert kantor.enumerate_gradings("F4")["admissible"] == 2


def test_export_and_reimport():
    doc = kantor.export_entry("F4-eP-7")
    assert doc["dim"] == 8
    assert kantor.verify_document(json.dumps(doc))["ok"]
    assert kantor.roundtrip("F4-eP-7")


def test_tampered_document_fails_axioms():
    doc = kantor.export_entry("G2")
    doc["system"]["products"][0][3][0][1] = "12345"
    assert not kantor.verify_document(doc)["ok"]


def test_errors():
    with pytest.raises(kantor.UnknownId):
        kantor.verify("NoSuch")
    with pytest.raises(kantor.DocumentError):
        kantor.verify_document("{not json")
    with pytest.raises(ValueError):
        kantor.tkk("G2", jacobi="bogus")
