import json
import shutil

import pytest

from permdec import BudgetExceeded, OrderMismatch, UnknownCase
from permdec.atlas import DEFAULT_DATA_DIR, list_cases, load_case, verify_case

DESK = {"KLEIN_GRID", "A6_36", "M12_144", "SP62_63"}
METADATA_ONLY = {"POMEGA8_Q", "POMEGA8_3", "SP4Q_EVEN", "SP4A2_MULT"}


def test_list_cases():
    cases = list_cases()
    names = {name for name, _, _ in cases}
    assert DESK | METADATA_ONLY <= names
    for name, citation, desk in cases:
        assert isinstance(citation, str) and citation
        assert desk == (name in DESK) or name not in DESK | METADATA_ONLY


def test_unknown_case():
    with pytest.raises(UnknownCase) as exc:
        load_case("NO_SUCH_CASE")
    assert "A6_36" in str(exc.value)


def test_load_recomputes_orders(m12_case):
    assert m12_case.group.order() == 95040
    assert m12_case.subgroups["A"].order() == 7920
    assert m12_case.subgroups["B"].order() == 7920


def test_corrupted_data_raises(tmp_path):
    dest = tmp_path / "cases"
    dest.mkdir()
    src = DEFAULT_DATA_DIR / "cases" / "A6_36.json"
    data = json.loads(src.read_text())
    data["expected"]["T_order"] = 720
    (dest / "A6_36.json").write_text(json.dumps(data))
    with pytest.raises(OrderMismatch):
        load_case("A6_36", data_dir=tmp_path)


def test_corrupted_subgroup_order_raises(tmp_path):
    dest = tmp_path / "cases"
    dest.mkdir()
    src = DEFAULT_DATA_DIR / "cases" / "KLEIN_GRID.json"
    data = json.loads(src.read_text())
    label = next(iter(data["expected"]["subgroup_orders"]))
    data["expected"]["subgroup_orders"][label] += 1
    (dest / "KLEIN_GRID.json").write_text(json.dumps(data))
    with pytest.raises(OrderMismatch):
        load_case("KLEIN_GRID", data_dir=tmp_path)


@pytest.mark.parametrize("name", sorted(DESK))
def test_verify_desk_cases(name):
    report = verify_case(name)
    assert report["ok"], report.get("failures")
    assert all(c["ok"] for c in report["checks"])


@pytest.mark.parametrize("name", sorted(METADATA_ONLY))
def test_metadata_cases_skip(name):
    record = load_case(name)
    assert not record.desk_scale
    assert record.group is None
    assert record.expected  # carries the recorded values even when skipped
    report = verify_case(name)
    assert report["ok"] and report.get("skipped")


def test_pomega8_q_metadata():
    record = load_case("POMEGA8_Q")
    assert "exactly 3" in record.expected["cd_count_note"]
    assert record.expected["K"] == "Omega7(q)"


def test_sp4a2_metadata():
    record = load_case("SP4A2_MULT")
    exp = record.expected
    assert exp["index"] == 3
    assert len(exp["subgroups"]) == 3


def test_pomega8_3_metadata():
    record = load_case("POMEGA8_3")
    exp = record.expected
    assert exp["omega_size"] == 34390137600
    # the three symmetric-group degrees in W are the subgroup indices
    assert exp["W"] == "S1080 x S1120 x S28431"
    assert 1080 * 1120 * 28431 == exp["omega_size"]


def test_verify_budget():
    with pytest.raises(BudgetExceeded):
        verify_case("A6_36", budget=10)


def test_unknown_construction(tmp_path):
    dest = tmp_path / "cases"
    dest.mkdir()
    src = DEFAULT_DATA_DIR / "cases" / "KLEIN_GRID.json"
    data = json.loads(src.read_text())
    data["construction"] = "mystery"
    (dest / "KLEIN_GRID.json").write_text(json.dumps(data))
    with pytest.raises(UnknownCase):
        verify_case("KLEIN_GRID", data_dir=tmp_path)


def test_sp62_values(sp62_case):
    exp = sp62_case.expected
    assert exp["omega_size"] == 120960
    assert exp["triple_intersection"] == 12
    assert sorted(exp["indices"]) == [28, 36, 120]
