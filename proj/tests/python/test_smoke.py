import copy
import json
import os
import pathlib

import pytest

import uavdss

DATA = pathlib.Path(os.environ.get("UAVDSS_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))
MISSION = DATA / "missions" / "dataset-01.json"


def test_catalogue():
    methods = uavdss.method_names()
    assert len(methods) == 16
    assert "fuzzy_vikor" in methods and "wsm" in methods
    assert "Balanced" in uavdss.profile_names()
    assert len(uavdss.criterion_ids()) == 11


def test_rank_dataset_is_a_permutation():
    ds = uavdss.load_dataset(MISSION)
    ids = sorted(p["id"] for p in ds["plans"])
    for method in uavdss.method_names():
        r = uavdss.rank(ds, method=method, profile="Cost")
        assert sorted(a["id"] for a in r["ordered"]) == ids
        ranks = [a["rank"] for a in r["ordered"]]
        assert ranks[0] == 1 and ranks == sorted(ranks)


def test_path_and_dict_give_same_ranking():
    ds = uavdss.load_dataset(MISSION)
    assert uavdss.rank(MISSION, method="topsis_vector") == uavdss.rank(ds, method="topsis_vector")


def test_rank_matrix_dominance():
    rows = [[1.0, 1.0], [2.0, 2.0], [1.5, 1.0]]
    for method in ["wsm", "wpm", "topsis_vector", "vikor", "fuzzy_topsis_linear", "fuzzy_waspas"]:
        r = uavdss.rank_matrix(rows, ["max", "max"], method=method, ids=["a", "b", "c"])
        assert r["ordered"][0]["id"] == "b", method
        assert r["ordered"][-1]["id"] == "a", method


def test_rank_matrix_profile_shifts_winner():
    rows = [[10.0, 1.0], [1.0, 10.0]]
    first = uavdss.rank_matrix(rows, ["max", "max"], profile={"c0": "VeryHigh", "c1": "Low"}, ids=["x", "y"])
    second = uavdss.rank_matrix(rows, ["max", "max"], profile={"c0": "Low", "c1": "VeryHigh"}, ids=["x", "y"])
    assert first["ordered"][0]["id"] == "x"
    assert second["ordered"][0]["id"] == "y"


def test_filter_threshold_zero_keeps_everything():
    out = uavdss.filter_plans(MISSION, threshold=0.0)
    assert out["ranked"] == 17 and len(out["kept"]) == 17


def test_filter_keeps_ranking_order():
    ranking = [a["id"] for a in uavdss.rank(MISSION)["ordered"]]
    out = uavdss.filter_plans(MISSION, threshold=2.0)
    kept = [k["plan"] for k in out["kept"]]
    assert kept and kept[0] == ranking[0]
    positions = [ranking.index(k) for k in kept]
    assert positions == sorted(positions)


def test_sweep_is_monotone():
    rows = uavdss.threshold_sweep(MISSION, grid="0:3:0.5")
    assert [r["threshold"] for r in rows] == [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0]
    kept = [r["kept"] for r in rows]
    assert kept == sorted(kept, reverse=True)
    assert all(0.0 <= r["hypervolume"] <= 1.0 for r in rows)


def test_plan_distance_single_family_changes():
    plan = uavdss.load_dataset(MISSION)["plans"][0]
    other = copy.deepcopy(plan)
    other["uavs"][0]["gcs"] = "G9"
    assert uavdss.plan_distance(plan, other) == pytest.approx(0.2)
    other["uavs"][0]["return"] = "mid" if plan["uavs"][0]["return"] != "mid" else "max"
    assert uavdss.plan_distance(plan, other) == pytest.approx(0.3)
    assert uavdss.plan_distance(plan, other, weights={"gcs": 1.0}) == pytest.approx(1.1)
    assert uavdss.plan_distance(plan, plan) == 0.0


def test_hypervolume():
    assert uavdss.hypervolume([[0.5, 0.5]], [1.0, 1.0]) == pytest.approx(0.25)
    assert uavdss.hypervolume([[0.2, 0.6], [0.6, 0.2]], [1.0, 1.0]) == pytest.approx(0.48)


def test_score_and_wilcoxon():
    assert uavdss.score_from_rank(1, 5) == 1.0
    assert uavdss.score_from_rank(3, 5) == 0.5
    assert uavdss.score_from_rank(5, 5) == 0.0
    w = uavdss.wilcoxon([0.1] * 6)
    assert w["w_plus"] == 21 and w["p_value"] == pytest.approx(2 / 64)


def test_score_decisions_and_compare():
    decisions = [json.loads(line) for line in (DATA / "decisions" / "sample.jsonl").read_text().splitlines() if line]
    missions = sorted((DATA / "missions").glob("*.json"))
    records = uavdss.score_decisions(decisions, missions, methods=["wsm", "fuzzy_vikor"])
    assert records and all(0.0 <= r["score"] <= 1.0 for r in records)
    ab = uavdss.compare_methods(records, "fuzzy_vikor", "wsm")
    ba = uavdss.compare_methods(records, "wsm", "fuzzy_vikor")
    assert ab["pairs"] == len(records) // 2
    assert ab["mean_diff"] == pytest.approx(-ba["mean_diff"])
    assert ab["p_value"] == pytest.approx(ba["p_value"])


def test_errors_map_to_python_exceptions():
    with pytest.raises(uavdss.NotFoundError):
        uavdss.rank(MISSION, method="no_such_method")
    with pytest.raises(uavdss.NotFoundError):
        uavdss.load_dataset(DATA / "missions" / "missing.json")
    with pytest.raises(uavdss.ValidationError):
        uavdss.filter_plans(MISSION, threshold=-1.0)
    with pytest.raises(LookupError):
        uavdss.rank(MISSION, profile="Nobody")
