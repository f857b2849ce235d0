"""Ranking and filtering of multi-UAV mission plans.

Datasets, plans and results are plain dicts; the native module does the work.
"""

import json
import os

from . import _uavdss
from ._uavdss import DomainError, Error, NotFoundError, NumericalError, ValidationError

__all__ = [
    "DomainError", "Error", "NotFoundError", "NumericalError", "ValidationError",
    "method_names", "profile_names", "criterion_ids", "load_dataset",
    "rank", "rank_matrix", "filter_plans", "threshold_sweep", "plan_distance",
    "hypervolume", "score_from_rank", "wilcoxon", "compare_methods", "score_decisions",
]


def _text(obj):
    if obj is None:
        return ""
    return json.dumps(obj)


def _dataset(ds):
    # accept a path or an already loaded dict
    if isinstance(ds, (str, os.PathLike)):
        return _uavdss.load_dataset(os.fspath(ds))
    return json.dumps(ds)


def method_names():
    return list(_uavdss.method_names())


def profile_names():
    return list(_uavdss.profile_names())


def criterion_ids():
    return list(_uavdss.criterion_ids())


def load_dataset(path):
    return json.loads(_uavdss.load_dataset(os.fspath(path)))


def rank(dataset, method="fuzzy_vikor", profile="Balanced", params=None):
    """Ranks every plan of a mission dataset."""
    return json.loads(_uavdss.rank_dataset(_dataset(dataset), method, profile, _text(params)))


def rank_matrix(rows, directions, method="wsm", profile=None, ids=None, params=None):
    """Ranks an arbitrary matrix. Criteria are named c0, c1, ...; `profile`
    maps those names to importance degrees ("VeryLow" .. "VeryHigh")."""
    if profile is None:
        profile = {f"c{i}": "Medium" for i in range(len(directions))}
    return json.loads(_uavdss.rank_matrix(
        [list(map(float, r)) for r in rows], list(directions), list(ids or []),
        json.dumps({"name": "custom", "degrees": profile}), method, _text(params)))


def filter_plans(dataset, method="fuzzy_vikor", profile="Balanced", threshold=1.0,
                 rule="pairwise", weights=None, params=None):
    """Ranks the plans, then drops near-duplicates within `threshold`."""
    return json.loads(_uavdss.filter_dataset(
        _dataset(dataset), method, profile, float(threshold), rule, _text(weights), _text(params)))


def threshold_sweep(dataset, method="fuzzy_vikor", profile="Balanced", grid="0:5:0.1",
                    rule="pairwise", weights=None):
    return json.loads(_uavdss.threshold_sweep(_dataset(dataset), method, profile, grid, rule, _text(weights)))


def plan_distance(a, b, weights=None):
    return _uavdss.plan_distance(json.dumps(a), json.dumps(b), _text(weights))


def hypervolume(points, ref):
    return _uavdss.hypervolume([list(map(float, p)) for p in points], list(map(float, ref)))


def score_from_rank(rank, num_solutions):
    return _uavdss.score_from_rank(int(rank), int(num_solutions))


def wilcoxon(differences):
    """Two-sided signed-rank test on paired differences."""
    return json.loads(_uavdss.wilcoxon([float(d) for d in differences]))


def compare_methods(records, a, b):
    return json.loads(_uavdss.compare_methods(json.dumps(records), a, b))


def score_decisions(decisions, missions, methods=None):
    """Score records of each method against operator decisions."""
    loaded = [json.loads(_dataset(m)) for m in missions]
    return json.loads(_uavdss.score_decisions(json.dumps(decisions), json.dumps(loaded), list(methods or [])))
