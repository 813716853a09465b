"""Smoke tests for the Python bindings."""

import json
import os

import pytest

import toric_cohom as tc

FANS = os.environ.get("TORIC_FANS_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "fans"))


def fan_path(name):
    return os.path.join(FANS, name + ".json")


def test_parse_and_validate():
    fan = tc.load_fan(fan_path("p2"))
    assert fan.dim == 2
    assert fan.rays == [[1, 0], [0, 1], [-1, -1]]
    assert fan.max_cones == [[0, 1], [1, 2], [0, 2]]
    assert tc.validate(fan)["ok"]
    round_trip = tc.parse_fan(tc.serialize_fan(fan))
    assert round_trip.rays == fan.rays


def test_parse_errors():
    with pytest.raises(ValueError):
        tc.parse_fan("not json")
    with pytest.raises(ValueError):
        tc.parse_fan(json.dumps({"dim": 2, "rays": [[2, 0], [0, 1]], "max_cones": [[0, 1]]}))


def test_cohomology_p2():
    fan = tc.load_fan(fan_path("p2"))
    engine = tc.CohomologyEngine(fan)
    assert engine.cohomology([2, 0, 0])["h"] == [6, 0, 0]
    assert engine.cohomology([-3, 0, 0])["h"] == [0, 0, 1]
    assert tc.cohomology(fan, [0, 0, 0]) == [1, 0, 0]
    detail = engine.cohomology([-3, 0, 0], explain=True)
    assert detail["terms"][0]["support"] == [0, 1, 2]


def test_stanley_reisner_and_class_group():
    fan = tc.load_fan(fan_path("p1xp1"))
    engine = tc.CohomologyEngine(fan)
    assert engine.stanley_reisner() == [[0, 2], [1, 3]]
    assert len(engine.usr()) == 3
    assert engine.class_group.free_rank == 2
    cls = engine.class_group.divisor_class([1, 2, 0, 0])
    assert engine.class_group.divisor_class(engine.class_group.particular_preimage(cls)) == cls


def test_graded_dims_and_oracle_agree():
    fan = tc.load_fan(fan_path("p1xp1"))
    engine = tc.CohomologyEngine(fan)
    oracle = tc.OracleContext(fan)
    assert engine.graded_dim([0, 2], 1) == 1
    assert oracle.graded_dim([0, 2], 1) == 1


def test_verify_p2():
    fan = tc.load_fan(fan_path("p2"))
    report = tc.verify(fan, box=[(-4, 3)] * 3)
    assert report["ok"]
    assert report["total_mismatches"] == 0
    assert report["classes_compared"] > 0


def test_homology_helper():
    # boundary of a triangle is a circle
    dims = tc.reduced_homology_dims(3, [[0, 1], [1, 2], [0, 2]])
    assert dims == {1: 1}
