"""JSON round trips and reader validation."""

import json
from fractions import Fraction

import pytest

from qmeasure.coevents import parse_coevent, zero_coevent
from qmeasure.errors import InputError
from qmeasure.measures import SignedQMeasure, ordinary_measure, recompose
from qmeasure.sampling import random_q_measure
from qmeasure.serialize import (
    coevent_from_dict,
    coevent_to_dict,
    decomposition_to_dict,
    dumps,
    loads,
    logic_from_dict,
    logic_to_dict,
    measure_from_dict,
    measure_to_dict,
    transfer_result_to_dict,
)
from qmeasure.space import OutcomeSpace
from qmeasure.extremal import pure_decomposition
from qmeasure.transfer import transfer_feasible

F = Fraction


def test_measure_round_trip(rng):
    for n in (2, 3, 4):
        space = OutcomeSpace(n)
        for _ in range(10):
            m = random_q_measure(space, rng)
            back = measure_from_dict(loads(dumps(measure_to_dict(m))))
            assert back == m


def test_measure_from_table_form():
    space = OutcomeSpace(2)
    m = recompose(space, ["1/2", "1/2"], [1])
    table = {
        "1": "1/2",
        "2": "1/2",
        "1,2": str(m(space.full)),
    }
    back = measure_from_dict({"n": 2, "table": table})
    assert back == m
    with pytest.raises(InputError, match="grade-2"):
        measure_from_dict(
            {
                "n": 3,
                "table": {
                    "1": 1, "2": 1, "3": 0, "1,2": 2, "1,3": 1,
                    "2,3": 1, "1,2,3": 9,
                },
            }
        )


def test_measure_reader_validation():
    with pytest.raises(InputError, match="JSON object"):
        measure_from_dict([1, 2])
    with pytest.raises(InputError, match="'n'"):
        measure_from_dict({"singletons": ["1"]})
    with pytest.raises(InputError, match="singletons"):
        measure_from_dict({"n": 2})
    with pytest.raises(InputError, match="2 values"):
        measure_from_dict({"n": 2, "singletons": ["1"]})
    base = {"n": 2, "singletons": ["1", "1"]}
    with pytest.raises(InputError, match="missing field"):
        measure_from_dict({**base, "doubletons": [{"i": 1, "j": 2}]})
    with pytest.raises(InputError, match="1 <= i < j"):
        measure_from_dict(
            {**base, "doubletons": [{"i": 2, "j": 1, "value": "1"}]}
        )
    with pytest.raises(InputError, match="duplicate doubleton"):
        measure_from_dict(
            {
                **base,
                "doubletons": [
                    {"i": 1, "j": 2, "value": "1"},
                    {"i": 1, "j": 2, "value": "2"},
                ],
            }
        )
    with pytest.raises(InputError, match="integers"):
        measure_from_dict(
            {**base, "doubletons": [{"i": True, "j": 2, "value": "1"}]}
        )


def test_missing_doubletons_default_to_zero():
    m = measure_from_dict({"n": 3, "singletons": ["1", "0", "0"]})
    assert m.singles == (F(1), F(0), F(0))
    assert m.doubles == (F(0), F(0), F(0))


def test_coevent_round_trip():
    space = OutcomeSpace(4)
    for text in ("0", "1", "1;2,3", "1,2;3,4", "1;2;3;4"):
        phi = parse_coevent(space, text)
        back = coevent_from_dict(loads(dumps(coevent_to_dict(phi))))
        assert back == phi


def test_coevent_truth_table_form():
    space = OutcomeSpace(2)
    phi = coevent_from_dict(
        {"n": 2, "truth": {"1": 1, "2": 0, "1,2": 1}}
    )
    assert phi(space.singleton(1)) == 1
    assert phi(space.singleton(2)) == 0
    assert phi(space.full) == 1
    with pytest.raises(InputError, match="0 or 1"):
        coevent_from_dict({"n": 2, "truth": {"1": 2}})
    with pytest.raises(InputError, match="'monomials' or 'truth'"):
        coevent_from_dict({"n": 2})
    with pytest.raises(InputError, match="context needs"):
        coevent_from_dict({"n": 3, "monomials": [[1]]}, OutcomeSpace(2))


def test_logic_round_trip():
    space = OutcomeSpace(3)
    logic = (
        zero_coevent(space),
        parse_coevent(space, "1"),
        parse_coevent(space, "1,2;3"),
    )
    back_space, back = logic_from_dict(loads(dumps(logic_to_dict(space, logic))))
    assert back_space == space
    assert back == logic
    with pytest.raises(InputError, match="coevent 1"):
        logic_from_dict({"n": 3, "coevents": [{"monomials": []}, {"bad": 1}]})


def test_transfer_result_shapes():
    space = OutcomeSpace(2)
    m = recompose(space, ["1/4", "1/4"], [1])
    feasible = transfer_result_to_dict(transfer_feasible(m, "multiplicative"))
    assert feasible["feasible"] is True
    assert {entry["weight"] for entry in feasible["nu"]} == {"1/4", "1"}
    blocked = recompose(space, [1, 1], [-1])
    infeasible = transfer_result_to_dict(
        transfer_feasible(blocked, "multiplicative")
    )
    assert infeasible["feasible"] is False
    assert set(infeasible["certificate"]) <= {"1", "2", "1,2"}
    # serialized documents are plain JSON
    json.loads(dumps(feasible))
    json.loads(dumps(infeasible))


def test_decomposition_shape():
    space = OutcomeSpace(2)
    m = ordinary_measure(space, ["1/2", "1/2"])
    doc = decomposition_to_dict(pure_decomposition(m))
    assert doc["max_value"] == "1"
    assert [t["weight"] for t in doc["terms"]] == ["1/2", "1/2"]
    assert [t["monomials"] for t in doc["terms"]] == [[[1]], [[2]]]
    for term in doc["terms"]:
        back = measure_from_dict(term["measure"])
        assert back.space == space


def test_dumps_is_stable():
    space = OutcomeSpace(3)
    m = ordinary_measure(space, [1, 2, 3])
    assert dumps(measure_to_dict(m)) == dumps(measure_to_dict(m))
    doc = loads(dumps(measure_to_dict(m)))
    assert list(doc) == sorted(doc)


def test_loads_error_naming():
    with pytest.raises(InputError, match="a measure file is not valid JSON"):
        loads("{", what="a measure file")
