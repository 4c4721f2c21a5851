"""JSON forms for measures, coevents, logics, transfers and decompositions.

Rationals travel as strings ("-3/4"), events as comma-joined outcome lists
("1,3", "" for the empty event), coevents as lists of monomial outcome
lists. Readers validate shape and raise InputError with the offending key.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Mapping, Optional, Sequence

from .coevents import Coevent, from_monomials
from .errors import InputError
from .extremal import Decomposition
from .measures import SignedQMeasure, from_full_table, iter_pairs, pair_count, pair_index
from .space import OutcomeSpace, format_rational, parse_rational
from .transfer import TransferMeasure, TransferResult


def _require_mapping(data: Any, what: str) -> Mapping[str, Any]:
    if not isinstance(data, Mapping):
        raise InputError(f"{what} must be a JSON object, got {type(data).__name__}")
    return data


def _space_from(data: Mapping[str, Any]) -> OutcomeSpace:
    if "n" not in data:
        raise InputError("missing field 'n'")
    n = data["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise InputError(f"field 'n' must be an integer, got {n!r}")
    return OutcomeSpace(n)


def measure_to_dict(m: SignedQMeasure) -> dict[str, Any]:
    n = m.space.n
    return {
        "n": n,
        "singletons": [format_rational(m.single(i)) for i in range(1, n + 1)],
        "doubletons": [
            {"i": i, "j": j, "value": format_rational(m.double(i, j))}
            for i, j in iter_pairs(n)
        ],
    }


def measure_from_dict(data: Any) -> SignedQMeasure:
    body = _require_mapping(data, "a measure")
    space = _space_from(body)
    n = space.n
    if "table" in body:
        table_raw = _require_mapping(body["table"], "field 'table'")
        table = {}
        for key, value in table_raw.items():
            ev = space.parse_event(key)
            if ev in table:
                raise InputError(f"duplicate table entry for event {{{ev}}}")
            table[ev] = parse_rational(value)
        table.setdefault(space.empty, Fraction(0))
        return from_full_table(space, table)
    if "singletons" not in body:
        raise InputError("a measure needs 'singletons' or 'table'")
    raw_singles = body["singletons"]
    if not isinstance(raw_singles, Sequence) or isinstance(raw_singles, str):
        raise InputError("'singletons' must be a list")
    if len(raw_singles) != n:
        raise InputError(
            f"'singletons' must list {n} values, got {len(raw_singles)}"
        )
    singles = tuple(parse_rational(v) for v in raw_singles)
    doubles = [Fraction(0)] * pair_count(n)
    seen: set[tuple[int, int]] = set()
    for entry in body.get("doubletons", []):
        item = _require_mapping(entry, "a doubleton entry")
        try:
            i = item["i"]
            j = item["j"]
            value = item["value"]
        except KeyError as exc:
            raise InputError(f"doubleton entry missing field {exc}") from None
        if isinstance(i, bool) or isinstance(j, bool) or not isinstance(i, int) or not isinstance(j, int):
            raise InputError(f"doubleton indices must be integers, got i={i!r}, j={j!r}")
        if not 1 <= i < j <= n:
            raise InputError(f"doubleton needs 1 <= i < j <= {n}, got i={i}, j={j}")
        if (i, j) in seen:
            raise InputError(f"duplicate doubleton entry for {{{i},{j}}}")
        seen.add((i, j))
        doubles[pair_index(i, j, n)] = parse_rational(value)
    return SignedQMeasure(space, singles, tuple(doubles))


def coevent_to_dict(phi: Coevent) -> dict[str, Any]:
    return {
        "n": phi.space.n,
        "monomials": [list(mono) for mono in phi.sorted_monomials()],
    }


def _coevent_body(space: OutcomeSpace, body: Mapping[str, Any]) -> Coevent:
    if "monomials" in body:
        raw = body["monomials"]
        if not isinstance(raw, Sequence) or isinstance(raw, str):
            raise InputError("'monomials' must be a list of outcome lists")
        monomials = []
        for mono in raw:
            if not isinstance(mono, Sequence) or isinstance(mono, str):
                raise InputError(f"monomial {mono!r} must be a list of outcomes")
            monomials.append(list(mono))
        return from_monomials(space, monomials)
    if "truth" in body:
        truth_raw = _require_mapping(body["truth"], "field 'truth'")
        truth = 0
        for key, value in truth_raw.items():
            ev = space.parse_event(key)
            if value not in (0, 1):
                raise InputError(
                    f"truth value at {{{ev}}} must be 0 or 1, got {value!r}"
                )
            if value:
                truth |= 1 << ev.bits
        return Coevent(space, truth)
    raise InputError("a coevent needs 'monomials' or 'truth'")


def coevent_from_dict(data: Any, space: Optional[OutcomeSpace] = None) -> Coevent:
    body = _require_mapping(data, "a coevent")
    if "n" in body:
        own = _space_from(body)
        if space is not None and own != space:
            raise InputError(f"coevent says n={own.n} but the context needs n={space.n}")
        space = own
    if space is None:
        raise InputError("missing field 'n'")
    return _coevent_body(space, body)


def logic_to_dict(space: OutcomeSpace, coevents: Sequence[Coevent]) -> dict[str, Any]:
    return {
        "n": space.n,
        "coevents": [
            {"monomials": [list(m) for m in phi.sorted_monomials()]}
            for phi in coevents
        ],
    }


def logic_from_dict(data: Any) -> tuple[OutcomeSpace, tuple[Coevent, ...]]:
    body = _require_mapping(data, "a logic")
    space = _space_from(body)
    raw = body.get("coevents")
    if not isinstance(raw, Sequence) or isinstance(raw, str):
        raise InputError("'coevents' must be a list")
    out = []
    for idx, entry in enumerate(raw):
        try:
            out.append(coevent_from_dict(entry, space))
        except InputError as exc:
            raise InputError(f"coevent {idx}: {exc}") from None
    return space, tuple(out)


def transfer_measure_to_list(nu: TransferMeasure) -> list[dict[str, Any]]:
    return [
        {
            "monomials": [list(m) for m in phi.sorted_monomials()],
            "weight": format_rational(w),
        }
        for phi, w in nu.weights
    ]


def transfer_result_to_dict(result: TransferResult) -> dict[str, Any]:
    if result.feasible:
        assert result.nu is not None
        return {"feasible": True, "nu": transfer_measure_to_list(result.nu)}
    assert result.certificate is not None
    return {
        "feasible": False,
        "certificate": {
            ev.format(): format_rational(y) for ev, y in result.certificate
        },
    }


def decomposition_to_dict(dec: Decomposition) -> dict[str, Any]:
    return {
        "max_value": format_rational(dec.total_weight()),
        "terms": [
            {
                "weight": format_rational(w),
                "measure": measure_to_dict(term.measure),
                "monomials": [list(m) for m in term.coevent.sorted_monomials()],
            }
            for w, term in dec.terms
        ],
    }


def loads(text: str, what: str = "input") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what} is not valid JSON: {exc}") from None


def load_file(path: str, what: str = "input") -> Any:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {what} file {path!r}: {exc}") from None
    return loads(text, what)


def dumps(payload: Any) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)
