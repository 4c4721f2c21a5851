"""Command line front end.

Subcommands cover measure evaluation, q-integration, squared-length
integration on the unit interval, coevent classification, centers and
classical domains, pure-measure enumeration, decomposition, transfer, and
the golden verify suite. Results go to stdout as JSON with sorted keys;
human diagnostics go to stderr and are silenced by --json. Exit codes:
0 success (an infeasible transfer is still a successful computation),
1 bad input, 2 a documented resource cap, 3 an internal defect or a
failed verify run.

Measures are passed as JSON files or inline JSON (anything starting with
'{'). Coevents are passed in monomial text form: outcomes joined by
commas, monomials by semicolons, '0' for the zero coevent ('1,2;3' is
w1*w2* + w3*).
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Optional, Sequence

from . import serialize
from .coevents import classify, parse_coevent
from .domains import center, center_subdomains, classical_domains, restriction_is_additive
from .errors import InputError, QuantumMeasureError, ResourceCapError, SolverDefectError
from .extremal import enumerate_pure, pure_decomposition
from .integrals import q_integral_min_form, q_integral_over_event, q_integral_signed
from .lebesgue_squared import (
    DEFAULT_PANELS,
    Interval,
    QuadratureConfig,
    closed_form,
    integrand_for,
    integrate_general,
    integrate_monotone,
)
from .measures import SignedQMeasure
from .space import OutcomeSpace, format_rational, parse_rational
from .transfer import (
    LOGIC_KINDS,
    transfer_constructive,
    transfer_feasible,
)
from .verify import DEFAULT_TOLERANCE, run_checks

Payload = dict[str, Any]


class _Parser(argparse.ArgumentParser):
    """Argument errors raise InputError so they exit 1 like other bad input."""

    def error(self, message: str) -> None:  # type: ignore[override]
        raise InputError(message)


def _load_json_arg(text: str, what: str) -> Any:
    if text.lstrip().startswith("{"):
        return serialize.loads(text, what)
    return serialize.load_file(text, what)


def _load_measure(text: str) -> SignedQMeasure:
    return serialize.measure_from_dict(_load_json_arg(text, "measure"))


def _load_coevent(args: argparse.Namespace):
    """Coevent from monomial text, inline JSON, @path, or a .json path."""
    text = args.coevent.strip()
    path = text[1:] if text.startswith("@") else text
    if text.startswith("{") or text != path or path.endswith(".json"):
        data = _load_json_arg(path, "coevent")
        space = None if args.n is None else OutcomeSpace(args.n)
        return serialize.coevent_from_dict(data, space)
    if args.n is None:
        raise InputError("monomial text needs --n to fix the outcome space")
    return parse_coevent(OutcomeSpace(args.n), text)


def _parse_values(space: OutcomeSpace, text: str) -> list:
    parts = [p for p in text.split(",")]
    if len(parts) != space.n:
        raise InputError(
            f"need {space.n} comma-separated values, got {len(parts)}"
        )
    return [parse_rational(p) for p in parts]


def _cmd_eval(args: argparse.Namespace) -> tuple[Payload, int]:
    m = _load_measure(args.measure)
    payload: Payload = {"n": m.space.n}
    explicit = args.event is not None or args.table or args.check
    if args.event is not None:
        ev = m.space.parse_event(args.event)
        payload["event"] = ev.format()
        payload["value"] = format_rational(m(ev))
    if args.table or not explicit:
        payload["table"] = {
            ev.format(): format_rational(m(ev)) for ev in m.space.iter_events()
        }
    if args.check or not explicit:
        flag = m.is_q_measure()
        payload["is_q_measure"] = flag.is_q_measure
        payload["witness"] = None if flag.witness is None else flag.witness.format()
    return payload, 0


def _cmd_integrate(args: argparse.Namespace) -> tuple[Payload, int]:
    m = _load_measure(args.measure)
    f = m.space.outcome_function(_parse_values(m.space, args.function))
    if args.min_form:
        if args.event is not None:
            raise InputError("--event works with the layer-cake route only")
        value = q_integral_min_form(f, m)
        route = "min-form"
    elif args.event is not None:
        value = q_integral_over_event(f, m, m.space.parse_event(args.event))
        route = "layer-cake"
    else:
        value = q_integral_signed(f, m)
        route = "layer-cake"
    return {"value": format_rational(value), "route": route}, 0


def _cmd_leb2(args: argparse.Namespace) -> tuple[Payload, int]:
    interval = Interval(args.a, args.b)
    config = QuadratureConfig(args.grid)
    exponent: Optional[int] = args.exponent
    reference = closed_form(args.kind, interval, exponent)
    if args.method == "closed":
        value = reference
    else:
        f = integrand_for(args.kind, exponent)
        if args.method == "general":
            value = integrate_general(f, interval, config)
        else:
            value = integrate_monotone(f, interval, config)
    error = abs(value - reference)
    payload: Payload = {
        "kind": args.kind,
        "a": args.a,
        "b": args.b,
        "method": args.method,
        "panels": args.grid,
        "value": value,
        "closed_form": reference,
        "abs_error": error,
        "within_tolerance": error <= args.tolerance,
    }
    if exponent is not None:
        payload["exponent"] = exponent
    return payload, 0


def _cmd_coevent_classify(args: argparse.Namespace) -> tuple[Payload, int]:
    space = OutcomeSpace(args.n)
    phi = parse_coevent(space, args.coevent)
    cls = classify(phi)
    return {
        "n": space.n,
        "monomials": [list(mono) for mono in phi.sorted_monomials()],
        "degree": cls.degree,
        "zero": cls.zero,
        "unital": cls.unital,
        "additive": cls.additive,
        "multiplicative": cls.multiplicative,
        "quadratic": cls.quadratic,
        "homomorphism": cls.homomorphism,
    }, 0


def _members(sub) -> list[str]:
    return [ev.format() for ev in sub.members]


def _cmd_center(args: argparse.Namespace) -> tuple[Payload, int]:
    space = OutcomeSpace(args.n)
    phi = parse_coevent(space, args.coevent)
    sub = center(phi)
    subdomains = [] if phi.is_zero else center_subdomains(phi)
    return {
        "n": space.n,
        "members": _members(sub),
        "top": sub.top.format(),
        "atoms": [ev.format() for ev in sub.atoms],
        "restriction_additive": restriction_is_additive(phi, sub),
        "subdomains": [_members(s) for s in subdomains],
    }, 0


def _cmd_domains(args: argparse.Namespace) -> tuple[Payload, int]:
    space = OutcomeSpace(args.n)
    phi = parse_coevent(space, args.coevent)
    doms = classical_domains(phi)
    return {
        "n": space.n,
        "count": len(doms),
        "domains": [_members(s) for s in doms],
    }, 0


def _cmd_pure(args: argparse.Namespace) -> tuple[Payload, int]:
    space = OutcomeSpace(args.n)
    pures = enumerate_pure(space)
    payload: Payload = {"n": space.n, "count": len(pures)}
    if args.count:
        payload["_text"] = str(len(pures))
    else:
        payload["measures"] = [
            dict(
                serialize.measure_to_dict(p.measure),
                monomials=[list(mono) for mono in p.coevent.sorted_monomials()],
            )
            for p in pures
        ]
    return payload, 0


def _cmd_decompose(args: argparse.Namespace) -> tuple[Payload, int]:
    m = _load_measure(args.measure)
    return serialize.decomposition_to_dict(pure_decomposition(m)), 0


def _resolve_logic(space: OutcomeSpace, text: str):
    if text in LOGIC_KINDS:
        return text
    if text.startswith("@"):
        text = text[1:]
    data = _load_json_arg(text, "logic")
    logic_space, coevents = serialize.logic_from_dict(data)
    if logic_space != space:
        raise InputError(
            f"logic file is for n={logic_space.n} but the measure has n={space.n}"
        )
    return coevents


def _cmd_transfer(args: argparse.Namespace) -> tuple[Payload, int]:
    m = _load_measure(args.measure)
    logic = _resolve_logic(m.space, args.logic)
    if args.constructive:
        nu = transfer_constructive(m, logic)
        return {
            "feasible": True,
            "nu": serialize.transfer_measure_to_list(nu),
        }, 0
    result = transfer_feasible(m, logic)
    return serialize.transfer_result_to_dict(result), 0


def _cmd_verify(args: argparse.Namespace) -> tuple[Payload, int]:
    results = run_checks(seed=args.seed, tolerance=args.tolerance, panels=args.grid)
    failed = sum(1 for r in results if not r.ok)
    if not args.json:
        for r in results:
            mark = "ok  " if r.ok else "FAIL"
            print(f"{mark} {r.check_id}: {r.detail}", file=sys.stderr)
        print(
            f"{len(results) - failed}/{len(results)} checks passed (seed {args.seed})",
            file=sys.stderr,
        )
    payload: Payload = {
        "seed": args.seed,
        "tolerance": args.tolerance,
        "panels": args.grid,
        "passed": len(results) - failed,
        "failed": failed,
        "checks": [
            {"id": r.check_id, "ok": r.ok, "detail": r.detail} for r in results
        ],
    }
    return payload, 0 if failed == 0 else 3


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    common.add_argument(
        "--json", action="store_true", help="machine output only, no stderr diagnostics"
    )

    parser = _Parser(prog="qm", description="exact quantum measure toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate a measure on events")
    p.add_argument("--measure", required=True, help="measure JSON (file or inline)")
    p.add_argument("--event", help="event like '1,3' ('' for the empty event)")
    p.add_argument("--table", action="store_true", help="print the full event table")
    p.add_argument("--check", action="store_true", help="report the q-measure flag")
    p.set_defaults(handler=_cmd_eval)

    p = sub.add_parser("integrate", parents=[common], help="q-integral of an outcome function")
    p.add_argument("--measure", required=True, help="measure JSON (file or inline)")
    p.add_argument("--function", required=True, help="outcome values like '2,5'")
    p.add_argument("--event", help="integrate over this event only")
    p.add_argument(
        "--min-form", action="store_true", help="use the min-form route (nonnegative f)"
    )
    p.set_defaults(handler=_cmd_integrate)

    p = sub.add_parser("leb2", parents=[common], help="squared-length integral on [0,1]")
    p.add_argument("--kind", required=True, choices=("power", "exp", "inverse_power"))
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument(
        "--exponent", "--power-n", type=int, help="exponent for the power kinds"
    )
    p.add_argument(
        "--method", choices=("monotone", "general", "closed"), default="monotone"
    )
    p.add_argument("--grid", type=int, default=DEFAULT_PANELS, help="quadrature panels")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.set_defaults(handler=_cmd_leb2)

    p = sub.add_parser("coevent-classify", parents=[common], help="classify a coevent")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coevent", required=True, help="monomial text like '1,2;3'")
    p.set_defaults(handler=_cmd_coevent_classify)

    p = sub.add_parser("center", parents=[common], help="center of a coevent")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coevent", required=True, help="monomial text like '1,2;3'")
    p.set_defaults(handler=_cmd_center)

    p = sub.add_parser("domains", parents=[common], help="maximal classical domains")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--coevent", required=True, help="monomial text like '1,2;3'")
    p.set_defaults(handler=_cmd_domains)

    p = sub.add_parser("pure", parents=[common], help="enumerate pure q-measures")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true", help="print the count only")
    p.set_defaults(handler=_cmd_pure)

    p = sub.add_parser("decompose", parents=[common], help="pure decomposition")
    p.add_argument("--measure", required=True, help="measure JSON (file or inline)")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("transfer", parents=[common], help="transfer to a coevent logic")
    p.add_argument("--measure", required=True, help="measure JSON (file or inline)")
    p.add_argument(
        "--logic",
        required=True,
        help="logic kind (additive, multiplicative, quadratic, full, pure) or @logic.json",
    )
    p.add_argument(
        "--constructive",
        action="store_true",
        help="ride the pure decomposition instead of the LP",
    )
    p.set_defaults(handler=_cmd_transfer)

    p = sub.add_parser("verify-paper", parents=[common], help="run the golden checks")
    p.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    p.add_argument("--grid", type=int, default=DEFAULT_PANELS, help="quadrature panels")
    p.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    json_only = False
    try:
        args = parser.parse_args(argv)
        json_only = args.json
        payload, code = args.handler(args)
    except InputError as exc:
        return _fail("input error", str(exc), 1, json_only)
    except ResourceCapError as exc:
        return _fail("resource cap", str(exc), 2, json_only)
    except SolverDefectError as exc:
        return _fail("internal defect", str(exc), 3, json_only)
    except QuantumMeasureError as exc:
        return _fail("error", str(exc), 3, json_only)
    text = payload.pop("_text", None) if isinstance(payload, dict) else None
    if text is not None and not json_only:
        print(text)
    else:
        print(serialize.dumps(payload))
    return code


def _fail(kind: str, message: str, code: int, json_only: bool) -> int:
    if not json_only:
        print(f"qm: {kind}: {message}", file=sys.stderr)
    print(serialize.dumps({"error": {"kind": kind, "message": message, "exit_code": code}}))
    return code


if __name__ == "__main__":
    sys.exit(main())
