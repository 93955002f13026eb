"""Command-line front end.

Exit codes: 0 success, 1 domain error (the message on stderr names the
violated precondition), 2 resource-cap abort.  Output is assembled in
full before anything is printed, so no partial JSON is ever emitted.
Identical requests produce byte-identical output (selftest wall-clock
fields excepted).

Weights are comma-separated integers in fundamental-weight coordinates
using the documented vertex numbering.  DOT edge colors come from a fixed
palette indexed by the vertex color modulo the palette size:
red, blue, forestgreen, orange, purple, brown, cyan4, magenta3.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .adhm import (
    datum_from_json_file,
    is_ast_stable,
    is_nilpotent,
    is_stable,
    preprojective_residual,
    stratum_membership,
)
from .crystal import SCHEMA, CrystalGraph, tensor_many
from .decompose import Decomposition, branch, decompose, multiplicity
from .dimensions import (
    StratumParams,
    basic_dims,
    gprime_integrable,
    gprime_weight,
    hw_weight,
    strat_dims,
    v_from_weight,
)
from .dynkin import parse_diagram
from .paths import DEFAULT_VERTEX_CAP, VertexCapError, build_crystal
from .selftest import SEED_DEFAULT, report_to_json, run_criteria
from .sl2 import (
    sl2_crystal,
    sl2_mult_range,
    sl2_multiplicity_nonempty,
    sl2_tensor_component,
)


class _Parser(argparse.ArgumentParser):
    # argument errors are domain errors: exit 1, not argparse's default 2
    def error(self, message):
        raise ValueError(message)


def _weight(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(c) for c in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse weight {text!r}; expected e.g. 1,0,2")


def _triple(text: str) -> tuple[int, ...]:
    parts = _weight(text)
    if len(parts) != 3:
        raise ValueError(f"expected a d,v0,v triple, got {text!r}")
    return parts


def _pair(text: str) -> tuple[int, ...]:
    parts = _weight(text)
    if len(parts) != 2:
        raise ValueError(f"expected a d,v0 pair, got {text!r}")
    return parts


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def _emit_json(payload: dict) -> None:
    _emit(json.dumps(payload, indent=2, sort_keys=True))


def _crystal_output(crystal: CrystalGraph, fmt: str) -> None:
    if fmt == "dot":
        _emit(crystal.to_dot())
    elif fmt == "table":
        lines = [f"# {crystal.diagram.label}: {len(crystal)} vertices"]
        for v, w in enumerate(crystal.weights):
            lines.append(f"{v}\twt={w}")
        for i in range(crystal.diagram.rank):
            for a, b in sorted(crystal.f_maps[i].items()):
                lines.append(f"f_{i}: {a} -> {b}")
        _emit("\n".join(lines))
    else:
        _emit_json(crystal.to_json_dict())


def _decomposition_output(dec: Decomposition, fmt: str) -> None:
    if fmt == "table":
        lines = [f"# decomposition over {dec.diagram.label}"]
        for w, m in sorted(dec.summands.items(), reverse=True):
            lines.append(f"{w}\tx{m}")
        _emit("\n".join(lines))
    else:
        _emit_json(dec.to_json_dict())


def build_parser() -> _Parser:
    parser = _Parser(prog="crystal-forge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, cap=True, fmt=("json", "table")):
        p.add_argument("--diagram", required=True, help="diagram name, e.g. A2, D4, E6")
        p.add_argument("--format", choices=fmt, default="json")
        if cap:
            p.add_argument(
                "--max-vertices",
                type=int,
                default=DEFAULT_VERTEX_CAP,
                help="vertex cap for crystal builds (exit 2 when exceeded)",
            )

    p = sub.add_parser("roots", help="print diagram data: Cartan matrix, X, edges")
    add_common(p, cap=False)

    p = sub.add_parser("crystal", help="build the crystal of a dominant weight")
    add_common(p, fmt=("json", "dot", "table"))
    p.add_argument("--hw", type=_weight, required=True)

    p = sub.add_parser("tensor", help="tensor product of highest-weight crystals")
    add_common(p, fmt=("json", "dot", "table"))
    p.add_argument("--factors", type=_weight, nargs="+", required=True)

    p = sub.add_parser("decompose", help="decompose a tensor product of crystals")
    add_common(p)
    p.add_argument("--factors", type=_weight, nargs="+", required=True)

    p = sub.add_parser("mult", help="multiplicity of a highest weight in a product")
    add_common(p)
    p.set_defaults(format="table")  # bare count by default; --format json for the payload
    p.add_argument("--target", type=_weight, required=True)
    p.add_argument("--factors", type=_weight, nargs="+", required=True)

    p = sub.add_parser("branch", help="restrict a crystal to a subdiagram")
    add_common(p)
    p.add_argument("--hw", type=_weight, required=True)
    p.add_argument("--keep", type=_weight, required=True, help="vertices to keep, e.g. 0,2")

    p = sub.add_parser("dims", help="dimension formulas for quiver strata")
    add_common(p, cap=False)
    p.add_argument("--d", type=_weight, required=True)
    p.add_argument("--v", type=_weight, required=True)
    p.add_argument("--v0", type=_weight)
    p.add_argument("--d-tuple", type=_weight, nargs="+")
    p.add_argument("--v-tuple", type=_weight, nargs="+")
    p.add_argument("--vt-tuple", type=_weight, nargs="+")

    p = sub.add_parser("sl2", help="the explicit one-vertex chain model")
    sl2_sub = p.add_subparsers(dest="sl2_command", required=True)
    q = sl2_sub.add_parser("crystal", help="chain crystal of a (d, v0) label")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--v0", type=int, required=True)
    q.add_argument("--format", choices=("json", "dot", "table"), default="json")
    q = sl2_sub.add_parser("component", help="image component of a vertex pair")
    q.add_argument("--first", type=_triple, required=True, help="d,v0,v")
    q.add_argument("--second", type=_triple, required=True, help="d,v0,v")
    q = sl2_sub.add_parser("range", help="all v0 occurring in a product of chains")
    q.add_argument("--first", type=_pair, required=True, help="d,v0")
    q.add_argument("--second", type=_pair, required=True, help="d,v0")
    q = sl2_sub.add_parser("nonempty", help="two-factor multiplicity label emptiness")
    q.add_argument("--first", type=_pair, required=True, help="d,v0")
    q.add_argument("--second", type=_pair, required=True, help="d,v0")
    q.add_argument("--v", type=int, required=True)

    p = sub.add_parser("adhm", help="exact checks on explicit ADHM data")
    adhm_sub = p.add_subparsers(dest="adhm_command", required=True)
    q = adhm_sub.add_parser("check", help="moment map, stability, nilpotency")
    q.add_argument("file", help="JSON datum; matrices as [num,den] entries")
    q = adhm_sub.add_parser("stratum", help="stratum membership for a flag")
    q.add_argument("file", help="JSON datum with a flag")

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--format", choices=("json", "table"), default="table")
    p.add_argument("--seed", type=int, default=SEED_DEFAULT)
    p.add_argument("--only", nargs="+", help="criterion ids, e.g. c1 c3")
    return parser


def _run(args) -> int:
    if args.command == "roots":
        diagram = parse_diagram(args.diagram)
        payload = {
            "schema": SCHEMA,
            "diagram": diagram.label,
            "rank": diagram.rank,
            "edges": [list(e) for e in diagram.edges],
            "oriented_edges": [list(h) for h in diagram.oriented_edges],
            "cartan": [list(r) for r in diagram.cartan],
            "x_matrix": [list(r) for r in diagram.x_matrix],
            "simple_roots": [list(diagram.simple_root(i)) for i in range(diagram.rank)],
        }
        if args.format == "table":
            lines = [f"# {diagram.label} (rank {diagram.rank})"]
            lines.append("edges: " + ", ".join(map(str, diagram.edges)))
            lines.append("cartan:")
            lines.extend("  " + " ".join(f"{c:3d}" for c in row) for row in diagram.cartan)
            _emit("\n".join(lines))
        else:
            _emit_json(payload)
        return 0

    if args.command == "crystal":
        diagram = parse_diagram(args.diagram)
        crystal = build_crystal(diagram, args.hw, max_vertices=args.max_vertices)
        _crystal_output(crystal, args.format)
        return 0

    if args.command == "tensor":
        diagram = parse_diagram(args.diagram)
        crystal = tensor_many(
            build_crystal(diagram, f, max_vertices=args.max_vertices)
            for f in args.factors
        )
        _crystal_output(crystal, args.format)
        return 0

    if args.command == "decompose":
        diagram = parse_diagram(args.diagram)
        product = tensor_many(
            build_crystal(diagram, f, max_vertices=args.max_vertices)
            for f in args.factors
        )
        _decomposition_output(decompose(product, max_vertices=args.max_vertices), args.format)
        return 0

    if args.command == "mult":
        diagram = parse_diagram(args.diagram)
        count = multiplicity(
            diagram, args.target, args.factors, max_vertices=args.max_vertices
        )
        if args.format == "table":
            _emit(str(count))
        else:
            _emit_json(
                {
                    "schema": SCHEMA,
                    "diagram": diagram.label,
                    "target": list(args.target),
                    "factors": [list(f) for f in args.factors],
                    "multiplicity": count,
                }
            )
        return 0

    if args.command == "branch":
        diagram = parse_diagram(args.diagram)
        crystal = build_crystal(diagram, args.hw, max_vertices=args.max_vertices)
        dec, sub_diagram = branch(crystal, args.keep, max_vertices=args.max_vertices)
        if args.format == "table":
            _decomposition_output(dec, "table")
        else:
            payload = dec.to_json_dict()
            payload["subdiagram"] = sub_diagram.label
            payload["kept_vertices"] = [int(c) for c in sorted(set(args.keep))]
            _emit_json(payload)
        return 0

    if args.command == "dims":
        diagram = parse_diagram(args.diagram)
        payload = {
            "schema": SCHEMA,
            "diagram": diagram.label,
            "basic": _jsonable(basic_dims(diagram, args.d, args.v, args.v0)),
        }
        if args.v0 is not None:
            payload["hw_weight"] = list(hw_weight(diagram, args.d, args.v0))
        gw = gprime_weight(diagram, args.d, args.v)
        payload["gprime_weight"] = [list(gw[0]), list(gw[1])]
        payload["gprime_integrable"] = gprime_integrable(gw)
        vw = v_from_weight(diagram, args.d, args.v)
        payload["v_from_weight_of_v"] = list(vw) if vw is not None else None
        if args.d_tuple and args.v_tuple:
            params = StratumParams(
                diagram,
                args.d,
                args.v,
                tuple(args.d_tuple),
                tuple(args.v_tuple),
                tuple(args.vt_tuple) if args.vt_tuple else None,
            )
            payload["strata"] = _jsonable(strat_dims(params))
        _emit_json(payload)
        return 0

    if args.command == "sl2":
        return _run_sl2(args)

    if args.command == "adhm":
        return _run_adhm(args)

    if args.command == "selftest":
        results = run_criteria(seed=args.seed, only=set(args.only) if args.only else None)
        if args.format == "json":
            _emit_json(report_to_json(results))
        else:
            lines = []
            for r in results:
                status = "PASS" if r.passed else "FAIL"
                lines.append(f"{r.cid:4s} {r.name:40s} {status}  {r.seconds:7.2f}s  {r.details}")
            lines.append("all criteria passed" if all(r.passed for r in results) else "FAILURES present")
            _emit("\n".join(lines))
        return 0 if all(r.passed for r in results) else 1

    raise ValueError(f"unknown command {args.command!r}")


def _jsonable(record: dict) -> dict:
    out = {}
    for k, v in record.items():
        if isinstance(v, tuple):
            out[k] = list(v)
        else:
            out[k] = v
    return out


def _run_sl2(args) -> int:
    if args.sl2_command == "crystal":
        _crystal_output(sl2_crystal(args.d, args.v0), args.format)
        return 0
    if args.sl2_command == "component":
        v0, v = sl2_tensor_component(tuple(args.first), tuple(args.second))
        _emit_json({"schema": SCHEMA, "v0": v0, "v": v})
        return 0
    if args.sl2_command == "range":
        d1, v1 = args.first
        d2, v2 = args.second
        _emit_json({"schema": SCHEMA, "v0_range": sl2_mult_range(d1, v1, d2, v2)})
        return 0
    if args.sl2_command == "nonempty":
        d1, v1 = args.first
        d2, v2 = args.second
        _emit_json(
            {
                "schema": SCHEMA,
                "nonempty": sl2_multiplicity_nonempty(d1, v1, d2, v2, args.v),
            }
        )
        return 0
    raise ValueError(f"unknown sl2 command {args.sl2_command!r}")


def _run_adhm(args) -> int:
    datum, flag = datum_from_json_file(args.file)
    if args.adhm_command == "check":
        residual = preprojective_residual(datum)
        ok = all(m.is_zero() for m in residual)
        payload = {
            "schema": SCHEMA,
            "diagram": datum.diagram.label,
            "preprojective": ok,
            "stable": is_stable(datum),
            "ast_stable": is_ast_stable(datum),
            "nilpotent": is_nilpotent(datum),
        }
        if not ok:
            payload["residual"] = [
                [[c.numerator, c.denominator] for c in row]
                for m in residual
                for row in m.data
            ]
        _emit_json(payload)
        return 0
    if args.adhm_command == "stratum":
        if flag is None:
            raise ValueError("stratum membership needs a \"flag\" entry in the JSON file")
        label = stratum_membership(datum, flag)
        payload = {
            "schema": SCHEMA,
            "diagram": datum.diagram.label,
            "member": label is not None,
        }
        if label is not None:
            v_tuple, vt_tuple = label
            payload["v_tuple"] = [list(w) for w in v_tuple]
            payload["vt_tuple"] = [list(w) for w in vt_tuple]
        _emit_json(payload)
        return 0
    raise ValueError(f"unknown adhm command {args.adhm_command!r}")


_NEGATIVE_VALUE = re.compile(r"^-\d[\d,-]*$")


def _join_negative_values(argv):
    """Glue values like "-1,0" onto their option so argparse keeps them."""
    out = []
    k = 0
    while k < len(argv):
        tok = argv[k]
        if (
            tok.startswith("--")
            and "=" not in tok
            and k + 1 < len(argv)
            and _NEGATIVE_VALUE.match(argv[k + 1])
        ):
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
        else:
            out.append(tok)
            k += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(
            sys.argv[1:] if argv is None else list(argv)
        ))
        return _run(args)
    except VertexCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
