"""``jn``: command-line front end."""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from . import closed_form as cf
from . import curves, dual_graph, multiplier
from .corpus import random_point_bases
from .errors import InternalError, MalformedJumpSet, ValidationError
from .proximity import (
    ProximityMatrix,
    classify,
    point_basis_from_proximity,
    point_basis_from_puiseux,
    puiseux_exponents,
    validate_point_basis,
)
from .rational import format_rational, parse_rational

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_MALFORMED, EXIT_MISMATCH = 0, 2, 3, 4, 5


class ParseError(ValueError):
    pass


def parse_int_list(text: str) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    if not all(re.fullmatch(r"[+-]?\d+", p) for p in parts):
        raise ParseError(f"expected comma-separated integers, got {text!r}")
    return tuple(int(p) for p in parts)


def parse_rational_list(text: str) -> list[Fraction]:
    try:
        return [parse_rational(p) for p in re.split(r"[,\s]+", text.strip()) if p]
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_char_pairs(text: str) -> list[tuple[int, int]]:
    text = text.strip()
    if not text:
        return []
    out = []
    for chunk in text.split(";"):
        m = re.fullmatch(r"\s*(\d+)\s*:\s*(\d+)\s*", chunk)
        if not m:
            raise ParseError(f"expected m:n pairs separated by ';', got {chunk!r}")
        out.append((int(m.group(1)), int(m.group(2))))
    return out


def parse_proximity(text: str) -> tuple[int, list[tuple[int, int]]]:
    """``"8:3>1,6>4,7>4"``: n, then satellite relations i>j."""
    m = re.fullmatch(r"\s*(\d+)\s*(?::(.*))?", text)
    if not m:
        raise ParseError(f"expected N:i>j,... got {text!r}")
    pairs = []
    for chunk in (m.group(2) or "").split(","):
        if not chunk.strip():
            continue
        rel = re.fullmatch(r"\s*(\d+)\s*>\s*(\d+)\s*", chunk)
        if not rel:
            raise ParseError(f"bad proximity relation {chunk!r}")
        pairs.append((int(rel.group(1)), int(rel.group(2))))
    return int(m.group(1)), pairs


def read_jump_file(path: str) -> list[Fraction]:
    values = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0]
            values.extend(parse_rational_list(line))
    return values


def _add_input(parser: argparse.ArgumentParser, required: bool = True) -> None:
    group = parser.add_mutually_exclusive_group(required=required)
    group.add_argument("--point-basis", metavar="A1,...,AN")
    group.add_argument("--proximity", metavar="N:I>J,...", help="satellite relations; predecessors implied")
    group.add_argument("--multiplicities", metavar="M1,...", help="multiplicity sequence of a branch")
    group.add_argument("--char-pairs", metavar="M:N;...", help="characteristic pairs of a branch")
    group.add_argument("--puiseux", metavar="P/Q,...", help="Puiseux exponents of the ideal")
    parser.add_argument("--t", type=int, default=0, help="extra free points after a branch (default 0)")


def _bound(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def resolve_input(args) -> tuple[dict, object]:
    """Return (echo of the input, point basis)."""
    if args.point_basis is not None:
        a = parse_int_list(args.point_basis)
        return {"point_basis": list(a)}, validate_point_basis(a)
    if args.proximity is not None:
        n, pairs = parse_proximity(args.proximity)
        return {"proximity": [list(p) for p in pairs], "n": n}, point_basis_from_proximity(
            ProximityMatrix.from_pairs(n, pairs)
        )
    if args.puiseux is not None:
        beta = parse_rational_list(args.puiseux)
        return {"puiseux": [format_rational(x) for x in beta]}, point_basis_from_puiseux(beta)
    if args.multiplicities is not None:
        seq = curves.validate_multiplicity_sequence(parse_int_list(args.multiplicities))
        ec = curves.EquisingularityClass(seq, args.t)
        return {"multiplicities": list(seq.m), "t": args.t}, curves.ideal_from_class(ec)
    pairs = parse_char_pairs(args.char_pairs)
    seq = curves.sequence_from_pairs(pairs)
    basis = curves.ideal_from_class(curves.EquisingularityClass(seq, args.t))
    if args.t == 0 and curves.pairs_to_generators(pairs) != cf.generators(basis):
        raise InternalError("pair formula disagrees with the reconstructed ideal")
    return {"char_pairs": [list(p) for p in pairs], "t": args.t}, basis


def _decomp_text(dec: cf.JumpDecomposition) -> str:
    text = f"block {dec.block}: s={dec.s} t={dec.t}"
    return text + (f" m={dec.m}" if dec.m is not None else "")


def cmd_jumps(args, out) -> int:
    echo, basis = resolve_input(args)
    bound = _bound(args.up_to)
    d = cf.generators(basis)
    jumps = cf.enumerate_jumps(d, bound)
    if args.format == "json":
        payload = {
            "input": echo,
            "generators": [list(p) for p in d.pairs],
            "caps": list(d.caps),
            "jumps": [
                {"value": format_rational(v), "decompositions": [x.as_dict() for x in decs]}
                for v, decs in jumps
            ],
        }
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for v, decs in jumps:
            out.write(f"{format_rational(v)}\t{'; '.join(_decomp_text(x) for x in decs)}\n")
    return EXIT_OK


def cmd_dual_graph(args, out) -> int:
    _, basis = resolve_input(args)
    graph = dual_graph.build_dual_graph(basis.proximity)
    render = {"dot": dual_graph.to_dot, "ascii": dual_graph.to_ascii, "json": dual_graph.to_json}
    out.write(render[args.format](graph))
    return EXIT_OK


def _summary(basis) -> dict:
    d = cf.generators(basis)
    return {
        "point_basis": list(basis.a),
        "ord": basis.a[0],
        "e": basis.self_intersection,
        "lct": format_rational(cf.lct(d)),
        "zariski": list(cf.zariski_exponents(basis)),
    }


def cmd_invert(args, out) -> int:
    if args.jumps_file:
        values = read_jump_file(args.jumps_file)
    else:
        values = parse_rational_list(args.jumps)
    if args.mode == "curve":
        seq = curves.equisingularity_from_jumps([c for c in values if c < 1])
        payload = {"multiplicities": list(seq.m), "genus": seq.genus,
                   "char_pairs": [list(p) for p in curves.characteristic_pairs(seq)]}
    else:
        payload = _summary(cf.invert_jumping_numbers(values))
    if args.format == "json":
        out.write(json.dumps(payload, sort_keys=True) + "\n")
    else:
        for key, value in payload.items():
            if isinstance(value, list):
                value = ",".join(":".join(map(str, v)) if isinstance(v, list) else str(v) for v in value)
            out.write(f"{key}: {value}\n")
    return EXIT_OK


def check_instance(basis, bound: Fraction, rng: random.Random, r_samples: int, r_max: int = 3) -> list[str]:
    """Cross-check closed form, oracle and thresholds; return the failures."""
    problems = []
    d = cf.generators(basis)
    closed = cf.jump_values(d, bound)
    if closed != multiplier.oracle_jumping_numbers(basis, bound):
        problems.append("closed form and oracle disagree")
    full = closed if bound == 2 else cf.jump_values(d, 2)
    try:
        if cf.invert_jumping_numbers(full) != basis:
            problems.append("inversion does not return the basis")
    except MalformedJumpSet as exc:
        problems.append(f"inversion failed: {exc}")
    vectors = [(0,) * basis.n] + [
        tuple(rng.randint(0, r_max) for _ in range(basis.n)) for _ in range(r_samples)
    ]
    for R in vectors:
        values = {
            multiplier.c_R_direct(basis, R),
            multiplier.c_R_reduced(basis, R),
            multiplier.c_R_definitional(basis, R),
        }
        if len(values) != 1:
            problems.append(f"thresholds disagree for R={R}")
    return problems


def cmd_verify(args, out) -> int:
    bound = _bound(args.up_to)
    if bound <= 0:
        raise ValidationError(f"bound {bound} must be positive")
    if args.random:
        n_max, a_max, count, seed = args.random
        bases = random_point_bases(n_max, a_max, count, seed)
    else:
        seed = 0
        bases = [resolve_input(args)[1]]
    rng = random.Random(seed)
    failed = 0
    for basis in bases:
        problems = check_instance(basis, bound, rng, args.r_samples)
        label = ",".join(map(str, basis.a))
        if problems:
            failed += 1
            out.write(f"FAIL {label}: {'; '.join(problems)}\n")
        else:
            out.write(f"PASS {label}\n")
    out.write(f"{len(bases) - failed} passed, {failed} failed\n")
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_info(args, out) -> int:
    _, basis = resolve_input(args)
    gs = classify(basis.proximity)
    d = cf.generators(basis)
    rows = [
        ("n", basis.n),
        ("point basis", ",".join(map(str, basis.a))),
        ("terminal satellites", ",".join(map(str, gs.terminal_satellites)) or "-"),
        ("stars", ",".join(map(str, gs.gamma_star)) or "-"),
        ("tau", ",".join(map(str, gs.tau))),
        ("puiseux", ",".join(format_rational(x) for x in puiseux_exponents(basis))),
        ("zariski", ",".join(map(str, cf.zariski_exponents(basis)))),
        ("generators", " ".join(f"({a},{b})" for a, b in d.pairs)),
        ("caps", ",".join(map(str, d.caps)) or "-"),
        ("xi'", ",".join(format_rational(cf.xi_prime(d, k)) for k in range(d.blocks))),
        ("lct", format_rational(cf.lct(d))),
        ("ord", basis.a[0]),
        ("e", cf.hilbert_samuel(basis)),
        ("I^2", basis.self_intersection),
    ]
    for key, value in rows:
        out.write(f"{key}: {value}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jn", description="Jumping numbers of simple complete ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jumps", help="list jumping numbers with decompositions")
    _add_input(p)
    p.add_argument("--up-to", default="2", metavar="P/Q")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_jumps)

    p = sub.add_parser("dual-graph", help="export the weighted dual graph")
    _add_input(p)
    p.add_argument("--format", choices=("dot", "ascii", "json"), default="dot")
    p.set_defaults(func=cmd_dual_graph)

    p = sub.add_parser("invert", help="recover a point basis or branch from jumps")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--jumps", metavar="P/Q,...")
    src.add_argument("--jumps-file", metavar="PATH")
    p.add_argument("--mode", choices=("ideal", "curve"), default="ideal")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("verify", help="differential check against the brute-force oracle")
    _add_input(p, required=False)
    p.add_argument("--random", nargs=4, type=int, metavar=("N_MAX", "A_MAX", "COUNT", "SEED"))
    p.add_argument("--up-to", default="2", metavar="P/Q")
    p.add_argument("--r-samples", type=int, default=5)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("info", help="summary of invariants")
    _add_input(p)
    p.set_defaults(func=cmd_info)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.random and not any(
        getattr(args, k) is not None
        for k in ("point_basis", "proximity", "multiplicities", "char_pairs", "puiseux")
    ):
        parser.error("verify needs an input or --random")
    try:
        return args.func(args, out)
    except (ParseError, OSError) as exc:
        print(f"jn: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except MalformedJumpSet as exc:
        print(f"jn: malformed jump set: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ValidationError as exc:
        print(f"jn: invalid input ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
