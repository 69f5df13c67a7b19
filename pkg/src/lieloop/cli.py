"""Command-line interface with stable JSON/DOT output.

Every verb prints deterministic, exactly-represented data: integers stay
integers, rationals become "p/q" strings, maps are sorted.  Domain errors
exit with status 1 and a machine-readable JSON object on stderr; usage
errors exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import affine, charring, garland, gradedcat, loopcat, rootsys
from .errors import InvalidInput, LieLoopError


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        return default


def _rational(value) -> Fraction:
    try:
        if isinstance(value, str):
            if "/" in value:
                num, den = value.split("/", 1)
                return Fraction(int(num), int(den))
            return Fraction(int(value))
        if isinstance(value, int):
            return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInput(f"bad rational {value!r}") from exc
    raise InvalidInput(f"bad rational {value!r}")


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON argument: {exc}") from exc


def _weight_arg(text: str, rank: int) -> tuple:
    data = _json_arg(text)
    if not isinstance(data, list) or len(data) != rank or not all(
        isinstance(x, int) for x in data
    ):
        raise InvalidInput(f"expected a JSON array of {rank} integers, got {text!r}")
    return tuple(data)


def _frac_out(x: Fraction):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _char_json(ch: charring.FormalCharacter) -> dict:
    return {
        json.dumps(list(w), separators=(",", ":")): m
        for w, m in sorted(ch.terms.items())
    }


def _decomp_json(dd: charring.DominantDecomposition) -> dict:
    return {
        json.dumps(list(w), separators=(",", ":")): m
        for w, m in sorted(dd.mults.items())
    }


def _loop_irrep_arg(text: str, rank: int) -> loopcat.LoopIrrep:
    data = _json_arg(text)
    if not isinstance(data, list):
        raise InvalidInput("loop irreducible must be a JSON array of entries")
    support = []
    for entry in data:
        if not isinstance(entry, dict) or set(entry) != {"point", "weight"}:
            raise InvalidInput('each entry needs exactly "point" and "weight"')
        weight = entry["weight"]
        if not isinstance(weight, list) or len(weight) != rank:
            raise InvalidInput(f"weight must be an array of {rank} integers")
        support.append((_rational(entry["point"]), tuple(weight)))
    return loopcat.LoopIrrep(support)


def _affine_weight_arg(text: str, rank: int) -> affine.AffineWeight:
    data = _json_arg(text)
    if not isinstance(data, dict) or set(data) - {"finite", "level", "delta"}:
        raise InvalidInput('affine weight needs keys "finite", "level", "delta"')
    finite = data.get("finite", [0] * rank)
    if not isinstance(finite, list) or len(finite) != rank:
        raise InvalidInput(f"finite part must be an array of length {rank}")
    level = data.get("level", 0)
    if not isinstance(level, int):
        raise InvalidInput("level must be an integer")
    return affine.AffineWeight(
        tuple(_rational(x) for x in finite), level, _rational(data.get("delta", 0))
    )


def _affine_weight_json(w: affine.AffineWeight) -> dict:
    return {
        "finite": [_frac_out(x) for x in w.finite],
        "level": w.level,
        "delta": _frac_out(w.delta),
    }


def _gamma_arg(data, rank: int):
    if not isinstance(data, list):
        raise InvalidInput("gamma set must be a JSON array")
    out = []
    for entry in data:
        if not isinstance(entry, dict) or set(entry) != {"weight", "grade"}:
            raise InvalidInput('each gamma entry needs "weight" and "grade"')
        weight = entry["weight"]
        if not isinstance(weight, list) or len(weight) != rank:
            raise InvalidInput(f"weight must be an array of {rank} integers")
        if not isinstance(entry["grade"], int):
            raise InvalidInput("grade must be an integer")
        out.append(gradedcat.GradedSimple(tuple(weight), entry["grade"]))
    return out


def _gamma_json(g: gradedcat.GammaSet) -> list:
    return [
        {"weight": list(v.weight), "grade": v.grade} for v in g.sorted_elements()
    ]


def _quiver_json(q: gradedcat.Quiver) -> dict:
    return {
        "vertices": [
            {"weight": list(v.weight), "grade": v.grade} for v in q.sorted_vertices()
        ],
        "arrows": [
            {
                "source": {"weight": list(s.weight), "grade": s.grade},
                "target": {"weight": list(t.weight), "grade": t.grade},
                "multiplicity": m,
            }
            for s, t, m in q.arrows
        ],
    }


def _emit(payload, fmt: str):
    if fmt == "text":
        print(payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lieloop",
        description="Exact computations with root systems, characters, "
        "loop-algebra modules, graded quivers, affine characters and "
        "Garland series.",
    )
    parser.add_argument("--format", choices=("json", "text", "dot"), default="json",
                        help="output format (dot is only valid for quiver)")
    parser.add_argument("--max-dim", type=int,
                        default=_env_int("LIELOOP_MAX_DIM", charring.DEFAULT_DIM_CAP),
                        help="dimension guard for character computations")
    parser.add_argument("--max-orbit", type=int,
                        default=_env_int("LIELOOP_MAX_ORBIT", rootsys.DEFAULT_ORBIT_CAP),
                        help="Weyl orbit size guard")
    parser.add_argument("--depth", type=int,
                        default=_env_int("LIELOOP_DEPTH", 6),
                        help="truncation depth for affine series")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, *args_spec, needs_type=True):
        p = sub.add_parser(name)
        if needs_type:
            p.add_argument("type", help="Cartan type, e.g. A2, D6, G2")
        for arg, help_text in args_spec:
            p.add_argument(arg, help=help_text)
        return p

    add("roots")
    add("char", ("weight", "dominant weight as JSON array"))
    add("dim", ("weight", "dominant weight as JSON array"))
    add("tensor", ("left", "first weight"), ("right", "second weight"))
    add("ext1-loop", ("first", "loop irreducible JSON"), ("second", "loop irreducible JSON"))
    add("spectral", ("module", "loop irreducible JSON"))
    add("blocks", ("first", "loop irreducible JSON"), ("second", "loop irreducible JSON"))
    add("split-order", ("parts", "JSON array of {point, weight}"))
    p = add("uplus")
    p.add_argument("degree", type=int)
    p = add("quiver")
    p.add_argument("--gamma", required=True,
                   help="gamma set: JSON array or @file with [{weight, grade}]")
    add("phi-psi", ("psi", "weight psi as JSON array"))
    p = add("lower-set", ("psi", "weight psi as JSON array"),
            ("top", 'top element as JSON {"weight": [...], "grade": r}'))
    add("affine-char", ("weight", 'affine weight JSON {"finite", "level", "delta"}'))
    p = sub.add_parser("garland")
    p.add_argument("--order", type=int, required=True)
    p = sub.add_parser("zform")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    return parser


def _run(args) -> None:
    fmt = args.format
    if fmt == "dot" and args.verb != "quiver":
        raise InvalidInput("dot output is only valid for the quiver verb")

    if args.verb == "garland":
        poly = garland.garland_series(args.order)
        if fmt == "text":
            _emit(poly.format(), fmt)
        else:
            payload = [
                {"monomial": list(key), "coefficient": _frac_out(v)}
                for key, v in sorted(poly.terms.items())
            ]
            _emit(payload, fmt)
        return
    if args.verb == "zform":
        _emit(garland.zform_check(args.r, args.s, args.N), fmt)
        return

    rs = rootsys.build(args.type)
    rank = rs.rank

    if args.verb == "roots":
        payload = {
            "type": str(rs.cartan_type),
            "cartan_matrix": [list(row) for row in rs.cartan],
            "positive_roots": [list(r) for r in rs.positive_roots],
            "highest_root": list(rs.highest_root),
            "rho": list(rs.rho),
            "form_matrix": [[_frac_out(x) for x in row] for row in rs.form],
            "fundamental_group_order": loopcat._fundamental_group(rs).order,
        }
        _emit(payload, fmt)
    elif args.verb == "char":
        ch = charring.char_irreducible(rs, _weight_arg(args.weight, rank),
                                       max_dim=args.max_dim,
                                       max_orbit=args.max_orbit)
        _emit(_char_json(ch), fmt)
    elif args.verb == "dim":
        _emit(charring.dim_irreducible(rs, _weight_arg(args.weight, rank)), fmt)
    elif args.verb == "tensor":
        dd = charring.tensor_decompose(
            rs, _weight_arg(args.left, rank), _weight_arg(args.right, rank),
            max_dim=args.max_dim,
        )
        _emit(_decomp_json(dd), fmt)
    elif args.verb == "ext1-loop":
        _emit(loopcat.ext1_dim(rs, _loop_irrep_arg(args.first, rank),
                               _loop_irrep_arg(args.second, rank)), fmt)
    elif args.verb == "spectral":
        spec = loopcat.spectral_character(rs, _loop_irrep_arg(args.module, rank))
        payload = {
            str(_frac_out(pt)): list(cls) for pt, cls in sorted(spec.items())
        }
        _emit(payload, fmt)
    elif args.verb == "blocks":
        _emit(loopcat.same_block(rs, _loop_irrep_arg(args.first, rank),
                                 _loop_irrep_arg(args.second, rank)), fmt)
    elif args.verb == "split-order":
        data = _json_arg(args.parts)
        if not isinstance(data, list):
            raise InvalidInput("parts must be a JSON array")
        parts = []
        for entry in data:
            if not isinstance(entry, dict) or set(entry) != {"point", "weight"}:
                raise InvalidInput('each part needs exactly "point" and "weight"')
            parts.append((tuple(entry["weight"]), _rational(entry["point"])))
        _emit(loopcat.loop_splitting_order(rs, parts), fmt)
    elif args.verb == "uplus":
        _emit(_decomp_json(gradedcat.u_plus_graded_char(rs, args.degree)), fmt)
    elif args.verb == "quiver":
        raw = args.gamma
        if raw.startswith("@"):
            with open(raw[1:], "r", encoding="utf-8") as handle:
                raw = handle.read()
        gamma = gradedcat.GammaSet(
            frozenset(_gamma_arg(_json_arg(raw), rank)), gradedcat.ORDER_FULL
        )
        quiver = gradedcat.build_quiver(rs, gamma)
        if fmt == "dot":
            print(quiver.to_dot())
        else:
            _emit(_quiver_json(quiver), fmt)
    elif args.verb == "phi-psi":
        psi = _weight_arg(args.psi, rank)
        _emit([list(r) for r in sorted(gradedcat.phi_psi(rs, psi))], fmt)
    elif args.verb == "lower-set":
        psi = _weight_arg(args.psi, rank)
        top_data = _json_arg(args.top)
        tops = _gamma_arg([top_data], rank)
        _emit(_gamma_json(gradedcat.lower_set_psi(rs, psi, tops[0])), fmt)
    elif args.verb == "affine-char":
        lam = _affine_weight_arg(args.weight, rank)
        series = affine.truncated_character(rs, lam, args.depth)
        payload = [
            {"weight": _affine_weight_json(w), "coefficient": c}
            for w, c in sorted(
                series.terms.items(),
                key=lambda kv: (-kv[0].delta, kv[0].finite),
            )
        ]
        _emit(payload, fmt)
    else:  # pragma: no cover - argparse enforces the verb set
        raise InvalidInput(f"unknown verb {args.verb}")


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _run(args)
    except LieLoopError as exc:
        json.dump({"error": exc.code, "message": str(exc)}, sys.stderr)
        sys.stderr.write("\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
