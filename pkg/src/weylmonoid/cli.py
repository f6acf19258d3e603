"""Batch command-line front-end emitting one JSON record per line."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import checks
from .cells import DEFAULT_HEIGHT_CAP, SIGN_PAIRS, CellLabel, cell_factors
from .coxeter import WeylGroup
from .errors import ParseError, ResourceBudgetExceeded, ValidationError, WeylMonoidError
from .gcm import GCM, REFERENCE_MATRICES, load_gcm, reference
from .grammar import parse_element, parse_point
from .length import LEFT, RIGHT, act_gen, delta_root, length_delta, lengths, root_class
from .monoid import (
    ANNIHILATED,
    MonoidElem,
    act,
    format_expression,
    format_nf3,
    format_two_part,
    inverse,
    monoid_ball,
    multiply,
    orbit_ball,
)
from .order import KINDS, hasse_export, leq
from .titscone import BOUNDED, DEFAULT_DESCENT_CAP, DEFAULT_FACE_BUDGET, EXACT, tits_membership

EXIT_PARSE, EXIT_VALIDATION, EXIT_BUDGET = 2, 3, 4

GLOBAL_DEFAULTS = {
    "gcm": None,
    "descent_cap": DEFAULT_DESCENT_CAP,
    "ball": 10**6,
    "face_budget": DEFAULT_FACE_BUDGET,
    "height_cap": DEFAULT_HEIGHT_CAP,
    "out_dot": None,
}


@dataclass
class Session:
    gcm: GCM
    group: WeylGroup
    descent_cap: int
    ball_cap: int
    face_budget: int
    height_cap: int
    out_dot: str | None

    def element(self, text: str) -> tuple[MonoidElem, str]:
        return parse_element(self.group, text, self.face_budget, self.descent_cap)


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _subset_list(s) -> list[int]:
    return [i + 1 for i in sorted(s)]


def _elem_record(m: MonoidElem) -> dict:
    a, b = m.nf1
    c, d = m.nf2
    return {
        "nf3": format_nf3(m),
        "nf1": format_two_part(a, m.theta, b),
        "nf2": format_two_part(c, m.theta, d),
        "expression": format_expression(m),
    }


def _merge_tags(*tags: str) -> str:
    return EXACT if all(t == EXACT for t in tags) else BOUNDED


def cmd_classify(s: Session, args) -> list[dict]:
    gcm = s.gcm
    comps = [
        {"indices": _subset_list(c), "type": tag} for c, tag in gcm.components
    ]
    specials = gcm.special_subsets(args.special_cap)
    return [{
        "command": "classify",
        "name": gcm.name,
        "n": gcm.n,
        "symmetrizer": list(gcm.symmetrizer),
        "components": comps,
        "special_subsets": [_subset_list(t) for t in specials],
        "special_cap": args.special_cap,
    }]


def cmd_nf(s: Session, args) -> list[dict]:
    out = []
    for text in args.expr:
        m, tag = s.element(text)
        rec = {"command": "nf", "input": text, "exactness": tag}
        rec.update(_elem_record(m))
        rec["lengths"] = str(lengths(m))
        out.append(rec)
    return out


def cmd_mul(s: Session, args) -> list[dict]:
    acc, tag = s.element(args.expr[0])
    tags = [tag]
    for text in args.expr[1:]:
        m, t = s.element(text)
        acc, t2 = multiply(acc, m, s.face_budget, s.descent_cap)
        tags += [t, t2]
    rec = {"command": "mul", "inputs": list(args.expr), "exactness": _merge_tags(*tags)}
    rec.update(_elem_record(acc))
    return [rec]


def cmd_inv(s: Session, args) -> list[dict]:
    m, tag = s.element(args.expr)
    rec = {"command": "inv", "input": args.expr, "exactness": tag}
    rec.update(_elem_record(inverse(m)))
    return [rec]


def cmd_leq(s: Session, args) -> list[dict]:
    m, t1 = s.element(args.left)
    n, t2 = s.element(args.right)
    verdict = leq(args.kind, m, n)
    rec = {
        "command": "leq",
        "kind": args.kind,
        "left": format_nf3(m),
        "right": format_nf3(n),
        "exactness": _merge_tags(t1, t2),
    }
    rec.update(verdict.to_record())
    return [rec]


def cmd_len(s: Session, args) -> list[dict]:
    out = []
    for text in args.expr:
        m, tag = s.element(text)
        l = lengths(m)
        out.append({
            "command": "len",
            "input": text,
            "nf3": format_nf3(m),
            "lengths": str(l),
            "l_pp": l.l_pp,
            "l_mm": l.l_mm,
            "l_mp": l.l_mp,
            "exactness": tag,
        })
    return out


def cmd_delta(s: Session, args) -> list[dict]:
    m, tag = s.element(args.expr)
    n = s.group.n
    if not 1 <= args.gen <= n:
        raise ParseError(f"generator {args.gen} out of range 1..{n}", 0)
    i = args.gen - 1
    sides = [args.side] if args.side else [LEFT, RIGHT]
    kinds = [args.kind] if args.kind else list(KINDS)
    out = []
    for side in sides:
        beta = delta_root(side, i, m)
        prod = act_gen(side, i, m)
        for kind in kinds:
            out.append({
                "command": "delta",
                "input": args.expr,
                "side": side,
                "kind": kind,
                "gen": args.gen,
                "delta": length_delta(side, i, m, kind),
                "root": list(beta.coords),
                "root_class": root_class(m, beta),
                "product": format_nf3(prod),
                "exactness": tag,
            })
    return out


def cmd_ball(s: Session, args) -> list[dict]:
    if args.theta is not None:
        elems = orbit_ball(s.group, _theta_arg(s, args.theta), args.radius)
    else:
        elems = monoid_ball(s.group, args.radius)
    out = [{"command": "ball", "radius": args.radius, "size": len(elems)}]
    for m in elems:
        out.append({"command": "ball", "nf3": format_nf3(m), "lengths": str(lengths(m))})
    return out


def _theta_arg(s: Session, text: str) -> frozenset:
    text = text.strip().strip("{}()")
    if not text:
        return frozenset()
    out = []
    for part in text.split(","):
        try:
            i = int(part)
        except ValueError:
            raise ParseError(f"bad index {part!r} in --theta", 0) from None
        if not 1 <= i <= s.group.n:
            raise ParseError(f"index {i} out of range in --theta", 0)
        out.append(i - 1)
    return frozenset(out)


def cmd_hasse(s: Session, args) -> list[dict]:
    if args.theta is not None:
        elems = orbit_ball(s.group, _theta_arg(s, args.theta), args.radius)
    else:
        elems = monoid_ball(s.group, args.radius)
    dot, adjacency = hasse_export(elems, args.kind)
    rec = {"command": "hasse", "radius": args.radius}
    rec.update(adjacency)
    if s.out_dot:
        Path(s.out_dot).write_text(dot, encoding="utf-8")
        rec["dot_path"] = s.out_dot
    else:
        rec["dot"] = dot
    return [rec]


def cmd_act(s: Session, args) -> list[dict]:
    m, tag = s.element(args.expr)
    lam = parse_point(args.point, s.group.n)
    membership = tits_membership(s.group, lam, s.descent_cap)
    image = act(m, lam, s.descent_cap)
    return [{
        "command": "act",
        "input": args.expr,
        "nf3": format_nf3(m),
        "point": [str(v) for v in lam.values],
        "membership": membership.status,
        "result": image if image == ANNIHILATED else [str(v) for v in image.values],
        "exactness": tag,
    }]


_SIGN_ALIASES = {"pp": "++", "mm": "--", "mp": "-+"}


def cmd_cell(s: Session, args) -> list[dict]:
    m, tag = s.element(args.expr)
    signs = tuple(_SIGN_ALIASES.get(args.signs, args.signs))
    if signs not in SIGN_PAIRS:
        raise ParseError(f"cell signs must be one of pp, mm, mp (got {args.signs!r})", 0)
    rec = {"command": "cell", "label": str(CellLabel(signs, m)), "exactness": tag}
    rec.update(cell_factors(m, signs, s.height_cap).to_record())
    return [rec]


def cmd_selftest(s: Session, args) -> list[dict]:
    results = checks.selftest(s.group, args.radius)
    out = [r.to_record() for r in results]
    out.append({
        "command": "selftest",
        "radius": args.radius,
        "passed": all(r.passed for r in results),
    })
    return out


def _global_parser() -> argparse.ArgumentParser:
    # Defaults are suppressed so the flags work on either side of the subcommand.
    p = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument("--gcm", help="GCM JSON file, or a reference name such as affA1")
    p.add_argument("--descent-cap", type=_positive_int, help="Tits-cone descent step cap")
    p.add_argument("--ball", type=_positive_int, help="cap on enumerated Weyl ball size")
    p.add_argument("--face-budget", type=_positive_int, help="face intersection sampling budget")
    p.add_argument("--height-cap", type=_positive_int, help="root height cap for cell factors")
    p.add_argument("--out-dot", help="write DOT output of 'hasse' to this path")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_parser()
    parser = argparse.ArgumentParser(prog="weylmonoid", parents=[common], description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    sp = add("classify", cmd_classify, "component types and special subsets")
    sp.add_argument("--special-cap", type=int, default=None, help="largest special subset size listed")
    add("nf", cmd_nf, "all three normal forms").add_argument("expr", nargs="+")
    add("mul", cmd_mul, "product of expressions").add_argument("expr", nargs="+")
    add("inv", cmd_inv, "inverse map").add_argument("expr")
    sp = add("leq", cmd_leq, "compare two elements")
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("left")
    sp.add_argument("right")
    add("len", cmd_len, "the three lengths").add_argument("expr", nargs="+")
    sp = add("delta", cmd_delta, "length change under a simple reflection")
    sp.add_argument("--side", choices=(LEFT, RIGHT))
    sp.add_argument("--kind", choices=KINDS)
    sp.add_argument("--gen", type=int, required=True, help="1-based generator")
    sp.add_argument("expr")
    for name, func, text in (("ball", cmd_ball, "monoid ball by l_-+ bound"),
                             ("hasse", cmd_hasse, "covering relation on a ball")):
        sp = add(name, func, text)
        sp.add_argument("radius", type=int)
        sp.add_argument("--theta", default=None, help="restrict to one orbit, e.g. 1,2")
        if name == "hasse":
            sp.add_argument("--kind", choices=KINDS, required=True)
    sp = add("act", cmd_act, "action on a Tits-cone point")
    sp.add_argument("--point", required=True, help="coordinates such as 1,0,-1/2")
    sp.add_argument("expr")
    sp = add("cell", cmd_cell, "cell label and factor descriptor")
    sp.add_argument("--signs", default="pp", help="pp, mm or mp (also ++, --, -+ via --signs=...)")
    sp.add_argument("expr")
    sp = add("selftest", cmd_selftest, "run the invariant suites")
    sp.add_argument("--radius", type=int, default=3)
    return parser


def _resolve_gcm(source: str | None) -> GCM:
    if source is None:
        raise ValidationError("--gcm is required")
    path = Path(source)
    if path.exists():
        return load_gcm(path)
    if source in REFERENCE_MATRICES:
        return reference(source)
    raise ValidationError(f"GCM file {source!r} not found")


def _emit(records, stream) -> None:
    for rec in records:
        stream.write(json.dumps(rec, sort_keys=True, ensure_ascii=False) + "\n")


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    opts = {k: getattr(args, k, v) for k, v in GLOBAL_DEFAULTS.items()}
    try:
        gcm = _resolve_gcm(opts["gcm"])
        group = WeylGroup(gcm, ball_cap=opts["ball"])
        session = Session(gcm, group, opts["descent_cap"], opts["ball"],
                          opts["face_budget"], opts["height_cap"], opts["out_dot"])
        records = args.func(session, args)
    except ParseError as exc:
        _emit([{"error": "ParseError", "message": str(exc), "position": exc.position}], stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        _emit([{"error": type(exc).__name__, "message": str(exc)}], stderr)
        return EXIT_VALIDATION
    except ResourceBudgetExceeded as exc:
        _emit([{"error": "ResourceBudgetExceeded", "message": str(exc)}], stderr)
        return EXIT_BUDGET
    except WeylMonoidError as exc:
        _emit([{"error": type(exc).__name__, "message": str(exc)}], stderr)
        return 1
    _emit(records, stdout)
    if args.command == "selftest" and not records[-1]["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
