"""Command line front end.

Exit codes: 0 all checks pass, 1 a check failed (or an unknown catalog
name), 2 malformed input.  Output is deterministic.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable

from . import instance_file, instances, para_cat
from .orbit_cat import (
    MissingDuality,
    OrbitInstance,
    TubularConditionFailed,
    describe_class,
    describe_coset,
    dual_morphism,
    theorem_reports,
    validate,
)
from .report import Report, format_text


class InputError(Exception):
    """Malformed input; maps to exit code 2."""


class CheckFailed(Exception):
    """A check failed; maps to exit code 1."""


def _emit(args, text: str, data: Any) -> None:
    if args.format == "structured":
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(text)


def _emit_reports(args, reports: list[Report], extra: dict | None = None) -> int:
    data = {"reports": [r.as_dict() for r in reports]}
    if extra:
        data.update(extra)
    text = format_text(reports)
    ok = all(r.ok for r in reports)
    text += f"\n{sum(r.ok for r in reports)}/{len(reports)} checks pass"
    _emit(args, text, data)
    return 0 if ok else 1


# -- para ---------------------------------------------------------------------


def _literal(text: str) -> para_cat.ParaMorphism:
    try:
        return para_cat.parse_literal(text)
    except para_cat.LiteralError as exc:
        raise InputError(str(exc)) from exc
    except para_cat.InvalidMorphism as exc:
        raise CheckFailed(str(exc)) from exc


def para_compose(args) -> int:
    maps = [_literal(t) for t in args.morphisms]
    out = maps[-1]
    try:
        for g in reversed(maps[:-1]):
            out = para_cat.compose(g, out)
    except para_cat.RankMismatch as exc:
        raise InputError(str(exc)) from exc
    _emit(args, str(out), para_cat.as_dict(out))
    return 0


def para_dual(args) -> int:
    f = _literal(args.morphism)
    d = para_cat.cyclic_dual(f)
    _emit(args, str(d), para_cat.as_dict(d))
    return 0


def para_check(args) -> int:
    f = _literal(args.morphism)
    d = para_cat.cyclic_dual(f)
    checks = {
        "involution": para_cat.cyclic_dual(d) == f,
        "periodicity": all(f(j + f.n + 1) == f(j) + f.m + 1 for j in range(-50, 51)),
        "K-restriction": (not para_cat.in_K(f)) or para_cat.in_K(d),
        "lambda-idempotent": para_cat.lambda_canonical(para_cat.lambda_canonical(f))
        == para_cat.lambda_canonical(f),
    }
    info = {
        "morphism": str(f),
        "class": para_cat.classify(f),
        "in_K": para_cat.in_K(f),
        "in_Delta": para_cat.in_Delta(f),
        "dual": str(d),
        "dual_class": para_cat.classify(d),
        "lambda_canonical": str(para_cat.lambda_canonical(f)),
    }
    lines = [f"{k}: {v}" for k, v in info.items()]
    lines += [f"[{'PASS' if ok else 'FAIL'}] {k}" for k, ok in checks.items()]
    _emit(args, "\n".join(lines), {**info, "checks": checks})
    return 0 if all(checks.values()) else 1


_FILTERS: dict[str, Callable[[para_cat.ParaMorphism], bool]] = {
    "all": lambda f: True,
    "k": para_cat.in_K,
    "delta": para_cat.in_Delta,
}


def _enumerated(args) -> list[para_cat.ParaMorphism]:
    if min(args.n, args.m, args.window) < 0:
        raise InputError("--n, --m and --window must be natural numbers")
    fs = para_cat.enumerate_morphisms(args.n, args.m, args.window)
    if args.within == "lambda":
        return sorted({para_cat.lambda_canonical(f) for f in fs})
    return [f for f in fs if _FILTERS[args.within](f)]


def para_enumerate(args) -> int:
    fs = _enumerated(args)
    _emit(args, "\n".join(str(f) for f in fs), [para_cat.as_dict(f) for f in fs])
    return 0


def para_count(args) -> int:
    n = len(_enumerated(args))
    _emit(args, str(n), {"n": args.n, "m": args.m, "window": args.window, "in": args.within,
                         "count": n})
    return 0


# -- orbit --------------------------------------------------------------------


def _load(path: str) -> OrbitInstance:
    try:
        return instance_file.load(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except instance_file.InstanceFormatError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _valid(args, inst: OrbitInstance) -> None:
    reports = validate(inst)
    if not all(r.ok for r in reports):
        _emit_reports(args, reports)
        raise CheckFailed("instance fails validation")


def _object(inst: OrbitInstance, label: str) -> int:
    if label in inst.labels:
        return inst.labels.index(label)
    raise InputError(f"unknown object {label!r}; objects are {list(inst.labels)}")


def orbit_validate(args) -> int:
    return _emit_reports(args, validate(_load(args.file)))


def orbit_hom(args) -> int:
    inst = _load(args.file)
    _valid(args, inst)
    x, y = _object(inst, args.source), _object(inst, args.target)
    arrows = inst.homs[x, y]
    G = inst.cm.G
    lines = [f"hom({args.source}, {args.target}): {len(arrows)} cosets"]
    lines += ["  " + describe_coset(inst, f) for f in arrows]
    data = {"from": args.source, "to": args.target, "count": len(arrows),
            "cosets": [{"rep": G.labels[f.rep],
                        "members": [G.labels[g] for g in sorted(G.table[f.rep][h]
                                                                for h in inst.presheaf[x].members)]}
                       for f in arrows]}
    _emit(args, "\n".join(lines), data)
    return 0


def orbit_ho(args) -> int:
    inst = _load(args.file)
    _valid(args, inst)
    x, y = _object(inst, args.source), _object(inst, args.target)
    classes = inst.ho_homs[x, y]
    G = inst.cm.G
    lines = [f"ho({args.source}, {args.target}): {len(classes)} classes "
             f"of {len(inst.homs[x, y])} cosets"]
    lines += [f"  [{i}] {describe_class(inst, m)}" for i, m in enumerate(classes)]
    data = {"from": args.source, "to": args.target, "count": len(classes),
            "classes": [[G.labels[f.rep] for f in m.members] for m in classes]}
    _emit(args, "\n".join(lines), data)
    return 0


def orbit_dual(args) -> int:
    inst = _load(args.file)
    _valid(args, inst)
    x, y = _object(inst, args.source), _object(inst, args.target)
    classes = inst.ho_homs[x, y]
    if not 0 <= args.klass < len(classes):
        raise InputError(f"--class must be in 0..{len(classes) - 1}")
    m = classes[args.klass]
    d = dual_morphism(inst, m)
    G = inst.cm.G
    text = (f"{describe_class(inst, m)}°\n  = {describe_class(inst, d)} : "
            f"{inst.labels[d.source]} -> {inst.labels[d.target]}")
    data = {"class": [G.labels[f.rep] for f in m.members],
            "dual": {"from": inst.labels[d.source], "to": inst.labels[d.target],
                     "class": [G.labels[f.rep] for f in d.members]}}
    _emit(args, text, data)
    return 0


def orbit_theorem(args) -> int:
    inst = _load(args.file)
    reports = theorem_reports(inst)
    extra = {}
    if inst.has_duality() and all(r.ok for r in validate(inst)):
        extra["ho_classes"] = {f"{inst.labels[x]}->{inst.labels[y]}": len(ms)
                               for (x, y), ms in inst.ho_homs.items() if ms}
    code = _emit_reports(args, reports, extra)
    if extra and args.format != "structured":
        print("ho classes: " + ", ".join(f"{k}: {v}" for k, v in extra["ho_classes"].items()))
    return code


# -- instances ----------------------------------------------------------------


def _entry(name: str):
    try:
        return instances.entry(name)
    except instances.UnknownInstance as exc:
        raise CheckFailed(f"unknown instance {name!r}; known: {', '.join(instances.names())}") from exc


def instances_list(args) -> int:
    rows = [(e.name, e.provenance) for e in instances.CATALOG.values()]
    width = max(len(n) for n, _ in rows)
    _emit(args, "\n".join(f"{n:<{width}}  {p}" for n, p in rows),
          [{"name": n, "provenance": p} for n, p in rows])
    return 0


def instances_emit(args) -> int:
    text = instance_file.dumps(_entry(args.name).builder())
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def instances_check(args) -> int:
    _entry(args.name)
    return _emit_reports(args, instances.run_expected_checks(args.name))


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "structured"), default="text")

    parser = argparse.ArgumentParser(prog="cyclicdual", description=__doc__.splitlines()[0])
    top = parser.add_subparsers(dest="group", required=True)

    para = top.add_parser("para", help="paracyclic morphisms").add_subparsers(dest="verb", required=True)
    p = para.add_parser("compose", parents=[fmt], help="g o f (rightmost applied first)")
    p.add_argument("morphisms", nargs="+", metavar="LITERAL")
    p.set_defaults(func=para_compose)
    p = para.add_parser("dual", parents=[fmt], help="cyclic dual")
    p.add_argument("morphism", metavar="LITERAL")
    p.set_defaults(func=para_dual)
    p = para.add_parser("check", parents=[fmt], help="membership and invariants")
    p.add_argument("morphism", metavar="LITERAL")
    p.set_defaults(func=para_check)
    for verb, func in (("enumerate", para_enumerate), ("count", para_count)):
        p = para.add_parser(verb, parents=[fmt])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--window", type=int, default=2)
        p.add_argument("--in", dest="within", choices=("all", "k", "delta", "lambda"),
                       default="all")
        p.set_defaults(func=func)

    orbit = top.add_parser("orbit", help="orbit categories from instance files").add_subparsers(
        dest="verb", required=True)
    p = orbit.add_parser("validate", parents=[fmt])
    p.add_argument("file")
    p.set_defaults(func=orbit_validate)
    for verb, func in (("hom", orbit_hom), ("ho", orbit_ho), ("dual", orbit_dual)):
        p = orbit.add_parser(verb, parents=[fmt])
        p.add_argument("--from", dest="source", required=True)
        p.add_argument("--to", dest="target", required=True)
        if verb == "dual":
            p.add_argument("--class", dest="klass", type=int, required=True)
        p.add_argument("file")
        p.set_defaults(func=func)
    p = orbit.add_parser("theorem", parents=[fmt])
    p.add_argument("file")
    p.set_defaults(func=orbit_theorem)

    inst = top.add_parser("instances", help="built-in instance catalog").add_subparsers(
        dest="verb", required=True)
    p = inst.add_parser("list", parents=[fmt])
    p.set_defaults(func=instances_list)
    p = inst.add_parser("emit")
    p.add_argument("name")
    p.add_argument("-o", "--output")
    p.set_defaults(func=instances_emit)
    p = inst.add_parser("check", parents=[fmt])
    p.add_argument("name")
    p.set_defaults(func=instances_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CheckFailed as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MissingDuality, TubularConditionFailed) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
