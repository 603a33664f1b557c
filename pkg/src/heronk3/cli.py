"""Command-line front end.

Subcommands: generate, param, verify, count, picard, fibers, height, mw,
divide2, selfcheck.  All big integers are emitted as decimal strings and
every run is byte-reproducible for fixed arguments.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1))


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SystemExit(2) from exc


def _cmd_generate(args) -> int:
    from .surface import generate_triple, heronize, specialize_triangle

    s0 = _parse_rational(args.s)
    if s0 <= 1:
        print("error: --s must be a rational > 1", file=sys.stderr)
        return 2
    triangles = [specialize_triangle(n, s0) for n in range(1, args.count + 1)]
    lam = None
    if args.integer:
        triangles, lam = heronize(triangles)
    if args.format == "csv":
        lines = [t.csv_line() for t in triangles]
        out = "\n".join(lines)
        print(out)
    elif args.format == "table":
        print(f"# s0 = {s0}, perimeter = {triangles[0].perimeter}, area = {triangles[0].area}"
              + (f", scale = {lam}" if lam else ""))
        for n, t in enumerate(triangles, 1):
            print(f"{n:3d}  {t.a}  {t.b}  {t.c}")
    else:
        _emit({
            "s": str(s0),
            "scale": str(lam) if lam else None,
            "perimeter": str(triangles[0].perimeter),
            "area": str(triangles[0].area),
            "triangles": [t.json_record() for t in triangles],
        })
    return 0


def _cmd_param(args) -> int:
    from .surface import from_weierstrass, generate_triple, generic_parameter, _odd_multiple_of_r

    fam = generate_triple(args.n)
    s = generic_parameter()
    x, y, z = from_weierstrass(s, _odd_multiple_of_r(args.n))
    _emit({
        "n": args.n,
        "a": fam.a.format(),
        "b": fam.b.format(),
        "c": fam.c.format(),
        "x": x.format(),
        "y": y.format(),
        "z": z.format(),
        "perimeter": "2*s^2 + 2*s",
        "area": "s^3 - s",
    })
    return 0


def _cmd_verify(args) -> int:
    from .surface import verify_heron

    rows = []
    with open(args.file, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = [Fraction(p) for p in line.split(",")]
            if len(parts) != 3:
                print(f"error: malformed row {line!r}", file=sys.stderr)
                return 2
            rows.append(parts)
    if not rows:
        print("error: no rows", file=sys.stderr)
        return 2
    checks = [verify_heron(*row) for row in rows]
    perims = {c.perimeter for c in checks}
    areas = {c.area for c in checks}
    all_ok = all(c.is_triangle and c.area is not None for c in checks)
    shared = len(perims) == 1 and len(areas) == 1 and None not in areas
    _emit({
        "rows": len(rows),
        "all_triangles_with_rational_area": all_ok,
        "all_heron": all(c.is_heron for c in checks),
        "shared_perimeter": str(perims.pop()) if len(perims) == 1 else None,
        "shared_area": str(areas.pop()) if len(areas) == 1 and all_ok else None,
    })
    return 0 if (all_ok and shared) else 1


def _cmd_count(args) -> int:
    from .counting import count_surface

    if args.p in (2, 3):
        print("error: characteristic 2/3 unsupported", file=sys.stderr)
        return 2
    report = count_surface(args.p, args.n)
    _emit(report.as_json_dict())
    if args.breakdown:
        print("s,kind,count")
        for f in report.fibers:
            s_label = "inf" if f.s_index is None else str(f.s_index)
            print(f"{s_label},{f.kind},{f.count}")
    return 0


def _cmd_picard(args) -> int:
    from .picard import full_picard_report

    report = full_picard_report(args.p)
    _emit(report.as_json_dict())
    return 0


def _cmd_fibers(args) -> int:
    from .fibration import delta_degree_sum, fiber_classification, j_map_degree

    fibers = fiber_classification()
    _emit({
        "fibers": [
            {
                "place": "infinity" if f.place.is_infinite else repr(f.place)[6:-1],
                "type": f.label,
                "v_delta": f.v_delta,
                "place_degree": f.place.degree,
                "components": f.components,
                "simple_components": f.simple_components,
            }
            for f in fibers
        ],
        "delta_degree_sum": delta_degree_sum(),
        "j_map_degree": j_map_degree(),
    })
    return 0


def _parse_section(label: str):
    """Accept P, Q, R, O, or combinations like Q+R, 2R, Q-2R, -Q+R."""
    import re

    from .heights import mw_sections, section_combination

    label = label.replace(" ", "")
    secs = mw_sections()
    if label in secs:
        return secs[label]
    m = re.fullmatch(r"(?P<q>[+-]?\d*Q)?(?P<r>[+-]?\d*R)?", label)
    if not m or (m.group("q") is None and m.group("r") is None):
        print(f"error: cannot parse section {label!r}", file=sys.stderr)
        raise SystemExit(2)

    def coeff(txt):
        if txt is None:
            return 0
        txt = txt[:-1]
        if txt in ("", "+"):
            return 1
        if txt == "-":
            return -1
        return int(txt)

    return section_combination(coeff(m.group("q")), coeff(m.group("r")))


def _cmd_height(args) -> int:
    from .heights import height_gram

    sections = [_parse_section(label) for label in args.sections.split(",")]
    gram = height_gram(sections)
    _emit(gram.as_json_dict())
    return 0


def _cmd_mw(args) -> int:
    from .heights import mw_report, torsion_certificate

    report = mw_report()
    out = report.as_json_dict()
    out["torsion_certificate"] = torsion_certificate().as_json_dict()
    _emit(out)
    return 0


def _cmd_divide2(args) -> int:
    from .divisibility import two_divisibility

    _emit(two_divisibility().as_json_dict())
    return 0


def _cmd_selfcheck(args) -> int:
    from .selfcheck import run_selfcheck

    results = run_selfcheck(fast=args.fast)
    failed = 0
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
        if not ok:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} criteria passed")
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heronk3",
        description="Heron triangles with equal perimeter and area via an elliptic K3 surface",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit N triangles with equal perimeter and area")
    g.add_argument("--s", required=True, help="rational parameter s0 > 1, e.g. 2 or 7/3")
    g.add_argument("--count", type=int, default=4, help="number of families (default 4)")
    g.add_argument("--integer", action="store_true", help="scale to integer (Heron) triangles")
    g.add_argument("--format", choices=("json", "csv", "table"), default="json")
    g.set_defaults(func=_cmd_generate)

    p = sub.add_parser("param", help="emit the symbolic triple family (a_n, b_n, c_n)")
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=_cmd_param)

    v = sub.add_parser("verify", help="verify a CSV of triangles (a,b,c per line)")
    v.add_argument("--file", required=True)
    v.set_defaults(func=_cmd_verify)

    c = sub.add_parser("count", help="count points of the surface over F_{p^n}")
    c.add_argument("--p", type=int, default=11)
    c.add_argument("--n", type=int, default=1)
    c.add_argument("--breakdown", action="store_true", help="per-fiber CSV after the JSON")
    c.set_defaults(func=_cmd_count)

    pc = sub.add_parser("picard", help="full trace/char-poly/Picard-bound report")
    pc.add_argument("--p", type=int, default=11)
    pc.set_defaults(func=_cmd_picard)

    f = sub.add_parser("fibers", help="Kodaira classification of the singular fibers")
    f.set_defaults(func=_cmd_fibers)

    h = sub.add_parser("height", help="height Gram matrix of sections")
    h.add_argument("--sections", default="Q,R", help="comma list, e.g. Q,R or Q+R,2R")
    h.set_defaults(func=_cmd_height)

    m = sub.add_parser("mw", help="Mordell-Weil report (rank, torsion, disc NS)")
    m.set_defaults(func=_cmd_mw)

    d = sub.add_parser("divide2", help="2-divisibility NoSolution certificate")
    d.set_defaults(func=_cmd_divide2)

    s = sub.add_parser("selfcheck", help="run the acceptance criteria")
    s.add_argument("--fast", action="store_true", help="skip the n = 3 count")
    s.set_defaults(func=_cmd_selfcheck)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        raise
    except BrokenPipeError:
        return 0
    except Exception as exc:  # verification failures surface as exit 1
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
