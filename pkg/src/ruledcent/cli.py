"""Command-line front end: single-query classification, batch scanning,
polytope rendering, orbit/extension queries, and the self-verification suite.

Exit codes: 0 classified/ok, 1 verification failure, 2 invalid input,
3 unresolved classification under --strict.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor

from . import moves, verify
from .actions import (
    CyclicAction,
    SurfaceKind,
    SymplecticForm,
    format_rational,
    is_hamiltonian_torus,
    make_action,
    make_form,
    parse_rational,
)
from .classify import REASON_TEXT, classify
from .errors import NotHamiltonian, OutOfRegime, RuledCentError
from .extensions import (
    ToricExtensionSet,
    cyclic_extensions_via_circle_chain,
    cyclic_toric_extensions,
)
from .homotopy import centralizer_type, poincare_coeffs
from .polytope import moment_polytope, polytope_json_dict, render_svg
from .strata import stratification
from .weights import FIXED_POINTS, fixed_point_weights

POINCARE_DEGREES = 8

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID = 2
EXIT_UNRESOLVED_STRICT = 3


def _use_color() -> bool:
    return os.environ.get("RULEDCENT_NO_COLOR") is None and sys.stdout.isatty()


def _style(text: str, code: str) -> str:
    if not _use_color():
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _surface_from_flag(value: str) -> SurfaceKind:
    return SurfaceKind(value)


def _infer_surface(r: int) -> SurfaceKind:
    return SurfaceKind.TRIVIAL if r % 2 == 0 else SurfaceKind.NON_TRIVIAL


# --- classification record -------------------------------------------------


def _extensions_dict(exts: ToricExtensionSet) -> dict:
    return {
        "completeness": exts.completeness.value,
        "tori": [
            {"r": e.r_prime, "circle_b": e.circle_b, "provenance": e.provenance.value}
            for e in exts.extensions
        ],
    }


def build_record(
    form: SymplecticForm, action: CyclicAction, warn_messages: tuple[str, ...] = ()
) -> dict:
    """Full classification record for one input, as an ordered dict ready for
    JSON emission. Unresolved inputs carry empty strata and centralizer."""
    cls = classify(form, action)
    record: dict = {
        "surface": form.surface.value,
        "lambda": format_rational(form.lam),
        "n": action.n,
        "a": action.a,
        "b": action.b,
        "r": action.r,
        "effective": True,
        "hamiltonian": True,
        "weights": fixed_point_weights(action).as_dict(),
        "extensions": _extensions_dict(cls.extensions) if cls.extensions else None,
        "class": {
            "kind": cls.kind.value,
            "reason": cls.reason,
            "reason_text": REASON_TEXT.get(cls.reason) if cls.reason else None,
        },
        "strata": [],
        "centralizer": None,
        "warnings": list(warn_messages),
    }
    if not cls.is_unresolved:
        record["strata"] = [
            {
                "r": s.r_prime,
                "b_in_torus": s.b_in_torus,
                "complex_codim": s.complex_codim,
                "real_codim_nonequivariant": s.real_codim_nonequivariant,
                "is_open": s.is_open,
            }
            for s in stratification(form, action, cls)
        ]
        ht = centralizer_type(cls, action, form)
        centralizer = {
            "type": ht.kind.value,
            "label": ht.label,
            "components": ht.components,
            "poincare": poincare_coeffs(ht, POINCARE_DEGREES),
            "pushout": None,
        }
        if ht.pushout is not None:
            centralizer["pushout"] = {
                "r": ht.pushout.r,
                "r_prime": ht.pushout.r_prime,
                "circle_in_r": list(ht.pushout.circle_in_r),
                "circle_in_r_prime": list(ht.pushout.circle_in_r_prime),
            }
        record["centralizer"] = centralizer
    return record


def _record_text(record: dict) -> str:
    lines = [
        f"surface      {record['surface']}",
        f"lambda       {record['lambda']}",
        f"action       Z_{record['n']}({record['a']},{record['b']};{record['r']})",
        "weights      "
        + "  ".join(f"{p} {{{w[0]},{w[1]}}}" for p, w in record["weights"].items()),
    ]
    cls = record["class"]
    if cls["reason"]:
        lines.append(f"class        {_style(cls['kind'], '1')}({cls['reason']})")
        lines.append(f"reason       {cls['reason_text']}")
    else:
        lines.append(f"class        {_style(cls['kind'], '1')}")
    if record["extensions"]:
        tori = ", ".join(
            f"T_{t['r']} (circle b={t['circle_b']}, {t['provenance']})"
            for t in record["extensions"]["tori"]
        )
        lines.append(f"extensions   {tori} [{record['extensions']['completeness']}]")
    if record["strata"]:
        lines.append(
            "strata       "
            + ", ".join(
                f"U_{s['r']}: codim {s['complex_codim']}" + (" (open)" if s["is_open"] else "")
                for s in record["strata"]
            )
        )
    if record["centralizer"]:
        c = record["centralizer"]
        lines.append(f"centralizer  {c['label']}  [components {c['components']}]")
        lines.append("poincare     " + " ".join(str(x) for x in c["poincare"]))
        if c["pushout"]:
            p = c["pushout"]
            lines.append(
                f"pushout      T_{p['r']} <- S^1(1,{p['circle_in_r'][1]}) -> T_{p['r_prime']}"
            )
    for w in record["warnings"]:
        lines.append(f"warning      {w}")
    return "\n".join(lines)


def _json_dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=False)


def _make_inputs(args) -> tuple[SymplecticForm, CyclicAction, tuple[str, ...]]:
    surface = _surface_from_flag(args.surface)
    form = make_form(surface, args.lam)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        action = make_action(surface, args.n, args.a, args.b, args.r)
    if not is_hamiltonian_torus(form, action.r):
        raise NotHamiltonian(
            f"{action} is not Hamiltonian at lambda = {form.lam}: no torus of index {action.r}"
        )
    return form, action, tuple(str(w.message) for w in caught)


def cmd_classify(args) -> int:
    form, action, warn_messages = _make_inputs(args)
    record = build_record(form, action, warn_messages)
    if args.format == "json":
        print(_json_dumps(record))
    else:
        print(_record_text(record))
    if args.strict and record["class"]["kind"] == "Unresolved":
        return EXIT_UNRESOLVED_STRICT
    return EXIT_OK


# --- scan ------------------------------------------------------------------

SCAN_COLUMNS = [
    "surface",
    "lambda",
    "n",
    "a",
    "b",
    "r",
    "effective",
    "class",
    "extensions",
    "codims",
    "centralizer",
    "components",
]


def _max_hamiltonian_r(form: SymplecticForm) -> int:
    parity = 0 if form.surface is SurfaceKind.TRIVIAL else 1
    r = parity
    best = -1
    while is_hamiltonian_torus(form, r):
        best = r
        r += 2
    return best


def _scan_row(form: SymplecticForm, action: CyclicAction) -> list[str]:
    cls = classify(form, action)
    row = [
        form.surface.value,
        format_rational(form.lam),
        str(action.n),
        str(action.a),
        str(action.b),
        str(action.r),
        "true",
        str(cls),
    ]
    if cls.extensions is not None:
        row.append(";".join(str(v) for v in cls.extensions.r_values))
    else:
        row.append("")
    if cls.is_unresolved:
        row.extend(["", "", ""])
    else:
        strata = stratification(form, action, cls)
        ht = centralizer_type(cls, action, form)
        row.append(";".join(str(s.complex_codim) for s in strata))
        row.append(ht.kind.value)
        row.append(str(ht.components))
    return row


def _scan_grid(form: SymplecticForm, n_lo: int, n_hi: int, r_max: int):
    parity = 0 if form.surface is SurfaceKind.TRIVIAL else 1
    for n in range(max(2, n_lo), n_hi + 1):
        for r in range(parity, r_max + 1, 2):
            for a in range(n):
                for b in range(n):
                    if math.gcd(a, b, n) != 1:
                        continue
                    yield CyclicAction(form.surface, n, a, b, r)


def cmd_scan(args) -> int:
    surface = _surface_from_flag(args.surface)
    form = make_form(surface, args.lam)
    try:
        lo_text, hi_text = args.n_range.split("..")
        n_lo, n_hi = int(lo_text), int(hi_text)
    except ValueError:
        raise RuledCentError(f"--n-range must look like 2..10, got {args.n_range!r}")
    r_cap = _max_hamiltonian_r(form)
    r_max = min(args.r_max, r_cap) if args.r_max is not None else r_cap
    grid = list(_scan_grid(form, n_lo, n_hi, r_max))
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(lambda act: _scan_row(form, act), grid))
    else:
        rows = [_scan_row(form, act) for act in grid]
    rows.sort(key=lambda row: (int(row[2]), int(row[5]), int(row[3]), int(row[4])))
    with open(args.out, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(SCAN_COLUMNS)
        writer.writerows(rows)
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


# --- verify ----------------------------------------------------------------


def cmd_verify(args) -> int:
    results = verify.run_all(tuple(args.n))
    failed = [r for r in results if not r.passed]
    for result in results:
        tag = _style("PASS", "32") if result.passed else _style("FAIL", "31")
        print(f"{tag} {result.name}: {result.detail}")
    return EXIT_OK if not failed else EXIT_VERIFY_FAILED


# --- small wrappers ----------------------------------------------------------


def cmd_polytope(args) -> int:
    surface = _infer_surface(args.r) if args.surface is None else _surface_from_flag(args.surface)
    form = make_form(surface, args.lam)
    poly = moment_polytope(form, args.r)
    decorations = None
    if args.n is not None:
        if args.a is None or args.b is None:
            raise RuledCentError("--decorate needs --n, --a, and --b together")
        action = make_action(surface, args.n, args.a, args.b, args.r)
        decorations = fixed_point_weights(action)
    if args.out:
        with open(args.out, "wb") as handle:
            handle.write(render_svg(poly, decorations))
        print(f"wrote {args.out}")
        return EXIT_OK
    if args.format == "json":
        print(_json_dumps(polytope_json_dict(poly)))
    else:
        for name, (x, y) in poly.vertices:
            print(f"{name} = ({format_rational(x)}, {format_rational(y)})")
        for (a, b), label in poly.edges:
            print(f"{a}-{b}: {label}")
    return EXIT_OK


def cmd_weights(args) -> int:
    surface = _infer_surface(args.r)
    action = make_action(surface, args.n, args.a, args.b, args.r)
    table = fixed_point_weights(action)
    if args.format == "json":
        print(_json_dumps({"n": table.n, "weights": table.as_dict()}))
    else:
        for p in FIXED_POINTS:
            w = table.at(p)
            print(f"{p}: {{{w[0]},{w[1]}}}")
    return EXIT_OK


def cmd_orbit(args) -> int:
    t = moves.make_triple(args.n, args.a, args.b, args.r)
    if not moves.in_restricted_domain(t):
        raise RuledCentError(
            f"{t} is outside the restricted domain (needs gcd(a,n)=1 and r != 0 mod 2n)"
        )
    orbit = sorted(moves.orbit(t), key=lambda u: (u.r, u.a, u.b))
    canonical = orbit[0]
    if args.format == "json":
        print(
            _json_dumps(
                {
                    "n": args.n,
                    "orbit": [[u.a, u.b, u.r] for u in orbit],
                    "canonical": [canonical.a, canonical.b, canonical.r],
                }
            )
        )
    else:
        for u in orbit:
            print(f"({u.a},{u.b};{u.r})")
        print(f"canonical: ({canonical.a},{canonical.b};{canonical.r})")
    return EXIT_OK


def cmd_extensions(args) -> int:
    surface = _surface_from_flag(args.surface)
    form = make_form(surface, args.lam)
    action = make_action(surface, args.n, args.a, args.b, args.r)
    if args.chain:
        exts = cyclic_extensions_via_circle_chain(form, action)
    else:
        exts = cyclic_toric_extensions(form, action)
    if args.format == "json":
        print(_json_dumps(_extensions_dict(exts)))
    else:
        for e in exts.extensions:
            print(f"T_{e.r_prime} (circle b={e.circle_b}, {e.provenance.value})")
        print(f"completeness: {exts.completeness.value}")
    return EXIT_OK


# --- argument parsing --------------------------------------------------------


def _add_action_flags(parser, with_form: bool = True, surface_optional: bool = False):
    if with_form:
        if surface_optional:
            parser.add_argument("--surface", choices=[s.value for s in SurfaceKind], default=None)
        else:
            parser.add_argument(
                "--surface", choices=[s.value for s in SurfaceKind], required=True
            )
        parser.add_argument(
            "--lambda", dest="lam", required=True, metavar="P/Q",
            help="exact symplectic parameter, integer or p/q",
        )
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--a", type=int, required=True)
    parser.add_argument("--b", type=int, required=True)
    parser.add_argument("--r", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ruledcent",
        description=(
            "Classify cyclic group actions on ruled surfaces: toric extensions, "
            "equivariant strata, and centralizer homotopy types."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one action")
    _add_action_flags(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--strict", action="store_true", help="exit 3 on Unresolved")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="classify a grid of actions into a CSV file")
    p.add_argument("--surface", choices=[s.value for s in SurfaceKind], required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="P/Q")
    p.add_argument("--n-range", required=True, metavar="LO..HI")
    p.add_argument("--r-max", type=int, default=None)
    p.add_argument("--out", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument(
        "--n", type=int, nargs="+", default=list(verify.DEFAULT_PRESENTATION_SAMPLES),
        help="odd group orders to sample for the move-group check",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("polytope", help="emit a moment polytope as SVG, JSON, or text")
    p.add_argument("--surface", choices=[s.value for s in SurfaceKind], default=None)
    p.add_argument("--lambda", dest="lam", required=True, metavar="P/Q")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, default=None, help="decorate with weights of Z_n(a,b;r)")
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--out", default=None, metavar="FILE.svg")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("weights", help="fixed-point weights of an action")
    _add_action_flags(p, with_form=False)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("orbit", help="orbit of a triple under the standard moves")
    _add_action_flags(p, with_form=False)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("extensions", help="toric extensions of an action")
    _add_action_flags(p)
    p.add_argument("--chain", action="store_true", help="lower bound via circle chains")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_extensions)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "lam"):
        try:
            parse_rational(args.lam)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID
    try:
        return args.func(args)
    except OutOfRegime as exc:
        print(f"error: out of regime: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except RuledCentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entry() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entry()
