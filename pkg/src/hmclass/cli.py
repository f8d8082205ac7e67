"""Command-line interface.

Exit codes: 0 success, 1 verification failure or violated identity,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import __version__
from .arrangement import Arrangement, arrangement_class, arrangement_euler, complement_class, lattice
from .errors import HMError, IdentityViolation
from .milnor import EMData, example_2_8, example_2_8_em_data, milnor_class_direct, milnor_class_iterated
from .projspace import HomologyClass, ci_chi_y_virtual, ci_euler
from .rings import format_rational, parse_rational
from .spectral import (
    IsolatedHypersurfaceModel,
    chi_y,
    du_bois_detector,
    germ_lct,
    germ_m_zero,
    hm_y_class,
    jumping_coefficients,
)
from .spectrum import (
    ResolutionData,
    brieskorn_pham,
    check_symmetry,
    classify,
    lct_from_resolution,
    lct_from_spectrum,
    max_exponent,
    milnor_number,
    min_exponent,
    rational_after_cover,
)
from .verify import SUITES, run_suites

SCHEMA = 1


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _rational_list(text: str) -> list[Fraction]:
    try:
        return [parse_rational(t) for t in text.split(",") if t.strip()]
    except HMError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _load_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise HMError(f"cannot read {path}: {exc}") from exc


class Output:
    """Collects human-readable lines and a JSON payload; prints one of them."""

    def __init__(self, args):
        self.as_json = getattr(args, "json", False)
        self.quiet = getattr(args, "quiet", False)
        self.lines: list[str] = []
        self.payload: dict = {"schema": SCHEMA}

    def line(self, text: str = "") -> None:
        self.lines.append(text)

    def emit(self) -> None:
        if self.as_json:
            print(json.dumps(self.payload, indent=2, sort_keys=True, ensure_ascii=False))
        elif not self.quiet:
            for text in self.lines:
                print(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_chi(args) -> int:
    if args.input:
        data = _load_json(args.input)
        try:
            n, degrees = int(data["n"]), [int(d) for d in data["degrees"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise HMError(f"malformed complete-intersection query: {exc}") from exc
    else:
        if args.n is None or args.degrees is None:
            raise HMError("chi needs --n and --degrees (or --input FILE)")
        n, degrees = args.n, args.degrees
    out = Output(args)
    euler = ci_euler(n, degrees)
    out.payload.update({"n": n, "degrees": degrees, "euler": format_rational(euler)})
    if args.chi_y:
        poly = ci_chi_y_virtual(n, degrees)
        out.payload["chi_y"] = str(poly)
        out.payload["chi_y_coeffs"] = poly.to_json()
        out.line(str(poly))
    else:
        out.line(format_rational(euler))
    out.emit()
    return 0


def cmd_example_2_8(args) -> int:
    if len(args.a) != 2 or len(args.b) != 2:
        raise HMError("--a and --b take exactly two integers each")
    ex = example_2_8(args.n, args.a[0], args.a[1], args.b[0], args.b[1])
    out = Output(args)
    out.payload.update(ex.to_json())
    out.line(f"m = {ex.m}")
    out.line(f"EM on Sing X = {ex.em_value}")
    out.line(f"delta (iterated hyperplane sections) = {ex.delta_iterated}")
    out.line(f"delta (generic hypersurface section) = {ex.delta_direct}")
    out.line(f"chi(X') = {ex.chi_smooth}")
    out.line(f"chi(X) = {ex.chi_X}")
    out.emit()
    return 0


def cmd_milnor_class(args) -> int:
    if args.example:
        if len(args.example) != 5:
            raise HMError("--example takes n,a1,a2,b1,b2")
        d = example_2_8_em_data(*args.example)
    else:
        if args.n is None or args.m is None or args.r is None or args.em is None:
            raise HMError("milnor-class needs --n, --m, --r and --em (or --example)")
        d = EMData(args.n, args.m, HomologyClass(args.n, args.em), args.r)
    iterated = milnor_class_iterated(d, stratified=args.stratified)
    direct = milnor_class_direct(d)
    agree = iterated == direct
    out = Output(args)
    out.payload.update(
        {
            "n": d.ambient_dim,
            "m": d.degree,
            "r": d.sing_dim,
            "em_class": d.em_class.to_json(),
            "iterated": iterated.to_json(),
            "direct": direct.to_json(),
            "agree": agree,
            "euler_delta": format_rational(direct.degree_zero()),
        }
    )
    out.line(f"c(EM)       = {d.em_class.to_json()}")
    out.line(f"M (iterated) = {iterated.to_json()}")
    out.line(f"M (direct)   = {direct.to_json()}")
    out.line(f"chi(X') - chi(X) = {direct.degree_zero()}")
    out.line(f"agree = {_bool(agree)}")
    out.emit()
    return 0 if agree else 1


def cmd_spectrum(args) -> int:
    if args.bp is None and args.resolution is None:
        raise HMError("spectrum needs --bp and/or --resolution")
    out = Output(args)
    if args.bp is not None:
        s = brieskorn_pham(args.bp)
        c = classify(s)
        lct = lct_from_spectrum(s)
        exps = ", ".join(f"{format_rational(a)}:{int(m)}" for a, m in s.poly.items())
        out.line(f"{exps} | mu={milnor_number(s)} | lct={lct} | duBois={_bool(c.du_bois)}")
        out.line(
            f"min={min_exponent(s)} | max={max_exponent(s)} | "
            f"insignificant={_bool(c.insignificant)} | symmetric={_bool(check_symmetry(s))}"
        )
        out.payload["spectrum"] = {
            "bp": args.bp,
            "num_vars": s.num_vars,
            "exponents": s.poly.to_json(),
            "mu": milnor_number(s),
            "min": format_rational(min_exponent(s)),
            "max": format_rational(max_exponent(s)),
            "du_bois": c.du_bois,
            "insignificant": c.insignificant,
            "symmetric": check_symmetry(s),
            "lct": format_rational(lct),
        }
        if args.cover is not None:
            rational = rational_after_cover(s, args.cover)
            out.line(f"cover m={args.cover}: rational={_bool(rational)}")
            out.payload["spectrum"]["cover"] = {"m": args.cover, "rational": rational}
    if args.resolution is not None:
        r = ResolutionData.parse(args.resolution)
        lct = lct_from_resolution(r)
        out.line(f"resolution lct={lct}")
        out.payload["resolution"] = {"pairs": [list(p) for p in r.pairs], "lct": format_rational(lct)}
    out.emit()
    return 0


def cmd_hypersurface(args) -> int:
    data = _load_json(args.model)
    model = IsolatedHypersurfaceModel.from_json(data)
    raw_germs = data.get("germs", [])
    my = hm_y_class(model)
    cy = chi_y(model)
    verdict = du_bois_detector(model)
    out = Output(args)
    germs = []
    out.line(f"M_y = {my}")
    out.line(f"chi_y = {cy}")
    out.line(f"chi = {cy.evaluate(-1)}")
    for i, (raw, g) in enumerate(zip(raw_germs, model.germs), 1):
        jc = sorted(jumping_coefficients(g))
        m0 = germ_m_zero(g)
        lct = germ_lct(g)
        db = classify(g).du_bois
        germs.append(
            {
                "bp": list(raw),
                "mu": milnor_number(g),
                "m_zero": format_rational(m0),
                "jumping_coefficients": [format_rational(a) for a in jc],
                "lct": format_rational(lct),
                "du_bois": db,
            }
        )
        out.line(
            f"germ {i} {list(raw)}: mu={milnor_number(g)} M_0={m0} "
            f"jumping=[{', '.join(map(str, jc))}] lct={lct} duBois={_bool(db)}"
        )
    out.line(f"Du Bois = {_bool(verdict)}")
    out.payload.update(
        {
            "n": model.ambient_dim,
            "m": model.degree,
            "M_y": str(my),
            "chi_y": str(cy),
            "chi": format_rational(cy.evaluate(-1)),
            "M_0_total": format_rational(sum((germ_m_zero(g) for g in model.germs), Fraction(0))),
            "du_bois": verdict,
            "germs": germs,
        }
    )
    out.emit()
    return 0


def cmd_arrangement(args) -> int:
    a = Arrangement.from_json(_load_json(args.file))
    flats = lattice(a)
    chern = arrangement_class(a, "chern", flats)
    hirz = arrangement_class(a, "hirzebruch", flats)
    euler = arrangement_euler(a, flats)
    comp = complement_class(a, flats)
    out = Output(args)
    out.line("codim  mu  r  members")
    for z in flats:
        out.line(f"{z.codim:>5}  {format_rational(z.moebius):>2}  {z.multiplicity}  {sorted(z.members)}")
    out.line(f"chern = {chern.to_json()}")
    for e, h in hirz.items():
        out.line(f"hirzebruch y^{e} = {h.to_json()}")
    out.line(f"chi(X) = {euler}")
    out.line(f"chi(P^n - X) = {comp.degree_zero()}")
    out.payload.update(
        {
            "n": a.ambient_dim,
            "flats": [z.to_json() for z in flats],
            "chern": chern.to_json(),
            "hirzebruch": hirz.to_json(),
            "chi": format_rational(euler),
            "complement_chern": comp.to_json(),
            "chi_complement": format_rational(comp.degree_zero()),
        }
    )
    out.emit()
    return 0


def cmd_verify(args) -> int:
    params = {"m_max": args.m_max, "order": args.order, "samples": args.samples, "seed": args.seed}
    reports = run_suites(args.suite, **params)
    out = Output(args)
    failures = 0
    for rep in reports:
        failures += len(rep.failures)
        status = "PASS" if rep.ok else "FAIL"
        out.line(f"[{status}] {rep.suite}: {rep.cases} cases, {len(rep.failures)} failures")
        for desc, exp, act in rep.failures[:20]:
            out.line(f"    {desc}: expected {exp}, got {act}")
    out.line(f"total failures: {failures}")
    out.payload["suites"] = [rep.to_json() for rep in reports]
    out.payload["failures"] = failures
    out.emit()
    return 0 if failures == 0 else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="suppress human output")

    parser = argparse.ArgumentParser(
        prog="hmclass",
        description="Exact characteristic-class and spectrum calculus for projective hypersurfaces.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--json", action="store_true", default=False, help="machine-readable output")
    parser.add_argument("--quiet", action="store_true", default=False, help="suppress human output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", parents=[common], help="Euler number / chi_y genus of a complete intersection")
    p.add_argument("--n", type=int)
    p.add_argument("--degrees", type=_int_list)
    p.add_argument("--chi-y", action="store_true", help="print the chi_y genus instead of the Euler number")
    p.add_argument("--input", metavar="FILE", help='JSON query {"n": int, "degrees": [int]}')
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("example-2-8", parents=[common], help="Euler numbers of g1^b1 - c g2^b2")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=_int_list, required=True, metavar="A1,A2")
    p.add_argument("--b", type=_int_list, required=True, metavar="B1,B2")
    p.set_defaults(func=cmd_example_2_8)

    p = sub.add_parser("milnor-class", parents=[common], help="localized Milnor class from c(EM)")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, help="degree of the hypersurface")
    p.add_argument("--r", type=int, help="dimension of the singular locus")
    p.add_argument("--em", type=_rational_list, help="c(EM) coefficients of [P^0], [P^1], ...")
    p.add_argument("--example", type=_int_list, metavar="N,A1,A2,B1,B2", help="use the g1^b1 - c g2^b2 family")
    p.add_argument("--stratified", action="store_true", help="enforce m >= 2 when r >= 1")
    p.set_defaults(func=cmd_milnor_class)

    p = sub.add_parser("spectrum", parents=[common], help="spectrum of a Brieskorn-Pham germ")
    p.add_argument("--bp", type=_int_list, metavar="A1,A2,...")
    p.add_argument("--resolution", metavar="NU/M,...", help="lct from resolution data")
    p.add_argument("--cover", type=int, metavar="M", help="rationality of f - z^M = 0")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("hypersurface", parents=[common], help="hypersurface with isolated BP singularities")
    p.add_argument("model", help='JSON model {"n": int, "m": int, "germs": [[2,3], ...]} or - for stdin')
    p.set_defaults(func=cmd_hypersurface)

    p = sub.add_parser("arrangement", parents=[common], help="projective hyperplane arrangement")
    p.add_argument("file", help='JSON {"n": int, "forms": [[rational strings]]} or - for stdin')
    p.set_defaults(func=cmd_arrangement)

    p = sub.add_parser("verify", parents=[common], help="replay the identity suites")
    p.add_argument("--suite", action="append", choices=["all", *SUITES], help="suite to run (repeatable)")
    p.add_argument("--m-max", type=int, default=12)
    p.add_argument("--order", type=int, default=30)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "suite", None) is None and args.command == "verify":
        args.suite = ["all"]
    try:
        return args.func(args)
    except IdentityViolation as exc:
        print(f"hmclass: identity violated: {exc}", file=sys.stderr)
        return 1
    except HMError as exc:
        print(f"hmclass: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
