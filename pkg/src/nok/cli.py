"""Command-line front end: parse an ideal or family file, run one
library operation, and print a text or JSON report.

Exit codes: 0 success, 1 domain error (e.g. an ideal class with no
symbolic-polyhedron support), 2 parse or usage error, 3 vertex budget
exceeded (see NOK_MAX_VERTICES).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from typing import Sequence

from . import polyhedron as poly
from .bodies import (member_integral_closure, member_symbolic,
                     membership_certificate, newton_polyhedron,
                     np_equals_sp, real_power, symbolic_polyhedron,
                     symbolic_power)
from .errors import NokError, ParseError, VertexBudgetExceeded
from .families import (CeilingPowerFamily, CEILING_PREFIX_CAP, ceiling_scale,
                       newton_okounkov_body, stabilization_check)
from .fileio import (ParsedFamily, ParsedIdeal, format_halfspace,
                     format_monomial, format_point, frac_to_str,
                     ideal_payload, parse_family_text, parse_ideal_text,
                     parse_monomial_text, point_payload, polyhedron_payload,
                     sha256_digest, str_to_frac)
from .invariants import (analytic_spread, c_degree_compatibility,
                         invariant_report, svd_bounds,
                         symbolic_analytic_spread)
from .simis import (hilbert_basis, normal_rees_generator_degrees, svd_probe,
                    veronese_verify)

_FAMILY_VERBS = frozenset({"family-body", "stabilize"})
_UNSUPPORTED_NOTE = ("symbolic-power data needs a squarefree ideal, an "
                     "explicit linear-power decomposition, or an ideal "
                     "primary to the maximal ideal")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got '{text}'")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, "
                                         f"got {value}")
    return value


def _positive_rational(text: str) -> Fraction:
    try:
        value = str_to_frac(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive rational, "
                                         f"got {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nok",
        description="Exact computations with Newton and symbolic polyhedra "
                    "of monomial ideals.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="ideal or family file")
    common.add_argument("--json", action="store_true",
                        help="emit a JSON report instead of text")
    sub = parser.add_subparsers(dest="verb", required=True)

    sub.add_parser("np", parents=[common],
                   help="Newton polyhedron of the ideal")
    sub.add_parser("sp", parents=[common],
                   help="symbolic polyhedron of the ideal")
    sub.add_parser("spread", parents=[common],
                   help="analytic spread, plus the symbolic one if defined")
    sub.add_parser("constants", parents=[common],
                   help="vertex denominators, c, D, and derived bounds")

    p = sub.add_parser("symbolic-power", parents=[common],
                       help="minimal generators of the k-th symbolic power")
    p.add_argument("-k", type=_positive_int, required=True, metavar="K")

    p = sub.add_parser("real-power", parents=[common],
                       help="monomials whose exponent lies in r*NP(I)")
    p.add_argument("-r", type=_positive_rational, required=True, metavar="P/Q")

    p = sub.add_parser("member", parents=[common],
                       help="membership of a monomial in a symbolic power "
                            "or an integral closure")
    p.add_argument("-m", "--monomial", required=True,
                   help="monomial such as x*y^2, or an exponent vector "
                        "[1,2,0]")
    p.add_argument("-k", type=_positive_int, required=True, metavar="K")
    p.add_argument("--closure", action="store_true",
                   help="test the integral closure of I^k instead of I^(k)")
    p.add_argument("--certificate", action="store_true",
                   help="also report a convex-combination or violated-facet "
                        "certificate for the point (exponent)/k")

    p = sub.add_parser("hilbert", parents=[common],
                       help="degree-bounded Hilbert basis of the cone over "
                            "the symbolic polyhedron")
    p.add_argument("--bound", type=_positive_int, default=None, metavar="B",
                   help="degree bound (default: the proven generation bound)")

    p = sub.add_parser("veronese", parents=[common],
                       help="bounded Veronese check at -d, or a window probe "
                            "for the least verifying degree")
    p.add_argument("-d", type=_positive_int, default=None, metavar="D")
    p.add_argument("--kmax", type=_positive_int, default=4, metavar="K")
    p.add_argument("--jobs", type=_positive_int, default=1, metavar="N")

    sub.add_parser("normal-rees", parents=[common],
                   help="generator degrees of the normalized Rees algebra")

    sub.add_parser("family-body", parents=[common],
                   help="limit body of a graded family")

    p = sub.add_parser("stabilize", parents=[common],
                       help="search for the least c with (1/c)*NP(I_c) equal "
                            "to the limit body")
    p.add_argument("--cmax", type=_positive_int, default=30, metavar="C")
    p.add_argument("--jobs", type=_positive_int, default=1, metavar="N")

    sub.add_parser("np-eq-sp", parents=[common],
                   help="whether the Newton and symbolic polyhedra coincide")
    return parser


def _body_lines(title: str, body, variables) -> list[str]:
    lines = [f"{title} in {', '.join(variables)}"]
    lines.append(f"facets ({len(body.facets)}):")
    lines.extend(f"  {format_halfspace(h, variables)}" for h in body.facets)
    lines.append(f"vertices ({len(body.vertices)}):")
    lines.extend(f"  {format_point(v)}" for v in body.vertices)
    lines.append(f"rays ({len(body.rays)}):")
    lines.extend(f"  {format_point(r)}" for r in body.rays)
    lines.append(f"mdc: {poly.mdc(body)}")
    return lines


def _cmd_np(parsed: ParsedIdeal, args):
    body = newton_polyhedron(parsed.ideal)
    return (polyhedron_payload(body),
            _body_lines("newton polyhedron", body, parsed.variables), [])


def _cmd_sp(parsed: ParsedIdeal, args):
    body = symbolic_polyhedron(parsed.classified)
    return (polyhedron_payload(body),
            _body_lines("symbolic polyhedron", body, parsed.variables), [])


def _cmd_spread(parsed: ParsedIdeal, args):
    ell = analytic_spread(parsed.ideal)
    result = {"analytic_spread": ell, "symbolic_analytic_spread": None}
    lines = [f"analytic spread: {ell}"]
    notes = []
    if parsed.classified.supports_sp():
        ell_s = symbolic_analytic_spread(parsed.classified)
        result["symbolic_analytic_spread"] = ell_s
        lines.append(f"symbolic analytic spread: {ell_s}")
    else:
        notes.append(_UNSUPPORTED_NOTE)
    return result, lines, notes


def _cmd_constants(parsed: ParsedIdeal, args):
    rep = invariant_report(parsed.classified)
    notes = []
    result = {
        "analytic_spread": rep.ell,
        "symbolic_analytic_spread": rep.ell_s,
        "vertex_denominators": None, "c": None, "D": None,
        "svd_lower": None, "svd_upper": None,
        "sgt_upper": None, "sgt_upper_np_eq_sp": None,
        "hadamard_bound": None, "hadamard_exact": rep.hadamard_exact,
    }
    lines = [f"analytic spread: {rep.ell}"]
    if rep.ell_s is None:
        notes.append(_UNSUPPORTED_NOTE)
        return result, lines, notes
    result.update({
        "vertex_denominators": [frac_to_str(d) for d in rep.vertex_denoms],
        "c": frac_to_str(rep.c),
        "D": frac_to_str(rep.D),
        "svd_lower": frac_to_str(rep.svd_lower),
        "svd_upper": frac_to_str(rep.svd_upper),
        "sgt_upper": frac_to_str(rep.sgt_upper),
        "sgt_upper_np_eq_sp": None if rep.sgt_upper_np_eq_sp is None
        else frac_to_str(rep.sgt_upper_np_eq_sp),
        "hadamard_bound": frac_to_str(rep.hadamard_bound),
    })
    lines.append(f"symbolic analytic spread: {rep.ell_s}")
    lines.append("vertex denominators: "
                 + ", ".join(str(d) for d in rep.vertex_denoms))
    lines.append(f"c: {rep.c}")
    lines.append(f"D: {rep.D}")
    lines.append(f"svd window: [{rep.svd_lower}, {rep.svd_upper}]")
    lines.append(f"sgt bound: {rep.sgt_upper}")
    if rep.sgt_upper_np_eq_sp is not None:
        lines.append(f"sgt bound (squarefree, NP = SP): "
                     f"{rep.sgt_upper_np_eq_sp}")
    rounding = "exact" if rep.hadamard_exact else "rounded up"
    lines.append(f"sgt bound (hadamard, {rounding}): "
                 f"{frac_to_str(rep.hadamard_bound)}")
    return result, lines, notes


def _cmd_symbolic_power(parsed: ParsedIdeal, args):
    power_k = symbolic_power(parsed.classified, args.k)
    result = {"k": args.k, **ideal_payload(power_k),
              "monomials": [format_monomial(g, parsed.variables)
                            for g in power_k.generators]}
    lines = [f"I^({args.k}) minimal generators ({len(power_k.generators)}):"]
    lines.extend(f"  {format_monomial(g, parsed.variables)}"
                 for g in power_k.generators)
    return result, lines, []


def _cmd_real_power(parsed: ParsedIdeal, args):
    closure = real_power(parsed.ideal, args.r)
    result = {"r": frac_to_str(args.r), **ideal_payload(closure),
              "monomials": [format_monomial(g, parsed.variables)
                            for g in closure.generators]}
    lines = [f"monomials with exponent in {frac_to_str(args.r)}*NP "
             f"({len(closure.generators)} minimal):"]
    lines.extend(f"  {format_monomial(g, parsed.variables)}"
                 for g in closure.generators)
    return result, lines, []


def _cmd_member(parsed: ParsedIdeal, args):
    exponent = parse_monomial_text(args.monomial, parsed.variables)
    name = format_monomial(exponent, parsed.variables)
    if args.closure:
        member = member_integral_closure(parsed.ideal, exponent, args.k)
        body = newton_polyhedron(parsed.ideal)
        what = f"integral closure of I^{args.k}"
        mode = "integral-closure"
    else:
        member = member_symbolic(parsed.classified, exponent, args.k)
        body = symbolic_polyhedron(parsed.classified)
        what = f"I^({args.k})"
        mode = "symbolic"
    result = {"monomial": name, "exponent": list(exponent), "k": args.k,
              "mode": mode, "member": member, "certificate": None}
    lines = [f"{name} in {what}: {'yes' if member else 'no'}"]
    notes = []
    if args.certificate:
        point = tuple(Fraction(a, args.k) for a in exponent)
        cert = membership_certificate(body, point)
        payload = {"inside": cert.inside,
                   "vertices": [point_payload(v) for v in cert.vertices],
                   "weights": [frac_to_str(w) for w in cert.weights],
                   "remainder": None if cert.remainder is None
                   else point_payload(cert.remainder),
                   "violated": None if cert.violated is None
                   else {"normal": list(cert.violated.normal),
                         "offset": cert.violated.offset}}
        result["certificate"] = payload
        notes.append(f"certificate is for the point (exponent)/{args.k} "
                     "against the body")
        if cert.inside:
            lines.append("certificate: convex combination")
            for w, v in zip(cert.weights, cert.vertices):
                lines.append(f"  {frac_to_str(w)} * {format_point(v)}")
            lines.append(f"  + nonnegative remainder "
                         f"{format_point(cert.remainder)}")
        else:
            lines.append("certificate: violated facet "
                         f"{format_halfspace(cert.violated, parsed.variables)}")
    return result, lines, notes


def _cmd_hilbert(parsed: ParsedIdeal, args):
    rep = hilbert_basis(parsed.classified, args.bound)
    degrees = sorted(rep.degrees)
    lcm_degrees = math.lcm(*degrees)
    window = svd_bounds(parsed.classified)
    compatible = (c_degree_compatibility(parsed.classified, rep.degrees)
                  if rep.exhaustive else None)
    result = {
        "elements": [{"exponent": list(e.exponent), "degree": e.degree}
                     for e in rep.elements],
        "degrees": degrees,
        "sgt": rep.sgt,
        "degree_bound_used": rep.degree_bound_used,
        "exhaustive": rep.exhaustive,
        "lcm_degrees": lcm_degrees,
        "svd_window": [frac_to_str(window.lower), frac_to_str(window.upper)],
        "c_degree_compatible": compatible,
    }
    lines = [f"hilbert basis elements ({len(rep.elements)}), "
             f"degree bound {rep.degree_bound_used}:"]
    lines.extend(f"  degree {e.degree}: "
                 f"{format_monomial(e.exponent, parsed.variables)}"
                 for e in rep.elements)
    lines.append(f"degrees: {', '.join(str(d) for d in degrees)}")
    lines.append(f"sgt: {rep.sgt}")
    lines.append(f"lcm of degrees: {lcm_degrees}")
    lines.append(f"svd window: [{frac_to_str(window.lower)}, "
                 f"{frac_to_str(window.upper)}]")
    notes = []
    if rep.exhaustive:
        notes.append(f"exhaustive: the degree bound {rep.degree_bound_used} "
                     "meets the proven generation bound")
    else:
        notes.append(f"bounded search only: elements above degree "
                     f"{rep.degree_bound_used} may be missing")
    notes.append("no inequality between svd and the degree lcm is asserted")
    return result, lines, notes


def _cmd_veronese(parsed: ParsedIdeal, args):
    notes = [f"bounded check, k_max={args.kmax}"]
    if args.d is not None:
        verified = veronese_verify(parsed.classified, args.d, args.kmax,
                                   args.jobs)
        result = {"d": args.d, "k_max": args.kmax, "verified": verified}
        lines = [f"I^({args.d}k) = (I^({args.d}))^k for all k <= "
                 f"{args.kmax}: {'yes' if verified else 'no'}"]
        return result, lines, notes
    candidate, upper = svd_probe(parsed.classified, args.kmax, args.jobs)
    lower, _ = svd_bounds(parsed.classified)
    result = {"candidate": frac_to_str(candidate), "k_max": args.kmax,
              "window": [frac_to_str(lower), frac_to_str(upper)]}
    lines = [f"svd candidate: {candidate} "
             f"(window [{lower}, {upper}], k_max={args.kmax})"]
    return result, lines, notes


def _cmd_normal_rees(parsed: ParsedIdeal, args):
    degrees = sorted(normal_rees_generator_degrees(parsed.ideal))
    bound = max(analytic_spread(parsed.ideal) - 1, 1)
    result = {"degrees": degrees, "degree_bound_used": bound}
    lines = [f"normalized rees algebra generator degrees: "
             f"{', '.join(str(d) for d in degrees)}"]
    return result, lines, [f"complete up to the proven bound {bound}"]


def _cmd_family_body(parsed: ParsedFamily, args):
    body = newton_okounkov_body(parsed.family)
    result = {"kind": parsed.kind, **polyhedron_payload(body)}
    lines = [f"family kind: {parsed.kind}"]
    lines.extend(_body_lines("limit body", body, parsed.variables))
    notes = []
    if isinstance(parsed.family, CeilingPowerFamily):
        scale = ceiling_scale(parsed.family)
        result["scale"] = frac_to_str(scale)
        if parsed.family.beta >= 0:
            notes.append(f"body is {frac_to_str(scale)}*NP(base): with "
                         "beta >= 0 the infimum of ceil(alpha*k + beta)/k "
                         "is alpha (closed form)")
        else:
            notes.append(f"body is {frac_to_str(scale)}*NP(base): infimum "
                         f"taken over the finite prefix k <= "
                         f"{CEILING_PREFIX_CAP} plus the limit alpha")
    return result, lines, notes


def _cmd_stabilize(parsed: ParsedFamily, args):
    rep = stabilization_check(parsed.family, c_max=args.cmax, jobs=args.jobs)
    result = {"stabilized": rep.stabilized, "c": rep.c, "c_max": args.cmax,
              "witness": None}
    notes = []
    if rep.stabilized:
        lines = [f"stabilized at c = {rep.c}"]
        notes.append(f"the limit body equals (1/{rep.c})*NP(I_{rep.c})")
    else:
        witness = rep.witness
        result["witness"] = {"c_tested": witness.c_tested, "k": witness.k,
                             "vertex": point_payload(witness.vertex)}
        lines = [f"not stabilized up to {args.cmax}",
                 f"witness: body vertex {format_point(witness.vertex)} is "
                 f"missing from (1/{witness.k})*NP(I_{witness.k})"]
        notes.append("bounded search: this does not certify that no "
                     "stabilizing c exists")
    return result, lines, notes


def _cmd_np_eq_sp(parsed: ParsedIdeal, args):
    same = np_equals_sp(parsed.classified)
    result = {"np_equals_sp": same}
    return result, [f"NP(I) = SP(I): {'yes' if same else 'no'}"], []


_HANDLERS = {
    "np": _cmd_np,
    "sp": _cmd_sp,
    "spread": _cmd_spread,
    "constants": _cmd_constants,
    "symbolic-power": _cmd_symbolic_power,
    "real-power": _cmd_real_power,
    "member": _cmd_member,
    "hilbert": _cmd_hilbert,
    "veronese": _cmd_veronese,
    "normal-rees": _cmd_normal_rees,
    "family-body": _cmd_family_body,
    "stabilize": _cmd_stabilize,
    "np-eq-sp": _cmd_np_eq_sp,
}


def _run(args) -> tuple[dict, list[str], list[str], str]:
    with open(args.file, "rb") as handle:
        data = handle.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise ParseError("input file is not valid UTF-8") from None
    digest = sha256_digest(data)
    if args.verb in _FAMILY_VERBS:
        parsed = parse_family_text(text)
    else:
        parsed = parse_ideal_text(text)
    result, lines, notes = _HANDLERS[args.verb](parsed, args)
    return result, lines, notes, digest


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        result, lines, notes, digest = _run(args)
    except VertexBudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NokError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        envelope = {"command": args.verb,
                    "input": {"path": args.file, "sha256": digest},
                    "result": result, "notes": notes}
        print(json.dumps(envelope, sort_keys=True, indent=2))
    else:
        print(f"command: {args.verb} {args.file}")
        print(f"input sha256: {digest}")
        for line in lines:
            print(line)
        for note in notes:
            print(f"note: {note}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
