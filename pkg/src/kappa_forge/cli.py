"""Command-line front end.

Subcommands map one-to-one onto module operations (adams --certify runs
the short certificate composition):

  sigma          evaluate a class monomial against circle weights
  localize       fixed-point localization over the circle, from data files
  pullback-su2   localization promoted to SU(2), with the normalized b_i
  theorem-a      integrality / gcd-power-of-2 verdict on a b-vector
  adams          rescale a b-vector by k^(2i); --certify emits the
                 non-kinetic certificate
  su2-restrict   restrict a real SU(2)-representation to the maximal torus
  su2-realize    find a representation with the given torus weights
  betti          feasibility of fixed-set Betti sums
  catalog        generate the worked example families

Exit status: 0 for every computed verdict (ruled_out, infeasible and
not-applicable included), 1 for domain errors, 2 for parse or validation
errors.  --format json|text selects the encoding; the environment variable
KAPPA_FORGE_FORMAT supplies the default.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .catalog import s2xs2_family, wg_hypothesis_report
from .errors import DomainError, ParseError
from .localization import (
    C2,
    GAMMA,
    compare_expected,
    kappa_class_label,
    localize_circle,
    pullback_su2,
    read_fixed_point_file,
    validate_fixed_data,
)
from .obstruction import (
    BVector,
    Certificate,
    HypothesisFlags,
    adams_transform,
    betti_feasible,
    nonkinetic_certificate,
    theorem_a_check,
)
from .su2rep import parse_real_rep, parse_weight_multiset, realize_weights, restrict_to_torus
from .symalg import parse_class_monomial, sigma_eval

FORMAT_ENV = "KAPPA_FORGE_FORMAT"

_FLAG_TOKENS = {
    "rationally-odd": "rationally_odd",
    "neg-euler": "negative_euler_char",
    "nontrivial-action": "nontrivial_action_assumed",
}


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _resolve_format(args) -> str:
    fmt = args.format or os.environ.get(FORMAT_ENV) or "text"
    if fmt not in ("text", "json"):
        raise ParseError(
            f"bad output format '{fmt}' (expected 'text' or 'json')"
        )
    return fmt


def _emit(args, payload, lines) -> None:
    if _resolve_format(args) == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _parse_int_list(text: str, what: str) -> list[int]:
    out = []
    for token in text.split(","):
        token = token.strip()
        try:
            out.append(int(token))
        except ValueError:
            raise ParseError(f"bad {what} '{token}'") from None
    if not out:
        raise ParseError(f"empty {what} list")
    return out


def _parse_fraction_list(text: str) -> list[Fraction]:
    out = []
    for token in text.split(","):
        token = token.strip()
        try:
            out.append(Fraction(token))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad rational '{token}'") from None
    if not out:
        raise ParseError("empty rational list")
    return out


def _parse_flags(text) -> HypothesisFlags:
    if text is None:
        _warn(
            "hypothesis flags not given; defaulting to "
            "rationally-odd,neg-euler,nontrivial-action. The verdict "
            "obstructs an action only when these actually hold."
        )
        return HypothesisFlags.all_true()
    values = {name: False for name in _FLAG_TOKENS.values()}
    for token in text.split(","):
        token = token.strip()
        if token not in _FLAG_TOKENS:
            raise ParseError(
                f"unknown hypothesis flag '{token}' (expected "
                + ", ".join(sorted(_FLAG_TOKENS))
                + ")"
            )
        values[_FLAG_TOKENS[token]] = True
    return HypothesisFlags(**values)


def _reason_payload(reason) -> dict:
    payload = {"kind": reason.kind}
    if reason.kind == "non_integer":
        payload["index"] = reason.detail
    elif reason.kind == "gcd_has_odd_prime":
        payload["prime"] = reason.detail
    return payload


def _load_file(path):
    loaded = read_fixed_point_file(path)
    diagnostics = validate_fixed_data(loaded.data)
    errors = [d for d in diagnostics if d.severity == "error"]
    if errors:
        raise ParseError(f"'{path}': " + "; ".join(d.message for d in errors))
    notes = [f"{path}: {d.message}" for d in diagnostics if d.severity == "info"]
    return loaded, notes


def _map_inputs(args, worker):
    inputs = list(args.input)
    jobs = getattr(args, "jobs", 1) or 1
    if jobs > 1 and len(inputs) > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, inputs))
    return [worker(path) for path in inputs]


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def cmd_sigma(args) -> int:
    weights = _parse_int_list(args.weights, "weight")
    monomial = parse_class_monomial(args.cls, len(weights))
    value = sigma_eval(monomial, weights)
    payload = {
        "class": str(monomial),
        "fiber_half_dim": len(weights),
        "sigma": value,
        "weights": weights,
    }
    _emit(args, payload, [str(value)])
    return 0


def cmd_localize(args) -> int:
    multi = len(args.input) > 1

    def worker(path):
        loaded, notes = _load_file(path)
        n = loaded.data.fiber_half_dim
        prefix = f"{path}: " if multi else ""
        if args.cls is not None:
            monomial = parse_class_monomial(args.cls, n)
            kv = localize_circle(loaded.data, monomial)
            label = kappa_class_label(monomial)
            payload = {
                "class": str(monomial),
                "coefficient": str(kv.coefficient),
                "generator": GAMMA,
                "input": str(path),
                "kappa_class": label,
                "power": kv.generator_power,
            }
            lines = [
                f"{prefix}kappa[{label}] = {kv.coefficient} * gamma^{kv.generator_power}"
            ]
            return payload, lines, True, notes
        if loaded.expected is None:
            raise ParseError(
                f"'{path}': no --class given and the file carries no "
                "expected annotations"
            )
        comparisons = compare_expected(loaded.data, loaded.expected)
        results = []
        lines = []
        ok = True
        for comp in comparisons:
            label = kappa_class_label(comp.expected.class_monomial)
            status = "ok" if comp.matches else "MISMATCH"
            ok = ok and comp.matches
            lines.append(
                f"{prefix}kappa[{label}] = {comp.computed.coefficient} * "
                f"{comp.expected.generator}^{comp.computed.generator_power} "
                f"(expected {comp.expected.coefficient}: {status})"
            )
            results.append(
                {
                    "class": str(comp.expected.class_monomial),
                    "computed": str(comp.computed.coefficient),
                    "expected": str(comp.expected.coefficient),
                    "generator": comp.expected.generator,
                    "kappa_class": label,
                    "matches": comp.matches,
                    "power": comp.computed.generator_power,
                }
            )
        payload = {"checks": results, "input": str(path), "ok": ok}
        return payload, lines, ok, notes

    results = _map_inputs(args, worker)
    for _, _, _, notes in results:
        for note in notes:
            print(f"note: {note}", file=sys.stderr)
    payload = results[0][0] if len(results) == 1 else [r[0] for r in results]
    lines = [line for r in results for line in r[1]]
    _emit(args, payload, lines)
    return 0 if all(r[2] for r in results) else 1


def cmd_pullback_su2(args) -> int:
    multi = len(args.input) > 1

    def worker(path):
        loaded, notes = _load_file(path)
        kv, b_i = pullback_su2(loaded.data, args.i)
        label = kappa_class_label(kv.class_monomial)
        prefix = f"{path}: " if multi else ""
        payload = {
            "b_i": str(b_i),
            "class": str(kv.class_monomial),
            "coefficient": str(kv.coefficient),
            "generator": C2,
            "i": args.i,
            "input": str(path),
            "kappa_class": label,
            "power": kv.generator_power,
        }
        lines = [
            f"{prefix}kappa[{label}] = {kv.coefficient} * c2^{kv.generator_power}",
            f"{prefix}b_{args.i} = {b_i}",
        ]
        return payload, lines, notes

    results = _map_inputs(args, worker)
    for _, _, notes in results:
        for note in notes:
            print(f"note: {note}", file=sys.stderr)
    payload = results[0][0] if len(results) == 1 else [r[0] for r in results]
    lines = [line for r in results for line in r[1]]
    _emit(args, payload, lines)
    return 0


def cmd_theorem_a(args) -> int:
    b = BVector.of(_parse_fraction_list(args.b))
    flags = _parse_flags(args.flags)
    verdict = theorem_a_check(b, flags)
    payload = {
        "applicable": verdict.applicable,
        "b": [str(x) for x in b],
        "reasons": [_reason_payload(r) for r in verdict.reasons],
        "status": verdict.status,
    }
    lines = [f"verdict: {verdict.status}"]
    lines.extend(f"reason: {r}" for r in verdict.reasons)
    if not verdict.applicable:
        lines.append(
            "note: hypothesis flags incomplete; this is arithmetic only, "
            "not an obstruction"
        )
    _emit(args, payload, lines)
    return 0


def cmd_adams(args) -> int:
    b = BVector.of(_parse_fraction_list(args.b))
    if not args.certify:
        transformed = adams_transform(args.k, b)
        payload = {
            "b": [str(x) for x in b],
            "b_transformed": [str(x) for x in transformed],
            "k": args.k,
        }
        _emit(args, payload, [str(transformed)])
        return 0
    flags = _parse_flags(args.flags)
    result = nonkinetic_certificate(b, args.k, flags)
    if isinstance(result, Certificate):
        lines = [
            "certificate: non-kinetic",
            f"k = {result.k}",
            f"witness prime = {result.witness_prime}",
            f"gcd = {result.gcd}",
            f"b_base = {result.b_base}",
            f"b_transformed = {result.b_transformed}",
        ]
        _emit(args, result.to_json_dict(), lines)
        return 0
    payload = {"not_applicable": result.reason}
    if result.gcd is not None:
        payload["gcd"] = result.gcd
    _emit(args, payload, [f"not applicable: {result.reason}"])
    return 0


def cmd_su2_restrict(args) -> int:
    rep = parse_real_rep(args.rep)
    weights = restrict_to_torus(rep)
    payload = {"rep": str(rep), "weights": list(weights.entries)}
    _emit(args, payload, [str(weights)])
    return 0


def cmd_su2_realize(args) -> int:
    weights = parse_weight_multiset(args.weights)
    rep = realize_weights(weights)
    payload = {
        "feasible": rep is not None,
        "rep": None if rep is None else str(rep),
        "weights": list(weights.entries),
    }
    _emit(args, payload, [str(rep) if rep is not None else "infeasible"])
    return 0


def cmd_betti(args) -> int:
    result = betti_feasible(args.w_even, args.w_odd, args.m_even, args.m_odd)
    payload = {
        "feasible": result.feasible,
        "k": result.k,
        "m_even": args.m_even,
        "m_odd": args.m_odd,
        "w_even": args.w_even,
        "w_odd": args.w_odd,
    }
    if result.feasible:
        lines = [f"feasible: k = {result.k}"]
    else:
        lines = [
            "infeasible: the even and odd Betti sums must drop by the same "
            "non-negative amount"
        ]
    _emit(args, payload, lines)
    return 0


def cmd_catalog_s2xs2(args) -> int:
    entry = s2xs2_family(args.k)
    if args.out is None:
        print(json.dumps(entry.to_payload(), indent=2, sort_keys=True))
        return 0
    entry.write(args.out)
    expected_lines = [
        f"expected kappa[{kappa_class_label(ev.class_monomial)}] = "
        f"{ev.coefficient} * {ev.generator}^{ev.power}"
        for ev in entry.expected
    ]
    payload = {
        "expected": [
            {
                "class": str(ev.class_monomial),
                "coefficient": str(ev.coefficient),
                "generator": ev.generator,
                "power": ev.power,
            }
            for ev in entry.expected
        ],
        "label": entry.label,
        "out": str(args.out),
    }
    _emit(args, payload, [f"wrote {args.out}"] + expected_lines)
    return 0


def cmd_catalog_wg(args) -> int:
    report = wg_hypothesis_report(args.n, args.g)
    payload = {
        "betti": list(report.betti),
        "euler_char": report.euler_char,
        "fixed_set": report.fixed_set,
        "fixed_set_nonempty": report.fixed_set_nonempty,
        "g": report.g,
        "hypotheses": {
            "rationally_odd": report.hypotheses.rationally_odd,
            "negative_euler_char": report.hypotheses.negative_euler_char,
            "nontrivial_action_assumed": report.hypotheses.nontrivial_action_assumed,
        },
        "manifold": report.manifold,
        "n": report.n,
        "rationally_odd": report.rationally_odd,
        "theorems_apply": report.theorems_apply,
    }
    betti_text = ",".join(str(x) for x in report.betti)
    lines = [
        f"{report.manifold} (dimension {2 * report.n})",
        f"euler characteristic: {report.euler_char}",
        f"rationally odd: {'yes' if report.rationally_odd else 'no'} (betti {betti_text})",
        f"building-block fixed set: {report.fixed_set} (non-empty)",
    ]
    if report.theorems_apply:
        lines.append("obstruction hypotheses: satisfied")
    else:
        lines.append(
            "obstruction hypotheses: not satisfied "
            f"(euler characteristic {report.euler_char} is not negative)"
        )
    _emit(args, payload, lines)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    fmt_parent = argparse.ArgumentParser(add_help=False)
    fmt_parent.add_argument(
        "--format",
        choices=("text", "json"),
        default=None,
        help=f"output encoding (default from ${FORMAT_ENV}, else text)",
    )

    parser = argparse.ArgumentParser(
        prog="kappa-forge",
        description="Exact kappa-class localization and the action obstruction test.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser(
        "sigma", parents=[fmt_parent], help="evaluate a class monomial on weights"
    )
    p.add_argument("--class", dest="cls", required=True, help="e.g. p1, e*p1^2")
    p.add_argument("--weights", required=True, help="comma-separated integers")
    p.set_defaults(handler=cmd_sigma)

    p = sub.add_parser(
        "localize",
        parents=[fmt_parent],
        help="localize kappa classes over the circle from fixed-point files",
    )
    p.add_argument("--input", required=True, nargs="+", help="fixed-point data file(s)")
    p.add_argument(
        "--class",
        dest="cls",
        default=None,
        help="class monomial; omit to verify the file's expected annotations",
    )
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for many files")
    p.set_defaults(handler=cmd_localize)

    p = sub.add_parser(
        "pullback-su2",
        parents=[fmt_parent],
        help="kappa[e*p_i] over SU(2) with the normalized b_i",
    )
    p.add_argument("--input", required=True, nargs="+", help="fixed-point data file(s)")
    p.add_argument("--i", type=int, required=True, help="Pontryagin index")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers for many files")
    p.set_defaults(handler=cmd_pullback_su2)

    p = sub.add_parser(
        "theorem-a", parents=[fmt_parent], help="obstruction verdict on a b-vector"
    )
    p.add_argument("--b", required=True, help="comma-separated rationals, e.g. 9,18")
    p.add_argument(
        "--flags",
        default=None,
        help="comma list from rationally-odd,neg-euler,nontrivial-action "
        "(default: all, with a warning)",
    )
    p.set_defaults(handler=cmd_theorem_a)

    p = sub.add_parser(
        "adams",
        parents=[fmt_parent],
        help="rescale a b-vector by k^(2i); --certify emits the non-kinetic certificate",
    )
    p.add_argument("--k", type=int, required=True, help="odd integer")
    p.add_argument("--b", required=True, help="comma-separated rationals")
    p.add_argument("--certify", action="store_true", help="run the certificate pipeline")
    p.add_argument(
        "--flags",
        default=None,
        help="hypothesis flags for --certify (default: all, with a warning)",
    )
    p.set_defaults(handler=cmd_adams)

    p = sub.add_parser(
        "su2-restrict",
        parents=[fmt_parent],
        help="torus weights of a real SU(2)-representation",
    )
    p.add_argument("--rep", required=True, help="e.g. V3+V4+2*V1")
    p.set_defaults(handler=cmd_su2_restrict)

    p = sub.add_parser(
        "su2-realize",
        parents=[fmt_parent],
        help="find a real representation with the given torus weights",
    )
    p.add_argument("--weights", required=True, help="comma-separated integers")
    p.set_defaults(handler=cmd_su2_realize)

    p = sub.add_parser(
        "betti", parents=[fmt_parent], help="fixed-set Betti sum feasibility"
    )
    p.add_argument("--w-even", type=int, required=True)
    p.add_argument("--w-odd", type=int, required=True)
    p.add_argument("--m-even", type=int, required=True)
    p.add_argument("--m-odd", type=int, required=True)
    p.set_defaults(handler=cmd_betti)

    p = sub.add_parser(
        "catalog", parents=[fmt_parent], help="generate the worked example families"
    )
    catalog_sub = p.add_subparsers(dest="family", required=True)

    q = catalog_sub.add_parser(
        "s2xs2", parents=[fmt_parent], help="sphere-bundle double family"
    )
    q.add_argument("--k", type=int, required=True, help="even Euler number")
    q.add_argument("--out", default=None, help="write the data file here")
    q.set_defaults(handler=cmd_catalog_s2xs2)

    q = catalog_sub.add_parser(
        "wg", parents=[fmt_parent], help="connected-sum hypothesis report"
    )
    q.add_argument("--n", type=int, required=True, help="odd integer >= 3")
    q.add_argument("--g", type=int, required=True, help="number of summands")
    q.set_defaults(handler=cmd_catalog_wg)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
