"""Command line front end: problem files in, verdicts and certificates out.

Problem files are JSON: {"equation": {"h": [poly, ...]}} or
{"wreath": {"generators": [{"H": poly, "b": 1}, ...]}}, where poly is
{"coeffs": [c0, c1, ...], "lowest": k} or a bare coefficient list
(lowest 0).  Coefficients are exact integers; decimal strings are
accepted, and emitted, for values a 53-bit double cannot hold.  A terse
text form also works for equation inputs: one polynomial per line,
ascending integer coefficients separated by spaces.

Wreath generators keep file order within each sign: the k-th "b": 1
entry is A_k, the k-th "b": -1 entry is B_k, and output words name them
that way ("A1 B2 ...").

Exit codes: 0 = Solvable / yes, 1 = Unsolvable / no, 2 = bad input or a
cap stopped the run before a verdict.  Reports go to stdout (JSON with
--json, line-oriented text otherwise), diagnostics to stderr.
"""

import argparse
import json
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from time import perf_counter

from . import nxsolve, wreath
from .errors import PosringError, SchemaError, TooLarge
from .nxsolve import WitnessTuple
from .polyring import IntPoly, LaurentPoly, laurent_normalize
from .realdec import RationalPoint

_INT_RE = re.compile(r"[+-]?[0-9]+\Z")
_BIG = 2 ** 53


@dataclass(frozen=True)
class ProblemFile:
    kind: str
    hs: tuple = None
    generators: object = None


def _int_from_json(value, where):
    if isinstance(value, bool):
        raise SchemaError("%s: expected an integer, got a boolean" % where)
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        if _INT_RE.match(value.strip()):
            return int(value)
        raise SchemaError("%s: %r is not a decimal integer" % (where, value))
    raise SchemaError("%s: expected an exact integer, got %r" % (where, value))


def _poly_fields(value, where):
    if isinstance(value, list):
        coeffs, lowest = value, 0
    elif isinstance(value, dict):
        if "coeffs" not in value:
            raise SchemaError("%s: polynomial object needs 'coeffs'" % where)
        extra = set(value) - {"coeffs", "lowest"}
        if extra:
            raise SchemaError("%s: unknown field %s" % (where, sorted(extra)[0]))
        coeffs = value["coeffs"]
        lowest = _int_from_json(value.get("lowest", 0), where + ".lowest")
        if not isinstance(coeffs, list):
            raise SchemaError("%s: 'coeffs' must be a list" % where)
    else:
        raise SchemaError("%s: expected a polynomial, got %r" % (where, value))
    return [_int_from_json(c, "%s.coeffs[%d]" % (where, i))
            for i, c in enumerate(coeffs)], lowest


def _intpoly_from_json(value, where):
    coeffs, lowest = _poly_fields(value, where)
    if lowest < 0 and any(coeffs):
        raise SchemaError("%s: equation polynomials cannot have negative exponents"
                          % where)
    return IntPoly([0] * max(lowest, 0) + coeffs)


def _laurent_from_json(value, where):
    coeffs, lowest = _poly_fields(value, where)
    return LaurentPoly(coeffs, lowest)


def _enc_int(n):
    return str(n) if abs(n) >= _BIG else n


def poly_to_json(p):
    """JSON object for an IntPoly or LaurentPoly, big values as strings."""
    if isinstance(p, LaurentPoly):
        return {"coeffs": [_enc_int(c) for c in p.body.coeffs], "lowest": p.lowest}
    return {"coeffs": [_enc_int(c) for c in p.coeffs], "lowest": 0}


def parse_input(data):
    """ProblemFile from JSON bytes, or terse text rows for equations."""
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError("input is not UTF-8: %s" % exc) from None
    body = data.strip()
    if not body:
        raise SchemaError("empty input")
    if body.startswith("{"):
        return _parse_json(body)
    return _parse_text(body)


def _parse_json(body):
    try:
        doc = json.loads(body)
    except ValueError as exc:
        raise SchemaError("not valid JSON: %s" % exc) from None
    kinds = [k for k in ("equation", "wreath") if k in doc]
    if len(kinds) != 1:
        raise SchemaError("need exactly one of 'equation' or 'wreath' at top level")
    if kinds[0] == "equation":
        eq = doc["equation"]
        if not isinstance(eq, dict) or "h" not in eq:
            raise SchemaError("'equation' must be an object with an 'h' list")
        rows = eq["h"]
        if not isinstance(rows, list) or not rows:
            raise SchemaError("equation.h must be a nonempty list of polynomials")
        hs = tuple(_intpoly_from_json(x, "equation.h[%d]" % i)
                   for i, x in enumerate(rows))
        return ProblemFile("equation", hs=hs)
    wr = doc["wreath"]
    if not isinstance(wr, dict) or "generators" not in wr:
        raise SchemaError("'wreath' must be an object with a 'generators' list")
    entries = wr["generators"]
    if not isinstance(entries, list):
        raise SchemaError("wreath.generators must be a list")
    plus, minus = [], []
    for i, entry in enumerate(entries):
        where = "generators[%d]" % i
        if not isinstance(entry, dict) or "H" not in entry or "b" not in entry:
            raise SchemaError("%s: each generator needs 'H' and 'b'" % where)
        stray = set(entry) - {"H", "b"}
        if stray:
            raise SchemaError("%s: unknown field %r" % (where, sorted(stray)[0]))
        b = _int_from_json(entry["b"], where + ".b")
        if b not in (1, -1):
            raise SchemaError("%s.b must be 1 or -1, got %r" % (where, b))
        h = _laurent_from_json(entry["H"], where + ".H")
        (plus if b == 1 else minus).append(h)
    gens = wreath.GeneratorSet(tuple(plus), tuple(minus))
    return ProblemFile("wreath", generators=gens)


def _parse_text(body):
    hs = []
    for lineno, line in enumerate(body.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        row = []
        for tok in line.split():
            if not _INT_RE.match(tok):
                raise SchemaError("line %d: %r is not an integer" % (lineno, tok))
            row.append(int(tok))
        hs.append(IntPoly(row))
    return ProblemFile("equation", hs=tuple(hs))


def problem_to_json(pf):
    """Dict form of a ProblemFile; parse_input inverts it exactly."""
    if pf.kind == "equation":
        return {"equation": {"h": [poly_to_json(h) for h in pf.hs]}}
    gens = pf.generators
    entries = [{"H": poly_to_json(h), "b": 1} for h in gens.plus]
    entries += [{"H": poly_to_json(h), "b": -1} for h in gens.minus]
    return {"wreath": {"generators": entries}}


def emit_output(report, fmt="json"):
    """Serialize a report dict; text mode renders flat 'key: value' lines."""
    if fmt == "json":
        return (json.dumps(report, indent=2) + "\n").encode("ascii")
    lines = []
    for key, value in report.items():
        lines.append("%s: %s" % (key, _text_value(value)))
    return ("\n".join(lines) + "\n").encode("ascii")


def _text_value(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, (list, tuple)):
        return " ".join(_text_value(v) for v in value)
    if isinstance(value, dict):
        return json.dumps(value)
    return str(value)


# ------------------------------------------------------------- commands


def _read_file(path):
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _sample_json(sample):
    if isinstance(sample, RationalPoint):
        return str(sample.value)
    iv = sample.interval
    return {"interval": [str(iv.lo), str(iv.hi)]}


def _sample_text(sample):
    if isinstance(sample, RationalPoint):
        return "t = %s" % sample.value
    iv = sample.interval
    return "t in (%s, %s]" % (iv.lo, iv.hi)


def cmd_solve(args):
    pf = parse_input(_read_file(args.file))
    if pf.kind != "equation":
        raise SchemaError("solve expects an 'equation' problem file")
    t0 = perf_counter()
    decision = nxsolve.decide(list(pf.hs), want_witness=args.witness,
                              degree_cap=args.degree_cap)
    elapsed = round(perf_counter() - t0, 6)

    report = {"status": decision.status}
    lines = ["status: %s" % decision.status]
    if decision.status == nxsolve.UNSOLVABLE:
        cert = decision.certificate
        sv = cert.sign_vector
        verified = nxsolve.verify_certificate(cert)
        report["reason"] = decision.unsolvable_reason
        report["certificate"] = {
            "sample": _sample_json(sv.sample),
            "signs": list(sv.signs),
            "x_divisions": cert.x_divisions,
            "gcd_removed": poly_to_json(cert.gcd_removed),
            "verified": verified,
        }
        lines.append("reason: %s" % decision.unsolvable_reason)
        lines.append("sample: %s" % _sample_text(sv.sample))
        lines.append("signs: %s" % " ".join("%+d" % s if s else "0" for s in sv.signs))
        lines.append("certificate verified: %s" % _text_value(verified))
    elif args.witness:
        if decision.witness_status == nxsolve.WITNESS_FOUND:
            fs = decision.certificate.fs
            verified = nxsolve.verify_witness(list(pf.hs), list(fs))
            report["witness"] = [poly_to_json(f) for f in fs]
            report["witness_verified"] = verified
            lines.append("witness: %s" % "; ".join(str(f) for f in fs))
            lines.append("witness verified: %s" % _text_value(verified))
        else:
            report["witness"] = None
            lines.append("witness: not found within degree cap %d" % args.degree_cap)
        report["witness_status"] = decision.witness_status
    report["timing"] = {"seconds": elapsed}

    _write_report(args, report, lines)
    return 0 if decision.status == nxsolve.SOLVABLE else 1


def _decide_cover_task(task):
    pairs, rows, degree_cap = task
    decision = nxsolve.decide([IntPoly(r) for r in rows], want_witness=True,
                              degree_cap=degree_cap)
    if decision.status != nxsolve.SOLVABLE:
        return None
    if decision.witness_status == nxsolve.WITNESS_FOUND:
        return [list(f.coeffs) for f in decision.certificate.fs]
    return "capped"


def _group_parallel(gens, degree_cap, cover_cap, jobs):
    """is_group with per-cover decisions fanned out; first cover wins.

    Results are consumed in enumeration order, so the verdict and the
    chosen cover match the serial path exactly.
    """
    if not gens.plus or not gens.minus:
        return False, None
    hij = wreath.build_hij(gens)
    covers = list(wreath.enumerate_covers(range(1, len(gens.plus) + 1),
                                          range(1, len(gens.minus) + 1),
                                          cap=cover_cap))
    tasks = []
    for cover in covers:
        hs, _ = laurent_normalize([hij[p] for p in cover.pairs])
        tasks.append((cover.pairs, [list(h.coeffs) for h in hs], degree_cap))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(_decide_cover_task, t) for t in tasks]
        winner = None
        for cover, fut in zip(covers, futures):
            result = fut.result()
            if result is None:
                continue
            if result == "capped":
                winner = (cover, None)
            else:
                winner = (cover, WitnessTuple(fs=tuple(IntPoly(r) for r in result)))
            for other in futures:
                other.cancel()
            break
    if winner is None:
        return False, None
    return True, winner


def cmd_wreath(args):
    pf = parse_input(_read_file(args.file))
    if pf.kind != "wreath":
        raise SchemaError("wreath expects a 'wreath' problem file")
    gens = pf.generators
    t0 = perf_counter()

    if args.question == "group":
        if args.jobs > 1:
            ok, info = _group_parallel(gens, args.degree_cap, args.cover_cap,
                                       args.jobs)
        else:
            ok, info = wreath.is_group(gens, args.degree_cap, args.cover_cap)
        elapsed = round(perf_counter() - t0, 6)
        report = {"is_group": ok}
        lines = ["is group: %s" % _text_value(ok)]
        if ok:
            cover, witness = info
            report["cover"] = [list(p) for p in cover.pairs]
            lines.append("cover: %s" % " ".join("(%d,%d)" % p for p in cover.pairs))
            if witness is not None:
                report["witness"] = [poly_to_json(f) for f in witness.fs]
                lines.append("witness: %s" % "; ".join(str(f) for f in witness.fs))
            else:
                report["witness"] = None
                lines.append("witness: not found within degree cap %d"
                             % args.degree_cap)
        report["timing"] = {"seconds": elapsed}
        _write_report(args, report, lines)
        return 0 if ok else 1

    found, word = wreath.identity_witness_word(
        gens, args.subset_cap, args.degree_cap, args.cover_cap,
        scale_power=args.scale_power)
    elapsed = round(perf_counter() - t0, 6)

    if args.question == "identity":
        report = {"identity_in_semigroup": found}
        lines = ["identity in semigroup: %s" % _text_value(found)]
        if found and word is not None:
            verified = wreath.word_product(gens, word) == wreath.WreathElement.identity()
            report["word"] = str(word)
            report["verified"] = verified
            lines.append("word: %s" % word)
            lines.append("product = identity: %s" % _text_value(verified))
        elif found:
            report["word"] = None
            lines.append("word: not synthesized (degree cap %d)" % args.degree_cap)
        report["timing"] = {"seconds": elapsed}
        _write_report(args, report, lines)
        return 0 if found else 1

    # question == "word"
    if not found:
        report = {"identity_in_semigroup": False, "word": None,
                  "timing": {"seconds": elapsed}}
        _write_report(args, report, ["identity in semigroup: false"])
        return 1
    if word is None:
        print("degree cap %d exhausted before a witness; no word synthesized"
              % args.degree_cap, file=sys.stderr)
        return 2
    verified = wreath.word_product(gens, word) == wreath.WreathElement.identity()
    report = {"word": str(word), "verified": verified,
              "timing": {"seconds": elapsed}}
    _write_report(args, report, [str(word),
                                 "product = identity: %s" % _text_value(verified)])
    return 0


def _write_report(args, report, lines):
    if args.fmt == "json":
        sys.stdout.buffer.write(emit_output(report, "json"))
    else:
        sys.stdout.write("\n".join(lines) + "\n")
    sys.stdout.flush()


# ----------------------------------------------------------- entry point


def _add_format_flags(p):
    p.add_argument("--json", dest="fmt", action="store_const", const="json",
                   help="machine-readable report on stdout")
    p.add_argument("--text", dest="fmt", action="store_const", const="text",
                   help="line-oriented report (default)")
    p.set_defaults(fmt="text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="posring",
        description="Exact decisions for sum f_i*h_i = 0 over nonzero "
                    "N[X] tuples, and group/identity problems for wreath "
                    "product generators of height +-1.")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="decide an equation problem file")
    solve.add_argument("file", help="problem file path, or - for stdin")
    solve.add_argument("--witness", action="store_true",
                       help="also search for an explicit witness tuple")
    solve.add_argument("--degree-cap", type=int, default=None, metavar="N",
                       help="max witness degree per f_i (default %d)"
                            % nxsolve.DEGREE_CAP)
    _add_format_flags(solve)
    solve.set_defaults(func=cmd_solve)

    wre = sub.add_parser("wreath", help="group/identity questions for generators")
    wre.add_argument("question", choices=("group", "identity", "word"))
    wre.add_argument("file", help="problem file path, or - for stdin")
    wre.add_argument("--degree-cap", type=int, default=None, metavar="N",
                     help="max witness degree (default %d)" % nxsolve.DEGREE_CAP)
    wre.add_argument("--cover-cap", type=int, default=wreath.COVER_CAP, metavar="N",
                     help="max |I x J| for cover enumeration (default %d)"
                          % wreath.COVER_CAP)
    wre.add_argument("--subset-cap", type=int, default=wreath.SUBSET_CAP, metavar="N",
                     help="max generator count for subset scans (default %d)"
                          % wreath.SUBSET_CAP)
    wre.add_argument("--scale-power", type=int, default=None, metavar="M",
                     help="override the synthesis (1+X)^m exponent")
    wre.add_argument("--jobs", type=int, default=1, metavar="N",
                     help="parallel workers for cover decisions (group only)")
    _add_format_flags(wre)
    wre.set_defaults(func=cmd_wreath)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.degree_cap is None:
        env = os.environ.get("POSRING_DEGREE_CAP", "")
        if env:
            if not _INT_RE.match(env.strip()):
                print("POSRING_DEGREE_CAP is not an integer: %r" % env,
                      file=sys.stderr)
                return 2
            args.degree_cap = int(env)
        else:
            args.degree_cap = nxsolve.DEGREE_CAP
    if getattr(args, "jobs", 1) < 1:
        print("--jobs must be at least 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except TooLarge as exc:
        print("cap exceeded: %s" % exc, file=sys.stderr)
        return 2
    except SchemaError as exc:
        print("input error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except PosringError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("cannot read input: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
