"""Command-line front end.

Every command is a thin adapter over the engine.  Verdict commands print a
machine-readable ``verdict=...`` line first and human-readable detail after.
Exit status: 0 for holds/special, 1 for fails/exceptional, 2 for usage,
parse and input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import NotRotaBaxterError, TowerError, ZinbielError
from .fd import (
    IdentityKind,
    build,
    export_catalog,
    read_algebra,
    verify_catalog,
    verify_envelope,
    verify_identity,
)
from .fd.catalog import file_stem
from .fd.grassmann import envelope_holds
from .free import as_multidegree, expand, is_tortkara_element, p_map, super_shuffle, zinbiel_product
from .graded import Alphabet, format_scalar
from .rota_baxter import binomial_product, derived_product, derived_tower, is_rota_baxter, read_operator
from .speciality import IdealSpec, cohn_speciality_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Out:
    """Collects text lines and a JSON report; prints one of them at the end."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list = []
        self.report: dict = {}

    def line(self, text=""):
        self.lines.append(str(text))

    def emit(self, stream):
        if self.as_json:
            stream.write(json.dumps(self.report, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
        else:
            stream.write("".join(line + "\n" for line in self.lines))


def _alphabet(args) -> Alphabet:
    if args.alphabet_file:
        return Alphabet.parse(Path(args.alphabet_file).read_text())
    if not args.alphabet:
        raise ZinbielError("an alphabet is required (--alphabet or --alphabet-file)")
    return Alphabet.parse(args.alphabet)


def _algebra(args):
    if bool(args.algebra) == bool(args.entry):
        raise ZinbielError("give exactly one of --algebra FILE or --entry NAME")
    if args.algebra:
        return read_algebra(args.algebra)
    return build(args.entry)


def _constants(A) -> list:
    return [[i + 1, j + 1, k + 1, format_scalar(c)] for (i, j, k), c in sorted(A.constants.items())]


# commands

def cmd_expand(args, out):
    X = _alphabet(args)
    f = expand(args.expr, X)
    out.line(f)
    out.report = {"element": str(f)}
    return EXIT_OK


def cmd_shuffle(args, out):
    X = _alphabet(args)
    u, v = expand(args.left, X), expand(args.right, X)
    f = zinbiel_product(u, v) if args.zinbiel else super_shuffle(u, v)
    out.line(f)
    out.report = {"element": str(f), "product": "zinbiel" if args.zinbiel else "shuffle"}
    return EXIT_OK


def cmd_pmap(args, out):
    X = _alphabet(args)
    f = p_map(expand(args.expr, X))
    out.line(f)
    out.report = {"element": str(f)}
    return EXIT_OK


def cmd_is_special(args, out):
    X = _alphabet(args)
    f = expand(args.expr, X)
    ok = is_tortkara_element(f)
    out.line(f"verdict={'special' if ok else 'exceptional'}")
    out.line(f"special: {'true' if ok else 'false'}")
    out.line(f"element: {f}")
    out.line(f"p(element): {p_map(f)}")
    out.report = {"verdict": "special" if ok else "exceptional", "special": ok,
                  "element": str(f), "p_image": str(p_map(f))}
    return EXIT_OK if ok else EXIT_FAIL


def cmd_ideal_check(args, out):
    X = _alphabet(args)
    gens = [expand(g, X) for g in args.gens.split(";") if g.strip()]
    d = as_multidegree(args.degree)
    top = max((max(g.degrees) for g in gens if g), default=0)
    I = IdealSpec.of(gens, X, degree_bound=max(d.total, top) if args.degree_bound is None else args.degree_bound)
    v = cohn_speciality_check(I, d)
    out.line(f"verdict={v.verdict}")
    out.line(v)
    for key in ("ideal", "zinbiel_ideal", "intersection", "quotient"):
        out.line(f"dim {key}: {v.dimensions[key]}")
    out.report = {"verdict": v.verdict, "multidegree": str(d), "dimensions": dict(v.dimensions),
                  "witness": None if v.witness is None else str(v.witness)}
    return EXIT_OK if v.special else EXIT_FAIL


def cmd_verify(args, out):
    A = _algebra(args)
    kind = IdentityKind.parse(args.identity)
    v = verify_identity(A, kind)
    out.line(f"verdict={v.verdict}")
    out.line(v)
    out.report = {"verdict": v.verdict, "identity": kind.name, "algebra": A.name, "checked": v.checked,
                  "witness": None if v.holds else [i + 1 for i in v.witness],
                  "residual": None if v.holds else v.witness_text().split(" -> ", 1)[1]}
    return EXIT_OK if v.holds else EXIT_FAIL


def cmd_catalog(args, out):
    report = verify_catalog(envelope_n=None if args.no_envelope else args.n)
    if args.export:
        target = Path(args.export)
        target.mkdir(parents=True, exist_ok=True)
        for name, text in export_catalog().items():
            (target / (file_stem(name) + ".alg")).write_text(text)
    verdict = "holds" if report.ok else "fails"
    out.line(f"verdict={verdict}")
    for line in report.lines():
        out.line(line)
    out.report = {
        "verdict": verdict,
        "entries": [{"name": r.name, "tortkara": r.tortkara, "malcev": r.malcev, "lie": r.lie,
                     "envelope": r.envelope, "failures": dict(r.failures)} for r in report.results],
        "mismatches": [f"{n}: {m}" for n, m in report.mismatches],
    }
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_envelope(args, out):
    A = _algebra(args)
    verdicts = verify_envelope(A, args.n)
    ok = envelope_holds(verdicts)
    out.line(f"verdict={'holds' if ok else 'fails'}")
    for v in verdicts:
        out.line(v)
    out.report = {"verdict": "holds" if ok else "fails", "generators": args.n,
                  "checks": {v.kind.name: v.verdict for v in verdicts}}
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rb_tower(args, out):
    A = read_algebra(args.algebra)
    R = read_operator(args.operator, A.dim)
    rb = is_rota_baxter(A, R)
    if not rb.holds:
        out.line("verdict=fails")
        out.line(rb)
        out.report = {"verdict": "fails", "reason": str(rb)}
        return EXIT_FAIL
    Z = derived_product(A, R)
    target = IdentityKind.OddZinbiel if R.parity else IdentityKind.SuperZinbiel
    v = verify_identity(Z, target)
    levels = []
    if v.holds and not R.parity:
        try:
            levels = derived_tower(Z, R, args.levels)
        except TowerError as exc:
            out.line("verdict=fails")
            out.line(f"level {exc.level}: {exc}")
            out.report = {"verdict": "fails", "level": exc.level, "reason": str(exc)}
            return EXIT_FAIL
    binomial = [lv == binomial_product(A, R, n) for n, lv in enumerate(levels)]
    ok = v.holds and all(binomial)
    out.line(f"verdict={'holds' if ok else 'fails'}")
    out.line(f"operator parity: {'odd' if R.parity else 'even'}")
    out.line(f"derived product a o b = R(a)b: {v}")
    for n, lv in enumerate(levels):
        out.line(f"level {n}: Zinbiel and Rota-Baxter certified; binomial formula "
                 f"{'matches' if binomial[n] else 'differs'}")
        for i, j, k, c in _constants(lv):
            out.line(f"    e{i} o_{n} e{j} += {c} e{k}")
    out.report = {"verdict": "holds" if ok else "fails", "operator_parity": R.parity,
                  "derived": v.verdict, "identity": target.name,
                  "levels": [{"level": n, "binomial_matches": binomial[n], "constants": _constants(lv)}
                             for n, lv in enumerate(levels)]}
    return EXIT_OK if ok else EXIT_FAIL


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zinbiel", description="Exact computations in free Zinbiel "
                                "superalgebras and small Tortkara superalgebras.")
    p.add_argument("--json", action="store_true", help="emit a JSON report with sorted keys")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def alphabet_opts(sp):
        sp.add_argument("--alphabet", help="generators, e.g. 'x:odd,y:even'")
        sp.add_argument("--alphabet-file", help="file with one 'name : even|odd' per line")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    def algebra_opts(sp):
        sp.add_argument("--algebra", help="structure-constant file")
        sp.add_argument("--entry", help="catalog entry, e.g. 'T8_21' or 'T3_12(2)'")
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)

    sp = sub.add_parser("expand", help="expand an expression in the word basis")
    alphabet_opts(sp)
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("shuffle", help="super shuffle (or Zinbiel) product of two expressions")
    alphabet_opts(sp)
    sp.add_argument("--zinbiel", action="store_true", help="compute left o right instead")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.set_defaults(func=cmd_shuffle)

    sp = sub.add_parser("pmap", help="apply the p-map")
    alphabet_opts(sp)
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_pmap)

    sp = sub.add_parser("is-special", help="decide membership in the Tortkara subalgebra (p(f) = -f)")
    alphabet_opts(sp)
    sp.add_argument("expr")
    sp.set_defaults(func=cmd_is_special)

    sp = sub.add_parser("ideal-check", help="Cohn's criterion on one multidegree component")
    alphabet_opts(sp)
    sp.add_argument("--gens", required=True, help="';'-separated generator expressions")
    sp.add_argument("--degree", required=True, help="multidegree, e.g. 'x:2,y:2'")
    sp.add_argument("--degree-bound", type=int, help="saturation bound (default: the component's degree)")
    sp.set_defaults(func=cmd_ideal_check)

    sp = sub.add_parser("verify", help="check an identity on a structure-constant algebra")
    algebra_opts(sp)
    sp.add_argument("--identity", required=True,
                    help="one of " + ", ".join(k.name for k in IdentityKind))
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("catalog", help="verify the dimension 2 and 3 catalog")
    sp.add_argument("--n", type=int, default=4, help="Grassmann generators for the envelope check")
    sp.add_argument("--no-envelope", action="store_true")
    sp.add_argument("--export", metavar="DIR", help="also write every entry as a .alg file")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("envelope", help="classical identities on a truncated Grassmann envelope")
    algebra_opts(sp)
    sp.add_argument("--n", type=int, default=4)
    sp.set_defaults(func=cmd_envelope)

    sp = sub.add_parser("rb-tower", help="derived Zinbiel product and tower of a Rota-Baxter operator")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--operator", required=True)
    sp.add_argument("--levels", type=int, default=3)
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_rb_tower)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    out = _Out(args.json)
    try:
        status = args.func(args, out)
    except NotRotaBaxterError as exc:
        stdout.write(f"verdict=fails\n{exc}\n")
        return EXIT_FAIL
    except (ZinbielError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        stderr.write(f"zinbiel {args.command}: error: {msg}\n")
        return EXIT_USAGE
    out.emit(stdout)
    return status


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
