"""Command-line front end.

Machine-readable JSON goes to stdout, a one-line human summary to stderr.
Exit codes: 0 all checks pass, 1 check failures, 2 usage errors, 3 internal
cross-check failures.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import appendix_congruence, intlinalg, pivots, slq2_tensor, strings, weyl, wiring
from .strings import CrossCheckFailed

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _datum(args):
    return weyl.type_a(args.rank)


def _word(args):
    return weyl.parse_word(args.word)


def _emit(payload, summary):
    json.dump(payload, sys.stdout, indent=2)
    sys.stdout.write("\n")
    print(summary, file=sys.stderr)


def cmd_analyze(args):
    datum = _datum(args)
    word = _word(args)
    w1, w2, supp = weyl.split_double_word(datum, word)
    inv = strings.invariants(datum, word)
    psi_ok, psi_factors = strings.psi_check(datum, word)
    payload = {
        "word": weyl.format_word(word),
        "w1": weyl.format_word(w1),
        "w2": weyl.format_word(w2),
        "supp": sorted(supp),
        "m": inv.m,
        "s": inv.s,
        "n": inv.n_dim,
        "d": inv.d,
        "k": inv.k,
        "rank_H": inv.rank_H,
        "multipliers": inv.multipliers,
        "psi_ok": psi_ok,
        "psi_factors": psi_factors,
    }
    _emit(payload, f"analyze {weyl.format_word(word) or '(empty)'}: "
                   f"m={inv.m} s={inv.s} n={inv.n_dim} d={inv.d} k={inv.k}")
    return EXIT_OK if psi_ok else EXIT_CHECK_FAILED


def cmd_diagram(args):
    datum = _datum(args)
    word = _word(args)
    diagram = wiring.build_diagram(datum.n, word)
    if args.format == "ascii":
        sys.stdout.write(wiring.render_ascii(diagram) + "\n")
    elif args.format == "svg":
        sys.stdout.write(wiring.render_svg(diagram) + "\n")
    else:
        payload = {
            "levels": diagram.levels,
            "columns": [{"level": c, "sign": s} for c, s in diagram.columns],
        }
        _emit(payload, f"diagram with {len(diagram.word)} columns")
        return EXIT_OK
    print(f"diagram with {len(diagram.word)} columns", file=sys.stderr)
    return EXIT_OK


def cmd_image(args):
    datum = _datum(args)
    word = _word(args)
    if args.minor:
        rows, cols = args.minor.split("|")
        elem = wiring.minor_image(
            datum, word, [int(c) for c in rows], [int(c) for c in cols]
        )
        label = f"minor({args.minor})"
    elif args.expr:
        elem = wiring.expression_image(datum, word, args.expr)
        label = args.expr
    else:
        print("image needs --expr or --minor", file=sys.stderr)
        return EXIT_USAGE
    _emit(elem.to_json(), f"{label}: {len(elem.terms)} term(s)")
    return EXIT_OK


def cmd_pivots(args):
    datum = weyl.type_a(args.rank)
    if args.action == "table1":
        suite = pivots.table1_suite(datum)
        payload = [
            {"cell": row["cell"], **row["report"].to_json()} for row in suite
        ]
        ok = all(row["report"].passed for row in suite)
        npass = sum(1 for row in suite if row["report"].passed)
        _emit(payload, f"table1: {npass}/{len(suite)} rows pass")
        return EXIT_OK if ok else EXIT_CHECK_FAILED
    if args.action == "check":
        with open(args.cert) as fh:
            cert = pivots.PivotCertificate.from_json(json.load(fh))
        report = pivots.check_certificate(datum, cert)
        _emit(report.to_json(), f"certificate: {'PASS' if report.passed else 'FAIL'}")
        return EXIT_OK if report.passed else EXIT_CHECK_FAILED
    # auto
    word = _word(args)
    cert = pivots.auto_certificate_disjoint(datum, word)
    if cert is None:
        _emit({"word": args.word, "certificate": None},
              "supports intersect; no automatic certificate")
        return EXIT_CHECK_FAILED
    report = pivots.check_certificate(datum, cert)
    payload = {"certificate": cert.to_json(), "report": report.to_json()}
    _emit(payload, f"auto certificate: {'PASS' if report.passed else 'FAIL'}")
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def cmd_normal_form(args):
    if args.file:
        with open(args.file) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    text = text.strip()
    if text.startswith("["):
        M = json.loads(text)
    else:
        M = intlinalg.parse_matrix_text(text)
    if args.kind == "smith":
        U, Dm, V = intlinalg.smith_normal_form(M)
        payload = {
            "invariant_factors": [Dm[i][i] for i in range(min(len(Dm), len(Dm[0]) if Dm else 0))],
            "U": U,
            "D": Dm,
            "V": V,
        }
        _emit(payload, f"smith: factors {payload['invariant_factors']}")
    else:
        nf = intlinalg.skew_normal_form(M)
        payload = {"multipliers": nf.multipliers, "zero_dim": nf.zero_dim, "Q": nf.Q}
        _emit(payload, f"skew: multipliers {nf.multipliers}, radical {nf.zero_dim}")
    return EXIT_OK


def _parse_params(text, m):
    """--params 'g1=-1:1,g3=2:0' meaning gamma_k = rational:q-exponent."""
    params = [None] * m
    if not text:
        return params
    for piece in text.split(","):
        name, _, value = piece.partition("=")
        name = name.strip()
        if not name.startswith("g"):
            raise ValueError(f"bad parameter name {name!r}")
        k = int(name[1:]) - 1
        if not 0 <= k < m:
            raise ValueError(f"parameter {name} out of range")
        num, _, qexp = value.partition(":")
        from fractions import Fraction

        c = Fraction(num)
        e = int(qexp) if qexp else 0
        params[k] = {(e, ()): c if c.denominator != 1 else c.numerator}
    return params


def cmd_module(args):
    datum = _datum(args)
    if args.action == "act":
        word = _word(args)
        mod = slq2_tensor.TensorModule(
            datum, word, params=_parse_params(args.params, len(word))
        )
        elem = wiring.expression_image(datum, word, args.expr)
        vec = {}
        for item in json.loads(args.vector):
            from .qtorus import coeff_from_json

            vec[tuple(item["n"])] = coeff_from_json(item["coeff"])
        out = mod.element_action(elem, vec)
        payload = [
            {"n": list(n), "coeff": _coeff_json(c)} for n, c in sorted(out.items())
        ]
        _emit(payload, f"action result with {len(out)} basis term(s)")
        return EXIT_OK
    # verify
    if args.tensor:
        word = _word(args)
        rep = slq2_tensor.verify_tensor_relations(
            datum, word, args.truncate, params=_parse_params(args.params, len(word))
        )
        _emit(rep, f"tensor relations on {args.word}: "
                   f"{'PASS' if rep['ok'] else 'FAIL'} ({rep['checked']} vectors)")
        return EXIT_OK if rep["ok"] else EXIT_CHECK_FAILED
    spec = slq2_tensor.TypicalModuleSpec(
        kind=args.kind,
        gamma=_single_param(args.gamma),
        eta=_single_param(args.eta),
    )
    rep = slq2_tensor.verify_typical_relations(spec, args.truncate)
    _emit(rep, f"{args.kind} relations: {'PASS' if rep['ok'] else 'FAIL'}")
    return EXIT_OK if rep["ok"] else EXIT_CHECK_FAILED


def _single_param(text):
    if not text:
        return None
    from fractions import Fraction

    num, _, qexp = text.partition(":")
    c = Fraction(num)
    e = int(qexp) if qexp else 0
    return {(e, ()): c if c.denominator != 1 else c.numerator}


def _coeff_json(c):
    from .qtorus import coeff_to_json

    return coeff_to_json(c)


def cmd_verify(args):
    datum = _datum(args)
    if args.word is not None:
        words = [weyl.parse_word(args.word)]
    else:
        words = weyl.all_double_words(datum, args.max_len)
    results = []
    ok = True
    try:
        for word in words:
            if args.suite == "congruence":
                rep = appendix_congruence.congruence_check(datum, word)
                results.append({"word": weyl.format_word(word), "ok": rep["ok"]})
                ok &= rep["ok"]
            elif args.suite == "relations":
                rep = wiring.verify_relations(datum, word)
                good = all(flag for _n, flag in rep)
                results.append({"word": weyl.format_word(word), "ok": good})
                ok &= good
            elif args.suite == "psi":
                good, factors = strings.psi_check(datum, word)
                results.append(
                    {"word": weyl.format_word(word), "ok": good, "factors": factors}
                )
                ok &= good
            elif args.suite == "invariants":
                strings.invariants(datum, word)  # raises CrossCheckFailed on bugs
                results.append({"word": weyl.format_word(word), "ok": True})
            else:  # lemma
                for cls in weyl.all_reduced_words(datum, args.max_len):
                    for rw in cls:
                        rep = appendix_congruence.verify_lemma(datum, rw)
                        results.append(
                            {"word": weyl.format_word(rw), "ok": rep["ok"]}
                        )
                        ok &= rep["ok"]
                break
    except CrossCheckFailed as exc:
        print(f"internal cross-check failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    npass = sum(1 for r in results if r["ok"])
    _emit(results, f"{args.suite}: {npass}/{len(results)} pass")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qck",
        description="quantized coordinate-ring computations via wiring diagrams",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="structural invariants of a double word")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--word", required=True)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("diagram", help="render the wiring diagram")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--format", choices=("ascii", "svg", "json"), default="ascii")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("image", help="image of an expression in the tensor torus")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--expr")
    p.add_argument("--minor", help="rows|cols, e.g. 12|12")
    p.set_defaults(func=cmd_image)

    p = sub.add_parser("pivots", help="pivot-element certificates")
    psub = p.add_subparsers(dest="action", required=True)
    p1 = psub.add_parser("check", help="check a certificate file")
    p1.add_argument("--rank", type=int, required=True)
    p1.add_argument("--cert", required=True)
    p1.set_defaults(func=cmd_pivots)
    p2 = psub.add_parser("table1", help="verify the built-in rank-2 table")
    p2.add_argument("--rank", type=int, default=2)
    p2.set_defaults(func=cmd_pivots)
    p3 = psub.add_parser("auto", help="disjoint-support automatic certificate")
    p3.add_argument("--rank", type=int, required=True)
    p3.add_argument("--word", required=True)
    p3.set_defaults(func=cmd_pivots)

    p = sub.add_parser("normal-form", help="integer matrix normal forms")
    p.add_argument("--kind", choices=("smith", "skew"), required=True)
    p.add_argument("--file", help="matrix file (text rows or JSON); stdin otherwise")
    p.set_defaults(func=cmd_normal_form)

    p = sub.add_parser("module", help="module actions and relation suites")
    msub = p.add_subparsers(dest="action", required=True)
    m1 = msub.add_parser("act", help="act by an expression on a vector")
    m1.add_argument("--rank", type=int, required=True)
    m1.add_argument("--word", required=True)
    m1.add_argument("--expr", required=True)
    m1.add_argument("--vector", required=True, help='JSON like [{"n":[0,0],"coeff":[...]}]')
    m1.add_argument("--params", default="", help="g1=rat:qexp,... (default formal)")
    m1.set_defaults(func=cmd_module)
    m2 = msub.add_parser("verify", help="truncated relation suite")
    m2.add_argument("--rank", type=int, default=1)
    m2.add_argument("--kind", choices=slq2_tensor.KINDS, default="Laurent")
    m2.add_argument("--tensor", action="store_true")
    m2.add_argument("--word", default="")
    m2.add_argument("--truncate", type=int, default=20)
    m2.add_argument("--gamma", default="", help="rational:q-exponent")
    m2.add_argument("--eta", default="")
    m2.add_argument("--params", default="")
    m2.set_defaults(func=cmd_module)

    p = sub.add_parser("verify", help="verification suites over word families")
    p.add_argument("--suite", choices=("congruence", "relations", "psi", "lemma", "invariants"),
                   required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--word")
    p.add_argument("--max-len", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    # values like "-2,1,-1" would otherwise be taken for option strings
    merged = []
    i = 0
    dashy = {"--word", "--gamma", "--eta", "--params", "--expr"}
    while i < len(argv):
        tok = argv[i]
        if tok in dashy and i + 1 < len(argv):
            merged.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            merged.append(tok)
            i += 1
    parser = build_parser()
    args = parser.parse_args(merged)
    try:
        return args.func(args)
    except CrossCheckFailed as exc:
        print(f"internal cross-check failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, IndexError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
