"""Command-line interface.

Exit codes: 0 for success / an affirmative verdict, 1 for a negative
verdict, 2 for usage or parse errors.  Outputs are plain text or JSON and
byte-deterministic for a given input, flags included (any --threads value
gives identical bytes).
"""

import argparse
import json
import sys

from . import census as census_mod
from . import frames as frames_mod
from .canon import canonical_form, class_certificate
from .decks import deck, decks_isomorphic, decks_switching_equivalent
from .formats import (
    FORMATS,
    ParseError,
    format_graph,
    format_graph_literal,
    format_seidel_matrix,
    parse_graph,
    parse_graph_literal,
    parse_seidel_matrix,
)
from .graphs import (
    NAMED_FIGURES,
    complete_graph,
    cycle_graph,
    empty_graph,
    named_figure,
    paley_conference_seidel,
    path_graph,
)
from .measures import infinity_norm, lp_norm, norm_distribution, one_norm
from .spectral import DEFAULT_TOL, seidel_spectrum


class CliError(Exception):
    pass


def _read_source(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise CliError("cannot read %s: %s" % (path, exc))


def _load_graph(args, attr="graph"):
    literal = getattr(args, "literal", None)
    if literal:
        return parse_graph_literal(literal)
    path = getattr(args, attr, None)
    if path is None:
        raise CliError("no graph given (pass a file, '-', or --graph)")
    text = _read_source(path)
    try:
        return parse_graph(text, args.format)
    except ParseError as exc:
        raise CliError("%s: %s" % (path, exc))


def _sig12(x):
    return float("%.12g" % x)


def _fmt12(x):
    return "%.12g" % x


# -- subcommand handlers -----------------------------------------------------


def _cmd_canon(args):
    g = _load_graph(args)
    print("cert: %s" % canonical_form(g).hex())
    return 0


def _cmd_equiv(args):
    ga = _load_graph(args, "graph_a")
    text = _read_source(args.graph_b)
    try:
        gb = parse_graph(text, args.format)
    except ParseError as exc:
        raise CliError("%s: %s" % (args.graph_b, exc))
    if ga.n != gb.n:
        raise CliError("graphs have different vertex counts (%d vs %d)" % (ga.n, gb.n))
    ca, cb = class_certificate(ga), class_certificate(gb)
    same = ca == cb
    print("equivalent: %s" % ("yes" if same else "no"))
    print("cert: %s" % ca.hex())
    print("cert: %s" % cb.hex())
    return 0 if same else 1


def _cmd_spectrum(args):
    g = _load_graph(args)
    spec = seidel_spectrum(g, args.tol)
    print(",".join(_fmt12(v) for v in spec.values))
    return 0


def _parse_m_range(spec_text, n):
    if spec_text is None:
        return list(range(1, n + 1))
    if "-" in spec_text:
        a, _, b = spec_text.partition("-")
        lo, hi = int(a), int(b)
    else:
        lo = hi = int(spec_text)
    if not 1 <= lo <= hi <= n:
        raise CliError("m range %s outside 1..%d" % (spec_text, n))
    return list(range(lo, hi + 1))


def _cmd_norms(args):
    g = _load_graph(args)
    ms = _parse_m_range(args.m, g.n)
    try:
        family = args.family if args.family in ("inf", "one") else float(args.family)
    except ValueError:
        raise CliError("--family must be 'inf', 'one', or a number >= 1")
    for m in ms:
        if family == "inf":
            value = infinity_norm(g, m, args.threads)
        elif family == "one":
            value = one_norm(g, m, args.threads)
        else:
            value = lp_norm(g, m, family, args.threads)
        row = {
            "n": g.n,
            "family": args.family,
            "m": m,
            "value": _sig12(value),
        }
        if args.distribution:
            dist = norm_distribution(g, m)
            row["distribution"] = [
                {"value": _sig12(v), "count": k}
                for v, k in sorted(dist.buckets.items())
            ]
        print(json.dumps(row))
    return 0


def _cmd_deck(args):
    if args.compare:
        ga = _load_graph(args)
        text = _read_source(args.compare)
        try:
            gb = parse_graph(text, args.format)
        except ParseError as exc:
            raise CliError("%s: %s" % (args.compare, exc))
        if ga.n != gb.n:
            raise CliError("graphs have different vertex counts")
        iso = decks_isomorphic(ga, gb)
        swe = decks_switching_equivalent(ga, gb)
        print(
            "iso: %s  switch-equiv: %s"
            % ("yes" if iso else "no", "yes" if swe else "no")
        )
        return 0 if swe else 1
    g = _load_graph(args)
    counts = {}
    for card in deck(g).cards:
        key = class_certificate(card).hex()
        counts[key] = counts.get(key, 0) + 1
    for cert_hex in sorted(counts):
        print("cert: %s  x%d" % (cert_hex, counts[cert_hex]))
    return 0


def _cmd_census(args):
    n = args.n
    if n == 8 and not args.stretch:
        raise CliError("the n=8 tier needs --stretch (about a minute of work)")
    table = census_mod.enumerate_class_representatives(n)
    out = args.out or ("census_%d.tsv" % n)
    census_mod.save_class_table(table, out)
    iso, sw, swe = table.counts
    print(
        "n=%d isomorphism=%d switching=%d switching-equivalence=%d -> %s"
        % (n, iso, sw, swe, out)
    )
    return 0


def _cmd_verify(args):
    n = args.n
    claim = args.claim
    if claim == "spectrum":
        if not 3 <= n <= 8:
            raise CliError("spectrum claim supported for 3 <= n <= 8")
        groups = census_mod.verify_spectral_determination(n)
        if not groups:
            print("PASS: spectrum determines all %d-vertex classes" % n)
            return 0
        print("FAIL: %d cospectral groups of distinct classes" % len(groups))
        for members in groups:
            for g in members:
                print("  witness: %s" % format_graph_literal(g))
        return 1
    if claim == "infinity-norm":
        if not 3 <= n <= 7:
            raise CliError("infinity-norm claim supported for 3 <= n <= 7")
        report = census_mod.verify_infinity_norm_separation(n, threads=args.threads)
    elif claim == "one-norm":
        if not 3 <= n <= 7:
            raise CliError("one-norm claim supported for 3 <= n <= 7")
        report = census_mod.verify_one_norm_conjecture(n, threads=args.threads)
    elif claim == "deck":
        if not 4 <= n <= 7:
            raise CliError("deck claim supported for 4 <= n <= 7")
        report = census_mod.verify_deck_conjecture(n)
    else:
        raise CliError("unknown claim %r" % claim)
    if report.holds:
        if report.min_separation == report.min_separation:  # not NaN
            print(
                "PASS: all class pairs separated (min separation %s)"
                % _fmt12(report.min_separation)
            )
        else:
            print("PASS: all class pairs separated")
        return 0
    print("FAIL: %d colliding pairs" % len(report.collisions))
    for ga, gb in report.collisions:
        print(
            "  witness: %s vs %s"
            % (format_graph_literal(ga), format_graph_literal(gb))
        )
    return 1


def _cmd_frame(args):
    text = _read_source(args.seidel)
    try:
        s = parse_seidel_matrix(text)
    except ParseError as exc:
        raise CliError("%s: %s" % (args.seidel, exc))
    params = frames_mod.signature_check(s)
    if params is None:
        raise CliError("not a signature matrix (more than two distinct eigenvalues)")
    if args.frame_command == "analyze":
        import numpy as np

        p = frames_mod.autocorrelation(s)
        resid = float(np.linalg.norm(p @ p - p))
        print("n: %d" % params.n)
        print("k: %d" % params.k)
        print("c: %s" % _fmt12(params.c))
        print("lambda1: %s" % _fmt12(params.lambda1))
        print("projection-residual: %.3e" % resid)
        print("m\tbound")
        for m in range(1, params.n + 1):
            print("%d\t%s" % (m, _fmt12(params.k / params.n + params.c * (m - 1))))
        return 0
    v = frames_mod.frame_vectors(s)
    for row in v:
        print("\t".join(_fmt12(x) for x in row))
    return 0


def _cmd_gen(args):
    kind = args.kind
    if kind == "paley":
        if args.q is None:
            raise CliError("gen paley needs --q")
        s = paley_conference_seidel(args.q)
        if args.out_format not in (None, "seidel"):
            g = s.to_graph()
            sys.stdout.write(format_graph(g, args.out_format))
        else:
            sys.stdout.write(format_seidel_matrix(s))
        return 0
    if kind == "named-figure":
        if not args.name:
            raise CliError(
                "gen named-figure needs --name (have: %s)"
                % ", ".join(sorted(NAMED_FIGURES))
            )
        g = named_figure(args.name)
    else:
        if args.n is None:
            raise CliError("gen %s needs --n" % kind)
        maker = {
            "empty": empty_graph,
            "complete": complete_graph,
            "cycle": cycle_graph,
            "path": path_graph,
        }[kind]
        g = maker(args.n)
    sys.stdout.write(format_graph(g, args.out_format or "edge-list"))
    return 0


# -- parser -------------------------------------------------------------------


def _add_graph_arg(sub, name="graph", optional=False):
    if optional:
        sub.add_argument(name, nargs="?", help="graph file or '-' for stdin")
    else:
        sub.add_argument(name, help="graph file or '-' for stdin")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="twographs",
        description="Switching classes of simple graphs: certificates, "
        "spectra, subset norms, decks, censuses, frames.",
    )
    ap.add_argument("--tol", type=float, default=DEFAULT_TOL, help="comparison tolerance")
    ap.add_argument("--threads", type=int, default=None, help="worker threads for subset sweeps")
    ap.add_argument(
        "--format",
        default="auto",
        choices=("auto",) + FORMATS,
        help="input graph format (default: sniff)",
    )
    sp = ap.add_subparsers(dest="command", required=True)

    p = sp.add_parser("canon", help="print the isomorphism certificate")
    _add_graph_arg(p, optional=True)
    p.add_argument("--graph", dest="literal", help="inline literal n=6;12,13")
    p.set_defaults(func=_cmd_canon)

    p = sp.add_parser("equiv", help="switching equivalence of two graphs")
    _add_graph_arg(p, "graph_a")
    _add_graph_arg(p, "graph_b")
    p.set_defaults(func=_cmd_equiv, literal=None)

    p = sp.add_parser("spectrum", help="Seidel spectrum, descending")
    _add_graph_arg(p, optional=True)
    p.add_argument("--graph", dest="literal", help="inline literal")
    p.set_defaults(func=_cmd_spectrum)

    p = sp.add_parser("norms", help="subset norm values as JSON rows")
    _add_graph_arg(p, optional=True)
    p.add_argument("--graph", dest="literal", help="inline literal")
    p.add_argument("--family", default="inf", help="'inf', 'one', or a p >= 1")
    p.add_argument("--m", default=None, help="m or lo-hi range (default 1-n)")
    p.add_argument("--distribution", action="store_true", help="add bucket arrays")
    p.set_defaults(func=_cmd_norms)

    p = sp.add_parser("deck", help="deck certificates or deck comparison")
    _add_graph_arg(p, optional=True)
    p.add_argument("--graph", dest="literal", help="inline literal")
    p.add_argument("--compare", help="second graph file to compare decks")
    p.set_defaults(func=_cmd_deck)

    p = sp.add_parser("census", help="enumerate switching-equivalence classes")
    p.add_argument("--n", type=int, required=True, choices=range(3, 9))
    p.add_argument("--stretch", action="store_true", help="allow the n=8 tier")
    p.add_argument("--out", help="output TSV path (default census_N.tsv)")
    p.set_defaults(func=_cmd_census)

    p = sp.add_parser("verify", help="run a verification harness")
    p.add_argument(
        "--claim",
        required=True,
        choices=("spectrum", "deck", "one-norm", "infinity-norm"),
    )
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sp.add_parser("frame", help="frame analysis of a signature matrix")
    fsp = p.add_subparsers(dest="frame_command", required=True)
    for sub in ("analyze", "vectors"):
        q = fsp.add_parser(sub)
        q.add_argument("seidel", help="seidel matrix file or '-'")
        q.set_defaults(func=_cmd_frame)

    p = sp.add_parser("gen", help="generate a named family or figure")
    p.add_argument(
        "kind",
        choices=("empty", "complete", "cycle", "path", "paley", "named-figure"),
    )
    p.add_argument("--n", type=int, help="vertex count for families")
    p.add_argument("--q", type=int, help="field order for paley")
    p.add_argument("--name", help="figure name for named-figure")
    p.add_argument(
        "--out-format",
        choices=FORMATS,
        default=None,
        help="output format (edge-list default; paley emits seidel)",
    )
    p.set_defaults(func=_cmd_gen)

    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (CliError, ParseError, ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
