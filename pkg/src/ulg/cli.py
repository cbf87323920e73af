"""
Command line entry point: `ulg <subcommand> ...` or `python -m ulg ...`.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
limit reached.
"""

from __future__ import annotations

import argparse
import random
import sys
from collections import defaultdict
from contextlib import contextmanager

from ulg import dtilde6, typea
from ulg.diagram import CoxeterDiagram, ParseError, load_diagram
from ulg.engine import evaluate, is_reduced, length
from ulg.geodesics import (
    IncompleteCensusError, ResourceLimitError, ball_census, format_polynomial,
    generating_series, geodesic_count, reduced_words,
)
from ulg.treepath import (
    forbidden_pattern_scan, length_bound, path_legal, turning_profile, ulg_structure_check,
)

__all__ = ["main", "run", "build_parser", "format_polynomial", "UsageError"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3
DEFAULT_SEED = 20190101


class UsageError(Exception):
    pass


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _rank_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <a>..<b> or <a>, got {text!r}") from None
    if a < 1 or b < a:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return a, b


def _label(text: str) -> tuple[int, ...]:
    try:
        lab = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if min(lab) < 0:
        raise argparse.ArgumentTypeError("label entries must be >= 0")
    return lab


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--threads", type=_positive, default=1)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--cap", type=_positive, default=10**6, help="enumeration / state cap")

    diag = argparse.ArgumentParser(add_help=False)
    diag.add_argument("--diagram", required=True, help="builtin name (A<n>, Atilde2, Dstar4, Dtilde6-paper) or file")

    p = argparse.ArgumentParser(prog="ulg", description="Uniquely labelled geodesics in Coxeter groups.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("genfun", parents=[common, diag], help="u.l.g. generating series up to a radius")
    s.add_argument("--radius", type=_nonneg, required=True)

    s = sub.add_parser("ulg-check", parents=[common, diag], help="reduced / label / u.l.g. verdict for a word")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--random", type=_nonneg, metavar="LEN", help="check a seeded random word of this length")

    s = sub.add_parser("reduced-words", parents=[common, diag], help="all reduced words of an element")
    s.add_argument("--word", required=True)
    s.add_argument("--label", type=_label)

    s = sub.add_parser("typea-report", parents=[common], help="type A formulas next to census values")
    s.add_argument("--n", type=_rank_range, default=(2, 6))

    s = sub.add_parser("tree-check", parents=[common, diag], help="path / turning-vertex conditions")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--word")
    g.add_argument("--radius", type=_nonneg, help="check every u.l.g. of the ball")

    s = sub.add_parser("dtilde6", help="D~6 case study")
    dsub = s.add_subparsers(dest="action", required=True)
    v = dsub.add_parser("verify", parents=[common], help="powers, normal form, uniqueness, case corpus")
    v.add_argument("--nmax", type=_positive, default=2, help="largest power for the u.l.g. checks")
    f = dsub.add_parser("fellow-travel", parents=[common], help="distance profile between two lines")
    f.add_argument("--n", type=_positive, default=60, help="prefix length N of line B")
    f.add_argument("--line-a", choices=("w", "w2", "w3"), default="w")
    f.add_argument("--line-b", choices=("w", "w2", "w3"), default="w2")
    f.add_argument("--anchor", help="offset word for line B (default: the standard one)")

    s = sub.add_parser("appendix", help="type A label lists")
    asub = s.add_subparsers(dest="action", required=True)
    asub.add_parser("diff", parents=[common], help="recompute the label sets and diff against the shipped lists")
    return p


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _diagram(name: str) -> CoxeterDiagram:
    try:
        return load_diagram(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _word(d: CoxeterDiagram, text: str) -> tuple[int, ...]:
    try:
        return d.parse_word(text)
    except (ParseError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_genfun(args, out) -> int:
    d = _diagram(args.diagram)
    census = ball_census(d, args.radius, threads=args.threads, max_entries=args.cap * 100)
    out.write(format_polynomial(generating_series(census)))
    return EXIT_OK


def cmd_ulg_check(args, out) -> int:
    d = _diagram(args.diagram)
    if args.word is not None:
        word = _word(d, args.word)
    else:
        rng = random.Random(args.seed)
        word = tuple(rng.randrange(d.n) for _ in range(args.random))
    reduced = is_reduced(d, word)
    e = evaluate(d, word)
    lab = d.label(word)
    count = geodesic_count(d, e, lab, max_states=args.cap * 10) if reduced else 0
    rows = [
        ("word", d.format_word(word)),
        ("length", str(length(e))),
        ("reduced", _yn(reduced)),
        ("label", ",".join(map(str, lab))),
        ("geodesics_with_label", str(count)),
        ("ulg", _yn(reduced and count == 1)),
    ]
    out.writelines(f"{k}\t{v}\n" for k, v in rows)
    return EXIT_OK


def cmd_reduced_words(args, out) -> int:
    d = _diagram(args.diagram)
    word = _word(d, args.word)
    if args.label is not None and len(args.label) != d.n:
        raise UsageError(f"--label needs {d.n} entries")
    words = reduced_words(d, evaluate(d, word), args.label, cap=args.cap)
    out.writelines(d.format_word(w) + "\n" for w in words)
    return EXIT_OK


def cmd_typea_report(args, out) -> int:
    lo, hi = args.n
    cols = typea.TYPEA_COLUMNS
    out.write("\t".join(cols) + "\n")
    for row in typea.typea_table(range(lo, hi + 1)):
        out.write("\t".join(str(row[c]) for c in cols) + "\n")
    return EXIT_OK


def _tree_line(d, word) -> tuple[str, bool]:
    rep = ulg_structure_check(d, word)
    legal = path_legal(d, word)
    findings = forbidden_pattern_scan(d, word)
    index = turning_profile(d, word).branching_index if legal else None
    bound_ok = True
    bound = ""
    if index is not None and index <= 2 and d.n >= 4:
        b = length_bound(d, index)
        bound_ok = len(word) <= b
        bound = str(b)
    fields = [
        d.format_word(word), _yn(legal), str(len(findings)),
        "" if index is None else str(index), bound, rep.summary(),
    ]
    ok = legal and not findings and rep.passed and bound_ok
    return "\t".join(fields), ok


def cmd_tree_check(args, out) -> int:
    d = _diagram(args.diagram)
    if not d.is_simply_laced_tree():
        raise UsageError(f"{args.diagram} is not a simply laced tree")
    out.write("word\tpath\tfindings\tbranching_index\tlength_bound\tstructure\n")
    if args.word is not None:
        line, _ = _tree_line(d, _word(d, args.word))
        out.write(line + "\n")
        return EXIT_OK
    census = ball_census(d, args.radius, collect_ulgs=True, threads=args.threads)
    failures = 0
    for word in census.ulg_words:
        line, ok = _tree_line(d, word)
        failures += not ok
        out.write(line + "\n")
    print(f"{len(census.ulg_words)} u.l.g.'s checked, {failures} with violations", file=sys.stderr)
    return EXIT_FAIL if failures else EXIT_OK


def cmd_dtilde6_verify(args, out) -> int:
    rows: list[tuple[str, str, str, str]] = []

    def check(name, claim, observed, ok):
        rows.append((name, claim, str(observed), "pass" if ok else "fail"))

    for n in range(1, 7):
        ell = dtilde6.power_length("w", n)
        check(f"power_length(w,{n})", str(12 * n), ell, ell == 12 * n)
    # base^2 is still reduced (length 20); the deficit appears from n = 3
    for n, bound in ((2, 24), (3, 30)):
        ell = dtilde6.power_length("base", n)
        check(f"power_length(base,{n})", f"< {bound}", ell, ell < bound)
    for n in range(1, 9):
        ell = dtilde6.power_length("coxIJ", n)
        check(f"power_length(coxIJ,{n})", str(6 * n), ell, ell == 6 * n)
    for n in range(1, 5):
        ok = dtilde6.normal_form_identity(n)
        check(f"normal_form_identity({n})", "true", str(ok).lower(), ok)
    for v in ("w", "w2", "w3"):
        for n in range(1, args.nmax + 1):
            ok = dtilde6.power_is_ulg(v, n, max_states=max(args.cap, 10**7))
            check(f"power_is_ulg({v},{n})", "true", str(ok).lower(), ok)
    bad = 0
    for name, claim, observed, status in rows:
        bad += status != "pass"
        out.write(f"{name}\t{claim}\t{observed}\t{status}\n")
    for res in dtilde6.run_case_corpus(threads=args.threads):
        bad += res.status == "fail"
        out.write(f"case {res.tsv()}\n")
    return EXIT_FAIL if bad else EXIT_OK


def cmd_dtilde6_fellow(args, out) -> int:
    prof = dtilde6.fellow_travel_profile(args.line_a, args.line_b, args.anchor, args.n)
    lo, hi = prof.interior
    out.write(f"# line_a: {args.line_a}\n# line_b: {args.line_b}\n# anchor: {prof.anchor or '-'}\n")
    out.write(f"# interior: {lo}..{hi}\n")
    out.write("i\tdistance\n")
    for i, dist in enumerate(prof.distances):
        out.write(f"{i}\t{dist}\n")
    out.write(f"# max: {prof.max}\n# min: {prof.min}\n# raw_min: {prof.raw_min}\n")
    return EXIT_OK


def _shipped_labels() -> dict[str, set[tuple[int, ...]]]:
    path = dtilde6._corpus_path("typea_labels.tsv")
    out: dict[str, set[tuple[int, ...]]] = defaultdict(set)
    for raw in path.read_text(encoding="utf-8").splitlines():
        if not raw.strip() or raw.startswith("#"):
            continue
        name, digits = raw.split("\t")
        out[name].add(tuple(int(ch) for ch in digits.strip()))
    return out


def label_list_diff() -> dict[str, tuple[set, set, int]]:
    """Per rank: (missing from the shipped list, extra in the shipped list, census size)."""
    shipped = _shipped_labels()
    result = {}
    for name in sorted(shipped):
        n = int(name[1:])
        census = set(typea.census_series(n).coeffs)
        result[name] = (census - shipped[name], shipped[name] - census, len(census))
    return result


def cmd_label_diff(args, out) -> int:
    bad = 0
    for name, (missing, extra, size) in label_list_diff().items():
        fmt = lambda s: " ".join("".join(map(str, x)) for x in sorted(s)) or "-"  # noqa: E731
        out.write(f"{name}\tcensus={size}\tmissing={fmt(missing)}\textra={fmt(extra)}\n")
        bad += bool(missing or extra)
    return EXIT_FAIL if bad else EXIT_OK


_COMMANDS = {
    "genfun": cmd_genfun,
    "ulg-check": cmd_ulg_check,
    "reduced-words": cmd_reduced_words,
    "typea-report": cmd_typea_report,
    "tree-check": cmd_tree_check,
    ("dtilde6", "verify"): cmd_dtilde6_verify,
    ("dtilde6", "fellow-travel"): cmd_dtilde6_fellow,
    ("appendix", "diff"): cmd_label_diff,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    key = (args.command, args.action) if hasattr(args, "action") else args.command
    try:
        with _output(args.out) as out:
            return _COMMANDS[key](args, out)
    except UsageError as exc:
        print(f"ulg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitError, IncompleteCensusError, OverflowError) as exc:
        print(f"ulg: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"ulg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
