"""Command-line front end tying the library together.

One binary, subcommand style: construct | verify | search | bound |
poset | compress.  All numeric parameters are explicit flags so a
certificate printed by `search` can be reproduced from its own output.

Exit codes: 0 success (constructed, verified, found, bounded); 1 a
verification failed, a search target was refuted, or a containment
query came back negative; 2 usage errors or malformed input files;
3 a resource limit truncated the answer.

`--format records` emits tab-separated key/value lines with the same
numeric content as the human table.  `--deterministic` forces a single
worker and drops timing lines so output is byte-identical across runs
and worker counts.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import bounds as bounds_mod
from . import constructions as cons
from .core import (
    Family,
    ParseError,
    family_from_text,
    family_to_text,
    verify,
)
from .posets import (
    contains_k_plus_k,
    lattice_width_witness,
    max_antichains,
    poset_from_text,
    reduce_to_vectors,
    width,
)
from .search import (
    SearchBox,
    SearchLimits,
    SearchResult,
    compress,
    exists_family,
    max_family_in_box,
    max_family_size,
    ranked_max_family_size,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_TRUNCATED = 3


@dataclass
class RunConfig:
    """Parsed invocation: one subcommand plus the shared knobs."""

    subcommand: str
    format: str
    deterministic: bool
    workers: int
    args: argparse.Namespace

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        workers = getattr(args, "workers", 1)
        if args.deterministic:
            workers = 1
        return cls(
            subcommand=args.subcommand,
            format=args.format,
            deterministic=args.deterministic,
            workers=workers,
            args=args,
        )


def _parse_int_list(text: str) -> tuple[int, ...]:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated int list: {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _emit(pairs, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "records":
        for key, val in pairs:
            stream.write(f"{key}\t{val}\n")
        return
    pad = max((len(k) for k, _ in pairs), default=0)
    for key, val in pairs:
        stream.write(f"{key.ljust(pad)}  {val}\n")


def _read_family(path: str) -> Family:
    if path == "-":
        return family_from_text(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return family_from_text(fh.read())


def _write_family(fam: Family, path: str | None) -> None:
    text = family_to_text(fam)
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _thresholds(args):
    ks = getattr(args, "ks", None)
    if ks is not None:
        return ks
    return args.k


def _limits(args) -> SearchLimits:
    return SearchLimits(
        time_limit=args.time_limit,
        node_limit=args.node_limit,
        memory_mb=args.memory_mb,
    )


# ---------------------------------------------------------------------------
# Subcommand handlers.


def _cmd_construct(config: RunConfig) -> int:
    args = config.args
    kind = args.kind
    if kind == "product":
        fam = cons.product_family(args.k, args.w)
    elif kind == "lex":
        seq = args.coord_seq or ()
        fam = cons.lexicographic_family(args.k, args.w, seq)
    elif kind == "cyclic":
        fam = cons.cyclic_family(args.k, args.target_rank)
        if args.with_fixup:
            fix = cons.cyclic_fixup_vector(args.k)
            fam = Family(3, fam.vectors + (fix,))
    elif kind == "lift":
        base = _read_family(args.input)
        fam = cons.inductive_lift(base, args.k, args.shift)
    elif kind == "nonranked":
        fam = cons.non_ranked_example()
    elif kind == "weak":
        fam = cons.weak_compression_family(args.k)
    else:
        fam = cons.generalized_product_family(args.ks)
    _write_family(fam, args.out)
    return EXIT_OK


def _cmd_verify(config: RunConfig) -> int:
    args = config.args
    fam = _read_family(args.input)
    report = verify(fam, _thresholds(args), violation_cap=args.violation_cap)
    pairs = [
        ("size", report.size),
        ("antichain", "yes" if report.is_antichain else "no"),
        ("cross_free", "yes" if report.is_cross_free else "no"),
        ("ranked", "yes" if report.is_ranked else "no"),
        ("verified", "yes" if report.ok else "no"),
        ("violations", len(report.violations)),
    ]
    if report.violations_truncated:
        pairs.append(("violations_truncated", "yes"))
    _emit(pairs, config.format)
    for a, b, kind in report.violations:
        sys.stdout.write(f"violation\t{kind}\t{a}\t{b}\n")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def _search_pairs(res: SearchResult, deterministic: bool):
    pairs = [("best_size", res.best_size)]
    if res.target is not None:
        pairs.append(("target", res.target))
        pairs.append(("found", "yes" if res.found else "no"))
    pairs.append(("exhaustive", "yes" if res.exhaustive else "no"))
    pairs.append(("truncated", "yes" if res.truncated else "no"))
    pairs.append(("nodes", res.nodes))
    if not deterministic:
        pairs.append(("elapsed", f"{res.elapsed:.2f}s"))
    if res.box is not None:
        pairs.append(("box", str(res.box)))
        pairs.append(("box_derivation", res.box.derivation))
    return pairs


def _certificate_line(res: SearchResult, limits: SearchLimits) -> str:
    box = str(res.box) if res.box is not None else "none"
    lim = (
        f"time={limits.time_limit}s nodes={limits.node_limit} "
        f"memory={limits.memory_mb}MiB"
    )
    status = "exhaustive" if res.exhaustive else "not exhaustive"
    return f"certificate: {status}; box {box}; limits {lim}"


def _cmd_search(config: RunConfig) -> int:
    args = config.args
    limits = _limits(args)
    ks = _thresholds(args)
    if args.ranked:
        if getattr(args, "ks", None) is not None:
            sys.stderr.write("error: --ranked requires a uniform --k\n")
            return EXIT_USAGE
        if args.target is not None or args.box is not None:
            sys.stderr.write("error: --ranked takes no --target or --box\n")
            return EXIT_USAGE
        res = ranked_max_family_size(args.k, args.w, limits, workers=config.workers)
    elif args.target is not None:
        box = SearchBox(args.box) if args.box is not None else None
        if box is not None and box.width != args.w:
            sys.stderr.write(
                f"error: box width {box.width} does not match --w {args.w}\n"
            )
            return EXIT_USAGE
        res = exists_family(
            ks, args.w, args.target, box, limits, workers=config.workers
        )
    elif args.box is not None:
        box = SearchBox(args.box)
        if box.width != args.w:
            sys.stderr.write(
                f"error: box width {box.width} does not match --w {args.w}\n"
            )
            return EXIT_USAGE
        res = max_family_in_box(ks, box, limits, workers=config.workers)
    else:
        res = max_family_size(ks, args.w, limits, workers=config.workers)

    _emit(_search_pairs(res, config.deterministic), config.format)
    sys.stdout.write(_certificate_line(res, limits) + "\n")
    for note in res.notes:
        sys.stdout.write(f"note: {note}\n")
    if len(res.witness) > 0:
        sys.stdout.write("# witness\n")
        sys.stdout.write(family_to_text(res.witness))
        if args.witness_out:
            _write_family(res.witness, args.witness_out)

    if args.target is not None:
        if res.found:
            return EXIT_OK
        # A refutation is definitive for the searched box whenever the
        # run was not resource-truncated; a truncated run decided nothing.
        return EXIT_TRUNCATED if res.truncated else EXIT_NEGATIVE
    return EXIT_OK if res.exhaustive else EXIT_TRUNCATED


def _cmd_bound(config: RunConfig) -> int:
    args = config.args
    if getattr(args, "ks", None) is not None:
        report = bounds_mod.generalized_bounds(args.ks)
    else:
        report = bounds_mod.best_upper_bound(
            args.k, args.w, trust_exact=not args.no_trust_exact
        )
    pairs = [
        ("w", report.w),
        ("lower", report.lower),
        ("conjectured", report.conjectured),
        ("upper", report.upper),
        ("exact", report.exact if report.exact is not None else "open"),
    ]
    if report.k is not None:
        pairs.insert(0, ("k", report.k))
    if report.ks is not None:
        pairs.insert(0, ("ks", ",".join(str(x) for x in report.ks)))
    pairs.extend((f"candidate:{name}", value) for name, value in report.candidates)
    _emit(pairs, config.format)
    return EXIT_OK


def _cmd_poset(config: RunConfig) -> int:
    args = config.args
    if args.input == "-":
        poset = poset_from_text(sys.stdin.read())
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            poset = poset_from_text(fh.read())

    if args.contains is not None:
        found, witness = contains_k_plus_k(poset, args.contains)
        pairs = [
            ("elements", poset.n),
            ("k", args.contains),
            ("contains_k_plus_k", "yes" if found else "no"),
        ]
        if witness is not None:
            pairs.append(("chain_1", " ".join(witness[0])))
            pairs.append(("chain_2", " ".join(witness[1])))
        _emit(pairs, config.format)
        return EXIT_OK if found else EXIT_NEGATIVE

    w, antichain, chains = width(poset)
    pairs = [
        ("elements", poset.n),
        ("width", w),
        ("witness_antichain", " ".join(antichain)),
    ]
    for i, c in enumerate(chains, start=1):
        pairs.append((f"chain_{i}", " ".join(c)))
    lattice = max_antichains(poset, cap=args.cap)
    pairs.append(("maximum_antichains", lattice.size))
    if lattice.truncated:
        pairs.append(("lattice", "truncated"))
        _emit(pairs, config.format)
        return EXIT_TRUNCATED
    lw, picks = lattice_width_witness(lattice)
    pairs.append(("lattice_width", lw))
    _emit(pairs, config.format)

    if args.reduce is not None:
        fam = reduce_to_vectors(poset, args.reduce, picks)
        sys.stdout.write("# reduced family\n")
        _write_family(fam, args.out)
    return EXIT_OK


def _cmd_compress(config: RunConfig) -> int:
    args = config.args
    fam = _read_family(args.input)
    out = compress(fam, args.k, args.coord)
    c = args.coord - 1
    pairs = [
        ("size", len(out)),
        ("coord", args.coord),
        ("coord_sum_before", sum(v[c] for v in fam)),
        ("coord_sum_after", sum(v[c] for v in out)),
        ("levels", " ".join(str(x) for x in sorted({v[c] for v in out}))),
    ]
    _emit(pairs, config.format)
    _write_family(out, args.out)
    return EXIT_OK


_HANDLERS = {
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "search": _cmd_search,
    "bound": _cmd_bound,
    "poset": _cmd_poset,
    "compress": _cmd_compress,
}


def run(config: RunConfig) -> int:
    """Dispatch a parsed invocation; returns the process exit code."""
    return _HANDLERS[config.subcommand](config)


# ---------------------------------------------------------------------------
# Parser.


def _add_common(sub) -> None:
    sub.add_argument(
        "--format", choices=("table", "records"), default="table",
        help="human table or tab-separated key/value records",
    )
    sub.add_argument(
        "--deterministic", action="store_true",
        help="single worker, no timing lines; byte-identical output",
    )


def _add_limits(sub) -> None:
    sub.add_argument("--time-limit", type=float, default=60.0, metavar="SECONDS")
    sub.add_argument("--node-limit", type=int, default=5_000_000, metavar="N")
    sub.add_argument("--memory-mb", type=float, default=512.0, metavar="MB")
    sub.add_argument("--workers", type=int, default=1, metavar="N")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crossvec",
        description="Antichains of integer vectors without k-crossing pairs: "
        "construct, verify, bound, search, and reduce posets.",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p = subs.add_parser("construct", help="emit a known family in text format")
    p.add_argument(
        "--kind", required=True,
        choices=("product", "lex", "cyclic", "lift", "nonranked", "weak", "genproduct"),
    )
    p.add_argument("--k", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--ks", type=_parse_int_list, metavar="K1,K2,...")
    p.add_argument(
        "--coord-seq", type=_parse_int_list, metavar="C1,C2,...",
        help="lex kind: coordinates receiving the rank boosts (1-based)",
    )
    p.add_argument("--target-rank", type=int, help="cyclic kind: common rank")
    p.add_argument(
        "--with-fixup", action="store_true",
        help="cyclic kind: append the extra vector available when k = 1 mod 3",
    )
    p.add_argument("--input", help="lift kind: base family file")
    p.add_argument("--shift", type=int, help="lift kind: translation step")
    p.add_argument("--out", help="output file (default stdout)")
    _add_common(p)

    p = subs.add_parser("verify", help="check a family file")
    p.add_argument("--input", required=True, help="family file, or - for stdin")
    p.add_argument("--k", type=int)
    p.add_argument("--ks", type=_parse_int_list, metavar="K1,K2,...")
    p.add_argument("--violation-cap", type=int, default=100)
    _add_common(p)

    p = subs.add_parser("search", help="exact search for maximum families")
    p.add_argument("--k", type=int)
    p.add_argument("--ks", type=_parse_int_list, metavar="K1,K2,...")
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--target", type=int, help="decide existence of this size")
    p.add_argument(
        "--box", type=_parse_int_list, metavar="B1,B2,...",
        help="explicit per-coordinate upper limits (lower limits are 0)",
    )
    p.add_argument(
        "--ranked", action="store_true", help="restrict to constant-rank families"
    )
    p.add_argument("--witness-out", help="also write the witness family here")
    _add_limits(p)
    _add_common(p)

    p = subs.add_parser("bound", help="lower/upper bound table")
    p.add_argument("--k", type=int)
    p.add_argument("--w", type=int)
    p.add_argument("--ks", type=_parse_int_list, metavar="K1,K2,...")
    p.add_argument(
        "--no-trust-exact", action="store_true",
        help="recursion from the trivial base only",
    )
    _add_common(p)

    p = subs.add_parser("poset", help="width, maximum-antichain lattice, reduction")
    p.add_argument("--input", required=True, help="poset file, or - for stdin")
    p.add_argument("--cap", type=int, default=1_000_000)
    p.add_argument(
        "--contains", type=int, metavar="K",
        help="only test for two disjoint incomparable K-chains",
    )
    p.add_argument(
        "--reduce", type=int, metavar="K",
        help="reduce a maximum incomparable set of maximum antichains to vectors",
    )
    p.add_argument("--out", help="output file for the reduced family")
    _add_common(p)

    p = subs.add_parser("compress", help="fixpoint-compress one coordinate")
    p.add_argument("--input", required=True, help="family file, or - for stdin")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--coord", type=int, required=True, help="1-based coordinate")
    p.add_argument("--out", help="output file (default stdout)")
    _add_common(p)

    return parser


def _validate(args) -> str | None:
    sub = args.subcommand
    ks = getattr(args, "ks", None)
    if ks is not None and list(ks) != sorted(ks):
        return "--ks must be nondecreasing"
    if sub in ("verify", "search", "bound"):
        if (args.k is not None) == (ks is not None):
            return "exactly one of --k or --ks is required"
    if sub == "construct":
        kind = args.kind
        if kind in ("product", "lex", "cyclic", "weak", "lift") and args.k is None:
            return f"--kind {kind} requires --k"
        if kind in ("product", "lex") and args.w is None:
            return f"--kind {kind} requires --w"
        if kind == "cyclic" and args.target_rank is None:
            return "--kind cyclic requires --target-rank"
        if kind == "lift" and (args.input is None or args.shift is None):
            return "--kind lift requires --input and --shift"
        if kind == "genproduct" and ks is None:
            return "--kind genproduct requires --ks"
    if sub == "bound" and ks is None and args.w is None:
        return "bound requires --w with --k"
    return None


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    problem = _validate(args)
    if problem is not None:
        sys.stderr.write(f"error: {problem}\n")
        return EXIT_USAGE
    try:
        return run(RunConfig.from_args(args))
    except ParseError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
