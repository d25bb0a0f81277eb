"""Command line front end.

    fpaths enumerate --family F --n N [--stats]
    fpaths map --from F --to G            (objects on stdin, one per line)
    fpaths stats --family F               (objects on stdin)
    fpaths count --n N [--h H] [--l L] [--m M] [--refined I,J,K,L,M]
    fpaths table --which {h,l}
    fpaths sequence --max-n N [--bfile]
    fpaths verify [--max-n N] [--threads K] [--json PATH]

``--n`` is the common index: F-paths of length n, Schröder words of
semilength n, and objects of size n+1 in the other five families.
``count`` uses the closed-form argument order (h = aone, l = north,
m = height).  Exit status: 0 success, 1 verification failure, 2 usage
or parse errors.
"""
from __future__ import annotations

import argparse
import sys

from .counting import a_marginal, f_refined, sequence
from .errors import FpathsError
from .families import FAMILIES, TAGS, render_object
from .verify_harness import run_all


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="fpaths",
        description="Bijections, statistics and exact counts for F-paths "
        "and six equinumerous families.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all objects of a family")
    p.add_argument("--family", required=True, choices=TAGS)
    p.add_argument("--n", required=True, type=int, help="common index")
    p.add_argument("--stats", action="store_true",
                   help="append TAB h,l,a1 to each line")

    p = sub.add_parser("map", help="map stdin objects between families")
    p.add_argument("--from", dest="src", required=True, choices=TAGS)
    p.add_argument("--to", dest="dst", required=True, choices=TAGS)

    p = sub.add_parser("stats", help="statistics of stdin objects")
    p.add_argument("--family", required=True, choices=TAGS)

    p = sub.add_parser("count", help="closed-form counts")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--h", type=int, default=None, help="aone")
    p.add_argument("--l", type=int, default=None, help="north")
    p.add_argument("--m", type=int, default=None, help="height")
    p.add_argument("--refined", default=None, metavar="I,J,K,L,M",
                   help="step-class signature i,j,k,l and height m")

    p = sub.add_parser("table", help="triangle of a marginal, n = 0..5")
    p.add_argument("--which", required=True, choices=("h", "l"))

    p = sub.add_parser("sequence", help="total counts a(0..max-n)")
    p.add_argument("--max-n", dest="max_n", required=True, type=int)
    p.add_argument("--bfile", action="store_true",
                   help="print 'n a(n)' per line")

    p = sub.add_parser("verify", help="run the cross-verification harness")
    p.add_argument("--max-n", dest="max_n", type=int, default=6)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--json", dest="json_path", default=None,
                   help="also write the report as JSON to this file")
    return top


# ------------------------------------------------------------ subcommands


def _cmd_enumerate(args) -> int:
    fam = FAMILIES[args.family]
    for obj in fam.generate(args.n):
        line = render_object(obj)
        if args.stats:
            st = fam.stats(obj)
            line += f"\t{st.h},{st.l},{st.a1}"
        print(line)
    return 0


def _read_objects(stream):
    for line in stream:
        line = line.strip()
        if line:
            yield line


def _cmd_map(args) -> int:
    src = FAMILIES[args.src]
    dst = FAMILIES[args.dst]
    for line in _read_objects(sys.stdin):
        obj = src.parse(line)
        print(render_object(dst.from_fpath(src.to_fpath(obj))))
    return 0


def _cmd_stats(args) -> int:
    fam = FAMILIES[args.family]
    for line in _read_objects(sys.stdin):
        st = fam.stats(fam.parse(line))
        print(f"{st.h},{st.l},{st.a1}")
    return 0


def _cmd_count(args) -> int:
    if args.refined is not None:
        if (args.h, args.l, args.m) != (None, None, None):
            print("count: --refined excludes --h/--l/--m", file=sys.stderr)
            return 2
        parts = args.refined.split(",")
        if len(parts) != 5:
            print("count: --refined wants five integers i,j,k,l,m",
                  file=sys.stderr)
            return 2
        try:
            i, j, k, l, m = (int(p) for p in parts)
        except ValueError:
            print(f"count: bad --refined value {args.refined!r}",
                  file=sys.stderr)
            return 2
        print(f_refined(args.n, i, j, k, l, m))
    else:
        print(a_marginal(args.n, h=args.h, l=args.l, m=args.m))
    return 0


def _cmd_table(args) -> int:
    for n in range(6):
        if args.which == "h":
            row = [a_marginal(n, h=h) for h in range(n + 1)]
        else:
            row = [a_marginal(n, l=l) for l in range(n + 1)]
        print(" ".join(str(v) for v in row))
    return 0


def _cmd_sequence(args) -> int:
    values = sequence(args.max_n)
    if args.bfile:
        for n, v in enumerate(values):
            print(f"{n} {v}")
    else:
        print(" ".join(str(v) for v in values))
    return 0


def _cmd_verify(args) -> int:
    report = run_all(args.max_n, threads=args.threads)
    print(report.to_text())
    if args.json_path:
        with open(args.json_path, "w", encoding="utf-8") as fh:
            fh.write(report.to_json() + "\n")
    return 0 if report.ok else 1


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "map": _cmd_map,
    "stats": _cmd_stats,
    "count": _cmd_count,
    "table": _cmd_table,
    "sequence": _cmd_sequence,
    "verify": _cmd_verify,
}


def cmd_dispatch(argv=None) -> int:
    """Parse ``argv`` and run one subcommand; returns the exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except FpathsError as exc:
        print(f"fpaths {args.command}: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


def main() -> None:
    sys.exit(cmd_dispatch())


if __name__ == "__main__":
    main()
