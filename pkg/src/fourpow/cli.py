"""Command line front end.

Objects travel as JSON Lines, one record per line, so bijections compose
with shell pipes::

    fourpow enumerate --class pairs --n 3 \\
        | fourpow map --bijection pair_walk --direction fwd \\
        | fourpow map --bijection pair_walk --direction inv

Exit status: 0 success, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path

from . import bijections as B
from . import paths as P
from .compositions import composition_unrank
from .errors import FourPowError
from .records import RecordError, dumps, loads, to_record
from .render import render_svg
from .verification import (
    CLASS_NAMES,
    OEIS,
    SUITES,
    closed_form_count,
    iter_class,
    oeis_compare,
    verify_suite,
)

RECORD_HELP = """\
record formats (one JSON object per line):
  {"type":"path","steps":"UUDD"}
  {"type":"marked_peak","steps":"UUDD","peak":1}
  {"type":"height_labeled","steps":"UUDD","peak":1,"label":2}
  {"type":"marked_bridge","steps":"UDDU","peak":0}
  {"type":"two_colored_bridge","first":"UD","second":""}
  {"type":"composition","parts":[2,1]}
  {"type":"colored_composition","parts":[[1,2],[2,1]]}
  {"type":"pair","first":[2,1],"second":[3]}
"peak" is the 0-based index of the peak's up step; "label" runs over 1..height.
"""

# name -> (forward input type, forward map, inverse input type, inverse map)
BIJECTIONS = {
    "pair_walk": ("pair", B.pair_to_walk, "path", B.walk_to_pair),
    "colored_pair": ("colored_composition", B.colored_to_pair, "pair", B.pair_to_colored),
    "twocol_walk": ("two_colored_bridge", B.two_colored_to_walk, "path", B.walk_to_two_colored),
    "bridge_meander": ("path", B.bridge_to_meander, "path", B.meander_to_bridge),
    "peak_bridge": ("marked_peak", B.marked_peak_to_bridge, "path", B.bridge_to_marked_peak),
    "label_maxima": (
        "height_labeled",
        B.height_labeled_to_marked_bridge,
        "marked_bridge",
        B.marked_bridge_to_height_labeled,
    ),
    "maxima_twocol": (
        "marked_bridge",
        B.marked_bridge_to_two_colored,
        "two_colored_bridge",
        B.two_colored_to_marked_bridge,
    ),
}

CHAIN_RECORD = {
    "3comp": "colored_composition",
    "pairs": "pair",
    "walk": "path",
    "two_colored": "two_colored_bridge",
    "marked_bridge": "marked_bridge",
    "height_labeled": "height_labeled",
}

SAMPLE_CLASSES = ("walk", "bridge", "meander", "dyck", "composition")
_SAMPLE_PATHS = {
    "walk": P.PathClass.WALK,
    "bridge": P.PathClass.BRIDGE,
    "meander": P.PathClass.MEANDER,
    "dyck": P.PathClass.DYCK,
}


class UsageError(FourPowError):
    pass


def sample(name: str, n: int, count: int, seed: int) -> list:
    """Uniform draws by unranking uniform ranks.

    Ranks come from :class:`random.Random` (MT19937) seeded with ``seed``;
    replaying a seed replays the draws.
    """
    if name not in SAMPLE_CLASSES:
        if name in CLASS_NAMES:
            raise UsageError(f"sampling is not supported for {name!r}; use one of {', '.join(SAMPLE_CLASSES)}")
        raise UsageError(f"unknown class {name!r}")
    if n < 0 or count < 0:
        raise UsageError("n and count must be nonnegative")
    rng = random.Random(seed)
    if name == "composition":
        total = 2 ** (n - 1) if n else 1
        return [composition_unrank(n, rng.randrange(total)) for _ in range(count)]
    cls = _SAMPLE_PATHS[name]
    total = P.class_count(cls, 2 * n)
    return [P.unrank(cls, 2 * n, rng.randrange(total)) for _ in range(count)]


def _read_records(args):
    stream = open(args.input) if args.input else sys.stdin
    try:
        for lineno, line in enumerate(stream, 1):
            if not line.strip():
                continue
            try:
                yield loads(line)
            except FourPowError as exc:
                raise RecordError(f"line {lineno}: {exc}") from None
    finally:
        if args.input:
            stream.close()


def _open_output(args):
    return open(args.output, "w") if getattr(args, "output", None) else sys.stdout


def _emit(out, obj, kind=None):
    out.write(dumps(to_record(obj, kind)) + "\n")


def cmd_enumerate(args, out):
    kind = "colored_composition" if args.cls == "3comp" else None
    for obj in iter_class(args.cls, args.n):
        _emit(out, obj, kind)
    return 0


def cmd_count(args, out):
    out.write(f"{closed_form_count(args.cls, args.n)}\n")
    return 0


def cmd_map(args, out):
    fwd_type, fwd, inv_type, inv = BIJECTIONS[args.bijection]
    want, fn = (fwd_type, fwd) if args.direction == "fwd" else (inv_type, inv)
    for kind, obj in _read_records(args):
        if kind != want:
            raise RecordError(f"{args.bijection} {args.direction} expects {want!r} records, got {kind!r}")
        _emit(out, fn(obj))
    return 0


def cmd_chain(args, out):
    want = CHAIN_RECORD[args.src]
    for kind, obj in _read_records(args):
        if kind != want:
            raise RecordError(f"class {args.src} expects {want!r} records, got {kind!r}")
        _emit(out, B.chain(obj, args.src, args.dst))
    return 0


def cmd_verify(args, out):
    report = verify_suite(args.suite, args.max_n, workers=args.workers)
    out.write((report.to_json() if args.json else report.to_text()) + "\n")
    if args.figure:
        from .plotting import verification_figure

        verification_figure(args.max_n, args.figure)
    return 0 if report.passed else 1


def cmd_sample(args, out):
    for obj in sample(args.cls, args.n, args.count, args.seed):
        _emit(out, obj)
    return 0


def cmd_render(args, out):
    docs = [render_svg(obj) for _, obj in _read_records(args)]
    if not args.output:
        for doc in docs:
            out.write(doc)
        return 0
    target = Path(args.output)
    if len(docs) == 1:
        target.write_text(docs[0])
    else:
        for i, doc in enumerate(docs):
            target.with_name(f"{target.stem}-{i}{target.suffix or '.svg'}").write_text(doc)
    return 0


def cmd_oeis(args, out):
    report = oeis_compare(args.sequence, args.max_n)
    out.write((report.to_json() if args.json else report.to_text()) + "\n")
    if args.figure:
        from .plotting import oeis_figure, oeis_rows

        oeis_figure(args.sequence, oeis_rows(args.sequence, args.max_n), args.figure)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourpow",
        description="Bijections between families counted by 4^(n-1).",
        epilog=RECORD_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help, output=True, input=False):
        p = sub.add_parser(name, help=help, epilog=RECORD_HELP, formatter_class=argparse.RawDescriptionHelpFormatter)
        p.set_defaults(func=func)
        if output:
            p.add_argument("--output", "-o", help="write here instead of standard output")
        if input:
            p.add_argument("--input", "-i", help="read records from this file instead of standard input")
        return p

    size_help = "size: the integer composed, or the semilength of a path class"

    p = add("enumerate", cmd_enumerate, "list every object of a class in canonical order")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_NAMES)
    p.add_argument("--n", type=int, required=True, help=size_help)

    p = add("count", cmd_count, "closed-form size of a class")
    p.add_argument("--class", dest="cls", required=True, choices=CLASS_NAMES)
    p.add_argument("--n", type=int, required=True, help=size_help)

    p = add("map", cmd_map, "apply one bijection to records read from standard input", input=True)
    p.add_argument("--bijection", required=True, choices=sorted(BIJECTIONS))
    p.add_argument("--direction", required=True, choices=("fwd", "inv"))

    p = add("chain", cmd_chain, "move records along the chain of bijections", input=True)
    p.add_argument("--from", dest="src", required=True, choices=B.CHAIN)
    p.add_argument("--to", dest="dst", required=True, choices=B.CHAIN)

    p = add("verify", cmd_verify, "run exhaustive verification suites")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--workers", type=int, default=1, help="threads for per-size fan-out")
    p.add_argument("--figure", help="also write a matplotlib figure (png, svg or pdf)")

    p = add("sample", cmd_sample, "draw uniform random objects")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--n", type=int, required=True, help=size_help)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)

    add("render", cmd_render, "draw path-like records as SVG", input=True)

    p = add("oeis", cmd_oeis, "compare enumerated counts with embedded OEIS terms")
    p.add_argument("--sequence", required=True, choices=sorted(OEIS))
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--figure", help="also write a matplotlib figure")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = sys.stdout if args.func is cmd_render else _open_output(args)
        try:
            return args.func(args, out)
        finally:
            if out is not sys.stdout:
                out.close()
    except (FourPowError, OSError) as exc:
        print(f"fourpow {args.command}: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
