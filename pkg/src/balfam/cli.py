"""
Command-line interface.

Exit codes: 0 found / verified / no counterexample, 1 not found / invalid
certificate / counterexample, 2 input or usage error.  JSON goes to stdout,
diagnostics to stderr.
"""

import argparse
import json
import sys

from .balancer import FINDERS, BalanceCertificate, verify_certificate
from .errors import BalfamError
from .family import (
    format_family,
    gen_complete_uniform,
    gen_nonuniform_sharp,
    gen_uniform_sharp,
    parse_family,
)
from .oracle import brute_force_find
from .search import ScanKind, scan_conjecture, scan_theorem

OK, NOT_FOUND, USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}\n{self.format_usage()}")


def _build_parser():
    p = _Parser(prog="balfam", description="Find and verify balanced splittings of set families.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def family_input(sp, flag):
        sp.add_argument(flag, default="-", help="family file, '-' for stdin (default)")
        sp.add_argument("--format", choices=["auto", "text", "json"], default="auto")

    f = sub.add_parser("find", help="run a linear-algebra finder")
    f.add_argument("--mode", choices=sorted(FINDERS), required=True)
    family_input(f, "--input")

    v = sub.add_parser("verify", help="check a certificate against a family")
    v.add_argument("--family", required=True)
    v.add_argument("--cert", required=True)
    v.add_argument("--format", choices=["auto", "text", "json"], default="auto")

    b = sub.add_parser("brute", help="exhaustive oracle search")
    b.add_argument("--mode", choices=["balanced", "union"], default="balanced")
    b.add_argument("--minimal", action="store_true")
    family_input(b, "--input")

    s = sub.add_parser("scan", help="exhaustive theorem or conjecture sweep")
    s.add_argument("--kind", choices=[k.value for k in ScanKind], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--no-timing", action="store_true")
    s.add_argument("--progress", type=int, metavar="EVERY", default=0,
                   help="print the running family count to stderr every EVERY families")

    g = sub.add_parser("gen", help="emit a sharpness witness family")
    g.add_argument("--kind", choices=["uniform-sharp", "nonuniform-sharp", "complete-uniform"],
                   required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, help="set size for complete-uniform")
    g.add_argument("--format", choices=["text", "json"], default="text")
    return p


def _read(path, stdin):
    if path == "-":
        return stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise BalfamError(f"cannot read {path}: {exc.strerror}") from None


def _emit(obj, stdout):
    stdout.write(json.dumps(obj) + "\n")


def _cmd_find(args, stdin, stdout, stderr):
    fam = parse_family(_read(args.input, stdin), args.format)
    cert = FINDERS[args.mode](fam)
    _emit(cert.to_json(), stdout)
    return OK


def _cmd_verify(args, stdin, stdout, stderr):
    fam = parse_family(_read(args.family, stdin), args.format)
    raw = _read(args.cert, stdin)
    try:
        cert = BalanceCertificate.from_json(json.loads(raw))
    except (ValueError, KeyError, TypeError, AttributeError):
        valid = False
    else:
        valid = verify_certificate(fam, cert)
    _emit({"valid": valid}, stdout)
    return OK if valid else NOT_FOUND


def _cmd_brute(args, stdin, stdout, stderr):
    fam = parse_family(_read(args.input, stdin), args.format)
    res = brute_force_find(fam, args.mode, args.minimal)
    _emit({"found": None if res.found is None else res.found.to_json(),
           "pairs_examined": res.pairs_examined}, stdout)
    return OK if res.found is not None else NOT_FOUND


def _cmd_scan(args, stdin, stdout, stderr):
    progress = None
    if args.progress > 0:
        every = args.progress

        def progress(count):
            if count % every == 0:
                stderr.write(f"{count}\n")

    kind = ScanKind(args.kind)
    if kind is ScanKind.CONJECTURE:
        report = scan_conjecture(args.n, jobs=args.jobs, progress=progress)
    else:
        report = scan_theorem(kind, args.n, args.k, jobs=args.jobs, progress=progress)
    _emit(report.to_json(timing=not args.no_timing), stdout)
    stderr.write(report.summary() + "\n")
    return OK if report.ok else NOT_FOUND


def _cmd_gen(args, stdin, stdout, stderr):
    if args.kind == "uniform-sharp":
        fam = gen_uniform_sharp(args.n)
    elif args.kind == "nonuniform-sharp":
        fam = gen_nonuniform_sharp(args.n)
    else:
        if args.k is None:
            raise BalfamError("complete-uniform needs --k")
        fam = gen_complete_uniform(args.n, args.k)
    stdout.write(format_family(fam, args.format))
    if args.format == "json":
        stdout.write("\n")
    return OK


_COMMANDS = {
    "find": _cmd_find,
    "verify": _cmd_verify,
    "brute": _cmd_brute,
    "scan": _cmd_scan,
    "gen": _cmd_gen,
}


def run(argv, stdin=None, stdout=None, stderr=None):
    stdin = sys.stdin if stdin is None else stdin
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        stderr.write(str(exc))
        return USAGE
    except SystemExit as exc:  # --help
        return OK if exc.code in (0, None) else USAGE
    try:
        return _COMMANDS[args.command](args, stdin, stdout, stderr)
    except BalfamError as exc:
        stderr.write(f"balfam {args.command}: {type(exc).__name__}: {exc}\n")
        return USAGE


def main():
    sys.exit(run(sys.argv[1:]))
