"""Command-line surface: verify / transform / analyze on structure files.

Exit codes are stable contracts:
  0  the check or operation passed,
  1  an axiom check or analysis failed (with witnesses in the report),
  2  unreadable, unparseable, or kind-incompatible input,
  3  an internal theorem-backed invariant was violated (data is suspect).

Reports go to stdout as a text table and, with --report, to a structured
JSON-lines file (one check record per line) next to which a run manifest
with content digests of the canonicalized inputs is written.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import fileformat
from .core import (HopfCatData, MalformedDataError, MissingAntipodeError,
                   check_antipode_theorems, check_strictness, transform,
                   verify_structure)
from .dual import DualHopfCatData, dualize, undualize, verify_dual
from .duoidal import (BimonoidData, bimonoid_from_category,
                      category_from_bimonoid, verify_bimonoid)
from .fundamental import (HopfModuleData, RecoveryFailure, can_rank_table,
                          coinvariants, integrals, recover_antipode,
                          verify_hopf_module)
from .graded import GradedError, GradedHopfData, from_graded, validate_graded
from .groupoid import GroupoidData, GroupoidError, linearize_groupoid, \
    validate_groupoid
from .modules import ComoduleData, ModuleData, verify_comodule, verify_module
from .report import (CheckItem, InternalInvariantError, PreconditionError,
                     Report)
from .scalars import parse_field
from .weak import WeakHopfData, pack, pack_dual, verify_weak_hopf

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_INTERNAL = 3


class _CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(path: str):
    try:
        return fileformat.load(path)
    except OSError as e:
        raise _CliError(f"cannot read {path}: {e}", EXIT_PARSE)
    except fileformat.ParseError as e:
        raise _CliError(f"{path}: {e}", EXIT_PARSE)


def _write_report(report: Report, args, command: str, inputs: list[str]):
    if not args.quiet:
        print(report.table())
    if args.report:
        with open(args.report, "w") as fh:
            for item in report.items:
                fh.write(json.dumps(item.record()) + "\n")
        manifest = {
            "command": command,
            "argv": sys.argv[1:],
            "inputs": [{"path": p,
                        "digest": fileformat.digest(_load(p))}
                       for p in inputs],
            "seed": getattr(args, "seed", 0),
            "report": args.report,
        }
        with open(args.report + ".manifest.json", "w") as fh:
            json.dump(manifest, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _verify_any(obj, args) -> Report:
    if isinstance(obj, HopfCatData):
        level = args.level or ("hopf" if obj.has_antipode else "semihopf")
        rep = verify_structure(obj, level)
        if getattr(args, "strictness", False):
            rep.extend(check_strictness(obj))
        if getattr(args, "antipode_theorems", False):
            rep.extend(check_antipode_theorems(obj))
        return rep
    if args.level:
        raise _CliError("--level only applies to hopf-category files",
                        EXIT_PARSE)
    if isinstance(obj, DualHopfCatData):
        return verify_dual(obj)
    if isinstance(obj, WeakHopfData):
        return verify_weak_hopf(obj, seed=args.seed)
    if isinstance(obj, BimonoidData):
        return verify_bimonoid(obj)
    if isinstance(obj, ModuleData):
        return verify_module(obj)
    if isinstance(obj, ComoduleData):
        return verify_comodule(obj)
    if isinstance(obj, HopfModuleData):
        return verify_hopf_module(obj)
    if isinstance(obj, GroupoidData):
        rep = Report()
        try:
            validate_groupoid(obj)
            rep.add(CheckItem("groupoid-valid", (), True))
        except GroupoidError as e:
            rep.add(CheckItem("groupoid-valid", (), False, None, str(e), 1))
        return rep
    if isinstance(obj, GradedHopfData):
        return validate_graded(obj)
    raise _CliError(f"no verifier for {type(obj).__name__}", EXIT_PARSE)


def cmd_verify(args) -> int:
    obj = _load(args.path)
    try:
        rep = _verify_any(obj, args)
    except (MissingAntipodeError, MalformedDataError, PreconditionError) as e:
        raise _CliError(str(e), EXIT_PARSE)
    _write_report(rep, args, "verify", [args.path])
    return EXIT_PASS if rep.overall else EXIT_FAIL


_TRANSFORMS = {
    "from-groupoid": (GroupoidData,),
    "from-graded": (GradedHopfData,),
    "dualize": (HopfCatData,),
    "undualize": (DualHopfCatData,),
    "pack": (HopfCatData,),
    "pack-dual": (DualHopfCatData,),
    "opposite": (HopfCatData,),
    "coopposite": (HopfCatData,),
    "opcop": (HopfCatData,),
    "bimonoid": (HopfCatData,),
    "unbimonoid": (BimonoidData,),
}


def _apply_transform(obj, op: str, args):
    if not isinstance(obj, _TRANSFORMS[op]):
        raise _CliError(
            f"op '{op}' does not accept kind "
            f"'{fileformat.kind_of(obj)}'", EXIT_PARSE)
    if op == "from-groupoid":
        return linearize_groupoid(obj, parse_field(args.field))
    if op == "from-graded":
        return from_graded(obj)
    if op == "dualize":
        return dualize(obj)
    if op == "undualize":
        return undualize(obj)
    if op == "pack":
        return pack(obj)
    if op == "pack-dual":
        return pack_dual(obj)
    if op in ("opposite", "coopposite", "opcop"):
        return transform(obj, op)
    if op == "bimonoid":
        return bimonoid_from_category(obj)
    if op == "unbimonoid":
        return category_from_bimonoid(obj)
    raise _CliError(f"unknown transform op '{op}'", EXIT_PARSE)


def cmd_transform(args) -> int:
    obj = _load(args.path)
    try:
        out = _apply_transform(obj, args.op, args)
    except (GroupoidError, GradedError, MissingAntipodeError,
            MalformedDataError) as e:
        raise _CliError(str(e), EXIT_PARSE)
    # self-check before writing
    check_args = argparse.Namespace(level=None, seed=args.seed, quiet=True,
                                    report=None)
    rep = _verify_any(out, check_args)
    if not rep.overall:
        if not args.quiet:
            print(rep.table())
        raise _CliError(
            f"transform output fails its own verification: {rep.summary()}",
            EXIT_INTERNAL)
    fileformat.save(args.out, out)
    if not args.quiet:
        print(f"wrote {fileformat.kind_of(out)} to {args.out}")
    _write_report(rep, args, f"transform {args.op}", [args.path])
    return EXIT_PASS


def _basis_lines(field, bases: dict) -> list[str]:
    lines = []
    for x in sorted(bases):
        vecs = bases[x]
        lines.append(f"{x}: dimension {len(vecs)}")
        for v in vecs:
            lines.append("  (" + ", ".join(field.fmt(c) for c in v) + ")")
    return lines


def cmd_analyze(args) -> int:
    obj = _load(args.path)
    op = args.op
    rep = Report()
    code = EXIT_PASS
    out_lines: list[str] = []

    if op == "recover-antipode":
        if not isinstance(obj, HopfCatData):
            raise _CliError("recover-antipode needs a hopf-category file",
                            EXIT_PARSE)
        result = recover_antipode(obj.strip_antipode())
        if isinstance(result, RecoveryFailure):
            rep.add(CheckItem(
                "antipode-recoverable", (result.z, result.x, result.y), False,
                None,
                f"canonical map has rank {result.rank} of {result.dim}", 1))
            code = EXIT_FAIL
        else:
            rep.add(CheckItem("antipode-recoverable", (), True))
            if args.out:
                fileformat.save(args.out, result)
                out_lines.append(f"wrote completed hopf-category to {args.out}")
    elif op == "integrals":
        if not isinstance(obj, HopfCatData):
            raise _CliError("integrals needs a hopf-category file", EXIT_PARSE)
        bases = {x: integrals(obj, x) for x in obj.objects}
        for x in obj.objects:
            rep.add(CheckItem("integral-basis", (x,), True, None,
                              f"dimension {len(bases[x])}"))
        out_lines.extend(_basis_lines(obj.field, bases))
    elif op == "coinvariants":
        if not isinstance(obj, HopfModuleData):
            raise _CliError("coinvariants needs a hopf-module file",
                            EXIT_PARSE)
        fam = coinvariants(obj)
        for x in obj.base.objects:
            rep.add(CheckItem("coinvariant-basis", (x,), True, None,
                              f"dimension {fam.dim(x)}"))
        out_lines.extend(_basis_lines(obj.base.field, fam.bases))
    elif op == "can-ranks":
        if not isinstance(obj, HopfCatData):
            raise _CliError("can-ranks needs a hopf-category file", EXIT_PARSE)
        table = can_rank_table(obj)
        for (z, x, y), (r, d) in sorted(table.items()):
            ok = r == d
            rep.add(CheckItem("can-invertible", (z, x, y), ok,
                              None if ok else 0, f"rank {r} of {d}",
                              0 if ok else 1))
            out_lines.append(f"can[{z};{x},{y}] rank {r} of {d} "
                             + ("invertible" if ok else "SINGULAR"))
        if not rep.overall:
            code = EXIT_FAIL
    elif op == "strictness":
        if not isinstance(obj, HopfCatData):
            raise _CliError("strictness needs a hopf-category file",
                            EXIT_PARSE)
        rep = check_strictness(obj)
        if not all(i.ok for i in rep.by_axiom("compose-surjective")):
            code = EXIT_FAIL
    else:
        raise _CliError(f"unknown analyze op '{op}'", EXIT_PARSE)

    if args.out and op in ("integrals", "coinvariants", "can-ranks"):
        with open(args.out, "w") as fh:
            fh.write("\n".join(out_lines) + "\n")
    if not args.quiet:
        for line in out_lines:
            print(line)
    _write_report(rep, args, f"analyze {op}", [args.path])
    return code


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hopfcat",
        description="exact structure-constant calculus for finite k-linear "
                    "Hopf categories")
    p.add_argument("--field", default="q",
                   help="target field for from-groupoid: q or fp:<p>")
    p.add_argument("--seed", type=int, default=0,
                   help="seed for sampled audits")
    p.add_argument("--report", default=None,
                   help="write a JSON-lines report (plus run manifest)")
    p.add_argument("--quiet", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="check all axioms of a structure file")
    pv.add_argument("path")
    pv.add_argument("--level", choices=("category", "semihopf", "hopf"),
                    default=None)
    pv.add_argument("--strictness", action="store_true",
                    help="also check surjectivity of all composition maps")
    pv.add_argument("--antipode-theorems", action="store_true",
                    help="also check the derived antipode identities")
    pv.set_defaults(func=cmd_verify)

    pt = sub.add_parser("transform", help="apply a construction and write "
                                          "the canonical output file")
    pt.add_argument("path")
    pt.add_argument("op", choices=sorted(_TRANSFORMS))
    pt.add_argument("out")
    pt.set_defaults(func=cmd_transform)

    pa = sub.add_parser("analyze", help="derived computations and rank scans")
    pa.add_argument("path")
    pa.add_argument("op", choices=("recover-antipode", "integrals",
                                   "coinvariants", "can-ranks", "strictness"))
    pa.add_argument("--out", default=None,
                    help="output file (completed structure or listing)")
    pa.set_defaults(func=cmd_analyze)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except (fileformat.ParseError, GroupoidError, GradedError,
            MissingAntipodeError, MalformedDataError,
            PreconditionError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except InternalInvariantError as e:
        print(f"internal invariant violated: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
