"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 resource refusal, 4 a checked
property failed.
"""

import argparse
import itertools
import sys

from . import analysis, dd, transforms
from .build import BuildTarget, ResourceLimitError, build_all, build_dd
from .matroid import MatroidError
from .oracle import ZddOracle
from .specfile import SpecError, load_spec

EXIT_OK, EXIT_INPUT, EXIT_RESOURCE, EXIT_CHECK = 0, 2, 3, 4
MAX_PERMUTATION_N = 8


class CheckFailed(Exception):
    pass


def _load(path, validate=True):
    """Load a spec; explicit families are checked against the matroid axioms
    unless ``validate`` is off (plain diagram builds accept any family)."""
    spec = load_spec(path)
    M = spec.matroid
    if validate and M.class_tag == "explicit":
        bad = [f for verdict in M.validate() for f in verdict.failures()]
        if bad:
            raise SpecError(f"{path}: not a matroid: " + "; ".join(f"{f.name}: {f.message}" for f in bad))
    return spec


def _out(lines):
    sys.stdout.write("\n".join(lines) + "\n")


def cmd_build(args):
    spec = _load(args.spec, validate=args.target == "bases")
    D = build_dd(spec.matroid, spec.order, BuildTarget(args.kind, args.target))
    if args.out == "dot":
        sys.stdout.write(dd.to_dot(D))
    elif args.out == "csv":
        _out(["level,element,width"] + [f"{i},{spec.order[i]},{w}" for i, w in enumerate(dd.level_widths(D))])
    else:
        _out([
            f"diagram: {D.kind}({args.target})",
            f"order: {' '.join(spec.order)}",
            f"n: {D.n}",
            f"size: {dd.size(D)}",
            f"width: {dd.width(D)}",
            f"level_widths: {' '.join(map(str, dd.level_widths(D)))}",
            f"count: {dd.count(D)}",
        ])


def cmd_relations(args):
    spec = _load(args.spec)
    rep = transforms.size_relations_report(spec.matroid, spec.order)
    lines = ["relation,lhs,rhs,verdict"]
    lines += [f"{c},{la},{lb},{v}" for c, _, _, _, la, lb, v in rep.rows()]
    lines.append("transform,verdict")
    lines += [f"{name},{'PASS' if ok else 'FAIL'}" for name, ok in rep.transforms]
    lines.append("sizes," + ",".join(f"{k}={v}" for k, v in rep.sizes.items()))
    _out(lines)
    if not rep.ok:
        raise CheckFailed("size relations failed")


def _report(M, order):
    if M.class_tag in analysis.BOUNDED_CLASSES:
        return analysis.check_width_bounds(M, order)
    return analysis.width_report(M, order)


def cmd_analyze(args):
    if args.laminar_k is not None:
        M, order = analysis.laminar_counterexample(args.laminar_k)
    elif args.spec is None:
        raise SpecError("analyze needs a spec file or --laminar-k")
    else:
        spec = _load(args.spec)
        M, order = spec.matroid, spec.order
    if args.order == "good":
        order = analysis.good_order(M)
    if args.order == "all-permutations":
        if M.n > MAX_PERMUTATION_N:
            raise ResourceLimitError(f"all-permutations is limited to {MAX_PERMUTATION_N} elements, got {M.n}")
        orders = [dd.ElementOrder(p) for p in itertools.permutations(M.ground)]
    else:
        orders = [order]
    ok = True
    lines = []
    for o in orders:
        rep = _report(M, o)
        ok &= rep.ok
        if len(orders) > 1:
            lines.append(f"# order: {' '.join(o)}")
        lines += rep.csv_lines()
    _out(lines)
    if not ok:
        raise CheckFailed("width bounds failed")


def cmd_pathwidth(args):
    spec = _load(args.spec)
    M = spec.matroid
    pw, witness = analysis.pathwidth_exact(M)
    lines = [f"pathwidth: {pw}", f"witness: {' '.join(witness)}"]
    ok = True
    try:
        good = analysis.good_order(M)
    except MatroidError:
        lines.append(f"good_order: none known for class {M.class_tag}")
    else:
        w = max(dd.width(D) for D in build_all(M, good).values())
        ok = w <= pw + 1
        lines += [f"good_order: {' '.join(good)}", f"max_width: {w}", f"bound: {pw + 1}",
                  f"verdict: {'PASS' if ok else 'FAIL'}"]
    _out(lines)
    if not ok:
        raise CheckFailed("width exceeds pathwidth + 1")


def cmd_rank(args):
    spec = _load(args.spec)
    M = spec.matroid
    names = [s.strip() for s in args.set.split(",") if s.strip()] if args.set else []
    unknown = [e for e in names if e not in spec.order.index_of]
    if unknown:
        raise SpecError(f"--set: unknown element(s) {unknown}")
    D = build_dd(M, spec.order, BuildTarget("zdd", "independent"))
    q = ZddOracle(D)
    r = q.rank(spec.order.mask(names))
    _out([f"set: {{{','.join(names)}}}", f"rank: {r}", f"steps: {q.last_visits}", f"rank(M): {M.rank()}"])


def make_parser():
    p = argparse.ArgumentParser(prog="matroid-dd", description="Decision diagrams of matroids.")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build one diagram and report its size and widths")
    b.add_argument("spec")
    b.add_argument("--kind", choices=["bdd", "zdd"], default="zdd")
    b.add_argument("--target", choices=["independent", "bases"], default="independent")
    b.add_argument("--out", choices=["summary", "dot", "csv"], default="summary")
    b.set_defaults(func=cmd_build)

    r = sub.add_parser("relations", help="sizes of all eight diagrams and the relations among them")
    r.add_argument("spec")
    r.set_defaults(func=cmd_relations)

    a = sub.add_parser("analyze", help="per-level width report as CSV")
    a.add_argument("spec", nargs="?")
    a.add_argument("--order", choices=["given", "good", "all-permutations"], default="given")
    a.add_argument("--laminar-k", type=int, metavar="K", help="use the built-in laminar family with parameter K")
    a.set_defaults(func=cmd_analyze)

    w = sub.add_parser("pathwidth", help="exact pathwidth and the width check under a good order")
    w.add_argument("spec")
    w.set_defaults(func=cmd_pathwidth)

    k = sub.add_parser("rank", help="rank of a set via the ZDD rank oracle")
    k.add_argument("spec")
    k.add_argument("--set", default="", help="comma separated element names")
    k.set_defaults(func=cmd_rank)
    return p


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (SpecError, MatroidError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
