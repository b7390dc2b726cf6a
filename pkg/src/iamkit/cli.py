"""Command-line interface.

Subcommands: count, enumerate, biject, genfunc, selftest.  Exit codes:
0 success / agreement, 1 usage or invalid parameters, 2 verification
failure or disagreement, 3 budget exceeded.  All output is deterministic
for fixed arguments (fixed default seed, sorted iteration everywhere).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bijection, formulas, genfunc, oracle, skew, symmetry
from .core import BinaryMatrix, SkewShape
from .oracle import BudgetExceeded, EnumerationBudget

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFY = 2
EXIT_BUDGET = 3


def _parse_parts(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


def _emit(out, text):
    out.write(text + "\n")


def _json_compact(obj):
    return json.dumps(obj, separators=(",", ":"))


# ---------------------------------------------------------------------------
# count


def _cmd_count(args, out):
    fmt = args.format
    if args.cls is not None:
        m = args.m if args.m is not None else args.n
        n = args.n if args.n is not None else args.m
        if m is None or n is None or args.k is None:
            raise ValueError("--class needs --m/--n and --k")
        ident = "class=%s,m=%d,n=%d,k=%d" % (args.cls, m, n, k := args.k)
        formula = formulas.count_symmetry(args.cls, m, n, k)
        oracle_val = (symmetry.brute_count_class(args.cls, m, n, k)
                      if args.with_oracle else None)
    elif args.lam is not None:
        if args.k is None:
            raise ValueError("--lambda needs --k")
        shape = SkewShape(_parse_parts(args.lam),
                          _parse_parts(args.mu) if args.mu else ())
        ident = "lambda=%s,mu=%s,k=%d" % (
            ",".join(map(str, shape.lam.parts)),
            ",".join(map(str, shape.mu.parts)), args.k)
        formula = skew.count_skew_fillings(shape, args.k)
        oracle_val = (oracle.oracle_count_shape(
            shape, args.k, EnumerationBudget(max_cells=args.budget))
            if args.with_oracle else None)
    elif args.t is not None:
        if None in (args.m, args.n, args.k):
            raise ValueError("--t needs --m --n --k")
        m, n, k, t = args.m, args.n, args.k, args.t
        ident = "m=%d,n=%d,k=%d,t=%d" % (m, n, k, t)
        formula = skew.count_truncated_rect(m, n, k, t)
        oracle_val = (oracle.oracle_count_shape(
            skew.TruncatedRect(m, n, k, t).shape(), k,
            EnumerationBudget(max_cells=args.budget))
            if args.with_oracle else None)
    else:
        if None in (args.m, args.n, args.k):
            raise ValueError("count needs --m --n --k")
        m, n, k = args.m, args.n, args.k
        ident = "m=%d,n=%d,k=%d" % (m, n, k)
        formula = formulas.count_iams(m, n, k)
        oracle_val = oracle.oracle_count(m, n, k) if args.with_oracle else None

    verdict = None
    if oracle_val is not None:
        verdict = "AGREE" if formula == oracle_val else "DISAGREE"

    if fmt == "json":
        obj = {"id": ident, "formula": formula}
        if oracle_val is not None:
            obj["oracle"] = oracle_val
            obj["verdict"] = verdict
        _emit(out, _json_compact(obj))
    elif fmt == "csv":
        _emit(out, "id,formula,oracle,verdict")
        _emit(out, "%s,%d,%s,%s" % (
            ident.replace(",", ";"), formula,
            "" if oracle_val is None else oracle_val,
            "" if verdict is None else verdict))
    else:
        if oracle_val is None:
            _emit(out, str(formula))
        else:
            _emit(out, "%d %d %s" % (formula, oracle_val, verdict))
    return EXIT_VERIFY if verdict == "DISAGREE" else EXIT_OK


# ---------------------------------------------------------------------------
# enumerate


def _cmd_enumerate(args, out):
    if args.k is None:
        raise ValueError("enumerate needs --k")
    budget = EnumerationBudget(max_cells=args.budget,
                               max_results=args.max_results)
    if args.lam is not None:
        shape = SkewShape(_parse_parts(args.lam),
                          _parse_parts(args.mu) if args.mu else ())
        stream = oracle.enumerate_maximal_fillings(shape, args.k, budget)
        for F in stream:
            _emit(out, _json_compact(F.to_json_dict()))
    else:
        if args.m is None or args.n is None:
            raise ValueError("enumerate needs --m --n or --lambda")
        stream = oracle.enumerate_maximal_iams(args.m, args.n, args.k, budget)
        for M in stream:
            _emit(out, _json_compact(M.to_json_dict()))
    return EXIT_OK


# ---------------------------------------------------------------------------
# biject


def _cmd_biject(args, out, stdin):
    if args.k is None and args.to in ("pp", "paths"):
        raise ValueError("biject needs --k")
    payload = json.load(stdin)
    if args.to == "pp":
        M = BinaryMatrix.from_json_dict(payload)
        pp = bijection.matrix_to_pp(M, args.k)
        if bijection.pp_to_matrix(pp, M.m, M.n, args.k) != M:
            _emit(out, "round trip failed")
            return EXIT_VERIFY
        _emit(out, _json_compact(pp.to_json_dict()))
        return EXIT_OK
    if args.to == "paths":
        M = BinaryMatrix.from_json_dict(payload)
        fam = bijection.matrix_to_paths(M, args.k)
        if bijection.paths_to_matrix(fam, M.m, M.n, args.k) != M:
            _emit(out, "round trip failed")
            return EXIT_VERIFY
        _emit(out, _json_compact(fam.to_json()))
        return EXIT_OK
    if args.to == "matrix":
        pp = bijection.PlanePartition.from_json_dict(payload)
        k = pp.c + 1
        if args.k is not None and args.k != k:
            raise ValueError("--k disagrees with the array box")
        m, n = pp.a + pp.c, pp.b + pp.c
        M = bijection.pp_to_matrix(pp, m, n, k)
        if bijection.matrix_to_pp(M, k) != pp:
            _emit(out, "round trip failed")
            return EXIT_VERIFY
        _emit(out, _json_compact(M.to_json_dict()))
        return EXIT_OK
    raise ValueError("unknown target %r" % (args.to,))


# ---------------------------------------------------------------------------
# genfunc


def _cmd_genfunc(args, out):
    if None in (args.m, args.n, args.k):
        raise ValueError("genfunc needs --m --n --k")
    m, n, k = args.m, args.n, args.k
    if args.t1:
        poly = genfunc.volume_gf(m, n, k)
        _emit(out, ",".join(str(c) for c in poly.to_list()))
        return EXIT_OK
    pts = genfunc.seeded_points(args.points, seed=args.seed,
                                span=m + n + k)
    bad = 0
    for (q, t) in pts:
        lhs = genfunc.gf_lhs(m, n, k, q, t)
        rhs = genfunc.gf_rhs(m, n, k, q, t)
        status = "OK" if lhs == rhs else "MISMATCH"
        if lhs != rhs:
            bad += 1
        _emit(out, "q=%s t=%s lhs=%s rhs=%s %s" % (q, t, lhs, rhs, status))
    _emit(out, "genfunc identity: %d/%d points agree" %
          (len(pts) - bad, len(pts)))
    return EXIT_VERIFY if bad else EXIT_OK


# ---------------------------------------------------------------------------
# selftest


def _selftest_checks(quick):
    """(name, callable) pairs; each callable returns a bool."""
    from .bijection import path_endpoints

    def six_matrices():
        stream = list(oracle.enumerate_maximal_iams(3, 4, 3))
        if len(stream) != 6:
            return False
        want = {
            ((3, 3), (3, 4)): (0, 0, (0, 0)),
            ((2, 2), (3, 4)): (1, 1, (1, 0)),
            ((2, 2), (2, 3)): (2, 1, (1, 0)),
            ((1, 1), (3, 4)): (2, 2, (1, 1)),
            ((1, 1), (2, 3)): (3, 2, (1, 1)),
            ((1, 1), (1, 2)): (4, 2, (1, 1)),
        }
        for M in stream:
            key = tuple(M.zero_cells())
            got = (genfunc.stat_v(M), genfunc.stat_vd(M), genfunc.stat_d(M, 3))
            if want.get(key) != got:
                return False
        return True

    def counts():
        sizes = [(3, 4, 3), (4, 4, 2), (4, 4, 3), (4, 4, 4), (5, 5, 3)]
        return all(formulas.count_iams(m, n, k) == oracle.oracle_count(m, n, k)
                   for (m, n, k) in sizes)

    def roundtrips():
        for M in oracle.enumerate_maximal_iams(4, 4, 3):
            pp = bijection.matrix_to_pp(M, 3)
            if bijection.pp_to_matrix(pp, 4, 4, 3) != M:
                return False
            fam = bijection.matrix_to_paths(M, 3)
            if bijection.paths_to_matrix(fam, 4, 4, 3) != M:
                return False
        return True

    def zigzag():
        return all(bijection.count_zigzag_decompositions(M, 3) == 2
                   for M in oracle.enumerate_maximal_iams(3, 4, 3))

    def gfid():
        pts = genfunc.seeded_points(5)
        return all(genfunc.gf_lhs(3, 4, 3, q, t) == genfunc.gf_rhs(3, 4, 3, q, t)
                   for (q, t) in pts)

    def volume():
        return genfunc.volume_gf(3, 4, 3).to_list() == [1, 1, 2, 1, 1]

    def truncated():
        for (m, n, k, t) in [(2, 2, 2, 0), (2, 2, 2, 1), (3, 3, 2, 1),
                             (3, 4, 3, 1)]:
            f = skew.count_truncated_rect(m, n, k, t)
            r = skew.reflection_det(m, n, k, t)
            starts, ends = path_endpoints(m, n, k)
            l = skew.lgv_count(starts, ends, skew.truncated_region(m, n, t))
            o = oracle.oracle_count_shape(skew.TruncatedRect(m, n, k, t).shape(), k)
            if not (f == r == l == o):
                return False
        return True

    def skewdet():
        sh = SkewShape((4, 4, 4))
        if skew.count_skew_fillings(sh, 3) != 6:
            return False
        if skew.count_skew_fillings(sh, 3) != oracle.oracle_count_shape(sh, 3):
            return False
        sh2 = SkewShape((3, 3, 2), (1, 0, 0))
        return (skew.count_skew_fillings(sh2, 2)
                == oracle.oracle_count_shape(sh2, 2) == 4)

    def kratt():
        import random
        rng = random.Random(genfunc.DEFAULT_SEED)
        for _ in range(20):
            d = rng.randint(1, 4)
            A = rng.randint(0, 10)
            c = rng.choice((0, 1))
            L = [rng.randint(c - A - d, d) for _ in range(d)]
            if skew.kratt_lhs(d, A, L, c) != skew.kratt_rhs(d, A, L, c):
                return False
        return True

    def products():
        for n in range(3, 10):
            for kk in range(2, (n + 1) // 2 + 1):
                if 2 * kk - 1 > n:
                    continue
                if formulas.check_product_relations(n, kk) != (True, True):
                    return False
        return True

    checks = [
        ("six-matrix-statistics", six_matrices),
        ("counts-vs-oracle", counts),
        ("round-trips", roundtrips),
        ("zigzag-decompositions", zigzag),
        ("genfunc-identity", gfid),
        ("volume-polynomial", volume),
        ("truncated-rectangles", truncated),
        ("skew-determinant", skewdet),
        ("binomial-determinant", kratt),
        ("product-relations", products),
    ]
    if quick:
        keep = {"six-matrix-statistics", "volume-polynomial", "skew-determinant",
                "binomial-determinant", "product-relations"}
        checks = [c for c in checks if c[0] in keep]
    return checks


def _cmd_selftest(args, out):
    failures = 0
    for name, fn in _selftest_checks(args.quick):
        try:
            ok = fn()
        except Exception as exc:  # a crash is a failure, not an excuse
            ok = False
            _emit(out, "FAIL %s (%s)" % (name, exc))
            failures += 1
            continue
        _emit(out, ("PASS " if ok else "FAIL ") + name)
        if not ok:
            failures += 1
    _emit(out, "selftest: %d failure(s)" % failures)
    return EXIT_VERIFY if failures else EXIT_OK


# ---------------------------------------------------------------------------
# wiring


def _build_parser():
    p = argparse.ArgumentParser(
        prog="iamkit",
        description="Exact counts, enumeration and bijections for maximal "
                    "I_k-avoiding matrices and skew-shape fillings.")
    sub = p.add_subparsers(dest="command", required=True)

    def add_common(sp, with_dims=True):
        if with_dims:
            sp.add_argument("--m", type=int)
            sp.add_argument("--n", type=int)
            sp.add_argument("--k", type=int)
        sp.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")
        sp.add_argument("--seed", type=int, default=genfunc.DEFAULT_SEED)
        sp.add_argument("--budget", type=int, default=64,
                        help="largest board (cells) a search may touch")
        sp.add_argument("--out", type=str, default=None)

    sp = sub.add_parser("count", help="closed-form counts, optionally "
                                      "checked against the search oracle")
    add_common(sp)
    sp.add_argument("--t", type=int, default=None)
    sp.add_argument("--lambda", dest="lam", type=str, default=None)
    sp.add_argument("--mu", type=str, default=None)
    sp.add_argument("--class", dest="cls", type=str, default=None,
                    choices=formulas.SYMMETRY_TAGS)
    sp.add_argument("--with-oracle", action="store_true")

    sp = sub.add_parser("enumerate", help="stream all maximal objects as "
                                          "JSON lines")
    add_common(sp)
    sp.add_argument("--lambda", dest="lam", type=str, default=None)
    sp.add_argument("--mu", type=str, default=None)
    sp.add_argument("--max-results", type=int, default=None)

    sp = sub.add_parser("biject", help="convert matrix/pp/paths, verifying "
                                       "the round trip")
    add_common(sp)
    sp.add_argument("--to", choices=("pp", "paths", "matrix"), required=True)

    sp = sub.add_parser("genfunc", help="volume polynomial or the (q,t) "
                                        "identity at sampled points")
    add_common(sp)
    sp.add_argument("--t1", action="store_true",
                    help="print the t=1 volume polynomial coefficients")
    sp.add_argument("--points", type=int, default=20)

    sp = sub.add_parser("selftest", help="run the built-in checks")
    add_common(sp, with_dims=False)
    sp.add_argument("--quick", action="store_true")

    return p


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; remap to our usage code
        return EXIT_USAGE if exc.code else EXIT_OK

    sink = open(args.out, "w") if getattr(args, "out", None) else sys.stdout
    try:
        if args.command == "count":
            return _cmd_count(args, sink)
        if args.command == "enumerate":
            return _cmd_enumerate(args, sink)
        if args.command == "biject":
            return _cmd_biject(args, sink, sys.stdin)
        if args.command == "genfunc":
            return _cmd_genfunc(args, sink)
        if args.command == "selftest":
            return _cmd_selftest(args, sink)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print("invalid input: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    finally:
        if sink is not sys.stdout:
            sink.close()


if __name__ == "__main__":
    sys.exit(main())
