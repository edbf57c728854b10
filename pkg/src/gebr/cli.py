"""Command-line interface.

Exit codes: 0 ok, 1 invalid input or failed check, 2 parse/usage error,
3 ambiguous decode.
"""

import argparse
import sys

from . import arrayfile
from .code import GebrParams, check_membership, is_mds_oracle, is_mds_theorem, is_prime
from .codec import MAX_SOLUTIONS, DecodeKind, decode_erasures, encode
from .witness import build_witness, decompose_tau, verify_witness

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_AMBIGUOUS = 3


class UsageError(Exception):
    pass


def _index_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _params(n, p, r):
    try:
        return GebrParams(n, p, r)
    except ValueError as exc:
        raise UsageError(str(exc))


def _load(path):
    try:
        return arrayfile.read(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    except arrayfile.ArrayFileError as exc:
        raise UsageError(f"{path}: {exc}")


def _emit(text, path, out):
    if path is None or path == "-":
        out.write(text)
    else:
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _describe(params):
    j, m = decompose_tau(params.p, params.tau)
    verdict = "MDS" if is_mds_theorem(params) else "NOT-MDS"
    return verdict, f"p={params.p} tau={params.tau}={params.p}^{j}*{m} (j={j}, m={m})"


def cmd_check(args, out):
    a = _load(args.file)
    if a.erased:
        raise UsageError(f"{args.file}: erased columns {sorted(a.erased)}; check needs a full array")
    report = check_membership(a)
    for j in report.column_failures:
        print(f"column {j}: column parity violated", file=out)
    for ell, u in report.slope_failures:
        print(f"slope {ell} line {u}: odd parity", file=out)
    if report.ok:
        print("codeword: ok", file=out)
        return EXIT_OK
    print(f"not a codeword: {len(report.column_failures)} column and "
          f"{len(report.slope_failures)} slope violations", file=out)
    return EXIT_INVALID


def cmd_decode(args, out):
    a = _load(args.file)
    if args.erased is not None:
        if len(set(args.erased)) != len(args.erased):
            raise UsageError("duplicate indices in --erased")
        if a.erased and set(args.erased) != a.erased:
            raise UsageError(f"--erased {sorted(args.erased)} does not match the file's "
                             f"erased columns {sorted(a.erased)}")
        if not a.erased:
            if any(not 0 <= j < a.params.n for j in args.erased):
                raise UsageError(f"--erased indices must lie in 0..{a.params.n - 1}")
            a = a.puncture(args.erased)
    if len(a.erased) > a.params.r:
        raise UsageError(f"{len(a.erased)} erased columns exceed r={a.params.r}")

    res = decode_erasures(a)
    if res.kind is DecodeKind.RECOVERED:
        _emit(arrayfile.render(res.array), args.output, out)
        return EXIT_OK
    if res.kind is DecodeKind.INCONSISTENT:
        print("inconsistent: no codeword agrees with the surviving columns", file=sys.stderr)
        return EXIT_INVALID
    base = args.output if args.output not in (None, "-") else args.file
    for k, sol in enumerate(res.solutions, 1):
        arrayfile.write(f"{base}.{k}", sol)
    more = f" (truncated at {MAX_SOLUTIONS})" if res.truncated else ""
    print(f"ambiguous: {len(res.solutions)} solutions{more} written to {base}.1 .. "
          f"{base}.{len(res.solutions)}", file=out)
    return EXIT_AMBIGUOUS


def _read_payload(path, width):
    try:
        with open(path, encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")
    bits = [ch for ch in text if not ch.isspace()]
    if set(bits) - {"0", "1"}:
        raise UsageError(f"{path}: payload must contain only 0/1 and whitespace")
    if len(bits) % width:
        raise UsageError(f"{path}: {len(bits)} payload bits is not a multiple of n - tau = {width}")
    return [[int(b) for b in bits[i:i + width]] for i in range(0, len(bits), width)]


def cmd_encode(args, out):
    params = _params(args.n, args.p, args.r)
    if not is_mds_theorem(params) and not args.force:
        verdict, detail = _describe(params)
        print(f"refusing: GEBR({params.n},{params.p},{params.r}) is NOT-MDS ({detail}); "
              "use --force to try this parity pattern anyway", file=sys.stderr)
        return EXIT_INVALID
    info = _read_payload(args.data, params.info_width)
    if len(info) + params.r > params.n:
        raise UsageError(f"{len(info)} info columns plus r={params.r} exceed n={params.n}")
    try:
        a = encode(info, params, args.parity_positions)
    except ValueError as exc:
        print(f"encode failed: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if not check_membership(a).ok:
        raise AssertionError("encoder produced a non-codeword")
    _emit(arrayfile.render(a), args.output, out)
    return EXIT_OK


def cmd_mds(args, out):
    params = _params(args.n, args.p, args.r)
    verdict, detail = _describe(params)
    print(f"GEBR({params.n},{params.p},r): {verdict}  {detail}", file=out)
    if args.oracle:
        oracle = "MDS" if is_mds_oracle(params) else "NOT-MDS"
        agree = oracle == verdict
        print(f"oracle: {oracle} ({'agrees' if agree else 'DISAGREES'})", file=out)
        if not agree:
            return EXIT_INVALID
    return EXIT_OK


def cmd_witness(args, out):
    params = _params(args.n, args.p, args.r)
    if is_mds_theorem(params):
        verdict, detail = _describe(params)
        print(f"GEBR({params.n},{params.p},r) is MDS ({detail}); no witness exists", file=out)
        return EXIT_INVALID
    w = build_witness(params)
    ok = verify_witness(w, params)
    print(f"shift: {w.shift}", file=out)
    print(f"support: {' '.join(map(str, w.x.support()))}", file=out)
    print(f"pairing: {' '.join(f'({a},{b})' for a, b in w.pairing)}", file=out)
    print(f"ell: {'-' if w.ell is None else w.ell}", file=out)
    print(f"j: {w.j} m: {w.m}", file=out)
    print(f"verified: {'yes' if ok else 'NO'}", file=out)
    return EXIT_OK if ok else EXIT_INVALID


def sweep_rows(max_n, r=2):
    """One dict per (p, tau) with p*tau <= max_n, ordered by n then p."""
    rows = []
    for n in range(2, max_n + 1):
        for p in range(2, n + 1):
            if n % p or not is_prime(p):
                continue
            tau = n // p
            row = {"n": n, "p": p, "tau": tau}
            if n < 3:
                # no r satisfies 2 <= r < n
                row["skipped"] = True
                rows.append(row)
                continue
            params = GebrParams(n, p, min(r, n - 1))
            theorem = is_mds_theorem(params)
            oracle = is_mds_oracle(params)
            witness = None
            if not theorem:
                witness = verify_witness(build_witness(params), params)
            row.update(theorem=theorem, oracle=oracle, agree=theorem == oracle,
                       witness=witness, skipped=False)
            rows.append(row)
    return rows


def cmd_sweep(args, out):
    if args.r < 2:
        raise UsageError(f"--r must be at least 2, got {args.r}")
    rows = sweep_rows(args.max_n, args.r)
    failures = 0
    print(f"{'n':>4} {'p':>3} {'tau':>4}  {'theorem':<8} {'oracle':<8} {'agree':<6} witness", file=out)
    for row in rows:
        head = f"{row['n']:>4} {row['p']:>3} {row['tau']:>4}"
        if row["skipped"]:
            print(f"{head}  trivial: no r with 2 <= r < n", file=out)
            continue
        theorem = "MDS" if row["theorem"] else "NOT-MDS"
        oracle = "MDS" if row["oracle"] else "NOT-MDS"
        wit = "-" if row["witness"] is None else ("ok" if row["witness"] else "FAIL")
        if not row["agree"] or row["witness"] is False:
            failures += 1
        print(f"{head}  {theorem:<8} {oracle:<8} {'yes' if row['agree'] else 'NO':<6} {wit}",
              file=out)
    checked = sum(not row["skipped"] for row in rows)
    print(f"{checked} parameter sets checked, {failures} disagreements", file=out)
    return EXIT_INVALID if failures else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="gebr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="verify that an array file is a codeword")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("decode", help="recover erased columns")
    sp.add_argument("file")
    sp.add_argument("--erased", type=_index_list,
                    help="comma-separated column indices (default: the file's '?' columns)")
    sp.add_argument("-o", "--output", help="output file (default stdout); "
                    "ambiguous results go to OUTPUT.1, OUTPUT.2, ...")
    sp.set_defaults(func=cmd_decode)

    sp = sub.add_parser("encode", help="encode a payload into a codeword")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--parity-positions", type=_index_list, required=True)
    sp.add_argument("--data", required=True,
                    help="payload file of 0/1 characters: n - tau bits per info column")
    sp.add_argument("--force", action="store_true", help="allow non-MDS parameters")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_encode)

    sp = sub.add_parser("mds", help="classify parameters as MDS or not")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--oracle", action="store_true", help="also run the exhaustive kernel check")
    sp.set_defaults(func=cmd_mds)

    sp = sub.add_parser("witness", help="print a non-MDS certificate")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, default=2)
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("sweep", help="compare theorem and oracle for all p*tau <= N")
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--r", type=int, default=2)
    sp.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"gebr {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
