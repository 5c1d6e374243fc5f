"""Command line front end.

Exit codes: 0 success, 1 bad input or unsupported request, 2 a
mathematical check failed (vanishing witness, critical counts that do not
match the Betti numbers).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import CertificationError, DomainError
from .homology import betti, boundary_matrix, cell_counts, euler_characteristic
from .morse import WheelOrder, classify, critical_cells, critical_counts
from .ring import parse_factors, product_of_pairs
from .symbols import StripParams, dimension, enumerate_cells, faces, format_symbol, parse_symbol
from .tc import tc_report, zdcl_certificate, zdcl_search

SUITES = {
    "quick": [(n, w) for n in range(1, 6) for w in range(2, max(2, n) + 1)],
    "full": [(n, 2) for n in range(1, 8)]
    + [(n, w) for w in range(3, 7) for n in range(1, 7) if n >= w or n == 1],
}


class UsageError(DomainError):
    pass


class _Parser(argparse.ArgumentParser):
    # exit code 2 is reserved for certification failures
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _add_common(sp: argparse.ArgumentParser, need_params: bool = True) -> None:
    if need_params:
        sp.add_argument("-n", type=int, required=True, help="number of disks")
        sp.add_argument("-w", type=int, required=True, help="strip width (>= 2)")
    sp.add_argument("--format", choices=["table", "json", "csv"], default="table")
    sp.add_argument(
        "--wheel-order", choices=[o.value for o in WheelOrder], default=WheelOrder.SIZE_THEN_AXLE.value
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="diskstrip", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("cells", help="list cells")
    _add_common(sp)
    sp.add_argument("--dim", type=int)

    sp = sub.add_parser("dim", help="top cell dimension")
    _add_common(sp)

    sp = sub.add_parser("faces", help="codimension-one faces of a symbol")
    _add_common(sp, need_params=False)
    sp.add_argument("--symbol", required=True)

    sp = sub.add_parser("betti", help="GF(2) Betti numbers")
    _add_common(sp)
    sp.add_argument("--dump-boundary", type=int, metavar="DIM", help="print the boundary matrix of DIM")

    sp = sub.add_parser("critical", help="critical cells, or classify one symbol")
    _add_common(sp)
    sp.add_argument("--dim", type=int)
    sp.add_argument("--symbol")

    sp = sub.add_parser("cup", help="cup product of degree-one generators")
    _add_common(sp)
    sp.add_argument("--factors", required=True, help='e.g. "4 2;4 1"')

    sp = sub.add_parser("zdcl", help="zero-divisor cup length certificate")
    _add_common(sp)
    sp.add_argument("--search", action="store_true", help="also run the depth-first search")
    sp.add_argument("--budget", type=int, default=200_000)

    sp = sub.add_parser("tc", help="topological complexity report")
    _add_common(sp)

    sp = sub.add_parser("verify", help="run all checks over a suite of (n, w)")
    _add_common(sp, need_params=False)
    sp.add_argument("--suite", choices=sorted(SUITES), default="quick")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument(
        "--follower-offset",
        type=int,
        default=1,
        help="follower pair must hold >= w + OFFSET labels (default 1; other values are a negative control)",
    )
    return parser


def _params(args) -> StripParams:
    return StripParams(args.n, args.w)


def _emit_rows(out, fmt: str, header: Sequence[str], rows: list[Sequence], table=None) -> None:
    if fmt == "json":
        json.dump([dict(zip(header, r)) for r in rows], out, indent=2)
        out.write("\n")
    elif fmt == "csv":
        wr = csv.writer(out, lineterminator="\n")
        wr.writerow(header)
        wr.writerows(rows)
    else:
        for r in rows:
            out.write((table(r) if table else " ".join(map(str, r))) + "\n")


def cmd_cells(args, out) -> int:
    p = _params(args)
    cells = enumerate_cells(p, args.dim)
    _emit_rows(out, args.format, ["symbol", "dim"], [(format_symbol(s), s.dimension) for s in cells],
               table=lambda r: r[0])
    return 0


def cmd_dim(args, out) -> int:
    d = dimension(_params(args))
    if args.format == "json":
        out.write(json.dumps({"n": args.n, "w": args.w, "dim": d}) + "\n")
    else:
        out.write(f"{d}\n")
    return 0


def cmd_faces(args, out) -> int:
    s = parse_symbol(args.symbol)
    rows = [(format_symbol(f), k) for f, k in faces(s)]
    _emit_rows(out, args.format, ["face", "multiplicity"], rows)
    return 0


def cmd_betti(args, out) -> int:
    p = _params(args)
    if args.dump_boundary is not None:
        out.write(boundary_matrix(p, args.dump_boundary).dump())
        return 0
    b = betti(p)
    if args.format == "json":
        out.write(json.dumps({"n": p.n, "w": p.w, "betti": list(b), "euler": euler_characteristic(p)}) + "\n")
    elif args.format == "csv":
        out.write("dim,betti\n" + "".join(f"{d},{x}\n" for d, x in enumerate(b)))
    else:
        out.write(" ".join(map(str, b)) + "\n")
    return 0


def cmd_critical(args, out) -> int:
    p = _params(args)
    order = WheelOrder(args.wheel_order)
    if args.symbol:
        s = parse_symbol(args.symbol)
        if s.n != p.n or not s.fits(p.w):
            raise DomainError(f"{args.symbol!r} is not a cell for n={p.n}, w={p.w}")
        statuses = classify(s, p.w, order)
        ok = all(st.ok for st in statuses)
        if args.format == "json":
            out.write(json.dumps({"symbol": format_symbol(s), "critical": ok,
                                  "blocks": [st.reason for st in statuses]}) + "\n")
        else:
            out.write(f"{format_symbol(s)}: {'critical' if ok else 'not critical'}\n")
            for st in statuses:
                out.write(f"  {st.reason}\n")
        return 0
    cells = critical_cells(p, args.dim, order)
    rows = [(format_symbol(c.symbol), c.dimension, c.follower_free) for c in cells]
    _emit_rows(out, args.format, ["symbol", "dim", "follower_free"], rows, table=lambda r: r[0])
    return 0


def cmd_cup(args, out) -> int:
    p = _params(args)
    pairs = parse_factors(args.factors)
    x = product_of_pairs(pairs, p, WheelOrder(args.wheel_order))
    if args.format == "json":
        out.write(json.dumps({"degree": x.degree, "terms": [format_symbol(s) for s in x.sorted_terms()]}) + "\n")
    else:
        out.write(str(x) + "\n")
    return 0


def cmd_zdcl(args, out) -> int:
    p = _params(args)
    order = WheelOrder(args.wheel_order)
    cert = zdcl_certificate(p, order)
    data = {"n": p.n, "w": p.w, "zdcl": cert.length, "witness": cert.witness.text_pairs()}
    if args.search:
        res = zdcl_search(p, order, args.budget)
        data["search"] = {"length": res.length, "incomplete": res.incomplete,
                          "factors": [list(f) for f in res.factors]}
    if args.format == "json":
        out.write(json.dumps(data) + "\n")
    else:
        out.write(f"zdcl {cert.length}\n")
        for a, b in data["witness"]:
            out.write(f"  nu({a}) x nu({b})\n")
        if args.search:
            s = data["search"]
            out.write(f"search {s['length']}{' (incomplete)' if s['incomplete'] else ''}\n")
    return 0


def cmd_tc(args, out) -> int:
    rep = tc_report(_params(args), WheelOrder(args.wheel_order))
    d = rep.to_dict()
    if args.format == "json":
        out.write(json.dumps(d) + "\n")
    elif args.format == "csv":
        keys = [k for k in d if k != "witness"]
        wr = csv.writer(out, lineterminator="\n")
        wr.writerow(keys)
        wr.writerow([d[k] for k in keys])
    else:
        out.write(f"TC(conf({rep.n},{rep.w})) = {rep.value}  [{rep.branch.value}]\n")
        out.write(f"  m={rep.m} dim={rep.dim} lower={rep.lower} upper={rep.upper} "
                  f"zdcl={rep.zdcl} certified={str(rep.certified).lower()}\n")
    return 0


@dataclass
class InstanceResult:
    n: int
    w: int
    cells: int
    betti: list[int]
    checks: dict[str, bool] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def verify_instance(n: int, w: int, order_value: str = "size-axle", follower_offset: int = 1) -> InstanceResult:
    t0 = time.perf_counter()
    p = StripParams(n, w)
    order = WheelOrder(order_value)
    top = dimension(p)
    counts = cell_counts(p)
    b = list(betti(p))
    res = InstanceResult(n, w, sum(counts), b)

    res.checks["dimension"] = max(s.dimension for s in enumerate_cells(p)) == top
    res.checks["boundary_squared"] = all(
        (boundary_matrix(p, d) @ boundary_matrix(p, d + 1)).is_zero() for d in range(1, top)
    )
    res.checks["euler"] = euler_characteristic(p) == sum((-1) ** d * x for d, x in enumerate(b))
    for o in WheelOrder:
        got = critical_counts(p, o, w + follower_offset)
        matched = got == b
        if o is order:
            res.checks["critical_vs_betti"] = matched
        res.notes.append(f"{o.value}:{'ok' if matched else 'mismatch'}")

    if n > w:
        try:
            rep = tc_report(p, order)
            res.checks["zdcl"] = rep.zdcl == 2 * top
            res.checks["tc"] = rep.certified and rep.value == 2 * n - 2 * p.m + 1
        except CertificationError as exc:
            res.checks["zdcl"] = False
            res.notes.append(str(exc))
    else:
        rep = tc_report(p, order)
        res.checks["tc"] = rep.value == (1 if n == 1 else 2 * n - 2)
    res.seconds = time.perf_counter() - t0
    return res


def _verify_task(args):
    return verify_instance(*args)


def verify(suite: str, order: WheelOrder = WheelOrder.SIZE_THEN_AXLE, jobs: int = 1,
           follower_offset: int = 1) -> list[InstanceResult]:
    tasks = [(n, w, order.value, follower_offset) for n, w in SUITES[suite]]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_task, tasks))
    return [_verify_task(t) for t in tasks]


def cmd_verify(args, out) -> int:
    order = WheelOrder(args.wheel_order)
    results = verify(args.suite, order, args.jobs, args.follower_offset)
    validated = [o.value for o in WheelOrder
                 if all(f"{o.value}:ok" in r.notes for r in results)]
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        out.write(json.dumps({
            "suite": args.suite,
            "instances": [
                {"n": r.n, "w": r.w, "cells": r.cells, "betti": r.betti, "checks": r.checks,
                 "notes": r.notes, "pass": r.ok} for r in results
            ],
            "validated_wheel_orders": validated,
            "pass": not failed,
        }, indent=2) + "\n")
    else:
        for r in results:
            checks = " ".join(f"{k}={'ok' if v else 'FAIL'}" for k, v in r.checks.items())
            out.write(f"n={r.n} w={r.w} cells={r.cells} betti={' '.join(map(str, r.betti))} "
                      f"{checks} [{', '.join(r.notes)}] {r.seconds:.2f}s {'PASS' if r.ok else 'FAIL'}\n")
        out.write(f"wheel orders reproducing Betti numbers: {', '.join(validated) or 'none'}\n")
        out.write(f"{len(results) - len(failed)}/{len(results)} instances passed\n")
    return 2 if failed else 0


COMMANDS = {
    "cells": cmd_cells,
    "dim": cmd_dim,
    "faces": cmd_faces,
    "betti": cmd_betti,
    "critical": cmd_critical,
    "cup": cmd_cup,
    "zdcl": cmd_zdcl,
    "tc": cmd_tc,
    "verify": cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except CertificationError as exc:
        err.write(f"certification failure: {exc}\n")
        return 2
    except DomainError as exc:
        err.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
