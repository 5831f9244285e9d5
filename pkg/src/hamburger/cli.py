"""Command-line front end.

Exit codes: 0 success, 1 validation or parse failure, 2 budget exceeded,
3 internal invariant breach (two methods disagreed).
"""
from __future__ import annotations

import argparse
import hashlib
import sys
import time
from pathlib import Path

from .cycles import DEFAULT_MAX_SYSTEMS, format_systems
from .errors import HamburgerError, InvariantError
from .files import dump_graph, dump_json, load_graph, load_region
from .graph import (
    GeneralizedHamburgerGraph, build_generalized_matrix, build_matrix, generalized_reduced_matrix,
    reduced_matrix, require_valid,
)
from .linalg import det
from .propp import analyze, emit_ratio_series, emit_report, rho_series
from .regions import PillowSpec, aztec_diamond, build_digraph, generalized_pillow, q_pillow
from .schroeder import modified_matrix, schroeder_matrix, table_tsv
from .tilings import DEFAULT_MAX_CELLS, count_tilings, enumerate_tilings


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _steps(text: str) -> tuple[int, ...]:
    return tuple(int(t) for t in text.split(",") if t.strip()) if text else ()


def _write(out: str | None, text: str) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_det(args) -> int:
    h = load_graph(args.graph)
    require_valid(h)
    if isinstance(h, GeneralizedHamburgerGraph):
        full = det(build_generalized_matrix(h))
        reduced = det(generalized_reduced_matrix(h))
    else:
        full = det(build_matrix(h).matrix)
        reduced = det(reduced_matrix(h))
    print(f"full={full} reduced={reduced}")
    if full != reduced:
        raise InvariantError(f"full determinant {full} != reduced determinant {reduced}")
    return 0


def cmd_cycles(args) -> int:
    h = load_graph(args.graph)
    require_valid(h)
    sys.stdout.write(format_systems(h, max_systems=args.max_systems))
    if isinstance(h, GeneralizedHamburgerGraph) and not h.is_standard:
        print(f"det={det(build_generalized_matrix(h))}")
    return 0


def _region_from_args(args):
    if args.kind == "diamond":
        return aztec_diamond(args.n), {"kind": "diamond", "n": args.n}
    if args.kind == "pillow":
        return q_pillow(args.n, args.q), {"kind": "pillow", "n": args.n, "q": args.q}
    spec = PillowSpec(args.n, _steps(args.top_left), _steps(args.top_right),
                      _steps(args.bottom_left), _steps(args.bottom_right))
    return generalized_pillow(spec), spec.to_dict()


def cmd_region(args) -> int:
    region, header = _region_from_args(args)
    header["rows"] = [list(r) for r in region.rows]
    digraph = build_digraph(region)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    stem = args.name or f"{args.kind}_n{args.n}" + (f"_q{args.q}" if args.kind == "pillow" else "")
    (out / f"{stem}.region.json").write_text(dump_json(header))
    (out / f"{stem}.graph.json").write_text(dump_graph(digraph))
    (out / f"{stem}.map.txt").write_text(region.render())
    print(f"cells={region.cell_count} k={digraph.k} files={out / stem}.*")
    return 0


def _count(region, method: str, max_cells: int) -> int:
    if method == "det":
        d = det(reduced_matrix(build_digraph(region)))
        return int(d)
    if method == "dp":
        return count_tilings(region)
    return len(enumerate_tilings(region, max_cells=max_cells))


def cmd_tilings(args) -> int:
    region = load_region(args.region)
    value = _count(region, args.method, args.max_cells)
    if args.verify:
        other_method = "dp" if args.method != "dp" else "det"
        other = _count(region, other_method, args.max_cells)
        if other != value:
            print(f"MISMATCH {args.method}={value} {other_method}={other}")
            raise InvariantError(f"{args.method} gives {value} but {other_method} gives {other}")
        print(f"{value} (verified: {args.method}={other_method})")
    else:
        print(value)
    return 0


def cmd_propp(args) -> int:
    reports = [analyze(q, args.n_max, oracle_max_n=min(args.n_max, args.oracle_max_n), jobs=args.jobs)
               for q in sorted(set(args.q))]
    _write(args.out, emit_report(reports, args.format))
    if args.series_dir:
        sdir = Path(args.series_dir)
        sdir.mkdir(parents=True, exist_ok=True)
        for rep in reports:
            s_values = {r.n: r.decomposition.s for r in rep.rows}
            series = rho_series(rep.q, args.n_max, None if rep.q in (1, 3) else s_values)
            (sdir / f"ratio_q{rep.q}.csv").write_text(emit_ratio_series(series))
    failed = [r.n for rep in reports for r in rep.rows if r.propp == "fail"]
    if failed:
        print(f"conjecture check failed for n={failed}", file=sys.stderr)
        return 1
    return 0


def _digest(value) -> str:
    return hashlib.sha256(str(value).encode()).hexdigest()[:16]


def _timed(fn, *a):
    fn(*a)  # warm-up, discarded
    t0 = time.perf_counter()
    value = fn(*a)
    return value, time.perf_counter() - t0


def cmd_bench(args) -> int:
    lines = ["n\tfull_order\tfull_seconds\treduced_order\treduced_seconds\tdigest"]
    for n in range(1, args.n_max + 1):
        region = aztec_diamond(n) if args.q == 1 else q_pillow(n, args.q)
        hm = build_matrix(build_digraph(region))
        red = reduced_matrix(build_digraph(region))
        full_v, full_t = _timed(det, hm.matrix)
        red_v, red_t = _timed(det, red)
        if _digest(full_v) != _digest(red_v):
            raise InvariantError(f"n={n}: full {full_v} != reduced {red_v}")
        lines.append(f"{n}\t{hm.matrix.nrows}\t{full_t:.6f}\t{red.nrows}\t{red_t:.6f}\t{_digest(red_v)}")
    _write(args.out, "\n".join(lines) + "\n")
    return 0


def cmd_table(args) -> int:
    m = modified_matrix(args.n) if args.modified else schroeder_matrix(args.n)
    _write(args.out, table_tsv(m))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hamburger", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("det", help="full and reduced hamburger determinants of a graph file")
    s.add_argument("graph")
    s.set_defaults(func=cmd_det)

    s = sub.add_parser("cycles", help="list every cycle system with signs and totals")
    s.add_argument("graph")
    s.add_argument("--max-systems", type=int, default=DEFAULT_MAX_SYSTEMS)
    s.set_defaults(func=cmd_cycles)

    s = sub.add_parser("region", help="write a region file, its digraph and an ASCII map")
    s.add_argument("kind", choices=("diamond", "pillow", "generalized"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--q", type=int, default=3)
    s.add_argument("--top-left", default="")
    s.add_argument("--top-right", default="")
    s.add_argument("--bottom-left", default="")
    s.add_argument("--bottom-right", default="")
    s.add_argument("--name")
    s.add_argument("--out", default=".")
    s.set_defaults(func=cmd_region)

    s = sub.add_parser("tilings", help="count domino tilings of a region file")
    s.add_argument("region")
    s.add_argument("--method", choices=("det", "dp", "enum"), default="det")
    s.add_argument("--verify", action="store_true", help="cross-check with a second method")
    s.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
    s.set_defaults(func=cmd_tilings)

    s = sub.add_parser("propp", help="square-times-small analysis of pillow counts")
    s.add_argument("--q", type=int, action="append", required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--oracle-max-n", type=int, default=8)
    s.add_argument("--format", choices=("csv", "txt"), default="csv")
    s.add_argument("--out")
    s.add_argument("--series-dir", help="also write ratio_q<q>.csv files here")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_propp)

    s = sub.add_parser("bench", help="time full vs reduced determinants")
    s.add_argument("--n-max", type=int, default=14)
    s.add_argument("--q", type=int, default=3)
    s.add_argument("--out")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("table", help="dump a Schröder table as TSV")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--modified", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_table)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except HamburgerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
