"""Command-line interface.

Exit status: 0 on success, 1 for bad input (unreadable or malformed files,
unsupported generators, disconnected graphs where connectivity is
required), 2 for numeric failures (eigensolver, trace overflow, census
inconsistency).
"""

import argparse
import csv
import io
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import bounds, census, series, spectral
from .errors import (
    CensusInconsistencyError,
    ConvergenceError,
    GraphEnergyError,
    TraceOverflowError,
)
from .graph import GENERATORS, generate, parse_gen_spec, read_graph

THREADS_ENV = "GRAPHENERGY_THREADS"
GRAPH6_SUFFIXES = {".g6", ".graph6"}
EDGELIST_SUFFIXES = {".txt", ".edges", ".el", ".edgelist"}

BOUND_COLUMNS = ["label", "n", "m", "energy", "mcclelland", "bound1", "bound2", "bound3", "fullerene"]


class InputError(Exception):
    pass


# -- output -----------------------------------------------------------------

def _cell(value, decimals):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.{decimals}f}"
    return str(value)


def format_rows(columns, rows, fmt="pretty", decimals=4):
    cells = [[_cell(r.get(c), decimals) for c in columns] for r in rows]
    if fmt in ("csv", "tsv"):
        buf = io.StringIO()
        writer = csv.writer(buf, delimiter="," if fmt == "csv" else "\t", lineterminator="\n")
        writer.writerow(columns)
        writer.writerows(cells)
        return buf.getvalue()
    shown = [[c or "-" for c in row] for row in cells]
    widths = [max(len(h), *(len(r[i]) for r in shown)) if shown else len(h)
              for i, h in enumerate(columns)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in shown]
    return "\n".join(lines) + "\n"


def parse_rows(text, fmt="csv"):
    """Inverse of :func:`format_rows` for csv/tsv; values come back as strings."""
    reader = csv.DictReader(io.StringIO(text), delimiter="," if fmt == "csv" else "\t")
    return list(reader)


def _label(text):
    return re.sub(r"[^A-Za-z0-9_.-]", "_", text)


# -- inputs -----------------------------------------------------------------

def _load(args):
    if args.file and args.gen:
        raise InputError("give either --file or --gen, not both")
    try:
        if args.file:
            return read_graph(args.file, args.format), _label(Path(args.file).stem)
        if args.gen:
            return parse_gen_spec(args.gen), _label(args.gen.replace(":", "_"))
    except OSError as exc:
        raise InputError(f"cannot read {args.file}: {exc.strerror or exc}") from exc
    except ValueError as exc:
        if isinstance(exc, GraphEnergyError):
            raise
        raise InputError(str(exc)) from exc
    raise InputError("an input graph is required: --file PATH or --gen KIND[:N]")


def _bound_row(label, g):
    rep = bounds.bound_chain_report(g)
    return dict(label=label, n=rep.n, m=rep.m, energy=rep.energy, mcclelland=rep.mcclelland,
                bound1=rep.bound1, bound2=rep.bound2, bound3=rep.bound3,
                fullerene=rep.fullerene_bound)


def _threads():
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


# -- subcommands ------------------------------------------------------------

def cmd_energy(args, out):
    g, label = _load(args)
    row = dict(label=label, n=g.n, m=g.m, energy=spectral.energy_exact(g))
    out.write(format_rows(["label", "n", "m", "energy"], [row], args.format_out, args.decimals))


def cmd_bounds(args, out):
    g, label = _load(args)
    out.write(format_rows(BOUND_COLUMNS, [_bound_row(label, g)], args.format_out, args.decimals))


def cmd_census(args, out):
    g, label = _load(args)
    c = census.census_bruteforce(g) if args.bruteforce else census.census_formulas(g)
    row = dict(label=label, n=g.n, **c.as_dict())
    out.write(format_rows(["label", "n", *census.FIELDS], [row], args.format_out, args.decimals))


def cmd_series(args, out, err):
    g, _ = _load(args)
    result = series.converge(g, tol=args.tol, k_max=args.kmax)
    exp = series.expand(g, result.k_used, lambda1=None)
    rows = [dict(K=k, partial_sum=s, b_trace=t)
            for k, (s, t) in enumerate(zip(exp.partial_sums, exp.b_traces))]
    out.write(format_rows(["K", "partial_sum", "b_trace"], rows, args.format_out, args.decimals))
    summary = (f"converged={_cell(result.converged, 0)} k_used={result.k_used} "
               f"estimate={result.estimate:.{args.decimals}f} lambda1={exp.lambda1:.12g}\n")
    (out if args.format_out == "pretty" else err).write(summary)


def cmd_fragment(args, out):
    if args.lambda1 is not None:
        lam = args.lambda1
    else:
        g, _ = _load(args)
        lam = spectral.spectral_radius(g)
    coef, power = bounds.fragment_first_term_exact(args.eta, args.k)
    row = dict(eta=args.eta, k=args.k, lambda1=float(lam), coefficient=str(coef), power=power,
               value=bounds.fragment_first_term(args.eta, args.k, lam))
    out.write(format_rows(["eta", "k", "lambda1", "coefficient", "power", "value"], [row],
                          args.format_out, args.decimals))


def table1_rows():
    return [_bound_row(f"C{n}", generate("cycle", n)) for n in range(3, 11)]


def cmd_table1(args, out):
    cols = ["n", "energy", "mcclelland", "bound1", "bound2", "bound3"]
    out.write(format_rows(cols, table1_rows(), args.format_out, args.decimals))


def _natural_key(path):
    return [int(t) if t.isdigit() else t for t in re.split(r"(\d+)", path.name)]


def _graph_files(directory):
    path = Path(directory)
    if not path.is_dir():
        raise InputError(f"not a directory: {directory}")
    found = []
    for f in sorted(path.iterdir(), key=_natural_key):
        suffix = f.suffix.lower()
        if suffix in GRAPH6_SUFFIXES:
            found.append((f, "graph6"))
        elif suffix in EDGELIST_SUFFIXES:
            found.append((f, "edgelist"))
    return found


def table2_rows(directory=None):
    jobs = [("dodecahedron", lambda: generate("dodecahedron"))]
    if directory is not None:
        for f, fmt in _graph_files(directory):
            jobs.append((_label(f.stem), lambda f=f, fmt=fmt: read_graph(f, fmt)))

    def run(job):
        label, load = job
        return _bound_row(label, load())

    with ThreadPoolExecutor(max_workers=_threads()) as pool:
        return list(pool.map(run, jobs))


def cmd_table2(args, out):
    out.write(format_rows(BOUND_COLUMNS, table2_rows(args.dir), args.format_out, args.decimals))


# -- entry ------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="graph-energy",
        description="Graph energy, its even-power series, subgraph census and upper bounds.",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format-out", choices=["pretty", "csv", "tsv"], default="pretty")
    fmt.add_argument("--decimals", type=int, default=4)

    src = argparse.ArgumentParser(add_help=False)
    src.add_argument("--file", help="graph file")
    src.add_argument("--format", choices=["edgelist", "graph6"], default="edgelist",
                     help="format of --file (default: edgelist)")
    src.add_argument("--gen", metavar="KIND[:N]",
                     help=f"built-in graph, KIND in {{{','.join(GENERATORS)}}}")

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("energy", parents=[src, fmt], help="exact energy")
    sub.add_parser("bounds", parents=[src, fmt], help="energy and all upper bounds")
    p = sub.add_parser("census", parents=[src, fmt], help="fragment counts")
    p.add_argument("--bruteforce", action="store_true", help="use exhaustive enumeration")
    p = sub.add_parser("series", parents=[src, fmt], help="partial sums of the energy series")
    p.add_argument("--kmax", type=int, default=series.DEFAULT_KMAX)
    p.add_argument("--tol", type=float, default=series.DEFAULT_TOL)
    p = sub.add_parser("fragment", parents=[src, fmt], help="first-term fragment contribution")
    p.add_argument("--eta", type=int, required=True, help="fragment weight in tr A^(2k)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--lambda1", type=float, help="spectral radius (else taken from the graph)")
    sub.add_parser("table1", parents=[fmt], help="cycles C3..C10")
    p = sub.add_parser("table2", parents=[fmt], help="dodecahedron plus graph files in --dir")
    p.add_argument("--dir", help="directory of .g6 / .txt / .edges / .el files")
    return parser


def run(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    handlers = {
        "energy": cmd_energy,
        "bounds": cmd_bounds,
        "census": cmd_census,
        "fragment": cmd_fragment,
        "table1": cmd_table1,
        "table2": cmd_table2,
    }
    try:
        if args.command == "series":
            cmd_series(args, out, err)
        else:
            handlers[args.command](args, out)
    except (ConvergenceError, TraceOverflowError, CensusInconsistencyError) as exc:
        err.write(f"error: {exc}\n")
        return 2
    except (InputError, GraphEnergyError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(run())
