# ---------------------------------------------------------------------------------------
# CHIBOUND COMMAND LINE - cli.py
# ---------------------------------------------------------------------------------------
# python -m chibound <check|color|verify|oracle|gen|fuzz> ...
# stdout carries JSON (or the raw integer / graph bytes); everything human goes through
# the notifier on stderr.
# Exit codes: 0 ok, 1 rejected or failed verification, 2 parse/usage, 3 theory violation.
# ---------------------------------------------------------------------------------------
import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

import pandas as pd
from tqdm import tqdm

from . import engine, generators, graph_io, oracle
from .config import load_settings, use_settings
from .errors import ChiboundError, InputError, OutOfClassError, TheoryViolation
from .notifier import notify, set_verbose
from .recognition import class_membership, clique_number

EXIT_OK, EXIT_REJECTED, EXIT_USAGE, EXIT_THEORY = 0, 1, 2, 3


def _emit(doc):
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    sys.stdout.flush()


def _load(args):
    G = graph_io.read_graph_file(args.input, args.format)
    notify('BOOT', f"Loaded {args.input}: n={G.n}, m={G.edge_count()}")
    return G


# --- CHECK ---

def cmd_check(args, settings):
    G = _load(args)
    verdict = class_membership(G)
    _emit(graph_io.verdict_document(verdict))
    if verdict.in_class:
        notify('OK', "Graph is (P2+P4, diamond)-free")
        return EXIT_OK
    notify('CHECK', f"Induced {verdict.witness.kind.value} on {list(verdict.witness.vertices)}")
    return EXIT_REJECTED


# --- COLOR ---

def cmd_color(args, settings):
    G = _load(args)
    verdict = class_membership(G)
    if not verdict.in_class:
        raise OutOfClassError(verdict.witness)
    outcome = engine.dispatch(G)
    text = graph_io.write_certificate(engine.certificate_for(outcome, verdict))
    if args.emit_certificate:
        with open(args.emit_certificate, "w") as f:
            f.write(text)
        notify('REPORT', f"Certificate written to {args.emit_certificate}")
    sys.stdout.write(text)
    notify('COLOR', f"omega={outcome.omega} k={outcome.k} strategy={outcome.strategy} "
                    f"colours={outcome.colouring.colours_used} bound={outcome.bound}")
    return EXIT_OK


# --- VERIFY ---

def check_certificate(G, doc):
    """Returns None when the certificate holds for G, else the reason it fails."""
    if len(doc.colouring) != G.n:
        return f"colouring has {len(doc.colouring)} entries for {G.n} vertices"
    ok, edge = oracle.verify_colouring(G, doc.colouring)
    if not ok:
        return f"edge {list(edge)} is monochromatic"
    omega = clique_number(G)
    if doc.omega != omega:
        return f"certificate claims omega={doc.omega}, graph has {omega}"
    if doc.bound != engine.theorem_bound(omega):
        return f"bound {doc.bound} is not the bound for omega={omega}"
    if len(set(doc.colouring)) != doc.colours_used:
        return f"colours_used={doc.colours_used} but {len(set(doc.colouring))} colours appear"
    return None


def cmd_verify(args, settings):
    G = _load(args)
    with open(args.certificate, "r") as f:
        doc = graph_io.parse_certificate(f.read())
    reason = check_certificate(G, doc)
    _emit({"schema": graph_io.SCHEMA_VERSION, "ok": reason is None, "reason": reason})
    if reason:
        notify('ERROR', f"Certificate rejected: {reason}")
        return EXIT_REJECTED
    notify('OK', f"Certificate holds: {doc.colours_used} colours within bound {doc.bound}")
    return EXIT_OK


# --- ORACLE ---

def cmd_oracle(args, settings):
    G = _load(args)
    if args.what == "chi":
        token = oracle.CancelToken(settings["ORACLE_TIMEOUT_S"])
        value = oracle.chromatic_number_exact(G, limit=settings["ORACLE_LIMIT"], cancel=token)
    elif G.n <= settings["BRUTE_CLIQUE_LIMIT"]:
        value = oracle.max_clique_bruteforce(G, limit=settings["BRUTE_CLIQUE_LIMIT"])
    else:
        notify('WARN', f"n={G.n} above brute-force limit; using branch and bound")
        value = clique_number(G)
    notify('ORACLE', f"{args.what} = {value}")
    sys.stdout.write(f"{value}\n")
    return EXIT_OK


# --- GEN ---

def _parse_params(pairs):
    params = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            raise InputError(f"parameter '{pair}' is not key=value")
        params[key] = value
    return params


def cmd_gen(args, settings):
    G = generators.named(args.name, _parse_params(args.params))
    data = graph_io.format_graph(G, args.format or "graph6")
    if args.out:
        with open(args.out, "wb") as f:
            f.write(data)
        notify('OK', f"{args.name}: n={G.n}, m={G.edge_count()} -> {args.out}")
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    return EXIT_OK


# --- FUZZ ---

def fixture_corpus():
    """Named graphs run ahead of the random batch with --include-fixtures."""
    names = ["grotzsch", "schlafli_complement"] + sorted(generators.STRATEGY_FIXTURES)
    corpus = [(name, {}) for name in names]
    corpus += [("h_n", {"n": n}) for n in range(4, 10)]
    return corpus


def _instance_seed(base, index):
    _, seed = generators.splitmix64((base + index) & generators.MASK64)
    return seed


REPORT_COLUMNS = ("name", "seed", "n", "p", "omega", "k", "strategy", "trail", "colours", "bound",
                  "oracle_chi", "status", "detail")


def run_instance(task):
    """Colours one instance and cross-checks it. Runs inside worker processes."""
    row = {"name": task.get("name", "random_in_class"), "seed": task.get("seed"), "n": None,
           "p": task.get("p"), "omega": None, "k": None, "strategy": None, "trail": None,
           "colours": None, "bound": None, "oracle_chi": None, "status": "ok", "detail": ""}
    try:
        if "name" in task:
            G = generators.named(task["name"], task.get("params"))
        else:
            p = task["p"]
            if p is None:
                p = 0.05 + 0.9 * generators.XorShift64Star(task["seed"] ^ 0x5DEECE66D).random()
                row["p"] = round(p, 4)
            G = generators.random_in_class(task["n"], p, task["seed"])
        row["n"] = G.n
        outcome = engine.colour(G)
        used = outcome.colouring.colours_used
        row.update(omega=outcome.omega, k=outcome.k, strategy=outcome.strategy,
                   trail=">".join(outcome.trail), colours=used, bound=outcome.bound)

        problems = []
        ok, edge = oracle.verify_colouring(G, outcome.colouring)
        if not ok:
            problems.append(f"edge {edge} monochromatic")
        if used > engine.theorem_bound(outcome.omega):
            problems.append(f"{used} colours over bound")
        if outcome.omega >= 4 and used != outcome.omega:
            problems.append(f"{used} colours for omega={outcome.omega}")
        if G.n <= task["oracle_max_n"]:
            omega = oracle.max_clique_bruteforce(G, limit=G.n)
            if omega != outcome.omega:
                problems.append(f"omega {outcome.omega} but brute force says {omega}")
            chi = oracle.chromatic_number_exact(G, limit=G.n)
            row["oracle_chi"] = chi
            if used < chi:
                problems.append(f"{used} colours below chi={chi}")
        if problems:
            row.update(status="violation", detail="; ".join(problems))
    except TheoryViolation as e:
        row.update(status="theory", detail=e.message)
    except ChiboundError as e:
        row.update(status="error", detail=e.message)
    return row


def _fuzz_tasks(args):
    tasks = []
    if args.include_fixtures:
        for name, params in fixture_corpus():
            tasks.append({"name": name, "params": params, "oracle_max_n": args.oracle_max_n})
    for index in range(args.count):
        tasks.append({"n": args.n, "p": args.p, "seed": _instance_seed(args.seed, index),
                      "oracle_max_n": args.oracle_max_n})
    return tasks


def fuzz_summary(report):
    by_status = report["status"].value_counts()
    strategies = report["strategy"].dropna().value_counts()
    omegas = report["omega"].dropna().astype(int).value_counts()
    return {
        "schema": graph_io.SCHEMA_VERSION,
        "instances": int(len(report)),
        "strategies": {name: int(strategies.get(name, 0)) for name in graph_io.STRATEGY_IDS},
        "omega": {str(w): int(c) for w, c in sorted(omegas.items())},
        "violations": int(by_status.get("violation", 0)),
        "theory_violations": int(by_status.get("theory", 0)),
        "errors": int(by_status.get("error", 0)),
    }


def cmd_fuzz(args, settings):
    if args.p is not None and not 0 <= args.p <= 1:
        raise InputError(f"--p must lie in [0, 1], got {args.p}")
    tasks = _fuzz_tasks(args)
    notify('FUZZ', f"{len(tasks)} instances, n={args.n}, seed={args.seed}, jobs={args.jobs}")
    progress = dict(total=len(tasks), file=sys.stderr, disable=args.quiet, unit="graph")
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(tqdm(pool.map(run_instance, tasks, chunksize=8), **progress))
    else:
        rows = [run_instance(task) for task in tqdm(tasks, **progress)]

    report = pd.DataFrame(rows, columns=list(REPORT_COLUMNS))
    if args.report:
        folder = os.path.dirname(args.report)
        if folder:
            os.makedirs(folder, exist_ok=True)
        report.to_csv(args.report, index=False)
        notify('REPORT', f"{len(report)} rows written to {args.report}")
    summary = fuzz_summary(report)
    _emit(summary)

    for row in report[report["status"] != "ok"].head(10).itertuples():
        notify('THEORY' if row.status == "theory" else 'ERROR',
               f"{row.name} seed={row.seed}: {row.detail}")
    if summary["theory_violations"]:
        return EXIT_THEORY
    if summary["violations"] or summary["errors"]:
        return EXIT_REJECTED
    notify('OK', "No violations")
    return EXIT_OK


# --- ENTRY ---

def build_parser(settings):
    parser = argparse.ArgumentParser(prog="chibound",
                                     description="Colouring (P2+P4, diamond)-free graphs within their chi-bound.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug output on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p):
        p.add_argument("input", help="graph file, or - for stdin")
        p.add_argument("--format", choices=("graph6", "dimacs"), help="default: from the suffix")

    p = sub.add_parser("check", help="class membership with a witness")
    graph_input(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("color", help="colour within the bound and print the certificate")
    graph_input(p)
    p.add_argument("--emit-certificate", metavar="PATH", help="also write the certificate here")
    p.set_defaults(handler=cmd_color)

    p = sub.add_parser("verify", help="re-check a certificate against a graph")
    graph_input(p)
    p.add_argument("certificate")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("oracle", help="exact chi or omega")
    graph_input(p)
    p.add_argument("--what", choices=("chi", "omega"), default="chi")
    p.set_defaults(handler=cmd_oracle)

    p = sub.add_parser("gen", help="write a named graph")
    p.add_argument("name", choices=generators.GENERATOR_NAMES)
    p.add_argument("params", nargs="*", metavar="key=value")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=("graph6", "dimacs"))
    p.set_defaults(handler=cmd_gen)

    p = sub.add_parser("fuzz", help="seeded random in-class batch")
    p.add_argument("--n", type=int, default=settings["FUZZ_N"])
    p.add_argument("--p", type=float, default=settings["FUZZ_P"],
                   help="edge probability (default: drawn per instance)")
    p.add_argument("--count", type=int, default=settings["FUZZ_COUNT"])
    p.add_argument("--seed", type=int, default=settings["FUZZ_SEED"])
    p.add_argument("--jobs", type=int, default=settings["FUZZ_JOBS"])
    p.add_argument("--report", metavar="CSV", help="per-instance rows")
    p.add_argument("--include-fixtures", action="store_true")
    p.add_argument("--oracle-max-n", type=int, default=settings["FUZZ_ORACLE_MAX_N"])
    p.add_argument("--quiet", action="store_true", help="no progress bar")
    p.set_defaults(handler=cmd_fuzz)
    return parser


def main(argv=None):
    try:
        settings = load_settings()
    except ChiboundError as e:
        notify('ERROR', e.message)
        return e.exit_code
    use_settings(settings)
    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    set_verbose(args.verbose or bool(settings["VERBOSE"]))

    try:
        return args.handler(args, settings)
    except OutOfClassError as e:
        _emit({"schema": graph_io.SCHEMA_VERSION, "in_class": False, "witness": e.witness.to_dict()})
        notify('CHECK', e.message)
        return EXIT_REJECTED
    except TheoryViolation as e:
        _emit(e.to_dict())
        notify('THEORY', e.message)
        return EXIT_THEORY
    except ChiboundError as e:
        notify('ERROR', e.message)
        return e.exit_code
    except OSError as e:
        notify('ERROR', f"{e.filename or 'I/O'}: {e.strerror}")
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
