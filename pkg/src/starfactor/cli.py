"""Command-line entry point: ``starfactor <subcommand> ...``.

Tournaments travel over standard streams in the core text format; reports are
JSON (or CSV where noted) on standard output.  Exit codes: 0 success/true,
1 verified false, 2 usage error, 3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from importlib.metadata import PackageNotFoundError, version

from . import domination as dom
from . import factor as fac
from . import transitive as trans
from .enumeration import cached_catalog, sweep
from .tournament import ParseError, TournamentError, add_sink, construct, parse, random_tournament, serialize

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
SEED_ENV = "STARFACTOR_SEED"


class UsageError(Exception):
    pass


def _version() -> str:
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "unknown"


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={raw!r} is not an integer") from None


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_tournament(path: str | None):
    return parse(_read_text(path))


def _config(args: argparse.Namespace) -> dict:
    skip = {"func"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def _emit(args, result: dict, started: float) -> None:
    report = {
        "command": args.command,
        "config": _config(args),
        "version": _version(),
        "result": result,
        "elapsed": round(time.perf_counter() - started, 6),
    }
    print(json.dumps(report, sort_keys=True))


# -- subcommands --------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.type == "random":
        if args.n is None:
            raise UsageError("--type random needs --n")
        t = random_tournament(args.n, args.seed)
    else:
        t = construct(args.type, n=args.n)
    if args.add_sink:
        t = add_sink(t)
    text = serialize(t)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_factor(args) -> int:
    started = time.perf_counter()
    t = _read_tournament(args.input)
    mode = "verify" if args.verify else args.mode
    result: dict = {"n": t.n, "m": args.m, "mode": mode}
    if mode == "verify":
        data = json.loads(_read_text(args.verify))
        if "result" in data and "factor" in data["result"]:
            data = data["result"]["factor"]
        f = fac.StarFactor.from_dict(data)
        if f.m != args.m:
            raise UsageError(f"factor file has m={f.m} but --m {args.m} was given")
        ok, why = fac.verify_star_factor(t, f)
        result.update(valid=ok, diagnostic=why, status="valid" if ok else "invalid")
        _emit(args, result, started)
        return EXIT_OK if ok else EXIT_FALSE
    if mode == "constructive":
        strict = True if args.assert_paper else None
        result["bound"] = fac.construction_bound(args.m)
        try:
            tr = fac.trace_constructive(t, args.m, strict=strict)
        except fac.StageFailure as exc:
            result.update(status="stage failure", stage=exc.stage, detail=exc.detail,
                          checks=[vars(c) for c in exc.trace.checks])
            _emit(args, result, started)
            return EXIT_FALSE
        result.update(status="factor", factor=tr.factor.to_dict(), checks=[vars(c) for c in tr.checks])
        _emit(args, result, started)
        return EXIT_OK
    if mode == "exact":
        f = fac.has_star_factor_exact(t, args.m, budget=args.budget)
        if f is None:
            result.update(status="no factor", factor=None)
            _emit(args, result, started)
            return EXIT_FALSE
        result.update(status="factor", factor=f.to_dict())
        _emit(args, result, started)
        return EXIT_OK
    ok = fac.has_star_factor_bruteforce(t, args.m, max_n=args.brute_limit)
    result.update(status="factor" if ok else "no factor", exists=ok)
    _emit(args, result, started)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_dominated(args) -> int:
    started = time.perf_counter()
    t = _read_tournament(args.input)
    rep = dom.is_k_dominated(t, args.k)
    result = dict(rep.to_dict(), n=t.n)
    _emit(args, result, started)
    return EXIT_OK if rep.dominated else EXIT_FALSE


def cmd_threshold(args) -> int:
    n = dom.threshold_n(args.k)
    bound = dom.asymptotic_bound(args.k)
    print(json.dumps({
        "k": args.k,
        "threshold_n": n,
        "expected_at_threshold": dom.expected_undominated(n, args.k),
        "paper_bound": f"2^k k^2 ln2 = {bound:.1f} (asymptotic form, not a bound at k={args.k})",
        "config": _config(args),
    }, sort_keys=True))
    return EXIT_OK


def cmd_search_dominated(args) -> int:
    started = time.perf_counter()
    if args.count_all:
        successes, first = 0, None
        for i in range(args.trials):
            t = random_tournament(args.n, args.seed + i)
            if dom.is_k_dominated(t, args.k).dominated:
                successes += 1
                if first is None:
                    first, witness = args.seed + i, t
        trials_run = args.trials
    else:
        out = dom.search_k_dominated(args.k, args.n, args.trials, args.seed)
        successes = int(out.tournament is not None)
        first, witness, trials_run = out.seed, out.tournament, out.trials
    if first is not None and args.save:
        with open(args.save, "w") as fh:
            fh.write(serialize(witness))
    if args.format == "csv":
        print("k,n,trials,successes,first_success_seed")
        print(f"{args.k},{args.n},{trials_run},{successes},{'' if first is None else first}")
    else:
        result = {"k": args.k, "n": args.n, "trials": trials_run, "successes": successes,
                  "first_success_seed": first,
                  "tournament": None if first is None else serialize(witness)}
        _emit(args, result, started)
    return EXIT_OK if first is not None else EXIT_FALSE


def _predicate(text: str):
    name, _, param = text.partition(":")
    if name == "spanning-star":
        return fac.has_spanning_star
    if name == "s4-plus-s3":
        return lambda t: t.n == 7 and fac.find_star_partition(t, [4, 3]) is not None
    key, _, value = param.partition("=")
    try:
        num = int(value)
    except ValueError:
        raise UsageError(f"--check {text!r}: expected a form like star-factor:m=3") from None
    if name == "star-factor" and key == "m":
        return lambda t: t.n % num == 0 and fac.has_star_factor_exact(t, num) is not None
    if name == "k-dominated" and key == "k":
        return lambda t: num < t.n and dom.is_k_dominated(t, num).dominated
    raise UsageError(f"unknown --check predicate {text!r}; use star-factor:m=M, spanning-star, "
                     "s4-plus-s3 or k-dominated:k=K")


def cmd_enumerate(args) -> int:
    started = time.perf_counter()
    predicate = _predicate(args.check) if args.check else None
    cat = cached_catalog(args.n, args.catalog_dir)
    if predicate is None:
        _emit(args, {"n": args.n, "classes": len(cat)}, started)
        return EXIT_OK
    rep = sweep(cat, predicate, args.check)
    if args.format == "csv":
        sys.stdout.write(rep.to_csv())
    else:
        _emit(args, {"n": args.n, "classes": rep.total, "predicate": args.check,
                     "failures": len(rep.failures),
                     "failing_classes": [{"index": i, "code": rep.codes[i].hex()} for i in rep.failures]},
              started)
    return EXIT_OK if not rep.failures else EXIT_FALSE


def cmd_transitive(args) -> int:
    started = time.perf_counter()
    t = _read_tournament(args.input)
    mode = "verify" if args.verify else args.mode
    result: dict = {"n": t.n, "mode": mode}
    if mode == "greedy":
        seq = trans.greedy_transitive(t)
        result.update(sequence=seq, length=len(seq))
    elif mode == "exact":
        if args.t is None:
            raise UsageError("--mode exact needs --t")
        seq = trans.find_transitive_exact(t, args.t, budget=args.budget)
        result.update(sequence=seq, found=seq is not None)
        _emit(args, result, started)
        return EXIT_OK if seq is not None else EXIT_FALSE
    elif mode == "lonc-partition":
        part = trans.lonc_partition(t, args.m)
        result.update(partition=part.to_dict(), blocks=len(part.blocks))
    else:
        data = json.loads(_read_text(args.verify))
        if "result" in data and "partition" in data["result"]:
            data = data["result"]["partition"]
        ok, why = trans.verify_transitive_partition(t, trans.TransitivePartition.from_dict(data))
        result.update(valid=ok, diagnostic=why)
        _emit(args, result, started)
        return EXIT_OK if ok else EXIT_FALSE
    _emit(args, result, started)
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="starfactor", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def seeded(q):
        q.add_argument("--seed", type=int, default=None, help=f"random seed (default ${SEED_ENV} or 0)")

    g = sub.add_parser("gen", help="write a constructed or random tournament")
    g.add_argument("--type", required=True,
                   choices=["transitive", "cyclic3", "t6", "t7", "t8", "qr7", "random"])
    g.add_argument("--n", type=int)
    g.add_argument("--add-sink", action="store_true")
    g.add_argument("--output")
    seeded(g)
    g.set_defaults(func=cmd_gen)

    f = sub.add_parser("factor", help="find or verify an m-star-factor")
    f.add_argument("--input", help="tournament file (default: stdin)")
    f.add_argument("--m", type=int, required=True)
    f.add_argument("--mode", choices=["constructive", "exact", "brute", "verify"], default="constructive")
    f.add_argument("--verify", metavar="FACTOR_JSON", help="check this factor instead of searching")
    f.add_argument("--budget", type=int, default=fac.DEFAULT_CENTER_BUDGET,
                   help="maximum number of centre sets for --mode exact")
    f.add_argument("--brute-limit", type=int, default=fac.BRUTEFORCE_MAX_N,
                   help="largest n accepted by --mode brute")
    f.add_argument("--assert-paper", action="store_true",
                   help="treat every violated construction inequality as fatal")
    f.set_defaults(func=cmd_factor)

    d = sub.add_parser("dominated", help="check whether a tournament is k-dominated")
    d.add_argument("--input")
    d.add_argument("--k", type=int, required=True)
    d.set_defaults(func=cmd_dominated)

    th = sub.add_parser("threshold", help="least n with fewer than one expected undominated k-set")
    th.add_argument("--k", type=int, required=True)
    th.set_defaults(func=cmd_threshold)

    s = sub.add_parser("search-dominated", help="random search for a k-dominated tournament")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--count-all", action="store_true", help="run every trial and count successes")
    s.add_argument("--save", help="write the first witness here")
    s.add_argument("--format", choices=["json", "csv"], default="json")
    seeded(s)
    s.set_defaults(func=cmd_search_dominated)

    e = sub.add_parser("enumerate", help="isomorphism classes and predicate sweeps")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--catalog-dir", help="load/save catalogues here")
    e.add_argument("--check", help="star-factor:m=M | spanning-star | s4-plus-s3 | k-dominated:k=K")
    e.add_argument("--format", choices=["json", "csv"], default="json")
    e.set_defaults(func=cmd_enumerate)

    for name in ("transitive", "transitive-partition"):
        tr = sub.add_parser(name, help="transitive subtournaments and partitions")
        tr.add_argument("--input")
        tr.add_argument("--mode", choices=["greedy", "exact", "lonc-partition"],
                        default="lonc-partition" if name == "transitive-partition" else "greedy")
        tr.add_argument("--t", type=int, help="order for --mode exact")
        tr.add_argument("--m", type=int, default=3, help="block order for lonc-partition")
        tr.add_argument("--budget", type=int, default=trans.DEFAULT_SEARCH_BUDGET,
                        help="node budget for --mode exact")
        tr.add_argument("--verify", metavar="PARTITION_JSON")
        tr.set_defaults(func=cmd_transitive)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if hasattr(args, "seed") and args.seed is None:
            args.seed = _default_seed()
        return args.func(args)
    except (fac.ProofInequalityError, dom.AvoidabilityViolation, trans.PartitionStageError) as exc:
        print(f"internal assertion failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except fac.BudgetExceeded as exc:
        print(f"error: {exc} (--budget / --brute-limit)", file=sys.stderr)
        return EXIT_USAGE
    except trans.SearchBudgetExceeded as exc:
        print(f"error: {exc} (--budget)", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"error: malformed tournament: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, TournamentError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
