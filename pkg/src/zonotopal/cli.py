"""Command line front end: hilbert, verify, enumerate, character.

Exit codes: 0 when every executed check passes, 1 on a verification
failure, 2 on usage errors or bound violations.  Machine-readable output
carries ``"schema": "1"``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass

from .arrangements import (
    TUTTE_MAX_ELEMENTS,
    braid_arrangement,
    gale_dual,
    hilbert_via_tutte,
    reflection_arrangement,
)
from .characters import internal_quotient, top_character
from .forests import (
    MAX_TREE_VERTICES,
    enumerate_decreasing_trees,
    enumerate_path_forests,
    enumerate_pm_trees,
)
from .ideals import dual_power_ideal, quotient
from .polynomials import MonomialOrder, hilbert_series_of_quotient
from .verify import CHECKS, DEFAULT_SUITE, HypothesisError, run_check
from .wreath import (
    GROUP_SIZE_BOUND,
    GroupSizeError,
    chi_on_C,
    class_table_csv,
    class_table_json,
    e1_character,
    induced_character,
    lie_character,
    whitehouse_character,
    wreath_group,
)

SCHEMA = "1"
EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

# desk-scale limits for the Groebner route
GROEBNER_MAX_HYPERPLANES = 30


class BoundError(ValueError):
    pass


@dataclass
class RunConfig:
    m: int | None = None
    n: int | None = None
    k: int = -2
    order: str = "grevlex"
    seed: int = 0
    fmt: str = "text"
    count_only: bool = False
    timing: bool = False


def _emit(payload: dict, cfg: RunConfig, text: str):
    if cfg.fmt == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, sort_keys=True))
    else:
        print(text)


def _need(cfg: RunConfig, *names):
    missing = [x for x in names if getattr(cfg, x) is None]
    if missing:
        raise BoundError("missing " + ", ".join("--" + x for x in missing))


def _arrangement(m, n):
    return braid_arrangement(n) if m == 1 else reflection_arrangement(m, n)


# ---------------------------------------------------------------------------


def hilbert_groebner(m: int, n: int, k: int, order: str = "grevlex") -> list[int]:
    A = _arrangement(m, n)
    if len(A) > GROEBNER_MAX_HYPERPLANES:
        raise BoundError(f"{len(A)} hyperplanes exceed the Groebner bound {GROEBNER_MAX_HYPERPLANES}")
    if k == -2 and order == "grevlex":
        return internal_quotient(m, n).hilbert()
    ideal = dual_power_ideal(m, n, k)
    return hilbert_series_of_quotient(quotient(ideal, MonomialOrder(order, nvars=ideal.ring.nvars)).groebner)


def hilbert_tutte(m: int, n: int, k: int) -> list[int]:
    A = _arrangement(m, n)
    if len(A) > TUTTE_MAX_ELEMENTS:
        raise BoundError(f"{len(A)} hyperplanes exceed the Tutte bound {TUTTE_MAX_ELEMENTS}")
    return hilbert_via_tutte(gale_dual(A).dual, k)


def cmd_hilbert(cfg: RunConfig, method: str) -> int:
    _need(cfg, "m", "n")
    if cfg.k not in (-2, -1, 0):
        raise BoundError("--k must be -2, -1 or 0")
    if cfg.m < 1 or cfg.n < 2:
        raise BoundError("need m >= 1 and n >= 2")
    results = {}
    if method in ("groebner", "both"):
        results["groebner"] = hilbert_groebner(cfg.m, cfg.n, cfg.k, cfg.order)
    if method in ("tutte", "both"):
        results["tutte"] = hilbert_tutte(cfg.m, cfg.n, cfg.k)
    values = list(results.values())
    agree = all(v == values[0] for v in values)
    payload = {"command": "hilbert", "params": {"m": cfg.m, "n": cfg.n, "k": cfg.k},
               "methods": results, "agree": agree, "coefficients": values[0]}
    text = str(values[0]) if agree else " ".join(f"{a}={b}" for a, b in results.items())
    _emit(payload, cfg, text)
    return EXIT_PASS if agree else EXIT_FAIL


def cmd_verify(cfg: RunConfig, checks: list[str], run_all: bool) -> int:
    if run_all:
        jobs = [(name, dict(p)) for name, p in DEFAULT_SUITE]
    else:
        if not checks:
            raise BoundError("give --check NAME or --all")
        jobs = [(name, {"m": cfg.m, "n": cfg.n, "seed": cfg.seed}) for name in checks]
    unknown = [name for name, _ in jobs if name not in CHECKS]
    if unknown:
        raise BoundError(f"unknown check(s): {', '.join(unknown)}; known: {', '.join(CHECKS)}")
    reports = []
    for name, params in jobs:
        try:
            reports.append(run_check(name, **params))
        except TypeError as exc:
            raise BoundError(str(exc)) from exc
    ok = all(r.passed for r in reports)
    payload = {"command": "verify", "passed": ok,
               "reports": [r.to_json(cfg.timing) for r in reports]}
    lines = []
    for r in reports:
        p = " ".join(f"{a}={b}" for a, b in r.params.items())
        t = f" ({r.wall_time:.2f}s)" if cfg.timing else ""
        lines.append(f"{r.status.upper():5} {r.check} {p}{t}")
    _emit(payload, cfg, "\n".join(lines))
    return EXIT_PASS if ok else EXIT_FAIL


def enumerate_objects(obj: str, m: int | None, n: int):
    if n > MAX_TREE_VERTICES:
        raise BoundError(f"enumeration is limited to n <= {MAX_TREE_VERTICES}")
    if obj == "pm-trees":
        return [t.to_json() for t in enumerate_pm_trees(n)]
    if obj == "decreasing-trees":
        return [[list(e) for e in t] for t in enumerate_decreasing_trees(n)]
    if obj == "path-forests":
        if m is None:
            raise BoundError("path-forests need --m")
        return [f.to_json() for d in range(n) for f in enumerate_path_forests(m, n, d)]
    raise BoundError(f"unknown object {obj!r}")


def cmd_enumerate(cfg: RunConfig, obj: str) -> int:
    _need(cfg, "n")
    if cfg.n < 2:
        raise BoundError("need n >= 2")
    items = enumerate_objects(obj, cfg.m, cfg.n)
    payload = {"command": "enumerate", "object": obj,
               "params": {"m": cfg.m, "n": cfg.n}, "count": len(items)}
    if not cfg.count_only:
        payload["items"] = items
    text = str(len(items)) if cfg.count_only else "\n".join(json.dumps(x) for x in items)
    if cfg.fmt == "csv" and not cfg.count_only:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["index", "edges"])
        for t, x in enumerate(items):
            w.writerow([t, json.dumps(x)])
        print(buf.getvalue(), end="")
        return EXIT_PASS
    _emit(payload, cfg, text)
    return EXIT_PASS


def character_of(target: str, m: int, n: int):
    size = m ** n * math.factorial(n)
    if size > GROUP_SIZE_BOUND:
        raise BoundError(f"G({m},1,{n}) has {size} elements, above {GROUP_SIZE_BOUND}")
    W = wreath_group(m, n)
    N = math.lcm(m, n)
    if target == "top":
        return W, top_character(m, n, conductor=N)
    if target == "induced":
        C, chi = chi_on_C(m, n)
        return W, induced_character(W, C.elements, chi, N)
    if target in ("lie", "whitehouse") and m != 1:
        raise BoundError(f"target {target} is defined for m = 1 only")
    if target == "lie":
        return W, lie_character(n)
    if target == "whitehouse":
        return W, whitehouse_character(n)
    if target == "e1":
        return W, e1_character(m, n)
    raise BoundError(f"unknown target {target!r}")


def cmd_character(cfg: RunConfig, target: str) -> int:
    _need(cfg, "m", "n")
    W, f = character_of(target, cfg.m, cfg.n)
    table = {target: f}
    if cfg.fmt == "csv":
        print(class_table_csv(W, table), end="")
    elif cfg.fmt == "json":
        _emit({"command": "character", "target": target,
               "params": {"m": cfg.m, "n": cfg.n}, **class_table_json(W, table)}, cfg, "")
    else:
        width = max(len(str(r)) for r in W.class_representatives)
        rows = [f"{str(r):<{width}}  {size:>6}  {v}"
                for (r, size), v in zip(W.conjugacy_classes(), f.values)]
        print("\n".join(rows))
    return EXIT_PASS


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int, default=-2)
    common.add_argument("--order", choices=["grevlex", "lex"], default="grevlex")
    common.add_argument("--seed", type=int, default=0)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv")
    common.set_defaults(fmt="text")

    p = argparse.ArgumentParser(prog="zonotopal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hilbert", parents=[common], help="Hilbert series of a zonotopal algebra")
    h.add_argument("--method", choices=["groebner", "tutte", "both"], default="both")

    v = sub.add_parser("verify", parents=[common], help="run verification checks")
    v.add_argument("--check", action="append", default=[], metavar="NAME")
    v.add_argument("--all", action="store_true")
    v.add_argument("--timing", action="store_true", help="include wall times")
    v.add_argument("--list", action="store_true", help="list check names")

    e = sub.add_parser("enumerate", parents=[common], help="enumerate combinatorial objects")
    e.add_argument("--object", required=True,
                   choices=["pm-trees", "decreasing-trees", "path-forests"])
    e.add_argument("--count-only", action="store_true")

    c = sub.add_parser("character", parents=[common], help="character tables")
    c.add_argument("--target", required=True,
                   choices=["top", "induced", "lie", "whitehouse", "e1"])
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    cfg = RunConfig(m=args.m, n=args.n, k=args.k, order=args.order, seed=args.seed,
                    fmt=args.fmt, count_only=getattr(args, "count_only", False),
                    timing=getattr(args, "timing", False))
    try:
        if args.command == "hilbert":
            return cmd_hilbert(cfg, args.method)
        if args.command == "verify":
            if args.list:
                print("\n".join(CHECKS))
                return EXIT_PASS
            return cmd_verify(cfg, args.check, args.all)
        if args.command == "enumerate":
            return cmd_enumerate(cfg, args.object)
        return cmd_character(cfg, args.target)
    except (BoundError, HypothesisError, GroupSizeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
