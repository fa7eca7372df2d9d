# Copyright (c) 2026 zarex contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at http://mozilla.org/MPL/2.0/.
from __future__ import annotations

from typing import IO, Any, Awaitable, Callable, Dict, List, Optional, Sequence, Tuple, Union
from fractions import Fraction
from functools import partial
import argparse
import csv
import inspect
import logging
import pathlib
import sys

from ..config import Config
from ..constructions import (
    block_diagonal,
    grid_pattern,
    lshape,
    product_lift,
    region_from_matrix,
    strip,
)
from ..errors import (
    DimensionMismatchError,
    GuardExceededError,
    PatternError,
    SchemaError,
    SolverError,
)
from ..extremal import ex_exact, ex_lower_heuristic, ex_lower_random_deletion
from ..grid import px_lower_search
from ..matrix import all_ones
from ..types import (
    JSON,
    BitMatrix,
    CacheEntry,
    ExMode,
    GridRegion,
    Pattern,
    SearchMethod,
    SerializerError,
    dumps,
    format_rat,
    parse_rat,
    pattern_id,
)
from ..util.logging import TraceLogger
from ..verify import (
    ZARANKIEWICZ_FIXTURE,
    named_matrices,
    named_patterns,
    parse_params,
    regen_fixtures,
    report_params,
    run_checks,
    select_checks,
)
from .cache import ResultCache

log: TraceLogger = logging.getLogger("zarex.cli")

Argument = Tuple[Tuple[str, ...], Dict[str, Any]]
CommandFunc = Callable[["CommandContext"], Awaitable[int]]
Compute = Callable[[], Union[JSON, Awaitable[JSON]]]

CONSTRUCTIONS = ("strip", "lshape", "from-matrix", "grid-pattern", "lift", "block-diagonal")
REPORT_COLUMNS = (
    "key",
    "operation",
    "created_at",
    "tool_version",
    "kind",
    "pattern_id",
    "check_id",
    "n",
    "d",
    "r",
    "method",
    "bound",
    "value",
    "measure",
    "seed",
    "lhs",
    "middle",
    "rhs",
    "relation",
    "pass",
)


def arg(*flags: str, **kwargs: Any) -> Argument:
    return flags, kwargs


def rational(value: str) -> Fraction:
    try:
        return parse_rat(value)
    except SerializerError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def positive_int(value: str) -> int:
    try:
        number = int(value)
    except ValueError:
        number = 0
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value!r}")
    return number


class CommandContext:
    """What one subcommand invocation can reach: its arguments, the config and the cache."""

    args: argparse.Namespace
    config: Config
    cache: ResultCache
    threads: int
    stdout: IO[str]

    def __init__(
        self,
        args: argparse.Namespace,
        config: Config,
        cache: ResultCache,
        threads: int = 1,
        stdout: Optional[IO[str]] = None,
    ) -> None:
        self.args = args
        self.config = config
        self.cache = cache
        self.threads = threads
        self.stdout = stdout or sys.stdout

    def emit(self, data: JSON) -> None:
        print(dumps(data, indent=2), file=self.stdout)

    async def cached(self, operation: str, params: JSON, compute: Compute) -> JSON:
        """The stored result for ``(operation, params)``, computing and storing it on a miss."""
        entry = self.cache.get(operation, params)
        if entry is not None:
            return entry.record
        result = compute()
        if inspect.isawaitable(result):
            result = await result
        self.cache.put(operation, params, result)
        return result

    def need(self, name: str) -> Any:
        value = getattr(self.args, name.replace("-", "_"))
        if value is None or value == []:
            raise SchemaError(f"{self.args.command} --kind {self.args.kind} needs --{name}")
        return value


class CommandHandler:
    name: str
    func: CommandFunc
    help_text: str
    arguments: Sequence[Argument]

    def __init__(
        self, func: CommandFunc, name: str, help_text: str, arguments: Sequence[Argument]
    ) -> None:
        self.func = func
        self.name = name
        self.help_text = help_text or (inspect.getdoc(func) or "").split("\n", 1)[0]
        self.arguments = arguments

    def register(self, subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(
            self.name, help=self.help_text, description=self.help_text, allow_abbrev=False
        )
        for flags, kwargs in self.arguments:
            parser.add_argument(*flags, **kwargs)
        return parser

    async def __call__(self, ctx: CommandContext) -> int:
        return await self.func(ctx)


command_handlers: Dict[str, CommandHandler] = {}


def command_handler(
    name: Optional[str] = None, *, help_text: str = "", arguments: Sequence[Argument] = ()
) -> Callable[[CommandFunc], CommandHandler]:
    """Decorator to create CommandHandlers"""

    def decorator(func: CommandFunc) -> CommandHandler:
        actual_name = name or func.__name__.replace("_", "-")
        handler = CommandHandler(func, actual_name, help_text, arguments)
        command_handlers[handler.name] = handler
        return handler

    return decorator


def _read(path: str) -> str:
    try:
        return pathlib.Path(path).read_text()
    except OSError as e:
        raise SchemaError(f"cannot read {path}: {e.strerror}") from None


def load_matrix(value: str) -> BitMatrix:
    """A built-in matrix name or the path of a matrix JSON file."""
    if value in named_matrices:
        return named_matrices[value]
    return BitMatrix.parse_json(_read(value), source=value)


def load_pattern(value: str) -> Pattern:
    """A built-in pattern name or the path of a pattern JSON file."""
    if value in named_patterns:
        return named_patterns[value]
    return Pattern.parse_json(_read(value), source=value)


def load_region(path: str) -> GridRegion:
    return GridRegion.parse_json(_read(path), source=path)


@command_handler(
    help_text="Compute ex(n, M, d) exactly or bound it from below.",
    arguments=[
        arg("--matrix", metavar="<file|name>", help="forbidden matrix, JSON file or built-in"),
        arg("--n", type=positive_int, required=True, help="side of the host matrix"),
        arg("--d", type=positive_int, default=2, help="dimension of the host matrix"),
        arg("--mode", choices=[mode.value for mode in ExMode], default=ExMode.EXACT.value),
        arg("--seed", type=int, default=0),
        arg("--r", type=positive_int, default=2, help="random deletion forbids J_{r,r}"),
        arg("--p", type=rational, help="random deletion sampling probability"),
        arg("--restarts", type=positive_int, help="heuristic restarts"),
        arg("--symmetry-breaking", action="store_true", help="exact mode row-order constraint"),
    ],
)
async def ex(ctx: CommandContext) -> int:
    args, config = ctx.args, ctx.config
    mode = ExMode(args.mode)
    if args.n > config["matrix.max_axis"]:
        raise GuardExceededError("ex --n", args.n, config["matrix.max_axis"])
    if args.symmetry_breaking and mode != ExMode.EXACT:
        raise SolverError("--symmetry-breaking only applies to --mode exact")
    params: Dict[str, JSON] = {"mode": mode.value, "n": args.n}
    if mode == ExMode.RANDOM_DELETION:
        if args.d != 2:
            raise DimensionMismatchError(args.d, 2)
        if args.matrix is not None and load_matrix(args.matrix) != all_ones(args.r, args.r):
            raise PatternError(f"random deletion forbids J_{{{args.r},{args.r}}}, set --r")
        bits = config["solver.deletion_bits"]
        params.update(r=args.r, p=format_rat(args.p) if args.p is not None else None)
        params.update(seed=args.seed, bits=bits)
        compute = partial(ex_lower_random_deletion, args.n, args.r, args.p, args.seed, bits=bits)
    else:
        if args.matrix is None:
            raise SchemaError("ex needs --matrix unless --mode random-deletion")
        matrix = load_matrix(args.matrix)
        if matrix.d != args.d:
            raise DimensionMismatchError(matrix.d, args.d)
        params.update(matrix=pattern_id(matrix), d=args.d)
        if mode == ExMode.EXACT:
            params["symmetry_breaking"] = args.symmetry_breaking
            compute = partial(
                ex_exact,
                args.n,
                matrix,
                args.d,
                symmetry_breaking=args.symmetry_breaking,
                threads=ctx.threads,
                max_cells=config.max_cells("solver"),
            )
        else:
            restarts = args.restarts or config["solver.restarts"]
            swap_rounds = config["solver.swap_rounds"]
            params.update(seed=args.seed, restarts=restarts, swap_rounds=swap_rounds)
            compute = partial(
                ex_lower_heuristic,
                args.n,
                matrix,
                args.d,
                args.seed,
                restarts=restarts,
                swap_rounds=swap_rounds,
                threads=ctx.threads,
            )
    record = await ctx.cached("ex", params, lambda: compute().serialize())
    log.info("ex(n=%d, mode=%s) = %d (%s)", args.n, mode.value, record["value"], record["bound"])
    ctx.emit(record)
    return 0


@command_handler(
    "px-search",
    help_text="Search the r-grid for a large P-free region (a lower bound on px(n, P)).",
    arguments=[
        arg("--pattern", required=True, metavar="<file|name>", help="JSON file or built-in"),
        arg("--n", type=rational, required=True, help="side of the square"),
        arg("--r", type=positive_int, required=True, help="grid resolution"),
        arg("--method", choices=[method.value for method in SearchMethod], default="exact"),
        arg("--seed", type=int, default=0),
        arg("--d", type=positive_int, help="expected pattern dimension"),
        arg("--steps", type=positive_int, help="annealing steps"),
    ],
)
async def px_search(ctx: CommandContext) -> int:
    args, config = ctx.args, ctx.config
    pattern = load_pattern(args.pattern)
    if args.d is not None and args.d != pattern.dim:
        raise DimensionMismatchError(pattern.dim, args.d)
    method = SearchMethod(args.method)
    params: Dict[str, JSON] = {
        "pattern": pattern_id(pattern),
        "n": format_rat(args.n),
        "r": args.r,
        "method": method.value,
    }
    kwargs: Dict[str, Any] = {"threads": ctx.threads, "max_cells": config.max_cells("grid")}
    if method != SearchMethod.EXACT:
        params["seed"] = args.seed
    if method == SearchMethod.ANNEAL:
        kwargs.update(
            steps=args.steps or config["grid.anneal.steps"],
            t_max=config["grid.anneal.t_max"],
            t_min=config["grid.anneal.t_min"],
        )
        params.update({key: str(kwargs[key]) for key in ("steps", "t_max", "t_min")})
    compute = partial(px_lower_search, args.n, args.r, pattern, method, args.seed, **kwargs)
    record = await ctx.cached("px-search", params, lambda: compute().serialize())
    log.info("px grid value %d at r=%d (%s)", record["value"], args.r, method.value)
    ctx.emit(record)
    return 0


@command_handler(
    help_text="Build a region or pattern from one of the explicit constructions.",
    arguments=[
        arg("--kind", required=True, choices=CONSTRUCTIONS),
        arg("--c", type=rational, help="strip width or cell side"),
        arg("--a", type=rational, help="vertical arm of the L-shape"),
        arg("--b", type=rational, help="horizontal arm of the L-shape"),
        arg("--n", type=rational, help="side of the square"),
        arg("--r", type=positive_int, help="grid resolution"),
        arg("--matrix", metavar="<file|name>", help="matrix for --kind from-matrix"),
        arg("--region", action="append", default=[], metavar="<file>", help="region JSON file"),
        arg("--grid-r", type=positive_int, help="points per axis for --kind grid-pattern"),
    ],
)
async def construct(ctx: CommandContext) -> int:
    args = ctx.args
    if args.kind == "strip":
        result = strip(ctx.need("c"), ctx.need("n"), args.r)
    elif args.kind == "lshape":
        result = lshape(ctx.need("a"), ctx.need("b"), ctx.need("n"), args.r)
    elif args.kind == "from-matrix":
        result = region_from_matrix(load_matrix(ctx.need("matrix")), ctx.need("c"), ctx.need("n"))
    elif args.kind == "grid-pattern":
        result = grid_pattern(ctx.need("grid-r"), args.c)
    elif args.kind == "lift":
        result = product_lift(load_region(ctx.need("region")[0]), args.n)
    else:
        regions = ctx.need("region")
        if len(regions) != 2:
            raise SchemaError("block-diagonal needs exactly two --region files")
        result = block_diagonal(*(load_region(path) for path in regions))
    ctx.emit(result.serialize())
    return 0


@command_handler(
    help_text="Run inequality checks; the exit status is 1 if any of them fails.",
    arguments=[
        arg("--check", action="append", dest="checks", metavar="<id|all>"),
        arg("--params", nargs="*", default=[], metavar="k=v", help="override check parameters"),
        arg("--seed", type=int, help="seed for every randomized check"),
        arg("--regen-fixtures", action="store_true", help="rewrite the committed fixtures"),
    ],
)
async def verify(ctx: CommandContext) -> int:
    args = ctx.args
    if args.regen_fixtures:
        changed = regen_fixtures()
        ctx.emit({"changed": changed, "fixture": str(ZARANKIEWICZ_FIXTURE)})
        return 0
    ids = args.checks or ["all"]
    overrides = parse_params(args.params)
    params = {
        "checks": [handler.name for handler in select_checks(ids)],
        "params": report_params(**overrides),
        "seed": args.seed,
    }

    async def compute() -> JSON:
        reports = await run_checks(ids, overrides, args.seed, threads=ctx.threads)
        return [report.serialize() for report in reports]

    reports = await ctx.cached("verify", params, compute)
    failed = [report["check_id"] for report in reports if not report["pass"]]
    if failed:
        log.error("%d of %d reports failed: %s", len(failed), len(reports), ", ".join(failed))
    else:
        log.info("All %d reports passed", len(reports))
    ctx.emit(reports)
    return 1 if failed else 0


def _flatten(entry: CacheEntry) -> List[Dict[str, JSON]]:
    items = entry.record if isinstance(entry.record, list) else [entry.record]
    meta = {column: getattr(entry, column) for column in REPORT_COLUMNS[:4]}
    return [{**item, **meta} for item in items]


def write_csv(entries: Sequence[CacheEntry], file: IO[str]) -> None:
    writer = csv.DictWriter(
        file, REPORT_COLUMNS, restval="", extrasaction="ignore", lineterminator="\n"
    )
    writer.writeheader()
    for entry in entries:
        writer.writerows(_flatten(entry))


@command_handler(
    help_text="Export cached results as JSON or as a CSV table.",
    arguments=[
        arg("--format", choices=["json", "csv"], default="json"),
        arg("--operation", choices=["ex", "px-search", "verify"], help="only this operation"),
    ],
)
async def report(ctx: CommandContext) -> int:
    entries = ctx.cache.entries()
    if ctx.args.operation:
        entries = [entry for entry in entries if entry.operation == ctx.args.operation]
    if ctx.args.format == "csv":
        write_csv(entries, ctx.stdout)
    else:
        ctx.emit([entry.serialize() for entry in entries])
    return 0


@command_handler(
    help_text="Inspect or clear the result cache.",
    arguments=[arg("action", choices=["list", "clear", "path"])],
)
async def cache(ctx: CommandContext) -> int:
    action = ctx.args.action
    if action == "path":
        print(ctx.cache.path, file=ctx.stdout)
    elif action == "list":
        ctx.emit(
            [
                {
                    "created_at": entry.created_at,
                    "key": entry.key,
                    "operation": entry.operation,
                    "params": entry.params,
                    "tool_version": entry.tool_version,
                }
                for entry in ctx.cache.entries()
            ]
        )
    else:
        ctx.emit({"cleared": ctx.cache.clear()})
    return 0
