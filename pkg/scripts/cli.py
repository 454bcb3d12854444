#!/usr/bin/env python3
"""
Command-line interface for two-sided facility location games.

Instances are read from --input or stdin; placements from --placement or
from an 's' line in the instance stream. Results go to stdout as
line-oriented text, diagnostics to stderr.

Exit codes: 0 success, 2 parse/configuration error, 3 budget exceeded,
4 internal invariant violation, 1 anything else.

Trace CSV columns (find-spe --format csv):
  move, mover, old_location, new_location, old_load, new_load,
  potential_before, potential_after
"""
import argparse
import logging
import os
import sys
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Sequence, Tuple

from two_sided_flg.core import (
    HostGraph,
    Placement,
    best_response,
    compute_equilibrium_loads,
    empirical_poa,
    extract_client_equilibrium,
    find_spe,
    is_client_equilibrium,
    is_spe,
    optimal_placement_exact,
    optimal_placement_greedy,
    social_welfare,
    welfare_ratio,
)
from two_sided_flg.flow import network_to_dot
from two_sided_flg.formats import (
    InstanceDocument,
    instance_to_dot,
    parse_distribution,
    parse_placement,
    read_document,
    serialize_distribution,
    serialize_instance,
    serialize_loads,
    serialize_placement,
    trace_to_csv,
    write_document,
)
from two_sided_flg.generators import (
    ten_client_instance,
    three_client_instance,
    two_clause_formula,
    gen_3sat,
    gen_basic_us_counterexample,
    gen_lower_bound,
    gen_random,
    gen_random_3cnf,
    read_dimacs,
    write_dimacs,
)
from two_sided_flg.utils.config import config
from two_sided_flg.utils.constants import (
    CLI_DESCRIPTION,
    ERR_INVALID_CONFIG,
    ERR_NO_PLACEMENT,
    ERR_UNEXPECTED,
    FIXTURE_NAMES,
    MSG_OPT_FALLBACK,
)
from two_sided_flg.utils.exceptions import ConfigurationError, EnumerationBudgetError, FLGError
from two_sided_flg.utils.formatter import OutputFormatter
from two_sided_flg.utils.logger import logger, set_level

FORMAT_TEXT = "text"
FORMAT_CSV = "csv"
FORMAT_DOT = "dot"


@dataclass(frozen=True)
class RunConfig:
    """
    Settings of one CLI run.

    Attributes:
        command: Subcommand name
        input_path: Instance file (None reads stdin)
        placement_path: Placement file (None uses the instance's 's' line)
        seeds: Dynamics seeds
        move_cap: Dynamics move cap
        budget: Enumeration budget
        output_format: text, csv or dot
    """
    command: str
    input_path: Optional[str] = None
    placement_path: Optional[str] = None
    seeds: Tuple[int, ...] = ()
    move_cap: int = field(default_factory=lambda: config.dynamics.move_cap)
    budget: int = field(default_factory=lambda: config.dynamics.enumeration_budget)
    output_format: str = FORMAT_TEXT

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        seeds = getattr(args, "seeds", None)
        if seeds is None:
            seed = getattr(args, "seed", None)
            seeds = config.dynamics.seeds if seed is None else (seed,)
        move_cap = getattr(args, "move_cap", None)
        budget = getattr(args, "budget", None)
        if getattr(args, "network", False):
            output_format = FORMAT_DOT
        else:
            output_format = getattr(args, "format", None) or FORMAT_TEXT
        return cls(
            command=args.command,
            input_path=getattr(args, "input", None),
            placement_path=getattr(args, "placement", None),
            seeds=tuple(seeds),
            move_cap=config.dynamics.move_cap if move_cap is None else move_cap,
            budget=config.dynamics.enumeration_budget if budget is None else budget,
            output_format=output_format,
        )

    def validate(self) -> None:
        """Raise ConfigurationError on missing files or non-positive budgets."""
        for path in (self.input_path, self.placement_path):
            if path is not None and not os.path.isfile(path):
                raise ConfigurationError(f"no such file: {path}")
        if self.move_cap <= 0 or self.budget <= 0:
            raise ConfigurationError("move cap and budget must be positive")
        if not self.seeds:
            raise ConfigurationError("at least one seed is required")


def _read_text(path: Optional[str]) -> str:
    if path is None:
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _load_document(run: RunConfig) -> InstanceDocument:
    return read_document(_read_text(run.input_path))


def _placement(run: RunConfig, document: InstanceDocument) -> Placement:
    if run.placement_path is not None:
        return parse_placement(_read_text(run.placement_path), document.graph.n, document.k)
    if document.placement is None:
        raise ConfigurationError(ERR_NO_PLACEMENT)
    return document.placement


def _optimum(g: HostGraph, k: int, budget: int):
    try:
        return optimal_placement_exact(g, k, budget)
    except EnumerationBudgetError as e:
        logger.warning(MSG_OPT_FALLBACK.format(error=e))
        return optimal_placement_greedy(g, k)


def _lines(*parts: str) -> str:
    return "".join(part if part.endswith("\n") else part + "\n" for part in parts if part)


def cmd_loads(args: argparse.Namespace, run: RunConfig) -> str:
    document = _load_document(run)
    s = _placement(run, document)
    return serialize_loads(compute_equilibrium_loads(document.graph, s).loads)


def cmd_client_eq(args: argparse.Namespace, run: RunConfig) -> str:
    document = _load_document(run)
    s = _placement(run, document)
    return serialize_distribution(extract_client_equilibrium(compute_equilibrium_loads(document.graph, s)))


def cmd_check_client_eq(args: argparse.Namespace, run: RunConfig) -> str:
    if not os.path.isfile(args.distribution):
        raise ConfigurationError(f"no such file: {args.distribution}")
    document = _load_document(run)
    s = _placement(run, document)
    sigma = parse_distribution(_read_text(args.distribution))
    holds = is_client_equilibrium(document.graph, s, sigma)
    return _lines(OutputFormatter.format_verdict("client-equilibrium", holds))


def cmd_best_response(args: argparse.Namespace, run: RunConfig) -> str:
    document = _load_document(run)
    s = _placement(run, document)
    response = best_response(document.graph, s, args.facility)
    return _lines(OutputFormatter.format_best_response(args.facility, response.location, response.load))


def cmd_find_spe(args: argparse.Namespace, run: RunConfig) -> str:
    document = _load_document(run)
    g, k = document.graph, document.k
    if run.placement_path is not None:
        initial = parse_placement(_read_text(run.placement_path), g.n, k)
    else:
        initial = document.placement
    trace = find_spe(g, k, initial=initial, seed=run.seeds[0], move_cap=run.move_cap)
    if run.output_format == FORMAT_CSV:
        return trace_to_csv(trace)

    welfare = social_welfare(g, trace.terminal)
    optimum = _optimum(g, k, run.budget)
    parts = [] if args.no_echo else [serialize_instance(g, k)]
    parts += [
        serialize_placement(trace.terminal),
        OutputFormatter.format_comment("moves", trace.move_count),
        OutputFormatter.format_comment("welfare", welfare),
    ]
    if not optimum.exact:
        parts.append(OutputFormatter.format_comment("optimum", "greedy"))
    parts.append(OutputFormatter.format_comment("ratio", welfare_ratio(optimum.welfare, welfare)))
    return _lines(*parts)


def cmd_check_spe(args: argparse.Namespace, run: RunConfig) -> str:
    document = _load_document(run)
    s = _placement(run, document)
    check = is_spe(document.graph, s)
    lines = [OutputFormatter.format_verdict("spe", check.holds)]
    if check.deviation is not None:
        deviation = check.deviation
        lines.append(OutputFormatter.format_deviation(deviation.facility, deviation.location, deviation.load))
    return _lines(*lines)


def cmd_opt(args: argparse.Namespace, run: RunConfig) -> str:
    document = _load_document(run)
    g, k = document.graph, document.k
    if args.greedy:
        result = optimal_placement_greedy(g, k)
    else:
        result = optimal_placement_exact(g, k, run.budget)
    return _lines(serialize_placement(result.placement), OutputFormatter.format_welfare(result.welfare))


def cmd_poa(args: argparse.Namespace, run: RunConfig) -> str:
    document = _load_document(run)
    report = empirical_poa(document.graph, document.k, run.seeds, run.budget, run.move_cap)
    return _lines(OutputFormatter.format_poa_report(report))


def cmd_gen(args: argparse.Namespace, run: RunConfig) -> str:
    family = args.family
    if family == "lower-bound":
        g, k = gen_lower_bound(args.k, args.x)
        return write_document(g, k)
    if family == "3sat":
        if args.cnf is not None and not os.path.isfile(args.cnf):
            raise ConfigurationError(f"no such file: {args.cnf}")
        g, k = gen_3sat(read_dimacs(_read_text(args.cnf)))
        return write_document(g, k)
    if family == "random":
        g, k = gen_random(args.n, args.density, args.max_weight, args.k, args.seed)
        return write_document(g, k)
    if family == "random-3cnf":
        return write_dimacs(gen_random_3cnf(args.vars, args.clauses, args.seed))

    if args.name == "ten-clients":
        g, k, s = ten_client_instance()
    elif args.name == "three-clients":
        g, k, s = three_client_instance()
    elif args.name == "basic-us":
        g, k, s = gen_basic_us_counterexample()
    else:
        g, k = gen_3sat(two_clause_formula())
        s = None
    return write_document(g, k, s)


def cmd_export_dot(args: argparse.Namespace, run: RunConfig) -> str:
    document = _load_document(run)
    g = document.graph
    has_placement = run.placement_path is not None or document.placement is not None
    if run.output_format == FORMAT_DOT:
        s = _placement(run, document)
        computation = compute_equilibrium_loads(g, s)
        if not computation.rounds:
            raise ConfigurationError("the flow network needs at least one facility")
        first = computation.rounds[0].mns
        return network_to_dot(first.network, first.witness_flow)
    if not has_placement:
        return instance_to_dot(g)
    s = _placement(run, document)
    return instance_to_dot(g, s, compute_equilibrium_loads(g, s).loads)


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig], str]] = {
    "loads": cmd_loads,
    "client-eq": cmd_client_eq,
    "check-client-eq": cmd_check_client_eq,
    "best-response": cmd_best_response,
    "find-spe": cmd_find_spe,
    "check-spe": cmd_check_spe,
    "opt": cmd_opt,
    "poa": cmd_poa,
    "gen": cmd_gen,
    "export-dot": cmd_export_dot,
}


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subparser per command."""
    parser = argparse.ArgumentParser(
        prog="flg",
        description=CLI_DESCRIPTION,
        epilog=__doc__.split("\n\n", 2)[2],
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging to stderr")

    io_options = argparse.ArgumentParser(add_help=False)
    io_options.add_argument("--input", help="instance file (default: stdin)")
    io_options.add_argument("--placement", help="placement file with one 's' line")

    commands = parser.add_subparsers(dest="command", required=True)
    commands.add_parser("loads", parents=[io_options], help="exact equilibrium loads")
    commands.add_parser("client-eq", parents=[io_options], help="an explicit client equilibrium")

    check_client = commands.add_parser("check-client-eq", parents=[io_options], help="certify a distribution")
    check_client.add_argument("--distribution", required=True, help="file of 'd' lines")

    response = commands.add_parser("best-response", parents=[io_options], help="best relocation of one facility")
    response.add_argument("--facility", type=int, required=True)

    dynamics = commands.add_parser("find-spe", parents=[io_options], help="improving-response dynamics")
    dynamics.add_argument("--seed", type=int, default=0, help="seed of the random start")
    dynamics.add_argument("--move-cap", type=int)
    dynamics.add_argument("--budget", type=int, help="enumeration budget of the optimum")
    dynamics.add_argument("--format", choices=[FORMAT_TEXT, FORMAT_CSV], default=FORMAT_TEXT)
    dynamics.add_argument("--no-echo", action="store_true", help="do not repeat the instance")

    commands.add_parser("check-spe", parents=[io_options], help="certify a placement as SPE")

    opt = commands.add_parser("opt", parents=[io_options], help="welfare-maximizing placement")
    search = opt.add_mutually_exclusive_group()
    search.add_argument("--exact", action="store_true", help="exhaustive search (default)")
    search.add_argument("--greedy", action="store_true", help="greedy max coverage")
    opt.add_argument("--budget", type=int)

    poa = commands.add_parser("poa", parents=[io_options], help="empirical PoA and PoS")
    poa.add_argument("--seeds", type=int, nargs="+")
    poa.add_argument("--budget", type=int)
    poa.add_argument("--move-cap", type=int)

    gen = commands.add_parser("gen", help="generate instances")
    families = gen.add_subparsers(dest="family", required=True)
    lower = families.add_parser("lower-bound")
    lower.add_argument("--k", type=int, required=True)
    lower.add_argument("--x", type=int, required=True)
    sat = families.add_parser("3sat")
    sat.add_argument("--cnf", help="DIMACS CNF file (default: stdin)")
    rand = families.add_parser("random")
    rand.add_argument("--n", type=int, required=True)
    rand.add_argument("--density", type=float, default=0.2)
    rand.add_argument("--max-weight", type=int, default=1)
    rand.add_argument("--k", type=int, required=True)
    rand.add_argument("--seed", type=int, default=0)
    cnf = families.add_parser("random-3cnf")
    cnf.add_argument("--vars", type=int, required=True)
    cnf.add_argument("--clauses", type=int, required=True)
    cnf.add_argument("--seed", type=int, default=0)
    fixture = families.add_parser("fixture")
    fixture.add_argument("--name", choices=FIXTURE_NAMES, required=True)

    dot = commands.add_parser("export-dot", parents=[io_options], help="Graphviz DOT output")
    dot.add_argument("--network", action="store_true", help="first-round flow network instead of the host graph")

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one CLI command.

    Args:
        argv: Arguments without the program name (default: sys.argv)

    Returns:
        Process exit code
    """
    args = build_parser().parse_args(argv)
    previous_level = logger.level
    if args.verbose:
        set_level(logging.DEBUG)

    try:
        if not config.validate():
            raise ConfigurationError(ERR_INVALID_CONFIG.format(error="check FLG_* environment variables"))
        run = RunConfig.from_args(args)
        run.validate()
        output = COMMANDS[args.command](args, run)
        sys.stdout.write(output)
        return 0
    except FLGError as e:
        print(OutputFormatter.format_error(str(e), args.command), file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.exception("Unexpected error")
        print(OutputFormatter.format_error(ERR_UNEXPECTED.format(error=e), args.command), file=sys.stderr)
        return 1
    finally:
        set_level(previous_level)


if __name__ == "__main__":
    sys.exit(main())
