"""Command line front end: ``signedhom <subcommand> ...``.

Every subcommand prints a short ``key: value`` report and encodes its verdict
in the exit code: 0 when the queried property holds (mapping found, bound met,
zero failures), 1 when it does not, 2 on usage or parse errors, 3 when the
search budget runs out before an answer is known.  Reports are byte-stable:
the same invocation prints the same bytes regardless of ``--jobs``.

Graph arguments resolve built-in gadget and target names (``subdivided-k4``,
``k44m``, ``dsg:k6m``, ...) before falling back to the filesystem.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .core import SignedGraph, dumps, girth_vector, load, switching_equivalent
from .density import mad, mad_less_than
from .gadgets import builtin_gadget
from .hom import BudgetExceeded, HomResult, SolveOptions, enumerate_homs, sp_hom, switch_hom
from .targets import TargetSpace, builtin_target, custom_space
from .verify import (
    CONFIG_IDS,
    SUITE_IDS,
    SWEEP_IDS,
    discharge_audit,
    scan_structures,
    verify_config_extension,
    verify_suite,
    verify_sweep,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

JOBS_ENV = "SIGNEDHOM_JOBS"


class _CliError(Exception):
    """Bad input discovered after argparse: unknown name, unreadable file."""


def _resolve_graph(arg: str) -> SignedGraph:
    g = builtin_gadget(arg)
    if g is not None:
        return g
    t = builtin_target(arg)
    if t is not None:
        return t.graph
    try:
        return load(arg)
    except OSError as exc:
        raise _CliError(f"cannot read graph {arg!r}: {exc}") from exc
    except ValueError as exc:
        raise _CliError(f"cannot parse graph {arg!r}: {exc}") from exc


def _resolve_target(arg: str) -> TargetSpace:
    t = builtin_target(arg)
    if t is not None:
        return t
    try:
        return custom_space(load(arg), name=arg)
    except OSError as exc:
        raise _CliError(f"cannot read target {arg!r}: {exc}") from exc
    except ValueError as exc:
        raise _CliError(f"cannot parse target {arg!r}: {exc}") from exc


def _format_mapping(mapping: dict[int, int]) -> str:
    return " ".join(f"{v}->{mapping[v]}" for v in sorted(mapping))


def _format_vertex_set(s: frozenset[int]) -> str:
    return " ".join(str(v) for v in sorted(s)) if s else "-"


def _hom_lines(result: HomResult, fmt: str) -> list[str]:
    if fmt == "kv":
        out = [f"status: {result.status}"]
        if result.mapping is not None:
            out.append(f"mapping: {_format_mapping(result.mapping)}")
        if result.switch_set is not None:
            out.append(f"switch-set: {_format_vertex_set(result.switch_set)}")
        out.append(f"nodes: {result.stats.nodes}")
        return out
    out = [f"status: {result.status}"]
    if result.mapping is not None:
        out.extend(f"{v} -> {result.mapping[v]}" for v in sorted(result.mapping))
    if result.switch_set is not None:
        out.append(f"switch: {_format_vertex_set(result.switch_set)}")
    return out


def _default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "").strip()
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return 1


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise _CliError(f"not a rational number: {text!r}") from exc


# --- subcommands -----------------------------------------------------------


def _cmd_map(args: argparse.Namespace) -> int:
    g = _resolve_graph(args.graph)
    t = _resolve_target(args.target)
    opts = SolveOptions(max_nodes=args.max_nodes)
    solve = switch_hom if args.mode == "switch" else sp_hom
    result = solve(g, t, opts)
    for line in _hom_lines(result, args.format):
        print(line)
    return EXIT_OK if result.found else EXIT_FAIL


def _cmd_mad(args: argparse.Namespace) -> int:
    g = _resolve_graph(args.graph)
    cert = mad(g)
    print(f"mad: {cert.value}")
    print(f"witness: {_format_vertex_set(cert.witness)}")
    if args.less_than is None:
        return EXIT_OK
    bound = _parse_fraction(args.less_than)
    holds, violation = mad_less_than(g, bound)
    print(f"less-than: {'yes' if holds else 'no'}")
    if violation is not None:
        print(f"violation: {_format_vertex_set(violation)}")
    return EXIT_OK if holds else EXIT_FAIL


def _cmd_gij(args: argparse.Namespace) -> int:
    g = _resolve_graph(args.graph)
    print(f"g: {girth_vector(g)}")
    return EXIT_OK


def _cmd_switch_equiv(args: argparse.Namespace) -> int:
    g1 = _resolve_graph(args.first)
    g2 = _resolve_graph(args.second)
    try:
        witness = switching_equivalent(g1, g2)
    except ValueError as exc:
        print("status: NOT-EQUIVALENT")
        print(f"note: {exc}")
        return EXIT_FAIL
    if witness is None:
        print("status: NOT-EQUIVALENT")
        return EXIT_FAIL
    print("status: EQUIVALENT")
    print(f"switch-set: {_format_vertex_set(witness)}")
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    g = builtin_gadget(args.name)
    if g is None:
        t = builtin_target(args.name)
        if t is not None:
            g = t.graph
    if g is None:
        raise _CliError(f"unknown built-in name {args.name!r}")
    text = dumps(g)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite is not None:
        report = verify_suite(args.suite, kmax=args.kmax, jobs=args.jobs)
    elif args.config is not None:
        report = verify_config_extension(args.config, jobs=args.jobs)
    else:
        report = verify_sweep(
            args.sweep,
            jobs=args.jobs,
            max_n=args.max_n,
            count=args.count,
            seed=args.seed,
        )
    for line in report.lines():
        print(line)
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_scan(args: argparse.Namespace) -> int:
    g = _resolve_graph(args.graph)
    lines = scan_structures(g).lines()
    for line in lines:
        print(line)
    return EXIT_FAIL if any("VIOLATED" in line for line in lines) else EXIT_OK


def _cmd_audit(args: argparse.Namespace) -> int:
    g = _resolve_graph(args.graph)
    lines = discharge_audit(g, args.rules).lines()
    for line in lines:
        print(line)
    return EXIT_FAIL if any("VIOLATED" in line for line in lines) else EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    g = _resolve_graph(args.graph)
    t = _resolve_target(args.target)
    mode = "SWITCH" if args.mode == "switch" else "SP"
    outcome = enumerate_homs(g, t, mode=mode, cap=args.cap)
    onto = sum(
        1
        for r in outcome.results
        if r.mapping is not None and len(set(r.mapping.values())) == t.num_colors
    )
    print(f"count: {len(outcome.results)}")
    print(f"onto: {onto}")
    print(f"complete: {'yes' if outcome.complete else 'no'}")
    return EXIT_OK if outcome.results else EXIT_FAIL


# --- argument parsing ------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="signedhom",
        description="Switching homomorphisms, density and verification for signed graphs.",
    )
    parser.add_argument(
        "--format",
        choices=("plain", "kv"),
        default="plain",
        help="kv renders mappings as single key-value lines",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("map", help="decide a homomorphism into a target")
    p.add_argument("graph", help="graph file or built-in name")
    p.add_argument("--target", required=True, help="target name or graph file")
    p.add_argument("--mode", choices=("sp", "switch"), default="switch")
    p.add_argument("--max-nodes", type=int, default=5_000_000, help="search budget")
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("mad", help="exact maximum average degree")
    p.add_argument("graph", help="graph file or built-in name")
    p.add_argument("--less-than", metavar="Q", help="also test mad < Q (exit 1 when not)")
    p.set_defaults(func=_cmd_mad)

    p = sub.add_parser("gij", help="girth vector by sign and parity")
    p.add_argument("graph", help="graph file or built-in name")
    p.set_defaults(func=_cmd_gij)

    p = sub.add_parser("switch-equiv", help="decide switching equivalence of two graphs")
    p.add_argument("first", help="graph file or built-in name")
    p.add_argument("second", help="graph file or built-in name")
    p.set_defaults(func=_cmd_switch_equiv)

    p = sub.add_parser("gen", help="write a built-in graph in the text format")
    p.add_argument("name", help="built-in gadget or target name")
    p.add_argument("-o", "--output", help="write to a file instead of stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="run a lemma suite, configuration check or sweep")
    what = p.add_mutually_exclusive_group(required=True)
    what.add_argument("--suite", choices=SUITE_IDS)
    what.add_argument("--config", choices=CONFIG_IDS, metavar="CONFIG")
    what.add_argument("--sweep", choices=SWEEP_IDS)
    p.add_argument("--kmax", type=int, default=4, help="largest tuple length for suites")
    p.add_argument("--max-n", type=int, default=None, help="largest graph order for sweeps")
    p.add_argument("--count", type=int, default=None, help="number of sampled instances")
    p.add_argument("--seed", type=int, default=2026, help="RNG seed for sampled sweeps")
    p.add_argument("--jobs", type=int, default=_default_jobs(), help="worker processes")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("scan", help="degree profiles, patterns and poor paths")
    p.add_argument("graph", help="graph file or built-in name")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("audit", help="run a discharging audit")
    p.add_argument("graph", help="graph file or built-in name")
    p.add_argument("--rules", choices=("k6", "k8"), required=True)
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("enumerate", help="count all homomorphisms into a target")
    p.add_argument("graph", help="graph file or built-in name")
    p.add_argument("--target", required=True, help="target name or graph file")
    p.add_argument("--mode", choices=("sp", "switch"), default="sp")
    p.add_argument("--cap", type=int, default=100_000, help="stop after this many")
    p.set_defaults(func=_cmd_enumerate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print("status: INDETERMINATE")
        print(f"nodes: {exc.nodes}")
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
