# coding=UTF-8
"""Command line front door.

Exit codes: 0 success (the property holds, a witness was found), 1 a counterexample or refutation (printed on a
``counterexample:`` or ``refutation:`` line), 2 usage or format errors. Structures may be given as files or as
``builtin:<name>``; FNLAB_SEED seeds every randomized command.
"""
import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from fnlab.algebra.expression import parse_element
from fnlab.constructions.engelking import engelking_member, engelking_witness_check
from fnlab.constructions.independence import extract_independent
from fnlab.data.settings import DEFAULT_LIMITS
from fnlab.game import GameConfig, play, strategy_by_name
from fnlab.helpers.errors import EmptyResult, FNLabError, NotASubstructure, PreconditionFailed
from fnlab.intervals.algebra import IntervalAlgebra, dense_wfn_mapping, lift_mapping, project_mapping
from fnlab.io import load, save
from fnlab.mapping.fn_mapping import FnMapping, WitnessFamily, carrier_of, verify_star
from fnlab.mapping.synthesis import OBJECTIVES, synth_min_fn
from fnlab.mapping.transfer import (
    chain_union_mapping,
    extend_mapping,
    nested_carriers,
    quotient_lift_mapping,
    quotient_push_mapping,
    restrict_mapping,
    retract_transfer,
)
from fnlab.order.poset import sup_retraction
from fnlab.sampling import get_seed
from fnlab.substructure import SubstructureWitness, k_substructure_witness
from fnlab.sweep import CHECKS, ParameterSet, ParameterSweep, SweepRunner

logger = logging.getLogger(__name__)

SUCCESS, REFUTED, USAGE = 0, 1, 2
PROBABILITIES = ("density", "p")


class Output:
    """Collects the lines of a command for human or tsv output."""

    def __init__(self, fmt: str):
        """Instantiate Output."""
        self.fmt = fmt
        self.lines: List[str] = []

    def human(self, text: str) -> None:
        """Add text shown in human mode."""
        if self.fmt == "human":
            self.lines.append(text.rstrip("\n"))

    def table(self, frame) -> None:
        """Add a table shown in tsv mode."""
        if self.fmt == "tsv":
            self.lines.append(save.to_tsv(frame).rstrip("\n"))

    def always(self, text: str) -> None:
        """Add a line shown in both modes."""
        self.lines.append(text)

    def emit(self, stream=None) -> None:
        """Print the collected lines."""
        stream = stream or sys.stdout
        if self.lines:
            print("\n".join(self.lines), file=stream)


def _emit_mapping(out: Output, f: FnMapping) -> None:
    out.human(save.format_mapping(f))
    out.table(save.mapping_frame(f))


def _verdict(out: Output, structure, f: FnMapping) -> int:
    counterexample = verify_star(structure, f)
    if counterexample is None:
        out.always("pass")
        return SUCCESS
    out.always(save.format_counterexample(structure, counterexample))
    return REFUTED


# commands


def cmd_verify(args, out: Output) -> int:
    structure = load.load_structure(args.poset)
    return _verdict(out, structure, load.load_mapping(structure, args.map))


def cmd_synth(args, out: Output) -> int:
    structure = load.load_structure(args.poset)
    f = synth_min_fn(structure, args.objective)
    if args.out:
        save.save_text(args.out, save.format_mapping(f))
    _emit_mapping(out, f)
    return SUCCESS


def cmd_witness(args, out: Output) -> int:
    structure = load.load_structure(args.poset)
    subset = load.load_subset(structure, args.subset)
    try:
        result = k_substructure_witness(structure, subset, args.k)
    except NotASubstructure:
        out.always(f"refutation: - closure {len(subset)}")
        return REFUTED
    if isinstance(result, SubstructureWitness):
        out.human(save.format_witness(result))
        out.table(save.witness_frame(result))
        return SUCCESS
    out.always(save.format_refutation(structure, result))
    return REFUTED


def _witnesses(args, structure, subset) -> WitnessFamily:
    if args.witness:
        return load.parse_witness(structure, subset, load.read_text(args.witness))
    return WitnessFamily.canonical(structure, subset)


def cmd_transfer(args, out: Output) -> int:
    structure = load.load_structure(args.poset)
    if args.kind == "restrict":
        subset = load.load_subset(structure, args.subset)
        g = load.load_mapping(structure, args.map)
        f = restrict_mapping(structure, subset, g, _witnesses(args, structure, subset), args.use)
    elif args.kind == "extend":
        subset = load.load_subset(structure, args.subset)
        g = load.load_mapping(structure, args.map)
        f_sub = load.load_mapping(carrier_of(structure, subset), args.sub_map)
        f = extend_mapping(structure, subset, f_sub, g, _witnesses(args, structure, subset))
    elif args.kind == "retract":
        sub = load.load_structure(args.sub)
        g = load.load_mapping(structure, args.map)
        i = load.parse_order_map(sub, structure, load.read_text(args.embed))
        j = load.parse_order_map(structure, sub, load.read_text(args.retraction)) if args.retraction else None
        f = retract_transfer(g, i, j or sup_retraction(i))
    elif args.kind == "chain":
        subsets = [load.load_subset(structure, s) for s in args.subsets]
        carriers = nested_carriers(structure, subsets)
        if len(args.maps) != len(carriers):
            raise FNLabError("Give one mapping per subset")
        f = chain_union_mapping([load.load_mapping(c, m) for c, m in zip(carriers, args.maps)])
    elif args.kind == "quotient-push":
        ideal = load.load_subset(structure, args.ideal)
        _, f = quotient_push_mapping(structure, load.load_mapping(structure, args.map), ideal)
    else:
        ideal = load.load_subset(structure, args.ideal)
        if not structure.is_boolean_algebra:
            raise PreconditionFailed("Quotients need a Boolean algebra")
        quotient, _ = structure.quotient(ideal)
        f = quotient_lift_mapping(structure, ideal, load.load_mapping(quotient, args.map))
    _emit_mapping(out, f)
    return _verdict(out, f.carrier, f) if args.check else SUCCESS


def cmd_intalg(args, out: Output) -> int:
    order = load.load_linear_order(args.order)
    if args.kind == "ops":
        a = load.parse_interval(order, args.a)
        b = load.parse_interval(order, args.b) if args.b is not None else None
        if args.op == "complement":
            out.always((~a).to_text())
        elif b is None:
            raise FNLabError(f"{args.op} needs two elements")
        elif args.op == "leq":
            out.always("true" if a <= b else "false")
            return SUCCESS if a <= b else REFUTED
        else:
            result = {"union": a | b, "intersection": a & b, "difference": a - b, "xor": a ^ b}[args.op]
            out.always(result.to_text())
        return SUCCESS
    if args.kind == "ep":
        a = load.parse_interval(order, args.a)
        out.always(" ".join(order.label(p) for p in order.sort(a.endpoints())))
        return SUCCESS

    grid = [order.parse_point(p) for p in args.grid.split()] if args.grid else None
    algebra = IntervalAlgebra(order, grid)
    if args.kind == "dense-map":
        skeleton = [order.parse_point(p) for p in (args.skeleton or "").split()]
        return _verdict(out, algebra, dense_wfn_mapping(algebra, skeleton))
    f = load.load_mapping(order.to_poset(), args.map)
    g = lift_mapping(f, algebra)
    if args.kind == "lift":
        return _verdict(out, algebra, g)
    projected = project_mapping(g, algebra)
    _emit_mapping(out, projected)
    return _verdict(out, projected.carrier, projected)


def cmd_game(args, out: Output) -> int:
    structure = load.load_structure(args.poset)
    mapping = load.load_mapping(structure, args.map) if args.map else None
    seed = get_seed() if args.seed is None else args.seed
    cfg = GameConfig(structure, args.rounds, args.move_bound, args.k)
    transcript = play(
        cfg,
        strategy_by_name(args.first, "I", mapping, seed),
        strategy_by_name(args.second, "II", mapping, seed),
    )
    out.human(save.format_transcript(transcript))
    if out.fmt == "tsv":
        out.table(transcript.to_frame())
        out.always(f"verdict: {'win' if transcript.won else 'lose'}")
        if not transcript.won:
            out.always(save.format_refutation(structure, transcript.verdict))
    return SUCCESS if transcript.won else REFUTED


def cmd_engelking(args, out: Output) -> int:
    if args.kind == "member":
        member = engelking_member(args.m, parse_element(args.expr, args.m))
        out.always(f"member: {'true' if member else 'false'}")
        if not member:
            out.always(f"refutation: {args.expr} constants-disagree")
        return SUCCESS if member else REFUTED

    report = engelking_witness_check(
        args.m, args.ys, args.y_sub, args.x0, args.x1, args.x2, args.y1, args.y2, seed=get_seed()
    )
    for line in report.to_lines():
        out.always(line)
    if not report.passed:
        out.always(f"refutation: {report.failures[0] if report.failures else 'check-failed'}")
        return REFUTED
    return SUCCESS


def cmd_independent(args, out: Output) -> int:
    structure = load.load_structure(args.algebra)
    f = load.load_mapping(structure, args.map)
    elements = load.parse_items(structure, args.elements)
    try:
        certificate = extract_independent(structure, f, elements)
    except EmptyResult:
        out.always("refutation: empty")
        return REFUTED
    for line in certificate.to_lines():
        out.always(line)
    return SUCCESS


def cmd_sweep(args, out: Output) -> int:
    parameters = dict(args.param or [])
    parameter_set = ParameterSet("params", **(parameters or {"n": [6]}))
    seed = get_seed() if args.seed is None else args.seed
    frame = SweepRunner(args.check, ParameterSweep(parameter_set), args.repeats, seed).run(progress=args.progress)
    failed = frame[~frame["passed"].astype(bool)]
    out.human(f"{len(frame) - len(failed)} of {len(frame)} instances passed")
    out.table(frame)
    if len(failed):
        out.always(f"refutation: {args.check} repeat={int(failed.iloc[0]['repeat'])}")
        return REFUTED
    return SUCCESS


COMMANDS: Dict[str, Callable] = {
    "verify": cmd_verify,
    "synth": cmd_synth,
    "witness": cmd_witness,
    "transfer": cmd_transfer,
    "intalg": cmd_intalg,
    "game": cmd_game,
    "engelking": cmd_engelking,
    "independent": cmd_independent,
    "sweep": cmd_sweep,
}


def _ints(text: str) -> List[int]:
    return [int(t) for t in text.replace(",", " ").split()]


def _sweep_param(text: str) -> Tuple[str, List[Union[int, float]]]:
    name, sep, values = text.partition("=")
    try:
        parsed = [float(v) if "." in v else int(v) for v in values.split(",")]
    except ValueError:
        parsed = []
    if not (name and sep and parsed):
        raise argparse.ArgumentTypeError(f"expected name=v1,v2,..., got {text!r}")
    if name in PROBABILITIES and not all(0 <= v <= 1 for v in parsed):
        raise argparse.ArgumentTypeError(f"{name} values must lie in [0, 1]")
    if name not in PROBABILITIES and not all(isinstance(v, int) and v >= 1 for v in parsed):
        raise argparse.ArgumentTypeError(f"{name} values must be integers of at least 1")
    return name, parsed


def build_parser() -> argparse.ArgumentParser:
    """Parser for every subcommand."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("human", "tsv"), default="human")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="fnlab", description="Finite interpolation mappings and substructures.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a mapping for the interpolation condition")
    p.add_argument("--poset", required=True)
    p.add_argument("--map", required=True)

    p = sub.add_parser("synth", parents=[common], help="smallest admissible mapping")
    p.add_argument("--poset", required=True)
    p.add_argument("--objective", choices=sorted(OBJECTIVES), default="max-size")
    p.add_argument("--out")

    p = sub.add_parser("witness", parents=[common], help="k-substructure witness")
    p.add_argument("--poset", required=True)
    p.add_argument("--subset", required=True)
    p.add_argument("-k", type=int, required=True)

    p = sub.add_parser("transfer", parents=[common], help="move a mapping between structures")
    p.add_argument(
        "kind", choices=("restrict", "extend", "retract", "chain", "quotient-push", "quotient-lift")
    )
    p.add_argument("--poset", required=True)
    p.add_argument("--subset")
    p.add_argument("--map")
    p.add_argument("--sub-map")
    p.add_argument("--witness")
    p.add_argument("--use", choices=("lower", "upper"), default="lower")
    p.add_argument("--sub")
    p.add_argument("--embed")
    p.add_argument("--retraction")
    p.add_argument("--subsets", nargs="+")
    p.add_argument("--maps", nargs="+")
    p.add_argument("--ideal")
    p.add_argument("--check", action="store_true", help="verify the output mapping")

    p = sub.add_parser("intalg", parents=[common], help="interval algebras")
    p.add_argument("kind", choices=("ops", "ep", "dense-map", "lift", "project"))
    p.add_argument("--order", required=True)
    p.add_argument("--op", choices=("union", "intersection", "complement", "difference", "xor", "leq"))
    p.add_argument("-a")
    p.add_argument("-b")
    p.add_argument("--grid")
    p.add_argument("--skeleton")
    p.add_argument("--map")

    p = sub.add_parser("game", parents=[common], help="play the substructure game")
    p.add_argument("--poset", required=True)
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--move-bound", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--first", default="greedy")
    p.add_argument("--second", default="closure")
    p.add_argument("--map")
    p.add_argument("--seed", type=int)

    p = sub.add_parser("engelking", parents=[common], help="the Engelking subalgebra")
    p.add_argument("kind", choices=("member", "witness-check"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--expr")
    p.add_argument("--ys", type=_ints, default=[])
    p.add_argument("--y-sub", type=_ints, default=[])
    for name in ("x0", "x1", "x2", "y1", "y2"):
        p.add_argument(f"--{name}", type=int)

    p = sub.add_parser("independent", parents=[common], help="extract an independent family")
    p.add_argument("--algebra", required=True)
    p.add_argument("--map", required=True)
    p.add_argument("--elements", required=True, help="comma separated expressions")

    p = sub.add_parser("sweep", parents=[common], help="run a check over random instances")
    p.add_argument("check", choices=sorted(CHECKS))
    p.add_argument("--param", action="append", type=_sweep_param, help="name=v1,v2,...")
    p.add_argument("--repeats", type=int, default=10)
    p.add_argument("--seed", type=int)
    p.add_argument("--progress", action="store_true")
    return parser


def _check_arguments(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    needed = {
        ("transfer", "restrict"): ("subset", "map"),
        ("transfer", "extend"): ("subset", "map", "sub_map"),
        ("transfer", "retract"): ("sub", "map", "embed"),
        ("transfer", "chain"): ("subsets", "maps"),
        ("transfer", "quotient-push"): ("ideal", "map"),
        ("transfer", "quotient-lift"): ("ideal", "map"),
        ("intalg", "ops"): ("op", "a"),
        ("intalg", "ep"): ("a",),
        ("intalg", "lift"): ("map",),
        ("intalg", "project"): ("map",),
        ("engelking", "member"): ("expr",),
        ("engelking", "witness-check"): ("x0", "x1", "x2", "y1", "y2"),
    }.get((args.command, getattr(args, "kind", None)), ())
    missing = [name for name in needed if getattr(args, name) is None]
    if missing:
        parser.error(f"{args.command} {args.kind} needs --{' --'.join(m.replace('_', '-') for m in missing)}")
    if args.command == "game" and (args.rounds < 1 or args.move_bound < 2 or args.k < 1):
        parser.error("game needs --rounds >= 1, --move-bound >= 2 and -k >= 1")
    if args.command == "sweep":
        if args.repeats < 1:
            parser.error("sweep needs --repeats >= 1")
        if len({len(values) for _, values in args.param or []}) > 1:
            parser.error("every --param needs the same number of values")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _check_arguments(parser, args)
    except SystemExit as err:
        return USAGE if err.code else SUCCESS

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")

    out = Output(args.format)
    try:
        code = COMMANDS[args.command](args, out)
    except (ValueError, OSError) as err:
        out.emit()
        print(f"error: {err}", file=sys.stderr)
        return USAGE
    out.emit()
    return code


def dispatch(argv: Sequence[str]) -> int:
    """Alias of main for programmatic use."""
    return main(list(argv))


if __name__ == "__main__":
    raise SystemExit(main())
