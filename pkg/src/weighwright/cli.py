"""Command-line interface: ``weighwright <command> ...``.

Exit codes: 0 success, 2 usage, 3 unsolvable or too many coins, 4 verification
failure, 5 search ceiling exceeded, 6 unreadable strategy document.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Optional, Sequence

from . import adaptive, errors, sequences, synthesis, tables, verifier
from .core import CoinKind, Hypothesis, Strategy, parse_kind, parse_state
from .document import StrategyDocument, load_document, parse_counts

EXIT_OK, EXIT_USAGE, EXIT_UNSOLVABLE, EXIT_VERIFY, EXIT_CEILING, EXIT_DOCUMENT = 0, 2, 3, 4, 5, 6

_ERROR_EXIT = (
    (errors.SearchCeilingExceeded, EXIT_CEILING),
    (errors.DocumentError, EXIT_DOCUMENT),
    (errors.Unsolvable, EXIT_UNSOLVABLE),
    (errors.TooManyCoins, EXIT_UNSOLVABLE),
    (errors.UnsupportedBound, EXIT_UNSOLVABLE),
    (errors.InequalityViolated, EXIT_UNSOLVABLE),
    (errors.InsufficientGenuineCoins, EXIT_UNSOLVABLE),
    (errors.IllegitimateStrategy, EXIT_VERIFY),
    (errors.OutcomeNotProducible, EXIT_VERIFY),
)


class _Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, data: Any) -> None:
        print(json.dumps(data, indent=2) if self.as_json else text)


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else False
    parser.add_argument("--json", action="store_true", default=default, help="machine-readable JSON on stdout")
    parser.add_argument(
        "--seedless",
        action="store_true",
        default=default,
        help="builtin tables as listed: no corrections, no derived tables",
    )


def _strategy_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("file", nargs="?", help="strategy document (.wwjson)")
    src.add_argument("--builtin", metavar="ID", help=f"catalogued strategy: {', '.join(tables.table_ids())}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weighwright", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="solvability bounds and counting sequences")
    p.add_argument("--kind", choices=[k.value for k in CoinKind])
    p.add_argument("--class", dest="scenario_class", choices=[c.value for c in sequences.BoundClass])
    p.add_argument("--w", type=int)
    p.add_argument("--table", type=int, metavar="N", help="print R, H, HR, L, LHR for n = 0..N")

    p = sub.add_parser("synth", parents=[common], help="build an oblivious strategy document")
    p.add_argument("--kind", choices=[k.value for k in CoinKind])
    p.add_argument("--start", help="known start state (light, heavy, real)")
    p.add_argument("--mixed", metavar="COUNTS", help="mixed state as l:h (LH), l:r (LR) or l:h:r (LHR)")
    p.add_argument("--coins", type=int, help="number of coins (known start, or to cut down a builtin)")
    p.add_argument("--genuine", type=int, default=0, help="extra genuine coins (LHR mixed)")
    p.add_argument("--w", type=int)
    p.add_argument("--builtin", metavar="ID", help=f"catalogued strategy: {', '.join(tables.table_ids())}")
    p.add_argument("--out", metavar="FILE", help="write the document here instead of stdout")

    p = sub.add_parser("verify", parents=[common], help="check legitimacy and decodability")
    _strategy_source(p)

    p = sub.add_parser("simulate", parents=[common], help="outcome when one coin is the fake")
    _strategy_source(p)
    p.add_argument("--coin", type=int, required=True)
    p.add_argument("--start", required=True)

    p = sub.add_parser("decode", parents=[common], help="name the fake coin from an observed outcome")
    _strategy_source(p)
    p.add_argument("--outcome", required=True)

    p = sub.add_parser("solve", parents=[common], help="adaptive solvability by game-tree search")
    p.add_argument("--kind", choices=[k.value for k in CoinKind])
    p.add_argument("--unknown", type=int, default=0, metavar="N", help="coins in an unknown state")
    p.add_argument("--mixed", metavar="COUNTS", help="coins with an assigned state, as for synth")
    p.add_argument("--genuine", type=int, default=0)
    p.add_argument("--w", type=int)
    p.add_argument("--tree", metavar="FILE", help="write the decision tree as JSON")
    p.add_argument("--example", metavar="ID", help=f"replay a scripted strategy: {', '.join(adaptive.SCRIPTED)}")

    p = sub.add_parser("check-impossible", parents=[common], help="confirm predicted impossibilities by search")
    p.add_argument("--w-max", type=int, default=3)
    return parser


def _require(args, parser, *names: str) -> None:
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        parser.error(f"{args.command} needs " + ", ".join("--" + n.replace("_", "-") for n in missing))


def _load_strategy(args) -> tuple[Strategy, str]:
    if args.builtin:
        return tables.builtin_strategy(args.builtin, seedless=args.seedless), args.builtin
    doc = load_document(args.file)
    return doc.to_strategy(), doc.provenance or args.file


# --- commands ------------------------------------------------------------------

def cmd_count(args, out: _Output, parser) -> int:
    if args.table is not None:
        names = ("R", "H", "HR", "L", "LHR")
        rows = {name: [sequences.sequence_value(name, n) for n in range(args.table + 1)] for name in names}
        width = max(len(str(v)) for vs in rows.values() for v in vs)
        lines = ["n".ljust(4) + " ".join(str(n).rjust(width) for n in range(args.table + 1))]
        lines += [name.ljust(4) + " ".join(str(v).rjust(width) for v in vs) for name, vs in rows.items()]
        out.emit("\n".join(lines), rows)
        return EXIT_OK
    _require(args, parser, "kind", "scenario_class", "w")
    value = sequences.bound(args.kind, args.scenario_class, args.w)
    out.emit(str(value), {"kind": args.kind, "class": args.scenario_class, "w": args.w, "bound": value})
    return EXIT_OK


def _synthesize(args, parser) -> tuple[Strategy, str]:
    if args.builtin:
        strategy = tables.builtin_strategy(args.builtin, num_coins=args.coins, seedless=args.seedless)
        return strategy, f"builtin table {args.builtin}"
    _require(args, parser, "kind", "w")
    kind = parse_kind(args.kind)
    if args.mixed:
        l, h, r = parse_counts(kind, args.mixed)
        if kind is CoinKind.LH:
            return synthesis.synth_lh_mixed(l, h, args.w), f"LH mixed {args.mixed}"
        if kind is CoinKind.LR:
            return synthesis.synth_lr_mixed(l, r, args.w), f"LR mixed {args.mixed}"
        return synthesis.synth_lhr_mixed(l, h, r, args.w, args.genuine), f"LHR mixed {args.mixed}"
    _require(args, parser, "start", "coins")
    start = parse_state(args.start)
    return synthesis.synth_known(kind, start, args.coins, args.w), f"{kind.name} known {start.value}"


def cmd_synth(args, out: _Output, parser) -> int:
    strategy, provenance = _synthesize(args, parser)
    doc = StrategyDocument.from_strategy(strategy, provenance)
    if not args.out:
        print(doc.dumps())
        return EXIT_OK
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(doc.dumps() + "\n")
    out.emit(
        f"wrote {strategy.num_coins} itineraries over {strategy.weighings} weighings to {args.out}",
        {"file": args.out, "num_coins": strategy.num_coins, "weighings": strategy.weighings},
    )
    return EXIT_OK


def cmd_verify(args, out: _Output, parser) -> int:
    strategy, _ = _load_strategy(args)
    report = verifier.verify_decodable(strategy, require_legitimate=False)
    yes = lambda b: "yes" if b else "no"  # noqa: E731
    text = f"legitimate: {yes(report.legitimate)}, decodable: {yes(report.decodable)}"
    if report.violations:
        text += "\n" + "\n".join("  " + v for v in report.violations)
    out.emit(
        text,
        {
            "legitimate": report.legitimate,
            "decodable": report.decodable,
            "hypotheses": report.num_hypotheses,
            "violations": report.violations,
        },
    )
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_simulate(args, out: _Output, parser) -> int:
    strategy, _ = _load_strategy(args)
    outcome = verifier.simulate(strategy, Hypothesis(args.coin, parse_state(args.start)))
    out.emit(outcome, {"coin": args.coin, "start": args.start, "outcome": outcome})
    return EXIT_OK


def cmd_decode(args, out: _Output, parser) -> int:
    strategy, _ = _load_strategy(args)
    found = verifier.decode(strategy, args.outcome)
    state = "ambiguous" if found.ambiguous else found.state.value
    out.emit(f"coin {found.coin_index}, state {state}", {"coin": found.coin_index, "state": state})
    return EXIT_OK


def _tree_json(node) -> dict:
    if isinstance(node, adaptive.CountLeaf):
        return {"state": str(node.state), "found": True}
    side = lambda c: {k: c.get(k) for k in "lhrug" if c.get(k)}  # noqa: E731
    return {
        "state": str(node.state),
        "weighings_left": node.weighings_left,
        "left": side(node.choice.left),
        "right": side(node.choice.right),
        "children": {res: _tree_json(child) for res, child in node.children.items()},
    }


def cmd_solve(args, out: _Output, parser) -> int:
    if args.example:
        script = adaptive.scripted_strategy(args.example)
        report = script.verify()
        verdict = "verified" if report.ok else "FAILED"
        out.emit(
            f"{args.example}: {verdict} over {report.hypotheses} hypotheses, "
            f"at most {report.max_weighings} of {script.weighings} weighings"
            + "".join("\n  " + f for f in report.failures),
            {"example": args.example, "ok": report.ok, "hypotheses": report.hypotheses,
             "max_weighings": report.max_weighings, "failures": report.failures},
        )
        return EXIT_OK if report.ok else EXIT_VERIFY
    _require(args, parser, "kind", "w")
    kind = parse_kind(args.kind)
    l, h, r = parse_counts(kind, args.mixed) if args.mixed else (0, 0, 0)
    state = adaptive.ScenarioCounts(l=l, h=h, r=r, u=args.unknown, g=args.genuine)
    verdict = adaptive.solve_adaptive(kind, state, args.w)
    word = "Solvable" if verdict else "Unsolvable"
    if verdict and args.tree:
        with open(args.tree, "w", encoding="utf-8") as fh:
            json.dump(_tree_json(verdict.tree), fh, indent=2)
    out.emit(word, {"kind": kind.value, "state": str(state), "w": args.w, "solvable": verdict.solvable})
    return EXIT_OK if verdict else EXIT_UNSOLVABLE


def cmd_check_impossible(args, out: _Output, parser) -> int:
    report = adaptive.check_impossibilities(args.w_max)
    lines = [
        f"{'ok  ' if c.passed else 'FAIL'} w={c.w} {c.description}: {'solvable' if c.solvable else 'unsolvable'}"
        for c in report.checks
    ]
    out.emit(
        "\n".join(lines),
        [{"description": c.description, "w": c.w, "solvable": c.solvable, "passed": c.passed} for c in report.checks],
    )
    return EXIT_OK if report.passed else EXIT_VERIFY


COMMANDS = {
    "count": cmd_count,
    "synth": cmd_synth,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
    "decode": cmd_decode,
    "solve": cmd_solve,
    "check-impossible": cmd_check_impossible,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Output(args.json)
    try:
        return COMMANDS[args.command](args, out, parser)
    except errors.WeighError as exc:
        code = next((c for cls, c in _ERROR_EXIT if isinstance(exc, cls)), EXIT_USAGE)
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
