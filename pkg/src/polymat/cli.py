"""Command-line front end.

Ideals are read from a file argument or stdin in the ``ring n`` text format;
family verbs print ideals in the same format so verbs compose through pipes::

    polymat veronese 4 2 --caps 1,1,1,1 | polymat astab
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .decomposition import (
    ass_polymatroidal_fast,
    associated_primes,
    irreducible_decomposition,
)
from .errors import BudgetExceeded, ParseError, PolymatError
from .families import (
    VeroneseSpec,
    almost_squarefree_veronese,
    enumerate_matroidal,
    veronese_type,
)
from .homology import DEFAULT_COST_BUDGET, depth_oracle
from .monomial import Monomial, MonomialIdeal, MonomialPrime, ideal_to_json, localize, power, support_and_gcd
from .stability import DEFAULT_GENERATOR_BUDGET, DEFAULT_MAX_POWER, stability_report
from .structure import (
    analytic_spread,
    is_matroidal,
    is_polymatroidal,
    linear_quotients_q,
    linear_relation_graph,
    q_polymatroidal,
)
from .textio import format_ideal, parse_ideal
from .verify import SuiteConfig, format_table, run_suite, suite_exit_status, suite_json

EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET = 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _read_ideal(args) -> MonomialIdeal:
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    return parse_ideal(text)


def depth(I: MonomialIdeal, budget: int = DEFAULT_COST_BUDGET) -> tuple[int, str]:
    """depth R/I and the route used to get it."""
    if is_polymatroidal(I):
        return I.n - q_polymatroidal(I) - 1, "linear-quotients"
    report = linear_quotients_q(I)
    if report.linear:
        return I.n - report.q - 1, "linear-quotients"
    return depth_oracle(I, budget), "homology"


def _ass(I: MonomialIdeal):
    return ass_polymatroidal_fast(I) if is_polymatroidal(I) else associated_primes(I)


def cmd_info(args):
    I = _read_ideal(args)
    supp, g, full = support_and_gcd(I)
    poly = bool(is_polymatroidal(I)) if not I.is_zero() else False
    info = {
        "n": I.n,
        "generators": len(I),
        "degrees": sorted(set(I.degrees())),
        "squarefree": I.is_squarefree(),
        "polymatroidal": poly,
        "matroidal": poly and is_matroidal(I),
        "support": sorted(supp),
        "full_supported": full,
        "gcd": str(g),
    }
    if poly:
        graph = linear_relation_graph(I)
        info["gamma"] = {"r": graph.r, "s": graph.s, "edges": len(graph.edges)}
        info["ell"] = analytic_spread(I)
    if args.json:
        return info
    lines = [f"{k}: {v}" for k, v in info.items()]
    return "\n".join(lines)


def cmd_ass(args):
    I = power(_read_ideal(args), args.power)
    ass = _ass(I)
    if args.json:
        return {"t": args.power, "ass": ass.to_json()}
    return "\n".join(str(p) for p in ass.sorted())


def cmd_depth(args):
    I = power(_read_ideal(args), args.power)
    value, route = depth(I, args.budget or DEFAULT_COST_BUDGET)
    if args.json:
        return {"t": args.power, "depth": value, "route": route}
    return str(value)


def _stability(args):
    I = _read_ideal(args)
    return stability_report(I, args.max_power, args.budget or DEFAULT_GENERATOR_BUDGET)


def cmd_astab(args):
    r = _stability(args)
    return r.to_json() if args.json else f"{r.astab}" + ("" if r.certified else f" ({r.label})")


def cmd_dstab(args):
    r = _stability(args)
    return r.to_json() if args.json else f"{r.dstab}" + ("" if r.certified else f" ({r.label})")


def cmd_gamma(args):
    g = linear_relation_graph(_read_ideal(args))
    if args.json:
        return g.to_json()
    return "\n".join([
        f"vertices: {list(g.vertices)}",
        f"edges: {[list(e) for e in g.edges]}",
        f"components: {[list(c) for c in g.components]}",
        f"r = {g.r}, s = {g.s}",
    ])


def cmd_decompose(args):
    I = _read_ideal(args)
    comps = irreducible_decomposition(I)
    ass = associated_primes(I)
    if args.json:
        return {"components": [c.to_json() for c in comps], "ass": ass.to_json()}
    return "\n".join(str(c.as_ideal(I.n)) for c in comps)


def cmd_localize(args):
    I = _read_ideal(args)
    bad = [v for v in args.prime if not 1 <= v <= I.n]
    if bad:
        raise ValueError(f"prime variables out of range 1..{I.n}: {bad}")
    L = localize(I, MonomialPrime(tuple(args.prime)))
    return ideal_to_json(L) if args.json else format_ideal(L).rstrip("\n")


def cmd_power(args):
    J = power(_read_ideal(args), args.power)
    return ideal_to_json(J) if args.json else format_ideal(J).rstrip("\n")


def cmd_veronese(args):
    caps = tuple(args.caps) if args.caps else (1,) * args.n
    J = veronese_type(VeroneseSpec(args.n, args.d, caps))
    return ideal_to_json(J) if args.json else format_ideal(J).rstrip("\n")


def cmd_asfv(args):
    omit = Monomial.from_support(args.omit, args.n) if args.omit else None
    J = almost_squarefree_veronese(args.n, args.d, omit)
    return ideal_to_json(J) if args.json else format_ideal(J).rstrip("\n")


def cmd_enumerate(args):
    ideals = enumerate_matroidal(
        args.n, args.d, args.mode, seed=args.seed, count=args.count, normalized=not args.all
    )
    if args.json:
        return {"seed": args.seed if args.mode == "random" else None,
                "ideals": [ideal_to_json(I) for I in ideals]}
    return "".join(format_ideal(I) for I in ideals).rstrip("\n")


def cmd_verify(args):
    config = SuiteConfig(
        max_power=args.max_power,
        seed=args.seed,
        only=tuple(args.only) if args.only else None,
        regressions_only=args.regressions,
        witness_dir=args.witness_dir,
    )
    results = run_suite(config)
    args.exit_status = suite_exit_status(results)
    return suite_json(results) if args.json else format_table(results)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--budget", type=int, default=None,
                        help="size budget (generators for astab/dstab, homology cost for depth)")
    common.add_argument("--seed", type=int, default=2026)
    common.add_argument("--max-power", type=int, default=DEFAULT_MAX_POWER)
    common.add_argument("-v", "--verbose", action="store_true")

    ideal_in = argparse.ArgumentParser(add_help=False)
    ideal_in.add_argument("input", nargs="?", help="ideal file (default: stdin)")

    power_flag = argparse.ArgumentParser(add_help=False)
    power_flag.add_argument("-t", "--power", type=int, default=1)

    parser = argparse.ArgumentParser(prog="polymat", description="Polymatroidal ideal toolkit")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, parents, help_text):
        p = sub.add_parser(name, parents=[common, *parents], help=help_text)
        p.set_defaults(func=fn)
        return p

    add("info", cmd_info, [ideal_in], "summary of an ideal")
    add("ass", cmd_ass, [ideal_in, power_flag], "associated primes of R/I^t")
    add("depth", cmd_depth, [ideal_in, power_flag], "depth of R/I^t")
    add("astab", cmd_astab, [ideal_in], "stability index of Ass(I^t)")
    add("dstab", cmd_dstab, [ideal_in], "stability index of depth R/I^t")
    add("gamma", cmd_gamma, [ideal_in], "linear relation graph")
    add("decompose", cmd_decompose, [ideal_in], "irreducible decomposition")
    p = add("localize", cmd_localize, [ideal_in], "monomial localization at a prime")
    p.add_argument("--prime", type=_int_list, required=True, help="variables of the prime, e.g. 2,3,4")
    add("power", cmd_power, [ideal_in, power_flag], "the power I^t")
    p = add("veronese", cmd_veronese, [], "Veronese-type ideal")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--caps", type=_int_list, default=None, help="ascending caps, default all 1")
    p = add("asfv", cmd_asfv, [], "almost square-free Veronese ideal")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--omit", type=_int_list, default=None, help="support of the omitted generator")
    p = add("enumerate", cmd_enumerate, [], "matroidal ideals")
    p.add_argument("n", type=int)
    p.add_argument("d", type=int)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--all", action="store_true", help="include ideals that are not full-supported or have gcd != 1")
    p = add("verify", cmd_verify, [], "run the theorem-check suite")
    p.add_argument("--only", nargs="+", default=None, metavar="ID")
    p.add_argument("--regressions", action="store_true", help="only the two fixed examples")
    p.add_argument("--witness-dir", default=None)
    return parser


def _emit(result, stream) -> None:
    text = json.dumps(result, indent=2) if isinstance(result, (dict, list)) else str(result)
    # written in one piece once the command has finished
    stream.write(text + "\n")
    stream.flush()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    args.exit_status = 0
    try:
        result = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (PolymatError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    _emit(result, sys.stdout)
    return args.exit_status


if __name__ == "__main__":
    sys.exit(main())
