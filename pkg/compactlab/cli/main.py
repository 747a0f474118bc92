"""
compactlab Command Line

Each verb parses its inputs, runs one computation and prints the payload in the chosen
format on stdout. Logging goes to stderr so stdout is identical across runs for identical
inputs and seed.

Exit codes: 0 success, 1 a check failed (or two computations disagreed), 2 usage or parse
error, 3 a size cap was exceeded.
"""

import argparse
import json
import logging
import sys
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from typing import Any

from compactlab.boolring.upset import parse_upset
from compactlab.cli.emit import FORMATS, emit
from compactlab.cli.payloads import (
    beta_payload,
    compactification_payload,
    localization_payload,
    probe_payload,
    ring_spec_payload,
    ring_topology_payload,
    space_check_payload,
    stone_spec_payload,
    ultra_payload,
)
from compactlab.cli.suites import SUITES, SuiteContext, resolve_suites, run_suites
from compactlab.config import settings
from compactlab.errors import CapacityError, ConsistencyError, ParseError
from compactlab.rings.base import FiniteRing
from compactlab.rings.constructions import localize
from compactlab.rings.description import load_ring
from compactlab.rings.ideals import MultSet
from compactlab.rings.product import ProductRing
from compactlab.spectrum.enumeration import SiteKind, site
from compactlab.stone.compactification import alexandroff, compactify
from compactlab.stone.finite import spec_finite_boolean
from compactlab.topspace.beta import beta
from compactlab.topspace.space import load_space
from compactlab.ultra.ideals import PrincipalMax, UltraKind, ultraproduct

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

DEFAULT_COMPACTIFICATION_POINTS = 8

Payload = dict[str, Any]
Command = Callable[[argparse.Namespace], tuple[Payload, bool]]


def parse_element(ring: FiniteRing, text: str) -> int:
    """
    An element given as its component list ``[1, 0]`` (product rings) or its index ``3``.

    Raises:
        ParseError: Malformed text or an element outside the ring
    """
    try:
        value = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"Unrecognized element {text!r}", field="mult") from e
    if isinstance(ring, ProductRing) and isinstance(value, list):
        try:
            return ring.encode([int(v) for v in value])
        except (TypeError, ValueError) as e:
            raise ParseError(str(e), field="mult") from e
    if isinstance(value, int) and not isinstance(value, bool) and 0 <= value < ring.order:
        return value
    raise ParseError(f"Element {text!r} is not in a ring of order {ring.order}", field="mult")


@contextmanager
def overridden(**caps: int | None) -> Iterator[None]:
    """Temporarily replace settings constants; None leaves a setting alone."""
    saved = {name: getattr(settings, name) for name in caps}
    try:
        for name, value in caps.items():
            if value is not None:
                setattr(settings, name, value)
        yield
    finally:
        for name, value in saved.items():
            setattr(settings, name, value)


# Verbs


def cmd_ring_spec(args: argparse.Namespace) -> tuple[Payload, bool]:
    ring = load_ring(args.file)
    return ring_spec_payload(ring, site(ring, args.site)), True


def cmd_ring_topology(args: argparse.Namespace) -> tuple[Payload, bool]:
    ring = load_ring(args.file)
    return ring_topology_payload(ring, site(ring, args.site)), True


def cmd_ring_localize(args: argparse.Namespace) -> tuple[Payload, bool]:
    ring = load_ring(args.file)
    generators = [parse_element(ring, text) for text in args.mult or []]
    localization = localize(ring, MultSet.generated(ring, generators))
    return localization_payload(ring, localization), True


def cmd_ultra(args: argparse.Namespace) -> tuple[Payload, bool]:
    ring = load_ring(args.ring)
    if not isinstance(ring, ProductRing):
        raise ValueError("ultra needs a product ring description")
    point = PrincipalMax(len(ring.labels), ring.label_index(args.at))
    return ultra_payload(args.at, ultraproduct(point, ring, args.kind)), True


def cmd_stone_spec(args: argparse.Namespace) -> tuple[Payload, bool]:
    return stone_spec_payload(spec_finite_boolean(args.size)), True


def cmd_compactify(args: argparse.Namespace) -> tuple[Payload, bool]:
    compactification = compactify(parse_upset(text) for text in args.gen or [])
    return compactification_payload(compactification, args.points), True


def cmd_alexandroff(args: argparse.Namespace) -> tuple[Payload, bool]:
    alpha = alexandroff()
    payload = compactification_payload(alpha, args.points)
    payload["probes"] = [probe_payload(alpha, parse_upset(text)) for text in args.probe or []]
    return payload, True


def cmd_space_beta(args: argparse.Namespace) -> tuple[Payload, bool]:
    space = load_space(args.file)
    return beta_payload(space, beta(space)), True


def cmd_space_check(args: argparse.Namespace) -> tuple[Payload, bool]:
    payload = space_check_payload(load_space(args.file))
    return payload, bool(payload["pi0_spec"])


def cmd_verify(args: argparse.Namespace) -> tuple[Payload, bool]:
    ctx = SuiteContext(
        max_ring=args.max_ring or settings.ENUMERATION_RING_CAP,
        max_space=args.max_space or settings.SPACE_POINT_CAP,
        seed=args.seed,
        augment=args.augment,
    )
    with overridden(ENUMERATION_RING_CAP=args.max_ring, SPACE_POINT_CAP=args.max_space):
        report = run_suites(
            resolve_suites(args.suite), ctx, parallel=not args.sequential, timings=args.timings
        )
    return report.to_dict(), report.passed


COMMANDS: dict[str, Command] = {
    "ring-spec": cmd_ring_spec,
    "ring-topology": cmd_ring_topology,
    "ring-localize": cmd_ring_localize,
    "ultra": cmd_ultra,
    "stone-spec": cmd_stone_spec,
    "compactify": cmd_compactify,
    "alexandroff": cmd_alexandroff,
    "space-beta": cmd_space_beta,
    "space-check": cmd_space_check,
    "verify": cmd_verify,
}


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"Expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"Expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-ring",
        type=_positive,
        default=None,
        help="Largest corpus ring (verify) or largest ring built (other verbs)",
    )
    common.add_argument("--max-space", type=_positive, default=None, help="Largest finite space")
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED, help="Sampling seed")
    common.add_argument("--format", choices=FORMATS, default="json", help="Output format")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="compactlab",
        description="Exact finite commutative algebra, Stone duality and compactifications",
        allow_abbrev=False,
    )
    verbs = parser.add_subparsers(dest="command", required=True, metavar="VERB")

    def verb(name: str, help_text: str) -> argparse.ArgumentParser:
        return verbs.add_parser(name, parents=[common], help=help_text, allow_abbrev=False)

    ring_spec = verb("ring-spec", "Points of Spec, Min or Max of a ring")
    ring_spec.add_argument("--file", required=True, help="Ring description file")
    ring_spec.add_argument("--site", choices=[str(k) for k in SiteKind], default="spec")

    ring_topology = verb("ring-topology", "Zariski and flat topologies on Min or Max")
    ring_topology.add_argument("--file", required=True, help="Ring description file")
    ring_topology.add_argument("--site", choices=["min", "max"], default="max")

    ring_localize = verb("ring-localize", "Localization at a generated multiplicative set")
    ring_localize.add_argument("--file", required=True, help="Ring description file")
    ring_localize.add_argument(
        "--mult", action="append", help="Generator of S, e.g. 3 or [1,0] (repeatable)"
    )

    ultra = verb("ultra", "Quotient of a product ring by M* or M-flat")
    ultra.add_argument("--ring", required=True, help="Product ring description file")
    ultra.add_argument("--at", required=True, help="Label x of the principal ideal m_x")
    ultra.add_argument("--kind", choices=[str(k) for k in UltraKind], default="star")

    stone_spec = verb("stone-spec", "Spec of the power set ring of a finite set")
    stone_spec.add_argument("--size", type=_positive, required=True, help="|X|")

    compactify_verb = verb("compactify", "Spec of the ring generated by Fin(N) and sets")
    compactify_verb.add_argument(
        "--gen", action="append", help='Generator, e.g. "{n mod 3 = 1}" (repeatable)'
    )
    compactify_verb.add_argument(
        "--points", type=int, default=DEFAULT_COMPACTIFICATION_POINTS, help="Naturals listed"
    )

    alexandroff_verb = verb("alexandroff", "One-point compactification of N")
    alexandroff_verb.add_argument(
        "--probe", action="append", help='Set to locate, e.g. "{n>=3}" (repeatable)'
    )
    alexandroff_verb.add_argument(
        "--points", type=int, default=DEFAULT_COMPACTIFICATION_POINTS, help="Naturals listed"
    )

    space_beta = verb("space-beta", "Stone-Cech compactification of a finite space")
    space_beta.add_argument("--file", required=True, help="Space description file")

    space_check = verb("space-check", "Convergence and clopen checks on a finite space")
    space_check.add_argument("--file", required=True, help="Space description file")

    verify = verb("verify", "Run verification suites")
    verify.add_argument("--suite", choices=["all", *sorted(SUITES)], default="all")
    verify.add_argument("--augment", type=int, default=0, help="Random table relabelings")
    verify.add_argument("--timings", action="store_true", help="Report seconds per suite")
    verify.add_argument("--sequential", action="store_true", help="Run suites one by one")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    if not settings.validate_config():
        print("error: invalid configuration", file=sys.stderr)
        return EXIT_USAGE

    arithmetic_cap = None if args.command == "verify" else args.max_ring
    try:
        with overridden(PRODUCT_RING_CAP=arithmetic_cap):
            payload, passed = COMMANDS[args.command](args)
            text = emit(args.format, payload)
    except CapacityError as e:
        logger.error(f"Capacity exceeded: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAPACITY
    except ConsistencyError as e:
        logger.error(f"Inconsistent results: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (ParseError, ValueError, TypeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    print(text)
    return EXIT_OK if passed else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
