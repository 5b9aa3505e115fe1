"""Command line entry points.

Three subcommands: ``homs`` enumerates a hom-set, ``verify`` runs named
check suites, ``render`` emits JSON or DOT for the catalogued objects.
All output is deterministic for a fixed configuration.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .config import Config
from .duality import VARIANTS, homs_for_variant, variant
from .homsets import CapExceededError, HomSet, clone_closure, preserves_partial_op, preserves_relation
from .render import RENDERABLES, dumps, homset_payload, homset_text
from .verify import SUITES, report_lines, reports_payload, run_suite


def _emit(text: str, out: Path | None, filename: str) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    out.mkdir(parents=True, exist_ok=True)
    target = out / filename
    target.write_text(text, encoding="utf-8")
    print(target)


def _homs(n: int, variant_name: str, config: Config) -> tuple[HomSet, str]:
    """Search directly when the carrier fits the cap, otherwise take the
    term clone and keep the tables preserving the variant's structure."""
    variant(variant_name)
    if 3 ** n <= config.carrier_cap:
        return homs_for_variant(n, variant_name, carrier_cap=config.carrier_cap), "search"
    clone = clone_closure(n, arity_cap=config.clone_arity_cap)
    var = VARIANTS[variant_name]
    space = var.power_space(n)
    kept = tuple(
        m
        for m in clone.maps
        if all(preserves_relation(m, rel, space) for rel in var.relations)
        and all(
            preserves_partial_op(m, op, space)
            for op in var.partial_ops + var.total_ops
        )
    )
    return HomSet(space, kept), "clone-filter"


def cmd_homs(args: argparse.Namespace, config: Config) -> int:
    homset, method = _homs(args.n, args.variant, config)
    if args.format == "json":
        text = dumps(homset_payload(homset, args.variant, method))
        ext = "json"
    else:
        text = homset_text(homset, args.variant, method)
        ext = "txt"
    _emit(text, args.out, f"homs_n{args.n}_{args.variant}.{ext}")
    return 0


def cmd_verify(args: argparse.Namespace, config: Config) -> int:
    reports = run_suite(args.suite, args.n)
    if args.format == "json":
        text = dumps(reports_payload(reports))
        ext = "json"
    else:
        text = "\n".join(report_lines(reports)) + "\n"
        ext = "txt"
    _emit(text, args.out, f"verify_{args.suite}.{ext}")
    return 0 if all(r.passed for r in reports) else 1


def cmd_render(args: argparse.Namespace, config: Config) -> int:
    payload_fn, dot_fn, needs_n = RENDERABLES[args.target]
    stem = args.target.replace("-", "_")
    if needs_n:
        payload_args = (args.n,)
        stem = f"{stem}_n{args.n}"
    else:
        payload_args = ()
    if args.format == "dot":
        text = dot_fn(*payload_args)
        ext = "dot"
    else:
        text = dumps(payload_fn(*payload_args))
        ext = "json"
    _emit(text, args.out, f"{stem}.{ext}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hairycube",
        description="Enumerate, verify and render the finite duality objects.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    homs = sub.add_parser("homs", help="enumerate morphisms of a power of S")
    homs.add_argument("--n", type=int, default=1, help="power of S (default 1)")
    homs.add_argument(
        "--variant",
        choices=sorted(VARIANTS),
        default="relational",
        help="structure on S (default relational)",
    )
    homs.add_argument("--format", choices=("json", "text"), default="text")
    homs.add_argument("--out", type=Path, default=None, help="directory to write into")
    homs.set_defaults(fn=cmd_homs)

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument(
        "suite", choices=sorted(SUITES) + ["all"], help="suite name or 'all'"
    )
    verify.add_argument(
        "--n", type=int, default=None, help="cap the power where a suite scales"
    )
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--out", type=Path, default=None)
    verify.set_defaults(fn=cmd_verify)

    render = sub.add_parser("render", help="emit JSON or DOT for an object")
    render.add_argument("target", choices=sorted(RENDERABLES))
    render.add_argument("--n", type=int, default=2)
    render.add_argument("--format", choices=("json", "dot"), default="json")
    render.add_argument("--out", type=Path, default=None)
    render.set_defaults(fn=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = Config.from_env()
        return args.fn(args, config)
    except CapExceededError as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
