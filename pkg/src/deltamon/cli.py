"""Command-line interface: a thin client over the HTTP service.

Each verb builds a request, sends it to the service (in-process by default,
over the wire with --server), and prints the JSON response canonically:
sorted keys, two-space indent, trailing newline. Identical inputs produce
byte-identical output. Errors print the service's error JSON to stderr and
exit with 1 (usage or parse), 2 (cap exceeded), or 3 (precondition).
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys

from .errors import DeltamonError, ParseError
from .text import parse_ideal_file, render_monomial

EXIT_CODES = {"usage": 1, "parse": 1, "cap_exceeded": 2, "precondition": 3}


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures on exit code 1 instead of 2."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _canonical(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _emit(status: int, payload: dict) -> int:
    if status == 200:
        sys.stdout.write(_canonical(payload))
        return 0
    sys.stderr.write(_canonical(payload))
    code = payload.get("error", {}).get("code", "usage")
    return EXIT_CODES.get(code, 1)


def _post(path: str, payload: dict, server: str | None) -> tuple[int, dict]:
    import httpx

    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            resp = client.post(path, json=payload)
            return resp.status_code, resp.json()

    from .service import create_app

    async def call():
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://service", timeout=600.0
        ) as client:
            resp = await client.post(path, json=payload)
            return resp.status_code, resp.json()

    return asyncio.run(call())


def _ideal_payload(path: str) -> dict:
    """Parse an ideal file locally (positioned errors) and send it canonically."""
    ideal = parse_ideal_file(path)
    gens = [render_monomial(u) for u in ideal.gens]
    if ideal.is_unit:
        gens = ["1"]
    return {
        "kind": ideal.kind.value,
        "arity": ideal.arity,
        "generators": gens,
    }


def _parse_point(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise ParseError(f"bad point {text!r}; expected comma-separated integers")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="deltamon",
        description="Monomial difference ideals: membership, closures, "
        "decompositions, duality, and oracle verification.",
    )
    parser.add_argument(
        "--server",
        metavar="URL",
        default=None,
        help="base URL of a running service (default: run in-process)",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--server",
        metavar="URL",
        default=argparse.SUPPRESS,
        help="base URL of a running service (default: run in-process)",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser(
        "member",
        parents=[common],
        help="membership of monomials (a polynomial's support)",
    )
    p.add_argument("file", help="ideal file")
    p.add_argument("monomials", nargs="+", help="monomials such as y1^{x+1}*y2")

    p = sub.add_parser(
        "closure", parents=[common], help="present the closure of the ideal under a kind"
    )
    p.add_argument("file", help="ideal file")
    p.add_argument("--kind", required=True, help="target closure kind")

    p = sub.add_parser("reduce", parents=[common], help="minimal generating presentation")
    p.add_argument("file", help="ideal file")

    p = sub.add_parser(
        "decompose", parents=[common], help="prime decomposition (rwm or perfect kind)"
    )
    p.add_argument("file", help="ideal file")

    p = sub.add_parser(
        "dual", parents=[common], help="Alexander dual (radical_well_mixed kind)"
    )
    p.add_argument("file", help="ideal file")
    p.add_argument("--point", default=None, help='duality point, e.g. "1,0,-1"')

    p = sub.add_parser(
        "check", parents=[common], help="closedness under a predicate, or primality"
    )
    p.add_argument("file", help="ideal file")
    p.add_argument(
        "--predicate",
        required=True,
        choices=["radical", "reflexive", "perfect", "rwm", "prime"],
    )
    p.add_argument("--degree-cap", type=int, default=None)
    p.add_argument("--coeff-cap", type=int, default=None)

    p = sub.add_parser("verify", parents=[common], help="fast-vs-oracle grid report")
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--max-degree", type=int, default=2)
    p.add_argument("--max-coeff-sum", type=int, default=2)
    p.add_argument("--sets", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8321)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.verb == "serve":
        import uvicorn

        from .service import create_app

        uvicorn.run(create_app(), host=args.host, port=args.port, log_level="info")
        return 0

    try:
        if args.verb == "member":
            payload = {"ideal": _ideal_payload(args.file), "monomials": args.monomials}
        elif args.verb == "closure":
            payload = {"ideal": _ideal_payload(args.file), "kind": args.kind}
        elif args.verb in ("reduce", "decompose"):
            payload = {"ideal": _ideal_payload(args.file)}
        elif args.verb == "dual":
            payload = {"ideal": _ideal_payload(args.file)}
            if args.point is not None:
                payload["point"] = _parse_point(args.point)
        elif args.verb == "check":
            payload = {"ideal": _ideal_payload(args.file), "predicate": args.predicate}
            if args.degree_cap is not None:
                payload["degree_cap"] = args.degree_cap
            if args.coeff_cap is not None:
                payload["coeff_cap"] = args.coeff_cap
        else:
            payload = {
                "arity": args.arity,
                "max_degree": args.max_degree,
                "max_coeff_sum": args.max_coeff_sum,
                "sets": args.sets,
                "seed": args.seed,
                "jobs": args.jobs,
            }
    except OSError as exc:
        sys.stderr.write(
            _canonical(
                {"schema": 1, "error": {"code": "usage", "message": str(exc)}}
            )
        )
        return 1
    except DeltamonError as exc:
        sys.stderr.write(
            _canonical(
                {"schema": 1, "error": {"code": exc.code, "message": str(exc)}}
            )
        )
        return EXIT_CODES.get(exc.code, 1)

    status, body = _post(f"/v1/{args.verb}", payload, args.server)
    return _emit(status, body)


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
