"""Command-line client for the domination game laboratory.

Every subcommand is a thin wrapper over the HTTP service. By default an
in-process instance of the app answers the requests, so no server needs
to run; --server points the same client at a remote instance instead.

Exit codes: 0 success, 1 verification failure or transport error,
2 usage or input format problems, 3 a resource guard tripped.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from pathlib import Path

import httpx

from .census import read_manifest, write_manifest

PARAM_FLAGS = ("r", "s", "t", "m", "n", "k")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

_KIND_EXIT = {"format": EXIT_USAGE, "contract": EXIT_USAGE, "guard": EXIT_GUARD}


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


class _InProcessTransport(httpx.BaseTransport):
    """Synchronous bridge onto the ASGI app; no socket involved."""

    def __init__(self):
        from .service import app

        self._asgi = httpx.ASGITransport(app=app)

    def handle_request(self, request: httpx.Request) -> httpx.Response:
        return asyncio.run(self._round_trip(request))

    async def _round_trip(self, request: httpx.Request) -> httpx.Response:
        headers = [
            (k, v) for k, v in request.headers.raw if k.lower() != b"content-length"
        ]
        inner = httpx.Request(
            request.method, request.url, headers=headers, content=request.read()
        )
        response = await self._asgi.handle_async_request(inner)
        content = await response.aread()
        await response.aclose()
        return httpx.Response(
            response.status_code, headers=response.headers, content=content
        )


def _make_client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server, timeout=None)
    return httpx.Client(
        transport=_InProcessTransport(), base_url="http://domgame", timeout=None
    )


def _read_graph_arg(value: str) -> str:
    if value.startswith("g6:"):
        return value
    path = Path(value)
    if not path.is_file():
        raise CliError(f"graph file not found: {value}")
    return path.read_text()


def _parse_vertices(value: str) -> list[int]:
    if not value:
        return []
    try:
        return [int(part) for part in value.split(",") if part.strip() != ""]
    except ValueError:
        raise CliError(f"--dominated expects comma-separated integers, got {value!r}")


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _error_exit(resp: httpx.Response) -> int:
    if resp.status_code == 422:
        print(f"usage error: {resp.text}", file=sys.stderr)
        return EXIT_USAGE
    try:
        err = resp.json().get("error", {})
    except ValueError:
        err = {}
    kind = err.get("kind", "error")
    message = err.get("message", resp.text)
    print(f"error ({kind}): {message}", file=sys.stderr)
    return _KIND_EXIT.get(kind, EXIT_FAIL)


def _family_params(args: argparse.Namespace) -> dict[str, int]:
    return {
        flag: getattr(args, flag)
        for flag in PARAM_FLAGS
        if getattr(args, flag, None) is not None
    }


# --------------------------------------------------------------------------
# subcommand handlers


def _cmd_solve(args, client: httpx.Client) -> int:
    payload = {
        "graph": _read_graph_arg(args.graph),
        "variant": args.variant,
        "dominated": _parse_vertices(args.dominated),
        "exact_front": args.exact_front,
        "line": args.line,
    }
    resp = client.post("/solve", json=payload)
    if resp.status_code != 200:
        return _error_exit(resp)
    _emit(json.dumps(resp.json(), indent=2), args.output)
    return EXIT_OK


def _cmd_family(args, client: httpx.Client) -> int:
    fmt = args.format
    emit = args.emit
    if fmt == "graph6":
        emit = "g6"
    elif fmt == "edges":
        emit = "edges"
    elif fmt == "csv":
        raise CliError("family output has no csv form")
    payload = {
        "name": args.name,
        "params": _family_params(args),
        "emit": emit,
        "which": args.which,
    }
    resp = client.post("/family", json=payload)
    if resp.status_code != 200:
        return _error_exit(resp)
    body = resp.json()
    if fmt == "json":
        _emit(json.dumps(body, indent=2), args.output)
        return EXIT_OK
    lines = [body["graph"].rstrip("\n")]
    for name, vertex in sorted(body["labels"].items(), key=lambda kv: (kv[1], kv[0])):
        lines.append(f"# {name}={vertex}")
    if body.get("dominated"):
        lines.append("# dominated=" + ",".join(map(str, body["dominated"])))
    _emit("\n".join(lines), args.output)
    return EXIT_OK


def _census_csv(orders: list[dict]) -> str:
    rows = ["n,gg,ggp,count,witnesses"]
    for order in orders:
        for rec in order["records"]:
            witnesses = ";".join(rec["witnesses"])
            rows.append(f'{rec["n"]},{rec["gg"]},{rec["ggp"]},{rec["count"]},{witnesses}')
    return "\n".join(rows)


def _cmd_census(args, client: httpx.Client) -> int:
    if args.resume and not args.out:
        raise CliError("--resume needs --out FILE to resume into")
    if args.out and args.format == "csv":
        raise CliError("--out files are always JSONL; csv is stdout-only")
    orders = list(range(1, args.max_n + 1))
    done: set[int] = set()
    if args.out:
        out = Path(args.out)
        if args.resume:
            done = read_manifest(out) & set(orders)
        else:
            out.write_text("")
            write_manifest(out, set())
    missing = [n for n in orders if n not in done]
    collected: list[dict] = []
    for n in missing:
        resp = client.post(
            "/census",
            json={"orders": [n], "workers": args.jobs, "allow_large": args.allow_large},
        )
        if resp.status_code != 200:
            return _error_exit(resp)
        order = resp.json()["orders"][0]
        if args.out:
            with open(args.out, "a", encoding="ascii") as fh:
                for line in order["lines"]:
                    fh.write(line + "\n")
            done.add(n)
            write_manifest(args.out, done)
            print(
                f"n={n}: {order['trees']} trees, {len(order['records'])} value pairs",
                file=sys.stderr,
            )
        else:
            collected.append(order)
    if not args.out:
        if args.format == "csv":
            _emit(_census_csv(collected), args.output)
        else:
            lines = [line for order in collected for line in order["lines"]]
            _emit("\n".join(lines) if lines else "", args.output)
    return EXIT_OK


def _cmd_spanning(args, client: httpx.Client) -> int:
    if (args.graph is None) == (args.pair_family is None):
        raise CliError("provide exactly one of --graph or --pair-family")
    payload: dict = {"cap": args.cap}
    if args.graph is not None:
        payload["graph"] = _read_graph_arg(args.graph)
    else:
        payload["pair_family"] = args.pair_family
        payload["params"] = _family_params(args)
    resp = client.post("/spanning", json=payload)
    if resp.status_code != 200:
        return _error_exit(resp)
    _emit(json.dumps(resp.json(), indent=2), args.output)
    return EXIT_OK


def _cmd_verify(args, client: httpx.Client) -> int:
    suites = [part.strip() for part in args.suite.split(",") if part.strip()]
    payload = {
        "suites": suites or ["all"],
        "n_max": args.n_max,
        "seed": args.seed,
        "samples": args.samples,
        "jobs": args.jobs,
    }
    resp = client.post("/verify", json=payload)
    if resp.status_code != 200:
        return _error_exit(resp)
    body = resp.json()
    if args.format == "json":
        _emit(json.dumps(body, indent=2), args.output)
    else:
        lines = []
        for clause in body["clauses"]:
            head = "PASS" if clause["passed"] else "FAIL"
            text = f"{head} {clause['suite']}: {clause['checked']} checks"
            if clause["note"]:
                text += f" ({clause['note']})"
            lines.append(text)
            lines.extend(f"  {failure}" for failure in clause["failures"])
        _emit("\n".join(lines), args.output)
    return EXIT_OK if body["all_passed"] else EXIT_FAIL


def _cmd_serve(args, client=None) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


# --------------------------------------------------------------------------
# parser


def _add_param_flags(sub: argparse.ArgumentParser) -> None:
    for flag in PARAM_FLAGS:
        sub.add_argument(f"--{flag}", type=int, help=f"family parameter {flag}")


def _common_flags(parser: argparse.ArgumentParser, *, suppress: bool) -> None:
    # the same flags are valid before and after the subcommand; the
    # subparser copies must not clobber values parsed by the root
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument(
        "--server",
        metavar="URL",
        default=default,
        help="send requests to a running service instead of answering in-process",
    )
    parser.add_argument(
        "--output",
        metavar="FILE",
        default=default,
        help="write output to FILE instead of stdout",
    )
    parser.add_argument(
        "--format",
        choices=["json", "csv", "graph6", "edges"],
        default=default,
        help="presentation override where a subcommand supports it",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domgame",
        description="Exact domination game solver, graph families, and verification suites.",
    )
    _common_flags(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _common_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="game value of a (partially dominated) graph", parents=[common])
    p.add_argument("--graph", required=True, metavar="FILE|g6:STRING")
    p.add_argument("--variant", choices=["dominator", "staller"], default="dominator")
    p.add_argument("--dominated", default="", metavar="v1,v2,...")
    p.add_argument("--exact-front", action="store_true", help="score every legal first move")
    p.add_argument("--line", action="store_true", help="include one optimal line of play")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("family", parents=[common], help="emit a named graph family member")
    p.add_argument("name")
    _add_param_flags(p)
    p.add_argument("--emit", choices=["g6", "edges"], default="edges")
    p.add_argument("--which", choices=["G", "H"], default="G")
    p.set_defaults(func=_cmd_family)

    p = sub.add_parser("census", parents=[common], help="gamma_g pair census over all trees per order")
    p.add_argument("--max-n", type=int, required=True, metavar="N")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", metavar="FILE", help="JSONL destination with a resume manifest")
    p.add_argument("--resume", action="store_true")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("spanning", parents=[common], help="spanning tree extremes and pair comparisons")
    p.add_argument("--graph", metavar="FILE|g6:STRING")
    p.add_argument("--pair-family", metavar="NAME")
    _add_param_flags(p)
    p.add_argument("--cap", type=int, default=100_000)
    p.set_defaults(func=_cmd_spanning)

    p = sub.add_parser("verify", parents=[common], help="run property suites; exit 0 iff all pass")
    p.add_argument("--suite", default="all", metavar="s1,s2,...")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "serve":
        return _cmd_serve(args)
    client = _make_client(args.server)
    try:
        return args.func(args, client)
    except CliError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return exc.code
    except httpx.HTTPError as exc:
        print(f"transport error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        client.close()


if __name__ == "__main__":
    sys.exit(main())
