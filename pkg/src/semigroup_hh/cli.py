"""Command-line front end.

The CLI is a thin client of the HTTP service: by default it mounts the
FastAPI app in-process (no sockets) through httpx's ASGI transport; --server
points it at a running instance instead.  Exit codes: 0 success, 1 a
verification check failed, 2 invalid configuration.
"""

import argparse
import asyncio
import json
import sys

import httpx

from .service import app


def build_parser():
    p = argparse.ArgumentParser(
        prog="semigroup-hh",
        description="Exact Hochschild cohomology of k[s^a, s^b] "
                    "for coprime a, b >= 2.")
    p.add_argument("--server", metavar="URL",
                   help="base URL of a running service "
                        "(default: run in-process)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp_, window=True):
        sp_.add_argument("--a", type=int, required=True)
        sp_.add_argument("--b", type=int, required=True)
        sp_.add_argument("--char", type=int, default=0)
        if window:
            sp_.add_argument("--max-degree", type=int, default=6)
            sp_.add_argument("--weight-min", type=int, default=None)
            sp_.add_argument("--weight-max", type=int, default=None)
        sp_.add_argument("--format", choices=("json", "text"), default="json")

    common(sub.add_parser("dim", help="dimension table over the window"))
    common(sub.add_parser("basis", help="standard basis labels per (m, n)"))
    cup = sub.add_parser("cup", help="product of two standard classes")
    common(cup, window=False)
    cup.add_argument("--left", required=True,
                     help="class label, e.g. t:q=1:alpha=0")
    cup.add_argument("--right", required=True)
    common(sub.add_parser("present",
                          help="generators, relations and monomial basis"))
    hil = sub.add_parser("hilbert", help="bigraded Hilbert series")
    common(hil)
    hil.add_argument("--variant", choices=("minus-a", "minus-b", "both"),
                     default="both")
    common(sub.add_parser("verify", help="full property suite"))
    return p


def request_body(args):
    body = {"a": args.a, "b": args.b, "char": args.char}
    if hasattr(args, "max_degree"):
        body["max_degree"] = args.max_degree
        if args.weight_min is not None:
            body["weight_min"] = args.weight_min
        if args.weight_max is not None:
            body["weight_max"] = args.weight_max
    if args.command == "cup":
        body["left"] = args.left
        body["right"] = args.right
    if args.command == "hilbert":
        body["variant"] = args.variant
    return body


def render_text(report):
    lines = [f"case: {report['case']}  params: {json.dumps(report['params'], sort_keys=True)}"]
    results = report["results"]
    if isinstance(results, list):
        for entry in results:
            lines.append("  " + json.dumps(entry, sort_keys=True))
    elif results:
        for key, value in sorted(results.items()):
            lines.append(f"  {key}: {json.dumps(value, sort_keys=True)}")
    for name, check in sorted(report["checks"].items()):
        if isinstance(check, dict) and "ok" in check:
            lines.append(f"check {name}: {'ok' if check['ok'] else 'FAILED'}")
        else:
            lines.append(f"check {name}: {json.dumps(check, sort_keys=True)}")
    return "\n".join(lines)


async def _post_in_process(path, body):
    transport = httpx.ASGITransport(app=app)
    async with httpx.AsyncClient(transport=transport,
                                 base_url="http://semigroup-hh",
                                 timeout=600.0) as client:
        return await client.post(path, json=body)


def main(argv=None):
    args = build_parser().parse_args(argv)
    path = "/" + args.command
    body = request_body(args)
    if args.server:
        with httpx.Client(base_url=args.server, timeout=600.0) as client:
            resp = client.post(path, json=body)
    else:
        resp = asyncio.run(_post_in_process(path, body))
    if resp.status_code in (400, 422):
        detail = resp.json().get("detail", resp.text)
        print(f"invalid configuration: {detail}", file=sys.stderr)
        return 2
    resp.raise_for_status()
    report = resp.json()
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(render_text(report))
    checks = report.get("checks", {})
    ok = checks.get("ok", all(
        v.get("ok", True) for v in checks.values() if isinstance(v, dict)))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
