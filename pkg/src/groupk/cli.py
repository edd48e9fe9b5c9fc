"""Command-line front end: group/field spec parsing, ASCII E^2 charts, JSON."""

from __future__ import annotations

import argparse
import functools
import json
import os
import re
import sys
from dataclasses import dataclass

from . import __version__
from .abelian import FgAbelianGroup
from .assembly import NOT_INJECTIVE, E2Page, certify_noninjectivity, e2_page
from .errors import GroupKError, ParseError
from .groups import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    cyclic,
    dihedral,
    direct_product,
    group_from_file,
    permutation_closure,
    symmetric,
)
from .homology import DEFAULT_GENERATOR_LIMIT, integral_homology
from .kfield import k_finite_field, validate_prime_power
from .grouprings import wedderburn_summary

_ATOM_RE = re.compile(r"^([CDS])([0-9]+)$")
_CYCLE_RE = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True)
class GroupSpec:
    """A parsed textual group description; build() constructs the group."""

    text: str
    _builder: object

    def build(self, order_cap: int = DEFAULT_ORDER_CAP) -> FiniteGroup:
        return self._builder(order_cap)


def _parse_atom(atom: str, pos: int):
    m = _ATOM_RE.match(atom)
    if not m:
        raise ParseError(
            f"cannot parse group atom {atom!r}",
            position=pos,
            expected=["C<n>", "D<n>", "S<n>", "perm:<cycles>", "table:<path>"],
        )
    kind, n = m.group(1), int(m.group(2))
    if n < 1:
        raise ParseError(f"{kind}{n}: parameter must be >= 1", position=pos)
    if kind == "S" and n > 5:
        raise ParseError("S<n> is supported for n <= 5", position=pos)
    if kind == "C":
        return lambda cap: cyclic(n, order_cap=cap)
    if kind == "D":
        return lambda cap: dihedral(n, order_cap=cap)
    return lambda cap: symmetric(n, order_cap=cap)


def _parse_permutations(body: str, offset: int):
    gens_text = body.split(";")
    perms = []
    points: set[int] = set()
    pos = offset
    for gtext in gens_text:
        cycles = []
        consumed = _CYCLE_RE.sub("", gtext).strip()
        if consumed:
            raise ParseError(
                f"unexpected text {consumed!r} in permutation", position=pos
            )
        for m in _CYCLE_RE.finditer(gtext):
            toks = [t for t in re.split(r"[,\s]+", m.group(1).strip()) if t]
            try:
                cyc = [int(t) for t in toks]
            except ValueError:
                raise ParseError(
                    f"non-integer point in cycle {m.group(0)!r}",
                    position=pos + m.start(),
                ) from None
            if len(set(cyc)) != len(cyc):
                raise ParseError(
                    f"repeated point in cycle {m.group(0)!r}", position=pos + m.start()
                )
            cycles.append(cyc)
            points.update(cyc)
        perms.append(cycles)
        pos += len(gtext) + 1
    if not points:
        raise ParseError("no cycles found after perm:", position=offset)
    domain = sorted(points)
    index = {pt: k for k, pt in enumerate(domain)}
    gens = []
    for cycles in perms:
        perm = list(range(len(domain)))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                perm[index[a]] = index[b]
        gens.append(tuple(perm))
    return lambda cap: permutation_closure(gens, order_cap=cap)


def parse_group_spec(text: str) -> GroupSpec:
    """Parse "C2xC2", "D4", "S3", "perm:(1 2 3);(1 2)" or "table:<path>"."""
    if not text:
        raise ParseError("empty group spec", position=0)
    if text.startswith("perm:"):
        builder = _parse_permutations(text[len("perm:"):], len("perm:"))
        return GroupSpec(text, builder)
    if text.startswith("table:"):
        path = text[len("table:"):]
        if not path:
            raise ParseError("missing path after table:", position=len("table:"))
        return GroupSpec(text, lambda cap: group_from_file(path, order_cap=cap))
    builders = []
    pos = 0
    for atom in text.split("x"):
        builders.append(_parse_atom(atom, pos))
        pos += len(atom) + 1
    def build(cap):
        G = builders[0](cap)
        for b in builders[1:]:
            G = direct_product(G, b(cap), order_cap=cap)
        return G
    return GroupSpec(text, build)


def _chart_token(g: FgAbelianGroup) -> str:
    return str(g).replace(" ", "")


def render_e2_ascii(page: E2Page) -> str:
    """ASCII chart in the usual orientation: p rightward, q upward.

    Cells outside the computed triangle print "0" on even rows q >= 2 (the
    coefficient K-group vanishes there) and "*" on odd rows (not computed).
    """
    N = page.max_total_degree
    cells = {}
    for qdeg in range(N + 1):
        for p in range(N + 1):
            if p + qdeg <= N:
                cells[(p, qdeg)] = _chart_token(page.entry(p, qdeg))
            elif qdeg % 2 == 0 and qdeg > 0:
                cells[(p, qdeg)] = "0"
            else:
                cells[(p, qdeg)] = "*"
    width = max(max(len(v) for v in cells.values()), 2)
    lines = ["  q"]
    for qdeg in range(N, -1, -1):
        row = "  ".join(cells[(p, qdeg)].ljust(width) for p in range(N + 1))
        lines.append(f"{qdeg:>3} | {row.rstrip()}")
    lines.append("    +" + "-" * ((width + 2) * (N + 1)))
    lines.append(
        "      " + "  ".join(str(p).ljust(width) for p in range(N + 1)).rstrip() + "   p"
    )
    return "\n".join(lines) + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="groupk", description=__doc__)
    parser.add_argument("--version", action="version", version=f"groupk {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, group=False, field=False):
        p = sub.add_parser(name, help=help_text)
        if group:
            p.add_argument("--group", required=True, help="group spec, e.g. C2xC2, D4, S3")
        if field:
            p.add_argument("--q", required=True, type=int, help="field size (prime power)")
        p.add_argument("--max-degree", type=int, default=4, help="top degree (default 4)")
        p.add_argument("--format", choices=("ascii", "json"), default="ascii")
        return p

    add("kfield", "K-groups of a finite field", field=True)
    add("homology", "integral homology of a finite group", group=True)
    add("wedderburn", "semisimple structure of F_q[G]", group=True, field=True)
    add("e2page", "Atiyah-Hirzebruch E^2 page of H_*(BG; K(F))", group=True, field=True)
    add("certify", "non-injectivity certificate for the assembly map", group=True, field=True)
    return parser


def _limits():
    cap = int(os.environ.get("GROUPK_ORDER_CAP", DEFAULT_ORDER_CAP))
    gen = int(os.environ.get("GROUPK_GENERATOR_LIMIT", DEFAULT_GENERATOR_LIMIT))
    return cap, gen


def run(argv, stdout=None, stderr=None) -> int:
    """Dispatch a command line; returns the process exit code.

    0: success (including verdict NOT_INJECTIVE); 1: usage or computation
    error; 2: certify verdict INCONCLUSIVE.
    """
    out = stdout if stdout is not None else sys.stdout
    err = stderr if stderr is not None else sys.stderr
    try:
        args = _build_parser().parse_args(argv)
        order_cap, generator_limit = _limits()
        emit = functools.partial(print, file=out)

        if args.command == "kfield":
            qp = validate_prime_power(args.q)
            ks = [k_finite_field(qp, n) for n in range(args.max_degree + 1)]
            if args.format == "json":
                emit(json.dumps({
                    "q": qp.q, "p": qp.p, "e": qp.e,
                    "degrees": [
                        {"n": n, "group": k.to_json(), "display": str(k)}
                        for n, k in enumerate(ks)
                    ],
                }, indent=2))
            else:
                for n, k in enumerate(ks):
                    emit(f"K_{n}(F_{qp.q}) = {k}")
            return 0

        if args.command == "homology":
            G = parse_group_spec(args.group).build(order_cap)
            hs = [
                integral_homology(G, n, degree_cap=args.max_degree,
                                  generator_limit=generator_limit)
                for n in range(args.max_degree + 1)
            ]
            if args.format == "json":
                emit(json.dumps({
                    "group": args.group,
                    "degrees": [
                        {"n": n, "group": h.to_json(), "display": str(h)}
                        for n, h in enumerate(hs)
                    ],
                }, indent=2))
            else:
                for n, h in enumerate(hs):
                    emit(f"H_{n}({args.group}) = {h}")
            return 0

        if args.command == "wedderburn":
            G = parse_group_spec(args.group).build(order_cap)
            qp = validate_prime_power(args.q)
            summary = wedderburn_summary(G, qp)
            if args.format == "json":
                emit(json.dumps(summary.to_json(), indent=2))
            else:
                emit(f"semisimple: {str(summary.semisimple).lower()}")
                if summary.semisimple:
                    emit(f"d: {summary.d}")
                    if summary.field_degrees is not None:
                        emit(f"field_degrees: {list(summary.field_degrees)}")
                    emit(f"method: {summary.method}")
            return 0

        if args.command == "e2page":
            G = parse_group_spec(args.group).build(order_cap)
            qp = validate_prime_power(args.q)
            page = e2_page(G, qp, args.max_degree, generator_limit=generator_limit)
            if args.format == "json":
                emit(json.dumps({
                    "group": args.group, "q": qp.q,
                    "max_total_degree": page.max_total_degree,
                    "entries": [
                        {"p": p, "q": qd, "group": v.to_json(), "display": str(v)}
                        for p, qd, v in page.entries
                    ],
                }, indent=2))
            else:
                out.write(render_e2_ascii(page))
            return 0

        if args.command == "certify":
            G = parse_group_spec(args.group).build(order_cap)
            qp = validate_prime_power(args.q)
            cert = certify_noninjectivity(
                G, qp, group_name=args.group, generator_limit=generator_limit
            )
            if args.format == "json":
                out.write(cert.to_json())
            else:
                emit(f"group: {cert.group}")
                emit(f"field: F_{cert.q} (characteristic {cert.p})")
                emit(f"semisimple: {str(cert.semisimple).lower()}")
                if cert.d is not None:
                    emit(f"components d: {cert.d}")
                emit(f"H_2(G) = {cert.h2}")
                if cert.k2_group_ring is not None:
                    emit(f"K_2(F_q[G]) = {cert.k2_group_ring}")
                emit(f"verdict: {cert.verdict}")
                if cert.reason:
                    emit(f"reason: {cert.reason}")
            return 0 if cert.verdict == NOT_INJECTIVE else 2

        raise ParseError(f"unknown command {args.command!r}")
    except GroupKError as exc:
        print(f"error: {exc}", file=err)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
