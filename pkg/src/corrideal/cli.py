"""Command line front end.

Exit codes: 0 success, 1 input validation failure, 2 precondition failure,
3 I/O or parse failure.  Each command reads one JSON input document.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .checks import run_checks
from .constructions import (
    nondegenerate_part,
    omega_correspondence,
    quotient_correspondence,
    restriction_correspondence,
    is_hilbert_bimodule,
)
from .core import Correspondence, IdealSet
from .errors import CorrespondenceError, ParseError, SchemaError
from .ideals import closures, forward_image, invariance, inverse_image, relative_katsura, structural_ideals
from .io import dumps, load_input, parse_input
from .pairs import DEFAULT_SIZE_LIMIT, IdealPair, enumerate_pairs, relcp_analyze
from .structure import ox_structure

COMMANDS = ("validate", "info", "ideal", "pairs", "construct", "structure", "relcp", "check")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise SchemaError(f"{self.prog}: {message}")


def _set_text(X: Correspondence, ideal: IdealSet) -> str:
    return "{" + ",".join(X.render(ideal)) + "}"


def _pair_text(X: Correspondence, pair: IdealPair) -> str:
    return f"({_set_text(X, pair.first)};{_set_text(X, pair.second)})"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(row[k]) for row in rows) for k in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


def _read(path: str) -> Correspondence:
    if path == "-":
        return parse_input(sys.stdin.buffer.read())
    return load_input(path)


# -- commands -----------------------------------------------------------------

def cmd_validate(X, args):
    if args.format == "json":
        return dumps({"blocks": X.n, "valid": True})
    return f"valid: {X.n} blocks\n"


def cmd_info(X, args):
    ker, compact, katsura = structural_ideals(X)
    bimodule = is_hilbert_bimodule(X)
    if args.format == "json":
        return dumps({
            "blocks": [{"label": l, "dim": d} for l, d in zip(X.labels, X.dims)],
            "kernel": X.render(ker),
            "compactly_acting": X.render(compact),
            "katsura": X.render(katsura),
            "hilbert_bimodule": bool(bimodule),
            "bimodule_violations": list(bimodule.violations),
        })
    lines = [
        "blocks: " + " ".join(f"{l}({d})" for l, d in zip(X.labels, X.dims)),
        f"kernel: {_set_text(X, ker)}",
        f"compactly acting: {_set_text(X, compact)}",
        f"J_X: {_set_text(X, katsura)}",
        f"hilbert bimodule: {_yes(bool(bimodule))}",
    ]
    lines += [f"  {v}" for v in bimodule.violations]
    return "\n".join(lines) + "\n"


def cmd_ideal(X, args):
    I = X.ideal(args.set)
    flags = invariance(X, I)
    report = closures(X, I)
    data = {
        "set": X.render(I),
        "forward_image": X.render(forward_image(X, I)),
        "inverse_image": X.render(inverse_image(X, I)),
        "relative_katsura": X.render(relative_katsura(X, I)),
        "positively_invariant": flags.positively_invariant,
        "negatively_invariant": flags.negatively_invariant,
        "invariant": flags.invariant,
        "forward_tower": [X.render(K) for K in report.forward_tower],
        "backward_tower": [X.render(K) for K in report.backward_tower],
        "positive_closure": X.render(report.positive_closure),
        "negative_closure": X.render(report.negative_closure),
        "invariant_closure": X.render(report.invariant_closure),
    }
    if args.format == "json":
        return dumps(data)
    s = lambda K: _set_text(X, K)
    lines = [
        f"I: {s(I)}",
        f"X(I): {s(forward_image(X, I))}",
        f"X^-1(I): {s(inverse_image(X, I))}",
        f"J(I): {s(relative_katsura(X, I))}",
        f"positively invariant: {_yes(flags.positively_invariant)}",
        f"negatively invariant: {_yes(flags.negatively_invariant)}",
        f"invariant: {_yes(flags.invariant)}",
        "forward tower: " + " -> ".join(s(K) for K in report.forward_tower),
        "backward tower: " + " -> ".join(s(K) for K in report.backward_tower),
        f"positive closure: {s(report.positive_closure)}",
        f"negative closure: {s(report.negative_closure)}",
        f"invariant closure: {s(report.invariant_closure)}",
    ]
    return "\n".join(lines) + "\n"


def cmd_pairs(X, args):
    lattice = enumerate_pairs(X, args.kind, limit=args.limit)
    edges = lattice.covering_edges
    if args.format == "dot":
        lines = [f"digraph {lattice.kind.value}_pairs {{"]
        for k, pair in enumerate(lattice):
            lines.append(f'  p{k} [label="{_pair_text(X, pair)}"];')
        for a, b in edges:
            lines.append(f"  p{a} -> p{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if args.format == "json":
        return dumps({
            "kind": lattice.kind.value,
            "pairs": [
                {"index": k, "first": X.render(p.first), "second": X.render(p.second)}
                for k, p in enumerate(lattice)
            ],
            "covers": [list(e) for e in edges],
        })
    upper = {k: [] for k in range(len(lattice))}
    for a, b in edges:
        upper[a].append(str(b))
    rows = [["#", "I", "I'", "covered by"]]
    for k, p in enumerate(lattice):
        rows.append([str(k), _set_text(X, p.first), _set_text(X, p.second), ",".join(upper[k]) or "-"])
    return _table(rows)


def cmd_construct(X, args):
    chosen = [o for o in ("quotient", "restrict", "omega") if getattr(args, o) is not None]
    chosen += ["nondegenerate"] if args.nondegenerate else []
    if len(chosen) != 1:
        raise SchemaError("construct needs exactly one of --quotient, --restrict, --omega, --nondegenerate")
    if args.quotient is not None:
        derived = quotient_correspondence(X, X.ideal(args.quotient))
    elif args.restrict is not None:
        derived = restriction_correspondence(X, X.ideal(args.restrict))
    elif args.omega is not None:
        if ":" not in args.omega:
            raise SchemaError("--omega expects 'I:I2' with comma-separated labels on each side")
        first, second = args.omega.split(":", 1)
        derived = omega_correspondence(X, IdealPair(X.ideal(first), X.ideal(second)))
    else:
        derived = nondegenerate_part(X)
    if args.format == "table":
        rows = [["block", "source", "tag"]]
        for label in derived.result.labels:
            source, tag = derived.origin[label]
            rows.append([label, source, tag])
        return _table(rows)
    return dumps(derived.result.to_document())


def cmd_structure(X, args):
    structure = ox_structure(X)
    if args.format == "json":
        return dumps({
            "algebra": str(structure),
            "summands": [{"sink": label, "size": size} for label, size in structure.summands],
        })
    return f"{structure}\n"


def cmd_relcp(X, args):
    J = X.ideal(args.ideal)
    report = relcp_analyze(X, J)
    if args.format == "json":
        return dumps({
            "J": X.render(J),
            "tower": [X.render(K) for K in report.tower],
            "limit": X.render(report.limit),
            "omega": {"first": X.render(report.omega.first), "second": X.render(report.omega.second)},
            "kernel_of_pi": X.render(report.kernel_of_pi),
            "algebra_is_zero": report.algebra_is_zero,
        })
    lines = [
        f"J: {_set_text(X, J)}",
        "tower: " + " -> ".join(_set_text(X, K) for K in report.tower),
        f"J_-inf: {_set_text(X, report.limit)}",
        f"omega_J: {_pair_text(X, report.omega)}",
        f"kernel of pi: {_set_text(X, report.kernel_of_pi)}",
        f"algebra is zero: {_yes(report.algebra_is_zero)}",
    ]
    return "\n".join(lines) + "\n"


def cmd_check(X, args):
    results = run_checks(X)
    if args.format == "json":
        text = dumps([{"name": r.name, "status": r.status, "detail": r.detail} for r in results])
    else:
        text = "".join(f"[{r.status}] {r.name}: {r.detail}\n" for r in results)
    return text, (0 if all(r.ok for r in results) else 1)


HANDLERS = {name: globals()[f"cmd_{name}"] for name in COMMANDS}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="corrideal", description="Ideal calculus for finite-block C*-correspondences.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("input", help="JSON input document, or - for stdin")
        formats = ["table", "json", "dot"] if name == "pairs" else ["table", "json"]
        p.add_argument("--format", choices=formats, default="table")
        if name == "ideal":
            p.add_argument("--set", required=True, help="comma-separated block labels; '' for 0")
        elif name == "pairs":
            p.add_argument("--kind", type=str.lower, choices=["t", "o"], default="o")
            p.add_argument("--limit", type=int, default=DEFAULT_SIZE_LIMIT, help="maximum number of blocks")
        elif name == "construct":
            p.add_argument("--quotient", metavar="S")
            p.add_argument("--restrict", metavar="S")
            p.add_argument("--omega", metavar="S:S'")
            p.add_argument("--nondegenerate", action="store_true")
        elif name == "relcp":
            p.add_argument("--ideal", required=True, metavar="S")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        X = _read(args.input)
        out = HANDLERS[args.command](X, args)
    except CorrespondenceError as exc:
        print(f"{exc.kind}: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"{ParseError.__name__}: {exc}", file=sys.stderr)
        return ParseError.exit_code
    code = 0
    if isinstance(out, tuple):
        out, code = out
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
