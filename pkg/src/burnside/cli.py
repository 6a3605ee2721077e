"""Command line entry point: `burnside <subcommand> ...`."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from pathlib import Path

from .bisets import (
    BisetElement,
    biset_basis,
    compose,
    hom_biset,
    identity_biset,
    jn_bivariant,
    transfer_biset,
)
from .burnside_ring import table_of_marks
from .catalog import catalog_group
from .errors import (
    BurnsideError,
    GroupMismatch,
    NotAGroup,
    NotAHomomorphism,
    NotInjective,
    TooLarge,
    UnknownName,
)
from .filtration import jn_ideal
from .groups import (
    FiniteGroup,
    GroupHom,
    classify_subgroups,
    group_from_cayley,
    group_from_permutations,
)
from .verify import run_all

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_TOO_LARGE, EXIT_MISMATCH = 0, 1, 2, 3, 4


class UsageError(Exception):
    """Input that could not be parsed."""


# ---------------------------------------------------------------------------
# input parsing


def _load_json(text: str):
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {text[1:]}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from exc


def group_from_json(data) -> FiniteGroup:
    """Build a group from ``{"order", "cayley"}`` or ``{"degree", "generators"}``."""
    if isinstance(data, str):
        return catalog_group(data)
    if not isinstance(data, dict):
        raise UsageError("a group must be a catalog name or a JSON object")
    name = data.get("name")
    if "cayley" in data:
        table = data["cayley"]
        if "order" in data and data["order"] != len(table):
            raise UsageError(f"order {data['order']} does not match a table with {len(table)} rows")
        return group_from_cayley(table, name=name or f"G{len(table)}")
    if "generators" in data:
        G = group_from_permutations(data["degree"], data["generators"], name=name)
        return G if name else FiniteGroup(G.mul, G.identity, G.inv, G.element_labels, f"G{G.order}")
    raise UsageError('group JSON needs "cayley" or "degree" and "generators"')


def parse_group(spec: str) -> FiniteGroup:
    spec = spec.strip()
    if spec.startswith(("{", "@")):
        return group_from_json(_load_json(spec))
    return catalog_group(spec)


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if text.startswith("["):
        values = _load_json(text)
    else:
        values = [v for v in text.split(",") if v.strip()]
    try:
        return [int(v) for v in values]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"expected a list of integers, got {text!r}") from exc


def parse_biset(spec: str) -> BisetElement:
    """Biset from JSON or from ``id:G``, ``hom:G:H:imgs``, ``transfer:G:H:imgs``, ``basis:G:H:i``.

    ``hom`` lists the images in H of the elements of G; ``transfer`` lists
    the images in G of the elements of H under the injection ``H → G``.
    """
    spec = spec.strip()
    if spec.startswith(("{", "@")):
        data = _load_json(spec)
        if not isinstance(data, dict) or not {"source", "target", "coeffs"} <= data.keys():
            raise UsageError('biset JSON needs "source", "target" and "coeffs"')
        G, H = group_from_json(data["source"]), group_from_json(data["target"])
        try:
            return BisetElement(G, H, tuple(int(c) for c in data["coeffs"]))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    kind, _, rest = spec.partition(":")
    parts = rest.split(":")
    if kind == "id" and len(parts) == 1:
        return identity_biset(parse_group(parts[0]))
    if kind in ("hom", "transfer", "basis") and len(parts) == 3:
        G, H = parse_group(parts[0]), parse_group(parts[1])
        if kind == "hom":
            return hom_biset(GroupHom(G, H, tuple(_int_list(parts[2]))))
        if kind == "transfer":
            return transfer_biset(GroupHom(H, G, tuple(_int_list(parts[2]))))
        i = int(parts[2])
        if not 0 <= i < len(biset_basis(G, H)):
            raise UsageError(f"basis index {i} out of range for A({G.name}, {H.name})")
        return BisetElement.basis_element(G, H, i)
    raise UsageError(f"cannot parse biset {spec!r}")


# ---------------------------------------------------------------------------
# rendering


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def _aligned(rows) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return "\n".join(
        "  ".join(c.rjust(w) if k else c.ljust(w) for k, (c, w) in enumerate(zip(r, widths))).rstrip()
        for r in rows
    )


_FLAT_LIST = re.compile(r"\[[^\[\]{}]*\]")


def _dump(obj) -> str:
    """Indented JSON with innermost lists kept on one line."""
    text = json.dumps(obj, indent=2, ensure_ascii=False)
    return _FLAT_LIST.sub(lambda m: re.sub(r"\s*\n\s*", " ", m.group()).replace("[ ", "[").replace(" ]", "]"), text)


def render_marks(G: FiniteGroup, fmt: str) -> str:
    tom = table_of_marks(G)
    if fmt == "json":
        return _dump(tom.to_json())
    if fmt == "csv":
        return tom.to_csv().rstrip("\n")
    head = [f"{G.name}"] + [str(k) for k in range(len(tom))]
    rows = [head] + [[f"{k}: {lab}"] + [m or "." for m in row]
                     for k, (lab, row) in enumerate(zip(tom.headers(), tom.marks))]
    return _aligned(rows)


def render_subgroups(G: FiniteGroup, fmt: str) -> str:
    classes = classify_subgroups(G)
    records = [
        {"index": c.index, "label": c.label, "order": c.order, "conjugates": len(c.conjugates),
         "min_generators": c.min_generators, "weyl_order": c.weyl_order,
         "representative": list(c.representative.elements)}
        for c in classes
    ]
    if fmt == "json":
        return _dump({"group": G.name, "classes": records})
    keys = ["index", "label", "order", "conjugates", "min_generators", "weyl_order"]
    rows = [keys] + [[r[k] for k in keys] for r in records]
    return _csv(rows) if fmt == "csv" else _aligned(rows)


def render_lattice(lattice, fmt: str, title: str, membership=None) -> str:
    data = lattice.to_json()
    if membership is not None:
        data["membership"] = membership
    if fmt == "json":
        return _dump(data)
    if fmt == "csv":
        return _csv(lattice.basis) if lattice.basis else ""
    lines = [f"{title}: rank {lattice.rank} in Z^{lattice.ambient_rank}"]
    lines += ["  " + " ".join(f"{v:>3}" for v in b) for b in lattice.basis]
    if membership is not None:
        lines.append(f"member: {'yes' if membership['member'] else 'no'}")
    return "\n".join(lines)


def render_biset(S: BisetElement, fmt: str) -> str:
    if fmt == "json":
        return _dump(S.to_json())
    basis = S.basis
    if fmt == "csv":
        return _csv([["index", "coeff", "label"]]
                    + [[i, c, basis.label(i)] for i, c in enumerate(S.coeffs)])
    terms = [f"{c:+d} {basis.label(i)}" for i, c in enumerate(S.coeffs) if c]
    head = f"A({S.source.name}, {S.target.name}): {list(S.coeffs)}"
    return "\n".join([head] + ["  " + t for t in terms] if terms else [head, "  0"])


def render_report(report, fmt: str, timings: bool = False) -> str:
    if fmt == "json":
        return _dump(report.to_json(timings))
    if fmt == "csv":
        head = ["number", "name", "status", "limit"] + (["seconds"] if timings else [])
        return _csv([head] + [
            [c.number, c.name, c.status, c.limit] + ([f"{c.seconds:.2f}"] if timings else [])
            for c in report.checks
        ])
    lines = [report.render(timings)]
    for c in report.checks:
        if not c.passed:
            data = c.to_json()
            lines.append(f"\n[{c.number}] {c.name} ({c.reference})")
            lines.append("  expected: " + json.dumps(data["expected"], ensure_ascii=False))
            lines.append("  actual:   " + json.dumps(data["actual"], ensure_ascii=False))
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands


def cmd_marks(args) -> int:
    print(render_marks(parse_group(args.group), args.format))
    return EXIT_OK


def cmd_subgroups(args) -> int:
    print(render_subgroups(parse_group(args.group), args.format))
    return EXIT_OK


def cmd_jn(args) -> int:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    G = parse_group(args.group)
    if args.bivariant:
        H = parse_group(args.bivariant)
        L, title = jn_bivariant(G, H, args.n), f"J_{args.n}({G.name}, {H.name})"
    else:
        L, title = jn_ideal(G, args.n), f"J_{args.n}({G.name})"
    membership = None
    if args.membership is not None:
        vec = _int_list(args.membership)
        if len(vec) != L.ambient_rank:
            raise UsageError(f"membership vector needs {L.ambient_rank} entries, got {len(vec)}")
        membership = {"vector": vec, "member": vec in L}
    print(render_lattice(L, args.format, title, membership))
    return EXIT_OK


def cmd_compose(args) -> int:
    S, T = parse_biset(args.left), parse_biset(args.right)
    print(render_biset(compose(S, T, method=args.method), args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_all(fault=args.inject_fault)
    print(render_report(report, "json" if args.json else args.format, args.timings))
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    common.add_argument("--cap", type=int, default=None, help="largest group order to build")

    parser = argparse.ArgumentParser(prog="burnside", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("marks", parents=[common], help="table of marks")
    p.add_argument("group", help="catalog name, inline JSON, or @file.json")
    p.set_defaults(func=cmd_marks)

    p = sub.add_parser("subgroups", parents=[common], help="conjugacy classes of subgroups")
    p.add_argument("group")
    p.set_defaults(func=cmd_subgroups)

    p = sub.add_parser("jn", parents=[common], help="HNF basis of J_n(G) or J_n(G, H)")
    p.add_argument("group")
    p.add_argument("n", type=int)
    p.add_argument("--bivariant", metavar="H", help="compute J_n(G, H) inside A(G, H)")
    p.add_argument("--membership", metavar="COEFFS", help="comma-separated vector to test")
    p.set_defaults(func=cmd_jn)

    p = sub.add_parser("compose", parents=[common], help="compose S in A(G,H) with T in A(H,I)")
    p.add_argument("left", help="id:G, hom:G:H:imgs, transfer:G:H:imgs, basis:G:H:i, JSON or @file")
    p.add_argument("right")
    p.add_argument("--method", choices=("sets", "mackey"), default="sets")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("verify", parents=[common], help="run the acceptance checks")
    p.add_argument("--json", action="store_true", help="same as --format json")
    p.add_argument("--inject-fault", choices=("g-sign",), default=None,
                   help="deliberately corrupt a named element to exercise the report")
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds per check")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    saved = os.environ.get("BURNSIDE_CAP")
    if args.cap is not None:
        # the library reads the cap from the environment wherever none is passed
        os.environ["BURNSIDE_CAP"] = str(args.cap)
    try:
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (GroupMismatch, NotInjective) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (UsageError, UnknownName, NotAGroup, NotAHomomorphism, ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BurnsideError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED
    finally:
        if saved is None:
            os.environ.pop("BURNSIDE_CAP", None)
        else:
            os.environ["BURNSIDE_CAP"] = saved


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
