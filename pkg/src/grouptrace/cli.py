"""Command line front end.

Thin client over the service handlers: every command builds a request
model, calls the same handler the HTTP routes use, and renders the
response as json, csv, or text.

Exit codes: 0 all checks pass, 1 a verification failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ValidationError

from .catalog import catalog_names
from .errors import EngineError, InputError, VerificationError
from .schemas import (
    CatalogResponse,
    CharTableResponse,
    ClassesResponse,
    FixedPointsResponse,
    FunctionSpec,
    GroupSpec,
    InfoResponse,
    InputBundle,
    MultiplicitiesResponse,
    RunConfig,
    SubgroupField,
    TraceResponse,
    VerifyResponse,
)
from .service import (
    FixedPointsRequest,
    InfoRequest,
    TraceRequest,
    app,
    handle_catalog,
    handle_chartable,
    handle_classes,
    handle_fixed_points,
    handle_info,
    handle_multiplicities,
    handle_trace,
    handle_verify,
)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_INPUT = 2


def load_group_source(source: str) -> InputBundle:
    """Interpret --group: catalog:<name>, a JSON bundle file, or a bare catalog name."""
    if source.startswith("catalog:"):
        return InputBundle(group=GroupSpec(kind="named", name=source[len("catalog:") :]))
    path = Path(source)
    if path.exists():
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise InputError(f"could not parse {path} as JSON: {exc}") from exc
        try:
            return InputBundle.model_validate(data)
        except ValidationError as exc:
            raise InputError(f"invalid group file {path}: {exc}") from exc
    if source in catalog_names():
        return InputBundle(group=GroupSpec(kind="named", name=source))
    raise InputError(
        f"group source {source!r} is not catalog:<name>, an existing file, "
        f"or a catalog name"
    )


def parse_subgroup_flag(text: Optional[str], bundle: InputBundle) -> SubgroupField:
    """Resolve --subgroup, falling back to the bundle's subgroup, then trivial."""
    if text is None:
        return bundle.subgroup if bundle.subgroup is not None else "trivial"
    if text in ("trivial", "full"):
        return text
    parts = [p.strip() for p in text.split(",") if p.strip() != ""]
    try:
        return [int(p) for p in parts]
    except ValueError:
        raise InputError(
            f"--subgroup must be 'trivial', 'full', or comma-separated element "
            f"indices, got {text!r}"
        ) from None


def parse_function_flag(text: Optional[str], bundle: InputBundle) -> FunctionSpec:
    """Resolve --function: inline JSON or a named function from the group file."""
    if text is None:
        return FunctionSpec(kind="random", seed=0)
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputError(f"could not parse --function as JSON: {exc}") from exc
        try:
            return FunctionSpec.model_validate(data)
        except ValidationError as exc:
            raise InputError(f"invalid function spec: {exc}") from exc
    if stripped in bundle.functions:
        return bundle.functions[stripped]
    known = ", ".join(sorted(bundle.functions)) or "none defined"
    raise InputError(
        f"--function {stripped!r} is neither inline JSON nor a function from "
        f"the group file (known: {known})"
    )


# ---------------------------------------------------------------------------
# Rendering


def _fmt(x: float) -> str:
    return f"{float(x):.12g}"


def _fmt_complex(pair: list[float]) -> str:
    re, im = pair
    if im == 0:
        return _fmt(re)
    return f"{_fmt(re)}{'+' if im >= 0 else '-'}{_fmt(abs(im))}i"


def _text_table(headers: list[str], rows: list[list[str]]) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def _csv_string(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def render_json(resp: BaseModel) -> str:
    return json.dumps(resp.model_dump(by_alias=True), indent=2) + "\n"


def render_csv(resp: BaseModel) -> str:
    if isinstance(resp, CatalogResponse):
        rows = [["name", "order", "description"]]
        rows += [[e.name, e.order, e.description] for e in resp.entries]
        return _csv_string(rows)
    if isinstance(resp, InfoResponse):
        rows = [["field", "value"]]
        rows.append(["group", resp.group])
        rows.append(["order", resp.order])
        rows.append(["is_abelian", resp.is_abelian])
        rows.append(["num_classes", resp.num_classes])
        rows.append(["class_sizes", " ".join(map(str, resp.class_sizes))])
        rows.append(["irrep_degrees", " ".join(map(str, resp.irrep_degrees))])
        return _csv_string(rows)
    if isinstance(resp, ClassesResponse):
        rows = [
            [
                "index",
                "size",
                "representative",
                "representative_label",
                "centralizer_order",
                "inverse_class",
            ]
        ]
        for c in resp.classes:
            rows.append(
                [
                    c.index,
                    c.size,
                    c.representative,
                    c.representative_label,
                    c.centralizer_order,
                    c.inverse_class,
                ]
            )
        return _csv_string(rows)
    if isinstance(resp, CharTableResponse):
        header = ["row", "degree"] + [f"class{i}" for i in range(resp.num_classes)]
        rows = [header]
        rows.append(["class_size", ""] + [str(s) for s in resp.class_sizes])
        rows.append(
            ["class_representative", ""] + [str(r) for r in resp.class_representatives]
        )
        rows.append(
            ["centralizer_order", ""] + [str(z) for z in resp.centralizer_orders]
        )
        for lam, row in enumerate(resp.rows):
            rows.append(
                [f"chi{lam}_re", resp.degrees[lam]] + [_fmt(v[0]) for v in row]
            )
            rows.append(
                [f"chi{lam}_im", resp.degrees[lam]] + [_fmt(v[1]) for v in row]
            )
        return _csv_string(rows)
    if isinstance(resp, FixedPointsResponse):
        rows = [["element", "label", "count"]]
        rows += [[r.element, r.label, r.count] for r in resp.counts]
        return _csv_string(rows)
    if isinstance(resp, MultiplicitiesResponse):
        rows = [["irrep", "degree", "raw_re", "raw_im", "rounded", "residual"]]
        for e in resp.entries:
            rows.append(
                [e.irrep, e.degree, _fmt(e.raw[0]), _fmt(e.raw[1]), e.rounded, _fmt(e.residual)]
            )
        return _csv_string(rows)
    if isinstance(resp, TraceResponse):
        rows = [["kind", "key", "re_or_value", "im"]]
        for r in resp.routes:
            rows.append(["route", r.route, _fmt(r.value[0]), _fmt(r.value[1])])
        for d in resp.deviations:
            rows.append(["deviation", d.pair, _fmt(d.value), ""])
        rows.append(["pass", "", str(resp.pass_).lower(), ""])
        return _csv_string(rows)
    if isinstance(resp, VerifyResponse):
        rows = [["id", "description", "max_deviation", "pass", "notes"]]
        for c in resp.checks:
            rows.append(
                [c.id, c.description, _fmt(c.max_deviation), str(c.pass_).lower(), "; ".join(c.notes)]
            )
        rows.append(["overall", "", "", str(resp.pass_).lower(), ""])
        return _csv_string(rows)
    raise InputError(f"no csv renderer for {type(resp).__name__}")


def render_text(resp: BaseModel) -> str:
    if isinstance(resp, CatalogResponse):
        rows = [[e.name, str(e.order), e.description] for e in resp.entries]
        return _text_table(["name", "order", "description"], rows)
    if isinstance(resp, InfoResponse):
        lines = [
            f"group: {resp.group}",
            f"order: {resp.order}",
            f"abelian: {'yes' if resp.is_abelian else 'no'}",
            f"classes: {resp.num_classes}",
            f"class sizes: {' '.join(map(str, resp.class_sizes))}",
            f"irrep degrees: {' '.join(map(str, resp.irrep_degrees))}",
        ]
        return "\n".join(lines) + "\n"
    if isinstance(resp, ClassesResponse):
        rows = [
            [
                str(c.index),
                str(c.size),
                str(c.representative),
                c.representative_label,
                str(c.centralizer_order),
                str(c.inverse_class),
            ]
            for c in resp.classes
        ]
        header = f"group: {resp.group} (order {resp.order}), {resp.num_classes} classes\n"
        return header + _text_table(
            ["class", "size", "rep", "rep_label", "centralizer", "inverse_class"], rows
        )
    if isinstance(resp, CharTableResponse):
        head = f"group: {resp.group} (order {resp.order}), {resp.num_classes} classes\n"
        headers = ["row", "degree"] + [f"C{i}" for i in range(resp.num_classes)]
        rows = [
            ["size", ""] + [str(s) for s in resp.class_sizes],
            ["rep", ""] + [str(r) for r in resp.class_representatives],
            ["centralizer", ""] + [str(z) for z in resp.centralizer_orders],
        ]
        for lam, row in enumerate(resp.rows):
            rows.append(
                [f"chi{lam}", str(resp.degrees[lam])] + [_fmt_complex(v) for v in row]
            )
        tail = f"max orthogonality deviation: {_fmt(resp.max_orthogonality_deviation)}\n"
        return head + _text_table(headers, rows) + tail
    if isinstance(resp, FixedPointsResponse):
        head = (
            f"group: {resp.group} (order {resp.order}), subgroup order "
            f"{resp.subgroup_order}, {resp.num_points} cosets\n"
        )
        rows = [[str(r.element), r.label, str(r.count)] for r in resp.counts]
        tail = f"total fixed points: {resp.total}\n"
        return head + _text_table(["element", "label", "fixed"], rows) + tail
    if isinstance(resp, MultiplicitiesResponse):
        head = (
            f"group: {resp.group} (order {resp.order}), subgroup order "
            f"{resp.subgroup_order}, dimv {resp.dimv}\n"
        )
        rows = [
            [
                str(e.irrep),
                str(e.degree),
                _fmt_complex(e.raw),
                str(e.rounded),
                _fmt(e.residual),
            ]
            for e in resp.entries
        ]
        tail = (
            f"dimension sum: {resp.dimension_sum} (expected {resp.expected_dimension_sum})\n"
            f"max residual: {_fmt(resp.max_residual)}\n"
            f"result: {'pass' if resp.pass_ else 'FAIL'}\n"
        )
        return head + _text_table(["irrep", "degree", "raw", "rounded", "residual"], rows) + tail
    if isinstance(resp, TraceResponse):
        head = (
            f"group: {resp.group} (order {resp.order}), subgroup order "
            f"{resp.subgroup_order}, dimv {resp.dimv}\n"
        )
        lines = [head.rstrip("\n")]
        for r in resp.routes:
            lines.append(f"  {r.route:<11} {_fmt_complex(r.value)}")
        for d in resp.deviations:
            lines.append(f"  |{d.pair}| = {_fmt(d.value)}")
        for note in resp.notes:
            lines.append(f"  note: {note}")
        lines.append(f"max deviation: {_fmt(resp.max_deviation)}")
        lines.append(f"result: {'pass' if resp.pass_ else 'FAIL'}")
        return "\n".join(lines) + "\n"
    if isinstance(resp, VerifyResponse):
        head = (
            f"group: {resp.group} (order {resp.order}), subgroup order "
            f"{resp.subgroup_order}, dimv {resp.dimv}"
        )
        lines = [head]
        for c in resp.checks:
            status = "PASS" if c.pass_ else "FAIL"
            lines.append(f"[{status}] {c.id}: max deviation {_fmt(c.max_deviation)}")
            for note in c.notes:
                lines.append(f"       note: {note}")
        lines.append(f"overall: {'pass' if resp.pass_ else 'FAIL'}")
        return "\n".join(lines) + "\n"
    raise InputError(f"no text renderer for {type(resp).__name__}")


RENDERERS = {"json": render_json, "csv": render_csv, "text": render_text}


def _emit(resp: BaseModel, fmt: str, out: Optional[str]) -> int:
    rendered = RENDERERS[fmt](resp)
    if out:
        Path(out).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    return EXIT_OK if getattr(resp, "pass_", True) else EXIT_VERIFICATION


# ---------------------------------------------------------------------------
# Argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grouptrace",
        description=(
            "Finite-group harmonic analysis: character tables, coset actions, "
            "and cross-verified trace identities."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(sp: argparse.ArgumentParser) -> None:
        sp.add_argument(
            "--format", choices=("json", "csv", "text"), default="text", help="output format"
        )
        sp.add_argument("--out", default=None, help="write output to this file")

    def add_group(sp: argparse.ArgumentParser) -> None:
        sp.add_argument(
            "--group",
            required=True,
            help="catalog:<name>, a bare catalog name, or a JSON group file",
        )

    def add_seed(sp: argparse.ArgumentParser) -> None:
        sp.add_argument(
            "--seed", type=int, default=0, help="seed for the character table randomization"
        )

    def add_run(sp: argparse.ArgumentParser) -> None:
        sp.add_argument(
            "--subgroup",
            default=None,
            help="comma-separated generator indices, or 'trivial' / 'full'",
        )
        sp.add_argument("--dimv", type=int, default=1, help="fiber dimension (default 1)")
        sp.add_argument("--tol", type=float, default=1e-6, help="comparison tolerance")
        add_seed(sp)

    sp = sub.add_parser("catalog", help="list the built-in groups")
    add_output(sp)

    sp = sub.add_parser("info", help="order, classes, and degrees of a group")
    add_group(sp)
    add_seed(sp)
    add_output(sp)

    sp = sub.add_parser("classes", help="conjugacy classes of a group")
    add_group(sp)
    add_output(sp)

    sp = sub.add_parser("chartable", help="character table of a group")
    add_group(sp)
    add_seed(sp)
    add_output(sp)

    sp = sub.add_parser("fixed-points", help="fixed cosets of every element")
    add_group(sp)
    sp.add_argument(
        "--subgroup",
        default=None,
        help="comma-separated generator indices, or 'trivial' / 'full'",
    )
    add_output(sp)

    sp = sub.add_parser("multiplicities", help="irrep multiplicities in the coset action")
    add_group(sp)
    add_run(sp)
    add_output(sp)

    sp = sub.add_parser("trace", help="evaluate all trace routes for one function")
    add_group(sp)
    add_run(sp)
    sp.add_argument(
        "--oracle-cap",
        type=int,
        default=512,
        dest="oracle_cap",
        help="skip the dense matrix oracle above this matrix side",
    )
    sp.add_argument(
        "--function",
        default=None,
        help="inline JSON function spec, or a named function from the group file",
    )
    add_output(sp)

    sp = sub.add_parser("verify", help="run every identity check and report")
    add_group(sp)
    add_run(sp)
    sp.add_argument(
        "--oracle-cap",
        type=int,
        default=512,
        dest="oracle_cap",
        help="skip the dense matrix oracle above this matrix side",
    )
    add_output(sp)

    sp = sub.add_parser("serve", help="run the HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)

    return parser


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "catalog":
        return _emit(handle_catalog(), args.format, args.out)

    if args.command == "serve":
        import uvicorn

        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_OK

    bundle = load_group_source(args.group)

    if args.command == "info":
        resp = handle_info(InfoRequest(group=bundle.group, seed=args.seed))
        return _emit(resp, args.format, args.out)

    if args.command == "classes":
        resp = handle_classes(InfoRequest(group=bundle.group))
        return _emit(resp, args.format, args.out)

    if args.command == "chartable":
        resp = handle_chartable(InfoRequest(group=bundle.group, seed=args.seed))
        return _emit(resp, args.format, args.out)

    if args.command == "fixed-points":
        subgroup = parse_subgroup_flag(args.subgroup, bundle)
        resp = handle_fixed_points(
            FixedPointsRequest(group=bundle.group, subgroup=subgroup)
        )
        return _emit(resp, args.format, args.out)

    subgroup = parse_subgroup_flag(args.subgroup, bundle)

    if args.command == "multiplicities":
        config = RunConfig(
            group=bundle.group,
            subgroup=subgroup,
            dimv=args.dimv,
            tolerance=args.tol,
            seed=args.seed,
        )
        return _emit(handle_multiplicities(config), args.format, args.out)

    if args.command == "trace":
        function = parse_function_flag(args.function, bundle)
        req = TraceRequest(
            group=bundle.group,
            subgroup=subgroup,
            dimv=args.dimv,
            tolerance=args.tol,
            seed=args.seed,
            oracle_cap=args.oracle_cap,
            function=function,
        )
        return _emit(handle_trace(req), args.format, args.out)

    if args.command == "verify":
        config = RunConfig(
            group=bundle.group,
            subgroup=subgroup,
            dimv=args.dimv,
            tolerance=args.tol,
            seed=args.seed,
            oracle_cap=args.oracle_cap,
        )
        return _emit(handle_verify(config), args.format, args.out)

    raise InputError(f"unknown command {args.command!r}")


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except InputError as exc:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValidationError as exc:
        print(f"error (ValidationError): {exc}", file=sys.stderr)
        return EXIT_INPUT
    except VerificationError as exc:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except EngineError as exc:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_VERIFICATION


if __name__ == "__main__":
    sys.exit(main())
