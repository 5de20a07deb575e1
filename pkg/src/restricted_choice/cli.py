"""Command-line front end.

Every command prints one JSON document on standard output.  Exit status is
0 on success, 1 on a domain error (the document is then an error object)
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import io
from .argumentation import parse_apx, pi_evaluate, lca_certify
from .axioms import SUITES, check_axiom, check_suite
from .change import lcr_certify
from .errors import AxiomViolation, CarrierNotRealizable, ChoiceError, FormatError, OutOfDomain
from .oracle import sweep
from .structures import evaluate, is_union_closed
from .synthesis import synthesize

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


class _ReadError(ChoiceError):
    kind = "io_error"


def _emit(doc) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _read_text(path: str, stdin_ok: bool = False) -> str:
    try:
        if path == "-" and stdin_ok:
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _ReadError(f"cannot read {path}: {exc.strerror}") from None


def _read_json(path: str, stdin_ok: bool = False):
    text = _read_text(path, stdin_ok)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _structure(path: str, stdin_ok: bool = False):
    return io.structure_from_json(_read_json(path, stdin_ok))


# commands -------------------------------------------------------------------

def cmd_validate(args) -> dict:
    st = _structure(args.structure, stdin_ok=True)
    return {
        "valid": True,
        "alternatives": len(st.universe),
        "domain": len(st.domain),
        "realizable": len(st.realizable),
        "union_closed": is_union_closed(st),
    }


def cmd_eval(args) -> dict:
    st = _structure(args.structure)
    u = st.universe
    order, fallback = io.order_from_json(_read_json(args.order), u)
    if args.fallback is not None:
        fallback = u.parse(args.fallback)
    if fallback is None:
        fallback = order.chain[0]
    stray = [e for e in order.chain if e not in st.realizable_set]
    if stray:
        raise CarrierNotRealizable(
            "order ranks sets that are not realizable: " + ", ".join(u.format(e) for e in stray)
        )
    if fallback not in st.realizable_set:
        raise CarrierNotRealizable(f"fallback {u.format(fallback)} is not realizable")
    s = u.parse(args.input)
    if s not in st.domain_set:
        raise OutOfDomain(f"input {u.format(s)} is not in the domain")
    return {"choice": u.names_of(evaluate(order, fallback, s))}


def cmd_axioms(args):
    st = _structure(args.structure)
    table = io.table_from_json(_read_json(args.table), st)
    if args.suite in ("ss", "sse"):
        reports = check_suite(table, args.suite)
    else:
        reports = [check_axiom(table, ax) for ax in SUITES[args.suite]]
    return [r.to_json(st.universe) for r in reports]


def cmd_synthesize(args) -> dict:
    st = _structure(args.structure)
    table = io.table_from_json(_read_json(args.table), st)
    try:
        trace = synthesize(table)
    except AxiomViolation as exc:
        exc.extra["witness"] = exc.report.to_json(st.universe)["witness"]
        raise
    order = io.order_to_json(trace.final, st.universe, table.fallback)
    if args.trace:
        return {"order": order, "trace": io.trace_to_json(trace, st.universe)}
    return order


def cmd_oracle(args) -> dict:
    st = _structure(args.structure)
    k = None if args.k is None else st.universe.parse(args.k)
    return sweep(st, k).to_json()


def cmd_change(args) -> dict:
    op = io.operator_from_json(_read_json(args.operator))
    u = op.universe
    out = {"result": u.names_of(op.revise(u.parse(args.k), u.parse(args.s)))}
    if args.certify:
        out["reports"] = [r.to_json(u) for r in lcr_certify(op)]
    return out


def cmd_af(args) -> dict:
    af = parse_apx(_read_text(args.framework))
    sem = io.semantics_from_json(_read_json(args.config))
    u = af.universe
    out = {"choice": u.names_of(pi_evaluate(sem, af, u.parse(args.query)))}
    if args.certify:
        out["reports"] = [r.to_json(u) for r in lca_certify(sem, af)]
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="restricted-choice", description=__doc__.splitlines()[0], allow_abbrev=False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("validate", help="check a structure file ('-' reads stdin)", allow_abbrev=False)
    v.add_argument("structure")
    v.set_defaults(run=cmd_validate)

    e = sub.add_parser("eval", help="evaluate an order on one input", allow_abbrev=False)
    e.add_argument("structure")
    e.add_argument("order")
    e.add_argument("--input", required=True, help="comma-separated alternative names")
    e.add_argument("--fallback", help="fallback set; defaults to the order file's, else its least set")
    e.set_defaults(run=cmd_eval)

    a = sub.add_parser("axioms", help="check a table against a postulate suite", allow_abbrev=False)
    a.add_argument("structure")
    a.add_argument("table")
    a.add_argument("--suite", choices=sorted(SUITES), default="sse")
    a.set_defaults(run=cmd_axioms)

    s = sub.add_parser("synthesize", help="build an order reproducing a table", allow_abbrev=False)
    s.add_argument("structure")
    s.add_argument("table")
    s.add_argument("--trace", action="store_true", help="include every pipeline stage")
    s.set_defaults(run=cmd_synthesize)

    o = sub.add_parser("oracle", help="exhaustive representability sweep", allow_abbrev=False)
    o.add_argument("structure")
    o.add_argument("--k", help="restrict the sweep to one fallback")
    o.set_defaults(run=cmd_oracle)

    c = sub.add_parser("change", help="revise a prior state by an input", allow_abbrev=False)
    c.add_argument("operator")
    c.add_argument("--k", required=True)
    c.add_argument("--s", required=True)
    c.add_argument("--certify", action="store_true", help="also run the operator postulates")
    c.set_defaults(run=cmd_change)

    f = sub.add_parser("af", help="choice-based extension semantics on a framework", allow_abbrev=False)
    f.add_argument("framework")
    f.add_argument("--config", required=True)
    f.add_argument("--query", required=True)
    f.add_argument("--certify", action="store_true", help="also run the argumentation postulates")
    f.set_defaults(run=cmd_af)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _emit({"error": {"kind": "usage", "detail": str(exc)}})
        return EXIT_USAGE
    try:
        doc = args.run(args)
    except ChoiceError as exc:
        _emit(exc.to_json())
        return EXIT_DOMAIN
    _emit(doc)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
