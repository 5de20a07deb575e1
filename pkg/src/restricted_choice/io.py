"""JSON file formats.

Every document carries ``"format_version": 1``.  Sets are sorted lists of
alternative names; lists of sets are emitted in canonical (bitmask) order so
output is diff-stable.  Unknown alternative names are rejected.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .argumentation import SEMANTICS, ChoiceExtensionSemantics, semantics_from_names
from .axioms import AxiomReport
from .change import ChangeOperator, fit_family
from .errors import FormatError
from .relations import Relation
from .sets import AltSet, Universe
from .structures import ChoiceFunctionTable, LinearSetOrder, RestrictedChoiceStructure
from .synthesis import SynthesisTrace

FORMAT_VERSION = 1


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


def _check_version(doc: Any, what: str) -> dict:
    if not isinstance(doc, dict):
        raise FormatError(f"{what} document must be a JSON object")
    version = doc.get("format_version", FORMAT_VERSION)
    if version != FORMAT_VERSION:
        raise FormatError(f"unsupported {what} format_version {version!r}")
    return doc


def _field(doc: dict, key: str, what: str) -> Any:
    try:
        return doc[key]
    except KeyError:
        raise FormatError(f"{what} document lacks {key!r}") from None


def _set(u: Universe, value: Any) -> AltSet:
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise FormatError(f"expected a list of names, got {value!r}")
    return u.set(value)


def _sets(u: Universe, value: Any) -> list[AltSet]:
    if not isinstance(value, list):
        raise FormatError(f"expected a list of sets, got {value!r}")
    return [_set(u, v) for v in value]


def _names(u: Universe, sets) -> list[list[str]]:
    return [u.names_of(s) for s in sets]


# structures -----------------------------------------------------------------

def structure_from_json(doc: Any) -> RestrictedChoiceStructure:
    doc = _check_version(doc, "structure")
    alts = _field(doc, "alternatives", "structure")
    if not isinstance(alts, list) or not all(isinstance(a, str) for a in alts):
        raise FormatError("alternatives must be a list of names")
    u = Universe.of(alts)
    return RestrictedChoiceStructure(
        u,
        tuple(_sets(u, _field(doc, "domain", "structure"))),
        tuple(_sets(u, _field(doc, "realizable", "structure"))),
    )


def structure_to_json(st: RestrictedChoiceStructure) -> dict:
    u = st.universe
    return {
        "format_version": FORMAT_VERSION,
        "alternatives": list(u.names),
        "domain": _names(u, st.domain),
        "realizable": _names(u, st.realizable),
    }


def table_from_json(doc: Any, structure: RestrictedChoiceStructure) -> ChoiceFunctionTable:
    doc = _check_version(doc, "table")
    u = structure.universe
    entries = _field(doc, "map", "table")
    if not isinstance(entries, list):
        raise FormatError("table map must be a list of {in, out} objects")
    choices: dict[AltSet, AltSet] = {}
    for entry in entries:
        if not isinstance(entry, dict):
            raise FormatError("table map entries must be objects")
        s = _set(u, _field(entry, "in", "table entry"))
        if s in choices:
            raise FormatError(f"input {u.format(s)} appears twice in the table")
        choices[s] = _set(u, _field(entry, "out", "table entry"))
    return ChoiceFunctionTable(structure, _set(u, _field(doc, "fallback", "table")), choices)


def table_to_json(table: ChoiceFunctionTable) -> dict:
    u = table.structure.universe
    return {
        "format_version": FORMAT_VERSION,
        "fallback": u.names_of(table.fallback),
        "map": [
            {"in": u.names_of(s), "out": u.names_of(table(s))}
            for s in table.structure.domain
        ],
    }


def order_from_json(doc: Any, u: Universe) -> tuple[LinearSetOrder, AltSet | None]:
    """The chain and, when present, the document's ``fallback``."""
    doc = _check_version(doc, "order")
    chain = _sets(u, _field(doc, "carrier_chain", "order"))
    fallback = _set(u, doc["fallback"]) if "fallback" in doc else None
    return LinearSetOrder(tuple(chain)), fallback


def order_to_json(order: LinearSetOrder, u: Universe, fallback: AltSet | None = None) -> dict:
    doc = {"format_version": FORMAT_VERSION, "carrier_chain": _names(u, order.chain)}
    if fallback is not None:
        doc["fallback"] = u.names_of(fallback)
    return doc


# relations, reports, traces -------------------------------------------------

def relation_to_json(rel: Relation, u: Universe) -> dict:
    return {
        "carrier": _names(u, rel.carrier),
        "pairs": [list(p) for p in rel.sorted_pairs()],
    }


def relation_from_json(doc: Any, u: Universe) -> Relation:
    if not isinstance(doc, dict):
        raise FormatError("relation document must be a JSON object")
    carrier = _sets(u, _field(doc, "carrier", "relation"))
    pairs = _field(doc, "pairs", "relation")
    if not isinstance(pairs, list) or not all(
        isinstance(p, list) and len(p) == 2 and all(isinstance(i, int) for i in p) for p in pairs
    ):
        raise FormatError("relation pairs must be a list of [i, j] index pairs")
    return Relation(tuple(carrier), frozenset((i, j) for i, j in pairs))


def report_to_json(report: AxiomReport, u: Universe) -> dict:
    return report.to_json(u)


def trace_to_json(trace: SynthesisTrace, u: Universe) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "image": _names(u, trace.image),
        "encoded": relation_to_json(trace.encoded, u),
        "extended": relation_to_json(trace.extended, u),
        "linear_carrier": relation_to_json(trace.linear_carrier, u),
        "final": order_to_json(trace.final, u),
    }


# change operators -----------------------------------------------------------

def operator_from_json(doc: Any) -> ChangeOperator:
    """Operator document; family entries without ``chain`` are fitted canonically."""
    doc = _check_version(doc, "operator")
    alts = _field(doc, "alternatives", "operator")
    u = Universe.of(alts)
    domain = _sets(u, _field(doc, "domain", "operator"))
    entries = _field(doc, "family", "operator")
    if not isinstance(entries, list):
        raise FormatError("operator family must be a list")
    chains: dict[AltSet, LinearSetOrder] = {}
    reach: dict[AltSet, list[AltSet]] = {}
    for entry in entries:
        k = _set(u, _field(entry, "k", "family entry"))
        if k in chains or k in reach:
            raise FormatError(f"prior state {u.format(k)} appears twice")
        if "chain" in entry:
            chain = LinearSetOrder(tuple(_sets(u, entry["chain"])))
            if "realizable" in entry and sorted(_sets(u, entry["realizable"])) != sorted(chain.chain):
                raise FormatError(f"chain for {u.format(k)} must list exactly its realizable sets")
            chains[k] = chain
        else:
            reach[k] = _sets(u, _field(entry, "realizable", "family entry"))
    if reach:
        fitted = fit_family(u, domain, {**reach, **{k: c.chain for k, c in chains.items()}})
        chains = {**fitted.family, **chains}
    return ChangeOperator(u, tuple(domain), chains)


def operator_to_json(op: ChangeOperator) -> dict:
    u = op.universe
    return {
        "format_version": FORMAT_VERSION,
        "alternatives": list(u.names),
        "domain": _names(u, op.domain),
        "family": [
            {
                "k": u.names_of(k),
                "realizable": _names(u, op.realizable(k)),
                "chain": _names(u, op.family[k].chain),
            }
            for k in op.domain
        ],
    }


# argumentation semantics ----------------------------------------------------

def semantics_from_json(doc: Any) -> ChoiceExtensionSemantics:
    doc = _check_version(doc, "semantics")
    real = _field(doc, "realizable", "semantics")
    if isinstance(real, str):
        if real not in SEMANTICS:
            raise FormatError(f"realizable must be one of {', '.join(SEMANTICS)} or {{'explicit': [...]}}")
    elif isinstance(real, dict) and isinstance(real.get("explicit"), list):
        real = real["explicit"]
    else:
        raise FormatError("realizable must be a semantics name or {'explicit': [...]}")
    fallback = _field(doc, "fallback", "semantics")
    chain = doc.get("chain")
    return semantics_from_names(real, fallback, chain)


def semantics_to_json(sem: ChoiceExtensionSemantics) -> dict:
    real = sem.realizable if isinstance(sem.realizable, str) else {
        "explicit": [sorted(e) for e in sem.realizable]
    }
    doc = {"format_version": FORMAT_VERSION, "realizable": real, "fallback": sorted(sem.fallback)}
    if sem.chain is not None:
        doc["chain"] = [sorted(e) for e in sem.chain]
    return doc
