"""Decision procedures for the choice postulates, with counterexample witnesses.

Every checker sweeps the domain in canonical order and stops at the first
violation.  Witness layouts (all entries are alternative sets):

* SS0, SS1, SS2: ``[S]``
* SS3, SS4: ``[S1, S2]``
* SS5: a cycle ``[S0, ..., Sn]`` with ``choice(Si | Si+1) == Si`` and
  ``choice(Sn | S0) == Sn``
* SS5E: the cycle interleaved with its covering inputs,
  ``[S0, W01, S1, W12, ..., Sn, Wn0]``
* SS6: ``[S1, S2, S3]``; SS6E: ``[S1, S2, S3, S1|S2, S1|S3]``

The change (LCR) and argumentation (LCA) families reuse the same sweeps; LCR
witnesses are prefixed by the prior state ``K``.

SS5 and SS5E are decided as acyclicity of a "beats" digraph.  A violating
sequence always contains a simple cycle of that digraph (two distinct sets
cannot beat each other, since the chosen value is unique), and every
simple cycle is itself a violating sequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Protocol, Sequence

from .sets import AltSet, is_subset
from .structures import ChoiceFunctionTable

SS_AXIOMS = ("SS0", "SS1", "SS2", "SS3", "SS4", "SS5", "SS6")
SSE_AXIOMS = ("SS5E", "SS6E")
LCR_AXIOMS = ("LCR1", "LCR2", "LCR3", "LCR4", "LCR5", "LCR6")
LCA_AXIOMS = ("LCA1", "LCA2", "LCA3", "LCA4", "LCA5", "LCA6")

SUITES: dict[str, tuple[str, ...]] = {
    "ss": SS_AXIOMS,
    "sse": ("SS0", "SS1", "SS2", "SS3", "SS4", "SS5E", "SS6E"),
    "lcr": LCR_AXIOMS,
    "lca": LCA_AXIOMS,
}


@dataclass(frozen=True)
class AxiomReport:
    axiom: str
    holds: bool
    witness: tuple[AltSet, ...] = field(default=())

    def to_json(self, universe) -> dict:
        return {
            "axiom": self.axiom,
            "holds": self.holds,
            "witness": [universe.names_of(s) for s in self.witness],
        }


class _Choice:
    """The data every sweep needs: inputs, the choice map, fallback, realizable sets."""

    __slots__ = ("domain", "present", "choose", "k", "realizable")

    def __init__(self, domain: Sequence[AltSet], choose: Mapping[AltSet, AltSet],
                 k: AltSet, realizable: Sequence[AltSet]):
        self.domain = list(domain)
        self.present = set(self.domain)
        self.choose = choose
        self.k = k
        self.realizable = list(realizable)

    @classmethod
    def of(cls, table: ChoiceFunctionTable) -> "_Choice":
        st = table.structure
        return cls(st.domain, table.choices, table.fallback, st.realizable)


def _ss0(c: _Choice):
    for s in c.domain:
        if any(is_subset(e, s) for e in c.realizable) and not is_subset(c.choose[s], s):
            return (s,)


def _ss1(c: _Choice):
    for s in c.domain:
        out = c.choose[s]
        if not is_subset(out, s) and out != c.k:
            return (s,)


def _ss2(c: _Choice):
    for s in c.domain:
        if is_subset(c.k, s) and c.choose[s] != c.k:
            return (s,)


def _ss3(c: _Choice):
    ch = c.choose
    for i, s1 in enumerate(c.domain):
        o1 = ch[s1]
        for s2 in c.domain[i + 1 :]:
            o2 = ch[s2]
            if o1 != o2 and is_subset(o1, s2) and is_subset(o2, s1):
                return (s1, s2)


def _ss4(c: _Choice):
    ch = c.choose
    bad = [s for s in c.domain if not is_subset(ch[s], s)]
    if not bad:
        return None
    for s1 in c.domain:
        if not is_subset(ch[s1], s1):
            continue
        for s2 in bad:
            if is_subset(s1, s2):
                return (s1, s2)


def _find_cycle(vertices: Sequence[AltSet], succ: Mapping[AltSet, list[AltSet]]) -> list[AltSet] | None:
    """First directed cycle found by DFS in canonical order, as a vertex list."""
    WHITE, GREY, BLACK = 0, 1, 2
    color = {v: WHITE for v in vertices}
    for root in vertices:
        if color[root] != WHITE:
            continue
        path = [root]
        iters = [iter(succ.get(root, ()))]
        color[root] = GREY
        while iters:
            for nxt in iters[-1]:
                state = color.get(nxt, WHITE)
                if state == GREY:
                    return path[path.index(nxt):]
                if state == WHITE:
                    color[nxt] = GREY
                    path.append(nxt)
                    iters.append(iter(succ.get(nxt, ())))
                    break
            else:
                color[path.pop()] = BLACK
                iters.pop()
    return None


def _ss5(c: _Choice):
    ch, present = c.choose, c.present
    succ: dict[AltSet, list[AltSet]] = {}
    for x in c.domain:
        for y in c.domain:
            if x != y and (x | y) in present and ch[x | y] == x:
                succ.setdefault(x, []).append(y)
    cycle = _find_cycle(c.domain, succ)
    return tuple(cycle) if cycle else None


def _ss5e(c: _Choice):
    ch = c.choose
    succ: dict[AltSet, list[AltSet]] = {}
    cover: dict[tuple[AltSet, AltSet], AltSet] = {}
    for w in c.domain:
        x = ch[w]
        if not is_subset(x, w):
            continue
        for y in c.domain:
            if y != x and is_subset(y, w) and (x, y) not in cover:
                cover[(x, y)] = w
                succ.setdefault(x, []).append(y)
    for x in succ:
        succ[x].sort()
    cycle = _find_cycle(c.domain, succ)
    if not cycle:
        return None
    witness = []
    for i, x in enumerate(cycle):
        y = cycle[(i + 1) % len(cycle)]
        witness += [x, cover[(x, y)]]
    return tuple(witness)


def _ss6_sweep(c: _Choice):
    ch, present = c.choose, c.present
    for s1 in c.domain:
        for s2 in c.domain:
            u = s1 | s2
            if u not in present:
                continue
            s3 = ch[u]
            v = s1 | s3
            if v in present and ch[v] != s3:
                return s1, s2, s3, u, v


def _ss6(c: _Choice):
    found = _ss6_sweep(c)
    return found[:3] if found else None


def _ss6e(c: _Choice):
    return _ss6_sweep(c)


_SWEEPS: dict[str, Callable[[_Choice], tuple | None]] = {
    "SS0": _ss0, "SS1": _ss1, "SS2": _ss2, "SS3": _ss3, "SS4": _ss4,
    "SS5": _ss5, "SS6": _ss6, "SS5E": _ss5e, "SS6E": _ss6e,
}

# LCR and LCA postulates are SS1..SS6 with the operator substituted.
_FAMILY_BASE = {f"{fam}{i}": f"SS{i}" for fam in ("LCR", "LCA") for i in range(1, 7)}


def _run(axiom: str, c: _Choice) -> AxiomReport:
    base = _FAMILY_BASE.get(axiom, axiom)
    witness = _SWEEPS[base](c)
    return AxiomReport(axiom, witness is None, tuple(witness or ()))


def check_ss(table: ChoiceFunctionTable, axiom: str) -> AxiomReport:
    if axiom not in SS_AXIOMS:
        raise ValueError(f"{axiom!r} is not one of {', '.join(SS_AXIOMS)}")
    return _run(axiom, _Choice.of(table))


def check_ss_e(table: ChoiceFunctionTable, axiom: str) -> AxiomReport:
    if axiom not in SSE_AXIOMS:
        raise ValueError(f"{axiom!r} is not one of {', '.join(SSE_AXIOMS)}")
    return _run(axiom, _Choice.of(table))


def check_axiom(table: ChoiceFunctionTable, axiom: str) -> AxiomReport:
    """Any SS-family postulate, or an LCA/LCR postulate read against this single table."""
    if axiom not in _SWEEPS and axiom not in _FAMILY_BASE:
        raise ValueError(f"unknown axiom {axiom!r}")
    return _run(axiom, _Choice.of(table))


def check_suite(table: ChoiceFunctionTable, suite: str = "sse") -> list[AxiomReport]:
    c = _Choice.of(table)
    return [_run(ax, c) for ax in SUITES[suite]]


def all_hold(table: ChoiceFunctionTable, axioms: Sequence[str]) -> bool:
    """Short-circuiting conjunction of the given postulates."""
    c = _Choice.of(table)
    return all(_SWEEPS[_FAMILY_BASE.get(ax, ax)](c) is None for ax in axioms)


def suite_holds(table: ChoiceFunctionTable, suite: str = "sse") -> bool:
    return all_hold(table, SUITES[suite])


def first_violation(table: ChoiceFunctionTable, suite: str = "sse") -> AxiomReport | None:
    c = _Choice.of(table)
    for ax in SUITES[suite]:
        report = _run(ax, c)
        if not report.holds:
            return report
    return None


class ChangeLike(Protocol):
    domain: tuple[AltSet, ...]

    def revise(self, k: AltSet, s: AltSet) -> AltSet: ...


def check_lcr(op: ChangeLike, axiom: str) -> AxiomReport:
    """LCR sweep: the SS sweep for ``K * .`` repeated for every prior state ``K``."""
    if axiom not in LCR_AXIOMS:
        raise ValueError(f"{axiom!r} is not one of {', '.join(LCR_AXIOMS)}")
    for k in op.domain:
        choose = {s: op.revise(k, s) for s in op.domain}
        c = _Choice(op.domain, choose, k, ())
        witness = _SWEEPS[_FAMILY_BASE[axiom]](c)
        if witness is not None:
            return AxiomReport(axiom, False, (k, *witness))
    return AxiomReport(axiom, True)


def check_lca(semantics, af, axiom: str) -> AxiomReport:
    """LCA sweep over the tabulated choice of ``semantics`` at ``af``."""
    from .argumentation import pi_table

    if axiom not in LCA_AXIOMS:
        raise ValueError(f"{axiom!r} is not one of {', '.join(LCA_AXIOMS)}")
    return _run(axiom, _Choice.of(pi_table(semantics, af)))


def replay(
    axiom: str,
    witness: Sequence[AltSet],
    choose: Mapping[AltSet, AltSet] | Callable[[AltSet], AltSet],
    k: AltSet,
    realizable: Sequence[AltSet] = (),
    domain: Sequence[AltSet] | None = None,
) -> bool:
    """True iff ``witness`` instantiates a violation of ``axiom``'s literal statement.

    Evaluates the postulate body directly on the witness, independent of the
    sweeps above.  For LCR axioms pass the witness without its leading ``K``.
    """
    f = choose if callable(choose) else choose.__getitem__
    dom = None if domain is None else set(domain)

    def inputs_ok(*sets):
        return dom is None or all(s in dom for s in sets)

    base = _FAMILY_BASE.get(axiom, axiom)
    w = list(witness)
    try:
        if base == "SS0":
            (s,) = w
            return inputs_ok(s) and any(is_subset(e, s) for e in realizable) and not is_subset(f(s), s)
        if base == "SS1":
            (s,) = w
            return inputs_ok(s) and not is_subset(f(s), s) and f(s) != k
        if base == "SS2":
            (s,) = w
            return inputs_ok(s) and is_subset(k, s) and f(s) != k
        if base == "SS3":
            s1, s2 = w
            return (inputs_ok(s1, s2) and is_subset(f(s1), s2) and is_subset(f(s2), s1)
                    and f(s1) != f(s2))
        if base == "SS4":
            s1, s2 = w
            return (inputs_ok(s1, s2) and is_subset(f(s1), s1) and is_subset(s1, s2)
                    and not is_subset(f(s2), s2))
        if base == "SS5":
            n = len(w) - 1
            if n < 1 or w[0] == w[n]:
                return False
            unions = [w[i] | w[i + 1] for i in range(n)] + [w[n] | w[0]]
            if not inputs_ok(*w, *unions):
                return False
            return all(f(w[i] | w[i + 1]) == w[i] for i in range(n)) and f(w[n] | w[0]) == w[n]
        if base == "SS5E":
            cyc, covers = w[0::2], w[1::2]
            n = len(cyc) - 1
            if n < 1 or len(covers) != len(cyc) or cyc[0] == cyc[n]:
                return False
            if not inputs_ok(*cyc, *covers):
                return False
            for i in range(n + 1):
                a, b = cyc[i], cyc[(i + 1) % (n + 1)]
                if not is_subset(a | b, covers[i]) or f(covers[i]) != a:
                    return False
            return True
        if base == "SS6":
            s1, s2, s3 = w
            if not inputs_ok(s1, s2, s3, s1 | s2, s1 | s3):
                return False
            return f(s1 | s2) == s3 and f(s1 | s3) != s3
        if base == "SS6E":
            s1, s2, s3, s12, s13 = w
            return (inputs_ok(s1, s2, s3, s12, s13) and s12 == s1 | s2 and s13 == s1 | s3
                    and f(s12) == s3 and f(s13) != s3)
    except (KeyError, ValueError):
        return False
    raise ValueError(f"unknown axiom {axiom!r}")


def replay_table(report: AxiomReport, table: ChoiceFunctionTable) -> bool:
    st = table.structure
    return replay(report.axiom, report.witness, table.choices, table.fallback,
                  st.realizable, st.domain)
