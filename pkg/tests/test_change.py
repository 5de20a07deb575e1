import random

import pytest

import snack
from snack import K, s
from restricted_choice import LinearSetOrder, Universe
from restricted_choice.axioms import LCR_AXIOMS, check_lcr, replay
from restricted_choice.change import (
    ChangeOperator,
    TabulatedOperator,
    fit_family,
    lcr_certify,
    reconstruct,
    slice_table,
)
from restricted_choice.errors import AxiomViolation, FamilyInvalid, NotUnionClosed, OutOfDomain
from restricted_choice.structures import is_union_closed_family
from restricted_choice.synthesis import existence_order
from restricted_choice import RestrictedChoiceStructure


def snack_operator():
    family = {}
    for k in snack.DOMAIN:
        reach = sorted(set(snack.REALIZABLE) | {k})
        family[k] = existence_order(RestrictedChoiceStructure(snack.U, snack.DOMAIN, reach), k)
    family[K] = snack.order()
    return ChangeOperator(snack.U, snack.DOMAIN, family)


def test_revision_golden_values():
    op = snack_operator()
    assert op.revise(K, s("nachos", "pretzels", "dips")) == s("pretzels")
    assert op.revise(K, s("nachos", "dips")) == K


def test_superset_input_keeps_prior_state():
    op = snack_operator()
    nd = s("nachos", "dips")
    assert op.revise(nd, nd) == nd
    assert op.revise(nd, nd | s("chocolate")) == nd


def test_out_of_domain():
    op = snack_operator()
    with pytest.raises(OutOfDomain):
        op.revise(K, s("nachos"))


def test_snack_operator_is_linear():
    assert all(r.holds for r in lcr_certify(snack_operator()))


def test_trivial_family_is_constant():
    u = Universe(("a", "b"))
    domain = (1, 2, 3)
    op = fit_family(u, domain, {k: [k] for k in domain})
    assert all(op.revise(k, x) == k for k in domain for x in domain)
    assert all(r.holds for r in lcr_certify(op))


def test_fit_family_errors():
    u = Universe(("a", "b"))
    with pytest.raises(FamilyInvalid):
        fit_family(u, (1, 2, 3), {1: [1], 2: [1], 3: [3]})
    with pytest.raises(FamilyInvalid):
        fit_family(u, (1, 2, 3), {1: [1], 2: [2]})
    with pytest.raises(NotUnionClosed):
        fit_family(u, (1, 2), {1: [1], 2: [2]})


def test_operator_invariants_checked():
    u = Universe(("a", "b"))
    with pytest.raises(FamilyInvalid):  # K must come first
        ChangeOperator(u, (1, 2, 3), {1: LinearSetOrder((2, 1)), 2: LinearSetOrder((2,)),
                                      3: LinearSetOrder((3,))})
    with pytest.raises(FamilyInvalid):  # missing prior state
        ChangeOperator(u, (1, 2, 3), {1: LinearSetOrder((1,))})


def test_mutated_operator_fails_with_replayable_witness():
    op = snack_operator()
    table = op.tabulate()
    nd = s("nachos", "dips")
    table[(nd, nd | s("pretzels"))] = s("pretzels")
    bad = TabulatedOperator(op.universe, op.domain, table)
    report = check_lcr(bad, "LCR2")
    assert not report.holds
    k, *rest = report.witness
    assert k == nd
    assert replay("LCR2", rest, lambda x: bad.revise(k, x), k)
    with pytest.raises(AxiomViolation):
        reconstruct(bad)


def test_reconstruct_round_trip():
    op = snack_operator()
    again = reconstruct(op)
    assert again.tabulate() == op.tabulate()


def test_slice_realizable_is_image():
    op = snack_operator()
    table = slice_table(op, K)
    assert set(table.structure.realizable) == {op.revise(K, x) for x in op.domain}


def _union_closed_domain(rng, n):
    seeds = rng.sample(range(1, 1 << n), rng.randint(1, min(3, (1 << n) - 1)))
    dom = set(seeds)
    while True:
        more = {a | b for a in dom for b in dom} - dom
        if not more:
            return sorted(dom)
        dom |= more


def test_random_fitted_operators_certify_and_reconstruct():
    rng = random.Random(8)
    for _ in range(60):
        n = rng.randint(1, 3)
        u = Universe(tuple("abc"[:n]))
        domain = _union_closed_domain(rng, n)
        assert is_union_closed_family(domain)
        fam = {k: {k} | set(rng.sample(domain, rng.randint(0, len(domain)))) for k in domain}
        op = fit_family(u, domain, fam)
        reports = lcr_certify(op)
        assert [r.axiom for r in reports] == list(LCR_AXIOMS)
        assert all(r.holds for r in reports)
        assert reconstruct(op).tabulate() == op.tabulate()
        for k in domain:
            for x in domain:
                out = op.revise(k, x)
                assert out & ~x == 0 or out == k
                if k & ~x == 0:
                    assert out == k


def test_random_operators_certify_iff_reconstructible():
    rng = random.Random(9)
    linear = other = 0
    for _ in range(600):
        n = rng.randint(1, 3)
        u = Universe(tuple("abc"[:n]))
        domain = _union_closed_domain(rng, n)
        table = {(k, x): rng.choice([k] + [d for d in domain if d & ~x == 0])
                 for k in domain for x in domain}
        op = TabulatedOperator(u, domain, table)
        certified = all(r.holds for r in lcr_certify(op))
        try:
            rebuilt = reconstruct(op)
        except AxiomViolation:
            rebuilt = None
        assert certified == (rebuilt is not None)
        if rebuilt is not None:
            assert rebuilt.tabulate() == op.tabulate()
            linear += 1
        else:
            other += 1
    assert linear and other
