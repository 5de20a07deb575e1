import pytest

import snack
from snack import K, s
from restricted_choice import ChoiceFunctionTable, LinearSetOrder, RestrictedChoiceStructure, Universe
from restricted_choice.errors import CarrierNotRealizable, InvalidOrder, InvalidStructure, InvalidTable
from restricted_choice.structures import (
    evaluate,
    is_k_minimal,
    is_smooth,
    is_union_closed,
    min_of_input,
    table_from_order,
)

U3 = Universe(("a", "b", "c"))


def test_snack_structure_shape():
    st = snack.structure()
    assert len(st.realizable) == 7
    assert len(st.domain) == 24
    assert is_union_closed(st)
    assert s("nachos", "pretzels", "dips") in st.domain_set


def test_snack_golden_values():
    order = snack.order()
    assert evaluate(order, K, s("nachos", "pretzels", "dips")) == s("pretzels")
    assert evaluate(order, K, s("nachos", "dips")) == K
    assert evaluate(order, K, K) == K
    assert is_k_minimal(order, K)


def test_realizable_must_be_inputs():
    with pytest.raises(InvalidStructure):
        RestrictedChoiceStructure(U3, (1,), (1, 2))


def test_empty_parts_rejected():
    with pytest.raises(InvalidStructure):
        RestrictedChoiceStructure(U3, (), ())
    with pytest.raises(InvalidStructure):
        RestrictedChoiceStructure(U3, (1,), ())


def test_domain_bounded_by_universe():
    with pytest.raises(InvalidStructure):
        RestrictedChoiceStructure(U3, (8,), (8,))


def test_from_names():
    st = RestrictedChoiceStructure.from_names("ab", [["a"], ["a", "b"]], [["a"]])
    assert st.domain == (1, 3) and st.realizable == (1,)


def test_order_rejects_repeats():
    with pytest.raises(InvalidOrder):
        LinearSetOrder((1, 1))


def test_order_relation_round_trip():
    order = LinearSetOrder((4, 1, 2))
    assert LinearSetOrder.from_relation(order.relation) == order
    assert order.less(4, 2) and not order.less(2, 1)
    assert order.rank == {4: 0, 1: 1, 2: 2}


def test_min_of_input_and_fallback():
    order = LinearSetOrder((3, 1))
    assert min_of_input(order, 1) == 1
    assert min_of_input(order, 4) is None
    assert evaluate(order, 3, 4) == 3


def test_smoothness_on_finite_orders():
    st = RestrictedChoiceStructure(U3, range(1, 8), range(1, 8))
    assert is_smooth(LinearSetOrder(tuple(range(1, 8))), st)


def test_table_validation():
    st = RestrictedChoiceStructure(U3, (1, 2, 3), (1, 3))
    ChoiceFunctionTable(st, 3, {1: 1, 2: 3, 3: 1})
    with pytest.raises(InvalidTable):  # 2 has no realizable subset, so must take the fallback
        ChoiceFunctionTable(st, 3, {1: 1, 2: 1, 3: 1})
    with pytest.raises(InvalidTable):  # value not a subset of its input
        ChoiceFunctionTable(st, 3, {1: 3, 2: 3, 3: 1})
    with pytest.raises(InvalidTable):  # missing input
        ChoiceFunctionTable(st, 3, {1: 1, 3: 1})
    with pytest.raises(InvalidTable):  # fallback not realizable
        ChoiceFunctionTable(st, 2, {1: 1, 2: 2, 3: 1})


def test_table_from_order_checks_carrier():
    st = RestrictedChoiceStructure(U3, (1, 2, 3), (1, 3))
    with pytest.raises(CarrierNotRealizable):
        table_from_order(LinearSetOrder((1, 2)), 1, st)


def test_tables_compare_by_value():
    a, b = snack.table(), snack.table()
    assert a == b and hash(a) == hash(b)


def test_union_closed_detection():
    st = RestrictedChoiceStructure(U3, (1, 2), (1,))
    assert not is_union_closed(st)
