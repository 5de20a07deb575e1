import itertools
import random

import pytest

import snack
from snack import K, s
from restricted_choice.argumentation import (
    ArgumentationFramework,
    extensions,
    is_admissible,
    is_conflict_free,
    lca_certify,
    parse_apx,
    pi_evaluate,
    pi_table,
    semantics_from_names,
)
from restricted_choice.axioms import LCA_AXIOMS, check_lca, replay_table
from restricted_choice.errors import (
    ApxSyntaxError,
    FallbackNotRealizable,
    InvalidOrder,
    TooLarge,
    UndeclaredArgument,
)
from restricted_choice.synthesis import synthesize
from restricted_choice.structures import table_from_order


def snack_semantics():
    u = snack.U
    return semantics_from_names(
        [u.names_of(e) for e in snack.REALIZABLE],
        u.names_of(K),
        [u.names_of(e) for e in snack.CHAIN],
    )


def figure():
    return parse_apx(snack.FIGURE_APX)


def test_parse_figure():
    af = figure()
    assert af.arguments == snack.ALTERNATIVES
    assert af.attacks == snack.FIGURE_ATTACKS
    assert parse_apx(af.to_apx()) == af


def test_parse_self_attack():
    af = parse_apx("arg(a).\natt(a,a).")
    assert af.arguments == ("a",) and af.attacks == {("a", "a")}


def test_parse_errors():
    with pytest.raises(UndeclaredArgument) as info:
        parse_apx("att(a,b).")
    assert info.value.extra["name"] == "a"
    with pytest.raises(ApxSyntaxError) as info:
        parse_apx("arg(a).\nargh\n")
    assert info.value.extra["line"] == 2
    with pytest.raises(ApxSyntaxError):
        parse_apx("% only a comment\n")


def test_framework_checks_endpoints():
    with pytest.raises(UndeclaredArgument):
        ArgumentationFramework(("a",), {("a", "b")})


def test_conflict_freeness_on_figure():
    af = figure()
    u = af.universe
    assert is_conflict_free(af, u.set(["pretzels"]))
    assert not is_conflict_free(af, u.set(["pretzels", "dips"]))
    assert is_conflict_free(af, 0) and is_admissible(af, 0)


def test_stable_for_single_attack():
    af = parse_apx("arg(a).\narg(b).\natt(a,b).\n")
    assert extensions(af, "stable") == [af.universe.set(["a"])]
    assert extensions(af, "admissible") == [0, 1]


def test_unknown_semantics():
    with pytest.raises(ValueError):
        extensions(figure(), "grounded")


def test_guard():
    af = ArgumentationFramework(tuple(f"x{i}" for i in range(21)), ())
    with pytest.raises(TooLarge):
        extensions(af, "stable")


def _random_af(rng, n):
    args = tuple(f"a{i}" for i in range(n))
    attacks = {(x, y) for x, y in itertools.product(args, repeat=2) if rng.random() < 0.3}
    return ArgumentationFramework(args, attacks)


def test_semantics_containments():
    rng = random.Random(4)
    for _ in range(40):
        af = _random_af(rng, rng.randint(1, 5))
        stable = set(extensions(af, "stable"))
        admissible = set(extensions(af, "admissible"))
        cf = set(extensions(af, "conflict_free"))
        assert stable <= admissible <= cf


def test_pi_golden_values():
    af, sem = figure(), snack_semantics()
    assert pi_evaluate(sem, af, s("nachos", "pretzels", "dips")) == s("pretzels")
    assert pi_evaluate(sem, af, s("nachos", "dips")) == K
    assert pi_evaluate(sem, af, K) == K


def test_snack_semantics_is_linear():
    reports = lca_certify(snack_semantics(), figure())
    assert [r.axiom for r in reports] == list(LCA_AXIOMS)
    assert all(r.holds for r in reports)


def test_round_trip_through_synthesis():
    af, sem = figure(), snack_semantics()
    table = pi_table(sem, af)
    final = synthesize(table).final
    assert table_from_order(final, K, table.structure) == table


def test_fallback_not_minimal_breaks_lca2():
    af = parse_apx("arg(a).\narg(b).\n")
    sem = semantics_from_names([["a"], ["b"]], ["b"], [["a"], ["b"]])
    report = check_lca(sem, af, "LCA2")
    assert not report.holds
    assert replay_table(report, pi_table(sem, af))


def test_empty_fallback_swallows_everything():
    af = figure()
    sem = semantics_from_names("conflict_free", [])
    table = pi_table(sem, af)
    assert set(table.choices.values()) == {0}


def test_conflict_free_outputs_stay_conflict_free():
    rng = random.Random(6)
    for _ in range(20):
        af = _random_af(rng, rng.randint(1, 4))
        cf = extensions(af, "conflict_free")
        nonempty = [e for e in cf if e]
        if not nonempty:
            continue
        k = rng.choice(nonempty)
        sem = semantics_from_names("conflict_free", af.universe.names_of(k))
        table = pi_table(sem, af)
        for x, out in table.choices.items():
            assert out == k or is_conflict_free(af, out)


def test_configuration_errors():
    af = figure()
    with pytest.raises(FallbackNotRealizable):
        pi_table(semantics_from_names("stable", ["pretzels", "dips"]), af)
    with pytest.raises(InvalidOrder):
        pi_table(semantics_from_names([["chocolate"]], ["chocolate"], [["pretzels"]]), af)
