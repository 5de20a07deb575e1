"""Finite restricted choice structures.

Evaluate fallback choice functions defined by linear orders on sets, check
their postulates with replayable counterexamples, and synthesize a
witnessing order from any choice table that satisfies them.
"""

from .axioms import (
    AxiomReport,
    check_axiom,
    check_lca,
    check_lcr,
    check_ss,
    check_ss_e,
    check_suite,
    replay,
    replay_table,
)
from .change import ChangeOperator, TabulatedOperator, fit_family, lcr_certify, reconstruct
from .argumentation import (
    ArgumentationFramework,
    ChoiceExtensionSemantics,
    extensions,
    lca_certify,
    parse_apx,
    pi_evaluate,
    pi_table,
)
from .errors import ChoiceError
from .oracle import decide_representable, enumerate_orders, enumerate_tables, sweep
from .relations import Relation, linearize, suzumura_extension, transitive_closure
from .sets import AltSet, Universe
from .structures import (
    ChoiceFunctionTable,
    LinearSetOrder,
    RestrictedChoiceStructure,
    evaluate,
    table_from_order,
)
from .synthesis import SynthesisTrace, existence_order, synthesize

__version__ = "0.1.0"

__all__ = [
    "AltSet",
    "ArgumentationFramework",
    "AxiomReport",
    "ChangeOperator",
    "ChoiceError",
    "ChoiceExtensionSemantics",
    "ChoiceFunctionTable",
    "LinearSetOrder",
    "Relation",
    "RestrictedChoiceStructure",
    "SynthesisTrace",
    "TabulatedOperator",
    "Universe",
    "check_axiom",
    "check_lca",
    "check_lcr",
    "check_ss",
    "check_ss_e",
    "check_suite",
    "decide_representable",
    "enumerate_orders",
    "enumerate_tables",
    "evaluate",
    "existence_order",
    "extensions",
    "fit_family",
    "lca_certify",
    "lcr_certify",
    "linearize",
    "parse_apx",
    "pi_evaluate",
    "pi_table",
    "reconstruct",
    "replay",
    "replay_table",
    "suzumura_extension",
    "sweep",
    "synthesize",
    "table_from_order",
    "transitive_closure",
]
