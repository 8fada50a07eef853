import numpy as np

from projlogic import operators as ops
from projlogic.families import diagonal_family, spin_family
from projlogic.theorems import (
    FunctionalPoset, indicator_family, operator_family_values, theorem_main_harness,
    theorem_mik_check,
)


def test_indicator_family_is_boolean():
    vals, names = indicator_family(3)
    r = theorem_mik_check(vals, names)
    assert r.passed and r.boolean and r.size == 8


def test_missing_complement_reported():
    vals, names = indicator_family(2)
    r = theorem_mik_check(vals[:-1], names[:-1])
    assert not r.hypotheses["complement_closed"].passed
    assert r.hypotheses["complement_closed"].witness == ("{}",)
    assert r.conclusions == {}


def test_operator_family_functional_logic(rng):
    gens = [e.generator for e in spin_family()] + [np.zeros((2, 2)), np.eye(2)]
    v, pts = operator_family_values(gens, rng)
    r = theorem_mik_check(v, ["e1", "e2", "+", "-", "0", "I"])
    assert r.passed and r.boolean is False


def test_functional_poset_bounds():
    vals, names = indicator_family(2)
    P = FunctionalPoset(vals, names)
    meet, join = P.tables()
    a, b = names.index("{0}"), names.index("{1}")
    assert names[join[a, b]] == "{0,1}" and names[meet[a, b]] == "{}"


def test_main_harness_diagonal(rng):
    r = theorem_main_harness(diagonal_family(4), "operator", rng)
    assert r.passed and len(r.idempotent_labels) == 16
    assert r.boolean_sublattices == [tuple(sorted(r.idempotent_labels))]


def test_main_harness_spin(rng):
    r = theorem_main_harness(spin_family(), "operator", rng)
    assert r.hypotheses_hold and r.passed
    assert r.boolean_sublattices == r.commuting_subfamilies
    assert r.boolean_sublattices == [("+", "0", "I", "~+"), ("0", "I", "e1", "~e1")]


def test_pointwise_rule_is_degenerate(rng):
    r = theorem_main_harness(spin_family(), "pointwise", rng)
    assert r.degenerate and r.idempotent_labels == ["0", "I"]
    assert set(r.dropped_labels) == {"e1", "~e1", "+", "~+"}


def test_non_idempotent_events_dropped(rng):
    from projlogic.star import FuzzyEvent
    fam = spin_family() + [FuzzyEvent(0.5 * ops.projector_onto([1, 0]), "half")]
    r = theorem_main_harness(fam, "operator", rng)
    assert "half" in r.dropped_labels and r.passed
