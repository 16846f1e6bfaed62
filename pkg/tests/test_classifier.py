import math

import pytest
from hypothesis import given, settings, strategies as st

from polylex.classifier import (
    Classification,
    JaccardClassifier,
    Profile,
    build_class_profiles,
    build_noun_profiles,
    class_members,
    classify,
    jaccard,
    mi,
)
from polylex.matcher import SCOPE_ALL, SCOPE_CORELEX, VERB_HEAD, Attribute, CooccurrenceTable
from polylex.semtypes import TagAssignment


def _table(scope, n, rows):
    """rows: (noun, verb, count) triples rendered as verb-head attributes."""
    table = CooccurrenceTable(scope, n)
    for noun, verb, count in rows:
        table.add(noun, Attribute(VERB_HEAD, verb), count)
    for noun in {r[0] for r in rows}:
        table.noun_marginals[noun] = sum(c for nn, _, c in rows if nn == noun)
    return table


def test_mi_closed_forms():
    assert mi(2, 2, 4, 8) == pytest.approx(1.0, abs=1e-12)
    assert mi(1, 2, 4, 8) == pytest.approx(0.0, abs=1e-12)
    assert mi(1, 4, 4, 8) == pytest.approx(-1.0, abs=1e-12)


def test_mi_rejects_bad_counts():
    with pytest.raises(ValueError):
        mi(0, 2, 4, 8)
    with pytest.raises(ValueError):
        mi(1, 0, 4, 8)
    with pytest.raises(ValueError):
        mi(1, 2, 9, 8)


@settings(max_examples=1000, deadline=None)
@given(st.integers(1, 50), st.integers(1, 200), st.integers(1, 200), st.integers(200, 400))
def test_mi_symmetry(f_xy, f_x, f_y, n):
    assert mi(f_xy, f_x, f_y, n) == pytest.approx(mi(f_xy, f_y, f_x, n))


def test_mi_matches_direct_formula():
    assert mi(3, 7, 11, 100) == pytest.approx(
        math.log2((3 / 100) / ((7 / 100) * (11 / 100)))
    )


def test_jaccard_exact():
    assert jaccard({"a", "b"}, {"a", "b", "c", "d"}) == 0.5
    assert jaccard(set(), set()) == 0.0


@settings(max_examples=1000, deadline=None)
@given(
    st.sets(st.integers(0, 30), max_size=12),
    st.sets(st.integers(0, 30), max_size=12),
)
def test_jaccard_properties(s1, s2):
    j = jaccard(s1, s2)
    assert 0.0 <= j <= 1.0
    assert j == jaccard(s2, s1)
    if s1:
        assert jaccard(s1, s1) == 1.0
    if s1 and s2 and not (s1 & s2):
        assert j == 0.0


def test_class_members():
    assignments = {
        "b": TagAssignment("b", ("t1",)),
        "a": TagAssignment("a", ("t1", "t2")),
    }
    assert class_members(assignments) == {"t1": ["a", "b"], "t2": ["a"]}


def test_class_profile_pools_members():
    table = _table(SCOPE_CORELEX, 100, [("a", "v", 2), ("b", "v", 2)])
    assignments = {n: TagAssignment(n, ("t",)) for n in ("a", "b")}
    profiles = build_class_profiles(table, assignments)
    attr = Attribute(VERB_HEAD, "v")
    # pooled joint 4, class marginal 4, attribute marginal 4
    assert profiles["t"].mi[attr] == pytest.approx(mi(4, 4, 4, 100))


def test_class_profile_exclude_removes_counts():
    table = _table(SCOPE_CORELEX, 100, [("a", "v", 2), ("b", "v", 2)])
    assignments = {n: TagAssignment(n, ("t",)) for n in ("a", "b")}
    profiles = build_class_profiles(table, assignments, exclude="a")
    attr = Attribute(VERB_HEAD, "v")
    assert profiles["t"].mi[attr] == pytest.approx(mi(2, 2, 2, 100))


def test_noun_profile_attribute_set_uses_floor():
    table = _table(SCOPE_ALL, 100, [("a", "common", 1)])
    table.add("b", Attribute(VERB_HEAD, "common"), 99)
    table.noun_marginals["b"] = 99
    profiles = build_noun_profiles(table)
    # joint 1, noun 1, attr 100: MI is exactly 0, below the strict floor
    assert profiles["a"].mi[Attribute(VERB_HEAD, "common")] == pytest.approx(0.0)
    assert profiles["a"].attributes == frozenset()


def test_classify_tie_breaks_lexicographically():
    noun = Profile("x", {}, frozenset({1, 2}))
    classes = {
        "beta": Profile("beta", {}, frozenset({1, 2})),
        "alpha": Profile("alpha", {}, frozenset({1, 2})),
    }
    result = classify(noun, classes)
    assert result == Classification("x", "alpha", 1.0)


def test_classify_zero_score_unassigned():
    noun = Profile("x", {}, frozenset({1}))
    classes = {"a": Profile("a", {}, frozenset({2}))}
    assert classify(noun, classes).assigned is None


def _synthetic_tables(n_classes=4, verbs_per_class=2):
    rows = []
    assignments = {}
    for c in range(n_classes):
        cname = "class%d" % c
        for m in ("x", "y"):
            noun = "n%d%s" % (c, m)
            assignments[noun] = TagAssignment(noun, (cname,))
            for v in range(verbs_per_class):
                rows.append((noun, "v%d%d" % (c, v), 2))
    corelex = _table(SCOPE_CORELEX, 200, rows)
    full = _table(SCOPE_ALL, 200, rows)
    return corelex, full, assignments


def test_fit_and_predict_on_synthetic():
    corelex, full, assignments = _synthetic_tables()
    model = JaccardClassifier().fit((corelex, full), assignments)
    assert model.predict(["n0x", "n3y"]) == ["class0", "class3"]
    assert model.classify_one("unseen").assigned is None


def test_fit_accepts_swapped_tables():
    corelex, full, assignments = _synthetic_tables()
    model = JaccardClassifier().fit((full, corelex), assignments)
    assert model.corelex_table_.scope == SCOPE_CORELEX


def test_holdout_self_recovery():
    corelex, full, assignments = _synthetic_tables()
    report = JaccardClassifier().fit((corelex, full), assignments).evaluate_holdout()
    assert report.precision == 1.0
    assert report.recall == 1.0
    assert report.attempted == 8


def test_estimator_params_round_trip():
    model = JaccardClassifier(mi_floor=0.5, count_floor=2)
    assert model.get_params() == {"mi_floor": 0.5, "count_floor": 2}
    model.set_params(count_floor=3)
    assert model.count_floor == 3
    with pytest.raises(RuntimeError):
        model.classify_one("x")


def test_holdout_on_demo_corpus(tables, assignments):
    model = JaccardClassifier().fit(tables, assignments)
    report = model.evaluate_holdout()
    assert report.attempted == 14
    assert report.assigned == 11
    assert report.correct == 9
    assert report.precision == pytest.approx(9 / 11, abs=1e-9)
    assert report.recall == pytest.approx(11 / 14, abs=1e-9)
    assert report.recall_all == pytest.approx(11 / 18, abs=1e-9)


def test_classifier_brute_force_oracle(tables, assignments):
    """Every classification must equal an independent max-Jaccard scan."""
    model = JaccardClassifier().fit(tables, assignments)
    for result in model.classify_all():
        noun_attrs = model.noun_profiles_[result.noun].attributes
        scored = sorted(
            (
                (jaccard(noun_attrs, prof.attributes), cname)
                for cname, prof in model.class_profiles_.items()
            ),
            key=lambda pair: (-pair[0], pair[1]),
        )
        best_score, best_name = scored[0]
        if best_score == 0.0:
            assert result.assigned is None and result.score == 0.0
        else:
            assert (result.assigned, result.score) == (best_name, best_score)
