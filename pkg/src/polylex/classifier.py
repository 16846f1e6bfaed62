"""MI profiles and Jaccard classification of nouns.

Association between a noun (or a class of nouns, pooled) and a linguistic
context is scored with pointwise mutual information over the
co-occurrence tables.  A noun or class profile is the set of attributes
with positive MI; unknown nouns are assigned the class whose profile is
most Jaccard-similar to theirs.  A highest score of zero means no class
is assigned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from sklearn.base import BaseEstimator

from .matcher import Attribute, CooccurrenceTable
from .semtypes import TagAssignment


def mi(f_xy: int, f_x: int, f_y: int, n: int) -> float:
    """log2 of observed joint frequency over the product of marginals.

    All counts must be >= 1 and bounded by the corpus size ``n``; MI of an
    unseen pair is undefined here, not negative infinity.
    """
    if f_xy < 1 or f_x < 1 or f_y < 1 or n < 1:
        raise ValueError("mi requires positive counts")
    if f_x > n or f_y > n or f_xy > n:
        raise ValueError("mi requires counts bounded by corpus size")
    return math.log2((f_xy / n) / ((f_x / n) * (f_y / n)))


def jaccard(set1: Iterable, set2: Iterable) -> float:
    """Shared attributes over total unique attributes; 0 when both sets are empty."""
    s1, s2 = set(set1), set(set2)
    union = s1 | s2
    if not union:
        return 0.0
    return len(s1 & s2) / len(union)


@dataclass
class Profile:
    """MI scores for one noun or class; ``attributes`` is the positive-MI set."""

    owner: str
    mi: dict = field(default_factory=dict)
    attributes: frozenset = frozenset()


@dataclass(frozen=True)
class Classification:
    noun: str
    assigned: str | None
    score: float


def _make_profile(owner, joint, f_x, attr_marginals, n, mi_floor, count_floor) -> Profile:
    scores = {}
    for attr, f_xy in joint.items():
        if f_xy < count_floor or f_x < 1:
            continue
        scores[attr] = mi(f_xy, f_x, attr_marginals[attr], n)
    return Profile(owner, scores, frozenset(a for a, v in scores.items() if v > mi_floor))


def class_members(assignments: dict[str, TagAssignment]) -> dict[str, list[str]]:
    """Invert lemma -> types into type -> sorted member lemmas."""
    members: dict[str, list[str]] = {}
    for lemma in sorted(assignments):
        for tname in assignments[lemma].types:
            members.setdefault(tname, []).append(lemma)
    return members


def build_class_profiles(
    table: CooccurrenceTable,
    assignments: dict[str, TagAssignment],
    mi_floor: float = 0.0,
    count_floor: int = 1,
    exclude: str | None = None,
) -> dict[str, Profile]:
    """Pool member counts per class over the tagged-nouns table.

    The class is treated as a pseudo-noun: its marginal is the sum of the
    member marginals.  ``exclude`` removes one noun's counts everywhere,
    which is what the hold-out evaluation needs.
    """
    members = class_members(assignments)
    joint: dict[str, dict[Attribute, int]] = {c: {} for c in members}
    attr_marginals: dict[Attribute, int] = {}
    owners: dict[str, list[str]] = {}
    for lemma, types in ((l, a.types) for l, a in assignments.items()):
        if lemma != exclude:
            owners[lemma] = list(types)
    for (noun, attr), count in table.counts.items():
        if noun not in owners:
            continue
        attr_marginals[attr] = attr_marginals.get(attr, 0) + count
        for cname in owners[noun]:
            joint[cname][attr] = joint[cname].get(attr, 0) + count
    profiles = {}
    for cname in members:
        f_class = sum(
            table.noun_marginals.get(m, 0) for m in members[cname] if m != exclude
        )
        profiles[cname] = _make_profile(
            cname, joint[cname], f_class, attr_marginals, table.n_tokens,
            mi_floor, count_floor,
        )
    return profiles


def build_noun_profiles(
    table: CooccurrenceTable,
    mi_floor: float = 0.0,
    count_floor: int = 1,
) -> dict[str, Profile]:
    """Per-noun MI profiles over the all-nouns table."""
    joint: dict[str, dict[Attribute, int]] = {}
    for (noun, attr), count in table.counts.items():
        joint.setdefault(noun, {})[attr] = count
    profiles = {}
    for noun in table.nouns():
        profiles[noun] = _make_profile(
            noun, joint.get(noun, {}), table.noun_marginals[noun],
            table.attr_marginals, table.n_tokens, mi_floor, count_floor,
        )
    return profiles


def build_profiles(
    corelex_table: CooccurrenceTable,
    all_table: CooccurrenceTable,
    assignments: dict[str, TagAssignment],
    mi_floor: float = 0.0,
    count_floor: int = 1,
) -> tuple[dict[str, Profile], dict[str, Profile]]:
    return (
        build_class_profiles(corelex_table, assignments, mi_floor, count_floor),
        build_noun_profiles(all_table, mi_floor, count_floor),
    )


def classify(noun_profile: Profile, class_profiles: dict[str, Profile]) -> Classification:
    """Argmax class by Jaccard; ties break to the lexicographically first name."""
    best_name = None
    best_score = 0.0
    for cname in sorted(class_profiles):
        score = jaccard(noun_profile.attributes, class_profiles[cname].attributes)
        if score > best_score:
            best_name, best_score = cname, score
    return Classification(noun_profile.owner, best_name, best_score)


@dataclass
class EvaluationReport:
    precision: float
    recall: float
    recall_all: float
    attempted: int
    assigned: int
    correct: int
    assigned_all: int
    total_nouns: int
    precision_defined: bool
    per_noun: list = field(default_factory=list)

    def summary(self) -> str:
        lines = [
            "known nouns attempted: %d" % self.attempted,
            "known nouns assigned:  %d" % self.assigned,
            "known nouns correct:   %d" % self.correct,
            "precision: %.4f%s"
            % (self.precision, "" if self.precision_defined else " (undefined: nothing assigned)"),
            "recall:    %.4f" % self.recall,
            "recall on all nouns: %.4f (%d of %d)"
            % (self.recall_all, self.assigned_all, self.total_nouns),
        ]
        return "".join(line + "\n" for line in lines)


class JaccardClassifier(BaseEstimator):
    """Estimator-style wrapper around profile building and classification.

    Parameters
    ----------
    mi_floor : attributes enter a profile only with MI strictly above this.
    count_floor : minimum joint count for an attribute to be scored at all.
    """

    def __init__(self, mi_floor: float = 0.0, count_floor: int = 1):
        self.mi_floor = mi_floor
        self.count_floor = count_floor

    def fit(self, tables: tuple[CooccurrenceTable, CooccurrenceTable],
            assignments: dict[str, TagAssignment]):
        corelex_table, all_table = tables
        if corelex_table.scope == "all":
            corelex_table, all_table = all_table, corelex_table
        self.class_profiles_, self.noun_profiles_ = build_profiles(
            corelex_table, all_table, assignments, self.mi_floor, self.count_floor
        )
        self.corelex_table_ = corelex_table
        self.all_table_ = all_table
        self.assignments_ = dict(assignments)
        return self

    def _check_fitted(self):
        if not hasattr(self, "class_profiles_"):
            raise RuntimeError("classifier is not fitted")

    def classify_one(self, noun: str) -> Classification:
        self._check_fitted()
        profile = self.noun_profiles_.get(noun, Profile(noun))
        return classify(profile, self.class_profiles_)

    def predict(self, nouns: Sequence[str]) -> list[str | None]:
        return [self.classify_one(n).assigned for n in nouns]

    def classify_all(self) -> list[Classification]:
        """Classify every noun seen in the all-nouns table, sorted by noun."""
        self._check_fitted()
        return [self.classify_one(n) for n in sorted(self.noun_profiles_)]

    def evaluate_holdout(self) -> EvaluationReport:
        """Leave-one-out evaluation on the tagged nouns present in the corpus.

        Each known noun is classified against class profiles rebuilt with
        its own counts removed; the assignment is correct if it names any
        of the noun's true types.
        """
        self._check_fitted()
        known = [
            n for n in sorted(self.assignments_)
            if self.all_table_.noun_marginals.get(n, 0) > 0
        ]
        if not known:
            raise ValueError("hold-out evaluation needs at least one known noun in the corpus")
        per_noun = []
        assigned = correct = 0
        loo_assigned = {}
        for noun in known:
            loo_profiles = build_class_profiles(
                self.corelex_table_, self.assignments_,
                self.mi_floor, self.count_floor, exclude=noun,
            )
            profile = self.noun_profiles_.get(noun, Profile(noun))
            result = classify(profile, loo_profiles)
            loo_assigned[noun] = result
            truth = self.assignments_[noun].types
            ok = result.assigned in truth
            if result.assigned is not None:
                assigned += 1
                if ok:
                    correct += 1
            per_noun.append((noun, result.assigned, result.score, " ".join(truth), ok))
        assigned_all = sum(
            1 for c in self.classify_all()
            if (loo_assigned[c.noun] if c.noun in loo_assigned else c).assigned is not None
        )
        total = len(self.all_table_.noun_marginals)
        precision_defined = assigned > 0
        return EvaluationReport(
            precision=correct / assigned if precision_defined else 0.0,
            recall=assigned / len(known),
            recall_all=assigned_all / total if total else 0.0,
            attempted=len(known),
            assigned=assigned,
            correct=correct,
            assigned_all=assigned_all,
            total_nouns=total,
            precision_defined=precision_defined,
            per_noun=per_noun,
        )
