"""Class-sensitive pattern matching around NP head nouns.

Five pattern families are run over each chunked sentence:

  verb-head   a verb governing the head noun: verb directly before the NP,
              or recovered from a passive (``Noun Have? Be Adv? Verb`` =>
              ``Verb Noun``)
  head-verb   a verb directly after the NP (approximates subj-verb)
  adj-head    an adjective inside the NP
  mod-head    a modifier noun or name inside the NP
  head-prep-head  two NPs joined by a preposition

Two tables are kept: one restricted to semantically tagged heads, one
over all heads.  The ``of`` pattern feeds part-whole harvesting and is
admitted to the restricted table only when the two heads carry the same
tag or the second head's dotted type subsumes the first's.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .corpus import Corpus, NounPhrase, chunk_nps
from .semtypes import TagAssignment, TypeSystem

VERB_HEAD = "verb-head"
HEAD_VERB = "head-verb"
ADJ_HEAD = "adj-head"
MOD_HEAD = "mod-head"
HEAD_PREP_HEAD = "head-prep-head"

SCOPE_CORELEX = "corelex"
SCOPE_ALL = "all"


@dataclass(frozen=True, order=True)
class Attribute:
    """A linguistic context a noun occurs in: relation kind plus co-word."""

    relation: str
    coword: str
    prep: str | None = None

    def __post_init__(self):
        if (self.prep is not None) != (self.relation == HEAD_PREP_HEAD):
            raise ValueError("prep is carried by %s only" % HEAD_PREP_HEAD)
        if not self.coword:
            raise ValueError("empty coword")


@dataclass
class CooccurrenceTable:
    """Joint and marginal counts of (noun, attribute) pairs for one scope."""

    scope: str
    n_tokens: int = 0
    counts: Counter = field(default_factory=Counter)
    noun_marginals: Counter = field(default_factory=Counter)
    attr_marginals: Counter = field(default_factory=Counter)

    def add(self, noun: str, attr: Attribute, count: int = 1) -> None:
        self.counts[(noun, attr)] += count
        self.attr_marginals[attr] += count

    def nouns(self) -> set[str]:
        return set(self.noun_marginals)

    def attributes_of(self, noun: str) -> dict[Attribute, int]:
        return {a: c for (n, a), c in self.counts.items() if n == noun}

    def to_tsv(self) -> str:
        """Canonical sorted serialization, one line per (noun, attribute)."""
        rows = [
            "%s\t%s\t%s\t%s\t%s\t%d"
            % (self.scope, noun, a.relation, a.prep or "-", a.coword, count)
            for (noun, a), count in self.counts.items()
        ]
        return "".join(r + "\n" for r in sorted(rows))


def normalize_passive(
    sentence: list, head: int, adv_window: int = 1
) -> tuple[str, str] | None:
    """Detect ``Noun Have? Be Adv? Verb`` after ``head``; return (verb, noun)."""
    i = head + 1
    n = len(sentence)
    if i < n and sentence[i].pos == "HAVE":
        i += 1
    if i >= n or sentence[i].pos != "BE":
        return None
    i += 1
    skipped = 0
    while i < n and sentence[i].pos == "ADV" and skipped < adv_window:
        i += 1
        skipped += 1
    if i < n and sentence[i].pos == "VERB":
        return sentence[i].stem, sentence[head].stem
    return None


def partwhole_gate(tag1: str, tag2: str, type_system: TypeSystem) -> bool:
    """True iff the tags are equal or ``tag2``'s dotted type subsumes ``tag1``."""
    if tag1 == tag2:
        return True
    return (
        type_system.get(tag2).skeleton.formal.is_dotted
        and type_system.subsumes(tag1, tag2)
    )


def _any_pair_gated(tags1, tags2, type_system) -> bool:
    return any(partwhole_gate(t1, t2, type_system) for t1 in tags1 for t2 in tags2)


def _sentence_attributes(sentence, adv_window: int):
    """Yield (head index, attribute set) per NP, plus prep links between NPs."""
    nps = chunk_nps(sentence)
    per_np: list[tuple[NounPhrase, set[Attribute]]] = []
    for np in nps:
        attrs: set[Attribute] = set()
        for i in range(np.start, np.end + 1):
            tok = sentence[i]
            if tok.pos == "ADJ":
                attrs.add(Attribute(ADJ_HEAD, tok.stem))
            elif tok.pos in ("NOUN", "NAME") and i != np.head:
                attrs.add(Attribute(MOD_HEAD, tok.stem))
        passive = normalize_passive(sentence, np.head, adv_window)
        if passive is not None:
            attrs.add(Attribute(VERB_HEAD, passive[0]))
        else:
            j = np.head + 1
            skipped = 0
            while j < len(sentence) and sentence[j].pos == "ADV" and skipped < adv_window:
                j += 1
                skipped += 1
            if j < len(sentence) and sentence[j].pos == "VERB":
                attrs.add(Attribute(HEAD_VERB, sentence[j].stem))
        j = np.start - 1
        skipped = 0
        while j >= 0 and sentence[j].pos == "ADV" and skipped < adv_window:
            j -= 1
            skipped += 1
        if j >= 0 and sentence[j].pos == "VERB":
            attrs.add(Attribute(VERB_HEAD, sentence[j].stem))
        per_np.append((np, attrs))
    for k in range(len(per_np) - 1):
        np1, attrs1 = per_np[k]
        np2, _ = per_np[k + 1]
        if np2.start - np1.end == 2 and sentence[np1.end + 1].pos == "PREP":
            prep = sentence[np1.end + 1].stem
            h2 = sentence[np2.head].stem
            attrs1.add(Attribute(HEAD_PREP_HEAD, h2, prep))
    return per_np


def match_corpus(
    corpus: Corpus,
    assignments: dict[str, TagAssignment],
    type_system: TypeSystem,
    adv_window: int = 1,
) -> tuple[CooccurrenceTable, CooccurrenceTable]:
    """Run all patterns; return the (tagged-nouns-only, all-nouns) table pair.

    Attributes are deduplicated per head occurrence, so no joint count can
    exceed the head noun's occurrence count.
    """
    n = corpus.n_tokens
    corelex = CooccurrenceTable(SCOPE_CORELEX, n)
    full = CooccurrenceTable(SCOPE_ALL, n)
    for sentence in corpus:
        for tok in sentence:
            if tok.pos == "NOUN":
                full.noun_marginals[tok.stem] += 1
                if tok.stem in assignments:
                    corelex.noun_marginals[tok.stem] += 1
        for np, attrs in _sentence_attributes(sentence, adv_window):
            head = sentence[np.head].stem
            tagged = head in assignments
            for attr in sorted(attrs):
                full.add(head, attr)
                if not tagged:
                    continue
                if attr.relation == HEAD_PREP_HEAD and attr.prep == "of":
                    other = assignments.get(attr.coword)
                    if other is None or not _any_pair_gated(
                        assignments[head].types, other.types, type_system
                    ):
                        continue
                corelex.add(head, attr)
    return corelex, full


def pattern_recall(corpus: Corpus, table: CooccurrenceTable) -> float:
    """Fraction of distinct corpus noun stems covered by >= 1 attribute."""
    all_nouns = {
        tok.stem for sentence in corpus for tok in sentence if tok.pos == "NOUN"
    }
    if not all_nouns:
        return 0.0
    covered = {noun for (noun, _attr) in table.counts}
    return len(covered & all_nouns) / len(all_nouns)
