"""Sense inventories: the 32 basic-sense tags, lemma profiles, polysemy stats.

A sense inventory maps noun lemmas to their fine-grained senses, each
reduced to one of 32 coarse "basic sense" tags.  The set of basic senses
a lemma exhibits (its profile) is the key by which polysemous classes
are later derived.
"""

from __future__ import annotations

import io
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, TextIO

#: The closed set of 32 basic-sense tags, in canonical (alphabetical) order.
BASIC_SENSE_TAGS = (
    "act", "agt", "anm", "art", "atr", "bln", "cel", "chm",
    "com", "evt", "fod", "frm", "grb", "grp", "grs", "hum",
    "lme", "loc", "log", "mea", "nat", "phm", "plt", "pos",
    "prt", "psy", "qud", "qui", "rel", "spc", "sta", "tme",
)

_TAG_INDEX = {t: i for i, t in enumerate(BASIC_SENSE_TAGS)}

#: Long names for the basic senses, used when rendering semantic types.
TAG_NAMES = {
    "act": "act",
    "agt": "agent",
    "anm": "animal",
    "art": "artifact",
    "atr": "attribute",
    "bln": "blunder",
    "cel": "cell",
    "chm": "chemical",
    "com": "communication",
    "evt": "event",
    "fod": "food",
    "frm": "form",
    "grb": "group_biological",
    "grp": "group",
    "grs": "group_social",
    "hum": "human",
    "lme": "linear_measure",
    "loc": "location",
    "log": "location_geographical",
    "mea": "measure",
    "nat": "natural_object",
    "phm": "phenomenon",
    "plt": "plant",
    "pos": "possession",
    "prt": "part",
    "psy": "psychological",
    "qud": "quantity_definite",
    "qui": "quantity_indefinite",
    "rel": "relation",
    "spc": "space",
    "sta": "state",
    "tme": "time",
}


class InventoryError(ValueError):
    """Raised on malformed or inconsistent inventory input."""


class UnknownLemmaError(KeyError):
    """Raised when a lemma is looked up that the inventory does not contain."""


def check_tag(tag: str) -> str:
    if tag not in _TAG_INDEX:
        raise InventoryError("unknown basic sense %r" % tag)
    return tag


@dataclass(frozen=True)
class SenseRecord:
    """One fine-grained sense of a lemma, reduced to a basic-sense tag."""

    lemma: str
    sense_id: str
    basic: str

    def __post_init__(self):
        if not self.lemma or any(c.isspace() for c in self.lemma):
            raise InventoryError("bad lemma %r" % self.lemma)
        check_tag(self.basic)


class SenseProfile:
    """The set of basic senses a lemma exhibits, canonically ordered.

    Rendering is deterministic: tags are sorted in the fixed 32-tag order
    and joined with single spaces, e.g. ``"art com"``.
    """

    __slots__ = ("tags",)

    def __init__(self, tags: Iterable[str]):
        tagset = frozenset(check_tag(t) for t in tags)
        if not tagset:
            raise InventoryError("empty sense profile")
        object.__setattr__(self, "tags", tagset)

    @classmethod
    def parse(cls, text: str) -> "SenseProfile":
        return cls(text.split())

    def render(self) -> str:
        return " ".join(sorted(self.tags, key=_TAG_INDEX.__getitem__))

    def __len__(self):
        return len(self.tags)

    def __contains__(self, tag):
        return tag in self.tags

    def __iter__(self):
        return iter(sorted(self.tags, key=_TAG_INDEX.__getitem__))

    def __eq__(self, other):
        return isinstance(other, SenseProfile) and self.tags == other.tags

    def __hash__(self):
        return hash(self.tags)

    def __lt__(self, other):
        return self.render() < other.render()

    def __repr__(self):
        return "SenseProfile(%r)" % self.render()

    def __setattr__(self, name, value):
        raise AttributeError("SenseProfile is immutable")


class Inventory:
    """Immutable lemma -> senses mapping parsed from a TSV stream."""

    def __init__(self, records: Iterable[SenseRecord]):
        byid: dict[tuple[str, str], SenseRecord] = {}
        for rec in records:
            key = (rec.lemma, rec.sense_id)
            prev = byid.get(key)
            if prev is not None and prev.basic != rec.basic:
                raise InventoryError(
                    "conflicting tags %r/%r for (%s, %s)"
                    % (prev.basic, rec.basic, rec.lemma, rec.sense_id)
                )
            byid[key] = rec
        self._by_lemma: dict[str, set[SenseRecord]] = {}
        for rec in byid.values():
            self._by_lemma.setdefault(rec.lemma, set()).add(rec)

    def __len__(self):
        return len(self._by_lemma)

    def __contains__(self, lemma):
        return lemma in self._by_lemma

    def lemmas(self) -> list[str]:
        return sorted(self._by_lemma)

    def records(self, lemma: str) -> set[SenseRecord]:
        try:
            return set(self._by_lemma[lemma])
        except KeyError:
            raise UnknownLemmaError(lemma) from None

    def profile_of(self, lemma: str) -> SenseProfile:
        """Deduplicated, canonically ordered basic senses of ``lemma``."""
        return SenseProfile(r.basic for r in self.records(lemma))

    def profiles(self) -> dict[str, SenseProfile]:
        return {lemma: self.profile_of(lemma) for lemma in self._by_lemma}

    def polysemy_histogram(self) -> list[tuple[int, int, int]]:
        """Rows ``(profile size k, distinct profiles, lemmas)`` for k >= 2.

        Monosemous lemmas (k = 1) are reported in a single leading k = 1 row.
        """
        by_profile = Counter(self.profile_of(lemma) for lemma in self._by_lemma)
        rows: dict[int, list[int]] = {}
        for profile, nlemmas in by_profile.items():
            entry = rows.setdefault(len(profile), [0, 0])
            entry[0] += 1
            entry[1] += nlemmas
        return [(k, rows[k][0], rows[k][1]) for k in sorted(rows)]

    def render(self) -> str:
        lines = []
        for lemma in self.lemmas():
            for rec in sorted(self.records(lemma), key=lambda r: r.sense_id):
                lines.append("%s\t%s\t%s\n" % (rec.lemma, rec.sense_id, rec.basic))
        return "".join(lines)


def parse_inventory(source: TextIO | str) -> Inventory:
    """Parse a three-column TSV stream ``lemma<TAB>sense_id<TAB>tag``.

    Lines starting with '#' and blank lines are skipped.  Lemmas are
    lowercased; any other normalization is the producer's business.
    """
    if isinstance(source, str):
        source = io.StringIO(source)
    records = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise InventoryError(
                "line %d: expected 3 tab-separated fields, got %d" % (lineno, len(fields))
            )
        lemma, sense_id, tag = fields
        if tag not in _TAG_INDEX:
            raise InventoryError("unknown basic sense %r at line %d" % (tag, lineno))
        try:
            records.append(SenseRecord(lemma.strip().lower(), sense_id.strip(), tag))
        except InventoryError as exc:
            raise InventoryError("line %d: %s" % (lineno, exc)) from None
    return Inventory(records)
