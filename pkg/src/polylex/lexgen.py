"""Turn matcher evidence into qualia-structured lexicon entries.

Formal role: the noun's semantic type (assigned for known nouns,
classified for unknown ones).  Constitutive role: has-part / part-of
pairs harvested from gated ``X of Y`` triples, recorded in both
directions.  Telic role: verbs from verb-head (object-like) and
head-verb (subject-like) contexts.  Agentive role: telic verbs that are
on the creation-verb list.
"""

from __future__ import annotations

import html
import io
import json
from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .classifier import Classification
from .matcher import HEAD_PREP_HEAD, HEAD_VERB, VERB_HEAD, CooccurrenceTable
from .semtypes import TagAssignment, TypeSystem

#: Default verbs whose telic evidence also counts as origin (agentive) evidence.
DEFAULT_CREATION_VERBS = ("build", "construct", "create", "make", "produce", "write")


@dataclass
class LexiconEntry:
    lemma: str
    types: tuple[str, ...]
    formal: dict
    has_part: list = field(default_factory=list)   # [lemma, count] pairs
    part_of: list = field(default_factory=list)
    telic: list = field(default_factory=list)      # [verb, role, count] triples
    agentive: list = field(default_factory=list)   # [verb, count] pairs


@dataclass
class Lexicon:
    entries: dict[str, LexiconEntry] = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)


def _formal_of(type_system: TypeSystem, type_name: str) -> dict:
    formal = type_system.get(type_name).skeleton.formal
    return {"constructor": formal.constructor, "args": formal.component_names()}


def generate_lexicon(
    corelex_table: CooccurrenceTable,
    all_table: CooccurrenceTable,
    assignments: dict[str, TagAssignment],
    classifications: Iterable[Classification],
    type_system: TypeSystem,
    creation_verbs: Iterable[str] = DEFAULT_CREATION_VERBS,
    count_floor: int = 1,
    provenance: dict | None = None,
) -> Lexicon:
    """Build one entry per noun that has a semantic type and corpus evidence.

    Known nouns must occur in the corpus; unknown nouns must have been
    assigned a class by the classifier.  Homonyms keep all their types;
    the formal role is rendered from the first.
    """
    creation = set(creation_verbs)
    types_for: dict[str, tuple[str, ...]] = {}
    for lemma, assignment in assignments.items():
        if all_table.noun_marginals.get(lemma, 0) > 0:
            types_for[lemma] = assignment.types
    for cls in classifications:
        if cls.assigned is not None and cls.noun not in types_for:
            types_for[cls.noun] = (cls.assigned,)

    lexicon = Lexicon(provenance=dict(provenance or {}))
    for lemma in sorted(types_for):
        lexicon.entries[lemma] = LexiconEntry(
            lemma=lemma,
            types=types_for[lemma],
            formal=_formal_of(type_system, types_for[lemma][0]),
        )

    for (noun, attr), count in sorted(all_table.counts.items()):
        entry = lexicon.entries.get(noun)
        if entry is None or count < count_floor:
            continue
        if attr.relation == VERB_HEAD:
            entry.telic.append([attr.coword, "obj", count])
            if attr.coword in creation:
                entry.agentive.append([attr.coword, count])
        elif attr.relation == HEAD_VERB:
            entry.telic.append([attr.coword, "subj", count])

    # Part-whole pairs come from the gated table only: noun is the part,
    # the co-word the whole.
    for (noun, attr), count in sorted(corelex_table.counts.items()):
        if attr.relation != HEAD_PREP_HEAD or attr.prep != "of" or count < count_floor:
            continue
        part = lexicon.entries.get(noun)
        whole = lexicon.entries.get(attr.coword)
        if part is not None and whole is not None:
            part.part_of.append([attr.coword, count])
            whole.has_part.append([noun, count])

    for entry in lexicon.entries.values():
        entry.telic.sort()
        entry.agentive.sort()
        entry.has_part.sort()
        entry.part_of.sort()
    return lexicon


def emit_structured(lexicon: Lexicon) -> str:
    """Deterministic JSON rendering; keys sorted, LF newlines."""
    doc = {
        "provenance": lexicon.provenance,
        "entries": {
            lemma: {
                "types": list(e.types),
                "formal": e.formal,
                "constitutive": {"has_part": e.has_part, "part_of": e.part_of},
                "telic": e.telic,
                "agentive": e.agentive,
            }
            for lemma, e in sorted(lexicon.entries.items())
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def parse_structured(source: TextIO | str) -> Lexicon:
    if isinstance(source, str):
        source = io.StringIO(source)
    doc = json.load(source)
    lexicon = Lexicon(provenance=dict(doc.get("provenance", {})))
    for lemma, e in doc.get("entries", {}).items():
        lexicon.entries[lemma] = LexiconEntry(
            lemma=lemma,
            types=tuple(e["types"]),
            formal=e["formal"],
            has_part=[list(p) for p in e["constitutive"]["has_part"]],
            part_of=[list(p) for p in e["constitutive"]["part_of"]],
            telic=[list(t) for t in e["telic"]],
            agentive=[list(a) for a in e["agentive"]],
        )
    return lexicon


def _entry_html(entry: LexiconEntry) -> str:
    esc = html.escape
    parts = ['<dt id="entry-%s">%s</dt>' % (esc(entry.lemma), esc(entry.lemma)), "<dd><dl>"]
    parts.append(
        "<dt>formal</dt><dd>%s(%s)</dd>"
        % (esc(entry.formal["constructor"]), esc(", ".join(entry.formal["args"])))
    )
    if entry.has_part or entry.part_of:
        bits = ["%s %s (%d)" % (rel, esc(lemma), count)
                for rel, pairs in (("has-part", entry.has_part), ("part-of", entry.part_of))
                for lemma, count in pairs]
        parts.append("<dt>constitutive</dt><dd>%s</dd>" % "; ".join(bits))
    if entry.telic:
        bits = ["%s/%s (%d)" % (esc(v), role, count) for v, role, count in entry.telic]
        parts.append("<dt>telic</dt><dd>%s</dd>" % "; ".join(bits))
    if entry.agentive:
        bits = ["%s (%d)" % (esc(v), count) for v, count in entry.agentive]
        parts.append("<dt>agentive</dt><dd>%s</dd>" % "; ".join(bits))
    parts.append("</dl></dd>")
    return "\n".join(parts)


def emit_html_index(lexicon: Lexicon) -> str:
    """Self-contained HTML index: one section per type, anchors per entry."""
    by_type: dict[str, list[str]] = {}
    for lemma, entry in sorted(lexicon.entries.items()):
        for tname in entry.types:
            by_type.setdefault(tname, []).append(lemma)
    out = [
        "<!DOCTYPE html>",
        '<html lang="en"><head><meta charset="utf-8">',
        "<title>Semantic lexicon index</title></head><body>",
        "<h1>Semantic lexicon index</h1>",
    ]
    for tname in sorted(by_type):
        out.append('<section id="type-%s">' % html.escape(tname))
        out.append("<h2>%s</h2>" % html.escape(tname))
        out.append("<ul>")
        for lemma in by_type[tname]:
            out.append(
                '<li><a href="#entry-%s">%s</a></li>'
                % (html.escape(lemma), html.escape(lemma))
            )
        out.append("</ul></section>")
    out.append("<h2>Entries</h2><dl>")
    for lemma in sorted(lexicon.entries):
        out.append(_entry_html(lexicon.entries[lemma]))
    out.append("</dl></body></html>")
    return "\n".join(out) + "\n"
