import json

from polylex.classifier import Classification, JaccardClassifier
from polylex.lexgen import (
    DEFAULT_CREATION_VERBS,
    emit_html_index,
    emit_structured,
    generate_lexicon,
    parse_structured,
)

from conftest import golden


def _lexicon(tables, assignments, type_system):
    corelex, full = tables
    model = JaccardClassifier().fit(tables, assignments)
    results = model.classify_all()
    return generate_lexicon(corelex, full, assignments, results, type_system)


def test_entries_cover_corpus_nouns_only(tables, assignments, type_system):
    lexicon = _lexicon(tables, assignments, type_system)
    assert "lobster" in lexicon.entries
    # tagged in the inventory but absent from the corpus
    assert "caliphate" not in assignments and "clam" not in lexicon.entries
    assert "footwork" in lexicon.entries


def test_classified_unknowns_get_entries(tables, assignments, type_system):
    lexicon = _lexicon(tables, assignments, type_system)
    # known only through classification, not the inventory
    assert "frame" not in lexicon.entries
    entry = lexicon.entries["time"]
    assert entry.types == ("time",)


def test_evidence_entry_shape(tables, assignments, type_system):
    entry = _lexicon(tables, assignments, type_system).entries["evidence"]
    assert entry.formal == {
        "constructor": "closed",
        "args": ["communication", "psychological"],
    }
    assert ["provide", "obj", 2] in entry.telic
    assert entry.has_part == [["structure", 1]]
    assert entry.part_of == []


def test_agentive_from_creation_verbs(tables, assignments, type_system):
    lexicon = _lexicon(tables, assignments, type_system)
    book = lexicon.entries["book"]
    assert book.agentive == [["write", 1]]
    assert ["write", "obj", 1] in book.telic
    assert "write" in DEFAULT_CREATION_VERBS


def test_part_whole_is_symmetric(tables, assignments, type_system):
    lexicon = _lexicon(tables, assignments, type_system)
    for lemma, entry in lexicon.entries.items():
        for whole, count in entry.part_of:
            assert [lemma, count] in lexicon.entries[whole].has_part
        for part, count in entry.has_part:
            assert [lemma, count] in lexicon.entries[part].part_of


def test_structured_round_trip(tables, assignments, type_system):
    lexicon = _lexicon(tables, assignments, type_system)
    text = emit_structured(lexicon)
    again = parse_structured(text)
    assert emit_structured(again) == text


def test_structured_matches_golden(tables, assignments, type_system):
    lexicon = _lexicon(tables, assignments, type_system)
    ours = json.loads(emit_structured(lexicon))
    theirs = json.loads(golden("lexicon.json"))
    assert ours["entries"] == theirs["entries"]


def test_html_index_is_deterministic(tables, assignments, type_system):
    lexicon = _lexicon(tables, assignments, type_system)
    html = emit_html_index(lexicon)
    assert html == emit_html_index(lexicon)
    assert 'id="type-anm.fod"' in html or "anm.fod" in html
    assert "evidence" in html
