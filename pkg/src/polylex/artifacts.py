"""On-disk formats for pipeline stage artifacts.

Every stage output starts with '#' comment headers naming the tool
version and the sha256 digests of its inputs, so artifacts are
self-describing and reruns are byte-comparable.  All files are UTF-8
with LF line endings.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

from . import __version__
from .classifier import Classification
from .matcher import SCOPE_ALL, SCOPE_CORELEX, Attribute, CooccurrenceTable
from .polyclasses import PolyClass
from .semtypes import TagAssignment


def file_digest(path: str | Path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def header(inputs: dict[str, str | Path]) -> str:
    lines = ["# generated by polylex %s" % __version__]
    for name in sorted(inputs):
        lines.append("# input %s sha256=%s" % (name, file_digest(inputs[name])))
    return "".join(line + "\n" for line in lines)


def write_text(path: str | Path, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _data_lines(text: str):
    for line in text.splitlines():
        if line.strip() and not line.lstrip().startswith("#"):
            yield line


# -- polysemous classes -------------------------------------------------------

def classes_to_tsv(classes: set[PolyClass]) -> str:
    return "".join(row + "\n" for row in sorted(c.render() for c in classes))


# -- tag assignments ----------------------------------------------------------

def assignments_to_tsv(assignments: dict[str, TagAssignment]) -> str:
    return "".join(
        "%s\t%s\n" % (lemma, " ".join(assignments[lemma].types))
        for lemma in sorted(assignments)
    )


def assignments_from_tsv(text: str) -> dict[str, TagAssignment]:
    out = {}
    for line in _data_lines(text):
        lemma, types = line.split("\t")
        out[lemma] = TagAssignment(lemma, tuple(types.split()))
    return out


# -- co-occurrence tables -----------------------------------------------------

def tables_to_tsv(corelex: CooccurrenceTable, full: CooccurrenceTable) -> str:
    """Both scopes in one file, rows sorted lexicographically."""
    return "".join(
        row + "\n"
        for row in sorted((corelex.to_tsv() + full.to_tsv()).splitlines())
    )


def stats_to_json(corelex: CooccurrenceTable, full: CooccurrenceTable) -> str:
    doc = {
        "n_tokens": full.n_tokens,
        "noun_marginals": {
            SCOPE_CORELEX: dict(sorted(corelex.noun_marginals.items())),
            SCOPE_ALL: dict(sorted(full.noun_marginals.items())),
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def tables_from_files(tsv_text: str, stats_text: str) -> tuple[CooccurrenceTable, CooccurrenceTable]:
    stats = json.loads(stats_text)
    n = stats["n_tokens"]
    tables = {
        SCOPE_CORELEX: CooccurrenceTable(SCOPE_CORELEX, n),
        SCOPE_ALL: CooccurrenceTable(SCOPE_ALL, n),
    }
    for line in _data_lines(tsv_text):
        scope, noun, relation, prep, coword, count = line.split("\t")
        attr = Attribute(relation, coword, None if prep == "-" else prep)
        tables[scope].add(noun, attr, int(count))
    for scope, table in tables.items():
        for noun, count in stats["noun_marginals"][scope].items():
            table.noun_marginals[noun] = count
    return tables[SCOPE_CORELEX], tables[SCOPE_ALL]


# -- classifications ----------------------------------------------------------

def classifications_to_tsv(results: list[Classification]) -> str:
    return "".join(
        "%s\t%s\t%.6f\n" % (c.noun, c.assigned or "-", c.score)
        for c in sorted(results, key=lambda c: c.noun)
    )


def classifications_from_tsv(text: str) -> list[Classification]:
    out = []
    for line in _data_lines(text):
        noun, assigned, score = line.split("\t")
        out.append(Classification(noun, None if assigned == "-" else assigned, float(score)))
    return out


# -- evaluation ---------------------------------------------------------------

def evaluation_to_tsv(per_noun: list) -> str:
    rows = [
        "%s\t%s\t%.6f\t%s\t%s" % (noun, assigned or "-", score, truth, "ok" if ok else "wrong")
        for noun, assigned, score, truth, ok in per_noun
    ]
    return "".join(r + "\n" for r in sorted(rows))
