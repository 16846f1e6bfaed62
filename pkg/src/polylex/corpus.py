"""POS-tagged corpus ingestion and noun-phrase chunking.

Corpora arrive in vertical format, one ``surface<TAB>POS`` token per line
(optional third column: a pre-computed stem), blank line between
sentences.  Penn Treebank tags are folded onto a small internal tagset;
be- and have-forms are split off the verb tags by surface form because
the passive patterns need them.

Noun phrases follow the shape ``PreDet* Det* Num* (Adj|Name|Noun)* Noun``
and the head is simply the rightmost noun, which for English is mostly
right.
"""

from __future__ import annotations

import io
from dataclasses import dataclass
from typing import Iterable, TextIO

from .stemmer import PorterStemmer

POS_TAGS = (
    "PREDET", "DET", "NUM", "ADJ", "NAME", "NOUN",
    "VERB", "BE", "HAVE", "ADV", "PREP", "OTHER",
)

#: Penn Treebank -> internal tag. VB* entries are refined to BE/HAVE by surface.
DEFAULT_PENN_MAP = {
    "NN": "NOUN", "NNS": "NOUN",
    "NNP": "NAME", "NNPS": "NAME",
    "JJ": "ADJ", "JJR": "ADJ", "JJS": "ADJ",
    "PDT": "PREDET",
    "DT": "DET",
    "CD": "NUM",
    "VB": "VERB", "VBD": "VERB", "VBG": "VERB",
    "VBN": "VERB", "VBP": "VERB", "VBZ": "VERB",
    "MD": "VERB",
    "RB": "ADV", "RBR": "ADV", "RBS": "ADV",
    "IN": "PREP", "TO": "PREP",
}

_BE_FORMS = {"be", "is", "am", "are", "was", "were", "been", "being"}
_HAVE_FORMS = {"have", "has", "had", "having"}


class CorpusError(ValueError):
    """Raised on malformed vertical-format input."""


@dataclass(frozen=True)
class Token:
    surface: str
    pos: str
    stem: str


@dataclass(frozen=True)
class NounPhrase:
    """Token span [start, end] within a sentence; ``head`` is the rightmost noun."""

    start: int
    end: int
    head: int


class Corpus:
    """Immutable list of sentences (token lists)."""

    def __init__(self, sentences: Iterable[list[Token]]):
        self.sentences = [list(s) for s in sentences]

    @property
    def n_tokens(self) -> int:
        """Corpus size N: the total number of stems."""
        return sum(len(s) for s in self.sentences)

    def __len__(self):
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)


def parse_penn_map(source: TextIO | str) -> dict[str, str]:
    """Parse a two-column TSV ``penn_tag<TAB>internal_tag`` mapping."""
    if isinstance(source, str):
        source = io.StringIO(source)
    table = {}
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2 or fields[1] not in POS_TAGS:
            raise CorpusError("penn map line %d: bad entry %r" % (lineno, line))
        table[fields[0].strip()] = fields[1]
    return table


def map_pos(raw_tag: str, surface: str, penn_map: dict[str, str] | None = None) -> str:
    """Fold a raw POS tag onto the internal tagset; unknown tags become OTHER."""
    if raw_tag in POS_TAGS and raw_tag not in ("VERB",):
        tag = raw_tag
    else:
        tag = (penn_map or DEFAULT_PENN_MAP).get(raw_tag, raw_tag)
        if tag not in POS_TAGS:
            tag = "OTHER"
    if tag == "VERB":
        low = surface.lower()
        if low in _BE_FORMS:
            return "BE"
        if low in _HAVE_FORMS:
            return "HAVE"
    return tag


def parse_corpus(
    source: TextIO | str,
    stemmer: PorterStemmer | None = None,
    penn_map: dict[str, str] | None = None,
) -> Corpus:
    """Read vertical format; stem each token unless a stem column is present."""
    if isinstance(source, str):
        source = io.StringIO(source)
    stemmer = stemmer or PorterStemmer()
    sentences: list[list[Token]] = []
    current: list[Token] = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if line.lstrip().startswith("#"):
            continue
        if not line.strip():
            if current:
                sentences.append(current)
                current = []
            continue
        fields = line.split("\t")
        if len(fields) not in (2, 3):
            raise CorpusError(
                "line %d: expected 2 or 3 tab-separated fields, got %d"
                % (lineno, len(fields))
            )
        surface = fields[0].strip()
        if not surface:
            raise CorpusError("line %d: empty surface form" % lineno)
        pos = map_pos(fields[1].strip(), surface, penn_map)
        stem = fields[2].strip().lower() if len(fields) == 3 else stemmer.stem(surface)
        current.append(Token(surface, pos, stem))
    if current:
        sentences.append(current)
    return Corpus(sentences)


_NP_MODIFIERS = ("ADJ", "NAME", "NOUN")


def chunk_nps(sentence: list[Token]) -> list[NounPhrase]:
    """Maximal, non-overlapping, left-to-right noun phrases of a sentence."""
    nps = []
    i = 0
    n = len(sentence)
    while i < n:
        j = i
        for stage in ("PREDET", "DET", "NUM"):
            while j < n and sentence[j].pos == stage:
                j += 1
        last_noun = -1
        while j < n and sentence[j].pos in _NP_MODIFIERS:
            if sentence[j].pos == "NOUN":
                last_noun = j
            j += 1
        if last_noun >= 0:
            nps.append(NounPhrase(i, last_noun, last_noun))
            i = last_noun + 1
        else:
            i += 1
    return nps
