"""Porter suffix-stripping stemmer with an exception-table bypass.

The exception table (surface -> stem) is consulted before any rule fires,
which is how irregular forms like ``women -> woman`` or participles like
``written -> write`` are handled.  The rule engine itself follows the
widely used reference form of the algorithm: words of length <= 2 are
returned untouched, and the common -bli/-logi refinements are included.
"""

from __future__ import annotations

import io
from typing import Mapping, TextIO

_VOWELS = "aeiou"


def _is_cons(word: str, i: int) -> bool:
    ch = word[i]
    if ch in _VOWELS:
        return False
    if ch == "y":
        return i == 0 or not _is_cons(word, i - 1)
    return True


def _measure(stem: str) -> int:
    """Number of vowel-consonant sequences in ``stem`` (the m of [C](VC)^m[V])."""
    m = 0
    prev_cons = True
    seen_vowel = False
    for i in range(len(stem)):
        cons = _is_cons(stem, i)
        if cons and seen_vowel and not prev_cons:
            m += 1
        if not cons:
            seen_vowel = True
        prev_cons = cons
    return m


def _has_vowel(stem: str) -> bool:
    return any(not _is_cons(stem, i) for i in range(len(stem)))


def _ends_double_cons(word: str) -> bool:
    return (
        len(word) >= 2
        and word[-1] == word[-2]
        and _is_cons(word, len(word) - 1)
    )


def _ends_cvc(word: str) -> bool:
    """consonant-vowel-consonant ending, final consonant not w, x or y."""
    if len(word) < 3:
        return False
    i = len(word) - 1
    if _is_cons(word, i) and not _is_cons(word, i - 1) and _is_cons(word, i - 2):
        return word[i] not in "wxy"
    return False


def _replace(word: str, suffix: str, repl: str, min_measure: int) -> str:
    """Replace ``suffix`` with ``repl`` if the remaining stem has m > min_measure."""
    stem = word[: len(word) - len(suffix)]
    if _measure(stem) > min_measure:
        return stem + repl
    return word


def _step1a(word: str) -> str:
    if word.endswith("sses"):
        return word[:-2]
    if word.endswith("ies"):
        return word[:-2]
    if word.endswith("s") and not word.endswith("ss"):
        return word[:-1]
    return word


def _step1b(word: str) -> str:
    if word.endswith("eed"):
        if _measure(word[:-3]) > 0:
            return word[:-1]
        return word
    for suffix in ("ed", "ing"):
        if word.endswith(suffix) and _has_vowel(word[: -len(suffix)]):
            word = word[: -len(suffix)]
            if word.endswith(("at", "bl", "iz")):
                return word + "e"
            if _ends_double_cons(word) and word[-1] not in "lsz":
                return word[:-1]
            if _measure(word) == 1 and _ends_cvc(word):
                return word + "e"
            return word
    return word


def _step1c(word: str) -> str:
    if word.endswith("y") and _has_vowel(word[:-1]):
        return word[:-1] + "i"
    return word


# (suffix, replacement) pairs; longer suffixes precede any of their own tails.
_STEP2_RULES = (
    ("ational", "ate"), ("tional", "tion"), ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"), ("bli", "ble"), ("alli", "al"), ("entli", "ent"),
    ("eli", "e"), ("ousli", "ous"), ("ization", "ize"), ("ation", "ate"),
    ("ator", "ate"), ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"),
    ("ousness", "ous"), ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
    ("logi", "log"),
)

_STEP3_RULES = (
    ("icate", "ic"), ("ative", ""), ("alize", "al"), ("iciti", "ic"),
    ("ical", "ic"), ("ful", ""), ("ness", ""),
)

_STEP4_SUFFIXES = (
    "al", "ance", "ence", "er", "ic", "able", "ible", "ant", "ement",
    "ment", "ent", "ion", "ou", "ism", "ate", "iti", "ous", "ive", "ize",
)


def _step2(word: str) -> str:
    for suffix, repl in _STEP2_RULES:
        if word.endswith(suffix):
            return _replace(word, suffix, repl, 0)
    return word


def _step3(word: str) -> str:
    for suffix, repl in _STEP3_RULES:
        if word.endswith(suffix):
            return _replace(word, suffix, repl, 0)
    return word


def _step4(word: str) -> str:
    for suffix in _STEP4_SUFFIXES:
        if word.endswith(suffix):
            stem = word[: -len(suffix)]
            if suffix == "ion" and (not stem or stem[-1] not in "st"):
                return word
            if _measure(stem) > 1:
                return stem
            return word
    return word


def _step5(word: str) -> str:
    if word.endswith("e"):
        m = _measure(word[:-1])
        if m > 1 or (m == 1 and not _ends_cvc(word[:-1])):
            word = word[:-1]
    if word.endswith("ll") and _measure(word[:-1]) > 1:
        word = word[:-1]
    return word


class PorterStemmer:
    """Stateless stemmer; safe to share across threads."""

    def __init__(self, exceptions: Mapping[str, str] | None = None):
        self.exceptions = dict(exceptions or {})

    def stem(self, surface: str) -> str:
        """Stem one token.  Non-alphabetic tokens pass through lowercased."""
        word = surface.lower()
        hit = self.exceptions.get(word)
        if hit is not None:
            return hit
        if not word.isalpha() or len(word) <= 2:
            return word
        word = _step1a(word)
        word = _step1b(word)
        word = _step1c(word)
        word = _step2(word)
        word = _step3(word)
        word = _step4(word)
        word = _step5(word)
        return word


def parse_exceptions(source: TextIO | str) -> dict[str, str]:
    """Parse a two-column TSV ``surface<TAB>stem`` exception table."""
    if isinstance(source, str):
        source = io.StringIO(source)
    table = {}
    for lineno, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            raise ValueError(
                "stem exceptions line %d: expected 2 fields, got %d" % (lineno, len(fields))
            )
        table[fields[0].strip().lower()] = fields[1].strip().lower()
    return table
