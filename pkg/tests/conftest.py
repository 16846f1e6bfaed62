from pathlib import Path

import pytest

from polylex import data_path
from polylex.corpus import parse_corpus, parse_penn_map
from polylex.matcher import match_corpus
from polylex.polyclasses import parse_exclusions
from polylex.semtypes import parse_type_system
from polylex.senses import parse_inventory
from polylex.stemmer import PorterStemmer, parse_exceptions

GOLDEN_DIR = Path(__file__).parent / "data"


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def inventory():
    return parse_inventory(data_path("inventory.tsv").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def exclusions():
    return parse_exclusions(data_path("exclusions.tsv").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def type_system():
    return parse_type_system(data_path("typesystem.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def assignments(inventory, type_system):
    return type_system.assign_tags(inventory.profiles())


@pytest.fixture(scope="session")
def stemmer():
    exceptions = parse_exceptions(data_path("stem_exceptions.tsv").read_text(encoding="utf-8"))
    return PorterStemmer(exceptions)


@pytest.fixture(scope="session")
def corpus(stemmer):
    penn = parse_penn_map(data_path("penn_map.tsv").read_text(encoding="utf-8"))
    return parse_corpus(data_path("demo_corpus.tsv").read_text(encoding="utf-8"), stemmer, penn)


@pytest.fixture(scope="session")
def tables(corpus, assignments, type_system):
    return match_corpus(corpus, assignments, type_system)
