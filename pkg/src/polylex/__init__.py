"""Underspecified semantic lexicon toolkit.

Derives systematically polysemous noun classes from a sense inventory,
maps them onto dotted-type semantic tags, and adapts the result to a
corpus via pattern matching, MI scoring, Jaccard classification and
qualia-structured lexicon generation.
"""

from importlib import resources

__version__ = "0.1.0"


def data_path(name: str):
    """Path to a packaged data fixture (inventory, type system, demo corpus...)."""
    return resources.files("polylex.data") / name
