"""Candidate polysemous classes: grouping, singleton filtering, curated exclusions.

Lemmas sharing the same multi-sense profile form a candidate class of
systematically polysemous words.  Classes that are really collections of
homonyms cannot be detected mechanically; they are weeded out with a
curated exclusion file.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from typing import TextIO

from .senses import Inventory, SenseProfile


@dataclass(frozen=True)
class PolyClass:
    """A sense profile shared by two or more lemmas."""

    profile: SenseProfile
    members: frozenset[str]

    def render(self) -> str:
        return "%s\t%s" % (self.profile.render(), " ".join(sorted(self.members)))


@dataclass
class ExclusionList:
    """Curated list of whole classes and individual members to drop."""

    excluded_profiles: set[SenseProfile] = field(default_factory=set)
    excluded_members: set[tuple[SenseProfile, str]] = field(default_factory=set)


def parse_exclusions(source: TextIO | str) -> ExclusionList:
    """Parse exclusion lines: ``profile`` alone or ``profile<TAB>lemma``."""
    if isinstance(source, str):
        source = io.StringIO(source)
    out = ExclusionList()
    for raw in source:
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t")
        profile = SenseProfile.parse(fields[0])
        if len(fields) == 1:
            out.excluded_profiles.add(profile)
        else:
            for lemma in fields[1:]:
                out.excluded_members.add((profile, lemma.strip().lower()))
    return out


def derive_classes(inventory: Inventory) -> set[PolyClass]:
    """Group lemmas by shared profile; keep groups of >= 2 lemmas and >= 2 senses.

    Monosemous lemmas never form classes: systematic polysemy requires at
    least two related senses.
    """
    groups: dict[SenseProfile, set[str]] = {}
    for lemma, profile in inventory.profiles().items():
        groups.setdefault(profile, set()).add(lemma)
    return {
        PolyClass(profile, frozenset(members))
        for profile, members in groups.items()
        if len(profile) >= 2 and len(members) >= 2
    }


def apply_exclusions(classes: set[PolyClass], exclusions: ExclusionList) -> set[PolyClass]:
    """Drop excluded classes and members; drop classes reduced below 2 members."""
    out = set()
    for cls in classes:
        if cls.profile in exclusions.excluded_profiles:
            continue
        members = frozenset(
            m for m in cls.members if (cls.profile, m) not in exclusions.excluded_members
        )
        if len(members) >= 2:
            out.add(PolyClass(cls.profile, members))
    return out


def homonym_census(inventory: Inventory, type_map) -> tuple[set[str], int]:
    """Lemmas whose profile is tagged with two or more semantic types.

    ``type_map`` maps a rendered profile string to the list of type names
    covering it (see ``semtypes.TypeSystem.profile_map``).  A lemma tagged
    with several types has unrelated sense groups, i.e. is a homonym.
    """
    homonyms = set()
    for lemma, profile in inventory.profiles().items():
        if len(type_map.get(profile.render(), ())) >= 2:
            homonyms.add(lemma)
    return homonyms, len(homonyms)
