"""Underspecified semantic types: simple and dotted types with qualia skeletons.

A dotted type bundles two or more basic senses under one type constructor:
a closed dot for aspects that are interpreted simultaneously, an open dot
for aspects picked out one at a time.  Each type covers one or more sense
profiles; tagging a lemma means looking up the type(s) covering its
profile.  Homonymic profiles are explicitly declared and map to several
types, one per unrelated sense group.
"""

from __future__ import annotations

import io
import json
from dataclasses import dataclass
from typing import TextIO

from .senses import TAG_NAMES, SenseProfile, check_tag

CONSTRUCTORS = ("simple", "closed", "open")

#: Rendered connectives for dotted-type names, e.g. "act*relation".
DOT = {"closed": "*", "open": "~"}


class TypeSystemError(ValueError):
    """Raised on invalid or inconsistent type definitions."""


class UnknownTypeError(KeyError):
    """Raised when a type name is not defined in the type system."""


@dataclass(frozen=True)
class DottedType:
    """A named semantic type built from one or more basic senses."""

    name: str
    constructor: str
    components: tuple[str, ...]

    def __post_init__(self):
        if self.constructor not in CONSTRUCTORS:
            raise TypeSystemError("unknown constructor %r" % self.constructor)
        for tag in self.components:
            check_tag(tag)
        if len(set(self.components)) != len(self.components):
            raise TypeSystemError("duplicate components in %r" % self.name)
        simple = self.constructor == "simple"
        if simple != (len(self.components) == 1):
            raise TypeSystemError(
                "type %r: %s constructor requires %s component(s)"
                % (self.name, self.constructor, "exactly 1" if simple else ">= 2")
            )

    @property
    def is_dotted(self) -> bool:
        return self.constructor != "simple"

    def component_names(self) -> list[str]:
        return [TAG_NAMES[t] for t in self.components]

    def dotted_name(self) -> str:
        """Human-readable rendering, e.g. ``act*relation`` or ``animal~food``."""
        if not self.is_dotted:
            return TAG_NAMES[self.components[0]]
        return DOT[self.constructor].join(self.component_names())


@dataclass(frozen=True)
class EventTemplate:
    """A telic or agentive predicate slot with its typed argument slots."""

    predicate_slot: str
    arg_types: tuple[str, ...]


@dataclass(frozen=True)
class QualiaSkeleton:
    """Structural metadata instantiated by the lexicon generator.

    ``constitutive`` slots name either a component of the formal type or
    the formal type itself; event templates do the same for each argument.
    """

    formal: DottedType
    constitutive: tuple[str, ...] = ()
    telic: tuple[EventTemplate, ...] = ()
    agentive: tuple[EventTemplate, ...] = ()

    def __post_init__(self):
        allowed = set(self.formal.component_names()) | {self.formal.name, self.formal.dotted_name()}
        for slot in self.constitutive:
            if slot not in allowed:
                raise TypeSystemError(
                    "type %r: constitutive slot %r outside formal components"
                    % (self.formal.name, slot)
                )
        for role, templates in (("telic", self.telic), ("agentive", self.agentive)):
            for tpl in templates:
                if not tpl.arg_types:
                    raise TypeSystemError(
                        "type %r: %s template %r has no argument slots"
                        % (self.formal.name, role, tpl.predicate_slot)
                    )
                for arg in tpl.arg_types:
                    if arg not in allowed:
                        raise TypeSystemError(
                            "type %r: %s argument %r outside formal components"
                            % (self.formal.name, role, arg)
                        )


@dataclass(frozen=True)
class UnderspecifiedType:
    """A qualia skeleton plus the sense profiles it tags."""

    skeleton: QualiaSkeleton
    covered_profiles: frozenset[str]
    homonym_profiles: frozenset[str] = frozenset()

    @property
    def name(self) -> str:
        return self.skeleton.formal.name


@dataclass(frozen=True)
class TagAssignment:
    """The semantic type name(s) assigned to one lemma."""

    lemma: str
    types: tuple[str, ...]

    def __post_init__(self):
        if not self.types or len(set(self.types)) != len(self.types):
            raise TypeSystemError("bad tag assignment for %r" % self.lemma)


class TypeSystem:
    """Immutable collection of underspecified types, keyed by name."""

    def __init__(self, types: list[UnderspecifiedType]):
        self._types: dict[str, UnderspecifiedType] = {}
        for t in types:
            if t.name in self._types:
                raise TypeSystemError("duplicate type name %r" % t.name)
            self._types[t.name] = t
        self._profile_map: dict[str, list[str]] = {}
        for t in types:
            for profile in t.covered_profiles:
                self._profile_map.setdefault(profile, []).append(t.name)
        for profile, owners in self._profile_map.items():
            owners.sort()
            if len(owners) >= 2:
                for name in owners:
                    t = self._types[name]
                    if profile not in t.homonym_profiles:
                        raise TypeSystemError(
                            "profile %r claimed by %s without homonym marker"
                            % (profile, " and ".join(owners))
                        )

    def __len__(self):
        return len(self._types)

    def __contains__(self, name):
        return name in self._types

    def names(self) -> list[str]:
        return sorted(self._types)

    def get(self, name: str) -> UnderspecifiedType:
        try:
            return self._types[name]
        except KeyError:
            raise UnknownTypeError(name) from None

    def profile_map(self) -> dict[str, list[str]]:
        """Rendered profile -> sorted list of covering type names."""
        return {p: list(names) for p, names in self._profile_map.items()}

    def subsumes(self, candidate: str, dotted: str) -> bool:
        """True iff ``candidate`` equals ``dotted`` or is a simple component of it."""
        cand = self.get(candidate).skeleton.formal
        dot = self.get(dotted).skeleton.formal
        if candidate == dotted:
            return True
        return not cand.is_dotted and cand.components[0] in dot.components

    def assign_tags(self, profiles: dict) -> dict[str, TagAssignment]:
        """Tag every lemma whose profile is covered; uncovered lemmas are omitted.

        ``profiles`` maps lemma -> SenseProfile (or rendered profile string).
        """
        out = {}
        for lemma in sorted(profiles):
            profile = profiles[lemma]
            rendered = profile if isinstance(profile, str) else profile.render()
            owners = self._profile_map.get(rendered)
            if owners:
                out[lemma] = TagAssignment(lemma, tuple(owners))
        return out

    def render(self) -> str:
        doc = {"types": [_type_to_doc(t) for t in (self._types[n] for n in self.names())]}
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _type_to_doc(t: UnderspecifiedType) -> dict:
    sk = t.skeleton
    return {
        "name": t.name,
        "constructor": sk.formal.constructor,
        "components": list(sk.formal.components),
        "covers": [
            {"profile": p, "homonym": p in t.homonym_profiles}
            for p in sorted(t.covered_profiles)
        ],
        "qualia": {
            "formal": sk.formal.dotted_name(),
            "constitutive": list(sk.constitutive),
            "telic": [
                {"predicate_slot": e.predicate_slot, "arg_types": list(e.arg_types)}
                for e in sk.telic
            ],
            "agentive": [
                {"predicate_slot": e.predicate_slot, "arg_types": list(e.arg_types)}
                for e in sk.agentive
            ],
        },
    }


def _type_from_doc(doc: dict) -> UnderspecifiedType:
    formal = DottedType(
        name=doc["name"],
        constructor=doc["constructor"],
        components=tuple(doc["components"]),
    )
    qualia = doc.get("qualia", {})
    skeleton = QualiaSkeleton(
        formal=formal,
        constitutive=tuple(qualia.get("constitutive", ())),
        telic=tuple(
            EventTemplate(e["predicate_slot"], tuple(e["arg_types"]))
            for e in qualia.get("telic", ())
        ),
        agentive=tuple(
            EventTemplate(e["predicate_slot"], tuple(e["arg_types"]))
            for e in qualia.get("agentive", ())
        ),
    )
    covered = []
    homonym = []
    for cover in doc.get("covers", ()):
        if isinstance(cover, str):
            cover = {"profile": cover}
        rendered = SenseProfile.parse(cover["profile"]).render()
        covered.append(rendered)
        if cover.get("homonym"):
            homonym.append(rendered)
    return UnderspecifiedType(skeleton, frozenset(covered), frozenset(homonym))


def parse_type_system(source: TextIO | str) -> TypeSystem:
    """Parse a JSON type-definition document (see the shipped typesystem.json)."""
    if isinstance(source, str):
        source = io.StringIO(source)
    try:
        doc = json.load(source)
    except json.JSONDecodeError as exc:
        raise TypeSystemError("invalid type-system JSON: %s" % exc) from None
    if not isinstance(doc, dict) or "types" not in doc:
        raise TypeSystemError("type-system document must have a 'types' list")
    return TypeSystem([_type_from_doc(d) for d in doc["types"]])
