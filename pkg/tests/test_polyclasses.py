from polylex.polyclasses import (
    PolyClass,
    apply_exclusions,
    derive_classes,
    homonym_census,
    parse_exclusions,
)
from polylex.senses import SenseProfile, parse_inventory


def _classes_by_profile(classes):
    return {c.profile.render(): set(c.members) for c in classes}


def test_derive_requires_two_members_and_two_senses():
    inv = parse_inventory(
        "a\t1\tart\na\t2\tcom\n"      # polysemous, but alone
        "b\t1\tart\nc\t1\tart\n"      # shared monosemous profile
        "d\t1\tanm\nd\t2\tfod\ne\t1\tanm\ne\t2\tfod\n"
    )
    classes = _classes_by_profile(derive_classes(inv))
    assert classes == {"anm fod": {"d", "e"}}


def test_parse_exclusions_whole_class_and_members():
    excl = parse_exclusions("# curated\nact anm art\nact log\tbolivia\nact log\tChicago\n")
    assert SenseProfile.parse("act anm art") in excl.excluded_profiles
    assert (SenseProfile.parse("act log"), "bolivia") in excl.excluded_members
    assert (SenseProfile.parse("act log"), "chicago") in excl.excluded_members


def test_apply_exclusions_drops_shrunk_classes():
    profile = SenseProfile.parse("act log")
    classes = {PolyClass(profile, frozenset({"a", "b", "c"}))}
    excl = parse_exclusions("act log\ta\nact log\tb\n")
    assert apply_exclusions(classes, excl) == set()
    excl2 = parse_exclusions("act log\ta\n")
    kept = apply_exclusions(classes, excl2)
    assert _classes_by_profile(kept) == {"act log": {"b", "c"}}


def test_shipped_classes(inventory, exclusions):
    classes = _classes_by_profile(apply_exclusions(derive_classes(inventory), exclusions))
    assert "act anm art" not in classes
    assert classes["act log"] == {
        "caliphate", "clearing", "emirate", "prefecture",
        "repair", "santiago", "wheeling",
    }
    assert classes["lme qud"] == {"em", "fathom", "fthm", "inch", "mil"}
    assert classes["art com"] == {"book", "journal", "scoreboard"}


def test_homonym_census(inventory, type_system):
    homonyms, count = homonym_census(inventory, type_system.profile_map())
    assert homonyms == {"bank"}
    assert count == 1


def test_homonym_census_empty_map(inventory):
    homonyms, count = homonym_census(inventory, {})
    assert homonyms == set() and count == 0
