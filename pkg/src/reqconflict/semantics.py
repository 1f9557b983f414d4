"""Relational operators over requirement elements: equivalence, inclusion and
contradiction for strings, entities, entity sets, operations, restrictions
and events, backed by a synonym lexicon.

String comparison is case-insensitive and synonym-aware: every string maps
to a canonical form (whole-phrase synonym group representative when the
phrase is in the lexicon, otherwise the per-token representatives), and two
strings are equivalent exactly when their canonical forms coincide. That
makes string equivalence a true equivalence relation, which the detector's
grouping relies on.

Wildcard agents: an absent agent stands for "any entity" and compares equal
to every agent in all conflict-rule contexts.

ALL events: ALL is the always-satisfied trigger, hence the weakest
condition. Every event includes ALL; ALL includes no conditional event.

Restriction contradiction has no published rule; here two restrictions
contradict when both carry a constraint of the same value category
(frequency, quantity, time or place) with non-equivalent values. Reports
flag findings that rely on this extrapolated rule.
"""

from __future__ import annotations

import re
from enum import Enum
from pathlib import Path

from .model import (
    Condition,
    Entity,
    EventKind,
    EventSpec,
    OperationMode,
    OperationSpec,
)


class SynonymLexicon:
    """Disjoint groups of mutually synonymous phrases.

    Lookup is symmetric and transitive within a group: every member maps to
    one canonical representative (the lexicographically smallest member).
    """

    def __init__(self, groups: list[list[str]] | None = None):
        self._rep: dict[str, str] = {}
        for group in groups or []:
            members = sorted({_normalize(w) for w in group if _normalize(w)})
            if len(members) < 2:
                continue
            rep = members[0]
            for member in members:
                existing = self._rep.get(member)
                if existing is not None and existing != rep:
                    raise ValueError(f"synonym groups are not disjoint: {member!r}")
                self._rep[member] = rep

    @classmethod
    def from_file(cls, path: str | Path) -> "SynonymLexicon":
        """Load groups from UTF-8 text: one comma-separated group per line,
        ``#`` starts a comment."""
        groups = []
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            groups.append([part.strip() for part in line.split(",") if part.strip()])
        return cls(groups)

    @classmethod
    def empty(cls) -> "SynonymLexicon":
        return cls([])

    def representative(self, phrase: str) -> str:
        return self._rep.get(phrase, phrase)

    def __contains__(self, phrase: str) -> bool:
        return _normalize(phrase) in self._rep


def _normalize(s: str) -> str:
    return " ".join(s.lower().split())


def canonical_string(s: str, lex: SynonymLexicon) -> str:
    """Canonical comparison form: whole-phrase group representative if the
    phrase is in the lexicon, else token-wise representatives."""
    norm = _normalize(s)
    if norm in lex:
        return lex.representative(norm)
    return " ".join(lex.representative(tok) for tok in norm.split())


def string_eq(a: str, b: str, lex: SynonymLexicon) -> bool:
    """Strings are equivalent when identical case-insensitively or synonyms
    (whole-phrase or token-wise group co-membership)."""
    return canonical_string(a, lex) == canonical_string(b, lex)


# ---------------------------------------------------------------------------
# Entities and entity sets
# ---------------------------------------------------------------------------

def entity_includes(e1: Entity, e2: Entity, lex: SynonymLexicon) -> bool:
    """True when e1 denotes the more general entity (equal base, every
    modifier of e1 matched among e2's) or e2 is a part of e1 (a modifier
    "of <e1.base>" or "<e1.base>'s")."""
    if string_eq(e1.base, e2.base, lex):
        if all(any(string_eq(m1, m2, lex) for m2 in e2.modifiers)
               for m1 in e1.modifiers):
            return True
    of_form = f"of {e1.base}"
    poss_form = f"{e1.base}'s"
    return any(string_eq(m, of_form, lex) or string_eq(m, poss_form, lex)
               for m in e2.modifiers)


def entity_eq(e1: Entity, e2: Entity, lex: SynonymLexicon) -> bool:
    """Equal base and mutually matching modifier sets."""
    if not string_eq(e1.base, e2.base, lex):
        return False
    return (all(any(string_eq(m1, m2, lex) for m2 in e2.modifiers) for m1 in e1.modifiers)
            and all(any(string_eq(m2, m1, lex) for m1 in e1.modifiers) for m2 in e2.modifiers))


def entityset_includes(s1: frozenset, s2: frozenset, lex: SynonymLexicon) -> bool:
    """Every entity of s2 is included in some entity of s1 (vacuous on empty s2)."""
    return all(any(entity_includes(e1, e2, lex) for e1 in s1) for e2 in s2)


def entityset_eq(s1: frozenset, s2: frozenset, lex: SynonymLexicon) -> bool:
    return entityset_includes(s1, s2, lex) and entityset_includes(s2, s1, lex)


def agent_eq(a1: Entity | None, a2: Entity | None, lex: SynonymLexicon) -> bool:
    """Agent equality with the wildcard rule: absent matches anything."""
    if a1 is None or a2 is None:
        return True
    return entity_eq(a1, a2, lex)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

class OpRelation(str, Enum):
    EQUIVALENT = "EQUIVALENT"
    INCLUDES = "INCLUDES"
    INCLUDED_BY = "INCLUDED_BY"
    CONTRADICTS = "CONTRADICTS"
    UNRELATED = "UNRELATED"


def op_relation(o1: OperationSpec, o2: OperationSpec, lex: SynonymLexicon) -> OpRelation:
    """Relate two operations.

    Equal predicates with equal modes are equivalent. A DEFAULT or NOT
    operation includes the ABLE form of the same predicate (obligation and
    prohibition both cover mere capability). DEFAULT against NOT on the same
    predicate cannot both be satisfied, so they contradict. Anything else is
    unrelated.
    """
    if not string_eq(o1.predicate, o2.predicate, lex):
        return OpRelation.UNRELATED
    if o1.mode == o2.mode:
        return OpRelation.EQUIVALENT
    modes = {o1.mode, o2.mode}
    if modes == {OperationMode.DEFAULT, OperationMode.NOT}:
        return OpRelation.CONTRADICTS
    if o2.mode is OperationMode.ABLE:
        return OpRelation.INCLUDES
    return OpRelation.INCLUDED_BY


def op_includes(o1: OperationSpec, o2: OperationSpec, lex: SynonymLexicon) -> bool:
    """Inclusion used by the conflict rules; equivalence also includes."""
    return op_relation(o1, o2, lex) in (OpRelation.EQUIVALENT, OpRelation.INCLUDES)


def op_contradicts(o1: OperationSpec, o2: OperationSpec, lex: SynonymLexicon) -> bool:
    return op_relation(o1, o2, lex) is OpRelation.CONTRADICTS


# ---------------------------------------------------------------------------
# Restrictions
# ---------------------------------------------------------------------------

def restriction_includes(r1: frozenset, r2: frozenset, lex: SynonymLexicon) -> bool:
    """r1 is at least as strict: every constraint of r2 is matched in r1."""
    return all(any(string_eq(c1, c2, lex) for c1 in r1) for c2 in r2)


def restriction_eq(r1: frozenset, r2: frozenset, lex: SynonymLexicon) -> bool:
    return restriction_includes(r1, r2, lex) and restriction_includes(r2, r1, lex)


class ConstraintCategory(str, Enum):
    FREQUENCY = "FREQUENCY"
    QUANTITY = "QUANTITY"
    TIME = "TIME"
    PLACE = "PLACE"
    OTHER = "OTHER"


_FREQUENCY_WORDS = frozenset({
    "every", "per", "times", "once", "twice", "hourly", "daily", "weekly",
    "monthly", "quarterly", "yearly", "annually",
})
_NUMBER_WORDS = frozenset({
    "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
    "ten", "dozen", "hundred", "thousand",
})
_TIME_HEADS = frozenset({"at", "after", "before", "during", "within", "until", "by"})
_PLACE_HEADS = frozenset({"in", "on", "near", "inside", "outside", "above", "below"})
_NUMERIC_RE = re.compile(r"\d")


def constraint_category(constraint: str) -> ConstraintCategory:
    """Classify one constraint into the value categories that can oppose
    each other. Plain manner adverbs fall into OTHER and never contradict."""
    words = _normalize(constraint).split()
    if not words:
        return ConstraintCategory.OTHER
    if any(w in _FREQUENCY_WORDS for w in words):
        return ConstraintCategory.FREQUENCY
    if "only" in words or any(w in _NUMBER_WORDS or _NUMERIC_RE.search(w) for w in words):
        return ConstraintCategory.QUANTITY
    if words[0] in _TIME_HEADS:
        return ConstraintCategory.TIME
    if words[0] in _PLACE_HEADS:
        return ConstraintCategory.PLACE
    return ConstraintCategory.OTHER


def restriction_contradicts(r1: frozenset, r2: frozenset, lex: SynonymLexicon) -> bool:
    """Both restrictions constrain the same value category with values that
    fail string equivalence. Extrapolated rule; see module docstring."""
    for c1 in r1:
        cat1 = constraint_category(c1)
        if cat1 is ConstraintCategory.OTHER:
            continue
        for c2 in r2:
            if constraint_category(c2) is cat1 and not string_eq(c1, c2, lex):
                return True
    return False


# ---------------------------------------------------------------------------
# Events
# ---------------------------------------------------------------------------

def condition_includes(c1: Condition, c2: Condition, lex: SynonymLexicon) -> bool:
    """c1 covers c2: equal agent, operation/input/output inclusion, equal
    restriction."""
    return (agent_eq(c1.agent, c2.agent, lex)
            and op_includes(c1.operation, c2.operation, lex)
            and entityset_includes(c1.input, c2.input, lex)
            and entityset_includes(c1.output, c2.output, lex)
            and restriction_eq(c1.restriction, c2.restriction, lex))


def event_includes(e1: EventSpec, e2: EventSpec, lex: SynonymLexicon) -> bool:
    """Whenever e1 is satisfied, e2 is: every condition of e2 is covered by
    some condition of e1. ALL is always satisfied, so every event includes
    ALL and ALL includes no conditional event."""
    if e2.kind is EventKind.ALL:
        return True
    if e1.kind is EventKind.ALL:
        return False
    return all(any(condition_includes(c1, c2, lex) for c1 in e1.conditions)
               for c2 in e2.conditions)


def event_eq(e1: EventSpec, e2: EventSpec, lex: SynonymLexicon) -> bool:
    return event_includes(e1, e2, lex) and event_includes(e2, e1, lex)


def event_self_contradicts(e: EventSpec, lex: SynonymLexicon) -> bool:
    """An AND-joined event with two conditions that cannot hold together:
    equal agent, contradicting operations, and input/output inclusion.
    OR-joined events are alternatives and never self-contradict."""
    if e.kind is not EventKind.CONDITIONS or len(e.conditions) < 2:
        return False
    from .model import Connective
    if e.connective is Connective.OR:
        return False
    for c1 in e.conditions:
        for c2 in e.conditions:
            if c1 is c2:
                continue
            if (agent_eq(c1.agent, c2.agent, lex)
                    and op_contradicts(c1.operation, c2.operation, lex)
                    and entityset_includes(c1.input, c2.input, lex)
                    and entityset_includes(c1.output, c2.output, lex)):
                return True
    return False


# ---------------------------------------------------------------------------
# Canonical keys
#
# Deterministic renderings under which key equality implies semantic
# equivalence. The detector groups requirements by (event key, agent key);
# the wildcard agent gets its own key so grouping stays a partition.
# ---------------------------------------------------------------------------

def canonical_entity_key(e: Entity, lex: SynonymLexicon) -> str:
    mods = ",".join(sorted(canonical_string(m, lex) for m in e.modifiers))
    return f"{canonical_string(e.base, lex)}[{mods}]"

def canonical_entityset_key(s: frozenset, lex: SynonymLexicon) -> str:
    return "{" + "|".join(sorted(canonical_entity_key(e, lex) for e in s)) + "}"

def canonical_operation_key(o: OperationSpec, lex: SynonymLexicon) -> str:
    return f"{o.mode.value} {canonical_string(o.predicate, lex)}"

def canonical_restriction_key(r: frozenset, lex: SynonymLexicon) -> str:
    return "{" + "|".join(sorted(canonical_string(c, lex) for c in r)) + "}"

def canonical_condition_key(c: Condition, lex: SynonymLexicon) -> str:
    agent = canonical_entity_key(c.agent, lex) if c.agent is not None else "*"
    return ";".join([agent,
                     canonical_operation_key(c.operation, lex),
                     canonical_entityset_key(c.input, lex),
                     canonical_entityset_key(c.output, lex),
                     canonical_restriction_key(c.restriction, lex)])

def canonical_event_key(e: EventSpec, lex: SynonymLexicon) -> str:
    if e.kind is EventKind.ALL:
        return "ALL"
    conds = "&".join(sorted(canonical_condition_key(c, lex) for c in e.conditions))
    connective = e.connective.value if e.connective else ""
    return f"{connective}({conds})"

def canonical_agent_key(a: Entity | None, lex: SynonymLexicon) -> str:
    return canonical_entity_key(a, lex) if a is not None else "*"
