"""The semantic requirement model: immutable tuples plus their well-formedness
rules and a canonical, round-trippable record format.

A requirement is the tuple {id, group_id, event, agent, operation, input,
output, restriction}. Entities are a noun base plus a set of modifier
strings; input and output are sets of entities; a restriction is a set of
atomic constraint strings; an event is either the always-true trigger ALL or
a list of conditions (each itself a five-part tuple) joined by one
connective. Absent agent means any actor may perform the operation.

All values are frozen dataclasses over frozensets, so equality ignores
modifier and constraint ordering, and instances are safely shareable across
threads.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum


class OperationMode(str, Enum):
    DEFAULT = "DEFAULT"
    ABLE = "ABLE"
    NOT = "NOT"


class EventKind(str, Enum):
    ALL = "ALL"
    CONDITIONS = "CONDITIONS"


class Connective(str, Enum):
    AND = "AND"
    OR = "OR"


@dataclass(frozen=True)
class Entity:
    """A noun head (``base``) plus its semantic modifiers."""

    base: str
    modifiers: frozenset[str] = frozenset()

    def render(self) -> str:
        if not self.modifiers:
            return self.base
        return f"{self.base} ({'; '.join(sorted(self.modifiers))})"


#: Input and output are sets of entities; empty means none involved.
EntitySet = frozenset  # frozenset[Entity]

#: A restriction is a set of atomic constraint strings; empty means none.
Restriction = frozenset  # frozenset[str]


@dataclass(frozen=True)
class OperationSpec:
    """The action of a requirement: an execution mode plus predicate text."""

    mode: OperationMode
    predicate: str

    def render(self) -> str:
        return f"{self.mode.value} {self.predicate}"


@dataclass(frozen=True)
class Condition:
    """One trigger clause: who must do what, on what, under what constraints."""

    agent: Entity | None
    operation: OperationSpec
    input: frozenset[Entity] = frozenset()
    output: frozenset[Entity] = frozenset()
    restriction: frozenset[str] = frozenset()


@dataclass(frozen=True)
class EventSpec:
    """Trigger of a requirement: ALL (always) or conditions with a connective."""

    kind: EventKind
    conditions: tuple[Condition, ...] = ()
    connective: Connective | None = None

    @classmethod
    def all(cls) -> "EventSpec":
        return cls(kind=EventKind.ALL)

    @classmethod
    def when(cls, *conditions: Condition,
             connective: Connective | None = None) -> "EventSpec":
        if len(conditions) >= 2 and connective is None:
            connective = Connective.AND
        if len(conditions) < 2:
            connective = None
        return cls(kind=EventKind.CONDITIONS, conditions=tuple(conditions),
                   connective=connective)


@dataclass(frozen=True)
class Requirement:
    """One requirement in the semantic model. ``agent=None`` means any agent."""

    id: str
    group_id: int
    event: EventSpec
    agent: Entity | None
    operation: OperationSpec
    input: frozenset[Entity] = frozenset()
    output: frozenset[Entity] = frozenset()
    restriction: frozenset[str] = frozenset()


_ID_RE = re.compile(r"^[A-Za-z][A-Za-z0-9#_.~-]*$")


def _validate_entity(entity: Entity, where: str, problems: list[str]) -> None:
    if not entity.base.strip():
        problems.append(f"{where}: entity base is empty")
    for mod in entity.modifiers:
        if not mod.strip():
            problems.append(f"{where}: empty modifier on entity {entity.base!r}")


def _validate_event(event: EventSpec, where: str, problems: list[str]) -> None:
    if event.kind is EventKind.ALL and event.conditions:
        problems.append(f"{where}: event marked ALL but has conditions")
    if event.kind is EventKind.CONDITIONS and not event.conditions:
        problems.append(f"{where}: event marked CONDITIONS but has none")
    if len(event.conditions) >= 2 and event.connective is None:
        problems.append(f"{where}: multiple conditions need a connective")
    if len(event.conditions) < 2 and event.connective is not None:
        problems.append(f"{where}: connective given for fewer than two conditions")
    for i, cond in enumerate(event.conditions, 1):
        cwhere = f"{where} condition {i}"
        if cond.agent is not None:
            _validate_entity(cond.agent, cwhere, problems)
        if not cond.operation.predicate.strip():
            problems.append(f"{cwhere}: empty predicate")
        for ent in list(cond.input) + list(cond.output):
            _validate_entity(ent, cwhere, problems)
        for c in cond.restriction:
            if not c.strip():
                problems.append(f"{cwhere}: empty restriction constraint")


def validate_requirement_set(reqs: list[Requirement]) -> list[str]:
    """Check structural invariants across a requirement set.

    Returns a list of human-readable violations; an empty list means the set
    is well formed. Violations are data, not exceptions: id uniqueness and
    shape, event shape, non-empty bases/predicates/constraints, and group
    coherence (requirements sharing a group_id must share agent and event).
    """
    problems: list[str] = []
    seen_ids: set[str] = set()
    groups: dict[int, Requirement] = {}

    for req in reqs:
        where = f"requirement {req.id!r}"
        if req.id in seen_ids:
            problems.append(f"duplicate requirement id {req.id!r}")
        seen_ids.add(req.id)
        if not _ID_RE.match(req.id):
            problems.append(f"{where}: id must start with a letter and use letters/digits")
        if req.group_id < 0:
            problems.append(f"{where}: group_id must be a natural number")
        _validate_event(req.event, where, problems)
        if req.agent is not None:
            _validate_entity(req.agent, where, problems)
        if not req.operation.predicate.strip():
            problems.append(f"{where}: empty predicate")
        for ent in list(req.input) + list(req.output):
            _validate_entity(ent, where, problems)
        for c in req.restriction:
            if not c.strip():
                problems.append(f"{where}: empty restriction constraint")
        first = groups.setdefault(req.group_id, req)
        if first is not req and (first.agent != req.agent or first.event != req.event):
            problems.append(
                f"group {req.group_id}: requirements {first.id!r} and {req.id!r} "
                f"differ in agent or event")
    return problems


# ---------------------------------------------------------------------------
# Canonical text records
#
# One requirement per block; keys in fixed order; sets rendered sorted so the
# output is deterministic and diffable. parse_requirement() inverts
# serialize_requirement() exactly for any valid tuple whose strings avoid the
# record delimiters ("|", ";", "(", ")", "{", "}", newlines); extraction
# never produces those characters inside values.
# ---------------------------------------------------------------------------

EMPTY_MARK = "-"


def _render_entity_set(entities: frozenset) -> str:
    if not entities:
        return "{}"
    return "{" + " | ".join(sorted(e.render() for e in entities)) + "}"


def _render_restriction(restriction: frozenset) -> str:
    if not restriction:
        return "{}"
    return "{" + " | ".join(sorted(restriction)) + "}"


def _render_condition(cond: Condition) -> str:
    agent = cond.agent.render() if cond.agent is not None else EMPTY_MARK
    return (f"agent={agent}; operation={cond.operation.render()}; "
            f"input={_render_entity_set(cond.input)}; "
            f"output={_render_entity_set(cond.output)}; "
            f"restriction={_render_restriction(cond.restriction)}")


def serialize_requirement(req: Requirement) -> str:
    """Render one requirement as a canonical multi-line text record."""
    lines = [f"[requirement {req.id}]", f"group: {req.group_id}"]
    if req.event.kind is EventKind.ALL:
        lines.append("event: ALL")
    else:
        lines.append("event: WHEN")
        for cond in req.event.conditions:
            lines.append(f"  condition: {_render_condition(cond)}")
        if req.event.connective is not None:
            lines.append(f"  connective: {req.event.connective.value}")
    agent = req.agent.render() if req.agent is not None else EMPTY_MARK
    lines.append(f"agent: {agent}")
    lines.append(f"operation: {req.operation.render()}")
    lines.append(f"input: {_render_entity_set(req.input)}")
    lines.append(f"output: {_render_entity_set(req.output)}")
    lines.append(f"restriction: {_render_restriction(req.restriction)}")
    return "\n".join(lines) + "\n"


class RecordParseError(ValueError):
    """A canonical requirement record could not be parsed back."""


def _parse_entity(text: str) -> Entity:
    text = text.strip()
    if text.endswith(")") and " (" in text:
        base, _, mods = text[:-1].partition(" (")
        modifiers = frozenset(m.strip() for m in mods.split(";") if m.strip())
        return Entity(base=base.strip(), modifiers=modifiers)
    return Entity(base=text)


def _parse_entity_set(text: str) -> frozenset:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise RecordParseError(f"expected {{...}} entity set, got {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return frozenset()
    return frozenset(_parse_entity(part) for part in inner.split(" | "))


def _parse_restriction(text: str) -> frozenset:
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise RecordParseError(f"expected {{...}} restriction, got {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return frozenset()
    return frozenset(part.strip() for part in inner.split(" | "))


def _parse_operation(text: str) -> OperationSpec:
    mode, _, predicate = text.strip().partition(" ")
    try:
        return OperationSpec(mode=OperationMode(mode), predicate=predicate.strip())
    except ValueError:
        raise RecordParseError(f"bad operation {text!r}") from None


def _parse_condition(text: str) -> Condition:
    # Entity modifiers use "; " inside parentheses, so fields are located by
    # their key markers rather than split on the separator.
    fields = _split_condition_fields(text)
    agent = None if fields["agent"].strip() == EMPTY_MARK else _parse_entity(fields["agent"])
    return Condition(
        agent=agent,
        operation=_parse_operation(fields["operation"]),
        input=_parse_entity_set(fields["input"]),
        output=_parse_entity_set(fields["output"]),
        restriction=_parse_restriction(fields["restriction"]),
    )


def _split_condition_fields(text: str) -> dict[str, str]:
    keys = ["agent", "operation", "input", "output", "restriction"]
    positions = []
    for key in keys:
        marker = f"{key}="
        pos = text.find(marker) if not positions else text.find("; " + marker)
        if pos < 0:
            raise RecordParseError(f"condition missing field {key!r}: {text!r}")
        positions.append((pos if not positions else pos + 2, key))
    fields = {}
    for i, (pos, key) in enumerate(positions):
        end = positions[i + 1][0] - 2 if i + 1 < len(positions) else len(text)
        fields[key] = text[pos + len(key) + 1:end]
    return fields


def parse_requirement(record: str) -> Requirement:
    """Parse one canonical text record back into a Requirement."""
    lines = [ln for ln in record.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("[requirement "):
        raise RecordParseError("record must start with '[requirement <id>]'")
    req_id = lines[0][len("[requirement "):].rstrip("]").strip()

    fields: dict[str, str] = {}
    conditions: list[Condition] = []
    connective: Connective | None = None
    for line in lines[1:]:
        stripped = line.strip()
        if stripped.startswith("condition:"):
            conditions.append(_parse_condition(stripped[len("condition:"):].strip()))
        elif stripped.startswith("connective:"):
            connective = Connective(stripped[len("connective:"):].strip())
        else:
            key, _, value = stripped.partition(":")
            fields[key.strip()] = value.strip()

    missing = {"group", "event", "agent", "operation", "input", "output",
               "restriction"} - set(fields)
    if missing:
        raise RecordParseError(f"record missing fields: {sorted(missing)}")

    if fields["event"] == "ALL":
        event = EventSpec.all()
    else:
        event = EventSpec(kind=EventKind.CONDITIONS, conditions=tuple(conditions),
                          connective=connective)
    agent = None if fields["agent"] == EMPTY_MARK else _parse_entity(fields["agent"])
    return Requirement(
        id=req_id,
        group_id=int(fields["group"]),
        event=event,
        agent=agent,
        operation=_parse_operation(fields["operation"]),
        input=_parse_entity_set(fields["input"]),
        output=_parse_entity_set(fields["output"]),
        restriction=_parse_restriction(fields["restriction"]),
    )


def serialize_requirements(reqs: list[Requirement]) -> str:
    return "\n".join(serialize_requirement(r) for r in reqs)


def parse_requirements(text: str) -> list[Requirement]:
    blocks = re.split(r"\n(?=\[requirement )", text.strip())
    return [parse_requirement(b) for b in blocks if b.strip()]


# ---------------------------------------------------------------------------
# JSON-friendly dict form (machine-readable export)
# ---------------------------------------------------------------------------

def entity_to_dict(entity: Entity) -> dict:
    return {"base": entity.base, "modifiers": sorted(entity.modifiers)}


def entity_from_dict(data: dict) -> Entity:
    return Entity(base=data["base"], modifiers=frozenset(data.get("modifiers", ())))


def _condition_to_dict(cond: Condition) -> dict:
    return {
        "agent": entity_to_dict(cond.agent) if cond.agent is not None else None,
        "operation": {"mode": cond.operation.mode.value,
                      "predicate": cond.operation.predicate},
        "input": [entity_to_dict(e) for e in sorted(cond.input, key=lambda e: e.render())],
        "output": [entity_to_dict(e) for e in sorted(cond.output, key=lambda e: e.render())],
        "restriction": sorted(cond.restriction),
    }


def _condition_from_dict(data: dict) -> Condition:
    return Condition(
        agent=entity_from_dict(data["agent"]) if data.get("agent") else None,
        operation=OperationSpec(mode=OperationMode(data["operation"]["mode"]),
                                predicate=data["operation"]["predicate"]),
        input=frozenset(entity_from_dict(e) for e in data.get("input", ())),
        output=frozenset(entity_from_dict(e) for e in data.get("output", ())),
        restriction=frozenset(data.get("restriction", ())),
    )


def requirement_to_dict(req: Requirement) -> dict:
    return {
        "id": req.id,
        "group_id": req.group_id,
        "event": {
            "kind": req.event.kind.value,
            "conditions": [_condition_to_dict(c) for c in req.event.conditions],
            "connective": req.event.connective.value if req.event.connective else None,
        },
        "agent": entity_to_dict(req.agent) if req.agent is not None else None,
        "operation": {"mode": req.operation.mode.value,
                      "predicate": req.operation.predicate},
        "input": [entity_to_dict(e) for e in sorted(req.input, key=lambda e: e.render())],
        "output": [entity_to_dict(e) for e in sorted(req.output, key=lambda e: e.render())],
        "restriction": sorted(req.restriction),
    }


def requirement_from_dict(data: dict) -> Requirement:
    event = data["event"]
    return Requirement(
        id=data["id"],
        group_id=data["group_id"],
        event=EventSpec(
            kind=EventKind(event["kind"]),
            conditions=tuple(_condition_from_dict(c) for c in event.get("conditions", ())),
            connective=Connective(event["connective"]) if event.get("connective") else None,
        ),
        agent=entity_from_dict(data["agent"]) if data.get("agent") else None,
        operation=OperationSpec(mode=OperationMode(data["operation"]["mode"]),
                                predicate=data["operation"]["predicate"]),
        input=frozenset(entity_from_dict(e) for e in data.get("input", ())),
        output=frozenset(entity_from_dict(e) for e in data.get("output", ())),
        restriction=frozenset(data.get("restriction", ())),
    )


def requirements_to_json(reqs: list[Requirement]) -> str:
    return json.dumps([requirement_to_dict(r) for r in reqs], indent=2, sort_keys=True)


def requirements_from_json(text: str) -> list[Requirement]:
    return [requirement_from_dict(d) for d in json.loads(text)]
