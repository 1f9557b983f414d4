import pytest

from conftest import build
from reqconflict.extract import (
    ExtractionError,
    PrecheckFlag,
    extract,
    identify_agent,
    identify_event,
    identify_input_output,
    identify_operation,
    identify_restriction,
    parse_entity,
    precheck,
)
from reqconflict.model import Connective, Entity, EventKind, OperationMode


def bases(entities):
    return {e.base for e in entities}


def by_base(entities, base):
    return next(e for e in entities if e.base == base)


# ---------------------------------------------------------------------------
# precheck
# ---------------------------------------------------------------------------

def test_precheck_pronoun():
    sentence = build("P1", "It shall display a map.", [
        "1 It it PRON PRP 4 nsubj",
        "2 shall shall AUX MD 4 aux",
        "3 display display VERB VB 4 dep",
        "4 map map NOUN NN 0 root",
    ])
    assert precheck(sentence) == [PrecheckFlag.CONTAINS_PRONOUN]


def test_precheck_clean_sentence():
    sentence = build("P2", "The UAV shall land.", [
        "1 The the DET DT 2 det",
        "2 UAV UAV PROPN NNP 4 nsubj",
        "3 shall shall AUX MD 4 aux",
        "4 land land VERB VB 0 root",
        "5 . . PUNCT . 4 punct",
    ])
    assert precheck(sentence) == []


def test_precheck_missing_modal_and_keyword():
    sentence = build("P3", "Flights suspended, the system resumes monitoring.", [
        "1 Flights flight NOUN NNS 2 nsubjpass",
        "2 suspended suspend VERB VBN 6 advcl SpaceAfter=No",
        "3 , , PUNCT , 6 punct",
        "4 the the DET DT 5 det",
        "5 system system NOUN NN 6 nsubj",
        "6 resumes resume VERB VBZ 0 root",
        "7 monitoring monitoring NOUN NN 6 dobj SpaceAfter=No",
        "8 . . PUNCT . 6 punct",
    ])
    assert precheck(sentence) == [PrecheckFlag.MISSING_MODAL,
                                  PrecheckFlag.MISSING_CONDITIONAL_KEYWORD]


def test_precheck_mixed_connectives():
    sentence = build("P4", "When the alarm sounds or when the light flashes and when the door opens, the system shall halt.", [
        "1 When when ADV WRB 4 mark",
        "2 the the DET DT 3 det",
        "3 alarm alarm NOUN NN 4 nsubj",
        "4 sounds sound VERB VBZ 20 advcl",
        "5 or or CCONJ CC 4 cc",
        "6 when when ADV WRB 9 mark",
        "7 the the DET DT 8 det",
        "8 light light NOUN NN 9 nsubj",
        "9 flashes flash VERB VBZ 4 conj:or",
        "10 and and CCONJ CC 4 cc",
        "11 when when ADV WRB 14 mark",
        "12 the the DET DT 13 det",
        "13 door door NOUN NN 14 nsubj",
        "14 opens open VERB VBZ 4 conj:and SpaceAfter=No",
        "15 , , PUNCT , 20 punct",
        "16 the the DET DT 17 det",
        "17 system system NOUN NN 20 nsubj",
        "18 shall shall AUX MD 20 aux",
        "19 halt halt VERB VB 20 dep",
        "20 halt halt VERB VB 0 root",
    ])
    assert PrecheckFlag.MIXED_CONNECTIVES in precheck(sentence)


def test_precheck_nested_conditional():
    sentence = build("P5", "When the UAV lands if the wind rises, the pilot shall log it.", [
        "1 When when ADV WRB 4 mark",
        "2 the the DET DT 3 det",
        "3 UAV UAV PROPN NNP 4 nsubj",
        "4 lands land VERB VBZ 13 advcl",
        "5 if if SCONJ IN 8 mark",
        "6 the the DET DT 7 det",
        "7 wind wind NOUN NN 8 nsubj",
        "8 rises rise VERB VBZ 4 advcl SpaceAfter=No",
        "9 , , PUNCT , 13 punct",
        "10 the the DET DT 11 det",
        "11 pilot pilot NOUN NN 13 nsubj",
        "12 shall shall AUX MD 13 aux",
        "13 log log VERB VB 0 root",
        "14 flight flight NOUN NN 13 dobj SpaceAfter=No",
        "15 . . PUNCT . 13 punct",
    ])
    assert PrecheckFlag.NESTED_CONDITIONAL in precheck(sentence)


# ---------------------------------------------------------------------------
# operation (the four quoted constructions)
# ---------------------------------------------------------------------------

def test_operation_capability(paper8_by_id):
    op = identify_operation(paper8_by_id["RE1"])
    assert (op.mode, op.predicate) == (OperationMode.ABLE, "receive")


def test_operation_negated(paper8_by_id):
    op = identify_operation(paper8_by_id["RE2"])
    assert (op.mode, op.predicate) == (OperationMode.NOT, "issue")


def test_operation_infinitive_complement(paper8_by_id):
    op = identify_operation(paper8_by_id["RE3"])
    assert (op.mode, op.predicate) == (OperationMode.DEFAULT, "allow to delete")


def test_operation_copula(paper8_by_id):
    op = identify_operation(paper8_by_id["RE4"])
    assert (op.mode, op.predicate) == (OperationMode.DEFAULT, "be active")


def test_operation_passive(paper8_by_id):
    op = identify_operation(paper8_by_id["RE6"])
    assert (op.mode, op.predicate) == (OperationMode.DEFAULT, "be displayed")


def test_operation_able_modal():
    sentence = build("M1", "The operator may cancel the mission.", [
        "1 The the DET DT 2 det",
        "2 operator operator NOUN NN 4 nsubj",
        "3 may may AUX MD 4 aux",
        "4 cancel cancel VERB VB 0 root",
        "5 the the DET DT 6 det",
        "6 mission mission NOUN NN 4 dobj SpaceAfter=No",
        "7 . . PUNCT . 4 punct",
    ])
    op = identify_operation(sentence)
    assert (op.mode, op.predicate) == (OperationMode.ABLE, "cancel")


def test_operation_enable_directive():
    sentence = build("M3", "The system shall enable the operator to cancel the mission.", [
        "1 The the DET DT 2 det",
        "2 system system NOUN NN 4 nsubj",
        "3 shall shall AUX MD 4 aux",
        "4 enable enable VERB VB 0 root",
        "5 the the DET DT 6 det",
        "6 operator operator NOUN NN 4 dobj",
        "7 to to PART TO 8 mark",
        "8 cancel cancel VERB VB 4 xcomp",
        "9 the the DET DT 10 det",
        "10 mission mission NOUN NN 8 dobj SpaceAfter=No",
        "11 . . PUNCT . 4 punct",
    ])
    op = identify_operation(sentence)
    assert (op.mode, op.predicate) == (OperationMode.ABLE, "cancel")


def test_operation_other_default_modals():
    for modal in ("must", "will", "should"):
        sentence = build("M4", f"The UAV {modal} land.", [
            "1 The the DET DT 2 det",
            "2 UAV UAV PROPN NNP 4 nsubj",
            f"3 {modal} {modal} AUX MD 4 aux",
            "4 land land VERB VB 0 root SpaceAfter=No",
            "5 . . PUNCT . 4 punct",
        ])
        op = identify_operation(sentence)
        assert (op.mode, op.predicate) == (OperationMode.DEFAULT, "land")


def test_no_predicate_error():
    sentence = build("M2", "The red door.", [
        "1 The the DET DT 3 det",
        "2 red red ADJ JJ 3 amod",
        "3 door door NOUN NN 0 root SpaceAfter=No",
        "4 . . PUNCT . 3 punct",
    ])
    with pytest.raises(ExtractionError) as err:
        identify_operation(sentence)
    assert err.value.code == "NO_PREDICATE"


# ---------------------------------------------------------------------------
# agent
# ---------------------------------------------------------------------------

def test_agent_active_subject(paper8_by_id):
    agent = identify_agent(paper8_by_id["RE5"])
    assert agent == Entity(base="VehicleCore")


def test_agent_absent_for_passive_without_by(paper8_by_id):
    assert identify_agent(paper8_by_id["RE6"]) is None


def test_agent_from_by_phrase():
    rows = [
        "1 the the DET DT 2 det",
        "2 route route NOUN NN 5 nsubjpass",
        "3 shall shall AUX MD 5 aux",
        "4 be be AUX VB 5 auxpass",
        "5 approved approve VERB VBN 0 root",
        "6 by by ADP IN 8 case",
        "7 the the DET DT 8 det",
        "8 operator operator NOUN NN 5 nmod:agent SpaceAfter=No",
        "9 . . PUNCT . 5 punct",
    ]
    sentence = build("A1", "the route shall be approved by the operator.", rows)
    assert identify_agent(sentence) == Entity(base="operator")
    # same sentence with a case-marked plain nmod, as other parsers emit it
    rows[7] = "8 operator operator NOUN NN 5 nmod SpaceAfter=No"
    sentence = build("A2", "the route shall be approved by the operator.", rows)
    assert identify_agent(sentence) == Entity(base="operator")


def test_agent_missing_subject_errors():
    sentence = build("A3", "shall send data.", [
        "1 shall shall AUX MD 2 aux",
        "2 send send VERB VB 0 root",
        "3 data data NOUN NN 2 dobj SpaceAfter=No",
        "4 . . PUNCT . 2 punct",
    ])
    with pytest.raises(ExtractionError) as err:
        identify_agent(sentence)
    assert err.value.code == "NO_AGENT"


# ---------------------------------------------------------------------------
# event
# ---------------------------------------------------------------------------

def test_event_condition_decomposed(paper8_by_id):
    event = identify_event(paper8_by_id["RE2"])
    assert event.kind is EventKind.CONDITIONS
    assert len(event.conditions) == 1
    condition = event.conditions[0]
    assert condition.agent == Entity(base="UAV")
    assert (condition.operation.mode, condition.operation.predicate) == \
        (OperationMode.DEFAULT, "has")
    assert by_base(condition.input, "Obstacle Avoidance").modifiers == \
        frozenset({"active", "onboard"})
    assert by_base(condition.output, "Obstacle Avoidance")


def test_event_all_when_no_clause(paper8_by_id):
    event = identify_event(paper8_by_id["RE8"])
    assert event.kind is EventKind.ALL
    assert event.conditions == ()


def test_event_two_clauses_or_connective():
    sentence = build("E1", "When the alarm sounds or when the light flashes, the monitor shall alert the operator.", [
        "1 When when ADV WRB 4 mark",
        "2 the the DET DT 3 det",
        "3 alarm alarm NOUN NN 4 nsubj",
        "4 sounds sound VERB VBZ 14 advcl",
        "5 or or CCONJ CC 4 cc",
        "6 when when ADV WRB 9 mark",
        "7 the the DET DT 8 det",
        "8 light light NOUN NN 9 nsubj",
        "9 flashes flash VERB VBZ 4 conj:or SpaceAfter=No",
        "10 , , PUNCT , 14 punct",
        "11 the the DET DT 12 det",
        "12 monitor monitor NOUN NN 14 nsubj",
        "13 shall shall AUX MD 14 aux",
        "14 alert alert VERB VB 0 root",
        "15 the the DET DT 16 det",
        "16 operator operator NOUN NN 14 dobj SpaceAfter=No",
        "17 . . PUNCT . 14 punct",
    ])
    event = identify_event(sentence)
    assert event.kind is EventKind.CONDITIONS
    assert len(event.conditions) == 2
    assert event.connective is Connective.OR
    assert event.conditions[0].agent == Entity(base="alarm")
    assert event.conditions[0].operation.predicate == "sounds"
    assert event.conditions[1].agent == Entity(base="light")
    assert event.conditions[1].operation.predicate == "flashes"


def test_event_malformed_keyword_without_clause():
    sentence = build("E2", "When, the system shall halt.", [
        "1 When when ADV WRB 6 advmod SpaceAfter=No",
        "2 , , PUNCT , 6 punct",
        "3 the the DET DT 4 det",
        "4 system system NOUN NN 6 nsubj",
        "5 shall shall AUX MD 6 aux",
        "6 halt halt VERB VB 0 root SpaceAfter=No",
        "7 . . PUNCT . 6 punct",
    ])
    with pytest.raises(ExtractionError) as err:
        identify_event(sentence)
    assert err.value.code == "MALFORMED_EVENT"


def test_event_uses_supplied_clause_parse(paper8_by_id):
    replacement = build("RE2#event1", "a UAV has an active onboard Obstacle Avoidance", [
        "1 a a DET DT 2 det",
        "2 UAV UAV PROPN NNP 3 nsubj",
        "3 has have VERB VBZ 0 root",
        "4 an a DET DT 8 det",
        "5 active active ADJ JJ 8 amod",
        "6 onboard onboard ADJ JJ 8 amod",
        "7 Obstacle Obstacle PROPN NNP 8 compound",
        "8 Avoidance Avoidance PROPN NNP 3 dobj",
    ])
    event = identify_event(paper8_by_id["RE2"], event_parses={1: replacement})
    assert event.conditions[0].agent == Entity(base="UAV")


# ---------------------------------------------------------------------------
# input / output
# ---------------------------------------------------------------------------

def test_io_direct_object_both_sets(paper8_by_id):
    inp, out = identify_input_output(paper8_by_id["RE5"])
    waypoint = by_base(inp, "waypoint")
    assert waypoint.modifiers == frozenset({"next"})
    assert by_base(out, "waypoint") == waypoint
    assert "UAV" in bases(inp)
    assert "UAV" not in bases(out)


def test_io_formal_subject(paper8_by_id):
    inp, out = identify_input_output(paper8_by_id["RE6"])
    assert bases(inp) == {"map"}
    assert bases(out) == {"map"}


def test_io_nmod_to_input_only(paper8_by_id):
    inp, out = identify_input_output(paper8_by_id["RE7"])
    uavs = by_base(inp, "UAV")
    assert uavs.modifiers == frozenset({"one", "or", "multiple"})
    assert "map" in bases(inp)
    assert "map" not in bases(out)


def test_io_excluded_nmod_subtypes(paper8_by_id):
    inp, out = identify_input_output(paper8_by_id["RE8"])
    assert "time" not in bases(inp)
    assert "UAV" in bases(inp)


def test_io_intransitive_empty():
    sentence = build("I1", "The UAV shall hover.", [
        "1 The the DET DT 2 det",
        "2 UAV UAV PROPN NNP 4 nsubj",
        "3 shall shall AUX MD 4 aux",
        "4 hover hover VERB VB 0 root SpaceAfter=No",
        "5 . . PUNCT . 4 punct",
    ])
    inp, out = identify_input_output(sentence)
    assert inp == frozenset() and out == frozenset()


# ---------------------------------------------------------------------------
# restriction
# ---------------------------------------------------------------------------

def test_restriction_quantity_and_time(paper8_by_id):
    restriction = identify_restriction(paper8_by_id["RE8"])
    assert {"only one", "at a time"} <= restriction


def test_restriction_adverb():
    sentence = build("R1", "The system shall immediately log the fault.", [
        "1 The the DET DT 2 det",
        "2 system system NOUN NN 5 nsubj",
        "3 shall shall AUX MD 5 aux",
        "4 immediately immediately ADV RB 5 advmod",
        "5 log log VERB VB 0 root",
        "6 the the DET DT 7 det",
        "7 fault fault NOUN NN 5 dobj SpaceAfter=No",
        "8 . . PUNCT . 5 punct",
    ])
    assert identify_restriction(sentence) == frozenset({"immediately"})


def test_restriction_absent():
    sentence = build("R2", "The UAV shall land.", [
        "1 The the DET DT 2 det",
        "2 UAV UAV PROPN NNP 4 nsubj",
        "3 shall shall AUX MD 4 aux",
        "4 land land VERB VB 0 root SpaceAfter=No",
        "5 . . PUNCT . 4 punct",
    ])
    assert identify_restriction(sentence) == frozenset()


def test_restriction_frequency_pattern():
    sentence = build("R3", "The logger shall rotate the file every hour.", [
        "1 The the DET DT 2 det",
        "2 logger logger NOUN NN 4 nsubj",
        "3 shall shall AUX MD 4 aux",
        "4 rotate rotate VERB VB 0 root",
        "5 the the DET DT 6 det",
        "6 file file NOUN NN 4 dobj",
        "7 every every DET DT 8 det",
        "8 hour hour NOUN NN 4 nmod:tmod SpaceAfter=No",
        "9 . . PUNCT . 4 punct",
    ])
    assert "every hour" in identify_restriction(sentence)


# ---------------------------------------------------------------------------
# entities
# ---------------------------------------------------------------------------

def test_parse_entity_drops_articles(paper8_by_id):
    sentence = paper8_by_id["RE5"]
    entity = parse_entity(sentence, 14)
    assert entity == Entity(base="waypoint", modifiers=frozenset({"next"}))


def test_parse_entity_part_of():
    sentence = build("N1", "wings of UAV", [
        "1 wings wing NOUN NNS 0 root",
        "2 of of ADP IN 3 case",
        "3 UAV UAV PROPN NNP 1 nmod:of",
    ])
    assert parse_entity(sentence, 1) == Entity(base="wing", modifiers=frozenset({"of UAV"}))


def test_parse_entity_bare_noun(paper8_by_id):
    sentence = paper8_by_id["RE6"]
    assert parse_entity(sentence, 8) == Entity(base="map")


def test_parse_entity_possessive():
    sentence = build("N2", "the UAV's wings", [
        "1 the the DET DT 3 det",
        "2 UAV UAV PROPN NNP 3 nmod:poss",
        "3 wings wing NOUN NNS 0 root",
    ])
    assert parse_entity(sentence, 3) == Entity(base="wing", modifiers=frozenset({"UAV's"}))


def test_parse_entity_rejects_verb(paper8_by_id):
    with pytest.raises(ExtractionError) as err:
        parse_entity(paper8_by_id["RE5"], 11)
    assert err.value.code == "NOT_NOMINAL"


# ---------------------------------------------------------------------------
# extract
# ---------------------------------------------------------------------------

def test_extract_full_sentence(paper8_by_id):
    reqs, trace = extract(paper8_by_id["RE5"], "RE5", 3)
    assert len(reqs) == 1
    req = reqs[0]
    assert req.id == "RE5" and req.group_id == 3
    assert req.agent == Entity(base="VehicleCore")
    assert (req.operation.mode, req.operation.predicate) == (OperationMode.DEFAULT, "send")
    assert req.event.kind is EventKind.CONDITIONS
    condition = req.event.conditions[0]
    assert condition.agent is None
    assert condition.operation.predicate == "be executed"
    assert bases(condition.input) == {"flight plan"}
    assert {"waypoint", "UAV"} <= bases(req.input)
    assert bases(req.output) == {"waypoint"}


def test_extract_splits_coordinated_predicates():
    sentence = build("S1", "The UAV shall land and shall notify the operator.", [
        "1 The the DET DT 2 det",
        "2 UAV UAV PROPN NNP 4 nsubj",
        "3 shall shall AUX MD 4 aux",
        "4 land land VERB VB 0 root",
        "5 and and CCONJ CC 4 cc",
        "6 shall shall AUX MD 7 aux",
        "7 notify notify VERB VB 4 conj:and",
        "8 the the DET DT 9 det",
        "9 operator operator NOUN NN 7 dobj SpaceAfter=No",
        "10 . . PUNCT . 4 punct",
    ])
    reqs, trace = extract(sentence, "S1", 9)
    assert [r.id for r in reqs] == ["S1-1", "S1-2"]
    assert {r.group_id for r in reqs} == {9}
    assert reqs[0].agent == reqs[1].agent == Entity(base="UAV")
    assert reqs[0].event == reqs[1].event
    assert reqs[0].operation.predicate == "land"
    assert reqs[1].operation.predicate == "notify"
    assert bases(reqs[1].input) == {"operator"}


def test_extract_shares_arguments_across_split(solar_eim):
    new = next(s for s in solar_eim if s.req_id == "EIMNEW")
    reqs, _ = extract(new, "EIMNEW", 2)
    calc, bcast = reqs
    assert calc.operation.predicate == "calculate"
    assert bcast.operation.predicate == "broadcast"
    assert calc.input == bcast.input
    assert calc.output == bcast.output
    assert calc.agent == bcast.agent


def test_extract_no_verb_fails():
    sentence = build("S2", "The red door.", [
        "1 The the DET DT 3 det",
        "2 red red ADJ JJ 3 amod",
        "3 door door NOUN NN 0 root SpaceAfter=No",
        "4 . . PUNCT . 3 punct",
    ])
    with pytest.raises(ExtractionError):
        extract(sentence, "S2", 1, force=True)


def test_extract_respects_precheck():
    sentence = build("S3", "It shall land.", [
        "1 It it PRON PRP 3 nsubj",
        "2 shall shall AUX MD 3 aux",
        "3 land land VERB VB 0 root SpaceAfter=No",
        "4 . . PUNCT . 3 punct",
    ])
    with pytest.raises(ExtractionError) as err:
        extract(sentence, "S3", 1)
    assert err.value.code == "PRECHECK_FAILED"
    reqs, trace = extract(sentence, "S3", 1, force=True)
    assert len(reqs) == 1
    assert any("CONTAINS_PRONOUN" in w for w in trace.warnings)


def test_extract_deterministic(paper8_by_id):
    first, _ = extract(paper8_by_id["RE7"], "RE7", 1)
    second, _ = extract(paper8_by_id["RE7"], "RE7", 1)
    assert first == second


# ---------------------------------------------------------------------------
# traces
# ---------------------------------------------------------------------------

def test_trace_covers_nonempty_elements(paper8):
    for sentence in paper8:
        reqs, trace = extract(sentence, sentence.req_id, 1)
        elements = {e.element for e in trace.entries}
        for req in reqs:
            assert "operation" in elements
            if req.agent is not None:
                assert "agent" in elements
            if req.event.kind is EventKind.CONDITIONS:
                assert "event" in elements
            if req.input or req.output:
                assert "input" in elements and "output" in elements
            if req.restriction:
                assert "restriction" in elements


def test_trace_mode_soundness(paper8_by_id):
    _, trace = extract(paper8_by_id["RE2"], "RE2", 1)
    assert "negation" in trace.rules_for("operation")
    _, trace = extract(paper8_by_id["RE1"], "RE1", 1)
    assert "capability-directive" in trace.rules_for("operation")


def test_trace_event_tokens_precede_agent(paper8_by_id):
    for req_id in ("RE2", "RE5", "RE6"):
        sentence = paper8_by_id[req_id]
        _, trace = extract(sentence, req_id, 1)
        event_entries = [e for e in trace.entries if e.element == "event"]
        agent_first = min((t.index for t in sentence.tokens
                           if t.surface in {"ObstacleAvoidance", "VehicleCore", "map"}),
                          default=len(sentence.tokens))
        for entry in event_entries:
            assert max(entry.tokens) < agent_first
