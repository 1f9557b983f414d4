"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s``.
"""

import random
import time

from conftest import FIXTURES
from fixtures_telecom import build_telecom, telecom_gold
from oracles import (
    brute_cycles,
    conflict_keys,
    make_rep,
    naive_detect,
    o_event_includes,
    o_restriction_includes,
    o_set_includes,
    random_digraph,
    random_entity,
    random_entity_set,
    random_event,
    random_operation,
    random_requirement,
    random_requirement_set,
    random_restriction,
)
from reqconflict import (
    GoldLabelSet,
    detect,
    evaluate,
    extract,
    load_conllu,
    simple_cycles,
)
from reqconflict.detect import ConflictKind, operation_inclusion
from reqconflict.model import Entity, EventSpec, OperationMode, OperationSpec, Requirement
from reqconflict.semantics import (
    OpRelation,
    SynonymLexicon,
    entity_eq,
    entity_includes,
    entityset_eq,
    entityset_includes,
    event_eq,
    event_includes,
    op_relation,
    restriction_eq,
    restriction_includes,
    string_eq,
)

PASS = "ACCEPTANCE PASS:"


def _extract_fixture(path):
    reqs, parses = [], {}
    for gid, sentence in enumerate(load_conllu(path), 1):
        extracted, _ = extract(sentence, sentence.req_id, gid)
        reqs.extend(extracted)
        parses.update({r.id: sentence for r in extracted})
    return reqs, parses


def test_paper_example_extraction_suite():
    """The eight quoted requirement sentences extract to the stated tuples."""
    started = time.perf_counter()
    sentences = {s.req_id: s for s in load_conllu(FIXTURES / "uav_paper8.conllu")}
    tuples = {}
    for req_id, sentence in sentences.items():
        reqs, _ = extract(sentence, req_id, 1)
        assert len(reqs) == 1
        tuples[req_id] = reqs[0]

    checks = 0
    r = tuples["RE1"]
    assert (r.operation.mode, r.operation.predicate) == (OperationMode.ABLE, "receive")
    checks += 1
    r = tuples["RE2"]
    assert (r.operation.mode, r.operation.predicate) == (OperationMode.NOT, "issue")
    cond = r.event.conditions[0]
    assert cond.agent == Entity(base="UAV")
    assert cond.operation.predicate == "has"
    assert any(e.base == "Obstacle Avoidance"
               and e.modifiers == frozenset({"active", "onboard"})
               for e in cond.input)
    checks += 1
    r = tuples["RE3"]
    assert (r.operation.mode, r.operation.predicate) == (OperationMode.DEFAULT, "allow to delete")
    checks += 1
    r = tuples["RE4"]
    assert (r.operation.mode, r.operation.predicate) == (OperationMode.DEFAULT, "be active")
    checks += 1
    r = tuples["RE5"]
    waypoint = next(e for e in r.input if e.base == "waypoint")
    assert waypoint.modifiers == frozenset({"next"})
    assert waypoint in r.output
    cond = r.event.conditions[0]
    assert cond.operation.predicate == "be executed"
    assert {e.base for e in cond.input} == {"flight plan"}
    checks += 1
    r = tuples["RE6"]
    assert {e.base for e in r.input} == {"map"}
    assert {e.base for e in r.output} == {"map"}
    assert r.agent is None
    checks += 1
    r = tuples["RE7"]
    uavs = next(e for e in r.input if e.base == "UAV")
    assert uavs.modifiers == frozenset({"one", "or", "multiple"})
    checks += 1
    r = tuples["RE8"]
    assert {"only one", "at a time"} <= r.restriction
    checks += 1

    elapsed = time.perf_counter() - started
    assert checks == 8
    assert elapsed < 1.0
    print(f"{PASS} paper-example extraction suite 8/8 exact ({elapsed:.3f}s)")


def test_solar_fixture():
    """Version pair yields the inclusion; the 12-requirement set detects its
    seven conflicts with no false positive."""
    reqs, parses = _extract_fixture(FIXTURES / "solar_eim.conllu")
    old = next(r for r in reqs if r.id == "EIMOLD")
    new_calc = next(r for r in reqs if r.id == "EIMNEW-1")
    lex = SynonymLexicon.empty()
    assert operation_inclusion(new_calc, old, lex), "new version must include the old"
    conflicts = detect(reqs, parses)
    inclusions = [c for c in conflicts if c.kind is ConflictKind.OPERATION_INCLUSION]
    assert len(inclusions) == 1
    assert set(inclusions[0].members) == {"EIMNEW-1", "EIMOLD"}

    reqs, parses = _extract_fixture(FIXTURES / "solar12.conllu")
    conflicts = detect(reqs, parses)
    gold = GoldLabelSet.from_file(FIXTURES / "solar_gold.txt")
    result = evaluate(conflicts, gold, {r.id for r in reqs})
    assert result.detected == 7 and result.correct == 7 and result.known == 7
    assert result.precision == 1.0 and result.recall == 1.0
    print(f"{PASS} solar fixture: version-pair inclusion found; 7/7 detected, "
          f"precision {result.precision_percent}%, recall {result.recall_percent}%")


def test_grouped_vs_naive_oracle():
    """Grouped detection equals pair-by-pair formula application on 1000
    random requirement sets."""
    rng = random.Random(20240817)
    mismatches = 0
    for _ in range(1000):
        reqs = random_requirement_set(rng, max_size=20)
        if conflict_keys(detect(reqs)) != naive_detect(reqs):
            mismatches += 1
    assert mismatches == 0
    print(f"{PASS} grouped-vs-naive oracle: 1000 sets, 0 mismatches")


def test_circuit_oracle():
    """Elementary circuit enumeration equals exhaustive search on 500 random
    digraphs of up to 8 vertices."""
    rng = random.Random(77)
    mismatches = 0
    for _ in range(500):
        adj = random_digraph(rng, max_nodes=8)
        if simple_cycles(adj) != brute_cycles(adj):
            mismatches += 1
    assert mismatches == 0
    print(f"{PASS} circuit oracle: 500 digraphs, 0 mismatches")


def test_relation_algebra_suite():
    """Reflexivity, symmetry and transitivity of the relational operators on
    10,000 random pairs, and eq equals mutual-includes exactly, checked
    against independent implementations."""
    groups = [["send", "display"], ["uav", "map"]]
    lexicons = [(SynonymLexicon.empty(), make_rep([])),
                (SynonymLexicon(groups), make_rep(groups))]
    rng = random.Random(31337)
    strings = ["uav", "UAV", "flight plan", "send", "display", "map",
               "only one", "hourly"]

    for i in range(10_000):
        lex, rep = lexicons[i % 2]
        a, b = rng.choice(strings), rng.choice(strings)
        assert string_eq(a, a, lex)
        assert string_eq(a, b, lex) == string_eq(b, a, lex)

        e1, e2 = random_entity(rng), random_entity(rng)
        assert entity_eq(e1, e1, lex)
        assert entity_includes(e1, e1, lex)
        assert entity_eq(e1, e2, lex) == entity_eq(e2, e1, lex)

        s1, s2, s3 = (random_entity_set(rng) for _ in range(3))
        assert entityset_includes(s1, s1, lex)
        assert entityset_eq(s1, s1, lex)
        assert entityset_eq(s1, s2, lex) == entityset_eq(s2, s1, lex)
        if entityset_includes(s1, s2, lex) and entityset_includes(s2, s3, lex):
            assert entityset_includes(s1, s3, lex)
        # eq is exactly mutual inclusion, per the independent implementation
        assert entityset_eq(s1, s2, lex) == (
            o_set_includes(s1, s2, rep) and o_set_includes(s2, s1, rep))
        assert entityset_includes(s1, s2, lex) == o_set_includes(s1, s2, rep)

        r1, r2, r3 = (random_restriction(rng) for _ in range(3))
        assert restriction_includes(r1, r1, lex)
        assert restriction_eq(r1, r1, lex)
        assert restriction_eq(r1, r2, lex) == restriction_eq(r2, r1, lex)
        if restriction_includes(r1, r2, lex) and restriction_includes(r2, r3, lex):
            assert restriction_includes(r1, r3, lex)
        assert restriction_eq(r1, r2, lex) == (
            o_restriction_includes(r1, r2, rep) and o_restriction_includes(r2, r1, rep))

        o1, o2 = random_operation(rng), random_operation(rng)
        assert op_relation(o1, o1, lex) is OpRelation.EQUIVALENT
        rel, mirrored = op_relation(o1, o2, lex), op_relation(o2, o1, lex)
        if rel is OpRelation.EQUIVALENT:
            assert mirrored is OpRelation.EQUIVALENT
        if rel is OpRelation.CONTRADICTS:
            assert mirrored is OpRelation.CONTRADICTS
        if rel is OpRelation.INCLUDES:
            assert mirrored is OpRelation.INCLUDED_BY
        if rel is OpRelation.INCLUDED_BY:
            assert mirrored is OpRelation.INCLUDES

        ev1, ev2 = random_event(rng), random_event(rng)
        assert event_includes(ev1, ev1, lex)
        assert event_eq(ev1, ev1, lex)
        assert event_eq(ev1, ev2, lex) == event_eq(ev2, ev1, lex)
        assert event_eq(ev1, ev2, lex) == (
            o_event_includes(ev1, ev2, rep) and o_event_includes(ev2, ev1, rep))

    print(f"{PASS} relation-algebra suite: 10000 pairs, all properties hold")


def _mutate(rng: random.Random, base: Requirement, req_id: str) -> Requirement:
    """A near-copy differing in one element, to stress the dense cases."""
    choice = rng.randrange(5)
    if choice == 0:
        mode = rng.choice([OperationMode.DEFAULT, OperationMode.ABLE, OperationMode.NOT])
        return Requirement(id=req_id, group_id=base.group_id + 1, event=base.event,
                           agent=base.agent,
                           operation=OperationSpec(mode=mode,
                                                   predicate=base.operation.predicate),
                           input=base.input, output=base.output,
                           restriction=base.restriction)
    if choice == 1:
        return Requirement(id=req_id, group_id=base.group_id + 1, event=base.event,
                           agent=base.agent, operation=base.operation,
                           input=base.input, output=base.output,
                           restriction=random_restriction(rng))
    if choice == 2:
        return Requirement(id=req_id, group_id=base.group_id + 1,
                           event=random_event(rng), agent=base.agent,
                           operation=base.operation, input=base.input,
                           output=base.output, restriction=base.restriction)
    if choice == 3:
        return Requirement(id=req_id, group_id=base.group_id + 1, event=base.event,
                           agent=base.agent, operation=base.operation,
                           input=random_entity_set(rng), output=base.output,
                           restriction=base.restriction)
    return Requirement(id=req_id, group_id=base.group_id + 1, event=base.event,
                       agent=base.agent, operation=base.operation,
                       input=base.input, output=random_entity_set(rng),
                       restriction=base.restriction)


def test_mutual_exclusion_suite():
    """At most one inconsistency kind and at most one inclusion kind fire on
    any pair."""
    inconsistency = {ConflictKind.OPERATION_INCONSISTENCY,
                     ConflictKind.RESTRICTION_INCONSISTENCY,
                     ConflictKind.EVENT_INCONSISTENCY}
    inclusion = {ConflictKind.OPERATION_INCLUSION, ConflictKind.EVENT_INCLUSION}
    rng = random.Random(4242)
    violations = 0
    pairs = 0
    for i in range(2000):
        r1 = random_requirement(rng, "P1", 1)
        if i % 2:
            r2 = _mutate(rng, r1, "P2")
        else:
            r2 = random_requirement(rng, "P2", 2)
        conflicts = [c for c in detect([r1, r2]) if set(c.members) == {"P1", "P2"}]
        pairs += 1
        if sum(c.kind in inconsistency for c in conflicts) > 1:
            violations += 1
        if sum(c.kind in inclusion for c in conflicts) > 1:
            violations += 1
    assert violations == 0
    print(f"{PASS} mutual-exclusion suite: {pairs} pairs, 0 violations")


def _synthetic_set(n: int) -> list[Requirement]:
    """Sparse-conflict synthetic requirements: a few dataflow chains and
    duplicated pairs, everything else disjoint."""
    reqs = []
    for i in range(n):
        inp = frozenset({Entity(base=f"item{i}")})
        out_base = f"item{i + 1}" if i % 10 == 0 and i + 1 < n else f"result{i}"
        out = frozenset({Entity(base=out_base)})
        agent = Entity(base=f"agent{i % (n // 2)}")
        reqs.append(Requirement(
            id=f"N{i:04d}", group_id=i, event=EventSpec.all(), agent=agent,
            operation=OperationSpec(mode=OperationMode.DEFAULT,
                                    predicate=f"op{i % 29}"),
            input=inp, output=out,
            restriction=frozenset() if i % 7 else frozenset({"hourly"})))
    return reqs


def test_scaling_smoke():
    """Runtime grows no worse than quadratic-with-margin per doubling."""
    started = time.perf_counter()
    timings = {}
    for n in (100, 200, 400):
        reqs = _synthetic_set(n)
        t0 = time.perf_counter()
        detect(reqs)
        timings[n] = time.perf_counter() - t0
    total = time.perf_counter() - started
    floor = 0.05  # clamp tiny timings against clock noise
    ratio1 = timings[200] / max(timings[100], floor)
    ratio2 = timings[400] / max(timings[200], floor)
    assert ratio1 <= 5.0, f"100->200 ratio {ratio1:.2f}"
    assert ratio2 <= 5.0, f"200->400 ratio {ratio2:.2f}"
    assert total < 60.0
    print(f"{PASS} scaling smoke: n=100 {timings[100]:.2f}s, n=200 {timings[200]:.2f}s, "
          f"n=400 {timings[400]:.2f}s (ratios {ratio1:.2f}, {ratio2:.2f}; total {total:.1f}s)")


def test_metric_arithmetic():
    """Evaluation reproduces the published derived percentages exactly."""
    reqs = build_telecom()
    result = evaluate(detect(reqs), telecom_gold(), {r.id for r in reqs})
    assert (result.detected, result.correct, result.known) == (8, 7, 7)
    assert result.precision_percent == "87.50"
    assert result.recall_percent == "100.00"

    from reqconflict.detect import Conflict
    kind = ConflictKind.INPUT_OUTPUT_INTERLOCK
    detected = [Conflict(kind=kind, members=(f"K{i}a", f"K{i}b")) for i in range(14)]
    detected.append(Conflict(kind=kind, members=("extra1", "extra2")))
    from reqconflict.evaluate import GoldEntry
    gold = GoldLabelSet([GoldEntry(kind=kind, members=frozenset({f"K{i}a", f"K{i}b"}))
                         for i in range(14)])
    result = evaluate(detected, gold)
    assert result.precision_percent == "93.33"
    assert result.recall_percent == "100.00"
    result = evaluate(detected[:14], gold)
    assert result.precision_percent == "100.00"
    assert result.recall_percent == "100.00"
    empty = evaluate([], GoldLabelSet([]))
    assert empty.precision == 1.0 and empty.recall == 1.0
    print(f"{PASS} metric arithmetic: 7/8=87.50, 14/15=93.33, 14/14=100.00, 0/0=1")
