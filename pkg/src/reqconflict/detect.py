"""Conflict detection over extracted requirements.

Seven conflict kinds in three families:

* inconsistency: two requirements cannot hold together (operation,
  restriction or event variant);
* inclusion: one requirement subsumes another, making the narrower one
  redundant (operation or event variant);
* interlock: requirements feed each other in a circuit of an interlock
  graph, either through operation/event dependencies or through
  output-to-input dataflow. A self-contradictory event is reported on its
  own requirement.

Detection first normalizes the set (object clauses replace their carrier
requirement, self-contradictory events are reported and removed, OR-joined
events split into one requirement per alternative), then groups
requirements that share an equivalent event and agent. The operation and
restriction rules only ever fire inside a group, the event rules only
across groups, and dataflow dependencies are checked on every ordered pair,
so the pairwise phase is O(n^2) and circuit enumeration O(n*e).

Grouping uses canonical keys: key equality implies semantic equivalence of
event and agent, and the wildcard agent keys separately so groups stay a
partition. The formulas themselves re-check their equality guards, making
grouping purely an efficiency device.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from . import semantics as sem
from .conllu import ParsedSentence
from .extract import ExtractionError, _locate_operation, _sub_sentence, extract
from .model import EventKind, EventSpec, Requirement
from .semantics import SynonymLexicon

_RESTRICTION_RULE_NOTE = "note: restriction contradiction uses the extrapolated category-value rule"
_INTERLOCK_NOTE = "note: cycle assumes each event stays triggerable"


class ConflictKind(str, Enum):
    OPERATION_INCONSISTENCY = "OPERATION_INCONSISTENCY"
    RESTRICTION_INCONSISTENCY = "RESTRICTION_INCONSISTENCY"
    EVENT_INCONSISTENCY = "EVENT_INCONSISTENCY"
    OPERATION_INCLUSION = "OPERATION_INCLUSION"
    EVENT_INCLUSION = "EVENT_INCLUSION"
    OPERATION_EVENT_INTERLOCK = "OPERATION_EVENT_INTERLOCK"
    INPUT_OUTPUT_INTERLOCK = "INPUT_OUTPUT_INTERLOCK"
    SELF_CONTRADICTORY_EVENT = "SELF_CONTRADICTORY_EVENT"


_KIND_ORDER = {kind: i for i, kind in enumerate(ConflictKind)}


@dataclass(frozen=True)
class Conflict:
    """One finding: its kind, the requirement ids involved (cycle order for
    interlocks, singleton for a self-contradictory event), an optional
    direction for the antisymmetric kinds, and rule evidence."""

    kind: ConflictKind
    members: tuple[str, ...]
    direction: str | None = None
    evidence: tuple[str, ...] = ()

    def sort_key(self):
        return (_KIND_ORDER[self.kind], self.members)


class EdgeKind(str, Enum):
    OPERATION_EVENT = "OPERATION_EVENT"
    INPUT_OUTPUT = "INPUT_OUTPUT"


_EDGE_CONFLICT = {
    EdgeKind.OPERATION_EVENT: ConflictKind.OPERATION_EVENT_INTERLOCK,
    EdgeKind.INPUT_OUTPUT: ConflictKind.INPUT_OUTPUT_INTERLOCK,
}


@dataclass(frozen=True)
class Edge:
    kind: EdgeKind
    source: str
    target: str
    evidence: tuple[str, ...] = ()


class InterlockGraph:
    """Digraph over requirement ids with kinded dependency edges; at most
    one edge per (kind, source, target), evidence merged on duplicates."""

    def __init__(self):
        self.vertices: set[str] = set()
        self._edges: dict[tuple[EdgeKind, str, str], tuple[str, ...]] = {}

    def add_vertex(self, vertex: str) -> None:
        self.vertices.add(vertex)

    def add_edge(self, kind: EdgeKind, source: str, target: str,
                 evidence: tuple[str, ...] = ()) -> None:
        self.vertices.add(source)
        self.vertices.add(target)
        key = (kind, source, target)
        known = self._edges.get(key, ())
        merged = known + tuple(e for e in evidence if e not in known)
        self._edges[key] = merged

    @property
    def edges(self) -> list[Edge]:
        return [Edge(kind=k, source=s, target=t, evidence=ev)
                for (k, s, t), ev in sorted(self._edges.items())]

    def adjacency(self, kind: EdgeKind) -> dict[str, set[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for (k, s, t), _ in self._edges.items():
            if k is kind:
                adj[s].add(t)
        return adj


# ---------------------------------------------------------------------------
# Elementary circuit enumeration (Johnson's algorithm)
# ---------------------------------------------------------------------------

def _strongly_connected_components(adj: dict[str, set[str]]) -> list[set[str]]:
    """Tarjan, iterative."""
    index: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    components: list[set[str]] = []
    counter = [0]

    for start in sorted(adj):
        if start in index:
            continue
        work = [(start, iter(sorted(adj[start])))]
        index[start] = lowlink[start] = counter[0]
        counter[0] += 1
        stack.append(start)
        on_stack.add(start)
        while work:
            node, successors = work[-1]
            advanced = False
            for succ in successors:
                if succ not in index:
                    index[succ] = lowlink[succ] = counter[0]
                    counter[0] += 1
                    stack.append(succ)
                    on_stack.add(succ)
                    work.append((succ, iter(sorted(adj[succ]))))
                    advanced = True
                    break
                if succ in on_stack:
                    lowlink[node] = min(lowlink[node], index[succ])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[node])
            if lowlink[node] == index[node]:
                component = set()
                while True:
                    member = stack.pop()
                    on_stack.discard(member)
                    component.add(member)
                    if member == node:
                        break
                components.append(component)
    return components


def _cycles_through(adj: dict[str, set[str]], start: str) -> list[list[str]]:
    """All elementary circuits through ``start`` in a strongly connected
    subgraph, never revisiting a blocked vertex (Johnson's search)."""
    blocked = {start}
    blocked_map: dict[str, set[str]] = {}
    path = [start]
    stack: list[tuple[str, list[str]]] = [(start, sorted(adj[start]))]
    closed = [False]
    found: list[list[str]] = []

    while stack:
        node, successors = stack[-1]
        stepped = False
        while successors:
            succ = successors.pop(0)
            if succ == start:
                found.append(path[:])
                closed[-1] = True
            elif succ not in blocked:
                path.append(succ)
                blocked.add(succ)
                stack.append((succ, sorted(adj[succ])))
                closed.append(False)
                stepped = True
                break
        if stepped:
            continue
        stack.pop()
        node_closed = closed.pop()
        path.pop()
        if node_closed:
            if closed:
                closed[-1] = True
            unblock = [node]
            while unblock:
                pending = unblock.pop()
                if pending in blocked:
                    blocked.discard(pending)
                    unblock.extend(blocked_map.pop(pending, ()))
        else:
            for succ in adj[node]:
                blocked_map.setdefault(succ, set()).add(node)
    return found


def simple_cycles(adj: dict[str, set[str]]) -> list[tuple[str, ...]]:
    """Every elementary circuit of a digraph, each rotated to start at its
    smallest vertex, sorted for determinism. Self-loops count."""
    cycles: list[tuple[str, ...]] = []
    work = dict(adj)
    for v in sorted(work):
        if v in work.get(v, ()):
            cycles.append((v,))
    work = {v: {t for t in targets if t != v} for v, targets in work.items()}

    components = [c for c in _strongly_connected_components(work) if len(c) >= 2]
    while components:
        component = components.pop()
        sub = {v: work[v] & component for v in component}
        start = min(component)
        for cycle in _cycles_through(sub, start):
            cycles.append(_canonical_cycle(cycle))
        remaining = {v: targets - {start} for v, targets in sub.items() if v != start}
        components.extend(c for c in _strongly_connected_components(remaining)
                          if len(c) >= 2)
    return sorted(set(cycles))


def _canonical_cycle(cycle: list[str]) -> tuple[str, ...]:
    pivot = cycle.index(min(cycle))
    return tuple(cycle[pivot:] + cycle[:pivot])


def find_interlocks(graph: InterlockGraph) -> list[Conflict]:
    """One conflict per elementary circuit, per edge kind. Members are the
    requirement ids in cycle order starting at the smallest id."""
    conflicts: list[Conflict] = []
    for edge_kind in EdgeKind:
        adj = graph.adjacency(edge_kind)
        for cycle in simple_cycles(adj):
            evidence = []
            ids = list(cycle)
            for i, source in enumerate(ids):
                target = ids[(i + 1) % len(ids)]
                evidence.extend(graph._edges.get((edge_kind, source, target), ()))
            if edge_kind is EdgeKind.OPERATION_EVENT:
                evidence.append(_INTERLOCK_NOTE)
            conflicts.append(Conflict(kind=_EDGE_CONFLICT[edge_kind], members=cycle,
                                      evidence=tuple(evidence)))
    return conflicts


# ---------------------------------------------------------------------------
# Pair predicates (the conflict formulas)
# ---------------------------------------------------------------------------

def _io_directional(r1: Requirement, r2: Requirement, lex: SynonymLexicon) -> str | None:
    """Input and output inclusion in one consistent direction; '1>2', '2>1',
    'mutual' or None."""
    fwd = (sem.entityset_includes(r1.input, r2.input, lex)
           and sem.entityset_includes(r1.output, r2.output, lex))
    back = (sem.entityset_includes(r2.input, r1.input, lex)
            and sem.entityset_includes(r2.output, r1.output, lex))
    if fwd and back:
        return "mutual"
    if fwd:
        return "1>2"
    if back:
        return "2>1"
    return None


def operation_inconsistency(r1: Requirement, r2: Requirement,
                            lex: SynonymLexicon) -> str | None:
    """Equal event and agent, contradicting operations, directional
    input/output inclusion. Returns the inclusion direction when it fires."""
    if not sem.event_eq(r1.event, r2.event, lex):
        return None
    if not sem.agent_eq(r1.agent, r2.agent, lex):
        return None
    if not sem.op_contradicts(r1.operation, r2.operation, lex):
        return None
    return _io_directional(r1, r2, lex)


def restriction_inconsistency(r1: Requirement, r2: Requirement,
                              lex: SynonymLexicon) -> str | None:
    """Equal event, agent and operation, contradicting restrictions,
    directional input/output inclusion."""
    if not sem.event_eq(r1.event, r2.event, lex):
        return None
    if not sem.agent_eq(r1.agent, r2.agent, lex):
        return None
    if sem.op_relation(r1.operation, r2.operation, lex) is not sem.OpRelation.EQUIVALENT:
        return None
    if not sem.restriction_contradicts(r1.restriction, r2.restriction, lex):
        return None
    return _io_directional(r1, r2, lex)


def operation_inclusion(r1: Requirement, r2: Requirement, lex: SynonymLexicon) -> bool:
    """Equal event and agent; operation, input, output and restriction of r1
    each include r2's. r2 is then (partially) redundant."""
    return (sem.event_eq(r1.event, r2.event, lex)
            and sem.agent_eq(r1.agent, r2.agent, lex)
            and sem.op_includes(r1.operation, r2.operation, lex)
            and sem.entityset_includes(r1.input, r2.input, lex)
            and sem.entityset_includes(r1.output, r2.output, lex)
            and sem.restriction_includes(r1.restriction, r2.restriction, lex))


def event_inclusion(r1: Requirement, r2: Requirement, lex: SynonymLexicon) -> bool:
    """r1's event includes r2's while the other five elements are equal:
    whenever r1 triggers, r2 triggers and does the same thing."""
    return (sem.event_includes(r1.event, r2.event, lex)
            and sem.agent_eq(r1.agent, r2.agent, lex)
            and sem.op_relation(r1.operation, r2.operation, lex) is sem.OpRelation.EQUIVALENT
            and sem.entityset_eq(r1.input, r2.input, lex)
            and sem.entityset_eq(r1.output, r2.output, lex)
            and sem.restriction_eq(r1.restriction, r2.restriction, lex))


def event_inconsistency(r1: Requirement, r2: Requirement, lex: SynonymLexicon) -> bool:
    """Executing r2's operation makes some condition of r1's event
    unsatisfiable: equal agent, contradicting operation, directional
    input/output inclusion against that condition."""
    for cond in r1.event.conditions:
        if not sem.agent_eq(cond.agent, r2.agent, lex):
            continue
        if not sem.op_contradicts(cond.operation, r2.operation, lex):
            continue
        fwd = (sem.entityset_includes(cond.input, r2.input, lex)
               and sem.entityset_includes(cond.output, r2.output, lex))
        back = (sem.entityset_includes(r2.input, cond.input, lex)
                and sem.entityset_includes(r2.output, cond.output, lex))
        if fwd or back:
            return True
    return False


def operation_event_dependency(r1: Requirement, r2: Requirement,
                               lex: SynonymLexicon) -> bool:
    """Executing r1's operation necessarily triggers r2's event: every
    condition of r2's event is covered by r1's agent, operation, input and
    output with equal restriction. An ALL event has nothing to trigger, so
    it never depends."""
    if r2.event.kind is not EventKind.CONDITIONS:
        return False
    for cond in r2.event.conditions:
        if not (sem.agent_eq(r1.agent, cond.agent, lex)
                and sem.op_includes(r1.operation, cond.operation, lex)
                and sem.restriction_eq(cond.restriction, r1.restriction, lex)
                and sem.entityset_includes(r1.input, cond.input, lex)
                and sem.entityset_includes(r1.output, cond.output, lex)):
            return False
    return True


def input_output_dependency(r1: Requirement, r2: Requirement,
                            lex: SynonymLexicon) -> tuple[str, str] | None:
    """Some output entity of r1 includes some input entity of r2 and the
    pair is free of event inconsistency either way. Returns the first
    justifying entity pair."""
    witness = None
    for e1 in sorted(r1.output, key=lambda e: e.render()):
        for e2 in sorted(r2.input, key=lambda e: e.render()):
            if sem.entity_includes(e1, e2, lex):
                witness = (e1.render(), e2.render())
                break
        if witness:
            break
    if witness is None:
        return None
    if event_inconsistency(r1, r2, lex) or event_inconsistency(r2, r1, lex):
        return None
    return witness


# ---------------------------------------------------------------------------
# Pair checks as the detection pipeline runs them
# ---------------------------------------------------------------------------

def _pair_members(r1: Requirement, r2: Requirement) -> tuple[str, str]:
    return tuple(sorted((r1.id, r2.id)))


def check_pair_same_group(r1: Requirement, r2: Requirement,
                          lex: SynonymLexicon) -> list[Conflict]:
    """Conflicts possible only between requirements with equivalent event
    and agent: operation inclusion and the operation/restriction
    inconsistencies. Duplicated requirements come out as mutual operation
    inclusion."""
    members = _pair_members(r1, r2)
    a, b = (r1, r2) if r1.id == members[0] else (r2, r1)
    conflicts: list[Conflict] = []

    io_dir = operation_inconsistency(a, b, lex)
    if io_dir is not None:
        evidence = (f"operation {a.operation.render()} contradicts {b.operation.render()}",
                    f"io inclusion {io_dir}")
        direction = {"1>2": f"{a.id}>{b.id}", "2>1": f"{b.id}>{a.id}",
                     "mutual": "mutual"}[io_dir]
        conflicts.append(Conflict(kind=ConflictKind.OPERATION_INCONSISTENCY,
                                  members=members, direction=direction,
                                  evidence=evidence))

    io_dir = restriction_inconsistency(a, b, lex)
    if io_dir is not None:
        evidence = (f"restriction {sorted(a.restriction)} contradicts {sorted(b.restriction)}",
                    _RESTRICTION_RULE_NOTE)
        conflicts.append(Conflict(kind=ConflictKind.RESTRICTION_INCONSISTENCY,
                                  members=members, evidence=evidence))

    fwd = operation_inclusion(a, b, lex)
    back = operation_inclusion(b, a, lex)
    if fwd or back:
        direction = "mutual" if (fwd and back) else (f"{a.id}>{b.id}" if fwd else f"{b.id}>{a.id}")
        broader, narrower = (a, b) if fwd else (b, a)
        evidence = (f"operation {broader.operation.render()} includes "
                    f"{narrower.operation.render()}",)
        conflicts.append(Conflict(kind=ConflictKind.OPERATION_INCLUSION,
                                  members=members, direction=direction,
                                  evidence=evidence))
    return conflicts


def check_pair_cross_group(r1: Requirement, r2: Requirement,
                           lex: SynonymLexicon) -> tuple[list[Conflict], list[Edge]]:
    """Conflicts and dependency edges between requirements of different
    groups: event inclusion/inconsistency, operation-event dependencies."""
    members = _pair_members(r1, r2)
    a, b = (r1, r2) if r1.id == members[0] else (r2, r1)
    conflicts: list[Conflict] = []

    fwd = event_inclusion(a, b, lex)
    back = event_inclusion(b, a, lex)
    if fwd or back:
        direction = "mutual" if (fwd and back) else (f"{a.id}>{b.id}" if fwd else f"{b.id}>{a.id}")
        conflicts.append(Conflict(kind=ConflictKind.EVENT_INCLUSION, members=members,
                                  direction=direction,
                                  evidence=("event of the broader side includes the other; "
                                            "remaining elements equal",)))

    fwd = event_inconsistency(a, b, lex)
    back = event_inconsistency(b, a, lex)
    if fwd or back:
        direction = "mutual" if (fwd and back) else (f"{a.id}>{b.id}" if fwd else f"{b.id}>{a.id}")
        evidence = ("operation of one side contradicts a trigger condition of the other",)
        conflicts.append(Conflict(kind=ConflictKind.EVENT_INCONSISTENCY, members=members,
                                  direction=direction, evidence=evidence))

    edges: list[Edge] = []
    if operation_event_dependency(r1, r2, lex):
        edges.append(Edge(kind=EdgeKind.OPERATION_EVENT, source=r1.id, target=r2.id,
                          evidence=(f"{r1.id} performs what {r2.id} awaits",)))
    if operation_event_dependency(r2, r1, lex):
        edges.append(Edge(kind=EdgeKind.OPERATION_EVENT, source=r2.id, target=r1.id,
                          evidence=(f"{r2.id} performs what {r1.id} awaits",)))
    return conflicts, edges


def check_pair_io(r1: Requirement, r2: Requirement,
                  lex: SynonymLexicon) -> Edge | None:
    """Dataflow dependency edge r1 -> r2, if any (ordered pair)."""
    witness = input_output_dependency(r1, r2, lex)
    if witness is None:
        return None
    return Edge(kind=EdgeKind.INPUT_OUTPUT, source=r1.id, target=r2.id,
                evidence=(f"{r1.id}->{r2.id}: output {witness[0]} "
                          f"includes input {witness[1]}",))


# ---------------------------------------------------------------------------
# Preprocessing
# ---------------------------------------------------------------------------

@dataclass
class PreprocessResult:
    requirements: list[Requirement]
    groups: list[list[Requirement]]
    conflicts: list[Conflict]
    warnings: list[str] = field(default_factory=list)


def group_requirements(reqs: list[Requirement],
                       lex: SynonymLexicon) -> list[list[Requirement]]:
    """Partition by canonical (event, agent) key; key equality implies the
    semantic equality the grouped rules require."""
    buckets: dict[tuple[str, str], list[Requirement]] = {}
    for req in sorted(reqs, key=lambda r: r.id):
        key = (sem.canonical_event_key(req.event, lex),
               sem.canonical_agent_key(req.agent, lex))
        buckets.setdefault(key, []).append(req)
    return [buckets[key] for key in sorted(buckets)]


def _replace_with_object_clause(req: Requirement, parse: ParsedSentence,
                                warnings: list[str]) -> list[Requirement]:
    try:
        info = _locate_operation(parse)
    except ExtractionError:
        return [req]
    ccomp_arcs = [a for a in parse.arcs
                  if a.base_relation == "ccomp" and a.head in info.complex]
    if not ccomp_arcs:
        return [req]
    clause_head = ccomp_arcs[0].dependent
    indices = [i for i in parse.subtree(clause_head)
               if not (parse.head_arc(i) is not None
                       and parse.head_arc(i).base_relation == "mark"
                       and parse.token(i).norm in ("that", "whether"))]
    clause = _sub_sentence(parse, indices, clause_head, suffix="#object")
    try:
        replacements, _ = extract(clause, req.id, req.group_id, force=True)
    except ExtractionError as exc:
        warnings.append(f"{req.id}: object clause kept unparsed ({exc})")
        return [req]
    out = []
    for replacement in replacements:
        if (replacement.event.kind is EventKind.ALL
                and req.event.kind is EventKind.CONDITIONS):
            replacement = replace(replacement, event=req.event)
        out.append(replacement)
    return out


def preprocess(reqs: list[Requirement],
               parses: dict[str, ParsedSentence] | None,
               lex: SynonymLexicon) -> PreprocessResult:
    """Normalize a requirement set before the pairwise rules run.

    Requirements whose sentence carries an object clause are replaced by the
    clause's tuple (the clause is the actual demand). Requirements whose
    event can never hold are reported as self-contradictory and removed.
    OR-joined events are split into one requirement per alternative, each in
    a fresh group. Finally requirements are partitioned into groups by
    equivalent event and agent.
    """
    warnings: list[str] = []
    conflicts: list[Conflict] = []

    staged: list[Requirement] = []
    for req in reqs:
        parse = parses.get(req.id) if parses else None
        if parse is not None:
            staged.extend(_replace_with_object_clause(req, parse, warnings))
        else:
            staged.append(req)

    survivors: list[Requirement] = []
    for req in staged:
        if sem.event_self_contradicts(req.event, lex):
            conflicts.append(Conflict(kind=ConflictKind.SELF_CONTRADICTORY_EVENT,
                                      members=(req.id,),
                                      evidence=("two AND-joined trigger conditions "
                                                "cannot hold together",)))
            continue
        survivors.append(req)

    next_group = max((r.group_id for r in survivors), default=0) + 1
    final: list[Requirement] = []
    for req in survivors:
        event = req.event
        if (event.kind is EventKind.CONDITIONS and len(event.conditions) >= 2
                and event.connective is not None
                and event.connective.value == "OR"):
            for k, cond in enumerate(event.conditions, start=1):
                final.append(replace(req, id=f"{req.id}-or{k}",
                                     group_id=next_group,
                                     event=EventSpec.when(cond)))
                next_group += 1
        else:
            final.append(req)

    return PreprocessResult(requirements=final,
                            groups=group_requirements(final, lex),
                            conflicts=conflicts, warnings=warnings)


# ---------------------------------------------------------------------------
# Full detection
# ---------------------------------------------------------------------------

@dataclass
class DetectionResult:
    conflicts: list[Conflict]
    requirements: list[Requirement]
    groups: list[list[Requirement]]
    graph: InterlockGraph
    warnings: list[str] = field(default_factory=list)


def run_detection(reqs: list[Requirement],
                  parses: dict[str, ParsedSentence] | None = None,
                  lexicon: SynonymLexicon | None = None) -> DetectionResult:
    """Run the full pipeline and keep the intermediate artifacts."""
    lex = lexicon or SynonymLexicon.empty()
    pre = preprocess(reqs, parses, lex)
    conflicts: list[Conflict] = list(pre.conflicts)

    graph = InterlockGraph()
    for req in pre.requirements:
        graph.add_vertex(req.id)

    for group in pre.groups:
        for i, r1 in enumerate(group):
            for r2 in group[i + 1:]:
                conflicts.extend(check_pair_same_group(r1, r2, lex))

    group_of: dict[str, int] = {}
    for gi, group in enumerate(pre.groups):
        for req in group:
            group_of[req.id] = gi
    ordered = sorted(pre.requirements, key=lambda r: r.id)
    for i, r1 in enumerate(ordered):
        for r2 in ordered[i + 1:]:
            if group_of[r1.id] == group_of[r2.id]:
                continue
            pair_conflicts, edges = check_pair_cross_group(r1, r2, lex)
            conflicts.extend(pair_conflicts)
            for edge in edges:
                graph.add_edge(edge.kind, edge.source, edge.target, edge.evidence)

    for r1 in ordered:
        for r2 in ordered:
            if r1 is r2:
                continue
            edge = check_pair_io(r1, r2, lex)
            if edge is not None:
                graph.add_edge(edge.kind, edge.source, edge.target, edge.evidence)

    conflicts.extend(find_interlocks(graph))

    unique: dict[tuple, Conflict] = {}
    for conflict in conflicts:
        unique.setdefault((conflict.kind, conflict.members), conflict)
    result = sorted(unique.values(), key=Conflict.sort_key)
    return DetectionResult(conflicts=result, requirements=pre.requirements,
                           groups=pre.groups, graph=graph,
                           warnings=pre.warnings)


def detect(reqs: list[Requirement],
           parses: dict[str, ParsedSentence] | None = None,
           lexicon: SynonymLexicon | None = None) -> list[Conflict]:
    """Detect all conflicts in a requirement set. Deterministic: identical
    inputs give identically ordered output."""
    return run_detection(reqs, parses, lexicon).conflicts
