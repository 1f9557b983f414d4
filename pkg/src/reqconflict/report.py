"""Render detection artifacts: conflict records, DOT graphs, human reports.

The machine-readable conflict format is one line per conflict with a stable
field order (kind, members, direction, evidence), tab-separated, sorted, so
reports diff cleanly between runs.
"""

from __future__ import annotations

from .detect import Conflict, DetectionResult, EdgeKind, InterlockGraph
from .extract import ExtractionTrace
from .model import Requirement, serialize_requirement


def conflict_lines(conflicts: list[Conflict]) -> str:
    lines = []
    for c in sorted(conflicts, key=Conflict.sort_key):
        lines.append("\t".join([
            f"kind={c.kind.value}",
            f"members={','.join(c.members)}",
            f"direction={c.direction or '-'}",
            f"evidence={' | '.join(c.evidence)}",
        ]))
    return "\n".join(lines) + ("\n" if lines else "")


def dot_graph(graph: InterlockGraph, kind: EdgeKind) -> str:
    """One interlock graph as a DOT digraph, vertices labeled by
    requirement id, edges annotated with their first evidence entry."""
    name = kind.value.lower() + "_interlock"
    lines = [f"digraph {name} {{"]
    for vertex in sorted(graph.vertices):
        lines.append(f'  "{vertex}";')
    for edge in graph.edges:
        if edge.kind is not kind:
            continue
        label = edge.evidence[0].replace('"', "'") if edge.evidence else ""
        lines.append(f'  "{edge.source}" -> "{edge.target}" [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def trace_report(traces: list[ExtractionTrace]) -> str:
    blocks = []
    for trace in traces:
        lines = [f"[trace {trace.req_id}]"]
        for entry in trace.entries:
            tokens = ",".join(str(t) for t in entry.tokens)
            lines.append(f"  {entry.req_id} {entry.element}: rule={entry.rule} tokens={tokens}")
        for warning in trace.warnings:
            lines.append(f"  warning: {warning}")
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + ("\n" if blocks else "")


def human_report(result: DetectionResult) -> str:
    lines = [
        "conflict detection report",
        f"requirements analyzed: {len(result.requirements)}",
        f"groups: {len(result.groups)}",
        f"conflicts found: {len(result.conflicts)}",
        "",
    ]
    if not result.conflicts:
        lines.append("no conflicts detected")
    for c in result.conflicts:
        lines.append(f"- {c.kind.value}: {', '.join(c.members)}"
                     + (f" (direction {c.direction})" if c.direction else ""))
        for item in c.evidence:
            lines.append(f"    {item}")
    if result.warnings:
        lines.append("")
        lines.append("warnings:")
        lines.extend(f"  {w}" for w in result.warnings)
    return "\n".join(lines) + "\n"


def requirement_records(reqs: list[Requirement]) -> str:
    return "\n".join(serialize_requirement(r) for r in sorted(reqs, key=lambda r: r.id))
