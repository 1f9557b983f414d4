"""Command-line front door.

    reqconflict <extract|detect|evaluate|precheck> --input <conllu>
                [--lexicon <file>] [--gold <file>] [--out <dir>] [--dot]
                [--relation-map <file>]

Exit status: 0 ran clean, 1 conflicts found, 2 input errors. Per-sentence
extraction failures are reported but do not abort the batch.
"""

from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path

from . import report
from .conllu import ConlluError, ParsedSentence, load_conllu, load_relation_map
from .detect import EdgeKind, run_detection
from .evaluate import EvaluationError, GoldLabelSet, evaluate
from .extract import ExtractionError, ExtractionTrace, extract, precheck
from .model import Requirement, requirements_to_json, validate_requirement_set
from .semantics import SynonymLexicon


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="reqconflict",
        description="Extract requirement tuples from parsed shall-style "
                    "sentences and detect conflicts between them.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("extract", "extract requirement tuples and stop"),
        ("detect", "extract tuples and detect conflicts"),
        ("evaluate", "detect conflicts and score them against gold labels"),
        ("precheck", "report sentences violating the shall-style assumptions"),
    ]:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--input", required=True, help="CoNLL-U file of parsed sentences")
        cmd.add_argument("--lexicon", help="synonym lexicon file (default: bundled seed)")
        cmd.add_argument("--out", help="directory for report artifacts")
        cmd.add_argument("--dot", action="store_true",
                         help="also write interlock graphs in DOT format")
        cmd.add_argument("--relation-map", dest="relation_map",
                         help="dependency label translation table")
        if name == "evaluate":
            cmd.add_argument("--gold", required=True, help="gold conflict labels")
    return parser


def _load_lexicon(path: str | None) -> SynonymLexicon:
    if path:
        return SynonymLexicon.from_file(path)
    seed = resources.files("reqconflict").joinpath("data/synonyms.txt")
    with resources.as_file(seed) as p:
        return SynonymLexicon.from_file(p)


def _split_event_blocks(sentences: list[ParsedSentence]):
    """Separate main sentences from per-clause sub-blocks named
    ``<id>#event<k>``."""
    mains: list[ParsedSentence] = []
    events: dict[str, dict[int, ParsedSentence]] = {}
    for sentence in sentences:
        if "#event" in sentence.req_id:
            main_id, _, tail = sentence.req_id.partition("#event")
            try:
                k = int(tail)
            except ValueError:
                mains.append(sentence)
                continue
            events.setdefault(main_id, {})[k] = sentence
        else:
            mains.append(sentence)
    return mains, events


def _extract_all(sentences, events, errors: list[str]):
    requirements: list[Requirement] = []
    traces: list[ExtractionTrace] = []
    parses: dict[str, ParsedSentence] = {}
    for group_id, sentence in enumerate(sentences, start=1):
        try:
            reqs, trace = extract(sentence, sentence.req_id, group_id,
                                  event_parses=events.get(sentence.req_id),
                                  force=True)
        except ExtractionError as exc:
            errors.append(str(exc))
            continue
        requirements.extend(reqs)
        traces.append(trace)
        for req in reqs:
            parses[req.id] = sentence
    return requirements, traces, parses


def _write(out_dir: Path, name: str, content: str) -> None:
    out_dir.mkdir(parents=True, exist_ok=True)
    (out_dir / name).write_text(content, encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    out_dir = Path(args.out) if args.out else None

    try:
        relation_map = load_relation_map(args.relation_map) if args.relation_map else None
        sentences = load_conllu(args.input, relation_map)
        lexicon = _load_lexicon(args.lexicon)
        gold = GoldLabelSet.from_file(args.gold) if getattr(args, "gold", None) else None
    except (OSError, ConlluError, EvaluationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    mains, events = _split_event_blocks(sentences)

    if args.command == "precheck":
        lines = []
        for sentence in mains:
            flags = precheck(sentence)
            rendered = ", ".join(f.value for f in flags) if flags else "ok"
            lines.append(f"{sentence.req_id}: {rendered}")
        body = "\n".join(lines) + ("\n" if lines else "")
        print(body, end="")
        if out_dir:
            _write(out_dir, "precheck.txt", body)
        return 0

    errors: list[str] = []
    requirements, traces, parses = _extract_all(mains, events, errors)
    violations = validate_requirement_set(requirements)

    if out_dir:
        _write(out_dir, "requirements.txt", report.requirement_records(requirements))
        _write(out_dir, "requirements.json", requirements_to_json(
            sorted(requirements, key=lambda r: r.id)) + "\n")
        _write(out_dir, "traces.txt", report.trace_report(traces))

    for err in errors:
        print(f"extraction failure: {err}", file=sys.stderr)
    for violation in violations:
        print(f"validation: {violation}", file=sys.stderr)

    if args.command == "extract":
        print(f"extracted {len(requirements)} requirement tuples "
              f"from {len(mains)} sentences ({len(errors)} failures)")
        return 0

    result = run_detection(requirements, parses, lexicon)
    conflict_text = report.conflict_lines(result.conflicts)
    if out_dir:
        _write(out_dir, "conflicts.txt", conflict_text)
        _write(out_dir, "report.txt", report.human_report(result))
        if args.dot:
            for kind in EdgeKind:
                _write(out_dir, f"{kind.value.lower()}_interlock.dot",
                       report.dot_graph(result.graph, kind))
    print(report.human_report(result), end="")

    if args.command == "evaluate":
        try:
            scores = evaluate(result.conflicts, gold,
                              {r.id for r in result.requirements})
        except EvaluationError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print()
        print(scores.render())
        if out_dir:
            _write(out_dir, "evaluation.txt", scores.render() + "\n")

    return 1 if result.conflicts else 0


if __name__ == "__main__":
    sys.exit(main())
