"""Score detection results against gold labels and extracted tuples against
reference annotations.

A detected conflict is correct when its kind and member set match a gold
entry; interlock cycles match as unordered sets. Precision is correct over
detected, recall is matched gold over known; both default to 1 on an empty
denominator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .detect import Conflict, ConflictKind
from .model import Requirement


class EvaluationError(Exception):
    pass


@dataclass(frozen=True)
class GoldEntry:
    kind: ConflictKind
    members: frozenset[str]


@dataclass
class GoldLabelSet:
    """Expected conflicts: kind plus the participating requirement ids."""

    entries: list[GoldEntry] = field(default_factory=list)

    @classmethod
    def from_file(cls, path: str | Path) -> "GoldLabelSet":
        """Parse a gold file: one ``KIND: id1,id2,...`` entry per line,
        ``#`` starts a comment."""
        entries = []
        for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if ":" not in line:
                raise EvaluationError(f"line {lineno}: expected 'KIND: id1,id2,...'")
            kind_text, _, members_text = line.partition(":")
            try:
                kind = ConflictKind(kind_text.strip())
            except ValueError:
                raise EvaluationError(
                    f"line {lineno}: unknown conflict kind {kind_text.strip()!r}") from None
            members = frozenset(m.strip() for m in members_text.split(",") if m.strip())
            if not members:
                raise EvaluationError(f"line {lineno}: entry has no member ids")
            entries.append(GoldEntry(kind=kind, members=members))
        return cls(entries)


def _percent(value: float) -> str:
    return f"{100 * value:.2f}"


@dataclass
class EvaluationResult:
    known: int
    detected: int
    correct: int
    precision: float
    recall: float

    @property
    def precision_percent(self) -> str:
        return _percent(self.precision)

    @property
    def recall_percent(self) -> str:
        return _percent(self.recall)

    def render(self) -> str:
        return "\n".join([
            f"known conflicts:    {self.known}",
            f"detected conflicts: {self.detected}",
            f"correct detected:   {self.correct}",
            f"precision:          {self.precision_percent}%",
            f"recall:             {self.recall_percent}%",
        ])


def evaluate(detected: list[Conflict], gold: GoldLabelSet,
             requirement_ids: set[str] | None = None) -> EvaluationResult:
    """Score detected conflicts against the gold labels.

    ``requirement_ids``, when given, is the universe of analyzed ids; a gold
    entry naming an unknown id is a validation error. Permutation-invariant
    in both argument lists.
    """
    if requirement_ids is not None:
        for entry in gold.entries:
            unknown = entry.members - requirement_ids
            if unknown:
                raise EvaluationError(
                    f"gold entry {entry.kind.value} names unknown ids: {sorted(unknown)}")

    gold_keys = {(e.kind, e.members) for e in gold.entries}
    detected_keys = [(c.kind, frozenset(c.members)) for c in detected]
    correct = sum(1 for key in detected_keys if key in gold_keys)
    matched = len(gold_keys & set(detected_keys))
    precision = correct / len(detected_keys) if detected_keys else 1.0
    recall = matched / len(gold_keys) if gold_keys else 1.0
    return EvaluationResult(known=len(gold_keys), detected=len(detected_keys),
                            correct=correct, precision=precision, recall=recall)


_ELEMENTS = ("event", "agent", "operation", "input", "output", "restriction")


@dataclass
class TupleScore:
    """Per-element extraction accuracy over a requirement set."""

    total: int
    per_element: dict[str, float]
    overall: float
    average_macro: float
    average_micro: float

    def render(self) -> str:
        lines = [f"total requirements: {self.total}",
                 f"overall accuracy: {_percent(self.overall)}%"]
        for element in _ELEMENTS:
            lines.append(f"  {element:<12} {_percent(self.per_element[element])}%")
        lines.append(f"average accuracy (macro over elements): {_percent(self.average_macro)}%")
        lines.append(f"average accuracy (micro over slots):    {_percent(self.average_micro)}%")
        return "\n".join(lines)


def score_tuples(extracted: list[Requirement], gold: list[Requirement]) -> TupleScore:
    """Element-wise accuracy of extracted tuples against reference tuples.

    Both lists must cover the same requirement ids. Per-element accuracy is
    the fraction of requirements whose element equals the reference exactly;
    overall counts requirements with all six elements correct. The average
    is reported both macro (mean of the six element accuracies) and micro
    (correct element slots over all slots); the two coincide on a single
    set and may differ only when aggregating sets of different sizes.
    """
    ext_by_id = {r.id: r for r in extracted}
    gold_by_id = {r.id: r for r in gold}
    if len(ext_by_id) != len(extracted) or len(gold_by_id) != len(gold):
        raise EvaluationError("duplicate requirement ids")
    if set(ext_by_id) != set(gold_by_id):
        missing = set(gold_by_id) ^ set(ext_by_id)
        raise EvaluationError(f"extracted and gold ids differ: {sorted(missing)}")
    if not gold_by_id:
        raise EvaluationError("empty requirement sets cannot be scored")

    total = len(gold_by_id)
    correct_per_element = {element: 0 for element in _ELEMENTS}
    all_correct = 0
    for req_id, reference in gold_by_id.items():
        candidate = ext_by_id[req_id]
        flags = {element: getattr(candidate, element) == getattr(reference, element)
                 for element in _ELEMENTS}
        for element, ok in flags.items():
            if ok:
                correct_per_element[element] += 1
        if all(flags.values()):
            all_correct += 1

    per_element = {element: correct_per_element[element] / total for element in _ELEMENTS}
    macro = sum(per_element.values()) / len(_ELEMENTS)
    micro = sum(correct_per_element.values()) / (len(_ELEMENTS) * total)
    return TupleScore(total=total, per_element=per_element,
                      overall=all_correct / total,
                      average_macro=macro, average_micro=micro)
