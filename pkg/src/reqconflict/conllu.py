"""Load and query dependency-parsed requirement sentences in CoNLL-U format.

A requirement sentence arrives as one CoNLL-U block (10 tab-separated
columns: ID FORM LEMMA UPOS XPOS FEATS HEAD DEPREL DEPS MISC) preceded by a
``# req_id = <id>`` comment and an optional ``# text = <sentence>`` comment.
Sentences are immutable after loading and may be shared across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path


class ConlluError(Exception):
    """Malformed CoNLL-U input. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


#: Dependency relation labels the extraction rules understand. Subtyped
#: labels (``nmod:of``, ``conj:or``) are recognized through their base label.
KNOWN_RELATIONS = frozenset({
    "root", "nsubj", "nsubjpass", "csubj", "csubjpass", "dobj", "iobj",
    "ccomp", "xcomp", "advcl", "acl", "amod", "advmod", "det", "nummod",
    "appos", "compound", "neg", "mark", "case", "cc", "conj", "nmod",
    "cop", "aux", "auxpass", "punct", "expl", "dep", "parataxis",
    "discourse", "mwe", "name", "vocative", "list", "goeswith",
})

#: Translation of common UD v2 labels into the older dialect the rules use.
DEFAULT_RELATION_MAP = {
    "obj": "dobj",
    "obl": "nmod",
    "obl:tmod": "nmod:tmod",
    "obl:npmod": "nmod:npmod",
    "obl:agent": "nmod:agent",
    "nsubj:pass": "nsubjpass",
    "csubj:pass": "csubjpass",
    "aux:pass": "auxpass",
    "flat": "compound",
    "flat:name": "compound",
    "fixed": "mwe",
    "compound:prt": "compound",
    "cc:preconj": "cc",
}


@dataclass(frozen=True)
class Token:
    """One word of a parsed sentence. ``index`` is 1-based."""

    index: int
    surface: str
    lemma: str
    upos: str = "_"
    xpos: str = "_"
    feats: str = "_"
    deps: str = "_"
    misc: str = "_"

    @property
    def norm(self) -> str:
        """Matching form: the lowercased lemma, or surface when lemma is ``_``."""
        if self.lemma and self.lemma != "_":
            return self.lemma.lower()
        return self.surface.lower()

    @property
    def space_after(self) -> bool:
        return "SpaceAfter=No" not in self.misc


@dataclass(frozen=True)
class DependencyArc:
    """A typed head -> dependent edge. Head 0 is the virtual root."""

    head: int
    dependent: int
    relation: str

    @property
    def base_relation(self) -> str:
        return self.relation.split(":", 1)[0]

    @property
    def subtype(self) -> str:
        parts = self.relation.split(":", 1)
        return parts[1] if len(parts) == 2 else ""


@dataclass(frozen=True)
class ParsedSentence:
    """One dependency-parsed requirement sentence."""

    req_id: str
    text: str
    tokens: tuple[Token, ...]
    arcs: tuple[DependencyArc, ...]
    warnings: tuple[str, ...] = ()

    def token(self, index: int) -> Token:
        return self.tokens[index - 1]

    @property
    def root_index(self) -> int:
        for arc in self.arcs:
            if arc.relation == "root":
                return arc.dependent
        raise ConlluError(f"sentence {self.req_id!r} has no root arc")

    def head_arc(self, index: int) -> DependencyArc | None:
        for arc in self.arcs:
            if arc.dependent == index:
                return arc
        return None

    def children(self, index: int, relation: str | None = None,
                 base: bool = False) -> list[DependencyArc]:
        """Arcs headed by ``index``; optionally only one relation.

        With ``base=True`` the relation filter matches subtyped labels too
        (``nmod`` also returns ``nmod:of``).
        """
        out = []
        for arc in self.arcs:
            if arc.head != index:
                continue
            if relation is not None:
                label = arc.base_relation if base else arc.relation
                if label != relation:
                    continue
            out.append(arc)
        out.sort(key=lambda a: a.dependent)
        return out

    def subtree(self, index: int) -> list[int]:
        """Token indices of ``index`` and all its descendants, sorted."""
        seen = {index}
        stack = [index]
        while stack:
            node = stack.pop()
            for arc in self.arcs:
                if arc.head == node and arc.dependent not in seen:
                    seen.add(arc.dependent)
                    stack.append(arc.dependent)
        return sorted(seen)

    def span_text(self, indices: list[int] | tuple[int, ...]) -> str:
        """Surfaces of the given tokens in sentence order, space-joined."""
        return " ".join(self.token(i).surface for i in sorted(indices))

    def reconstruct_text(self) -> str:
        """Rebuild the sentence from surfaces and recorded spacing."""
        parts: list[str] = []
        for tok in self.tokens:
            parts.append(tok.surface)
            if tok.space_after:
                parts.append(" ")
        return "".join(parts).rstrip()

    def to_conllu(self) -> str:
        """Serialize back to a CoNLL-U block (inverse of loading)."""
        lines = [f"# req_id = {self.req_id}"]
        if self.text:
            lines.append(f"# text = {self.text}")
        heads = {arc.dependent: arc for arc in self.arcs}
        for tok in self.tokens:
            arc = heads[tok.index]
            lines.append("\t".join([
                str(tok.index), tok.surface, tok.lemma, tok.upos, tok.xpos,
                tok.feats, str(arc.head), arc.relation, tok.deps, tok.misc,
            ]))
        return "\n".join(lines) + "\n"


def find_arcs(sentence: ParsedSentence, relation: str | None = None,
              head: int | None = None, dependent: int | None = None,
              subtypes: bool = False) -> list[DependencyArc]:
    """All arcs matching a relation and optional endpoint filters.

    With ``subtypes=True`` a bare label like ``nmod`` also matches its
    subtyped variants (``nmod:of`` ...); otherwise the match is exact.
    Results are ordered by dependent index. No match yields an empty list.
    """
    out = []
    for arc in sentence.arcs:
        if relation is not None:
            label = arc.base_relation if subtypes else arc.relation
            if label != relation:
                continue
        if head is not None and arc.head != head:
            continue
        if dependent is not None and arc.dependent != dependent:
            continue
        out.append(arc)
    out.sort(key=lambda a: a.dependent)
    return out


def load_relation_map(path: str | Path) -> dict[str, str]:
    """Read a label translation table: one ``from=to`` pair per line."""
    mapping: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConlluError(f"expected 'from=to' in relation map, got {line!r}", lineno)
        src, dst = (part.strip() for part in line.split("=", 1))
        if not src or not dst:
            raise ConlluError(f"empty label in relation map entry {line!r}", lineno)
        mapping[src] = dst
    return mapping


def _map_relation(label: str, mapping: dict[str, str]) -> str:
    if label in mapping:
        return mapping[label]
    base, _, subtype = label.partition(":")
    if base in mapping and subtype:
        return f"{mapping[base]}:{subtype}"
    return label


def loads_conllu(text: str, relation_map: dict[str, str] | None = None) -> list[ParsedSentence]:
    """Parse CoNLL-U text into sentences. See :func:`load_conllu`."""
    sentences: list[ParsedSentence] = []
    block: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.strip() == "":
            if block:
                sentences.append(_parse_block(block, relation_map))
                block = []
        else:
            block.append((lineno, raw))
    if block:
        sentences.append(_parse_block(block, relation_map))
    return sentences


def load_conllu(path: str | Path, relation_map: dict[str, str] | None = None) -> list[ParsedSentence]:
    """Load every sentence block of a CoNLL-U file.

    Each block must carry a ``# req_id = <id>`` comment. Structural problems
    (wrong column count, dangling head references, duplicate or missing
    indices, zero or multiple roots) raise :class:`ConlluError` naming the
    offending line; unknown relation labels are kept and recorded in the
    sentence's ``warnings`` instead of being dropped.
    """
    return loads_conllu(Path(path).read_text(encoding="utf-8"), relation_map)


def _parse_block(block: list[tuple[int, str]],
                 relation_map: dict[str, str] | None) -> ParsedSentence:
    req_id: str | None = None
    text = ""
    tokens: list[Token] = []
    arcs: list[DependencyArc] = []
    warnings: list[str] = []
    first_line = block[0][0]

    for lineno, raw in block:
        if raw.startswith("#"):
            comment = raw[1:].strip()
            if "=" in comment:
                key, value = (part.strip() for part in comment.split("=", 1))
                if key == "req_id":
                    req_id = value
                elif key == "text":
                    text = value
            continue
        cols = raw.split("\t")
        if len(cols) != 10:
            raise ConlluError(f"expected 10 tab-separated columns, got {len(cols)}", lineno)
        tok_id = cols[0]
        if "-" in tok_id or "." in tok_id:
            warnings.append(f"skipped non-integer token id {tok_id!r}")
            continue
        try:
            index = int(tok_id)
        except ValueError:
            raise ConlluError(f"token id {tok_id!r} is not an integer", lineno) from None
        if index < 1:
            raise ConlluError(f"token id must be >= 1, got {index}", lineno)
        if not cols[1]:
            raise ConlluError("empty FORM column", lineno)
        try:
            head = int(cols[6])
        except ValueError:
            raise ConlluError(f"HEAD {cols[6]!r} is not an integer", lineno) from None
        relation = cols[7]
        if relation_map:
            relation = _map_relation(relation, relation_map)
        if relation.split(":", 1)[0] not in KNOWN_RELATIONS:
            warnings.append(f"unknown relation {relation!r} on token {index}")
        tokens.append(Token(index=index, surface=cols[1], lemma=cols[2],
                            upos=cols[3], xpos=cols[4], feats=cols[5],
                            deps=cols[8], misc=cols[9]))
        arcs.append(DependencyArc(head=head, dependent=index, relation=relation))

    if req_id is None:
        raise ConlluError("block has no '# req_id = ...' comment", first_line)
    if not tokens:
        raise ConlluError(f"block {req_id!r} has no token rows", first_line)

    indices = [t.index for t in tokens]
    if len(set(indices)) != len(indices):
        raise ConlluError(f"block {req_id!r} has duplicate token indices", first_line)
    if sorted(indices) != list(range(1, len(indices) + 1)):
        raise ConlluError(f"block {req_id!r} token indices are not 1..n", first_line)
    index_set = set(indices)
    for arc in arcs:
        if arc.head != 0 and arc.head not in index_set:
            raise ConlluError(
                f"block {req_id!r}: token {arc.dependent} references nonexistent head {arc.head}",
                first_line)
    roots = [a for a in arcs if a.head == 0]
    if len(roots) != 1:
        raise ConlluError(f"block {req_id!r} must have exactly one head-0 arc, found {len(roots)}",
                          first_line)
    if roots[0].relation != "root":
        raise ConlluError(f"block {req_id!r}: head-0 arc must be labeled 'root'", first_line)

    tokens.sort(key=lambda t: t.index)
    arcs.sort(key=lambda a: a.dependent)
    return ParsedSentence(req_id=req_id, text=text, tokens=tuple(tokens),
                          arcs=tuple(arcs), warnings=tuple(warnings))


def dump_conllu(sentences: list[ParsedSentence]) -> str:
    """Serialize sentences into one CoNLL-U document."""
    return "\n".join(s.to_conllu() for s in sentences)
