"""Rule-based extraction of requirement tuples from dependency parses.

The rules assume shall-style requirement sentences: the predicate follows a
modal verb, conditional clauses open with "when" or "if", and pronouns do
not occur. :func:`precheck` flags sentences that violate those assumptions
so they can be repaired by hand; extraction itself never rewrites input.

Extraction walks the dependency arcs:

* operation: the verb after the modal (ABLE for can/may), a sentence-initial
  participle, a copula ("be" plus predicative), or a passive participle
  ("be" plus past participle); a governed infinitive is appended ("allow to
  delete"); a negation arc flips the mode to NOT; capability phrases such as
  "be able to" switch the mode to ABLE and promote the governed verb.
* agent: the nominal subject in active voice, the by-phrase in passive
  voice, absent when a passive clause names no actor.
* event: each fronted when/if clause becomes one condition, itself analyzed
  with the same rules; clauses joined by and/or share that connective.
* input/output: direct objects and passive subjects feed both sets;
  prepositional nominals feed input only (possessive, of, by, agent and at
  phrases excluded - those serve other elements).
* restriction: adverbs modifying the predicate, "only" plus a number,
  frequency patterns (every X, per X, temporal modifiers), and spans ending
  in "time" introduced by a preposition.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum

from .conllu import DependencyArc, ParsedSentence, Token
from .model import (
    Condition,
    Connective,
    Entity,
    EventSpec,
    OperationMode,
    OperationSpec,
    Requirement,
)

DEFAULT_MODALS = frozenset({"shall", "must", "will", "should"})
ABLE_MODALS = frozenset({"can", "may"})
ALL_MODALS = DEFAULT_MODALS | ABLE_MODALS
CONDITIONAL_KEYWORDS = frozenset({"when", "if"})
ARTICLES = frozenset({"a", "an", "the"})
NEGATION_WORDS = frozenset({"not", "never", "n't"})
PRONOUN_LEMMAS = frozenset({
    "it", "they", "them", "he", "she", "him", "her", "i", "we", "us", "you",
})

#: Capability phrases that set the ABLE mode and hand the predicate role to
#: the verb they govern. Matched on lemmas; extendable per project.
DEFAULT_DIRECTIVES = (
    "be able to",
    "be capable of",
    "have the ability to",
    "enable",
)

#: Prepositional subtypes that never feed input: possessives and of-phrases
#: stay inside entities, by/agent phrases name the agent, at-phrases carry
#: quantity restrictions.
INPUT_EXCLUDED_NMOD_SUBTYPES = frozenset({"poss", "of", "by", "agent", "at"})

_INHERITED_RELATIONS = frozenset({
    "aux", "auxpass", "neg", "nsubj", "nsubjpass", "cop", "dobj", "iobj",
    "xcomp", "advmod", "advcl", "nmod", "expl",
})


class ExtractionError(Exception):
    """Extraction rule failure with a stable code (NO_PREDICATE, NO_AGENT,
    NOT_NOMINAL, MALFORMED_EVENT, PRECHECK_FAILED)."""

    def __init__(self, code: str, message: str, req_id: str | None = None):
        self.code = code
        self.req_id = req_id
        prefix = f"[{code}]" if req_id is None else f"[{code}] {req_id}:"
        super().__init__(f"{prefix} {message}")


class PrecheckFlag(str, Enum):
    MISSING_MODAL = "MISSING_MODAL"
    MISSING_CONDITIONAL_KEYWORD = "MISSING_CONDITIONAL_KEYWORD"
    CONTAINS_PRONOUN = "CONTAINS_PRONOUN"
    MIXED_CONNECTIVES = "MIXED_CONNECTIVES"
    NESTED_CONDITIONAL = "NESTED_CONDITIONAL"


@dataclass(frozen=True)
class TraceEntry:
    req_id: str
    element: str
    tokens: tuple[int, ...]
    rule: str


@dataclass
class ExtractionTrace:
    """Provenance of every extracted element, keyed by produced requirement."""

    req_id: str
    entries: list[TraceEntry] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def add(self, req_id: str, element: str, tokens, rule: str) -> None:
        self.entries.append(TraceEntry(req_id=req_id, element=element,
                                       tokens=tuple(sorted(tokens)), rule=rule))

    def rules_for(self, element: str) -> set[str]:
        return {e.rule for e in self.entries if e.element == element}


def _is_verbal(tok: Token) -> bool:
    return tok.xpos.startswith("VB") or tok.upos in ("VERB", "AUX")


def _is_nominal(tok: Token) -> bool:
    return (tok.upos in ("NOUN", "PROPN", "PRON", "NUM")
            or tok.xpos.startswith(("NN", "PRP", "CD")))


def _lemma(tok: Token) -> str:
    return tok.lemma if tok.lemma and tok.lemma != "_" else tok.surface


# ---------------------------------------------------------------------------
# Precheck
# ---------------------------------------------------------------------------

def precheck(sentence: ParsedSentence) -> list[PrecheckFlag]:
    """Flag violations of the shall-style assumptions. Empty means clean."""
    flags: list[PrecheckFlag] = []

    has_modal = any(
        t.norm in ALL_MODALS and (t.xpos == "MD" or t.upos == "AUX")
        for t in sentence.tokens)
    if not has_modal:
        flags.append(PrecheckFlag.MISSING_MODAL)

    advcl_arcs = [a for a in sentence.arcs if a.base_relation == "advcl"]
    keyword_subtrees: list[list[int]] = []
    for arc in advcl_arcs:
        sub = sentence.subtree(arc.dependent)
        has_keyword = any(sentence.token(i).norm in CONDITIONAL_KEYWORDS for i in sub)
        if has_keyword:
            keyword_subtrees.append(sub)
        elif PrecheckFlag.MISSING_CONDITIONAL_KEYWORD not in flags:
            flags.append(PrecheckFlag.MISSING_CONDITIONAL_KEYWORD)

    if any(t.xpos in ("PRP", "PRP$")
           or (t.upos == "PRON" and t.norm in PRONOUN_LEMMAS)
           for t in sentence.tokens):
        flags.append(PrecheckFlag.CONTAINS_PRONOUN)

    clause_heads = {a.dependent for a in advcl_arcs}
    for head in list(clause_heads):
        for arc in sentence.children(head, "conj", base=True):
            clause_heads.add(arc.dependent)
    cc_norms = set()
    for head in clause_heads:
        for arc in sentence.children(head, "cc", base=True):
            cc_norms.add(sentence.token(arc.dependent).norm)
    if {"and", "or"} <= cc_norms:
        flags.append(PrecheckFlag.MIXED_CONNECTIVES)

    for outer in keyword_subtrees:
        inner_heads = [a.dependent for a in advcl_arcs
                       if a.dependent in outer and a.head in outer]
        for head in inner_heads:
            sub = sentence.subtree(head)
            if any(sentence.token(i).norm in CONDITIONAL_KEYWORDS for i in sub):
                flags.append(PrecheckFlag.NESTED_CONDITIONAL)
                break
        else:
            continue
        break

    return flags


# ---------------------------------------------------------------------------
# Operation
# ---------------------------------------------------------------------------

@dataclass
class _PredicateInfo:
    spec: OperationSpec
    token: int
    complex: frozenset[int]
    passive: bool
    copular: bool
    rules: list[tuple[str, tuple[int, ...]]]


def _locate_operation(sentence: ParsedSentence,
                      directives: tuple[str, ...] = DEFAULT_DIRECTIVES) -> _PredicateInfo:
    tokens = sentence.tokens
    rules: list[tuple[str, tuple[int, ...]]] = []
    mode = OperationMode.DEFAULT
    cand: int | None = None

    modal = next((t for t in tokens
                  if t.norm in ALL_MODALS and (t.xpos == "MD" or t.upos == "AUX")), None)
    if modal is not None:
        for t in tokens[modal.index:]:
            if _is_verbal(t) and t.norm not in ALL_MODALS:
                cand = t.index
                mode = OperationMode.ABLE if modal.norm in ABLE_MODALS else OperationMode.DEFAULT
                rules.append((f"verb-after-{modal.norm}", (modal.index, t.index)))
                break
    if cand is None and tokens and tokens[0].xpos in ("VBN", "VBG"):
        cand = 1
        rules.append(("initial-participle", (1,)))
    if cand is None:
        be = next((t for t in tokens if t.norm == "be"), None)
        if be is not None:
            cand = be.index
            rules.append(("be-in-clause", (be.index,)))
    if cand is None:
        root = sentence.root_index
        if _is_verbal(sentence.token(root)):
            cand = root
            rules.append(("root-verb", (root,)))
    if cand is None:
        raise ExtractionError("NO_PREDICATE", "no rule identifies a predicate verb",
                              sentence.req_id)

    parts: list[str]
    extra: set[int] = set()
    passive = False
    copular = False

    cand_tok = sentence.token(cand)
    if cand_tok.norm == "be":
        cop = next((a for a in sentence.arcs
                    if a.base_relation == "cop" and a.dependent == cand), None)
        nxt = sentence.token(cand + 1) if cand < len(tokens) else None
        if cop is not None:
            extra.add(cand)
            cand = cop.head
            parts = ["be", sentence.token(cand).surface.lower()]
            copular = True
            rules.append(("copula-predicative", (cop.head, cop.dependent)))
        elif nxt is not None and nxt.xpos == "VBN":
            extra.add(cand)
            cand = nxt.index
            parts = ["be", nxt.surface.lower()]
            passive = True
            rules.append(("passive-participle", (cand,)))
        else:
            parts = ["be"]
    else:
        parts = [cand_tok.surface.lower()]

    # capability phrases hand the predicate role to the verb they govern
    window = _find_directive(sentence, directives)
    if window and (set(window) & (extra | {cand})):
        mode = OperationMode.ABLE
        rules.append(("capability-directive", tuple(window)))
        comp = _governed_infinitive(sentence, list(window) + [cand])
        if comp is not None:
            extra |= {cand} | set(window)
            cand = comp
            parts = [sentence.token(comp).surface.lower()]
    else:
        # a governed infinitive complements the predicate: "allow to delete"
        for arc in sentence.children(cand, "xcomp"):
            dep = sentence.token(arc.dependent)
            if dep.xpos == "VB" and _has_to_marker(sentence, arc.dependent):
                parts += ["to", dep.surface.lower()]
                extra.add(arc.dependent)
                rules.append(("infinitive-complement", (cand, arc.dependent)))
                break

    if not passive:
        passive = bool(
            [a for a in sentence.arcs if a.base_relation in ("auxpass", "nsubjpass")
             and a.head == cand])

    complex_ = frozenset({cand} | extra)
    if _has_negation(sentence, complex_):
        mode = OperationMode.NOT
        rules.append(("negation", tuple(sorted(complex_))))

    return _PredicateInfo(spec=OperationSpec(mode=mode, predicate=" ".join(parts)),
                          token=cand, complex=complex_, passive=passive,
                          copular=copular, rules=rules)


def _find_directive(sentence: ParsedSentence,
                    directives: tuple[str, ...]) -> tuple[int, ...] | None:
    norms = [t.norm for t in sentence.tokens]
    for phrase in directives:
        words = phrase.lower().split()
        for start in range(len(norms) - len(words) + 1):
            if norms[start:start + len(words)] == words:
                return tuple(range(start + 1, start + len(words) + 1))
    return None


def _governed_infinitive(sentence: ParsedSentence, anchors: list[int]) -> int | None:
    for anchor in anchors:
        for rel in ("xcomp", "acl"):
            for arc in sentence.children(anchor, rel, base=True):
                if _is_verbal(sentence.token(arc.dependent)):
                    return arc.dependent
    return None


def _has_to_marker(sentence: ParsedSentence, verb: int) -> bool:
    if any(sentence.token(a.dependent).norm == "to"
           for a in sentence.children(verb, "mark")):
        return True
    return verb > 1 and sentence.token(verb - 1).norm == "to"


def _has_negation(sentence: ParsedSentence, complex_: frozenset[int]) -> bool:
    for arc in sentence.arcs:
        if arc.head not in complex_:
            continue
        if arc.base_relation == "neg":
            return True
        if (arc.base_relation == "advmod"
                and sentence.token(arc.dependent).norm in NEGATION_WORDS):
            return True
    return False


def identify_operation(sentence: ParsedSentence,
                       directives: tuple[str, ...] = DEFAULT_DIRECTIVES) -> OperationSpec:
    """The operation of the main clause: mode plus predicate text."""
    return _locate_operation(sentence, directives).spec


# ---------------------------------------------------------------------------
# Entities
# ---------------------------------------------------------------------------

def _entity_base(sentence: ParsedSentence, head: int) -> str:
    parts = [sentence.token(a.dependent)
             for a in sentence.children(head, "compound", base=True)]
    parts.append(sentence.token(head))
    parts.sort(key=lambda t: t.index)
    return " ".join(_lemma(t) for t in parts)


def parse_entity(sentence: ParsedSentence, head: int) -> Entity:
    """Build an entity from a nominal head: compound nouns merge into the
    base, and determiners of semantic weight, adjectives, numbers,
    of-phrases, possessives and relative clauses become modifiers. The
    articles a/an/the carry no semantic content and are dropped."""
    tok = sentence.token(head)
    if not _is_nominal(tok):
        raise ExtractionError("NOT_NOMINAL",
                              f"token {head} ({tok.surface!r}) is not nominal",
                              sentence.req_id)
    base = _entity_base(sentence, head)
    mods: set[str] = set()
    for arc in sentence.children(head):
        rel = arc.base_relation
        dep = sentence.token(arc.dependent)
        if rel == "det":
            if dep.norm not in ARTICLES:
                mods.add(dep.surface.lower())
        elif rel in ("amod", "nummod"):
            mods.add(dep.surface.lower())
            for sub in sentence.children(arc.dependent, "conj", base=True):
                mods.add(sentence.token(sub.dependent).surface.lower())
                for cc in sentence.children(sub.dependent, "cc", base=True):
                    mods.add(sentence.token(cc.dependent).surface.lower())
            for cc in sentence.children(arc.dependent, "cc", base=True):
                mods.add(sentence.token(cc.dependent).surface.lower())
        elif rel == "neg":
            mods.add(dep.surface.lower())
        elif rel == "nmod":
            owner = _entity_base(sentence, arc.dependent)
            if arc.subtype == "poss":
                mods.add(f"{owner}'s")
            elif arc.subtype == "of":
                mods.add(f"of {owner}")
            else:
                case = next((sentence.token(a.dependent).surface.lower()
                             for a in sentence.children(arc.dependent, "case")), None)
                mods.add(f"{case} {owner}" if case else owner)
        elif rel == "acl":
            span = sentence.subtree(arc.dependent)
            mods.add(" ".join(sentence.token(i).surface for i in span).lower())
    return Entity(base=base, modifiers=frozenset(mods))


# ---------------------------------------------------------------------------
# Agent
# ---------------------------------------------------------------------------

def identify_agent(sentence: ParsedSentence,
                   op_info: _PredicateInfo | None = None) -> Entity | None:
    """The executor of the operation. Active voice: the nominal subject.
    Passive voice: the by-phrase nominal, or None when no actor is named
    (any entity may then be the agent)."""
    info = op_info or _locate_operation(sentence)
    if info.passive:
        for head in sorted(info.complex):
            for arc in sentence.children(head, "nmod", base=True):
                if arc.subtype in ("agent", "by"):
                    return parse_entity(sentence, arc.dependent)
                if any(sentence.token(a.dependent).norm == "by"
                       for a in sentence.children(arc.dependent, "case")):
                    return parse_entity(sentence, arc.dependent)
        return None
    for head in sorted(info.complex):
        for arc in sentence.children(head, "nsubj"):
            if _is_nominal(sentence.token(arc.dependent)):
                return parse_entity(sentence, arc.dependent)
    raise ExtractionError("NO_AGENT", "active clause has no nominal subject",
                          sentence.req_id)


def _agent_boundary(sentence: ParsedSentence, info: _PredicateInfo) -> int:
    """First token of the main clause's (formal) subject; conditional
    clauses must end before it."""
    for rel in ("nsubj", "nsubjpass"):
        for head in sorted(info.complex):
            arcs = sentence.children(head, rel)
            if arcs:
                return min(sentence.subtree(arcs[0].dependent))
    return min(info.complex)


# ---------------------------------------------------------------------------
# Event
# ---------------------------------------------------------------------------

def _sub_sentence(sentence: ParsedSentence, indices: list[int], root: int,
                  extra_arcs: tuple[DependencyArc, ...] = (),
                  suffix: str = "#clause") -> ParsedSentence:
    keep = sorted(set(indices))
    remap = {old: new for new, old in enumerate(keep, start=1)}
    tokens = tuple(
        replace(sentence.token(old), index=remap[old]) for old in keep)
    arcs = [DependencyArc(head=0, dependent=remap[root], relation="root")]
    for arc in list(sentence.arcs) + list(extra_arcs):
        if arc.dependent == root or arc.dependent not in remap:
            continue
        if arc.head not in remap:
            continue
        arcs.append(DependencyArc(head=remap[arc.head], dependent=remap[arc.dependent],
                                  relation=arc.relation))
    arcs.sort(key=lambda a: a.dependent)
    text = " ".join(t.surface for t in tokens)
    return ParsedSentence(req_id=sentence.req_id + suffix, text=text,
                          tokens=tokens, arcs=tuple(arcs))


def _condition_clauses(sentence: ParsedSentence, info: _PredicateInfo,
                       boundary: int) -> tuple[list[tuple[int, list[int]]], Connective | None]:
    """Fronted when/if clauses as (head, token indices) plus their
    connective. Clause tokens exclude the keyword, conjunctions and
    punctuation."""
    heads: list[int] = []
    for head in sorted(info.complex):
        for arc in sentence.children(head, "advcl", base=True):
            sub = sentence.subtree(arc.dependent)
            if max(sub) >= boundary:
                continue
            if any(sentence.token(i).norm in CONDITIONAL_KEYWORDS for i in sub):
                heads.append(arc.dependent)
    expanded: list[int] = []
    for head in heads:
        expanded.append(head)
        for arc in sentence.children(head, "conj", base=True):
            if arc.dependent not in expanded:
                expanded.append(arc.dependent)

    cc_norms: list[str] = []
    for head in expanded:
        for arc in sentence.children(head, "cc", base=True):
            cc_norms.append(sentence.token(arc.dependent).norm)

    clauses: list[tuple[int, list[int]]] = []
    all_heads = set(expanded)
    for head in expanded:
        sub = set(sentence.subtree(head))
        for other in all_heads:
            if other != head and other in sub:
                sub -= set(sentence.subtree(other))
        drop = set()
        for i in sub:
            tok = sentence.token(i)
            if tok.norm in CONDITIONAL_KEYWORDS or tok.upos == "PUNCT" or tok.xpos == ",":
                drop.add(i)
            arc = sentence.head_arc(i)
            if arc is not None and arc.base_relation == "cc":
                drop.add(i)
        clauses.append((head, sorted(sub - drop)))

    connective: Connective | None = None
    if len(clauses) >= 2:
        connective = Connective.OR if "or" in cc_norms else Connective.AND
    return clauses, connective


def identify_event(sentence: ParsedSentence,
                   op_info: _PredicateInfo | None = None,
                   event_parses: dict[int, ParsedSentence] | None = None,
                   directives: tuple[str, ...] = DEFAULT_DIRECTIVES) -> EventSpec:
    """The trigger of the requirement. Fronted when/if clauses become
    conditions, each analyzed like a sentence of its own (from a supplied
    standalone parse when available, otherwise from the clause subtree);
    no conditional clause means the ALL event."""
    info = op_info or _locate_operation(sentence, directives)
    boundary = _agent_boundary(sentence, info)
    clauses, connective = _condition_clauses(sentence, info, boundary)

    if not clauses:
        keyword = [t for t in sentence.tokens
                   if t.norm in CONDITIONAL_KEYWORDS and t.index < boundary]
        if keyword:
            raise ExtractionError(
                "MALFORMED_EVENT",
                f"conditional keyword {keyword[0].surface!r} without a clause",
                sentence.req_id)
        return EventSpec.all()

    conditions = []
    for k, (head, indices) in enumerate(clauses, start=1):
        if event_parses and k in event_parses:
            clause_sentence = event_parses[k]
        else:
            clause_sentence = _sub_sentence(sentence, indices, head,
                                            suffix=f"#event{k}")
        cond_info = _locate_operation(clause_sentence, directives)
        agent = identify_agent(clause_sentence, cond_info)
        inp, out = identify_input_output(clause_sentence, cond_info)
        restriction = identify_restriction(clause_sentence, cond_info)
        conditions.append(Condition(agent=agent, operation=cond_info.spec,
                                    input=inp, output=out, restriction=restriction))
    return EventSpec.when(*conditions, connective=connective)


# ---------------------------------------------------------------------------
# Input / output
# ---------------------------------------------------------------------------

def identify_input_output(sentence: ParsedSentence,
                          op_info: _PredicateInfo | None = None) -> tuple[frozenset, frozenset]:
    """Entities consumed and produced by the operation. Direct objects and
    passive subjects enter both sets; other prepositional nominals enter
    input only. Both sets may be empty."""
    info = op_info or _locate_operation(sentence)
    inp: set[Entity] = set()
    out: set[Entity] = set()
    for head in sorted(info.complex):
        for arc in sentence.children(head, "dobj"):
            if _is_nominal(sentence.token(arc.dependent)):
                entity = parse_entity(sentence, arc.dependent)
                inp.add(entity)
                out.add(entity)
        if info.passive:
            for arc in sentence.children(head, "nsubjpass"):
                if _is_nominal(sentence.token(arc.dependent)):
                    entity = parse_entity(sentence, arc.dependent)
                    inp.add(entity)
                    out.add(entity)
        for arc in sentence.children(head, "nmod", base=True):
            if arc.subtype in INPUT_EXCLUDED_NMOD_SUBTYPES:
                continue
            if _is_nominal(sentence.token(arc.dependent)):
                inp.add(parse_entity(sentence, arc.dependent))
    return frozenset(inp), frozenset(out)


# ---------------------------------------------------------------------------
# Restriction
# ---------------------------------------------------------------------------

def _span_text(sentence: ParsedSentence, start: int, end: int) -> str:
    return " ".join(sentence.token(i).surface for i in range(start, end + 1)).lower()


def identify_restriction(sentence: ParsedSentence,
                         op_info: _PredicateInfo | None = None) -> frozenset:
    """Constraints on performing the operation, each one atomic string."""
    info = op_info or _locate_operation(sentence)
    constraints: set[str] = set()

    for arc in sentence.arcs:
        if arc.base_relation != "advmod":
            continue
        dep = sentence.token(arc.dependent)
        if dep.norm in CONDITIONAL_KEYWORDS or dep.norm in ("then",) \
                or dep.norm in NEGATION_WORDS:
            continue
        if dep.norm == "only":
            number = next((t for t in sentence.tokens
                           if t.xpos == "CD" and t.index > arc.dependent), None)
            if number is None:
                number = next((t for t in sentence.tokens if t.xpos == "CD"), None)
            if number is not None:
                constraints.add(f"only {number.surface.lower()}")
            elif arc.head in info.complex:
                constraints.add("only")
            continue
        if arc.head in info.complex:
            constraints.add(dep.surface.lower())

    # spans like "at a time": a preposition case-marking the word "time"
    for arc in sentence.arcs:
        if arc.relation != "case":
            continue
        head_tok = sentence.token(arc.head)
        if head_tok.norm != "time":
            continue
        attach = sentence.head_arc(arc.head)
        if attach is not None and attach.head in info.complex:
            constraints.add(_span_text(sentence, arc.dependent, arc.head))

    # frequency phrases: "every <period>", "per <period>", temporal modifiers
    for tok in sentence.tokens:
        if tok.norm == "every":
            head_arc = sentence.head_arc(tok.index)
            if head_arc is not None and head_arc.head > tok.index:
                noun_arc = sentence.head_arc(head_arc.head)
                if noun_arc is not None and noun_arc.base_relation in ("nmod", "advmod") \
                        and noun_arc.head in info.complex:
                    constraints.add(_span_text(sentence, tok.index, head_arc.head))
        if tok.norm == "per":
            head_arc = sentence.head_arc(tok.index)
            if head_arc is not None and head_arc.relation == "case":
                noun_arc = sentence.head_arc(head_arc.head)
                if noun_arc is not None and noun_arc.base_relation == "nmod" \
                        and noun_arc.head in info.complex:
                    constraints.add(_span_text(sentence, tok.index, head_arc.head))
    for head in sorted(info.complex):
        for arc in sentence.children(head, "nmod:tmod"):
            span = sentence.subtree(arc.dependent)
            constraints.add(" ".join(sentence.token(i).surface for i in span).lower())

    return frozenset(constraints)


# ---------------------------------------------------------------------------
# Whole-sentence extraction
# ---------------------------------------------------------------------------

def _conjunct_predicates(sentence: ParsedSentence) -> list[int]:
    """Root-level verbs coordinated under modal governance; length >= 2
    means the sentence packs several operations and must be split."""
    root = sentence.root_index
    chain = [root]
    queue = [root]
    while queue:
        node = queue.pop(0)
        for arc in sentence.children(node, "conj", base=True):
            dep = sentence.token(arc.dependent)
            if _is_verbal(dep) and arc.dependent not in chain:
                chain.append(arc.dependent)
                queue.append(arc.dependent)
    if len(chain) < 2:
        return [root]
    carries_modal = any(
        sentence.token(a.dependent).norm in ALL_MODALS
        for v in chain for a in sentence.children(v, "aux"))
    return chain if carries_modal else [root]


def _conjunct_view(sentence: ParsedSentence, verb: int, head_verb: int,
                   all_verbs: list[int], part: int) -> ParsedSentence:
    include: set[int] = {verb}
    own_relations: set[str] = set()
    for arc in sentence.children(verb):
        if arc.base_relation in ("conj", "cc", "punct"):
            continue
        include |= set(sentence.subtree(arc.dependent))
        own_relations.add(arc.base_relation)
    synthetic: list[DependencyArc] = []
    if verb != head_verb:
        # shared arguments attach to the first conjunct; inherit what this
        # conjunct lacks
        for arc in sentence.children(head_verb):
            base = arc.base_relation
            if base not in _INHERITED_RELATIONS or base in own_relations:
                continue
            sub = set(sentence.subtree(arc.dependent))
            if sub & set(all_verbs):
                continue
            include |= sub
            synthetic.append(DependencyArc(head=verb, dependent=arc.dependent,
                                           relation=arc.relation))
    return _sub_sentence(sentence, sorted(include), verb,
                         extra_arcs=tuple(synthetic), suffix=f"#part{part}")


def _extract_single(sentence: ParsedSentence, req_id: str, group_id: int,
                    trace: ExtractionTrace,
                    event_parses: dict[int, ParsedSentence] | None,
                    directives: tuple[str, ...]) -> Requirement:
    info = _locate_operation(sentence, directives)
    for rule, tokens in info.rules:
        trace.add(req_id, "operation", tokens, rule)

    agent = identify_agent(sentence, info)
    if agent is not None:
        trace.add(req_id, "agent", sentence.subtree(_find_agent_token(sentence, info)),
                  "passive-by-phrase" if info.passive else "nominal-subject")

    boundary = _agent_boundary(sentence, info)
    clauses, _ = _condition_clauses(sentence, info, boundary)
    event = identify_event(sentence, info, event_parses, directives)
    for head, indices in clauses:
        trace.add(req_id, "event", indices, "conditional-clause")

    inp, out = identify_input_output(sentence, info)
    if inp or out:
        trace.add(req_id, "input", _io_tokens(sentence, info), "object-rules")
        trace.add(req_id, "output", _io_tokens(sentence, info), "object-rules")
    restriction = identify_restriction(sentence, info)
    if restriction:
        trace.add(req_id, "restriction", tuple(sorted(info.complex)), "restriction-rules")

    return Requirement(id=req_id, group_id=group_id, event=event, agent=agent,
                       operation=info.spec, input=inp, output=out,
                       restriction=restriction)


def _find_agent_token(sentence: ParsedSentence, info: _PredicateInfo) -> int:
    for head in sorted(info.complex):
        for rel in ("nsubj", "nmod"):
            arcs = sentence.children(head, rel, base=True)
            if arcs:
                return arcs[0].dependent
    return info.token


def _io_tokens(sentence: ParsedSentence, info: _PredicateInfo) -> tuple[int, ...]:
    tokens: list[int] = []
    for head in sorted(info.complex):
        for rel in ("dobj", "nsubjpass", "nmod"):
            for arc in sentence.children(head, rel, base=True):
                tokens.append(arc.dependent)
    return tuple(sorted(set(tokens)))


def extract(sentence: ParsedSentence, req_id: str, group_id: int, *,
            event_parses: dict[int, ParsedSentence] | None = None,
            directives: tuple[str, ...] = DEFAULT_DIRECTIVES,
            force: bool = False) -> tuple[list[Requirement], ExtractionTrace]:
    """Turn one parsed sentence into requirement tuples plus a trace.

    A sentence whose root verb coordinates several modal-governed verbs is
    split: each verb yields one requirement and all of them share this
    call's group id, agent and event. Sentences that fail :func:`precheck`
    raise unless ``force`` is set, in which case the flags become trace
    warnings.
    """
    trace = ExtractionTrace(req_id=req_id)
    flags = precheck(sentence)
    if flags:
        if not force:
            raise ExtractionError(
                "PRECHECK_FAILED",
                "sentence violates assumptions: " + ", ".join(f.value for f in flags),
                req_id)
        trace.warnings.extend(f"precheck: {f.value}" for f in flags)
    trace.warnings.extend(sentence.warnings)

    verbs = _conjunct_predicates(sentence)
    if len(verbs) < 2:
        requirement = _extract_single(sentence, req_id, group_id, trace,
                                      event_parses, directives)
        return [requirement], trace

    requirements: list[Requirement] = []
    for part, verb in enumerate(verbs, start=1):
        view = _conjunct_view(sentence, verb, verbs[0], verbs, part)
        requirement = _extract_single(view, f"{req_id}-{part}", group_id, trace,
                                      event_parses if part == 1 else None,
                                      directives)
        requirements.append(requirement)
    # split requirements share the agent and event of the sentence
    first = requirements[0]
    requirements = [first] + [replace(r, agent=first.agent, event=first.event)
                              for r in requirements[1:]]
    return requirements, trace
