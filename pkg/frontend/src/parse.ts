import { tokenize } from './tokenize.js';
import { TaggedToken, tag } from './tagger.js';
import { Arc, ParsedSentence, Token, AdapterError } from './types.js';

/** Deterministic dependency parser for shall-style requirement sentences.
 *
 * Coverage is the controlled grammar the downstream rules expect: a subject
 * noun phrase, a modal, the predicate (plain, negated, copular, passive or
 * capability phrase), objects, infinitive complements, prepositional
 * phrases, adverbs, coordinated predicates, when/if clauses and
 * that-clauses. It emits the classic Stanford-style label vocabulary
 * (nsubj, dobj, nmod:of, neg, ...) directly. For text outside this grammar,
 * use the corenlp engine instead.
 */

interface ClauseSpan {
  start: number;
  end: number; // inclusive
  keyword: number;
}

const NOMINAL = new Set(['NN', 'NNS', 'NNP', 'NNPS', 'PRP']);
const CLAUSE_KEYWORDS = new Set(['when', 'if']);

function isNominal(tok: TaggedToken): boolean {
  return NOMINAL.has(tok.xpos) || tok.upos === 'NOUN' || tok.upos === 'PROPN';
}

function isVerbal(tok: TaggedToken): boolean {
  return tok.xpos.startsWith('VB');
}

/** when/if clause spans: from the keyword to the token before the next
 * comma, or to the end of the sentence for trailing clauses. Coordinated
 * clauses ("when A or when B") stay in one span here and are split later. */
export function clauseSpans(tokens: TaggedToken[]): ClauseSpan[] {
  const spans: ClauseSpan[] = [];
  for (let i = 0; i < tokens.length; i++) {
    if (!CLAUSE_KEYWORDS.has(tokens[i].surface.toLowerCase())) continue;
    if (spans.length > 0 && i <= spans[spans.length - 1].end) continue;
    let end = tokens.length - 1;
    for (let j = i + 1; j < tokens.length; j++) {
      if (tokens[j].xpos === ',') {
        end = j - 1;
        break;
      }
    }
    while (end > i && tokens[end].upos === 'PUNCT') end--;
    if (end > i) {
      spans.push({ start: i, end, keyword: i });
    }
  }
  return spans;
}

/** Split one clause span at coordinated keywords: "when A or when B"
 * becomes two parts, each keeping its own keyword. */
function splitCoordinated(tokens: TaggedToken[], span: ClauseSpan):
    { parts: ClauseSpan[]; ccs: number[] } {
  const parts: ClauseSpan[] = [];
  const ccs: number[] = [];
  let start = span.start;
  for (let i = span.start + 1; i <= span.end; i++) {
    if (tokens[i].xpos === 'CC' && i + 1 <= span.end
        && CLAUSE_KEYWORDS.has(tokens[i + 1].surface.toLowerCase())) {
      parts.push({ start, end: i - 1, keyword: start });
      ccs.push(i);
      start = i + 1;
    }
  }
  parts.push({ start, end: span.end, keyword: start });
  return { parts, ccs };
}

class TreeBuilder {
  private heads: Map<number, { head: number; relation: string }> = new Map();

  constructor(private tokens: TaggedToken[]) {}

  attach(dependent: number, head: number, relation: string): void {
    if (!this.heads.has(dependent)) {
      this.heads.set(dependent, { head, relation });
    }
  }

  arcs(root: number): Arc[] {
    const arcs: Arc[] = [{ head: 0, dependent: root + 1, relation: 'root' }];
    for (let i = 0; i < this.tokens.length; i++) {
      if (i === root) continue;
      const entry = this.heads.get(i);
      if (entry) {
        arcs.push({ head: entry.head + 1, dependent: i + 1, relation: entry.relation });
      } else if (this.tokens[i].upos === 'PUNCT') {
        arcs.push({ head: root + 1, dependent: i + 1, relation: 'punct' });
      } else {
        arcs.push({ head: root + 1, dependent: i + 1, relation: 'dep' });
      }
    }
    arcs.sort((a, b) => a.dependent - b.dependent);
    return arcs;
  }
}

/** Attach a noun phrase spanning [start..end]; returns the head index or
 * null. Determiners, numbers, adjectives and compound nouns hang off the
 * head; a coordination between premodifiers hangs off the first one
 * ("one or multiple UAVs"); an adverb before a number modifies the number
 * ("only one instance"). */
function attachNounPhrase(b: TreeBuilder, tokens: TaggedToken[],
                          start: number, end: number): number | null {
  let head = -1;
  for (let i = end; i >= start; i--) {
    if (isNominal(tokens[i])) {
      head = i;
      break;
    }
  }
  if (head < 0) {
    for (let i = end; i >= start; i--) {
      if (tokens[i].xpos === 'CD') {
        head = i;
        break;
      }
    }
  }
  if (head < 0) return null;

  let firstMod = -1;
  for (let i = start; i < head; i++) {
    const tok = tokens[i];
    if (tok.xpos === 'DT') {
      b.attach(i, head, 'det');
    } else if (tok.xpos === 'PRP$' || tok.surface.endsWith("'s")) {
      b.attach(i, head, 'nmod:poss');
    } else if (tok.xpos === 'RB') {
      const next = i + 1 <= head ? i + 1 : head;
      b.attach(i, tokens[next].xpos === 'CD' ? next : head, 'advmod');
    } else if (tok.xpos === 'CD') {
      b.attach(i, head, 'nummod');
      if (firstMod < 0) firstMod = i;
    } else if (tok.xpos === 'JJ' || tok.xpos === 'VBN') {
      if (firstMod >= 0 && i > 0 && tokens[i - 1].xpos === 'CC') {
        b.attach(i, firstMod, `conj:${tokens[i - 1].lemma}`);
      } else {
        b.attach(i, head, 'amod');
        if (firstMod < 0) firstMod = i;
      }
    } else if (tok.xpos === 'CC') {
      b.attach(i, firstMod >= 0 ? firstMod : head, 'cc');
    } else if (isNominal(tok)) {
      b.attach(i, head, 'compound');
    }
  }
  return head;
}

/** End of the noun phrase starting at `start` (inclusive, bounded). */
function nounPhraseEnd(tokens: TaggedToken[], start: number, limit: number): number {
  let end = start;
  for (let i = start; i <= limit; i++) {
    const tok = tokens[i];
    if (tok.xpos === 'DT' || tok.xpos === 'CD' || tok.xpos === 'JJ'
        || tok.xpos === 'PRP$' || isNominal(tok) || tok.surface.endsWith("'s")) {
      end = i;
    } else if (tok.xpos === 'CC' && i > start) {
      const next = tokens[i + 1];
      if (next !== undefined && i + 1 <= limit
          && (next.xpos === 'CD' || next.xpos === 'JJ' || isNominal(next))) {
        continue; // coordination inside the phrase
      }
      break;
    } else {
      break;
    }
  }
  return end;
}

interface ClauseParse {
  root: number;
  passive: boolean;
}

/** Parse one clause (main or subordinate) inside [start..end]. */
function parseClause(b: TreeBuilder, tokens: TaggedToken[],
                     start: number, end: number): ClauseParse {
  let modal = -1;
  for (let i = start; i <= end; i++) {
    if (tokens[i].xpos === 'MD') {
      modal = i;
      break;
    }
  }

  let pred = -1;
  let passive = false;
  let copula = -1;
  for (let i = (modal >= 0 ? modal + 1 : start); i <= end; i++) {
    const tok = tokens[i];
    if (tok.xpos === 'RB' || (tok.upos === 'PART' && tok.lemma !== 'to')) continue;
    if (tok.lemma === 'be') {
      const next = nextWord(tokens, i, end);
      if (next >= 0 && tokens[next].xpos === 'VBN') {
        pred = next;
        passive = true;
        b.attach(i, pred, 'auxpass');
      } else if (next >= 0 && tokens[next].upos === 'ADJ') {
        pred = next;
        copula = i;
        b.attach(i, pred, 'cop');
      } else {
        pred = i;
      }
      break;
    }
    if (isVerbal(tok) && tok.xpos !== 'MD') {
      pred = i;
      break;
    }
  }
  if (pred < 0) {
    throw new AdapterError('no predicate found in clause');
  }
  if (modal >= 0) {
    b.attach(modal, pred, 'aux');
  }
  for (let i = (modal >= 0 ? modal + 1 : start); i < pred; i++) {
    if (tokens[i].lemma === 'not' || tokens[i].lemma === 'never') {
      b.attach(i, pred, 'neg');
    } else if (tokens[i].xpos === 'RB') {
      b.attach(i, pred, 'advmod');
    }
  }

  // capability adjective: "be able to V" / "be capable of V"
  let argsFrom = pred + 1;
  let argsVerb = pred;
  if (copula >= 0) {
    const marker = nextWord(tokens, pred, end);
    if (marker >= 0 && ((tokens[marker].upos === 'PART' && tokens[marker].lemma === 'to')
                        || (tokens[marker].xpos === 'IN' && tokens[marker].lemma === 'of'))) {
      const verb = nextWord(tokens, marker, end);
      if (verb >= 0 && isVerbal(tokens[verb])) {
        b.attach(marker, verb, 'mark');
        b.attach(verb, pred, 'xcomp');
        argsVerb = verb;
        argsFrom = verb + 1;
      }
    }
  }

  const subjEnd = (modal >= 0 ? modal : (copula >= 0 ? copula : pred)) - 1;
  if (subjEnd >= start) {
    attachSubject(b, tokens, start, subjEnd, pred, passive);
  }

  parseArguments(b, tokens, argsVerb, argsFrom, end);
  return { root: pred, passive };
}

function attachSubject(b: TreeBuilder, tokens: TaggedToken[], start: number,
                       end: number, root: number, passive: boolean): void {
  // the subject phrase may carry an of-phrase: "one instance of each drone"
  let coreEnd = end;
  let ofStart = -1;
  for (let i = start; i <= end; i++) {
    if (tokens[i].xpos === 'IN') {
      ofStart = i;
      coreEnd = i - 1;
      break;
    }
  }
  const head = attachNounPhrase(b, tokens, start, coreEnd);
  if (head === null) return;
  b.attach(head, root, passive ? 'nsubjpass' : 'nsubj');
  if (ofStart >= 0 && ofStart < end) {
    const innerHead = attachNounPhrase(b, tokens, ofStart + 1, end);
    if (innerHead !== null) {
      b.attach(ofStart, innerHead, 'case');
      b.attach(innerHead, head, `nmod:${tokens[ofStart].lemma}`);
    }
  }
}

/** Arguments to the right of a verb: objects, infinitives, prepositional
 * phrases, adverbs, coordinated verbs, that-clauses.
 *
 * Coordination policy: a bare verb sharing the upcoming object keeps the
 * arguments on the first conjunct ("calculate and broadcast the limit");
 * a conjunct with its own auxiliaries or following an already-consumed
 * object takes its own arguments ("land and shall notify the operator"). */
function parseArguments(b: TreeBuilder, tokens: TaggedToken[], verb: number,
                        start: number, end: number): void {
  let attach = verb;
  let hasObject = false;
  let i = start;
  while (i <= end) {
    const tok = tokens[i];
    if (tok.upos === 'PUNCT') {
      i++;
      continue;
    }
    if (tok.upos === 'SCONJ' && (tok.lemma === 'that' || tok.lemma === 'whether')) {
      const inner = parseClause(b, tokens, i + 1, end);
      b.attach(i, inner.root, 'mark');
      b.attach(inner.root, attach, 'ccomp');
      return;
    }
    if (tok.upos === 'PART' && tok.lemma === 'to'
        && i + 1 <= end && isVerbal(tokens[i + 1])) {
      b.attach(i, i + 1, 'mark');
      b.attach(i + 1, attach, 'xcomp');
      attach = i + 1;
      hasObject = false;
      i += 2;
      continue;
    }
    if (tok.xpos === 'IN' || (tok.upos === 'PART' && tok.lemma === 'to')) {
      const npStart = i + 1;
      const npEnd = npStart <= end ? nounPhraseEnd(tokens, npStart, end) : -1;
      const head = npEnd >= npStart ? attachNounPhrase(b, tokens, npStart, npEnd) : null;
      if (head !== null) {
        b.attach(i, head, 'case');
        b.attach(head, attach, `nmod:${tok.lemma}`);
        i = npEnd + 1;
        continue;
      }
      i++;
      continue;
    }
    if (tok.xpos === 'CC') {
      const verbIdx = findNextVerb(tokens, i + 1, end);
      if (verbIdx >= 0) {
        b.attach(i, verb, 'cc');
        b.attach(verbIdx, verb, `conj:${tok.lemma}`);
        let ownAux = false;
        for (let j = i + 1; j < verbIdx; j++) {
          if (tokens[j].xpos === 'MD') {
            b.attach(j, verbIdx, 'aux');
            ownAux = true;
          } else if (tokens[j].lemma === 'not') {
            b.attach(j, verbIdx, 'neg');
          } else if (tokens[j].xpos === 'RB') {
            b.attach(j, verbIdx, 'advmod');
          }
        }
        if (ownAux || hasObject) {
          attach = verbIdx;
          hasObject = false;
        }
        i = verbIdx + 1;
        continue;
      }
      i++;
      continue;
    }
    if (tok.xpos === 'RB') {
      b.attach(i, attach, 'advmod');
      i++;
      continue;
    }
    if (isNominal(tok) || tok.xpos === 'DT' || tok.xpos === 'JJ' || tok.xpos === 'CD') {
      const npEnd = nounPhraseEnd(tokens, i, end);
      const head = attachNounPhrase(b, tokens, i, npEnd);
      if (head !== null) {
        b.attach(head, attach, hasObject ? 'dep' : 'dobj');
        hasObject = true;
        i = npEnd + 1;
        continue;
      }
    }
    i++;
  }
}

function nextWord(tokens: TaggedToken[], from: number, end: number): number {
  for (let i = from + 1; i <= end; i++) {
    if (tokens[i].upos !== 'PUNCT') return i;
  }
  return -1;
}

function findNextVerb(tokens: TaggedToken[], from: number, end: number): number {
  for (let i = from; i <= end; i++) {
    if (isVerbal(tokens[i]) && tokens[i].xpos !== 'MD') return i;
    if (isNominal(tokens[i]) || tokens[i].xpos === 'IN' || tokens[i].xpos === 'DT') return -1;
  }
  return -1;
}

export interface BuiltinParse {
  sentence: ParsedSentence;
  /** token ranges (0-based, keyword excluded) of each conditional clause,
   * for sub-block emission */
  clauses: { keyword: number; start: number; end: number }[];
}

function toTokens(tokens: TaggedToken[]): Token[] {
  return tokens.map((tok, i) => ({
    index: i + 1, surface: tok.surface, lemma: tok.lemma,
    upos: tok.upos, xpos: tok.xpos, spaceAfter: tok.spaceAfter,
  }));
}

/** Parse a requirement sentence with the builtin grammar. Throws
 * AdapterError when no predicate can be located. */
export function parseSentence(reqId: string, text: string): BuiltinParse {
  const raw = tokenize(text);
  if (raw.length === 0) {
    throw new AdapterError('empty sentence');
  }
  const tokens = tag(raw);
  const spans = clauseSpans(tokens);

  const covered = new Set<number>();
  for (const span of spans) {
    for (let i = span.start; i <= span.end; i++) covered.add(i);
  }
  let mainStart = 0;
  while (mainStart < tokens.length
         && (covered.has(mainStart) || tokens[mainStart].upos === 'PUNCT')) {
    mainStart++;
  }
  let mainEnd = tokens.length - 1;
  while (mainEnd > mainStart
         && (covered.has(mainEnd) || tokens[mainEnd].upos === 'PUNCT')) {
    mainEnd--;
  }
  if (mainStart >= tokens.length) {
    throw new AdapterError('sentence has no main clause');
  }

  const b = new TreeBuilder(tokens);
  const main = parseClause(b, tokens, mainStart, mainEnd);

  const clauseParts: { keyword: number; start: number; end: number }[] = [];
  for (const span of spans) {
    const { parts, ccs } = splitCoordinated(tokens, span);
    let firstRoot = -1;
    for (let k = 0; k < parts.length; k++) {
      const part = parts[k];
      const clause = parseClause(b, tokens, part.keyword + 1, part.end);
      b.attach(part.keyword, clause.root, 'mark');
      if (k === 0) {
        b.attach(clause.root, main.root, 'advcl');
        firstRoot = clause.root;
      } else {
        b.attach(clause.root, firstRoot, `conj:${tokens[ccs[k - 1]].lemma}`);
      }
      clauseParts.push({ keyword: part.keyword, start: part.keyword + 1, end: part.end });
    }
    for (const cc of ccs) {
      b.attach(cc, firstRoot, 'cc');
    }
  }

  return {
    sentence: { reqId, text, tokens: toTokens(tokens), arcs: b.arcs(main.root) },
    clauses: clauseParts,
  };
}

/** Parse a clause extracted from a sentence as a standalone sentence (the
 * event sub-block contract). */
export function parseStandaloneClause(reqId: string, text: string): ParsedSentence {
  const raw = tokenize(text);
  if (raw.length === 0) {
    throw new AdapterError('empty clause');
  }
  const tokens = tag(raw);
  const b = new TreeBuilder(tokens);
  const clause = parseClause(b, tokens, 0, tokens.length - 1);
  return { reqId, text, tokens: toTokens(tokens), arcs: b.arcs(clause.root) };
}
