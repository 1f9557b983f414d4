import { ParsedSentence, AdapterError } from './types.js';

/** Render one sentence as a CoNLL-U block with req_id and text comments.
 * Validates the tree first so emitted files always load downstream. */
export function toConllu(sentence: ParsedSentence): string {
  validate(sentence);
  const lines = [`# req_id = ${sentence.reqId}`, `# text = ${sentence.text}`];
  const byDependent = new Map(sentence.arcs.map((a) => [a.dependent, a]));
  for (const tok of sentence.tokens) {
    const arc = byDependent.get(tok.index);
    if (!arc) {
      throw new AdapterError(`token ${tok.index} of ${sentence.reqId} has no head arc`);
    }
    const misc = tok.spaceAfter ? '_' : 'SpaceAfter=No';
    lines.push([
      String(tok.index), tok.surface, tok.lemma, tok.upos, tok.xpos, '_',
      String(arc.head), arc.relation, '_', misc,
    ].join('\t'));
  }
  return lines.join('\n') + '\n';
}

export function toConlluDocument(sentences: ParsedSentence[]): string {
  return sentences.map(toConllu).join('\n');
}

function validate(sentence: ParsedSentence): void {
  const n = sentence.tokens.length;
  if (n === 0) {
    throw new AdapterError(`sentence ${sentence.reqId} has no tokens`);
  }
  const indices = sentence.tokens.map((t) => t.index);
  for (let i = 0; i < n; i++) {
    if (indices[i] !== i + 1) {
      throw new AdapterError(`sentence ${sentence.reqId}: token indices are not 1..n`);
    }
  }
  const roots = sentence.arcs.filter((a) => a.head === 0);
  if (roots.length !== 1 || roots[0].relation !== 'root') {
    throw new AdapterError(`sentence ${sentence.reqId}: needs exactly one root arc`);
  }
  const seen = new Set<number>();
  for (const arc of sentence.arcs) {
    if (arc.dependent < 1 || arc.dependent > n) {
      throw new AdapterError(`sentence ${sentence.reqId}: arc dependent ${arc.dependent} out of range`);
    }
    if (arc.head < 0 || arc.head > n) {
      throw new AdapterError(`sentence ${sentence.reqId}: arc head ${arc.head} out of range`);
    }
    if (seen.has(arc.dependent)) {
      throw new AdapterError(`sentence ${sentence.reqId}: token ${arc.dependent} has two heads`);
    }
    seen.add(arc.dependent);
  }
  if (seen.size !== n) {
    throw new AdapterError(`sentence ${sentence.reqId}: some tokens have no head arc`);
  }
}

/** Rebuild the sentence text from surfaces and spacing; used to verify the
 * adapter never rewrites the input. */
export function reconstruct(sentence: ParsedSentence): string {
  let out = '';
  for (const tok of sentence.tokens) {
    out += tok.surface;
    if (tok.spaceAfter) out += ' ';
  }
  return out.trimEnd();
}
