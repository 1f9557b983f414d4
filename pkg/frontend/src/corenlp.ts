import { Arc, ParsedSentence, Token, AdapterError } from './types.js';
import { DEFAULT_RELATION_MAP, mapRelation } from './relmap.js';

/** CoreNLP-server engine: sends each sentence to a running CoreNLP HTTP
 * server (tokenize, pos, lemma, depparse) and converts the JSON response
 * into the adapter's sentence form, translating labels into the rule
 * vocabulary. Point it at a server with --corenlp-url or CORENLP_URL. */

interface CoreNlpToken {
  index: number;
  word: string;
  lemma: string;
  pos: string;
  after?: string;
}

interface CoreNlpDependency {
  dep: string;
  governor: number;
  dependent: number;
}

interface CoreNlpSentence {
  tokens: CoreNlpToken[];
  basicDependencies: CoreNlpDependency[];
}

const XPOS_TO_UPOS: [RegExp, string][] = [
  [/^NNP/, 'PROPN'], [/^NN/, 'NOUN'], [/^VB/, 'VERB'], [/^JJ/, 'ADJ'],
  [/^RB/, 'ADV'], [/^PRP\$/, 'PRON'], [/^PRP/, 'PRON'], [/^CD$/, 'NUM'],
  [/^DT$/, 'DET'], [/^MD$/, 'AUX'], [/^IN$/, 'ADP'], [/^TO$/, 'PART'],
  [/^CC$/, 'CCONJ'], [/^WRB$/, 'ADV'], [/^[.,;:]$/, 'PUNCT'],
];

function uposFor(xpos: string): string {
  for (const [re, upos] of XPOS_TO_UPOS) {
    if (re.test(xpos)) return upos;
  }
  return 'X';
}

export async function corenlpAvailable(url: string): Promise<boolean> {
  try {
    const response = await fetch(`${url}/ping`, { signal: AbortSignal.timeout(3000) });
    return response.ok;
  } catch {
    return false;
  }
}

export async function parseWithCorenlp(
  reqId: string, text: string, url: string,
  relationMap: Record<string, string> = DEFAULT_RELATION_MAP,
): Promise<ParsedSentence> {
  const properties = JSON.stringify({
    annotators: 'tokenize,ssplit,pos,lemma,depparse',
    'ssplit.isOneSentence': 'true',
    outputFormat: 'json',
  });
  let response: Response;
  try {
    response = await fetch(`${url}/?properties=${encodeURIComponent(properties)}`, {
      method: 'POST',
      body: text,
      headers: { 'Content-Type': 'text/plain; charset=utf-8' },
      signal: AbortSignal.timeout(30000),
    });
  } catch (err) {
    throw new AdapterError(
      `CoreNLP server unreachable at ${url}. Start one with:\n` +
      '  java -mx4g -cp "*" edu.stanford.nlp.pipeline.StanfordCoreNLPServer -port 9000\n' +
      'and pass --corenlp-url, or use --engine builtin.');
  }
  if (!response.ok) {
    throw new AdapterError(`CoreNLP server answered ${response.status} for ${reqId}`);
  }
  const payload = (await response.json()) as { sentences: CoreNlpSentence[] };
  if (!payload.sentences || payload.sentences.length === 0) {
    throw new AdapterError(`CoreNLP returned no parse for ${reqId}`);
  }
  const sentence = payload.sentences[0];

  const tokens: Token[] = sentence.tokens.map((tok) => ({
    index: tok.index,
    surface: tok.word,
    lemma: tok.lemma,
    upos: uposFor(tok.pos),
    xpos: tok.pos,
    spaceAfter: tok.after !== '',
  }));
  const arcs: Arc[] = sentence.basicDependencies.map((dep) => ({
    head: dep.governor,
    dependent: dep.dependent,
    relation: dep.dep === 'ROOT' ? 'root' : mapRelation(dep.dep, relationMap),
  }));
  arcs.sort((a, b) => a.dependent - b.dependent);
  return { reqId, text, tokens, arcs };
}
