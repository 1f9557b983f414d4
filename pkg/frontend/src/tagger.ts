import { RawToken } from './tokenize.js';

export interface TaggedToken {
  surface: string;
  lemma: string;
  upos: string;
  xpos: string;
  spaceAfter: boolean;
}

const DETERMINERS = new Set([
  'a', 'an', 'the', 'any', 'each', 'every', 'all', 'some', 'no', 'this',
  'these', 'those', 'another', 'both', 'either', 'neither', 'such',
]);
const MODALS = new Set(['shall', 'must', 'can', 'may', 'will', 'should', 'would', 'might']);
const BE_FORMS: Record<string, string> = {
  be: 'VB', am: 'VBP', is: 'VBZ', are: 'VBP', was: 'VBD', were: 'VBD',
  been: 'VBN', being: 'VBG',
};
const HAVE_FORMS: Record<string, string> = { have: 'VBP', has: 'VBZ', had: 'VBD', having: 'VBG' };
const PREPOSITIONS = new Set([
  'of', 'in', 'on', 'at', 'from', 'by', 'for', 'with', 'without', 'under',
  'over', 'after', 'before', 'during', 'within', 'until', 'per', 'into',
  'onto', 'about', 'through', 'across', 'against', 'between', 'via', 'upon',
]);
const CONJUNCTIONS = new Set(['and', 'or', 'but', 'nor']);
const PRONOUNS = new Set(['it', 'they', 'them', 'he', 'she', 'him', 'her', 'i', 'we', 'us', 'you']);
const POSS_PRONOUNS = new Set(['its', 'their', 'his', 'hers', 'our', 'your', 'my']);
const ADVERBS = new Set([
  'only', 'immediately', 'continuously', 'automatically', 'manually',
  'safely', 'again', 'also', 'always', 'then', 'once', 'twice', 'now',
  'first', 'together', 'simultaneously', 'periodically', 'correctly',
]);
const FREQ_ADVERBS = new Set(['hourly', 'daily', 'weekly', 'monthly', 'quarterly', 'yearly', 'annually']);
const ADJECTIVES = new Set([
  'active', 'inactive', 'onboard', 'next', 'new', 'old', 'total',
  'available', 'registered', 'multiple', 'able', 'capable', 'valid',
  'invalid', 'current', 'previous', 'single', 'full', 'empty', 'ready',
  'complete', 'red', 'green', 'manual', 'automatic', 'secure', 'remote',
  'emergency', 'maximum', 'minimum', 'latest', 'final',
]);
const NUMBER_WORDS = new Set([
  'one', 'two', 'three', 'four', 'five', 'six', 'seven', 'eight', 'nine',
  'ten', 'eleven', 'twelve', 'twenty', 'fifty', 'hundred', 'thousand',
]);

/** Base forms the position rules may inflect; wide net of verbs common in
 * system requirements. */
export const VERB_LEMMAS = new Set([
  'send', 'receive', 'display', 'show', 'land', 'execute', 'issue', 'allow',
  'delete', 'remove', 'follow', 'record', 'monitor', 'log', 'process',
  'validate', 'publish', 'review', 'collect', 'refresh', 'archive',
  'calculate', 'broadcast', 'apply', 'allocate', 'generate', 'forward',
  'route', 'dial', 'suspend', 'raise', 'close', 'release', 'verify',
  'transmit', 'notify', 'hover', 'carry', 'cancel', 'enable', 'disable',
  'sound', 'flash', 'open', 'rise', 'resume', 'load', 'schedule', 'create',
  'update', 'provide', 'store', 'perform', 'detect', 'report', 'ensure',
  'maintain', 'support', 'include', 'require', 'use', 'operate', 'control',
  'manage', 'activate', 'deactivate', 'start', 'stop', 'begin', 'end',
  'set', 'assign', 'track', 'approve', 'reject', 'accept', 'define',
  'configure', 'establish', 'initiate', 'terminate', 'trigger', 'navigate',
  'ascend', 'descend', 'hold', 'return', 'fly', 'fail', 'occur', 'happen',
  'run', 'reach', 'exceed', 'complete', 'respond', 'request', 'alert',
  'warn', 'halt', 'pause', 'continue', 'abort', 'arm', 'disarm', 'take',
  'deliver', 'upload', 'download', 'save', 'read', 'write', 'check',
  'confirm', 'grant', 'deny', 'lock', 'unlock', 'connect', 'disconnect',
  'register', 'synchronize', 'change',
]);

const IRREGULAR_PAST: Record<string, string> = {
  sent: 'send', held: 'hold', taken: 'take', took: 'take', read: 'read',
  written: 'write', wrote: 'write', ran: 'run', flew: 'fly', flown: 'fly',
  began: 'begin', begun: 'begin', set: 'set', met: 'meet', kept: 'keep',
  made: 'make', given: 'give', gave: 'give', found: 'find', lost: 'lose',
};

const NON_PLURAL = new Set(['status', 'data', 'media', 'analysis', 'basis', 'bus', 'gps', 'its']);

function singularize(word: string): string {
  const lower = word.toLowerCase();
  if (NON_PLURAL.has(lower) || lower.endsWith('ss') || !lower.endsWith('s')) {
    return word;
  }
  if (lower.endsWith('ies') && word.length > 4) {
    return word.slice(0, -3) + 'y';
  }
  if (/(ses|xes|zes|ches|shes)$/.test(lower)) {
    return word.slice(0, -2);
  }
  return word.slice(0, -1);
}

/** Lemma of an inflected verb form, or null if it cannot be one. */
export function verbLemma(word: string): string | null {
  const lower = word.toLowerCase();
  if (VERB_LEMMAS.has(lower)) return lower;
  if (IRREGULAR_PAST[lower]) return IRREGULAR_PAST[lower];
  if (lower.endsWith('ies') && VERB_LEMMAS.has(lower.slice(0, -3) + 'y')) {
    return lower.slice(0, -3) + 'y';
  }
  if (lower.endsWith('es') && VERB_LEMMAS.has(lower.slice(0, -2))) {
    return lower.slice(0, -2);
  }
  if (lower.endsWith('s') && VERB_LEMMAS.has(lower.slice(0, -1))) {
    return lower.slice(0, -1);
  }
  if (lower.endsWith('ed')) {
    if (VERB_LEMMAS.has(lower.slice(0, -1))) return lower.slice(0, -1); // executed -> execute
    if (VERB_LEMMAS.has(lower.slice(0, -2))) return lower.slice(0, -2); // loaded -> load
    const undoubled = lower.slice(0, -3); // transmitted -> transmit
    if (lower.length > 4 && lower[lower.length - 3] === lower[lower.length - 4]
        && VERB_LEMMAS.has(undoubled)) {
      return undoubled;
    }
  }
  if (lower.endsWith('ing')) {
    if (VERB_LEMMAS.has(lower.slice(0, -3))) return lower.slice(0, -3);
    if (VERB_LEMMAS.has(lower.slice(0, -3) + 'e')) return lower.slice(0, -3) + 'e';
  }
  return null;
}

function verbXpos(word: string): string {
  const lower = word.toLowerCase();
  if (lower.endsWith('ing')) return 'VBG';
  if (lower.endsWith('ed') || lower.endsWith('en') || IRREGULAR_PAST[lower]) return 'VBN';
  if (lower.endsWith('s')) return 'VBZ';
  return 'VB';
}

function isCapitalizedName(surface: string, index: number): boolean {
  if (!/^[A-Z]/.test(surface)) return false;
  if (/[A-Z]/.test(surface.slice(1))) return true; // mixed caps: VehicleCore
  return index > 0; // plain capital mid-sentence
}

/** Tag one sentence: closed-class lexicons first, then position rules for
 * verbs, then noun defaults. Pure and deterministic. */
export function tag(raw: RawToken[]): TaggedToken[] {
  const out: TaggedToken[] = raw.map((tok) => ({
    surface: tok.surface, lemma: tok.surface.toLowerCase(),
    upos: '', xpos: '', spaceAfter: tok.spaceAfter,
  }));

  for (let i = 0; i < out.length; i++) {
    const tok = out[i];
    const lower = tok.surface.toLowerCase();
    if (/^[.,;:!?()]$/.test(tok.surface)) {
      tok.upos = 'PUNCT';
      tok.xpos = tok.surface === '.' ? '.' : tok.surface;
      tok.lemma = tok.surface;
    } else if (DETERMINERS.has(lower)) {
      tok.upos = 'DET';
      tok.xpos = 'DT';
      if (lower === 'an') tok.lemma = 'a';
    } else if (MODALS.has(lower)) {
      tok.upos = 'AUX';
      tok.xpos = 'MD';
    } else if (BE_FORMS[lower]) {
      tok.upos = 'AUX';
      tok.xpos = BE_FORMS[lower];
      tok.lemma = 'be';
    } else if (HAVE_FORMS[lower]) {
      tok.upos = 'VERB';
      tok.xpos = HAVE_FORMS[lower];
      tok.lemma = 'have';
    } else if (lower === 'not' || lower === 'never') {
      tok.upos = 'PART';
      tok.xpos = 'RB';
    } else if (lower === 'to') {
      tok.upos = 'PART';
      tok.xpos = 'TO';
    } else if (lower === 'when') {
      tok.upos = 'ADV';
      tok.xpos = 'WRB';
    } else if (lower === 'if' || lower === 'that' || lower === 'whether') {
      tok.upos = 'SCONJ';
      tok.xpos = 'IN';
    } else if (PREPOSITIONS.has(lower)) {
      tok.upos = 'ADP';
      tok.xpos = 'IN';
    } else if (CONJUNCTIONS.has(lower)) {
      tok.upos = 'CCONJ';
      tok.xpos = 'CC';
    } else if (PRONOUNS.has(lower)) {
      tok.upos = 'PRON';
      tok.xpos = 'PRP';
    } else if (POSS_PRONOUNS.has(lower)) {
      tok.upos = 'PRON';
      tok.xpos = 'PRP$';
    } else if (/^\d+(\.\d+)?$/.test(lower) || NUMBER_WORDS.has(lower)) {
      tok.upos = 'NUM';
      tok.xpos = 'CD';
    } else if (FREQ_ADVERBS.has(lower)) {
      // adjectival before a nominal ("daily report"), adverbial otherwise
      const next = out[i + 1];
      const nominalNext = next !== undefined && !/^[.,;:!?()]$/.test(next.surface)
        && !PREPOSITIONS.has(next.surface.toLowerCase())
        && !CONJUNCTIONS.has(next.surface.toLowerCase());
      tok.upos = nominalNext ? 'ADJ' : 'ADV';
      tok.xpos = nominalNext ? 'JJ' : 'RB';
    } else if (ADVERBS.has(lower) || (lower.endsWith('ly') && lower.length > 4)) {
      tok.upos = 'ADV';
      tok.xpos = 'RB';
    } else if (ADJECTIVES.has(lower)) {
      tok.upos = 'ADJ';
      tok.xpos = 'JJ';
    }
  }

  // position rules for verbs, then noun defaults, in one left-to-right pass
  // so each rule sees the final tag of the word before it
  for (let i = 0; i < out.length; i++) {
    const tok = out[i];
    if (tok.upos !== '') continue;
    const lower = tok.surface.toLowerCase();
    const prev = previousWord(out, i);
    const lemma = verbLemma(lower);
    const afterModal = prev !== null && (out[prev].xpos === 'MD' || out[prev].xpos === 'RB');
    const afterTo = prev !== null && out[prev].xpos === 'TO';
    const afterBe = prev !== null && out[prev].lemma === 'be';
    if ((afterModal || afterTo) && lemma !== null) {
      tok.upos = 'VERB';
      tok.xpos = 'VB';
      tok.lemma = lemma;
    } else if (afterBe && lemma !== null && /(?:ed|en)$/.test(lower)) {
      tok.upos = 'VERB';
      tok.xpos = 'VBN';
      tok.lemma = lemma;
    } else if (afterBe && lower.endsWith('ing') && lemma !== null) {
      tok.upos = 'VERB';
      tok.xpos = 'VBG';
      tok.lemma = lemma;
    } else if (lemma !== null && /(?:s|es)$/.test(lower) && prev !== null
               && ['NN', 'NNS', 'NNP', 'NNPS', 'PRP'].includes(out[prev].xpos)) {
      // finite verb after its subject: "the alarm sounds"
      tok.upos = 'VERB';
      tok.xpos = 'VBZ';
      tok.lemma = lemma;
    } else if (lemma !== null && lemma === lower && prev !== null
               && out[prev].xpos === 'CC') {
      // bare coordinated verb: "calculate and broadcast"
      tok.upos = 'VERB';
      tok.xpos = 'VB';
      tok.lemma = lemma;
    } else {
      const surface = tok.surface;
      const name = isCapitalizedName(surface, i);
      const singular = singularize(surface);
      const plural = singular !== surface;
      tok.upos = name ? 'PROPN' : 'NOUN';
      tok.xpos = (name ? 'NNP' : 'NN') + (plural ? 'S' : '');
      tok.lemma = name ? singular : singular.toLowerCase();
    }
  }
  return out;
}

function previousWord(tokens: TaggedToken[], i: number): number | null {
  for (let j = i - 1; j >= 0; j--) {
    if (tokens[j].upos !== 'PUNCT') return j;
  }
  return null;
}
