import { readFileSync } from 'node:fs';
import { AdapterError } from './types.js';

/** Translation of UD v2 labels into the rule vocabulary the downstream
 * pipeline consumes. Applied to corenlp-engine output; the builtin engine
 * emits the target vocabulary directly. */
export const DEFAULT_RELATION_MAP: Record<string, string> = {
  obj: 'dobj',
  obl: 'nmod',
  'obl:tmod': 'nmod:tmod',
  'obl:npmod': 'nmod:npmod',
  'obl:agent': 'nmod:agent',
  'nsubj:pass': 'nsubjpass',
  'csubj:pass': 'csubjpass',
  'aux:pass': 'auxpass',
  flat: 'compound',
  'flat:name': 'compound',
  fixed: 'mwe',
  'compound:prt': 'compound',
  'cc:preconj': 'cc',
};

export function loadRelationMap(path: string): Record<string, string> {
  const mapping: Record<string, string> = {};
  const text = readFileSync(path, 'utf-8');
  text.split('\n').forEach((raw, lineIdx) => {
    const line = raw.split('#', 1)[0].trim();
    if (!line) return;
    const eq = line.indexOf('=');
    if (eq < 0) {
      throw new AdapterError(`relation map line ${lineIdx + 1}: expected 'from=to', got '${line}'`);
    }
    const from = line.slice(0, eq).trim();
    const to = line.slice(eq + 1).trim();
    if (!from || !to) {
      throw new AdapterError(`relation map line ${lineIdx + 1}: empty label`);
    }
    mapping[from] = to;
  });
  return mapping;
}

export function mapRelation(label: string, mapping: Record<string, string>): string {
  if (mapping[label] !== undefined) return mapping[label];
  const colon = label.indexOf(':');
  if (colon > 0) {
    const base = label.slice(0, colon);
    if (mapping[base] !== undefined) {
      return `${mapping[base]}${label.slice(colon)}`;
    }
  }
  return label;
}
