import { readFileSync, writeFileSync } from 'node:fs';
import { parseSentence, parseStandaloneClause, clauseSpans } from './parse.js';
import { parseWithCorenlp } from './corenlp.js';
import { toConllu } from './conllu.js';
import { DEFAULT_RELATION_MAP } from './relmap.js';
import { ParsedSentence, AdapterError } from './types.js';

export type Engine = 'builtin' | 'corenlp';

export interface AdapterOptions {
  engine?: Engine;
  corenlpUrl?: string;
  relationMap?: Record<string, string>;
}

export interface SkippedEntry {
  id: string;
  reason: string;
}

export interface ParseReport {
  parsed: string[];
  skipped: SkippedEntry[];
  warnings: string[];
}

export interface RequirementLine {
  id: string;
  sentence: string;
}

/** Read a requirement text file: one `<id><TAB><sentence>` per line, UTF-8,
 * blank lines and # comments ignored. Ids must be non-empty and unique. */
export function readRequirementLines(path: string): RequirementLine[] {
  const text = readFileSync(path, 'utf-8');
  const lines: RequirementLine[] = [];
  const seen = new Set<string>();
  text.split('\n').forEach((raw, idx) => {
    const line = raw.replace(/\r$/, '');
    if (!line.trim() || line.startsWith('#')) return;
    const tab = line.indexOf('\t');
    if (tab < 0) {
      throw new AdapterError(`line ${idx + 1}: expected '<id><TAB><sentence>'`);
    }
    const id = line.slice(0, tab).trim();
    const sentence = line.slice(tab + 1).trim();
    if (!id) {
      throw new AdapterError(`line ${idx + 1}: empty requirement id`);
    }
    if (seen.has(id)) {
      throw new AdapterError(`line ${idx + 1}: duplicate requirement id '${id}'`);
    }
    if (!sentence) {
      throw new AdapterError(`line ${idx + 1}: requirement '${id}' has no sentence`);
    }
    seen.add(id);
    lines.push({ id, sentence });
  });
  return lines;
}

function sliceText(sentence: ParsedSentence, start: number, end: number): string {
  let out = '';
  for (let i = start; i <= end; i++) {
    const tok = sentence.tokens[i];
    out += tok.surface;
    if (tok.spaceAfter && i < end) out += ' ';
  }
  return out.trim();
}

interface ParsedRequirement {
  main: ParsedSentence;
  /** standalone parses of when/if clauses, in textual order */
  events: ParsedSentence[];
  warnings: string[];
}

async function parseOne(id: string, sentence: string,
                        options: Required<AdapterOptions>): Promise<ParsedRequirement> {
  const warnings: string[] = [];
  if (options.engine === 'builtin') {
    const { sentence: main, clauses } = parseSentence(id, sentence);
    const events: ParsedSentence[] = [];
    clauses.forEach((clause, k) => {
      const text = sliceText(main, clause.start, clause.end);
      try {
        events.push(parseStandaloneClause(`${id}#event${k + 1}`, text));
      } catch (err) {
        warnings.push(`${id}: clause ${k + 1} not parseable standalone (${String(err)})`);
      }
    });
    return { main, events, warnings };
  }

  const main = await parseWithCorenlp(id, sentence, options.corenlpUrl, options.relationMap);
  const spans = clauseSpans(main.tokens.map((t) => ({
    surface: t.surface, lemma: t.lemma, upos: t.upos, xpos: t.xpos,
    spaceAfter: t.spaceAfter,
  })));
  const events: ParsedSentence[] = [];
  for (let k = 0; k < spans.length; k++) {
    const span = spans[k];
    const text = sliceText(main, span.start + 1, span.end);
    try {
      events.push(await parseWithCorenlp(`${id}#event${k + 1}`, text,
                                         options.corenlpUrl, options.relationMap));
    } catch (err) {
      warnings.push(`${id}: clause ${k + 1} not parseable standalone (${String(err)})`);
    }
  }
  return { main, events, warnings };
}

/** Parse a requirement text file into the CoNLL-U contract: one block per
 * requirement plus one `<id>#event<k>` sub-block per conditional clause.
 * Sentences the engine cannot parse are skipped with a warning; the
 * sentences themselves are never rewritten. */
export async function parseFile(inputPath: string, outputPath: string,
                                options: AdapterOptions = {}): Promise<ParseReport> {
  const resolved: Required<AdapterOptions> = {
    engine: options.engine ?? 'builtin',
    corenlpUrl: options.corenlpUrl ?? process.env.CORENLP_URL ?? 'http://localhost:9000',
    relationMap: options.relationMap ?? DEFAULT_RELATION_MAP,
  };
  const lines = readRequirementLines(inputPath);
  const report: ParseReport = { parsed: [], skipped: [], warnings: [] };
  const blocks: string[] = [];

  for (const { id, sentence } of lines) {
    try {
      const parsed = await parseOne(id, sentence, resolved);
      blocks.push(toConllu(parsed.main));
      for (const event of parsed.events) {
        blocks.push(toConllu(event));
      }
      report.parsed.push(id);
      report.warnings.push(...parsed.warnings);
    } catch (err) {
      if (err instanceof AdapterError && /unreachable/.test(err.message)) {
        throw err; // parser unavailable is fatal, not a per-sentence skip
      }
      report.skipped.push({ id, reason: err instanceof Error ? err.message : String(err) });
    }
  }

  if (lines.length === 0) {
    report.warnings.push('input contained no requirement lines');
  }
  writeFileSync(outputPath, blocks.join('\n'), 'utf-8');
  return report;
}
