import { mkdtempSync, readFileSync, writeFileSync } from 'node:fs';
import { tmpdir } from 'node:os';
import { join } from 'node:path';
import { describe, expect, it } from 'vitest';
import { parseFile, readRequirementLines } from '../src/adapter.js';
import { toConllu, reconstruct } from '../src/conllu.js';
import { parseSentence } from '../src/parse.js';
import { mapRelation, DEFAULT_RELATION_MAP, loadRelationMap } from '../src/relmap.js';
import { AdapterError } from '../src/types.js';

const FIXTURE = new URL('../fixtures/paper8.txt', import.meta.url).pathname;

function tmp(): string {
  return mkdtempSync(join(tmpdir(), 'req-parse-'));
}

describe('requirement text files', () => {
  it('reads id-tab-sentence lines', () => {
    const lines = readRequirementLines(FIXTURE);
    expect(lines).toHaveLength(8);
    expect(lines[0].id).toBe('RE1');
    expect(lines[4].sentence).toMatch(/^When a flight plan/);
  });

  it('rejects duplicate ids', () => {
    const dir = tmp();
    const path = join(dir, 'dup.txt');
    writeFileSync(path, 'R1\tThe UAV shall land.\nR1\tThe UAV shall hover.\n');
    expect(() => readRequirementLines(path)).toThrow(/duplicate/);
  });

  it('rejects lines without a tab', () => {
    const dir = tmp();
    const path = join(dir, 'bad.txt');
    writeFileSync(path, 'R1 The UAV shall land.\n');
    expect(() => readRequirementLines(path)).toThrow(AdapterError);
  });
});

describe('conllu rendering', () => {
  it('emits ten tab-separated columns per token', () => {
    const { sentence } = parseSentence('R1', 'The UAV shall land.');
    const block = toConllu(sentence);
    const rows = block.split('\n').filter((l) => l && !l.startsWith('#'));
    expect(rows).toHaveLength(5);
    for (const row of rows) {
      expect(row.split('\t')).toHaveLength(10);
    }
    expect(block).toContain('# req_id = R1');
    expect(block).toContain('# text = The UAV shall land.');
  });

  it('round-trips the sentence text through spacing', () => {
    const text = 'When a flight plan is executed, the VehicleCore shall send the next waypoint to the UAV.';
    const { sentence } = parseSentence('R1', text);
    expect(reconstruct(sentence)).toBe(text);
  });
});

describe('relation map', () => {
  it('maps labels and subtypes', () => {
    expect(mapRelation('obj', DEFAULT_RELATION_MAP)).toBe('dobj');
    expect(mapRelation('obl:tmod', DEFAULT_RELATION_MAP)).toBe('nmod:tmod');
    expect(mapRelation('obl:about', DEFAULT_RELATION_MAP)).toBe('nmod:about');
    expect(mapRelation('nsubj', DEFAULT_RELATION_MAP)).toBe('nsubj');
  });

  it('loads override files', () => {
    const dir = tmp();
    const path = join(dir, 'map.txt');
    writeFileSync(path, '# override\nfoo=bar\n');
    expect(loadRelationMap(path)).toEqual({ foo: 'bar' });
    writeFileSync(path, 'nonsense\n');
    expect(() => loadRelationMap(path)).toThrow(AdapterError);
  });
});

describe('parseFile', () => {
  it('writes one block per requirement plus event sub-blocks', async () => {
    const dir = tmp();
    const out = join(dir, 'out.conllu');
    const report = await parseFile(FIXTURE, out);
    expect(report.parsed).toHaveLength(8);
    expect(report.skipped).toHaveLength(0);
    const text = readFileSync(out, 'utf-8');
    const ids = [...text.matchAll(/^# req_id = (.+)$/gm)].map((m) => m[1]);
    expect(ids.filter((id) => !id.includes('#event'))).toEqual(
      ['RE1', 'RE2', 'RE3', 'RE4', 'RE5', 'RE6', 'RE7', 'RE8']);
    // one conditional clause each in RE2, RE5, RE6
    expect(ids.filter((id) => id.includes('#event'))).toEqual(
      ['RE2#event1', 'RE5#event1', 'RE6#event1']);
  });

  it('skips unparseable sentences with a warning entry', async () => {
    const dir = tmp();
    const input = join(dir, 'mixed.txt');
    writeFileSync(input,
      'R1\tThe UAV shall land.\nR2\tGreen red blue.\n');
    const out = join(dir, 'out.conllu');
    const report = await parseFile(input, out);
    expect(report.parsed).toEqual(['R1']);
    expect(report.skipped).toHaveLength(1);
    expect(report.skipped[0].id).toBe('R2');
    const text = readFileSync(out, 'utf-8');
    expect(text).toContain('# req_id = R1');
    expect(text).not.toContain('# req_id = R2');
  });

  it('writes an empty file with a warning for empty input', async () => {
    const dir = tmp();
    const input = join(dir, 'empty.txt');
    writeFileSync(input, '');
    const out = join(dir, 'out.conllu');
    const report = await parseFile(input, out);
    expect(report.parsed).toHaveLength(0);
    expect(report.warnings.some((w) => /no requirement lines/.test(w))).toBe(true);
    expect(readFileSync(out, 'utf-8')).toBe('');
  });

  it('keeps the original sentence text verbatim', async () => {
    const dir = tmp();
    const out = join(dir, 'out.conllu');
    await parseFile(FIXTURE, out);
    const text = readFileSync(out, 'utf-8');
    const lines = readRequirementLines(FIXTURE);
    for (const { sentence } of lines) {
      expect(text).toContain(`# text = ${sentence}`);
    }
  });
});
