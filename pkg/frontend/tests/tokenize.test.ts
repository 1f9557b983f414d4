import { describe, expect, it } from 'vitest';
import { tokenize } from '../src/tokenize.js';

describe('tokenize', () => {
  it('splits words and trailing punctuation', () => {
    const tokens = tokenize('The UAV shall land.');
    expect(tokens.map((t) => t.surface)).toEqual(['The', 'UAV', 'shall', 'land', '.']);
  });

  it('records spacing so the text reconstructs', () => {
    const text = 'When loaded, a map shall be displayed.';
    const tokens = tokenize(text);
    let rebuilt = '';
    for (const tok of tokens) {
      rebuilt += tok.surface + (tok.spaceAfter ? ' ' : '');
    }
    expect(rebuilt.trimEnd()).toBe(text);
    const comma = tokens.find((t) => t.surface === ',');
    const loaded = tokens.find((t) => t.surface === 'loaded');
    expect(loaded?.spaceAfter).toBe(false);
    expect(comma?.spaceAfter).toBe(true);
  });

  it('keeps possessives together', () => {
    const tokens = tokenize("the UAV's wings");
    expect(tokens.map((t) => t.surface)).toEqual(['the', "UAV's", 'wings']);
  });

  it('handles empty input', () => {
    expect(tokenize('')).toEqual([]);
  });
});
