export interface RawToken {
  surface: string;
  spaceAfter: boolean;
}

const TOKEN_RE = /[A-Za-z0-9]+(?:['-][A-Za-z0-9]+)*|[.,;:!?()]/g;

/** Split a sentence into word and punctuation tokens, recording whether a
 * space follows each token so the original text stays reconstructible. */
export function tokenize(text: string): RawToken[] {
  const tokens: RawToken[] = [];
  for (const match of text.matchAll(TOKEN_RE)) {
    const end = (match.index ?? 0) + match[0].length;
    tokens.push({ surface: match[0], spaceAfter: text[end] === ' ' });
  }
  if (tokens.length > 0) {
    tokens[tokens.length - 1].spaceAfter = false;
  }
  return tokens;
}
