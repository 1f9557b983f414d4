export interface Token {
  /** 1-based position */
  index: number;
  surface: string;
  lemma: string;
  upos: string;
  xpos: string;
  spaceAfter: boolean;
}

export interface Arc {
  /** 0 = virtual root */
  head: number;
  dependent: number;
  relation: string;
}

export interface ParsedSentence {
  reqId: string;
  text: string;
  tokens: Token[];
  arcs: Arc[];
}

export class AdapterError extends Error {
  constructor(message: string) {
    super(message);
    this.name = 'AdapterError';
  }
}
