#!/usr/bin/env node
import { parseFile, Engine } from './adapter.js';
import { loadRelationMap, DEFAULT_RELATION_MAP } from './relmap.js';
import { corenlpAvailable } from './corenlp.js';
import { AdapterError } from './types.js';

const USAGE = `usage: req-parse --input <txt> --output <conllu> [options]

Parse raw shall-style requirements (one "<id><TAB><sentence>" per line)
into the CoNLL-U contract of the conflict-detection pipeline.

options:
  --input <file>          requirement text file (required)
  --output <file>         CoNLL-U file to write (required)
  --relation-map <file>   extra label translations, one from=to per line
  --engine <name>         builtin | corenlp      (default: builtin)
  --corenlp-url <url>     CoreNLP server          (default: $CORENLP_URL
                          or http://localhost:9000)
`;

interface CliArgs {
  input: string;
  output: string;
  relationMap?: string;
  engine: Engine;
  corenlpUrl?: string;
}

function parseArgs(argv: string[]): CliArgs {
  const args: Partial<CliArgs> = { engine: 'builtin' };
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    const value = () => {
      i += 1;
      if (i >= argv.length) throw new AdapterError(`${flag} needs a value`);
      return argv[i];
    };
    switch (flag) {
      case '--input': args.input = value(); break;
      case '--output': args.output = value(); break;
      case '--relation-map': args.relationMap = value(); break;
      case '--engine': {
        const engine = value();
        if (engine !== 'builtin' && engine !== 'corenlp') {
          throw new AdapterError(`unknown engine '${engine}' (builtin or corenlp)`);
        }
        args.engine = engine;
        break;
      }
      case '--corenlp-url': args.corenlpUrl = value(); break;
      case '--help': case '-h':
        process.stdout.write(USAGE);
        process.exit(0);
        break;
      default:
        throw new AdapterError(`unknown option '${flag}'`);
    }
  }
  if (args.input === undefined || args.output === undefined) {
    throw new AdapterError('--input and --output are required');
  }
  return args as CliArgs;
}

export async function main(argv: string[]): Promise<number> {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    process.stderr.write(`error: ${err instanceof Error ? err.message : err}\n\n${USAGE}`);
    return 2;
  }
  try {
    const relationMap = args.relationMap !== undefined
      ? { ...DEFAULT_RELATION_MAP, ...loadRelationMap(args.relationMap) }
      : DEFAULT_RELATION_MAP;
    if (args.engine === 'corenlp') {
      const url = args.corenlpUrl ?? process.env.CORENLP_URL ?? 'http://localhost:9000';
      if (!(await corenlpAvailable(url))) {
        process.stderr.write(
          `error: no CoreNLP server at ${url}.\n` +
          'Start one with:\n' +
          '  java -mx4g -cp "*" edu.stanford.nlp.pipeline.StanfordCoreNLPServer -port 9000\n' +
          'then pass --corenlp-url (or set CORENLP_URL), or use --engine builtin.\n');
        return 2;
      }
    }
    const report = await parseFile(args.input, args.output, {
      engine: args.engine,
      corenlpUrl: args.corenlpUrl,
      relationMap,
    });
    process.stdout.write(`parsed ${report.parsed.length} requirements -> ${args.output}\n`);
    for (const skip of report.skipped) {
      process.stdout.write(`skipped ${skip.id}: ${skip.reason}\n`);
    }
    for (const warning of report.warnings) {
      process.stdout.write(`warning: ${warning}\n`);
    }
    return 0;
  } catch (err) {
    process.stderr.write(`error: ${err instanceof Error ? err.message : err}\n`);
    return 2;
  }
}

const invokedDirectly = process.argv[1] !== undefined
  && import.meta.url.endsWith(process.argv[1].split('/').pop() ?? '');
if (invokedDirectly) {
  main(process.argv.slice(2)).then((code) => process.exit(code));
}
