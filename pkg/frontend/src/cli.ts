#!/usr/bin/env node
import { readFileSync, writeFileSync } from 'fs';
import yargs from 'yargs';
import { hideBin } from 'yargs/helpers';
import { renderSetup1, renderSetup2 } from './figures.js';
import { TableError } from './table.js';

interface Args {
  in: string;
  out: string;
}

function renderFile(kind: 'setup1' | 'setup2', args: Args): void {
  try {
    const text = readFileSync(args.in, 'utf-8');
    const svg = kind === 'setup1' ? renderSetup1(text) : renderSetup2(text);
    if (!args.out.endsWith('.svg')) {
      throw new TableError(`unsupported output extension for '${args.out}' (svg only)`);
    }
    writeFileSync(args.out, svg);
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    process.exit(1);
  }
}

const io = {
  in: { type: 'string' as const, demandOption: true, describe: 'input results table (csv)' },
  out: { type: 'string' as const, demandOption: true, describe: 'output image (.svg)' },
};

yargs(hideBin(process.argv))
  .scriptName('plot')
  .command('setup1', 'coverage vs relay count, one line per radius, max markers', io,
    (args) => renderFile('setup1', args as unknown as Args))
  .command('setup2', 'coverage vs radius, one line per platform/satellite variant', io,
    (args) => renderFile('setup2', args as unknown as Args))
  .demandCommand(1)
  .strict()
  .fail((msg, err) => {
    console.error(err instanceof TableError ? `error: ${err.message}` : msg ?? String(err));
    process.exit(1);
  })
  .parse();
