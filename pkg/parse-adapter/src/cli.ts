#!/usr/bin/env node
/** CLI: parse-adapter --input X --output Y [--pipeline NAME] */

import * as fs from "fs";
import { BackendUnavailable, parseTextToConllu } from "./adapter";

interface Args {
  input?: string;
  output?: string;
  pipeline: string;
}

function parseArgs(argv: string[]): Args {
  const args: Args = { pipeline: "rules" };
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    switch (flag) {
      case "--input":
        args.input = argv[++i];
        break;
      case "--output":
        args.output = argv[++i];
        break;
      case "--pipeline":
        args.pipeline = argv[++i];
        break;
      case "--help":
      case "-h":
        console.log("usage: parse-adapter --input FILE --output FILE "
          + "[--pipeline NAME]");
        process.exit(0);
        break;
      default:
        console.error(`error: unknown argument '${flag}'`);
        process.exit(1);
    }
  }
  return args;
}

export function main(argv: string[]): number {
  const args = parseArgs(argv);
  if (!args.input || !args.output) {
    console.error("error: --input and --output are required");
    return 1;
  }
  let content: string;
  try {
    content = fs.readFileSync(args.input, "utf-8");
  } catch (err) {
    console.error(`error: cannot read ${args.input}: ${(err as Error).message}`);
    return 1;
  }
  let conllu: string;
  try {
    conllu = parseTextToConllu(content, args.pipeline);
  } catch (err) {
    if (err instanceof BackendUnavailable) {
      console.error(`error: BackendUnavailable: ${err.message}`);
      return 1;
    }
    console.error(`error: ${(err as Error).message}`);
    return 1;
  }
  try {
    fs.writeFileSync(args.output, conllu, "utf-8");
  } catch (err) {
    console.error(`error: cannot write ${args.output}: ${(err as Error).message}`);
    return 1;
  }
  return 0;
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
