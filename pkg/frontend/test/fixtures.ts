import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

const here = dirname(fileURLToPath(import.meta.url));

export const FRONTEND_ROOT = join(here, "..");
export const REPO_ROOT = join(FRONTEND_ROOT, "..");
export const PYTHON_SRC = join(REPO_ROOT, "src");

export function builtinCribDoc(): unknown {
  const raw = readFileSync(join(FRONTEND_ROOT, "public", "builtin-crib.json"), "utf8");
  return JSON.parse(raw);
}

/** Deep-ish clone good enough for JSON documents. */
export function cloneDoc<T>(doc: T): T {
  return JSON.parse(JSON.stringify(doc)) as T;
}
