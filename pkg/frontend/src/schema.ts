import { isCardCode } from "./cards.js";
import type { CardCode, CribData } from "./types.js";

export const DECK_SIZE = 52;
export const WINDOW_LENGTH = 5;

export class CribSchemaError extends Error {}

function fail(message: string): never {
  throw new CribSchemaError(message);
}

/**
 * Parse and strictly validate a crib document. Any violation throws, so a
 * bad document can never be partially loaded: order must hold exactly 52
 * distinct cards, window keys must be 5-bit words, rows hold 1 or 2 cards,
 * and every card appears exactly once across the table.
 */
export function parseCrib(doc: unknown): CribData {
  if (typeof doc !== "object" || doc === null || Array.isArray(doc)) {
    fail("crib document must be a JSON object");
  }
  const record = doc as Record<string, unknown>;

  const name = record["name"];
  if (typeof name !== "string" || name.length === 0) {
    fail("crib 'name' must be a nonempty string");
  }

  const sequence = record["sequence"];
  if (typeof sequence !== "string" || !/^[01]+$/.test(sequence)) {
    fail("crib 'sequence' must be a string of 0/1 bits");
  }
  if (sequence.length !== DECK_SIZE) {
    fail(`crib 'sequence' must have ${DECK_SIZE} bits, got ${sequence.length}`);
  }

  const order = record["order"];
  if (!Array.isArray(order) || order.length !== DECK_SIZE) {
    fail(`crib 'order' must list exactly ${DECK_SIZE} cards`);
  }
  for (const code of order) {
    if (!isCardCode(code)) fail(`bad card code in 'order': ${JSON.stringify(code)}`);
  }
  if (new Set(order).size !== DECK_SIZE) {
    fail("crib 'order' contains duplicate cards");
  }

  const table = record["table"];
  if (typeof table !== "object" || table === null || Array.isArray(table)) {
    fail("crib 'table' must be an object");
  }
  const entries = Object.entries(table as Record<string, unknown>);
  if (entries.length === 0) fail("crib 'table' must not be empty");
  const seen = new Set<CardCode>();
  const parsedTable: Record<string, CardCode[]> = {};
  for (const [key, row] of entries) {
    if (key.length !== WINDOW_LENGTH || !/^[01]+$/.test(key)) {
      fail(`crib table key ${JSON.stringify(key)} is not a ${WINDOW_LENGTH}-bit word`);
    }
    if (!Array.isArray(row) || row.length < 1 || row.length > 2) {
      fail(`crib table row ${key} must hold 1 or 2 cards`);
    }
    for (const code of row) {
      if (!isCardCode(code)) fail(`bad card code in table row ${key}: ${JSON.stringify(code)}`);
      if (seen.has(code)) fail(`card ${code} appears twice in the crib table`);
      seen.add(code);
    }
    parsedTable[key] = [...(row as CardCode[])];
  }

  return {
    name,
    sequence,
    table: parsedTable,
    order: [...(order as CardCode[])],
  };
}
