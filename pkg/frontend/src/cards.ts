import type { CardCode } from "./types.js";

export const RANKS = ["A", "2", "3", "4", "5", "6", "7", "8", "9", "10", "J", "Q", "K"];
export const SUITS = ["H", "D", "C", "S"];

const SUIT_SYMBOLS: Record<string, string> = { H: "♥", D: "♦", C: "♣", S: "♠" };
const SUIT_WORDS: Record<string, string> = { H: "heart", D: "diamond", C: "club", S: "spade" };

export function isCardCode(code: unknown): code is CardCode {
  if (typeof code !== "string" || code.length < 2) return false;
  return RANKS.includes(code.slice(0, -1)) && SUITS.includes(code.slice(-1));
}

export function rankOf(code: CardCode): string {
  return code.slice(0, -1);
}

export function suitOf(code: CardCode): string {
  return code.slice(-1);
}

export function isRed(code: CardCode): boolean {
  const suit = suitOf(code);
  return suit === "H" || suit === "D";
}

export function suitSymbol(code: CardCode): string {
  return SUIT_SYMBOLS[suitOf(code)] ?? "?";
}

export function suitWord(code: CardCode): string {
  return SUIT_WORDS[suitOf(code)] ?? "?";
}

/** Pretty form for display: rank plus suit symbol, e.g. "9♦". */
export function pretty(code: CardCode): string {
  return rankOf(code) + suitSymbol(code);
}
