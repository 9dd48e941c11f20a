import { isRed } from "./cards.js";
import { DECK_SIZE, WINDOW_LENGTH } from "./schema.js";
import type { CardCode, Color, CribData } from "./types.js";

export interface Drill {
  position: number;
  colors: Color[]; // what the five spectators would signal
  truth: CardCode[]; // the five cards actually held
}

/** mulberry32: tiny deterministic PRNG, good enough for picking cut positions. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/** The drill at a known cut position. */
export function drillAt(crib: CribData, position: number): Drill {
  const colors: Color[] = [];
  const truth: CardCode[] = [];
  for (let j = 0; j < WINDOW_LENGTH; j++) {
    const i = (position + j) % DECK_SIZE;
    colors.push(crib.sequence[i] === "0" ? "R" : "B");
    truth.push(crib.order[i]);
  }
  return { position, colors, truth };
}

/** A seeded drill: the same seed always picks the same cut. */
export function makeDrill(crib: CribData, seed: number): Drill {
  const position = Math.floor(mulberry32(seed)() * DECK_SIZE);
  return drillAt(crib, position);
}

/** Card identity only; presentation and timing are not graded. */
export function gradeDrill(drill: Drill, revealed: CardCode[]): boolean {
  return (
    revealed.length === drill.truth.length &&
    revealed.every((code, i) => code === drill.truth[i])
  );
}

/** Sanity helper for the drill banner: colors as the spectators show them. */
export function colorsOf(cards: CardCode[]): Color[] {
  return cards.map((c) => (isRed(c) ? "R" : "B"));
}
