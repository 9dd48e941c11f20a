export type CardCode = string; // "AH", "10D", "KS"

export type Color = "R" | "B";

export interface CribData {
  name: string;
  sequence: string; // 52 characters of 0/1
  table: Record<string, CardCode[]>; // 5-bit window -> 1 or 2 cards
  order: CardCode[]; // the 52-card cyclic deck order
}

export type Phase = "empty" | "entering" | "questioning" | "revealed" | "impossible";

export interface SessionState {
  crib: CribData | null;
  signals: Color[];
  phase: Phase;
  candidates: CardCode[];
  question: string | null;
  firstCard: CardCode | null;
  reveal: CardCode[];
  error: string | null;
}
