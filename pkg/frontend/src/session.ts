import { rankOf, suitOf, suitWord } from "./cards.js";
import { CribSchemaError, DECK_SIZE, WINDOW_LENGTH, parseCrib } from "./schema.js";
import type { CardCode, Color, CribData, SessionState } from "./types.js";

export function initialState(): SessionState {
  return {
    crib: null,
    signals: [],
    phase: "empty",
    candidates: [],
    question: null,
    firstCard: null,
    reveal: [],
    error: null,
  };
}

/**
 * Load a crib document. On a schema violation the returned state carries the
 * error and no crib at all: a bad document never partially replaces a good
 * one mid-performance.
 */
export function loadCrib(state: SessionState, doc: unknown): SessionState {
  try {
    const crib = parseCrib(doc);
    return { ...initialState(), crib, phase: "entering" };
  } catch (err) {
    if (err instanceof CribSchemaError) {
      return { ...initialState(), error: err.message };
    }
    throw err;
  }
}

export function signalsToWindow(signals: Color[]): string {
  return signals.map((c) => (c === "B" ? "1" : "0")).join("");
}

/** The five cards held: the resolved card plus the next four in cyclic deck order. */
export function revealFrom(crib: CribData, firstCard: CardCode): CardCode[] {
  const i = crib.order.indexOf(firstCard);
  if (i < 0) throw new Error(`card ${firstCard} is not in the deck order`);
  const out: CardCode[] = [];
  for (let j = 0; j < WINDOW_LENGTH; j++) {
    out.push(crib.order[(i + j) % DECK_SIZE]);
  }
  return out;
}

/**
 * The scripted question for a two-candidate row, always about the first
 * (earlier-position) candidate: its suit when the suits differ, its rank
 * when they agree.
 */
export function questionFor(candidates: CardCode[]): string {
  const [first, second] = candidates;
  const attribute =
    suitOf(first) !== suitOf(second) ? suitWord(first) : `${rankOf(first)}`;
  return `I'm having trouble making it out... it's not a ${attribute}, is it?`;
}

function resolve(state: SessionState, firstCard: CardCode): SessionState {
  const crib = state.crib as CribData;
  return {
    ...state,
    phase: "revealed",
    firstCard,
    reveal: revealFrom(crib, firstCard),
  };
}

/** Record one spectator's color; the fifth signal triggers the lookup. */
export function enterSignal(state: SessionState, color: Color): SessionState {
  if (state.crib === null || state.phase !== "entering" || state.signals.length >= WINDOW_LENGTH) {
    return state;
  }
  const signals = [...state.signals, color];
  const next = { ...state, signals };
  if (signals.length < WINDOW_LENGTH) return next;

  const window = signalsToWindow(signals);
  const row = state.crib.table[window];
  if (row === undefined) {
    return {
      ...next,
      phase: "impossible",
      error: `impossible signal: window ${window} does not occur in this stack`,
    };
  }
  if (row.length === 1) {
    return resolve({ ...next, candidates: [...row], question: null }, row[0]);
  }
  return {
    ...next,
    phase: "questioning",
    candidates: [...row],
    question: questionFor(row),
  };
}

/** Remove the last entered signal (also backs out of a pending question). */
export function undoSignal(state: SessionState): SessionState {
  if (state.crib === null || state.signals.length === 0) return state;
  if (state.phase === "revealed") return state; // reset instead after a reveal
  return {
    ...state,
    signals: state.signals.slice(0, -1),
    phase: "entering",
    candidates: [],
    question: null,
    error: null,
  };
}

/**
 * Answer the scripted question. The question names the first candidate, so
 * "yes" resolves to it and "no" to the second; the reveal always follows the
 * resolved card's own position in the deck order.
 */
export function answerQuestion(state: SessionState, answer: "yes" | "no"): SessionState {
  if (state.phase !== "questioning") return state;
  const firstCard = answer === "yes" ? state.candidates[0] : state.candidates[1];
  return resolve(state, firstCard);
}

/** Back to an empty entry form, keeping the loaded crib. */
export function reset(state: SessionState): SessionState {
  if (state.crib === null) return initialState();
  return { ...initialState(), crib: state.crib, phase: "entering" };
}
