import { describe, expect, it } from "vitest";

import {
  answerQuestion,
  enterSignal,
  initialState,
  loadCrib,
  reset,
  undoSignal,
} from "../src/session.js";
import type { Color, CribData, SessionState } from "../src/types.js";
import { builtinCribDoc, cloneDoc } from "./fixtures.js";

function loaded(): SessionState {
  return loadCrib(initialState(), builtinCribDoc());
}

function entered(signals: string): SessionState {
  let state = loaded();
  for (const c of signals) state = enterSignal(state, c as Color);
  return state;
}

describe("loadCrib", () => {
  it("loads the builtin crib into entering phase", () => {
    const state = loaded();
    expect(state.phase).toBe("entering");
    expect(state.crib?.order).toHaveLength(52);
    expect(state.error).toBeNull();
  });

  it("keeps nothing from a rejected document", () => {
    const doc = cloneDoc(builtinCribDoc()) as CribData;
    doc.order.pop();
    const state = loadCrib(loaded(), doc);
    expect(state.crib).toBeNull();
    expect(state.phase).toBe("empty");
    expect(state.error).toMatch(/52 cards/);
  });
});

describe("enterSignal", () => {
  it("runs the scripted two-candidate flow", () => {
    const state = entered("RBRBB");
    expect(state.phase).toBe("questioning");
    expect(state.candidates).toEqual(["9H", "9D"]);
    expect(state.question).toMatch(/it's not a heart, is it\?/);
  });

  it("reveals directly on a single candidate", () => {
    const state = entered("BBRRR");
    expect(state.phase).toBe("revealed");
    expect(state.firstCard).toBe("7S");
    expect(state.reveal).toEqual(["7S", "4C", "AD", "7D", "6D"]);
  });

  it("ignores input outside the entering phase", () => {
    const state = entered("BBRRR");
    expect(enterSignal(state, "R")).toBe(state);
    expect(enterSignal(initialState(), "R")).toEqual(initialState());
  });

  it("flags impossible signals without dead-ending", () => {
    // a crib over a sequence that misses some windows is legal; shrink the
    // table in-state to force the missing-window path
    const state = loaded();
    const crib = state.crib as CribData;
    let next: SessionState = {
      ...state,
      crib: { ...crib, table: { "01011": crib.table["01011"] } },
    };
    for (const c of "RRRRR") next = enterSignal(next, c as Color);
    expect(next.phase).toBe("impossible");
    expect(next.error).toMatch(/impossible signal: window 00000/);
    expect(reset(next).phase).toBe("entering");
  });

  it("answering yes follows the first candidate's own deck position", () => {
    const state = answerQuestion(entered("RBRBB"), "yes");
    expect(state.firstCard).toBe("9H");
    // 9H sits between 8D and QC in the deck, so its reveal is not adjacent
    // to 9D's
    expect(state.reveal).toEqual(["9H", "QC", "JH", "JS", "5C"]);
  });

  it("answering no follows the second candidate", () => {
    const state = answerQuestion(entered("RBRBB"), "no");
    expect(state.firstCard).toBe("9D");
    expect(state.reveal).toEqual(["9D", "QS", "4H", "2S", "6S"]);
  });
});

describe("undo and reset", () => {
  it("undo removes the last signal", () => {
    const four = undoSignal(entered("RBRBB"));
    expect(four.phase).toBe("entering");
    expect(four.signals).toEqual(["R", "B", "R", "B"]);
    expect(four.question).toBeNull();
  });

  it("undo on an empty entry is a no-op", () => {
    const state = loaded();
    expect(undoSignal(state)).toBe(state);
  });

  it("reset clears the flow but keeps the crib", () => {
    const state = reset(answerQuestion(entered("RBRBB"), "no"));
    expect(state.phase).toBe("entering");
    expect(state.signals).toEqual([]);
    expect(state.crib?.name).toBe("builtin");
  });

  it("rank question appears when the suits agree", () => {
    const state = entered("RBBRB"); // window 01101: QH and 4H, both hearts
    expect(state.candidates).toEqual(["QH", "4H"]);
    expect(state.question).toMatch(/it's not a Q, is it\?/);
  });
});
