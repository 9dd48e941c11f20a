import { isRed, pretty } from "./cards.js";
import { Drill, gradeDrill, makeDrill } from "./drill.js";
import { WINDOW_LENGTH } from "./schema.js";
import {
  answerQuestion,
  enterSignal,
  initialState,
  loadCrib,
  reset,
  undoSignal,
} from "./session.js";
import type { Color, SessionState } from "./types.js";

let state: SessionState = initialState();
let drill: Drill | null = null;
let drillSeed = 1;

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

function setState(next: SessionState): void {
  state = next;
  render();
}

function cardChip(code: string): HTMLElement {
  const el = document.createElement("span");
  el.className = "card " + (isRed(code) ? "red" : "black");
  el.textContent = pretty(code);
  return el;
}

function render(): void {
  const status = byId<HTMLElement>("status");
  const signals = byId<HTMLElement>("signals");
  const question = byId<HTMLElement>("question");
  const revealBox = byId<HTMLElement>("reveal");
  const answerButtons = byId<HTMLElement>("answer-buttons");
  const signalButtons = byId<HTMLElement>("signal-buttons");
  const cribInfo = byId<HTMLElement>("crib-info");
  const drillBanner = byId<HTMLElement>("drill-banner");

  cribInfo.textContent = state.crib
    ? `crib "${state.crib.name}" loaded: ${Object.keys(state.crib.table).length} rows, ${state.crib.order.length} cards`
    : "no crib loaded";

  signals.replaceChildren();
  for (let i = 0; i < WINDOW_LENGTH; i++) {
    const slot = document.createElement("span");
    const color = state.signals[i];
    slot.className = "slot " + (color === "R" ? "red" : color === "B" ? "black" : "empty");
    slot.textContent = color ?? "·";
    signals.append(slot);
  }

  signalButtons.style.display =
    state.phase === "entering" && state.crib ? "" : "none";
  answerButtons.style.display = state.phase === "questioning" ? "" : "none";

  if (state.error) {
    status.textContent = state.error;
    status.className = "error";
  } else if (state.phase === "empty") {
    status.textContent = "Load a crib to begin.";
    status.className = "";
  } else if (state.phase === "entering") {
    status.textContent = `Spectator ${state.signals.length + 1} of ${WINDOW_LENGTH}: red or black?`;
    status.className = "";
  } else if (state.phase === "questioning") {
    status.textContent = `Two possibilities: ${state.candidates.map(pretty).join(" or ")}`;
    status.className = "";
  } else if (state.phase === "revealed") {
    status.textContent = "The five cards, spectator 1 first:";
    status.className = "";
  } else {
    status.textContent = "";
  }

  question.textContent = state.phase === "questioning" ? state.question ?? "" : "";

  revealBox.replaceChildren();
  if (state.phase === "revealed") {
    for (const code of state.reveal) revealBox.append(cardChip(code));
    if (drill) {
      const verdict = document.createElement("p");
      const ok = gradeDrill(drill, state.reveal);
      verdict.className = ok ? "ok" : "error";
      verdict.textContent = ok
        ? "Drill passed: all five cards match."
        : `Drill missed: the cards were ${drill.truth.map(pretty).join(" ")}.`;
      revealBox.append(verdict);
    }
  }

  drillBanner.textContent = drill
    ? `Drill cut ready. The spectators show: ${drill.colors.join(" ")}`
    : "";
}

async function loadBuiltin(): Promise<void> {
  const response = await fetch("./public/builtin-crib.json");
  setState(loadCrib(state, await response.json()));
}

function loadFromFile(file: File): void {
  const reader = new FileReader();
  reader.onload = () => {
    try {
      setState(loadCrib(state, JSON.parse(String(reader.result))));
    } catch {
      setState({ ...initialState(), error: "file is not valid JSON" });
    }
  };
  reader.readAsText(file);
}

function wire(): void {
  byId<HTMLButtonElement>("load-builtin").addEventListener("click", () => {
    void loadBuiltin();
  });
  byId<HTMLInputElement>("load-file").addEventListener("change", (event) => {
    const input = event.target as HTMLInputElement;
    if (input.files && input.files[0]) loadFromFile(input.files[0]);
    input.value = "";
  });
  for (const color of ["R", "B"] as Color[]) {
    byId<HTMLButtonElement>(`signal-${color}`).addEventListener("click", () => {
      setState(enterSignal(state, color));
    });
  }
  byId<HTMLButtonElement>("answer-yes").addEventListener("click", () => {
    setState(answerQuestion(state, "yes"));
  });
  byId<HTMLButtonElement>("answer-no").addEventListener("click", () => {
    setState(answerQuestion(state, "no"));
  });
  byId<HTMLButtonElement>("undo").addEventListener("click", () => {
    setState(undoSignal(state));
  });
  byId<HTMLButtonElement>("reset").addEventListener("click", () => {
    drill = null;
    setState(reset(state));
  });
  byId<HTMLButtonElement>("start-drill").addEventListener("click", () => {
    if (!state.crib) return;
    const seedInput = byId<HTMLInputElement>("drill-seed");
    drillSeed = Number(seedInput.value) || drillSeed + 1;
    seedInput.value = String(drillSeed);
    drill = makeDrill(state.crib, drillSeed);
    setState(reset(state));
  });
  render();
}

wire();
