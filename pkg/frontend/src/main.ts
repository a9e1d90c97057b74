// DOM wiring: one page with a figure explorer and a game panel. Explorer
// state is mirrored into the URL so views can be shared.

import { Client, NimMove } from "./api.js";
import { Explorer } from "./explorer.js";
import { GameSession, GameView } from "./game.js";
import { ExplorerState, encodeState, decodeState } from "./urlState.js";

const client = new Client();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

// --- explorer ---------------------------------------------------------

const figure = el<HTMLDivElement>("figure");
const errorBox = el<HTMLDivElement>("error");

const explorer = new Explorer(
  client,
  (svg) => {
    errorBox.textContent = "";
    figure.innerHTML = svg.replace(/^<\?xml[^>]*\?>\s*/, "");
  },
  (message) => {
    errorBox.textContent = message;
  }
);

const viewSelect = el<HTMLSelectElement>("view");
const modularN = el<HTMLInputElement>("modular-n");
const modularK = el<HTMLInputElement>("modular-k");
const curveKind = el<HTMLSelectElement>("curve-kind");
const curveSamples = el<HTMLInputElement>("curve-samples");
const lsysPreset = el<HTMLSelectElement>("lsystem-preset");
const lsysOrder = el<HTMLInputElement>("lsystem-order");

function currentState(): ExplorerState {
  switch (viewSelect.value) {
    case "curve":
      return {
        view: "curve",
        kind: curveKind.value as "cardioid" | "cycloid" | "epicycloid",
        samples: parseInt(curveSamples.value, 10),
      };
    case "lsystem":
      return {
        view: "lsystem",
        preset: lsysPreset.value,
        order: parseInt(lsysOrder.value, 10),
        step: 10,
      };
    default:
      return {
        view: "modular",
        n: parseInt(modularN.value, 10),
        k: parseInt(modularK.value, 10),
      };
  }
}

function applyState(state: ExplorerState): void {
  viewSelect.value = state.view;
  if (state.view === "modular") {
    modularN.value = String(state.n);
    modularK.value = String(state.k);
  } else if (state.view === "curve") {
    curveKind.value = state.kind;
    curveSamples.value = String(state.samples);
  } else {
    lsysPreset.value = state.preset;
    lsysOrder.value = String(state.order);
  }
  showPanel(state.view);
}

function showPanel(view: string): void {
  for (const name of ["modular", "curve", "lsystem"]) {
    el<HTMLDivElement>(`panel-${name}`).hidden = name !== view;
  }
}

function refresh(): void {
  const state = currentState();
  showPanel(state.view);
  history.replaceState(null, "", `?${encodeState(state)}`);
  explorer.request(state);
}

for (const input of [viewSelect, modularN, modularK, curveKind, curveSamples, lsysPreset, lsysOrder]) {
  input.addEventListener("input", refresh);
  input.addEventListener("change", refresh);
}

// --- game panel --------------------------------------------------------

const session = new GameSession(client);
const gameStatus = el<HTMLDivElement>("game-status");
const heapsBox = el<HTMLDivElement>("heaps");
const makeBoard = el<HTMLDivElement>("make-board");
const gameKind = el<HTMLSelectElement>("game-kind");

function renderGame(view: GameView): void {
  gameStatus.textContent = view.lastEngineMove
    ? `${view.lastEngineMove} — ${view.statusLine}`
    : view.statusLine;
  heapsBox.innerHTML = "";
  makeBoard.innerHTML = "";
  if (view.heaps) {
    view.heaps.forEach((count, index) => {
      const row = document.createElement("div");
      row.className = "heap";
      row.textContent = `heap ${index + 1}: ${"●".repeat(count)} (${count}) `;
      if (!view.finished && count > 0) {
        for (let take = 1; take <= count; take += 1) {
          const button = document.createElement("button");
          button.textContent = `-${take}`;
          button.addEventListener("click", () => {
            void playMove({ heapIndex: index, take });
          });
          row.appendChild(button);
        }
      }
      heapsBox.appendChild(row);
    });
  }
  if (view.remaining !== null) {
    const row = document.createElement("div");
    row.className = "heap";
    row.textContent = `remaining to take: ${view.remaining} `;
    if (!view.finished && view.legalAmounts) {
      for (const amount of view.legalAmounts) {
        const button = document.createElement("button");
        button.textContent = `take ${amount}`;
        button.addEventListener("click", () => {
          void playMove({ amount });
        });
        row.appendChild(button);
      }
    }
    makeBoard.appendChild(row);
  }
}

async function playMove(move: NimMove | { amount: number }): Promise<void> {
  try {
    renderGame(await session.play(move));
  } catch (err) {
    gameStatus.textContent = err instanceof Error ? err.message : String(err);
  }
}

function parseInts(raw: string): number[] {
  return raw
    .split(/[\s,]+/)
    .filter((s) => s.length > 0)
    .map((s) => parseInt(s, 10));
}

gameKind.addEventListener("change", () => {
  el<HTMLSpanElement>("nim-config").hidden = gameKind.value !== "nim";
  el<HTMLSpanElement>("make-config").hidden = gameKind.value !== "make";
});

el<HTMLButtonElement>("new-game").addEventListener("click", () => {
  const side = el<HTMLSelectElement>("human-side").value as "First" | "Second";
  const started =
    gameKind.value === "make"
      ? session.startMake(
          parseInt(el<HTMLInputElement>("target-input").value, 10),
          parseInts(el<HTMLInputElement>("moves-input").value),
          side
        )
      : (() => {
          const heaps = parseInts(el<HTMLInputElement>("heaps-input").value);
          if (heaps.length === 0 || heaps.some((h) => !Number.isInteger(h) || h < 0)) {
            gameStatus.textContent = "heaps must be non-negative integers";
            return null;
          }
          return session.startNim(heaps, side);
        })();
  if (started) {
    started.then(renderGame).catch((err) => {
      gameStatus.textContent = err instanceof Error ? err.message : String(err);
    });
  }
});

// --- boot --------------------------------------------------------------

const initial = decodeState(window.location.search) ?? {
  view: "modular" as const,
  n: 360,
  k: 2,
};
applyState(initial);
void explorer.fetchNow(initial);
