// Explorer parameters live in the URL query string so a view can be
// bookmarked or shared. encode/decode are exact inverses for valid state.

export type ExplorerState =
  | { view: "modular"; n: number; k: number }
  | { view: "curve"; kind: "cardioid" | "cycloid" | "epicycloid"; samples: number }
  | { view: "lsystem"; preset: string; order: number; step: number };

export function encodeState(state: ExplorerState): string {
  const params = new URLSearchParams();
  params.set("view", state.view);
  switch (state.view) {
    case "modular":
      params.set("n", String(state.n));
      params.set("k", String(state.k));
      break;
    case "curve":
      params.set("kind", state.kind);
      params.set("samples", String(state.samples));
      break;
    case "lsystem":
      params.set("preset", state.preset);
      params.set("order", String(state.order));
      params.set("step", String(state.step));
      break;
  }
  return params.toString();
}

function intParam(params: URLSearchParams, name: string): number | null {
  const raw = params.get(name);
  if (raw === null || !/^-?\d+$/.test(raw)) {
    return null;
  }
  return parseInt(raw, 10);
}

export function decodeState(query: string): ExplorerState | null {
  const params = new URLSearchParams(query);
  const view = params.get("view");
  if (view === "modular") {
    const n = intParam(params, "n");
    const k = intParam(params, "k");
    if (n === null || k === null || n < 2 || k < 0) {
      return null;
    }
    return { view, n, k };
  }
  if (view === "curve") {
    const kind = params.get("kind");
    const samples = intParam(params, "samples");
    if (
      (kind !== "cardioid" && kind !== "cycloid" && kind !== "epicycloid") ||
      samples === null ||
      samples < 2
    ) {
      return null;
    }
    return { view, kind, samples };
  }
  if (view === "lsystem") {
    const preset = params.get("preset");
    const order = intParam(params, "order");
    const step = intParam(params, "step");
    if (!preset || order === null || step === null || order < 0 || step <= 0) {
      return null;
    }
    return { view, preset, order, step };
  }
  return null;
}
