// Debounced figure rendering. Rapid slider changes collapse to one request
// per quiet period, and stale responses are dropped via sequence numbers so
// the newest request always wins.

import { Client } from "./api.js";
import { ExplorerState } from "./urlState.js";

export const DEBOUNCE_MS = 150;

export class Explorer {
  private sequence = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;

  constructor(
    private readonly client: Client,
    private readonly onRender: (svg: string) => void,
    private readonly onError: (message: string) => void
  ) {}

  request(state: ExplorerState): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fetchNow(state);
    }, DEBOUNCE_MS);
  }

  async fetchNow(state: ExplorerState): Promise<void> {
    const seq = ++this.sequence;
    try {
      const svg = await this.fetchSvg(state);
      if (seq === this.sequence) {
        this.onRender(svg);
      }
    } catch (err) {
      if (seq === this.sequence) {
        this.onError(err instanceof Error ? err.message : String(err));
      }
    }
  }

  private fetchSvg(state: ExplorerState): Promise<string> {
    switch (state.view) {
      case "modular":
        return this.client.renderModular(state.n, state.k);
      case "curve":
        return this.client.renderCurve(state.kind, state.samples);
      case "lsystem":
        return this.client.renderLsystem({
          preset: state.preset,
          order: state.order,
          step: state.step,
        });
    }
  }
}
