// View model for the play-against-the-engine panel. All state comes from
// service responses; no game rules are duplicated on the client.

import { Client, GameResponse, NimMove, MakeMove, NimState, MakeState } from "./api.js";

export interface GameView {
  statusLine: string;
  heaps: number[] | null;
  remaining: number | null;
  legalAmounts: number[] | null;
  finished: boolean;
  lastEngineMove: string | null;
}

function describeEngineMove(response: GameResponse): string | null {
  const move = response.engineMove;
  if (move === null) {
    return null;
  }
  if ("heapIndex" in move) {
    return `engine took ${move.take} from heap ${move.heapIndex + 1}`;
  }
  return `engine took ${move.amount}`;
}

export function toView(response: GameResponse): GameView {
  let statusLine: string;
  if (response.finished) {
    statusLine = response.winner === "human" ? "You win." : "Engine wins.";
  } else {
    statusLine = "Your move.";
  }
  const nim = response.kind === "nim" ? (response.state as NimState) : null;
  const make = response.kind === "make" ? (response.state as MakeState) : null;
  return {
    statusLine,
    heaps: nim ? nim.heaps.slice() : null,
    remaining: make ? make.remaining : null,
    legalAmounts: make
      ? make.moves.filter((m) => m <= make.remaining)
      : null,
    finished: response.finished,
    lastEngineMove: describeEngineMove(response),
  };
}

export class GameSession {
  private response: GameResponse | null = null;

  constructor(private readonly client: Client) {}

  get view(): GameView | null {
    return this.response ? toView(this.response) : null;
  }

  async startNim(heaps: number[], humanSide: "First" | "Second"): Promise<GameView> {
    this.response = await this.client.createGame({ kind: "nim", heaps, humanSide });
    return toView(this.response);
  }

  async startMake(
    target: number,
    moves: number[],
    humanSide: "First" | "Second"
  ): Promise<GameView> {
    this.response = await this.client.createGame({
      kind: "make",
      target,
      moves,
      humanSide,
    });
    return toView(this.response);
  }

  async play(move: NimMove | MakeMove): Promise<GameView> {
    if (this.response === null) {
      throw new Error("no active game");
    }
    this.response = await this.client.submitMove(this.response.id, move);
    return toView(this.response);
  }
}
