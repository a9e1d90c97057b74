// Typed client for the engine's JSON/SVG HTTP API. All game logic lives
// server-side; this module only shuttles requests and responses.

export interface NimMove {
  heapIndex: number;
  take: number;
}

export interface MakeMove {
  amount: number;
}

export type EngineMove = NimMove | MakeMove | null;

export interface NimState {
  heaps: number[];
}

export interface MakeState {
  remaining: number;
  target: number;
  moves: number[];
}

export interface GameResponse {
  id: string;
  kind: "nim" | "make";
  humanSide: "First" | "Second";
  state: NimState | MakeState;
  turn: "human" | "over";
  outcome: "First" | "Second";
  grundy: number;
  engineMove: EngineMove;
  finished: boolean;
  winner: "human" | "engine" | null;
  moveLog: { by: string; move: NimMove | MakeMove }[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
}

export class ApiError extends Error {
  readonly code: string;
  readonly status: number;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.status = status;
    this.code = body.code;
  }
}

async function jsonOrThrow<T>(response: Response): Promise<T> {
  if (!response.ok) {
    const body = (await response.json()) as ApiErrorBody;
    throw new ApiError(response.status, body);
  }
  return (await response.json()) as T;
}

export class Client {
  constructor(private readonly baseUrl: string = "") {}

  async createGame(config: {
    kind: "nim" | "make";
    heaps?: number[];
    target?: number;
    moves?: number[];
    humanSide: "First" | "Second";
  }): Promise<GameResponse> {
    const response = await fetch(`${this.baseUrl}/api/game`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(config),
    });
    return jsonOrThrow<GameResponse>(response);
  }

  async submitMove(id: string, move: NimMove | MakeMove): Promise<GameResponse> {
    const response = await fetch(`${this.baseUrl}/api/game/${id}/move`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(move),
    });
    return jsonOrThrow<GameResponse>(response);
  }

  async getGame(id: string): Promise<GameResponse> {
    const response = await fetch(`${this.baseUrl}/api/game/${id}`);
    return jsonOrThrow<GameResponse>(response);
  }

  async renderModular(n: number, k: number): Promise<string> {
    const response = await fetch(
      `${this.baseUrl}/api/render/modular-chords?n=${n}&k=${k}`
    );
    if (!response.ok) {
      throw new ApiError(response.status, (await response.json()) as ApiErrorBody);
    }
    return response.text();
  }

  async renderCurve(kind: string, samples: number): Promise<string> {
    const response = await fetch(
      `${this.baseUrl}/api/render/curve?kind=${kind}&samples=${samples}`
    );
    if (!response.ok) {
      throw new ApiError(response.status, (await response.json()) as ApiErrorBody);
    }
    return response.text();
  }

  async renderLsystem(config: {
    preset?: string;
    text?: string;
    order: number;
    step: number;
    angle?: number;
  }): Promise<string> {
    const response = await fetch(`${this.baseUrl}/api/render/lsystem`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(config),
    });
    if (!response.ok) {
      throw new ApiError(response.status, (await response.json()) as ApiErrorBody);
    }
    return response.text();
  }
}
