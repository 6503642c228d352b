import type { GameState, HintResponse, NewGameResponse } from "./types";

export type FetchLike = (url: string, init: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(public status: number, public code: string, message: string) {
    super(message);
  }
}

// Thin JSON client for the game service.  The fetch function is
// injectable so tests can replay recorded exchanges.
export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike = (url, init) => fetch(url, init),
  ) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const res = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body ?? {}),
    });
    const data = await res.json();
    if (!res.ok) {
      throw new ApiError(res.status, data.error ?? "Unknown", data.message ?? "request failed");
    }
    return data as T;
  }

  newGame(n: number, seed?: number): Promise<NewGameResponse> {
    return this.post("/game/new", seed === undefined ? { n } : { n, seed });
  }

  move(gameId: string, node: number): Promise<GameState> {
    return this.post(`/game/${gameId}/move`, { node });
  }

  hint(gameId: string): Promise<HintResponse> {
    return this.post(`/game/${gameId}/hint`, {});
  }
}
