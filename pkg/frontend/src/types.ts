// Wire format of the game service.  Marks are -1 / 0 / +1 per node,
// 0 meaning still open.

export type Player = "A" | "B";

export interface GameState {
  id: string;
  permutation: number[];
  marks: number[];
  to_move: Player;
  pools: { A: number; B: number };
  status: "in_progress" | "finished";
  winner?: Player;
  gamma?: number;
}

export interface NewGameResponse {
  id: string;
  permutation: number[];
  state: GameState;
}

export interface HintCandidate {
  node: number;
  verdict: string;
  mode: "exact" | "heuristic";
}

export interface HintResponse {
  to_move: Player;
  candidates: HintCandidate[];
}

export interface ApiFailure {
  error: string;
  message: string;
}
