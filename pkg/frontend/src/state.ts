import type { GameState, HintResponse, Player } from "./types";

export interface HistoryEntry {
  player: Player;
  node: number;
  value: number;
}

// Client-side projection of the last authoritative state received from
// the service, plus the move history observed so far.  The only local
// logic is the legality pre-check mirrored from the service.
export class Session {
  state: GameState;
  history: HistoryEntry[] = [];
  hintsOn = false;
  lastHint: HintResponse | null = null;
  busy = false;

  constructor(state: GameState) {
    this.state = state;
  }

  // Nodes the current player may click right now.
  canPlay(node: number): boolean {
    return (
      !this.busy &&
      this.state.status === "in_progress" &&
      node >= 0 &&
      node < this.state.marks.length &&
      this.state.marks[node] === 0
    );
  }

  // Signature of the marks placed so far (open nodes contribute 0).
  sigmaSoFar(): number {
    return this.state.marks.reduce((s, m) => s + m, 0);
  }

  // Accept a fresh state from the service after a move on `node`.
  applyMove(node: number, next: GameState): void {
    this.history.push({
      player: this.state.to_move,
      node,
      value: this.state.permutation[node],
    });
    this.state = next;
    this.lastHint = null;
  }

  announcement(): string | null {
    if (this.state.status !== "finished") return null;
    return `${this.state.winner} wins, γ=${this.state.gamma}`;
  }
}
