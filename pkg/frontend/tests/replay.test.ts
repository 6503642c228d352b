import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { Session } from "../src/state";
import type { GameState } from "../src/types";
import { fixtureFetch, type Exchange } from "./helpers";
import sessionN6 from "./fixtures/session_n6.json";
import sessionAWin from "./fixtures/session_a_win.json";
import sessionMirror from "./fixtures/session_ladder_mirror.json";

interface Recording {
  n: number;
  seed: number;
  clicks: number[];
  exchanges: Exchange[];
  final: GameState;
}

// Replays the recorded click log through the real client and session
// logic, against the recorded service responses.
async function replay(rec: Recording): Promise<Session> {
  const api = new ApiClient("http://service", fixtureFetch(rec.exchanges));
  const game = await api.newGame(rec.n, rec.seed);
  const session = new Session(game.state);
  for (const node of rec.clicks) {
    expect(session.canPlay(node)).toBe(true);
    session.applyMove(node, await api.move(session.state.id, node));
  }
  return session;
}

describe("recorded sessions", () => {
  it("reproduces the seeded n=6 session and shows winner and gamma", async () => {
    const session = await replay(sessionN6 as Recording);
    expect(session.state).toEqual(sessionN6.final);
    expect(session.state.status).toBe("finished");
    expect(session.announcement()).toBe("B wins, γ=0");
    expect(session.history).toHaveLength(4);
    // final signature of a fully marked board is always 2
    expect(session.sigmaSoFar()).toBe(2);
  });

  it("shows gamma >= 1 when A wins", async () => {
    const session = await replay(sessionAWin as Recording);
    expect(session.state.winner).toBe("A");
    expect(session.state.gamma).toBeGreaterThanOrEqual(1);
    expect(session.announcement()).toBe(`A wins, γ=${session.state.gamma}`);
  });

  it("announces B after the mirror playthrough on a ladder", async () => {
    const rec = sessionMirror as Recording;
    const session = await replay(rec);
    // B answered each A move on the partner value (2k <-> 2k+1)
    for (let i = 0; i < session.history.length; i += 2) {
      const a = session.history[i];
      const b = session.history[i + 1];
      expect(b.player).toBe("B");
      expect(b.value).toBe(a.value % 2 === 0 ? a.value + 1 : a.value - 1);
    }
    expect(session.announcement()).toBe("B wins, γ=0");
  });

  it("replaying the same log twice gives identical states", async () => {
    const one = await replay(sessionN6 as Recording);
    const two = await replay(sessionN6 as Recording);
    expect(one.state).toEqual(two.state);
    expect(one.history).toEqual(two.history);
  });
});
