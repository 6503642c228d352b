import type { FetchLike } from "../src/api";

export interface Exchange {
  request: { path: string; body: unknown };
  status: number;
  response: unknown;
}

// Serves a recorded exchange log in order, checking that the client
// issues the same requests the recording did.
export function fixtureFetch(exchanges: Exchange[]): FetchLike {
  const queue = [...exchanges];
  return async (url, init) => {
    const next = queue.shift();
    if (!next) throw new Error(`unexpected request ${url}`);
    const path = new URL(url).pathname;
    const expected = next.request.path;
    const pattern = new RegExp("^" + expected.replace("{id}", "[^/]+") + "$");
    if (!pattern.test(path)) {
      throw new Error(`request ${path} does not match recorded ${expected}`);
    }
    const sentBody = JSON.parse((init.body as string) ?? "{}");
    if (JSON.stringify(sentBody) !== JSON.stringify(next.request.body)) {
      throw new Error(`body ${init.body} does not match recorded ${JSON.stringify(next.request.body)}`);
    }
    return new Response(JSON.stringify(next.response), {
      status: next.status,
      headers: { "Content-Type": "application/json" },
    });
  };
}
