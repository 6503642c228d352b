import type { GameState, HintResponse } from "./types";

export interface NodePlacement {
  node: number;
  value: number;
  x: number;
  y: number;
}

export const SIZE = 480;
const CENTER = SIZE / 2;
const INNER = 90;
const OUTER = 200;

// Nodes sit at equal angles around a circle, starting at 12 o'clock,
// pushed outward proportionally to their value so the zig-zag profile
// is visible as a radial wave.
export function placements(permutation: number[]): NodePlacement[] {
  const n = permutation.length;
  return permutation.map((value, node) => {
    const angle = -Math.PI / 2 + (2 * Math.PI * node) / n;
    const r = INNER + ((value - 1) / (n - 1)) * (OUTER - INNER);
    return {
      node,
      value,
      x: CENTER + r * Math.cos(angle),
      y: CENTER + r * Math.sin(angle),
    };
  });
}

function fmt(x: number): string {
  return x.toFixed(1);
}

// Drawing convention: positive nodes are filled black dots, negative
// ones hollow white dots, open nodes light gray.
export function nodeMarkup(p: NodePlacement, mark: number, playable: boolean, badge?: string): string {
  const fill = mark > 0 ? "#111" : mark < 0 ? "#fff" : "#e8e8e8";
  const stroke = mark === 0 ? "#999" : "#111";
  const cls = playable ? "node playable" : "node";
  const label = `<text x="${fmt(p.x)}" y="${fmt(p.y - 18)}" text-anchor="middle" class="value">${p.value}</text>`;
  const hint = badge
    ? `<text x="${fmt(p.x)}" y="${fmt(p.y + 26)}" text-anchor="middle" class="hint">${badge}</text>`
    : "";
  return (
    `<g class="${cls}" data-node="${p.node}">` +
    `<circle cx="${fmt(p.x)}" cy="${fmt(p.y)}" r="12" fill="${fill}" stroke="${stroke}" stroke-width="2"/>` +
    label +
    hint +
    `</g>`
  );
}

export function boardMarkup(state: GameState, hint: HintResponse | null, busy: boolean): string {
  const pts = placements(state.permutation);
  const ring = pts.map((p) => `${fmt(p.x)},${fmt(p.y)}`).join(" ");
  const badges = new Map<number, string>();
  if (hint) {
    for (const c of hint.candidates) badges.set(c.node, c.verdict);
  }
  const nodes = pts
    .map((p) =>
      nodeMarkup(
        p,
        state.marks[p.node],
        !busy && state.status === "in_progress" && state.marks[p.node] === 0,
        badges.get(p.node),
      ),
    )
    .join("");
  return (
    `<svg viewBox="0 0 ${SIZE} ${SIZE}" xmlns="http://www.w3.org/2000/svg">` +
    `<polygon points="${ring}" fill="none" stroke="#bbb" stroke-width="1.5"/>` +
    nodes +
    `</svg>`
  );
}

export function panelMarkup(state: GameState, sigma: number, announcement: string | null): string {
  const rows = [
    `<div>turn: <b>${state.status === "finished" ? "—" : state.to_move}</b></div>`,
    `<div>pool A (−): <b>${state.pools.A}</b></div>`,
    `<div>pool B (+): <b>${state.pools.B}</b></div>`,
    `<div>σ so far: <b>${sigma}</b></div>`,
  ];
  if (announcement) {
    rows.push(`<div class="result">${announcement}</div>`);
  }
  return rows.join("");
}
