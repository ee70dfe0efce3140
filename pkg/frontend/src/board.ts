// Presentation model: everything the renderer needs, derived purely from
// server-provided state.  The only client-side "rule" is graying out
// choices the hints endpoint already declared illegal.

import type { HintsMap, SessionView, StatusJson } from "./types.js";

export interface Swatch {
  color: number;
  css: string;
  numbered: boolean;
}

// Visually distinct fills; anything past 8 falls back to numbered gray.
const DISTINCT = [
  "#e6194b",
  "#3cb44b",
  "#4363d8",
  "#f5b041",
  "#911eb4",
  "#46b8b0",
  "#f032e6",
  "#9a6324",
];

export function paletteFor(c: number): Swatch[] {
  const swatches: Swatch[] = [];
  for (let color = 1; color <= c; color += 1) {
    const distinct = color <= DISTINCT.length;
    swatches.push({
      color,
      css: distinct ? DISTINCT[color - 1] : "#b0b0b0",
      numbered: !distinct,
    });
  }
  return swatches;
}

export interface VertexCell {
  id: number;
  badge: number; // position in the ordering, 1-based for display
  color: number; // 0 = uncolored
  active: boolean;
  witness: boolean;
  clickable: boolean;
  legal: number[];
}

export interface BoardModel {
  cells: VertexCell[];
  palette: Swatch[];
  banner: string;
  humanTurn: boolean;
  chain: string[];
}

export function statusBanner(status: StatusJson, turn: SessionView["turn"]): string {
  if (status.kind === "alice_wins") {
    return "Alice wins: every vertex is colored.";
  }
  if (status.kind === "bob_wins") {
    return `Bob wins: vertex ${status.witness} has no legal color left.`;
  }
  return turn === "bob" ? "Your move." : "Alice is thinking…";
}

export function chainLines(view: SessionView): string[] {
  return view.alice_chain.map((entry) =>
    entry.noop
      ? `activate ${entry.vertex} (already active)`
      : `activate ${entry.vertex}`,
  );
}

export function boardModel(
  view: SessionView,
  hints: HintsMap,
  busy: boolean,
): BoardModel {
  const witness =
    view.status.kind === "bob_wins" ? view.status.witness ?? -1 : -1;
  const activeSet = new Set(view.active);
  const humanTurn = view.turn === "bob" && !busy;
  const badge = new Array(view.graph.n).fill(0);
  view.ordering.forEach((v, i) => {
    badge[v] = i + 1;
  });
  const cells: VertexCell[] = [];
  for (let v = 0; v < view.graph.n; v += 1) {
    const legal = hints[String(v)] ?? [];
    cells.push({
      id: v,
      badge: badge[v],
      color: view.coloring[v],
      active: activeSet.has(v),
      witness: v === witness,
      clickable: humanTurn && view.coloring[v] === 0 && legal.length > 0,
      legal,
    });
  }
  return {
    cells,
    palette: paletteFor(view.c),
    banner: statusBanner(view.status, view.turn),
    humanTurn,
    chain: chainLines(view),
  };
}

export function legalColorsFor(hints: HintsMap, vertex: number): number[] {
  return hints[String(vertex)] ?? [];
}
