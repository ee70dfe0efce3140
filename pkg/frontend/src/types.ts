// JSON shapes mirrored from the session service; the client renders these
// verbatim and never derives game state on its own.

export interface GraphJson {
  n: number;
  edges: [number, number][];
}

export type StatusKind = "ongoing" | "alice_wins" | "bob_wins";

export interface StatusJson {
  kind: StatusKind;
  witness?: number;
}

export interface ChainEntry {
  vertex: number;
  noop: boolean;
}

export interface SessionView {
  id: string;
  k: number;
  c: number;
  graph: GraphJson;
  strategy_graph: GraphJson | null;
  ordering: number[];
  coloring: number[]; // 0 = uncolored, else 1..c
  active: number[];
  turn: "alice" | "bob" | null;
  status: StatusJson;
  ply: number;
  alice_chain: ChainEntry[];
}

export interface MoveEventJson {
  type: "move";
  player: "alice" | "bob";
  vertex: number;
  color: number;
}

export interface ActivateEventJson {
  type: "activate";
  vertex: number;
}

export type TranscriptEvent = MoveEventJson | ActivateEventJson;

export interface OutcomeJson {
  winner: "alice" | "bob";
  witness?: number;
  forfeit_by?: string;
  diagnostic?: string;
}

export interface TranscriptJson {
  config: {
    k: number;
    c: number;
    play_graph: GraphJson;
    strategy_graph: GraphJson | null;
  };
  config_digest: string;
  events: TranscriptEvent[];
  outcome: OutcomeJson | null;
}

export type HintsMap = Record<string, number[]>;

export interface RejectionDetail {
  message: string;
  clique: number[];
}
