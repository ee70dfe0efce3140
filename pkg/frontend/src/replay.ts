// Transcript replay as a pure fold over events.  The server has already
// adjudicated every event, so replay only re-applies them; the hash lets the
// client prove a displayed position matches the transcript.

import type { SessionView, TranscriptEvent, TranscriptJson } from "./types.js";

export interface BoardPosition {
  coloring: number[];
  active: boolean[];
}

export function emptyPosition(n: number): BoardPosition {
  return {
    coloring: new Array(n).fill(0),
    active: new Array(n).fill(false),
  };
}

export function applyEvent(pos: BoardPosition, event: TranscriptEvent): BoardPosition {
  const coloring = pos.coloring.slice();
  const active = pos.active.slice();
  if (event.type === "activate") {
    active[event.vertex] = true;
  } else {
    coloring[event.vertex] = event.color;
    active[event.vertex] = true; // coloring activates
  }
  return { coloring, active };
}

export function replayTranscript(
  transcript: TranscriptJson,
  upToEvent?: number,
): BoardPosition {
  const limit = upToEvent ?? transcript.events.length;
  let pos = emptyPosition(transcript.config.play_graph.n);
  transcript.events.slice(0, limit).forEach((event) => {
    pos = applyEvent(pos, event);
  });
  return pos;
}

export function positionFromView(view: SessionView): BoardPosition {
  const active = new Array(view.graph.n).fill(false);
  view.active.forEach((v) => {
    active[v] = true;
  });
  return { coloring: view.coloring.slice(), active };
}

export function positionHash(pos: BoardPosition): string {
  return JSON.stringify([pos.coloring, pos.active.map((a) => (a ? 1 : 0))]);
}

export function viewMatchesTranscript(
  view: SessionView,
  transcript: TranscriptJson,
): boolean {
  return positionHash(positionFromView(view)) === positionHash(replayTranscript(transcript));
}
