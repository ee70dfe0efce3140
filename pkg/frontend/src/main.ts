// App wiring: session lifecycle, click flow with turn gating, rejection
// display, transcript download, and step-through replay of transcripts.
// At most one request is in flight; input is disabled while waiting.

import { ApiClient, ApiError } from "./api.js";
import { boardModel, legalColorsFor } from "./board.js";
import { positionHash, positionFromView, replayTranscript } from "./replay.js";
import { renderBoard, renderChain, renderError, renderPalette } from "./render.js";
import type { HintsMap, SessionView, TranscriptJson } from "./types.js";

interface AppState {
  api: ApiClient;
  view: SessionView | null;
  hints: HintsMap;
  selectedColor: number | null;
  selectedVertex: number | null;
  busy: boolean;
  replay: { transcript: TranscriptJson; step: number } | null;
}

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function apiBase(): string {
  const param = new URLSearchParams(window.location.search).get("api");
  return param ?? "http://127.0.0.1:8023";
}

const state: AppState = {
  api: new ApiClient(apiBase()),
  view: null,
  hints: {},
  selectedColor: null,
  selectedVertex: null,
  busy: false,
  replay: null,
};

function setStatusLine(text: string, isError = false): void {
  const banner = byId<HTMLDivElement>("banner");
  banner.textContent = text;
  banner.classList.toggle("error", isError);
}

function redraw(): void {
  const boardRoot = byId<HTMLDivElement>("board");
  const paletteRoot = byId<HTMLDivElement>("palette");
  const chainRoot = byId<HTMLDivElement>("chain");
  if (state.replay && state.view) {
    const pos = replayTranscript(state.replay.transcript, state.replay.step);
    const fakeView: SessionView = {
      ...state.view,
      coloring: pos.coloring,
      active: pos.coloring.map((_, v) => v).filter((v) => pos.active[v]),
      turn: null,
    };
    const model = boardModel(fakeView, {}, true);
    renderBoard(
      byId("board"),
      model,
      state.view.graph,
      state.view.ordering,
      null,
      stripEnabled(),
      handlers,
    );
    renderPalette(paletteRoot, model, null, [], handlers);
    setStatusLine(
      `Replay: event ${state.replay.step}/${state.replay.transcript.events.length}`,
    );
    return;
  }
  if (!state.view) {
    return;
  }
  let model;
  try {
    model = boardModel(state.view, state.hints, state.busy);
  } catch (err) {
    renderError(boardRoot, `Malformed view: ${String(err)}`, state.view);
    return;
  }
  renderBoard(
    boardRoot,
    model,
    state.view.graph,
    state.view.ordering,
    state.selectedColor,
    stripEnabled(),
    handlers,
  );
  const enabled =
    state.selectedVertex !== null
      ? legalColorsFor(state.hints, state.selectedVertex)
      : null;
  renderPalette(paletteRoot, model, state.selectedColor, enabled, handlers);
  renderChain(chainRoot, model.chain);
  setStatusLine(model.banner);
  byId<HTMLButtonElement>("download").disabled = false;
  byId<HTMLButtonElement>("replay").disabled = false;
}

async function refreshHints(): Promise<void> {
  if (state.view) {
    state.hints = await state.api.hints(state.view.id);
  }
}

async function adopt(view: SessionView): Promise<void> {
  state.view = view;
  state.replay = null;
  state.selectedVertex = null;
  window.location.hash = view.id;
  await refreshHints();
  redraw();
}

const handlers = {
  onColorPick(color: number): void {
    state.selectedColor = state.selectedColor === color ? null : color;
    redraw();
  },
  onVertexClick(vertex: number): void {
    if (!state.view || state.busy || state.view.turn !== "bob") {
      return; // turn gating: clicks during Alice's compute are ignored
    }
    state.selectedVertex = vertex;
    if (state.selectedColor === null) {
      redraw();
      return;
    }
    void submit(vertex, state.selectedColor);
  },
};

async function submit(vertex: number, color: number): Promise<void> {
  if (!state.view || state.busy) {
    return;
  }
  state.busy = true;
  redraw();
  try {
    const next = await state.api.submitMove(state.view.id, {
      vertex,
      color,
      ply: state.view.ply,
    });
    state.busy = false;
    state.selectedVertex = null;
    await adopt(next);
  } catch (err) {
    state.busy = false;
    if (err instanceof ApiError) {
      const rejection = err.rejection();
      if (rejection) {
        setStatusLine(
          `Illegal: ${rejection.message} (clique ${rejection.clique.join(", ")})`,
          true,
        );
      } else {
        setStatusLine(`Rejected (${err.status}): ${err.message}`, true);
      }
      // no optimistic state: re-pull the authoritative view
      const fresh = await state.api.getSession(state.view.id);
      state.view = fresh;
      await refreshHints();
      const model = boardModel(fresh, state.hints, false);
      renderBoard(
        byId("board"),
        model,
        fresh.graph,
        fresh.ordering,
        state.selectedColor,
        stripEnabled(),
        handlers,
      );
      renderPalette(byId("palette"), model, state.selectedColor, null, handlers);
    } else {
      setStatusLine(`Network error: ${String(err)}`, true);
    }
  }
}

function stripEnabled(): boolean {
  return byId<HTMLInputElement>("strip-toggle").checked;
}

async function createFromForm(): Promise<void> {
  const k = Number(byId<HTMLInputElement>("param-k").value);
  const c = Number(byId<HTMLInputElement>("param-c").value);
  const source = byId<HTMLSelectElement>("source").value;
  const body: Record<string, unknown> = { k, c };
  if (source === "upload") {
    const raw = byId<HTMLTextAreaElement>("graph-json").value;
    try {
      body.graph = JSON.parse(raw);
    } catch {
      setStatusLine("Graph JSON does not parse.", true);
      return;
    }
  } else if (source.startsWith("fixture:")) {
    body.fixture = source.slice("fixture:".length);
  } else {
    body.generator = {
      kind: "ktree",
      k: Number(byId<HTMLInputElement>("gen-k").value),
      n: Number(byId<HTMLInputElement>("gen-n").value),
      seed: Number(byId<HTMLInputElement>("gen-seed").value),
    };
  }
  try {
    await adopt(await state.api.createSession(body as never));
  } catch (err) {
    if (err instanceof ApiError) {
      renderError(byId("board"), `Could not create session (${err.status})`, err.detail);
      setStatusLine("Session creation failed.", true);
    } else {
      setStatusLine(`Network error: ${String(err)}`, true);
    }
  }
}

async function downloadTranscript(): Promise<void> {
  if (!state.view) {
    return;
  }
  const transcript = await state.api.transcript(state.view.id);
  const blob = new Blob([JSON.stringify(transcript, null, 2)], {
    type: "application/json",
  });
  const anchor = document.createElement("a");
  anchor.href = URL.createObjectURL(blob);
  anchor.download = `game-${state.view.id}.json`;
  anchor.click();
  URL.revokeObjectURL(anchor.href);
}

async function enterReplay(): Promise<void> {
  if (!state.view) {
    return;
  }
  const transcript = await state.api.transcript(state.view.id);
  const live = positionHash(positionFromView(state.view));
  const replayed = positionHash(replayTranscript(transcript));
  if (live !== replayed) {
    setStatusLine("Transcript replay does not match the live board!", true);
    return;
  }
  state.replay = { transcript, step: transcript.events.length };
  redraw();
}

function replayStep(delta: number): void {
  if (!state.replay) {
    return;
  }
  const max = state.replay.transcript.events.length;
  state.replay.step = Math.min(max, Math.max(0, state.replay.step + delta));
  redraw();
}

function exitReplay(): void {
  state.replay = null;
  redraw();
}

async function boot(): Promise<void> {
  byId<HTMLButtonElement>("create").addEventListener("click", () => void createFromForm());
  byId<HTMLButtonElement>("download").addEventListener("click", () => void downloadTranscript());
  byId<HTMLButtonElement>("replay").addEventListener("click", () => void enterReplay());
  byId<HTMLButtonElement>("replay-back").addEventListener("click", () => replayStep(-1));
  byId<HTMLButtonElement>("replay-forward").addEventListener("click", () => replayStep(1));
  byId<HTMLButtonElement>("replay-exit").addEventListener("click", exitReplay);
  byId<HTMLInputElement>("strip-toggle").addEventListener("change", redraw);
  byId<HTMLSelectElement>("source").addEventListener("change", () => {
    const value = byId<HTMLSelectElement>("source").value;
    byId<HTMLDivElement>("upload-row").hidden = value !== "upload";
    byId<HTMLDivElement>("generator-row").hidden = value !== "generator";
  });
  const fragment = window.location.hash.replace(/^#/, "");
  if (fragment) {
    try {
      await adopt(await state.api.getSession(fragment));
    } catch {
      setStatusLine("Stored session is gone; start a new one.", true);
    }
  }
}

if (typeof document !== "undefined") {
  void boot();
}
