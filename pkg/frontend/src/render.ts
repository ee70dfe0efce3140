// SVG rendering of the board model: force-directed graph on top, ordering
// strip below, palette buttons, Alice's activation-chain log, status banner.
// Browser-only; everything it draws comes from the presentation model.

import type { BoardModel, Swatch, VertexCell } from "./board.js";
import { forceLayout, stripLayout } from "./layout.js";
import type { Point } from "./layout.js";
import type { GraphJson } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 640;
const GRAPH_HEIGHT = 430;
const STRIP_Y = 500;
const HEIGHT = 540;

export interface RenderHandlers {
  onVertexClick: (vertex: number) => void;
  onColorPick: (color: number) => void;
}

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

function swatchCss(palette: Swatch[], color: number): string {
  return palette[color - 1]?.css ?? "#ffffff";
}

function drawVertex(
  svg: SVGSVGElement,
  cell: VertexCell,
  at: Point,
  palette: Swatch[],
  selectedColor: number | null,
  handlers: RenderHandlers,
  radius = 16,
): void {
  const group = el("g", { class: "vertex" });
  if (cell.active) {
    group.appendChild(
      el("circle", {
        cx: at.x,
        cy: at.y,
        r: radius + 4,
        class: "active-ring",
      }),
    );
  }
  const fill = cell.color ? swatchCss(palette, cell.color) : "#ffffff";
  const circle = el("circle", {
    cx: at.x,
    cy: at.y,
    r: radius,
    fill,
    class:
      "node" +
      (cell.witness ? " witness" : "") +
      (cell.clickable ? " clickable" : "") +
      (selectedColor !== null && cell.clickable && !cell.legal.includes(selectedColor)
        ? " grayed"
        : ""),
  });
  if (cell.clickable) {
    circle.addEventListener("click", () => handlers.onVertexClick(cell.id));
  }
  group.appendChild(circle);
  const label = el("text", {
    x: at.x,
    y: at.y + 4,
    class: "vertex-label" + (cell.color ? " on-color" : ""),
  });
  label.textContent = String(cell.id);
  group.appendChild(label);
  const badge = el("text", {
    x: at.x + radius + 2,
    y: at.y - radius + 2,
    class: "badge",
  });
  badge.textContent = `#${cell.badge}`;
  group.appendChild(badge);
  if (cell.color && palette[cell.color - 1]?.numbered) {
    const num = el("text", { x: at.x, y: at.y - radius - 4, class: "color-number" });
    num.textContent = `c${cell.color}`;
    group.appendChild(num);
  }
  svg.appendChild(group);
}

export function renderBoard(
  root: HTMLElement,
  model: BoardModel,
  graph: GraphJson,
  ordering: number[],
  selectedColor: number | null,
  showStrip: boolean,
  handlers: RenderHandlers,
): void {
  root.textContent = "";
  const svg = el("svg", {
    viewBox: `0 0 ${WIDTH} ${showStrip ? HEIGHT : GRAPH_HEIGHT}`,
    width: "100%",
  });
  const spots = forceLayout(graph.n, graph.edges, WIDTH, GRAPH_HEIGHT);
  for (const [u, v] of graph.edges) {
    svg.appendChild(
      el("line", {
        x1: spots[u].x,
        y1: spots[u].y,
        x2: spots[v].x,
        y2: spots[v].y,
        class: "edge",
      }),
    );
  }
  for (const cell of model.cells) {
    drawVertex(svg, cell, spots[cell.id], model.palette, selectedColor, handlers);
  }
  if (showStrip) {
    const strip = stripLayout(ordering, WIDTH, STRIP_Y);
    for (const [u, v] of graph.edges) {
      const a = strip.get(u)!;
      const b = strip.get(v)!;
      const spanHalf = Math.abs(a.x - b.x) / 2;
      const mid = (a.x + b.x) / 2;
      const arc = el("path", {
        d: `M ${a.x} ${a.y - 12} Q ${mid} ${a.y - 12 - Math.min(spanHalf, 60)} ${b.x} ${b.y - 12}`,
        class: "edge strip-edge",
      });
      svg.appendChild(arc);
    }
    for (const cell of model.cells) {
      drawVertex(
        svg,
        { ...cell, clickable: false },
        strip.get(cell.id)!,
        model.palette,
        null,
        handlers,
        12,
      );
    }
  }
  root.appendChild(svg);
}

export function renderPalette(
  root: HTMLElement,
  model: BoardModel,
  selectedColor: number | null,
  enabledColors: number[] | null,
  handlers: RenderHandlers,
): void {
  root.textContent = "";
  for (const swatch of model.palette) {
    const button = document.createElement("button");
    button.className = "swatch" + (swatch.color === selectedColor ? " selected" : "");
    button.style.background = swatch.css;
    button.textContent = swatch.numbered ? `c${swatch.color}` : String(swatch.color);
    const usable =
      model.humanTurn && (enabledColors === null || enabledColors.includes(swatch.color));
    button.disabled = !usable;
    button.addEventListener("click", () => handlers.onColorPick(swatch.color));
    root.appendChild(button);
  }
}

export function renderChain(root: HTMLElement, chain: string[]): void {
  root.textContent = "";
  if (!chain.length) {
    root.textContent = "(no activations last turn)";
    return;
  }
  const list = document.createElement("ol");
  for (const line of chain) {
    const item = document.createElement("li");
    item.textContent = line;
    list.appendChild(item);
  }
  root.appendChild(list);
}

export function renderError(root: HTMLElement, message: string, payload?: unknown): void {
  root.textContent = "";
  const box = document.createElement("div");
  box.className = "error-panel";
  const head = document.createElement("strong");
  head.textContent = message;
  box.appendChild(head);
  if (payload !== undefined) {
    const pre = document.createElement("pre");
    pre.textContent = JSON.stringify(payload, null, 2);
    box.appendChild(pre);
  }
  root.appendChild(box);
}
