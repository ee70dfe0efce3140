// Deterministic force-directed layout plus the left-to-right ordering strip.
// Plain iterations, no randomness: start on a circle, relax with spring and
// repulsion forces, keep everything inside the viewport.

export interface Point {
  x: number;
  y: number;
}

export function circleLayout(n: number, width: number, height: number): Point[] {
  const cx = width / 2;
  const cy = height / 2;
  const r = Math.min(width, height) * 0.38;
  const pts: Point[] = [];
  for (let i = 0; i < n; i += 1) {
    const angle = (2 * Math.PI * i) / Math.max(n, 1) - Math.PI / 2;
    pts.push({ x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) });
  }
  return pts;
}

export function forceLayout(
  n: number,
  edges: [number, number][],
  width: number,
  height: number,
  iterations = 150,
): Point[] {
  const pts = circleLayout(n, width, height);
  if (n <= 2) {
    return pts;
  }
  const ideal = Math.min(width, height) / Math.sqrt(n + 1) / 1.2;
  const step0 = ideal / 3;
  for (let iter = 0; iter < iterations; iter += 1) {
    const step = step0 * (1 - iter / iterations) + 0.5;
    const fx = new Array(n).fill(0);
    const fy = new Array(n).fill(0);
    for (let u = 0; u < n; u += 1) {
      for (let v = u + 1; v < n; v += 1) {
        let dx = pts[u].x - pts[v].x;
        let dy = pts[u].y - pts[v].y;
        let d2 = dx * dx + dy * dy;
        if (d2 < 0.01) {
          dx = 0.1 * (u - v);
          dy = 0.1;
          d2 = dx * dx + dy * dy;
        }
        const rep = (ideal * ideal) / d2;
        fx[u] += dx * rep;
        fy[u] += dy * rep;
        fx[v] -= dx * rep;
        fy[v] -= dy * rep;
      }
    }
    for (const [u, v] of edges) {
      const dx = pts[u].x - pts[v].x;
      const dy = pts[u].y - pts[v].y;
      const d = Math.sqrt(dx * dx + dy * dy) || 0.1;
      const att = (d * d) / ideal / d;
      fx[u] -= dx * att;
      fy[u] -= dy * att;
      fx[v] += dx * att;
      fy[v] += dy * att;
    }
    for (let v = 0; v < n; v += 1) {
      const norm = Math.sqrt(fx[v] * fx[v] + fy[v] * fy[v]) || 1;
      const scale = Math.min(norm, step) / norm;
      pts[v].x += fx[v] * scale;
      pts[v].y += fy[v] * scale;
      const margin = 24;
      pts[v].x = Math.min(width - margin, Math.max(margin, pts[v].x));
      pts[v].y = Math.min(height - margin, Math.max(margin, pts[v].y));
    }
  }
  return pts;
}

// Positions for the linear strip that mirrors the ordering left to right.
export function stripLayout(
  ordering: number[],
  width: number,
  y: number,
): Map<number, Point> {
  const out = new Map<number, Point>();
  const n = ordering.length;
  const margin = 30;
  const span = Math.max(width - 2 * margin, 1);
  ordering.forEach((v, i) => {
    const x = n === 1 ? width / 2 : margin + (span * i) / (n - 1);
    out.set(v, { x, y });
  });
  return out;
}
