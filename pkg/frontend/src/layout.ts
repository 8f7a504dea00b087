// Vertex placement: use the document's layout hint when present and fall
// back to a deterministic force layout (fixed iteration count, golden-angle
// initial ring) for the rest.

import type { ComplexDocument } from "./protocol.js";

export type Point = { x: number; y: number };

export function vertexSet(doc: ComplexDocument): number[] {
  const seen = new Set<number>();
  for (const facet of doc.facets) for (const v of facet) seen.add(v);
  return [...seen].sort((a, b) => a - b);
}

export function edgeSet(doc: ComplexDocument): [number, number][] {
  const seen = new Set<string>();
  const out: [number, number][] = [];
  for (const facet of doc.facets) {
    for (let i = 0; i < facet.length; i++) {
      for (let j = i + 1; j < facet.length; j++) {
        const a = facet[i]!;
        const b = facet[j]!;
        const key = a < b ? `${a},${b}` : `${b},${a}`;
        if (!seen.has(key)) {
          seen.add(key);
          out.push(a < b ? [a, b] : [b, a]);
        }
      }
    }
  }
  out.sort((p, q) => p[0] - q[0] || p[1] - q[1]);
  return out;
}

export function layoutVertices(doc: ComplexDocument): Map<number, Point> {
  const vertices = vertexSet(doc);
  const positions = new Map<number, Point>();
  const hinted = doc.layout ?? {};
  for (const v of vertices) {
    const hint = hinted[String(v)];
    if (hint) positions.set(v, { x: hint[0], y: hint[1] });
  }
  const free = vertices.filter((v) => !positions.has(v));
  if (free.length === 0) return positions;

  // start the free vertices on a ring (golden-angle spacing keeps the
  // start symmetric-free and deterministic)
  free.forEach((v, k) => {
    const angle = k * 2.39996322972865332;
    const r = 1 + 0.15 * k;
    positions.set(v, { x: r * Math.cos(angle), y: r * Math.sin(angle) });
  });

  const edges = edgeSet(doc);
  for (let iter = 0; iter < 250; iter++) {
    const force = new Map<number, Point>(vertices.map((v) => [v, { x: 0, y: 0 }]));
    for (let i = 0; i < vertices.length; i++) {
      for (let j = i + 1; j < vertices.length; j++) {
        const a = vertices[i]!;
        const b = vertices[j]!;
        const pa = positions.get(a)!;
        const pb = positions.get(b)!;
        const dx = pa.x - pb.x;
        const dy = pa.y - pb.y;
        const d2 = Math.max(dx * dx + dy * dy, 1e-4);
        const push = 0.9 / d2;
        force.get(a)!.x += dx * push;
        force.get(a)!.y += dy * push;
        force.get(b)!.x -= dx * push;
        force.get(b)!.y -= dy * push;
      }
    }
    for (const [a, b] of edges) {
      const pa = positions.get(a)!;
      const pb = positions.get(b)!;
      const dx = pb.x - pa.x;
      const dy = pb.y - pa.y;
      const dist = Math.sqrt(dx * dx + dy * dy) || 1e-2;
      const pull = 0.06 * (dist - 1.6);
      force.get(a)!.x += (dx / dist) * pull;
      force.get(a)!.y += (dy / dist) * pull;
      force.get(b)!.x -= (dx / dist) * pull;
      force.get(b)!.y -= (dy / dist) * pull;
    }
    const step = 0.12;
    for (const v of free) {
      const p = positions.get(v)!;
      const f = force.get(v)!;
      positions.set(v, { x: p.x + step * f.x, y: p.y + step * f.y });
    }
  }
  return positions;
}

export function centroid(points: Point[]): Point {
  const x = points.reduce((s, p) => s + p.x, 0) / points.length;
  const y = points.reduce((s, p) => s + p.y, 0) / points.length;
  return { x, y };
}
