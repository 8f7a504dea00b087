// The board: renders the complex, mirrors engine state, and forwards
// clicks as protocol moves.
//
// Invariant: every number on screen (balances, degree coordinates, move
// count) is copied verbatim from the last engine status; the board never
// derives one number from another.  Faces of the played dimension carry
// data-face attributes; balances carry data-balance-for; degree cells
// carry data-degree-index.  Tests (and people) read those.

import { centroid, layoutVertices, type Point } from "./layout.js";
import {
  EngineError,
  intSign,
  intText,
  type ComplexDocument,
  type HintResponse,
  type ProtocolClient,
  type ScriptMove,
  type Status,
} from "./protocol.js";

const SVG = "http://www.w3.org/2000/svg";

export type MoveKind = "lend" | "borrow";

export function faceKey(face: number[]): string {
  return face.join(",");
}

function facesOfDimension(doc: ComplexDocument, dim: number): number[][] {
  const seen = new Set<string>();
  const out: number[][] = [];
  for (const facet of doc.facets) {
    const sorted = [...facet].sort((a, b) => a - b);
    const choose = (start: number, acc: number[]) => {
      if (acc.length === dim + 1) {
        const key = faceKey(acc);
        if (!seen.has(key)) {
          seen.add(key);
          out.push([...acc]);
        }
        return;
      }
      for (let k = start; k < sorted.length; k++) choose(k + 1, [...acc, sorted[k]!]);
    };
    choose(0, []);
  }
  out.sort((a, b) => {
    for (let k = 0; k < a.length; k++) {
      if (a[k]! !== b[k]!) return a[k]! - b[k]!;
    }
    return 0;
  });
  return out;
}

export interface BoardOptions {
  client: ProtocolClient;
  doc: ComplexDocument;
  dim: number;
  root: HTMLElement;
  onClosed?: () => void;
}

export class Board {
  readonly client: ProtocolClient;
  readonly doc: ComplexDocument;
  readonly dim: number;
  readonly root: HTMLElement;
  session = "";
  status: Status | null = null;
  selected: number[] | null = null;
  private hintEpoch = 0;
  private onClosed: (() => void) | undefined;
  private playedFaces: number[][];

  constructor(options: BoardOptions) {
    this.client = options.client;
    this.doc = options.doc;
    this.dim = options.dim;
    this.root = options.root;
    this.onClosed = options.onClosed;
    this.playedFaces = facesOfDimension(this.doc, this.dim);
  }

  async start(): Promise<void> {
    const chain = this.doc.chain;
    const opened = await this.client.newSession(
      this.doc,
      this.dim,
      chain && chain.dim === this.dim ? chain.coeffs : undefined,
    );
    this.session = opened.session;
    this.applyStatus(opened.status);
  }

  // --- engine state mirror -------------------------------------------------

  applyStatus(status: Status): void {
    this.status = status;
    this.render();
  }

  async submitAction(face: number[], kind: MoveKind): Promise<void> {
    try {
      const out = await this.client.move(this.session, face, kind);
      this.hintEpoch++;
      this.applyStatus(out.status);
    } catch (err) {
      if (err instanceof EngineError) {
        this.toast(err.message);
        return; // state unchanged on rejection
      }
      throw err;
    }
  }

  async undo(): Promise<void> {
    try {
      const out = await this.client.undo(this.session);
      this.hintEpoch++;
      this.applyStatus(out.status);
    } catch (err) {
      if (err instanceof EngineError) {
        this.toast(err.message);
        return;
      }
      throw err;
    }
  }

  async syncState(): Promise<void> {
    try {
      const out = await this.client.state(this.session);
      this.applyStatus(out.status);
    } catch (err) {
      if (err instanceof EngineError) {
        this.onClosed?.();
        return;
      }
      throw err;
    }
  }

  async requestHint(): Promise<void> {
    const epoch = this.hintEpoch;
    const panel = this.root.querySelector<HTMLElement>("[data-hint-panel]");
    if (panel) panel.textContent = "thinking…";
    const hint = await this.client.hint(this.session);
    // a hint computed at an older history is never displayed
    if (
      epoch !== this.hintEpoch ||
      hint.stale ||
      (this.status && hint.history_length !== this.status.move_count)
    ) {
      if (panel && epoch === this.hintEpoch) panel.textContent = "hint outdated";
      return;
    }
    this.renderHint(hint);
  }

  // --- rendering ------------------------------------------------------------

  private balanceFor(face: number[]): string {
    if (!this.status) return "";
    const index = this.playedFaces.findIndex((f) => faceKey(f) === faceKey(face));
    const value = this.status.current[index];
    return value === undefined ? "" : intText(value);
  }

  render(): void {
    const status = this.status;
    if (!status) return;
    this.root.innerHTML = "";

    const banner = document.createElement("div");
    banner.dataset.banner = status.won ? "won" : "playing";
    banner.className = status.won ? "banner won" : "banner";
    banner.textContent = status.won
      ? "all faces out of debt: game won"
      : `move ${status.move_count}`;
    this.root.appendChild(banner);

    this.root.appendChild(this.renderSurface());
    this.root.appendChild(this.renderControls());
    this.root.appendChild(this.renderDegreePanel());

    const hintPanel = document.createElement("div");
    hintPanel.dataset.hintPanel = "";
    hintPanel.className = "hint-panel";
    this.root.appendChild(hintPanel);

    const toast = document.createElement("div");
    toast.dataset.toast = "";
    toast.className = "toast";
    this.root.appendChild(toast);
  }

  private renderSurface(): Element {
    // geometric view up to dimension 2; adjacency view beyond
    if ((this.doc.facets.reduce((d, f) => Math.max(d, f.length - 1), 0) ?? 0) <= 2) {
      return this.renderGeometric();
    }
    return this.renderAdjacency();
  }

  private svgRoot(): { svg: SVGSVGElement; toScreen: (p: Point) => Point } {
    const svg = document.createElementNS(SVG, "svg") as SVGSVGElement;
    svg.setAttribute("viewBox", "0 0 640 480");
    svg.setAttribute("class", "board");
    const positions = layoutVertices(this.doc);
    const xs = [...positions.values()].map((p) => p.x);
    const ys = [...positions.values()].map((p) => p.y);
    const minX = Math.min(...xs), maxX = Math.max(...xs);
    const minY = Math.min(...ys), maxY = Math.max(...ys);
    const spanX = Math.max(maxX - minX, 1e-6);
    const spanY = Math.max(maxY - minY, 1e-6);
    const scale = Math.min(520 / spanX, 360 / spanY);
    const toScreen = (p: Point): Point => ({
      x: 60 + (p.x - minX) * scale,
      y: 60 + (p.y - minY) * scale,
    });
    return { svg, toScreen };
  }

  private renderGeometric(): Element {
    const { svg, toScreen } = this.svgRoot();
    const positions = layoutVertices(this.doc);
    const at = (v: number) => toScreen(positions.get(v)!);

    const triangles = facesOfDimension(this.doc, 2);
    for (const tri of triangles) {
      const pts = tri.map(at);
      const poly = document.createElementNS(SVG, "polygon");
      poly.setAttribute("points", pts.map((p) => `${p.x},${p.y}`).join(" "));
      poly.setAttribute("class", "triangle");
      this.wireFace(poly, tri);
      svg.appendChild(poly);
      if (this.dim === 2) {
        const c = centroid(pts);
        svg.appendChild(this.balanceLabel(tri, c));
      }
    }
    const edges = facesOfDimension(this.doc, 1);
    for (const edge of edges) {
      const [a, b] = edge as [number, number];
      const pa = at(a), pb = at(b);
      const line = document.createElementNS(SVG, "line");
      line.setAttribute("x1", String(pa.x));
      line.setAttribute("y1", String(pa.y));
      line.setAttribute("x2", String(pb.x));
      line.setAttribute("y2", String(pb.y));
      line.setAttribute("class", "edge");
      this.wireFace(line, edge);
      svg.appendChild(line);
      // arrowhead marks the orientation (low label to high label)
      const tip = { x: pa.x + (pb.x - pa.x) * 0.62, y: pa.y + (pb.y - pa.y) * 0.62 };
      const angle = Math.atan2(pb.y - pa.y, pb.x - pa.x);
      const arrow = document.createElementNS(SVG, "polygon");
      const size = 7;
      const left = {
        x: tip.x - size * Math.cos(angle - 0.45),
        y: tip.y - size * Math.sin(angle - 0.45),
      };
      const right = {
        x: tip.x - size * Math.cos(angle + 0.45),
        y: tip.y - size * Math.sin(angle + 0.45),
      };
      arrow.setAttribute(
        "points",
        `${tip.x},${tip.y} ${left.x},${left.y} ${right.x},${right.y}`,
      );
      arrow.setAttribute("class", "arrow");
      svg.appendChild(arrow);
      if (this.dim === 1) {
        const mid = { x: (pa.x + pb.x) / 2, y: (pa.y + pb.y) / 2 - 8 };
        svg.appendChild(this.balanceLabel(edge, mid));
      }
    }
    for (const [v, p] of positions) {
      const s = toScreen(p);
      const disc = document.createElementNS(SVG, "circle");
      disc.setAttribute("cx", String(s.x));
      disc.setAttribute("cy", String(s.y));
      disc.setAttribute("r", "14");
      disc.setAttribute("class", "vertex");
      this.wireFace(disc, [v]);
      svg.appendChild(disc);
      const label = document.createElementNS(SVG, "text");
      label.setAttribute("x", String(s.x));
      label.setAttribute("y", String(s.y + 4));
      label.setAttribute("class", "vertex-label");
      label.textContent = String(v);
      svg.appendChild(label);
      if (this.dim === 0) {
        svg.appendChild(this.balanceLabel([v], { x: s.x, y: s.y - 20 }));
      }
    }
    return svg;
  }

  private renderAdjacency(): Element {
    // higher-dimensional complexes: one node per played face, linked when
    // two faces share a face one dimension down; same click semantics
    const faces = this.playedFaces;
    const list = document.createElement("div");
    list.className = "adjacency";
    for (const face of faces) {
      const node = document.createElement("button");
      node.className = "facenode";
      this.wireFace(node, face);
      const title = document.createElement("span");
      title.textContent = face.join("");
      const balance = document.createElement("span");
      balance.dataset.balanceFor = faceKey(face);
      balance.textContent = this.balanceFor(face);
      node.append(title, " $", balance);
      list.appendChild(node);
    }
    return list;
  }

  private balanceLabel(face: number[], p: Point): Element {
    const text = document.createElementNS(SVG, "text");
    text.setAttribute("x", String(p.x));
    text.setAttribute("y", String(p.y));
    text.setAttribute("class", "balance");
    (text as unknown as HTMLElement).dataset.balanceFor = faceKey(face);
    const value = this.balanceFor(face);
    text.textContent = `$${value}`;
    if (value.startsWith("-")) text.setAttribute("class", "balance debt");
    return text;
  }

  private wireFace(el: Element, face: number[]): void {
    if (face.length - 1 !== this.dim) return;
    (el as unknown as HTMLElement).dataset.face = faceKey(face);
    el.addEventListener("click", () => {
      this.selected = face;
      for (const other of this.root.querySelectorAll("[data-face]")) {
        other.classList.remove("selected");
      }
      el.classList.add("selected");
      const label = this.root.querySelector<HTMLElement>("[data-selected-face]");
      if (label) label.textContent = face.join("");
    });
    el.classList.add("clickable");
  }

  private renderControls(): Element {
    const bar = document.createElement("div");
    bar.className = "controls";
    const selected = document.createElement("span");
    selected.dataset.selectedFace = "";
    selected.textContent = this.selected ? this.selected.join("") : "—";
    const lend = document.createElement("button");
    lend.dataset.action = "lend";
    lend.textContent = "lend";
    const borrow = document.createElement("button");
    borrow.dataset.action = "borrow";
    borrow.textContent = "borrow";
    const undoBtn = document.createElement("button");
    undoBtn.dataset.action = "undo";
    undoBtn.textContent = "undo";
    const hintBtn = document.createElement("button");
    hintBtn.dataset.action = "hint";
    hintBtn.textContent = "hint";
    lend.addEventListener("click", () => {
      if (this.selected) void this.submitAction(this.selected, "lend");
      else this.toast("select a face first");
    });
    borrow.addEventListener("click", () => {
      if (this.selected) void this.submitAction(this.selected, "borrow");
      else this.toast("select a face first");
    });
    undoBtn.addEventListener("click", () => void this.undo());
    hintBtn.addEventListener("click", () => void this.requestHint());
    bar.append("face ", selected, " ", lend, borrow, undoBtn, hintBtn);
    return bar;
  }

  private renderDegreePanel(): Element {
    const panel = document.createElement("div");
    panel.className = "degree-panel";
    panel.dataset.degreePanel = "";
    const title = document.createElement("span");
    title.textContent = "degree ";
    panel.appendChild(title);
    const status = this.status!;
    let anyNegative = false;
    status.degree.forEach((value, index) => {
      const cell = document.createElement("span");
      cell.dataset.degreeIndex = String(index);
      cell.textContent = intText(value);
      cell.className = "degree-cell";
      if (intSign(value) < 0) {
        cell.classList.add("negative");
        cell.title = "provably unwinnable: a degree coordinate is negative";
        anyNegative = true;
      }
      panel.appendChild(cell);
    });
    if (anyNegative) {
      const note = document.createElement("span");
      note.dataset.unwinnableNote = "";
      note.className = "unwinnable-note";
      note.textContent = "provably unwinnable";
      panel.appendChild(note);
    }
    return panel;
  }

  private renderHint(hint: HintResponse): void {
    const panel = this.root.querySelector<HTMLElement>("[data-hint-panel]");
    if (!panel) return;
    panel.innerHTML = "";
    panel.dataset.hintWinnable = String(hint.winnable);
    if (!hint.winnable) {
      panel.textContent = "no winning line exists from this position";
      return;
    }
    const script = hint.script ?? [];
    if (script.length === 0) {
      panel.textContent = "already effective, nothing to do";
      return;
    }
    const label = document.createElement("span");
    label.textContent = "winning line: ";
    panel.appendChild(label);
    script.forEach((move: ScriptMove) => {
      const step = document.createElement("span");
      step.className = "hint-step";
      step.textContent = `${move.kind} ${move.face.join("")}`;
      panel.appendChild(step);
    });
  }

  toast(message: string): void {
    const el = this.root.querySelector<HTMLElement>("[data-toast]");
    if (el) {
      el.textContent = message;
      el.classList.add("visible");
    }
  }
}
