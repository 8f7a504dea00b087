// End-to-end: the real engine (spawned `chipfire serve`) drives the real
// board in a DOM.  The displayed balances are compared against a parallel
// protocol client on every step, so the UI provably shows engine numbers
// and nothing else.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { Board, faceKey } from "../src/board.js";
import { GALLERY } from "../src/examples.js";
import { intText, ProtocolClient, type Status } from "../src/protocol.js";

const PORT = 8694;
const BASE = `http://127.0.0.1:${PORT}`;
let server: ChildProcess;

async function waitForServer(): Promise<void> {
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      const res = await fetch(`${BASE}/examples`);
      if (res.ok) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  throw new Error("engine server did not come up");
}

beforeAll(async () => {
  server = spawn("chipfire", ["serve", "--port", String(PORT)], {
    stdio: ["ignore", "ignore", "pipe"],
  });
  await waitForServer();
});

afterAll(() => {
  server?.kill();
});

function displayedBalances(root: HTMLElement): Map<string, string> {
  const out = new Map<string, string>();
  for (const el of root.querySelectorAll<HTMLElement>("[data-balance-for]")) {
    out.set(el.dataset.balanceFor!, (el.textContent ?? "").replace(/^\$/, ""));
  }
  return out;
}

function facesOf(doc: { facets: number[][] }, dim: number): number[][] {
  const seen = new Set<string>();
  const out: number[][] = [];
  const choose = (facet: number[], start: number, acc: number[]) => {
    if (acc.length === dim + 1) {
      const key = acc.join(",");
      if (!seen.has(key)) {
        seen.add(key);
        out.push([...acc]);
      }
      return;
    }
    for (let k = start; k < facet.length; k++) choose(facet, k + 1, [...acc, facet[k]!]);
  };
  for (const facet of doc.facets) choose([...facet].sort((a, b) => a - b), 0, []);
  out.sort((a, b) => {
    for (let k = 0; k < a.length; k++) if (a[k]! !== b[k]!) return a[k]! - b[k]!;
    return 0;
  });
  return out;
}

async function expectBoardMatchesEngine(
  board: Board,
  watcher: ProtocolClient,
  root: HTMLElement,
): Promise<Status> {
  const { status } = await watcher.state(board.session);
  const doc = board.doc;
  const faces = facesOf(doc, board.dim);
  const shown = displayedBalances(root);
  faces.forEach((face, index) => {
    expect(shown.get(faceKey(face))).toBe(intText(status.current[index]!));
  });
  return status;
}

function click(el: Element | null): void {
  if (!el) throw new Error("element not found");
  el.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}


describe("playground against the live engine", () => {
  it("wins the diamond game with the two published clicks", async () => {
    document.body.innerHTML = '<div id="root"></div>';
    const root = document.getElementById("root")!;
    const entry = GALLERY.find((e) => e.name === "diamond")!;
    const board = new Board({
      client: new ProtocolClient(BASE),
      doc: entry.document,
      dim: entry.dim,
      root,
    });
    await board.start();
    const watcher = new ProtocolClient(BASE); // the parallel client

    let status = await expectBoardMatchesEngine(board, watcher, root);
    expect(status.won).toBe(false);
    expect(root.querySelector('[data-banner="won"]')).toBeNull();

    // click edge 13, lend
    click(root.querySelector('[data-face="1,3"]'));
    click(root.querySelector('[data-action="lend"]'));
    await new Promise((r) => setTimeout(r, 150));
    status = await expectBoardMatchesEngine(board, watcher, root);
    expect(status.move_count).toBe(1);

    // click edge 23, borrow
    click(root.querySelector('[data-face="2,3"]'));
    click(root.querySelector('[data-action="borrow"]'));
    await new Promise((r) => setTimeout(r, 150));
    status = await expectBoardMatchesEngine(board, watcher, root);

    expect(status.won).toBe(true);
    expect(status.current.map(Number)).toEqual([1, 0, 0, 1, 0]);
    const banner = root.querySelector('[data-banner="won"]');
    expect(banner).toBeTruthy();
    expect(banner?.textContent).toContain("won");
  });

  it("projective plane: zero degree on screen, hint says unwinnable", async () => {
    document.body.innerHTML = '<div id="root"></div>';
    const root = document.getElementById("root")!;
    const entry = GALLERY.find((e) => e.name === "projective_plane")!;
    const board = new Board({
      client: new ProtocolClient(BASE),
      doc: entry.document,
      dim: entry.dim,
      root,
    });
    await board.start();

    const cells = [...root.querySelectorAll("[data-degree-index]")];
    expect(cells.length).toBeGreaterThan(0);
    expect(cells.every((el) => el.textContent === "0")).toBe(true);
    expect(root.querySelector("[data-unwinnable-note]")).toBeNull();

    await board.requestHint();
    const panel = root.querySelector<HTMLElement>("[data-hint-panel]");
    expect(panel?.dataset.hintWinnable).toBe("false");
    expect(panel?.textContent).toContain("no winning line");
  });

  it("undo restores the previous engine state on screen", async () => {
    document.body.innerHTML = '<div id="root"></div>';
    const root = document.getElementById("root")!;
    const entry = GALLERY.find((e) => e.name === "simplex2")!;
    const board = new Board({
      client: new ProtocolClient(BASE),
      doc: entry.document,
      dim: entry.dim,
      root,
    });
    await board.start();
    const watcher = new ProtocolClient(BASE);
    const before = displayedBalances(root);

    click(root.querySelector('[data-face="1,3"]'));
    click(root.querySelector('[data-action="lend"]'));
    await new Promise((r) => setTimeout(r, 150));
    expect(root.querySelector('[data-banner="won"]')).toBeTruthy();

    click(root.querySelector('[data-action="undo"]'));
    await new Promise((r) => setTimeout(r, 150));
    await expectBoardMatchesEngine(board, watcher, root);
    expect(displayedBalances(root)).toEqual(before);
  });

  it("stale board clicks surface engine rejections as toasts", async () => {
    document.body.innerHTML = '<div id="root"></div>';
    const root = document.getElementById("root")!;
    const entry = GALLERY.find((e) => e.name === "diamond")!;
    const board = new Board({
      client: new ProtocolClient(BASE),
      doc: entry.document,
      dim: entry.dim,
      root,
    });
    await board.start();
    const before = displayedBalances(root);
    await board.submitAction([1, 4], "lend"); // not a face of the diamond
    expect(displayedBalances(root)).toEqual(before);
    expect(root.querySelector("[data-toast]")?.textContent).not.toBe("");
  });
});
