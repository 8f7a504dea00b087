// Board logic against a scripted client: every displayed number must be
// copied from engine status, rejections leave the DOM unchanged, and
// stale hints are never shown.

import { beforeEach, describe, expect, it } from "vitest";

import { Board } from "../src/board.js";
import type { ComplexDocument, Status } from "../src/protocol.js";
import { EngineError, ProtocolClient } from "../src/protocol.js";

const DIAMOND: ComplexDocument = {
  facets: [[1, 2, 3], [2, 3, 4]],
  chain: { dim: 1, coeffs: [-1, 2, -3, 2, -1] },
  layout: { "1": [0, -1.8], "2": [-1, 0], "3": [1, 0], "4": [0, 1.8] },
};

function makeStatus(current: (number | string)[], extra: Partial<Status> = {}): Status {
  return {
    won: current.every((v) => !String(v).startsWith("-")),
    current,
    degree: [1, 1, 1],
    net_firing_vector: current.map(() => 0),
    move_count: 0,
    ...extra,
  };
}

class ScriptedClient extends ProtocolClient {
  script: Record<string, (body?: any) => any> = {};
  sent: any[] = [];

  constructor() {
    super("http://scripted");
  }

  private run(op: string, body?: any) {
    this.sent.push({ op, ...body });
    const fn = this.script[op];
    if (!fn) throw new Error(`unscripted op ${op}`);
    const out = fn(body);
    if (out instanceof EngineError) return Promise.reject(out);
    return Promise.resolve(out);
  }

  override newSession(): Promise<any> {
    return this.run("new");
  }
  override move(_s: string, face: number[], kind: "lend" | "borrow"): Promise<any> {
    return this.run("move", { face, kind });
  }
  override undo(): Promise<any> {
    return this.run("undo");
  }
  override state(): Promise<any> {
    return this.run("state");
  }
  override hint(): Promise<any> {
    return this.run("hint");
  }
  override close(): Promise<any> {
    return this.run("close");
  }
}

function click(el: Element | null): void {
  if (!el) throw new Error("element not found");
  el.dispatchEvent(new MouseEvent("click", { bubbles: true }));
}


describe("board", () => {
  let root: HTMLElement;
  let client: ScriptedClient;

  beforeEach(() => {
    document.body.innerHTML = '<div id="root"></div>';
    root = document.getElementById("root")!;
    client = new ScriptedClient();
    client.script.new = () => ({
      session: "s1",
      status: makeStatus([-1, 2, -3, 2, -1], { won: false }),
    });
  });

  it("renders balances verbatim from the engine status", async () => {
    const board = new Board({ client, doc: DIAMOND, dim: 1, root });
    await board.start();
    const label = root.querySelector('[data-balance-for="2,3"]');
    expect(label?.textContent).toBe("$-3");
    const all = [...root.querySelectorAll("[data-balance-for]")].map(
      (el) => el.textContent,
    );
    expect(all).toEqual(["$-1", "$2", "$-3", "$2", "$-1"]);
  });

  it("renders big decimal-string balances without arithmetic", async () => {
    client.script.new = () => ({
      session: "s1",
      status: makeStatus(["18014398509481985", 0, 0, 0, "-2"], { won: false }),
    });
    const board = new Board({ client, doc: DIAMOND, dim: 1, root });
    await board.start();
    const label = root.querySelector('[data-balance-for="1,2"]');
    expect(label?.textContent).toBe("$18014398509481985");
  });

  it("click selects a face; lend sends the protocol move", async () => {
    client.script.move = (body: any) => ({
      status: makeStatus([1, 0, 0, 1, 0], { won: true, move_count: 1 }),
    });
    const board = new Board({ client, doc: DIAMOND, dim: 1, root });
    await board.start();
    click(root.querySelector('[data-face="1,3"]'));
    click(root.querySelector('[data-action="lend"]'));
    await Promise.resolve();
    await new Promise((r) => setTimeout(r, 0));
    expect(client.sent.at(-1)).toMatchObject({
      op: "move",
      face: [1, 3],
      kind: "lend",
    });
    expect(root.querySelector('[data-banner="won"]')).toBeTruthy();
  });

  it("engine rejection surfaces as a toast and leaves state unchanged", async () => {
    client.script.move = () => new EngineError("unknown face (1, 4)");
    const board = new Board({ client, doc: DIAMOND, dim: 1, root });
    await board.start();
    const before = [...root.querySelectorAll("[data-balance-for]")].map(
      (el) => el.textContent,
    );
    board.selected = [1, 4]; // stale board: face does not exist server-side
    await board.submitAction([1, 4], "lend");
    const after = [...root.querySelectorAll("[data-balance-for]")].map(
      (el) => el.textContent,
    );
    expect(after).toEqual(before);
    expect(root.querySelector("[data-toast]")?.textContent).toContain("unknown face");
  });

  it("marks negative degree coordinates as provably unwinnable", async () => {
    client.script.new = () => ({
      session: "s1",
      status: makeStatus([1, -1, -1], { degree: [0, -2], won: false }),
    });
    const board = new Board({
      client,
      doc: { facets: [[1, 2, 3]], chain: { dim: 1, coeffs: [1, -1, -1] } },
      dim: 1,
      root,
    });
    await board.start();
    const cell = root.querySelector('[data-degree-index="1"]');
    expect(cell?.classList.contains("negative")).toBe(true);
    expect(root.querySelector("[data-unwinnable-note]")).toBeTruthy();
  });

  it("never displays a stale hint", async () => {
    let release: (value: unknown) => void = () => undefined;
    client.script.hint = () =>
      new Promise((resolve) => {
        release = () =>
          resolve({ winnable: true, history_length: 0,
            script: [{ face: [1, 3], kind: "lend" }] });
      }) as any;
    client.script.move = () => ({
      status: makeStatus([0, 1, 0, 1, 1], { won: true, move_count: 1 }),
    });
    const board = new Board({ client, doc: DIAMOND, dim: 1, root });
    await board.start();
    const pending = board.requestHint();
    await board.submitAction([1, 3], "lend"); // invalidates the hint
    release(undefined);
    await pending;
    const panel = root.querySelector("[data-hint-panel]");
    expect(panel?.getAttribute("data-hint-winnable")).toBeNull();
    expect(panel?.textContent).not.toContain("winning line");
  });

  it("displays a fresh hint script", async () => {
    client.script.hint = () => ({
      winnable: true,
      history_length: 0,
      script: [
        { face: [1, 3], kind: "lend" },
        { face: [2, 3], kind: "borrow" },
      ],
    });
    const board = new Board({ client, doc: DIAMOND, dim: 1, root });
    await board.start();
    await board.requestHint();
    const steps = [...root.querySelectorAll(".hint-step")].map((el) => el.textContent);
    expect(steps).toEqual(["lend 13", "borrow 23"]);
  });

  it("sync_state reconciles and closed sessions return to the loader", async () => {
    let closed = false;
    client.script.state = () => new EngineError("unknown session 's1'");
    const board = new Board({
      client,
      doc: DIAMOND,
      dim: 1,
      root,
      onClosed: () => {
        closed = true;
      },
    });
    await board.start();
    await board.syncState();
    expect(closed).toBe(true);
  });

  it("dimension-zero boards label vertices with balances", async () => {
    client.script.new = () => ({
      session: "s1",
      status: makeStatus([1, -1, 0], { degree: [0], won: false }),
    });
    const board = new Board({
      client,
      doc: { facets: [[1, 2], [1, 3], [2, 3]] },
      dim: 0,
      root,
    });
    await board.start();
    const labels = [...root.querySelectorAll("[data-balance-for]")].map(
      (el) => el.textContent,
    );
    expect(labels).toEqual(["$1", "$-1", "$0"]);
  });
});
