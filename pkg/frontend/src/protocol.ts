// Client for the engine's JSON protocol over HTTP (POST /api, one JSON
// object per request/response). The client owns two invariants the UI
// relies on:
//   - at most one in-flight request per session (requests are serialized
//     through a promise chain), and
//   - hint responses are delivered with the history length they were
//     computed at, so callers can drop stale ones.

export type WireInt = number | string;

export interface Status {
  won: boolean;
  current: WireInt[];
  degree: WireInt[];
  net_firing_vector: WireInt[];
  move_count: number;
}

export interface ScriptMove {
  face: number[];
  kind: "lend" | "borrow";
}

export interface HintResponse {
  winnable: boolean;
  history_length: number;
  script?: ScriptMove[];
  stale?: boolean;
}

export interface ComplexDocument {
  facets: number[][];
  chain?: { dim: number; coeffs: WireInt[] };
  layout?: Record<string, [number, number]>;
}

export class EngineError extends Error {}

// exact sign/zero tests for wire integers (values beyond 2^53 arrive as
// decimal strings; the UI never does arithmetic on them, only display
// and sign inspection)
export function intSign(v: WireInt): -1 | 0 | 1 {
  const b = typeof v === "number" ? BigInt(v) : BigInt(v);
  return b < 0n ? -1 : b > 0n ? 1 : 0;
}

export function intText(v: WireInt): string {
  return typeof v === "number" ? String(v) : v;
}

export class ProtocolClient {
  private base: string;
  private queue: Promise<unknown> = Promise.resolve();
  private nextId = 1;

  constructor(base: string) {
    this.base = base.replace(/\/$/, "");
  }

  private post<T>(body: Record<string, unknown>): Promise<T> {
    const run = async (): Promise<T> => {
      const response = await fetch(`${this.base}/api`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ ...body, id: `c${this.nextId++}` }),
      });
      const payload = (await response.json()) as T & { error?: string };
      if (payload && typeof payload === "object" && "error" in payload && payload.error) {
        throw new EngineError(payload.error);
      }
      return payload;
    };
    const chained = this.queue.then(run, run);
    // keep the chain alive regardless of individual failures
    this.queue = chained.then(
      () => undefined,
      () => undefined,
    );
    return chained;
  }

  newSession(
    complex: ComplexDocument,
    dim?: number,
    chain?: WireInt[],
  ): Promise<{ session: string; status: Status }> {
    const body: Record<string, unknown> = { op: "new", complex };
    if (dim !== undefined) body.dim = dim;
    if (chain !== undefined) body.chain = chain;
    return this.post(body);
  }

  move(
    session: string,
    face: number[],
    kind: "lend" | "borrow",
  ): Promise<{ status: Status }> {
    return this.post({ op: "move", session, face, kind });
  }

  undo(session: string): Promise<{ status: Status }> {
    return this.post({ op: "undo", session });
  }

  state(session: string): Promise<{ status: Status }> {
    return this.post({ op: "state", session });
  }

  hint(session: string): Promise<HintResponse> {
    return this.post({ op: "hint", session });
  }

  close(session: string): Promise<{ closed: string }> {
    return this.post({ op: "close", session });
  }
}
