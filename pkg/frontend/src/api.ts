// Thin typed client for the session service. All shapes mirror the
// service JSON exactly; nothing here recomputes game state.

export type Cell = number[]; // [i, j] or [i, j, k]
export type SignedCell = number[]; // cell coordinates followed by a +-1 sign

export type BoardDoc = { cells: Cell[] };
export type ConfigDoc = { cells: SignedCell[] };

export type SwitchState = {
  id: string;
  cells: Cell[];
  sign: number;
};

export type SessionState = {
  session_id: string;
  area: number;
  score: number;
  board: BoardDoc;
  switches: SwitchState[];
  config: ConfigDoc;
  effective: ConfigDoc;
  history: string[];
  seed: number | null;
};

export type CreateSessionRequest = {
  board_spec: Record<string, unknown>;
  switch_spec?: string | Record<string, unknown>;
  config?: Record<string, unknown>;
};

export type HintResponse = {
  switch_id: string | null;
  gain: number;
};

export type SolveResponse = {
  value: number;
  assignment: Record<string, number>;
  exact: boolean;
  nodes_explored: number;
};

export class ApiError extends Error {
  status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  let response: Response;
  try {
    response = await fetch(`${base}${path}`, {
      headers: { "Content-Type": "application/json" },
      ...init,
    });
  } catch (err) {
    throw new ApiError(0, `service unreachable: ${String(err)}`);
  }
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  if (response.status === 204) return undefined as T;
  return (await response.json()) as T;
}

export class ApiClient {
  readonly base: string;

  constructor(base: string) {
    this.base = base.replace(/\/$/, "");
  }

  createSession(req: CreateSessionRequest): Promise<{ session_id: string; state: SessionState }> {
    return request(this.base, "/api/session", {
      method: "POST",
      body: JSON.stringify(req),
    });
  }

  getSession(id: string): Promise<SessionState> {
    return request(this.base, `/api/session/${id}`);
  }

  flip(id: string, switchId: string): Promise<SessionState> {
    return request(this.base, `/api/session/${id}/flip`, {
      method: "POST",
      body: JSON.stringify({ switch_id: switchId }),
    });
  }

  undo(id: string): Promise<SessionState> {
    return request(this.base, `/api/session/${id}/undo`, { method: "POST" });
  }

  hint(id: string): Promise<HintResponse> {
    return request(this.base, `/api/session/${id}/hint`);
  }

  solve(id: string, exact?: boolean): Promise<SolveResponse> {
    const query = exact === undefined ? "" : `?exact=${exact}`;
    return request(this.base, `/api/session/${id}/solve${query}`);
  }

  deleteSession(id: string): Promise<void> {
    return request(this.base, `/api/session/${id}`, { method: "DELETE" });
  }
}
