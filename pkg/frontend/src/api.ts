/** Thin typed client for the fairshare HTTP API. */

import type {
  GameCreated,
  GameDocument,
  IncentiveReport,
  SimulationCreated,
  SimulationParams,
  Solution,
  StepResult,
  Trace,
} from './types.js';

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
    public field: string | null = null,
  ) {
    super(detail);
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private base = '',
    private fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(this.base + path, init);
    let body: unknown = null;
    try {
      body = await response.json();
    } catch {
      body = null;
    }
    if (!response.ok) {
      const record = (body ?? {}) as Record<string, unknown>;
      const detail =
        typeof record.detail === 'string'
          ? record.detail
          : JSON.stringify(record.detail ?? `HTTP ${response.status}`);
      const field = typeof record.field === 'string' ? record.field : null;
      throw new ApiError(response.status, detail, field);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(payload),
    });
  }

  createGame(doc: GameDocument): Promise<GameCreated> {
    return this.post('/games', doc);
  }

  getGame(id: string): Promise<GameDocument> {
    return this.request(`/games/${id}`);
  }

  solve(id: string, options: { method?: string; table?: boolean } = {}): Promise<Solution> {
    const params = new URLSearchParams();
    if (options.method) {
      params.set('method', options.method);
    }
    if (options.table) {
      params.set('table', 'true');
    }
    const query = params.toString();
    return this.request(`/games/${id}/solution${query ? `?${query}` : ''}`);
  }

  whatIf(
    id: string,
    coalition: string[],
    sim?: { simId: string; structureVersion: number },
  ): Promise<IncentiveReport> {
    const payload: Record<string, unknown> = { coalition };
    if (sim) {
      payload.sim_id = sim.simId;
      payload.structure_version = sim.structureVersion;
    }
    return this.post(`/games/${id}/whatif`, payload);
  }

  createSimulation(id: string, params: SimulationParams): Promise<SimulationCreated> {
    return this.post(`/games/${id}/simulations`, params);
  }

  trace(simId: string): Promise<Trace> {
    return this.request(`/simulations/${simId}/trace`);
  }

  step(simId: string): Promise<StepResult> {
    return this.post(`/simulations/${simId}/step`, {});
  }
}
