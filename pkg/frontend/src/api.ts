/**
 * Typed client for the engine's HTTP API.
 *
 * Only the documented routes are used; all TRIZ logic stays server-side.
 * Errors arrive as {code, message} and are rethrown as ApiError so the UI
 * can surface the service's message verbatim.
 */

export interface Parameter {
  index: number;
  title: string;
  description: string;
}

export interface Principle {
  index: number;
  title: string;
  description: string;
}

export interface ContradictionPair {
  improving: number;
  worsening: number;
}

export interface Overrides {
  problem?: string;
  contradiction?: ContradictionPair;
  principles?: number[];
}

export interface JobRequest {
  kind: 'solve' | 'trials' | 'evaluate';
  problem_text?: string;
  case_id?: string;
  overrides?: Overrides;
  n?: number;
  k?: number;
}

export interface JobProgress {
  completed: number;
  total: number;
}

export interface Job {
  id: string;
  kind: string;
  state: 'queued' | 'running' | 'done' | 'failed';
  stage: string | null;
  progress: JobProgress | null;
  result_ref: string | null;
  error: string | null;
}

export interface ReportSolution {
  principle_index: number;
  title: string;
  body: string;
}

export interface ReportDoc {
  id: string;
  problem: string;
  contradiction: ContradictionPair;
  principles: Principle[];
  solutions: ReportSolution[];
  overrides_applied: string[];
}

export interface EvalEntry {
  improving: number;
  worsening: number;
  proportion: number;
  match: 'complete' | 'half' | 'none';
}

export interface EvalDoc {
  case_id: string;
  entropy_bits: number;
  n_counted: number;
  failures: number;
  best_match: string;
  top: EvalEntry[];
}

export interface CaseSummary {
  id: string;
  domain: string;
  problem_statement: string;
}

export class ApiError extends Error {
  constructor(readonly code: string, message: string, readonly status: number) {
    super(message);
  }
}

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, init);
    const body = await response.json();
    if (!response.ok) {
      const code = typeof body?.code === 'string' ? body.code : 'error';
      const message = typeof body?.message === 'string' ? body.message : response.statusText;
      throw new ApiError(code, message, response.status);
    }
    return body as T;
  }

  submitJob(request: JobRequest): Promise<{ id: string }> {
    return this.request('/api/jobs', {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(request),
    });
  }

  getJob(id: string): Promise<Job> {
    return this.request(`/api/jobs/${encodeURIComponent(id)}`);
  }

  getReport(id: string): Promise<ReportDoc> {
    return this.request(`/api/reports/${encodeURIComponent(id)}`);
  }

  async getReportMarkdown(id: string): Promise<string> {
    const response = await this.fetchImpl(
      `${this.baseUrl}/api/reports/${encodeURIComponent(id)}?format=md`);
    if (!response.ok) {
      const body = await response.json();
      throw new ApiError(body?.code ?? 'error', body?.message ?? 'report fetch failed',
        response.status);
    }
    return response.text();
  }

  getParameters(): Promise<Parameter[]> {
    return this.request('/api/kb/parameters');
  }

  getPrinciples(): Promise<Principle[]> {
    return this.request('/api/kb/principles');
  }

  getMatrixCell(improving: number, worsening: number):
      Promise<{ improving: number; worsening: number; principles: Principle[] }> {
    return this.request(`/api/kb/matrix/${improving}/${worsening}`);
  }

  getCases(): Promise<CaseSummary[]> {
    return this.request('/api/cases');
  }

  getEvaluation(caseId: string): Promise<EvalDoc> {
    return this.request(`/api/eval/${encodeURIComponent(caseId)}`);
  }
}
