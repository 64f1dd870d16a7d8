import { describe, expect, it } from 'vitest';

import { ApiClient, ApiError } from '../src/api.js';

function recordingFetch(status: number, body: unknown) {
  const calls: { url: string; init?: RequestInit }[] = [];
  const fetchImpl = async (url: string, init?: RequestInit) => {
    calls.push({ url, init });
    return new Response(JSON.stringify(body), {
      status, headers: { 'Content-Type': 'application/json' },
    });
  };
  return { calls, fetchImpl };
}

describe('ApiClient', () => {
  it('posts jobs to the documented route', async () => {
    const { calls, fetchImpl } = recordingFetch(201, { id: 'j1' });
    const client = new ApiClient('http://svc', fetchImpl);
    const result = await client.submitJob({ kind: 'solve', problem_text: 'p' });
    expect(result.id).toBe('j1');
    expect(calls[0]!.url).toBe('http://svc/api/jobs');
    expect(calls[0]!.init?.method).toBe('POST');
    expect(JSON.parse(calls[0]!.init?.body as string))
      .toEqual({ kind: 'solve', problem_text: 'p' });
  });

  it('hits only documented GET routes', async () => {
    const { calls, fetchImpl } = recordingFetch(200, []);
    const client = new ApiClient('', fetchImpl);
    await client.getParameters();
    await client.getPrinciples();
    await client.getCases();
    await client.getMatrixCell(6, 13).catch(() => undefined);
    await client.getJob('j');
    await client.getEvaluation('btms').catch(() => undefined);
    expect(calls.map((c) => c.url)).toEqual([
      '/api/kb/parameters',
      '/api/kb/principles',
      '/api/cases',
      '/api/kb/matrix/6/13',
      '/api/jobs/j',
      '/api/eval/btms',
    ]);
  });

  it('surfaces service error codes and messages verbatim', async () => {
    const { fetchImpl } = recordingFetch(400, {
      code: 'index_out_of_range', message: 'Index out of range',
    });
    const client = new ApiClient('', fetchImpl);
    const error = await client.getMatrixCell(40, 3).catch((e) => e);
    expect(error).toBeInstanceOf(ApiError);
    expect(error.code).toBe('index_out_of_range');
    expect(error.message).toBe('Index out of range');
    expect(error.status).toBe(400);
  });
});
