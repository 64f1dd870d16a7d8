/**
 * Poll a job until it reaches a terminal state.
 *
 * Interval starts at 1 s and backs off by 1.5x per poll up to 5 s; at most
 * one request is in flight per job.  Resolves with the terminal job when
 * done, rejects with the service's error text when failed.
 */

import { ApiClient, Job } from './api.js';

export const INITIAL_INTERVAL_MS = 1000;
export const MAX_INTERVAL_MS = 5000;
export const BACKOFF_FACTOR = 1.5;

export function nextInterval(current: number): number {
  return Math.min(Math.round(current * BACKOFF_FACTOR), MAX_INTERVAL_MS);
}

export interface PollOptions {
  onUpdate?: (job: Job) => void;
  sleep?: (ms: number) => Promise<void>;
}

const defaultSleep = (ms: number) =>
  new Promise<void>((resolve) => setTimeout(resolve, ms));

export async function pollJob(client: ApiClient, jobId: string,
                              options: PollOptions = {}): Promise<Job> {
  const sleep = options.sleep ?? defaultSleep;
  let interval = INITIAL_INTERVAL_MS;
  for (;;) {
    const job = await client.getJob(jobId);
    options.onUpdate?.(job);
    if (job.state === 'done') {
      return job;
    }
    if (job.state === 'failed') {
      throw new Error(job.error ?? 'job failed');
    }
    await sleep(interval);
    interval = nextInterval(interval);
  }
}
