/**
 * Form state and validation for the problem/override inputs.
 *
 * The form constrains overrides before anything reaches the service:
 * parameter indexes live in 1..39 with improving != worsening, principle
 * selections in 1..40, and submit stays disabled while the problem text is
 * blank.
 */

import { JobRequest, Overrides } from './api.js';

export interface OverrideSelection {
  improving: number | null;
  worsening: number | null;
  principles: number[];
}

export interface ValidationResult {
  ok: boolean;
  reason?: string;
}

export function canSubmit(problemText: string): boolean {
  return problemText.trim().length > 0;
}

export function validateOverrides(selection: OverrideSelection): ValidationResult {
  const { improving, worsening, principles } = selection;
  const hasImproving = improving !== null;
  const hasWorsening = worsening !== null;
  if (hasImproving !== hasWorsening) {
    return { ok: false, reason: 'select both parameters or neither' };
  }
  if (hasImproving && hasWorsening) {
    if (!inRange(improving!, 39) || !inRange(worsening!, 39)) {
      return { ok: false, reason: 'parameter indexes must be 1..39' };
    }
    if (improving === worsening) {
      return { ok: false, reason: 'improving and worsening must differ' };
    }
  }
  for (const p of principles) {
    if (!inRange(p, 40)) {
      return { ok: false, reason: 'principle indexes must be 1..40' };
    }
  }
  return { ok: true };
}

function inRange(value: number, upper: number): boolean {
  return Number.isInteger(value) && value >= 1 && value <= upper;
}

export function buildSolveRequest(problemText: string,
                                  selection: OverrideSelection): JobRequest {
  const validity = validateOverrides(selection);
  if (!canSubmit(problemText)) {
    throw new Error('problem text is empty');
  }
  if (!validity.ok) {
    throw new Error(validity.reason);
  }
  const overrides: Overrides = {};
  if (selection.improving !== null && selection.worsening !== null) {
    overrides.contradiction = {
      improving: selection.improving,
      worsening: selection.worsening,
    };
  }
  if (selection.principles.length > 0) {
    overrides.principles = [...selection.principles];
  }
  const request: JobRequest = { kind: 'solve', problem_text: problemText.trim() };
  if (Object.keys(overrides).length > 0) {
    request.overrides = overrides;
  }
  return request;
}
