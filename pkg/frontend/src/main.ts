/**
 * Browser wiring: problem form with override dropdowns, stage display,
 * report pane, evaluation dashboard.
 */

import { ApiClient, Job, Parameter, Principle } from './api.js';
import { buildDashboardModel, renderDashboard } from './dashboard.js';
import { buildSolveRequest, canSubmit, validateOverrides } from './form.js';
import { renderMarkdown } from './markdown.js';
import { pollJob } from './poll.js';

const client = new ApiClient('');

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function notice(text: string, isError = false): void {
  const box = el<HTMLDivElement>('notice');
  box.textContent = text;
  box.className = isError ? 'notice error' : 'notice';
}

function stageText(job: Job): string {
  if (job.state === 'running' && job.stage) return `running: ${job.stage}`;
  if (job.state === 'running' && job.progress) {
    return `running: ${job.progress.completed}/${job.progress.total}`;
  }
  return job.state;
}

function fillParameterSelect(select: HTMLSelectElement, parameters: Parameter[]): void {
  select.appendChild(new Option('(model decides)', ''));
  for (const p of parameters) {
    select.appendChild(new Option(`${p.index}. ${p.title}`, String(p.index)));
  }
}

function fillPrincipleSelect(select: HTMLSelectElement, principles: Principle[]): void {
  for (const p of principles) {
    select.appendChild(new Option(`${p.index}. ${p.title}`, String(p.index)));
  }
}

function selectedNumber(select: HTMLSelectElement): number | null {
  return select.value === '' ? null : Number(select.value);
}

function selectedNumbers(select: HTMLSelectElement): number[] {
  return [...select.selectedOptions].map((o) => Number(o.value));
}

function refreshFormState(): void {
  const problem = el<HTMLTextAreaElement>('problem').value;
  const selection = {
    improving: selectedNumber(el<HTMLSelectElement>('improving')),
    worsening: selectedNumber(el<HTMLSelectElement>('worsening')),
    principles: selectedNumbers(el<HTMLSelectElement>('principles')),
  };
  const validity = validateOverrides(selection);
  el<HTMLButtonElement>('submit').disabled = !canSubmit(problem) || !validity.ok;
  notice(validity.ok ? '' : validity.reason ?? '');
}

async function submit(): Promise<void> {
  const problem = el<HTMLTextAreaElement>('problem').value;
  const selection = {
    improving: selectedNumber(el<HTMLSelectElement>('improving')),
    worsening: selectedNumber(el<HTMLSelectElement>('worsening')),
    principles: selectedNumbers(el<HTMLSelectElement>('principles')),
  };
  try {
    const request = buildSolveRequest(problem, selection);
    el<HTMLButtonElement>('submit').disabled = true;
    notice('submitted...');
    const { id } = await client.submitJob(request);
    const job = await pollJob(client, id, {
      onUpdate: (j) => notice(stageText(j)),
    });
    const markdown = await client.getReportMarkdown(job.result_ref!);
    el<HTMLDivElement>('report').innerHTML = renderMarkdown(markdown);
    notice('done');
  } catch (error) {
    notice(error instanceof Error ? error.message : String(error), true);
  } finally {
    refreshFormState();
  }
}

async function showEvaluation(): Promise<void> {
  const caseId = el<HTMLInputElement>('eval-case').value.trim();
  if (!caseId) return;
  try {
    const [doc, parameters] = await Promise.all([
      client.getEvaluation(caseId),
      client.getParameters(),
    ]);
    el<HTMLDivElement>('dashboard').innerHTML =
      renderDashboard(buildDashboardModel(doc, parameters));
  } catch (error) {
    el<HTMLDivElement>('dashboard').innerHTML = '';
    notice(error instanceof Error ? error.message : String(error), true);
  }
}

async function init(): Promise<void> {
  try {
    const [parameters, principles] = await Promise.all([
      client.getParameters(), client.getPrinciples(),
    ]);
    fillParameterSelect(el('improving'), parameters);
    fillParameterSelect(el('worsening'), parameters);
    fillPrincipleSelect(el('principles'), principles);
  } catch (error) {
    notice(`knowledge base unavailable: ${error}`, true);
  }
  el<HTMLTextAreaElement>('problem').addEventListener('input', refreshFormState);
  el<HTMLSelectElement>('improving').addEventListener('change', refreshFormState);
  el<HTMLSelectElement>('worsening').addEventListener('change', refreshFormState);
  el<HTMLSelectElement>('principles').addEventListener('change', refreshFormState);
  el<HTMLButtonElement>('submit').addEventListener('click', () => void submit());
  el<HTMLButtonElement>('eval-show').addEventListener('click',
    () => void showEvaluation());
  refreshFormState();
}

document.addEventListener('DOMContentLoaded', () => void init());
