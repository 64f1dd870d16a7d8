/**
 * Evaluation dashboard view model: frequency bars in the service's top-k
 * order, entropy readout, and match-category color coding.
 */

import { EvalDoc, Parameter } from './api.js';
import { escapeHtml } from './markdown.js';

export const MATCH_COLORS: Record<string, string> = {
  complete: '#15803d', // green
  half: '#1d4ed8',     // blue
  none: '#ca8a04',     // yellow
};

export interface DashboardBar {
  label: string;
  proportion: number;
  match: string;
  color: string;
}

export interface DashboardModel {
  caseId: string;
  entropyText: string;
  bars: DashboardBar[];
  counted: number;
  failures: number;
}

export function buildDashboardModel(doc: EvalDoc,
                                    parameters?: Parameter[]): DashboardModel {
  const titles = new Map((parameters ?? []).map((p) => [p.index, p.title]));
  const bars = doc.top.map((entry) => {
    const improving = titles.get(entry.improving) ?? `CP${entry.improving}`;
    const worsening = titles.get(entry.worsening) ?? `CP${entry.worsening}`;
    return {
      label: `(${entry.improving}, ${entry.worsening}) ${improving} vs ${worsening}`,
      proportion: entry.proportion,
      match: entry.match,
      color: MATCH_COLORS[entry.match] ?? '#525252',
    };
  });
  return {
    caseId: doc.case_id,
    entropyText: doc.entropy_bits.toFixed(2),
    bars,
    counted: doc.n_counted,
    failures: doc.failures,
  };
}

export function renderDashboard(model: DashboardModel): string {
  const rows = model.bars.map((bar) => {
    const width = Math.max(1, Math.round(bar.proportion * 100));
    return [
      '<div class="bar-row">',
      `<span class="bar-label">${escapeHtml(bar.label)}</span>`,
      `<span class="bar" style="width:${width}%;background:${bar.color}"`
        + ` data-match="${escapeHtml(bar.match)}"></span>`,
      `<span class="bar-value">${(bar.proportion * 100).toFixed(0)}%</span>`,
      '</div>',
    ].join('');
  });
  return [
    `<h2>Evaluation: ${escapeHtml(model.caseId)}</h2>`,
    `<p class="entropy">Entropy: <strong>${model.entropyText}</strong> bits`
      + ` over ${model.counted} trials`
      + (model.failures ? ` (${model.failures} failed)` : '') + '</p>',
    '<div class="bars">',
    ...rows,
    '</div>',
  ].join('\n');
}
