/** What-if panel: price the selected coalition and show who would sign. */

import { ApiClient, ApiError } from './api.js';
import { coalitionText, display } from './format.js';
import type { ViewState } from './state.js';
import type { IncentiveReport } from './types.js';

export class WhatIfPanel {
  constructor(
    private root: HTMLElement,
    private api: ApiClient,
    private getState: () => ViewState,
  ) {
    root.innerHTML = `
      <div class="whatif-selection"></div>
      <button class="whatif-run" type="button" disabled>Evaluate coalition</button>
      <div class="whatif-result"></div>`;
    (root.querySelector('.whatif-run') as HTMLButtonElement).onclick = () => {
      void this.evaluate();
    };
  }

  render(): void {
    const state = this.getState();
    const selectionEl = this.root.querySelector('.whatif-selection') as HTMLElement;
    const button = this.root.querySelector('.whatif-run') as HTMLButtonElement;
    selectionEl.textContent = state.selection.length
      ? `Selected: ${coalitionText(state.selection)}`
      : 'Click actors on the canvas to pick a coalition.';
    button.disabled = state.selection.length === 0 || state.gameId === null;
  }

  private resultEl(): HTMLElement {
    return this.root.querySelector('.whatif-result') as HTMLElement;
  }

  async evaluate(): Promise<void> {
    const state = this.getState();
    if (state.gameId === null || state.selection.length === 0) {
      return;
    }
    if (state.dirty) {
      this.resultEl().innerHTML =
        '<p class="warning">The cost table has unsaved edits; save before asking what-if.</p>';
      return;
    }
    try {
      const sim =
        state.simId !== null && state.trace !== null
          ? { simId: state.simId, structureVersion: state.trace.structure_version }
          : undefined;
      const report = await this.api.whatIf(state.gameId, state.selection, sim);
      this.showReport(report);
    } catch (error) {
      if (error instanceof ApiError) {
        this.resultEl().innerHTML = `<p class="warning">${error.detail}</p>`;
      } else {
        this.resultEl().textContent = String(error);
      }
    }
  }

  showReport(report: IncentiveReport): void {
    const rows = report.members
      .map(
        (m) => `<tr class="${m.accept ? 'accepts' : 'refuses'}">
          <td>${m.label}</td>
          <td>${display(m.standalone_cost)}</td>
          <td>${display(m.share)}</td>
          <td>${m.accept ? 'accepts' : 'refuses'}</td>
        </tr>`,
      )
      .join('');
    const verdict = report.viable
      ? '<p class="viable">Viable: every member pays no more than going alone.</p>'
      : '<p class="not-viable">Not viable: someone pays more than going alone.</p>';
    this.resultEl().innerHTML = `
      <h3>${coalitionText(report.coalition)}: joint cost ${display(report.total)}</h3>
      <table>
        <thead><tr><th>Actor</th><th>Alone</th><th>Share</th><th></th></tr></thead>
        <tbody>${rows}</tbody>
      </table>
      ${verdict}`;
  }
}
