/** Cost table editor: one row per coalition, saved as a whole document. */

import { ApiClient, ApiError } from './api.js';
import {
  ViewState,
  applyDocument,
  applyFieldError,
  editCell,
  makeDocument,
  setCompletion,
  withPlayers,
} from './state.js';
import type { Completion } from './types.js';

export class CostGridEditor {
  onSaved: (state: ViewState) => void = () => {};
  onDirty: (state: ViewState) => void = () => {};

  private statusEl: HTMLElement;
  private tableEl: HTMLElement;

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
    private getState: () => ViewState,
    private setState: (next: ViewState) => void,
  ) {
    root.innerHTML = `
      <div class="editor-head">
        <label>Actors <input class="players-input" type="text" spellcheck="false"
               placeholder="A, B, C"></label>
        <button class="apply-players" type="button">Set actors</button>
        <label>Completion
          <select class="completion">
            <option value="strict">strict</option>
            <option value="additive">additive</option>
          </select>
        </label>
      </div>
      <div class="cost-table"></div>
      <div class="editor-foot">
        <button class="save" type="button">Save &amp; solve</button>
        <span class="editor-status"></span>
      </div>`;
    this.tableEl = root.querySelector('.cost-table') as HTMLElement;
    this.statusEl = root.querySelector('.editor-status') as HTMLElement;

    (root.querySelector('.apply-players') as HTMLButtonElement).onclick = () => {
      const raw = (root.querySelector('.players-input') as HTMLInputElement).value;
      const players = raw
        .split(',')
        .map((x) => x.trim())
        .filter((x) => x !== '');
      this.update(withPlayers(this.getState(), players));
      this.render();
    };
    (root.querySelector('.completion') as HTMLSelectElement).onchange = (event) => {
      const value = (event.target as HTMLSelectElement).value as Completion;
      this.update(setCompletion(this.getState(), value));
    };
    (root.querySelector('.save') as HTMLButtonElement).onclick = () => {
      void this.save();
    };
  }

  private update(next: ViewState): void {
    this.setState(next);
    if (next.dirty) {
      this.onDirty(next);
    }
  }

  render(): void {
    const state = this.getState();
    (this.root.querySelector('.players-input') as HTMLInputElement).value =
      state.players.join(', ');
    (this.root.querySelector('.completion') as HTMLSelectElement).value =
      state.completion;
    const rows = Object.keys(state.grid)
      .map((key) => {
        const error = state.fieldErrors[key];
        const cls = error ? 'cost-cell invalid' : 'cost-cell';
        const title = error ? ` title="${error.replace(/"/g, '&quot;')}"` : '';
        return `<tr>
          <td class="coalition-key">{${key}}</td>
          <td><input class="${cls}" data-key="${key}" value="${state.grid[key] ?? ''}"${title}></td>
        </tr>`;
      })
      .join('');
    this.tableEl.innerHTML = state.players.length
      ? `<table><thead><tr><th>Coalition</th><th>Cost</th></tr></thead><tbody>${rows}</tbody></table>`
      : '<p class="hint">Set the actors to start a cost table.</p>';
    this.tableEl.querySelectorAll<HTMLInputElement>('.cost-cell').forEach((input) => {
      input.oninput = () => {
        this.update(editCell(this.getState(), input.dataset.key as string, input.value));
        this.statusEl.textContent = 'unsaved edits';
      };
    });
    this.statusEl.textContent = state.dirty ? 'unsaved edits' : '';
  }

  async save(): Promise<void> {
    const state = this.getState();
    if (state.players.length === 0) {
      this.statusEl.textContent = 'add at least one actor';
      return;
    }
    try {
      const doc = makeDocument(state);
      const created = await this.api.createGame(doc);
      const canonical = await this.api.getGame(created.id);
      const next = applyDocument(this.getState(), canonical, created.id);
      this.setState(next);
      this.render();
      this.statusEl.textContent = `saved as ${created.id}`;
      this.onSaved(next);
    } catch (error) {
      if (error instanceof ApiError) {
        this.setState(applyFieldError(this.getState(), error.field, error.detail));
        this.render();
        this.statusEl.textContent = error.detail;
      } else {
        this.statusEl.textContent = String(error);
      }
    }
  }
}
