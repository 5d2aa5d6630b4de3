/** Page wiring: editor on the left, canvas in the middle, panels on the right. */

import { ApiClient } from './api.js';
import { renderNetworkSvg } from './canvas.js';
import { display, displayWithExact } from './format.js';
import { CostGridEditor } from './grid.js';
import {
  ViewState,
  applyDocument,
  currentBlocks,
  currentStages,
  initialState,
  toggleSelection,
} from './state.js';
import { SimulationStepper } from './stepper.js';
import { STAGE_COLORS, STAGE_ORDER } from './theme.js';
import type { GameDocument, Solution } from './types.js';
import { WhatIfPanel } from './whatif.js';

const STARTER_GAME: GameDocument = {
  players: ['A', 'B', 'C'],
  costs: {
    A: '10',
    B: '10',
    C: '10',
    'A,B': '16',
    'A,C': '17',
    'B,C': '18',
    'A,B,C': '24',
  },
  completion: 'strict',
};

let state: ViewState = initialState();
const api = new ApiClient('');

const getState = () => state;
const setState = (next: ViewState) => {
  state = next;
};

function el(id: string): HTMLElement {
  const found = document.getElementById(id);
  if (!found) {
    throw new Error(`missing #${id}`);
  }
  return found;
}

function renderSolution(solution: Solution | null): void {
  const target = el('solution');
  if (!solution) {
    target.innerHTML = '<p class="hint">Save the cost table to see the split.</p>';
    return;
  }
  const rows = solution.players
    .map(
      (label) => `<tr>
        <td>${label}</td>
        <td title="${solution.shapley[label].exact}">${display(solution.shapley[label])}</td>
        <td title="${solution.cost_shares[label].exact}">${display(solution.cost_shares[label])}</td>
        <td>${solution.rationality[label] ? 'yes' : 'no'}</td>
      </tr>`,
    )
    .join('');
  target.innerHTML = `
    <table>
      <thead><tr><th>Actor</th><th>Saving</th><th>Pays</th><th>Rational</th></tr></thead>
      <tbody>${rows}</tbody>
    </table>
    <p>Total ${displayWithExact(solution.total_cost)};
       efficiency ${solution.axioms.efficiency ? 'holds' : 'violated'}</p>`;
}

function renderCanvas(): void {
  const target = el('canvas');
  if (state.players.length === 0) {
    target.innerHTML = '<p class="hint">No actors yet.</p>';
    return;
  }
  target.innerHTML = renderNetworkSvg(
    state.players,
    currentBlocks(state),
    currentStages(state),
    state.selection,
  );
}

function renderLegend(): void {
  el('legend').innerHTML = STAGE_ORDER.map(
    (stage) =>
      `<span class="legend-item"><span class="swatch" style="background:${STAGE_COLORS[stage]}"></span>${stage}</span>`,
  ).join('');
}

async function refreshSolution(): Promise<void> {
  if (state.gameId === null) {
    renderSolution(null);
    return;
  }
  renderSolution(await api.solve(state.gameId));
}

async function boot(): Promise<void> {
  const editor = new CostGridEditor(el('editor'), api, getState, setState);
  const whatIf = new WhatIfPanel(el('whatif'), api, getState);
  const stepper = new SimulationStepper(el('stepper'), api, getState, setState);

  editor.onSaved = () => {
    void refreshSolution();
    renderCanvas();
    whatIf.render();
    stepper.render();
  };
  editor.onDirty = () => {
    whatIf.render();
  };
  stepper.onTrace = () => {
    renderCanvas();
    whatIf.render();
  };

  el('canvas').addEventListener('click', (event) => {
    const target = event.target as HTMLElement;
    const label = target.getAttribute('data-player');
    if (label) {
      setState(toggleSelection(getState(), label));
      renderCanvas();
      whatIf.render();
    }
  });

  renderLegend();

  // Start with the bundled three-actor contract so every panel has content.
  try {
    const created = await api.createGame(STARTER_GAME);
    const canonical = await api.getGame(created.id);
    setState(applyDocument(getState(), canonical, created.id));
  } catch {
    setState({ ...getState(), players: [], grid: {} });
  }
  editor.render();
  renderCanvas();
  whatIf.render();
  stepper.render();
  await refreshSolution();
}

void boot();
