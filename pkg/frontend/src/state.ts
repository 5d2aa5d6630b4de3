/** The view state and the pure transitions the panels share.
 *
 * The cost grid always mirrors the server's canonical document after a
 * successful save; edits set the dirty flag until saved.  The selected
 * coalition is kept a subset of the current players, in player order.
 */

import type { Completion, GameDocument, Stage, Trace } from './types.js';

export interface ViewState {
  gameId: string | null;
  players: string[];
  grid: Record<string, string>;
  completion: Completion;
  dirty: boolean;
  fieldErrors: Record<string, string>;
  selection: string[];
  simId: string | null;
  trace: Trace | null;
}

export function initialState(): ViewState {
  return {
    gameId: null,
    players: [],
    grid: {},
    completion: 'strict',
    dirty: false,
    fieldErrors: {},
    selection: [],
    simId: null,
    trace: null,
  };
}

/** Canonical grid key for a set of labels: sorted by player order, comma-joined. */
export function coalitionKey(labels: string[], players: string[]): string {
  const rank = new Map(players.map((p, i) => [p, i]));
  return [...labels]
    .sort((a, b) => (rank.get(a) ?? 0) - (rank.get(b) ?? 0))
    .join(',');
}

/** Every nonempty coalition key, smallest coalitions first, in player order. */
export function allCoalitionKeys(players: string[]): string[] {
  const n = players.length;
  const keys: { size: number; mask: number; key: string }[] = [];
  for (let mask = 1; mask < 1 << n; mask++) {
    const members = players.filter((_, i) => (mask >> i) & 1);
    keys.push({ size: members.length, mask, key: members.join(',') });
  }
  keys.sort((a, b) => a.size - b.size || a.mask - b.mask);
  return keys.map((k) => k.key);
}

/** Replace the player list, keeping grid values whose coalitions survive. */
export function withPlayers(state: ViewState, players: string[]): ViewState {
  const grid: Record<string, string> = {};
  for (const key of allCoalitionKeys(players)) {
    grid[key] = state.grid[key] ?? '';
  }
  return {
    ...state,
    players,
    grid,
    dirty: true,
    fieldErrors: {},
    selection: state.selection.filter((x) => players.includes(x)),
  };
}

export function editCell(state: ViewState, key: string, value: string): ViewState {
  return {
    ...state,
    grid: { ...state.grid, [key]: value },
    dirty: true,
  };
}

export function setCompletion(state: ViewState, completion: Completion): ViewState {
  return { ...state, completion, dirty: true };
}

/** The request body the editor saves: only filled cells are sent. */
export function makeDocument(state: ViewState): GameDocument {
  const costs: Record<string, string> = {};
  for (const [key, value] of Object.entries(state.grid)) {
    if (value.trim() !== '') {
      costs[key] = value.trim();
    }
  }
  return { players: state.players, costs, completion: state.completion };
}

/** Adopt the server's canonical document after a successful save. */
export function applyDocument(
  state: ViewState,
  doc: GameDocument,
  gameId: string,
): ViewState {
  const grid: Record<string, string> = {};
  for (const key of allCoalitionKeys(doc.players)) {
    grid[key] = doc.costs[key] ?? '';
  }
  return {
    ...state,
    gameId,
    players: [...doc.players],
    grid,
    completion: doc.completion,
    dirty: false,
    fieldErrors: {},
    selection: state.selection.filter((x) => doc.players.includes(x)),
    simId: null,
    trace: null,
  };
}

/** Map a server error field like "costs[A,B]" onto its grid key "A,B". */
export function errorGridKey(field: string | null | undefined): string | null {
  if (!field) {
    return null;
  }
  const match = /^costs\[(.+)\]$/.exec(field);
  return match ? match[1] : field;
}

export function applyFieldError(
  state: ViewState,
  field: string | null | undefined,
  message: string,
): ViewState {
  const key = errorGridKey(field);
  if (key === null) {
    return state;
  }
  return { ...state, fieldErrors: { ...state.fieldErrors, [key]: message } };
}

export function toggleSelection(state: ViewState, label: string): ViewState {
  if (!state.players.includes(label)) {
    return state;
  }
  const selection = state.selection.includes(label)
    ? state.selection.filter((x) => x !== label)
    : [...state.selection, label];
  const rank = new Map(state.players.map((p, i) => [p, i]));
  selection.sort((a, b) => (rank.get(a) ?? 0) - (rank.get(b) ?? 0));
  return { ...state, selection };
}

export function setTrace(state: ViewState, simId: string | null, trace: Trace | null): ViewState {
  return { ...state, simId, trace };
}

/** Current blocks: the simulation's structure while one is active, else singletons. */
export function currentBlocks(state: ViewState): string[][] {
  if (state.trace) {
    return state.trace.final_structure;
  }
  return state.players.map((p) => [p]);
}

/** Stage badge per actor: from the simulation trace, else everyone at the start. */
export function currentStages(state: ViewState): Record<string, Stage> {
  if (state.trace) {
    return state.trace.stages;
  }
  const stages: Record<string, Stage> = {};
  for (const p of state.players) {
    stages[p] = 'problematization';
  }
  return stages;
}
