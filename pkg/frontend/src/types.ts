/** Wire formats of the fairshare HTTP API. */

export interface ValueEntry {
  exact: string;
  decimal: string;
}

export type Completion = 'strict' | 'additive';

export interface GameDocument {
  players: string[];
  costs: Record<string, string>;
  budgets?: Record<string, string> | null;
  process_tag?: string | null;
  completion: Completion;
}

export interface GameCreated {
  id: string;
}

export interface Solution {
  players: string[];
  method: string;
  process_tag?: string;
  shapley: Record<string, ValueEntry>;
  cost_shares: Record<string, ValueEntry>;
  total_cost: ValueEntry;
  axioms: { efficiency: boolean } & Record<string, unknown>;
  rationality: Record<string, boolean>;
  all_rational: boolean;
}

export interface IncentiveMember {
  label: string;
  standalone_cost: ValueEntry;
  share: ValueEntry;
  accept: boolean;
}

export interface IncentiveReport {
  coalition: string[];
  members: IncentiveMember[];
  viable: boolean;
  total: ValueEntry;
  structure_version: number;
}

export type Stage =
  | 'problematization'
  | 'interessement'
  | 'enrollment'
  | 'mobilization';

export type EventKind =
  | 'proposal'
  | 'acceptance'
  | 'rejection'
  | 'enrollment'
  | 'mobilization'
  | 'defection';

export interface TraceEvent {
  seq: number;
  round: number;
  kind: EventKind;
  coalition: string[];
  shares?: ValueEntry[];
  stable?: boolean;
}

export interface Trace {
  policy: string;
  seed: number;
  max_rounds: number;
  rounds: number;
  stable: boolean;
  done: boolean;
  structure_version: number;
  events: TraceEvent[];
  final_structure: string[][];
  final_shares: Record<string, ValueEntry>;
  stages: Record<string, Stage>;
}

export interface StepResult extends Trace {
  progressed: boolean;
}

export interface SimulationParams {
  policy: 'greedy-merge' | 'random';
  seed: number;
  max_rounds: number;
}

export interface SimulationCreated {
  sim_id: string;
}
