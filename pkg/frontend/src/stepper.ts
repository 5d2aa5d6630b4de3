/** Simulation stepper: start, step, run to the end, reset. */

import { ApiClient } from './api.js';
import { eventText } from './format.js';
import { ViewState, setTrace } from './state.js';
import type { SimulationParams, Trace } from './types.js';

export class SimulationStepper {
  onTrace: (state: ViewState) => void = () => {};

  private running = false;

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
    private getState: () => ViewState,
    private setState: (next: ViewState) => void,
  ) {
    root.innerHTML = `
      <div class="stepper-controls">
        <label>Policy
          <select class="policy">
            <option value="greedy-merge">greedy-merge</option>
            <option value="random">random</option>
          </select>
        </label>
        <label>Seed <input class="seed" type="number" value="0"></label>
        <label>Max rounds <input class="max-rounds" type="number" value="20" min="1"></label>
        <button class="start" type="button">Start</button>
        <button class="step" type="button" disabled>Step</button>
        <button class="run" type="button" disabled>Run to end</button>
        <button class="reset" type="button" disabled>Reset</button>
        <span class="stepper-status"></span>
      </div>
      <ol class="event-log"></ol>`;
    this.button('start').onclick = () => void this.start();
    this.button('step').onclick = () => void this.step();
    this.button('run').onclick = () => void this.runToEnd();
    this.button('reset').onclick = () => this.reset();
  }

  private button(cls: string): HTMLButtonElement {
    return this.root.querySelector(`.${cls}`) as HTMLButtonElement;
  }

  private status(text: string): void {
    (this.root.querySelector('.stepper-status') as HTMLElement).textContent = text;
  }

  params(): SimulationParams {
    const policy = (this.root.querySelector('.policy') as HTMLSelectElement).value;
    return {
      policy: policy === 'random' ? 'random' : 'greedy-merge',
      seed: Number((this.root.querySelector('.seed') as HTMLInputElement).value) || 0,
      max_rounds:
        Number((this.root.querySelector('.max-rounds') as HTMLInputElement).value) || 20,
    };
  }

  render(): void {
    const state = this.getState();
    const active = state.simId !== null;
    const done = state.trace?.done ?? false;
    this.button('start').disabled = state.gameId === null || active || this.running;
    this.button('step').disabled = !active || done || this.running;
    this.button('run').disabled = !active || done || this.running;
    this.button('reset').disabled = !active || this.running;
    const log = this.root.querySelector('.event-log') as HTMLElement;
    log.innerHTML = (state.trace?.events ?? [])
      .map((event) => `<li>${eventText(event)}</li>`)
      .join('');
    if (state.trace?.done) {
      this.status(
        state.trace.stable
          ? `stable after round ${state.trace.rounds}`
          : `round limit reached (${state.trace.rounds})`,
      );
    }
  }

  private adopt(trace: Trace, simId: string): void {
    this.setState(setTrace(this.getState(), simId, trace));
    this.render();
    this.onTrace(this.getState());
  }

  async start(): Promise<void> {
    const state = this.getState();
    if (state.gameId === null) {
      return;
    }
    if (state.dirty) {
      this.status('save the cost table first');
      return;
    }
    const created = await this.api.createSimulation(state.gameId, this.params());
    const trace = await this.api.trace(created.sim_id);
    this.status('simulation ready');
    this.adopt(trace, created.sim_id);
  }

  async step(): Promise<void> {
    const state = this.getState();
    if (state.simId === null) {
      return;
    }
    const result = await this.api.step(state.simId);
    this.adopt(result, state.simId);
  }

  async runToEnd(): Promise<void> {
    this.running = true;
    try {
      let guard = 1000;
      while (guard-- > 0) {
        const state = this.getState();
        if (state.simId === null) {
          return;
        }
        const result = await this.api.step(state.simId);
        this.adopt(result, state.simId);
        if (result.done) {
          return;
        }
      }
    } finally {
      this.running = false;
      this.render();
    }
  }

  reset(): void {
    this.setState(setTrace(this.getState(), null, null));
    this.status('');
    this.render();
    this.onTrace(this.getState());
  }
}
