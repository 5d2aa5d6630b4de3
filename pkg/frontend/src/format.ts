/** Display helpers. The UI never does arithmetic: it shows API values verbatim. */

import type { TraceEvent, ValueEntry } from './types.js';

/** Primary rendering of a value: the API's decimal string. */
export function display(entry: ValueEntry): string {
  return entry.decimal;
}

/** Decimal with the exact rational alongside when they differ, e.g. "7.5 (15/2)". */
export function displayWithExact(entry: ValueEntry): string {
  if (entry.exact === entry.decimal) {
    return entry.decimal;
  }
  return `${entry.decimal} (${entry.exact})`;
}

export function coalitionText(labels: string[]): string {
  return `{${labels.join(',')}}`;
}

export function eventText(event: TraceEvent): string {
  let text = `round ${event.round}: ${event.kind} ${coalitionText(event.coalition)}`;
  if (event.shares && event.shares.length > 0) {
    text += `, shares ${event.shares.map(display).join(', ')}`;
  }
  if (event.stable !== undefined) {
    text += event.stable ? ' (stable)' : ' (not yet stable)';
  }
  return text;
}
