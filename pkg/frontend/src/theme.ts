/** Fixed colors and canvas geometry for the network view. */

import type { Stage } from './types.js';

export const STAGE_COLORS: Record<Stage, string> = {
  problematization: '#9aa5b1',
  interessement: '#f5b942',
  enrollment: '#4f9ddb',
  mobilization: '#3fa66a',
};

export const STAGE_ORDER: Stage[] = [
  'problematization',
  'interessement',
  'enrollment',
  'mobilization',
];

export const CANVAS = {
  size: 420,
  nodeRadius: 22,
  ringRadius: 150,
  hullPadding: 18,
  hullFill: 'rgba(80, 120, 200, 0.12)',
  hullStroke: 'rgba(80, 120, 200, 0.45)',
  selectionStroke: '#d6336c',
};
