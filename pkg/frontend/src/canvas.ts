/** SVG rendering of the actor network: nodes by stage, hulls around blocks.
 *
 * Pure string rendering so it can be tested without a browser; the host
 * attaches one click handler and reads `data-player` off the nodes.
 */

import { CANVAS, STAGE_COLORS } from './theme.js';
import type { Stage } from './types.js';

interface Point {
  x: number;
  y: number;
}

function positions(players: string[]): Map<string, Point> {
  const center = CANVAS.size / 2;
  const out = new Map<string, Point>();
  const n = players.length;
  if (n === 1) {
    out.set(players[0], { x: center, y: center });
    return out;
  }
  players.forEach((label, i) => {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    out.set(label, {
      x: center + CANVAS.ringRadius * Math.cos(angle),
      y: center + CANVAS.ringRadius * Math.sin(angle),
    });
  });
  return out;
}

function escapeXml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

function hull(points: Point[]): string {
  const cx = points.reduce((s, p) => s + p.x, 0) / points.length;
  const cy = points.reduce((s, p) => s + p.y, 0) / points.length;
  const spread = Math.max(
    ...points.map((p) => Math.hypot(p.x - cx, p.y - cy)),
  );
  const r = spread + CANVAS.nodeRadius + CANVAS.hullPadding;
  return (
    `<circle class="hull" cx="${cx.toFixed(1)}" cy="${cy.toFixed(1)}" r="${r.toFixed(1)}"` +
    ` fill="${CANVAS.hullFill}" stroke="${CANVAS.hullStroke}" stroke-dasharray="6 4"/>`
  );
}

export function renderNetworkSvg(
  players: string[],
  blocks: string[][],
  stages: Record<string, Stage>,
  selection: string[],
): string {
  const pos = positions(players);
  const parts: string[] = [
    `<svg viewBox="0 0 ${CANVAS.size} ${CANVAS.size}" xmlns="http://www.w3.org/2000/svg">`,
  ];
  for (const block of blocks) {
    if (block.length > 1) {
      const points = block
        .map((label) => pos.get(label))
        .filter((p): p is Point => p !== undefined);
      if (points.length > 1) {
        parts.push(hull(points));
      }
    }
  }
  const selected = new Set(selection);
  for (const label of players) {
    const p = pos.get(label);
    if (!p) {
      continue;
    }
    const stage = stages[label] ?? 'problematization';
    const stroke = selected.has(label)
      ? ` stroke="${CANVAS.selectionStroke}" stroke-width="4"`
      : ' stroke="#2b2f36" stroke-width="1.5"';
    parts.push(
      `<circle class="actor" data-player="${escapeXml(label)}" cx="${p.x.toFixed(1)}"` +
        ` cy="${p.y.toFixed(1)}" r="${CANVAS.nodeRadius}" fill="${STAGE_COLORS[stage]}"${stroke}/>`,
    );
    parts.push(
      `<text class="actor-label" data-player="${escapeXml(label)}" x="${p.x.toFixed(1)}"` +
        ` y="${(p.y + 5).toFixed(1)}" text-anchor="middle">${escapeXml(label)}</text>`,
    );
  }
  parts.push('</svg>');
  return parts.join('');
}
