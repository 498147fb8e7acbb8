import type { Progress, Suggestion } from './types.js';
import type { QueueState } from './queue.js';

const CATEGORY_NAMES: Record<string, string> = {
  M: 'masculine',
  F: 'feminine',
  A: 'ambiguous',
};

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

/** Sentence text with the flagged span wrapped in <mark>. */
export function highlightSpan(text: string, span: [number, number]): string {
  const [start, end] = span;
  return (
    escapeHtml(text.slice(0, start)) +
    `<mark>${escapeHtml(text.slice(start, end))}</mark>` +
    escapeHtml(text.slice(end))
  );
}

export function renderProgress(progress: Progress | null): string {
  if (!progress) return '<div class="progress">loading…</div>';
  const done = progress.total - progress.pending;
  const pct = progress.total === 0 ? 0 : Math.round((100 * done) / progress.total);
  return `<div class="progress">
  <div class="bar"><div class="fill" style="width:${pct}%"></div></div>
  <span>${done}/${progress.total} reviewed</span>
  <span class="counts">accepted ${progress.accepted} ·
    rejected ${progress.rejected} · edited ${progress.edited} ·
    pending ${progress.pending}</span>
</div>`;
}

export function renderRow(s: Suggestion, selected: boolean): string {
  const sideText = s.side === 'en' ? s.context.en_text : s.context.ja_text;
  const otherText = s.side === 'en' ? s.context.ja_text : s.context.en_text;
  const risk = s.agreement_risk
    ? '<span class="badge risk">agreement risk</span>'
    : '';
  const edited = s.edited_text
    ? ` → <code>${escapeHtml(s.edited_text)}</code>`
    : '';
  return `<li class="row status-${s.status}${selected ? ' selected' : ''}"
    data-id="${escapeHtml(s.suggestion_id)}">
  <div class="texts">
    <p class="flagged" lang="${s.side}">${highlightSpan(sideText, s.span)}</p>
    <p class="other">${escapeHtml(otherText)}</p>
  </div>
  <div class="meta">
    <code>${escapeHtml(s.proposed_token)}</code>${edited}
    <span class="badge cat-${s.category}">${CATEGORY_NAMES[s.category] ?? s.category}</span>
    ${risk}
    <span class="badge status">${s.status}</span>
  </div>
</li>`;
}

export function renderQueue(state: QueueState): string {
  if (state.banner) {
    return `<div class="banner" role="alert">${escapeHtml(state.banner)}
  <button data-action="retry">retry</button></div>`;
  }
  const progress = renderProgress(state.progress);
  if (state.items.length === 0) {
    return `${progress}\n<div class="empty">no suggestions match the current filters</div>`;
  }
  const rows = state.items
    .map((s, i) => renderRow(s, i === state.selectedIndex))
    .join('\n');
  const pages = Math.max(1, Math.ceil(state.totalFiltered / state.pageSize));
  return `${progress}
<ul class="queue">
${rows}
</ul>
<div class="pager">page ${state.page} of ${pages} — ${state.totalFiltered} suggestion(s)</div>
<div class="hint">a accept · r reject · e edit · j/k move</div>`;
}
