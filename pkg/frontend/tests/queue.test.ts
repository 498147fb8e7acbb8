import { describe, expect, it } from 'vitest';

import { QueueState } from '../src/queue.js';
import { renderQueue } from '../src/render.js';
import { FakeService, fixtureSuggestion } from './fake_service.js';

function makeService(): FakeService {
  return new FakeService([
    fixtureSuggestion({ suggestion_id: '1-2:en:0:2' }),
    fixtureSuggestion({
      suggestion_id: '1-2:ja:0:1',
      side: 'ja',
      span: [0, 1],
      surface: '彼',
      proposed_token: '[p1]',
      paradigm_id: 'kare',
    }),
    fixtureSuggestion({
      suggestion_id: '3-4:en:0:3',
      pair_id: '3-4',
      span: [0, 3],
      surface: 'She',
      proposed_token: '[p1:subj]',
      category: 'F',
      paradigm_id: 'she',
      context: { en_text: 'She ran.', ja_text: '彼女は走った。' },
    }),
  ]);
}

describe('QueueState', () => {
  it('starts with everything pending and the first row selected', async () => {
    const state = new QueueState(makeService());
    await state.refresh();
    expect(state.items).toHaveLength(3);
    expect(state.items.every((s) => s.status === 'pending')).toBe(true);
    expect(state.selectedIndex).toBe(0);
    expect(state.progress).toEqual({
      pending: 3,
      accepted: 0,
      rejected: 0,
      edited: 0,
      total: 3,
    });
  });

  it('mirrors the service category filter', async () => {
    const state = new QueueState(makeService());
    await state.setFilters({ category: 'F' });
    expect(state.items.map((s) => s.surface)).toEqual(['She']);
  });

  it('accept updates the row and takes progress from the server', async () => {
    const state = new QueueState(makeService());
    await state.refresh();
    const outcome = await state.decide('accept');
    expect(outcome.kind).toBe('ok');
    expect(state.items[0]?.status).toBe('accepted');
    expect(state.progress?.accepted).toBe(1);
    expect(state.progress?.pending).toBe(2);
    // selection advanced to the next pending row
    expect(state.selected?.status).toBe('pending');
    expect(state.selectedIndex).toBe(1);
  });

  it('rejects an invalid edit client-side without any request', async () => {
    const service = makeService();
    const state = new QueueState(service);
    await state.refresh();
    const before = service.decisionsSeen;
    const outcome = await state.decide('edit', '[p2');
    expect(outcome.kind).toBe('validation');
    expect(service.decisionsSeen).toBe(before);
    expect(state.items[0]?.status).toBe('pending');
  });

  it('sends a valid edit and shows the replacement', async () => {
    const state = new QueueState(makeService());
    await state.refresh();
    const outcome = await state.decide('edit', '[p2:obj]');
    expect(outcome.kind).toBe('ok');
    expect(state.items[0]?.edited_text).toBe('[p2:obj]');
    expect(state.progress?.edited).toBe(1);
  });

  it('guards against double submit with the in-flight flag', async () => {
    const service = makeService();
    service.delayMs = 10;
    const state = new QueueState(service);
    await state.refresh();
    const [first, second] = await Promise.all([
      state.decide('accept'),
      state.decide('accept'),
    ]);
    expect([first.kind, second.kind].sort()).toEqual(['busy', 'ok']);
    expect(service.decisionsSeen).toBe(1);
  });

  it('marks a vanished suggestion stale via 404', async () => {
    const service = makeService();
    const state = new QueueState(service);
    await state.refresh();
    const target = state.items[0];
    if (!target) throw new Error('fixture empty');
    target.suggestion_id = 'gone';
    const outcome = await state.decide('accept');
    expect(outcome.kind).toBe('stale');
  });

  it('shows a blocking banner when the service is unreachable', async () => {
    const state = new QueueState({
      progress: () => Promise.reject(new Error('ECONNREFUSED')),
      listSuggestions: () => Promise.reject(new Error('ECONNREFUSED')),
      submitDecision: () => Promise.reject(new Error('ECONNREFUSED')),
    });
    await state.refresh();
    expect(state.banner).toMatch(/failed|unreachable/);
    expect(renderQueue(state)).toContain('retry');
  });

  it('j/k navigation clamps to the page', async () => {
    const state = new QueueState(makeService());
    await state.refresh();
    state.selectPrev();
    expect(state.selectedIndex).toBe(0);
    for (let i = 0; i < 10; i++) state.selectNext();
    expect(state.selectedIndex).toBe(2);
  });
});

describe('renderQueue', () => {
  it('renders pending badges, both languages and the highlighted span', async () => {
    const state = new QueueState(makeService());
    await state.refresh();
    const html = renderQueue(state);
    expect(html).toContain('<mark>He</mark>');
    expect(html).toContain('彼は走った。');
    expect(html).toContain('[p1:subj]');
    expect((html.match(/badge status">pending/g) ?? []).length).toBe(3);
    expect(html).toContain('class="row status-pending selected"');
  });

  it('renders the explicit empty state', async () => {
    const state = new QueueState(new FakeService([]));
    await state.refresh();
    expect(renderQueue(state)).toContain('no suggestions');
  });

  it('escapes sentence text', async () => {
    const state = new QueueState(
      new FakeService([
        fixtureSuggestion({
          suggestion_id: 'x',
          context: { en_text: 'He <b>ran</b>.', ja_text: '彼は走った。' },
        }),
      ]),
    );
    await state.refresh();
    const html = renderQueue(state);
    expect(html).not.toContain('<b>');
    expect(html).toContain('&lt;b&gt;');
  });
});
