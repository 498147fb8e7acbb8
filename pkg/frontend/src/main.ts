import { ApiClient } from './api.js';
import { bindKeys } from './keyboard.js';
import { QueueState } from './queue.js';
import { renderQueue } from './render.js';
import type { QueueFilters } from './types.js';

function readFilters(root: Document): QueueFilters {
  const value = (id: string) =>
    (root.querySelector<HTMLSelectElement>(`#${id}`)?.value ?? '') || undefined;
  return {
    status: value('filter-status') as QueueFilters['status'],
    category: value('filter-category') as QueueFilters['category'],
    lang: value('filter-lang') as QueueFilters['lang'],
  };
}

export async function boot(root: Document = document): Promise<QueueState> {
  const api = new ApiClient('');
  const state = new QueueState(api);
  const container = root.querySelector('#queue');
  if (!container) throw new Error('missing #queue container');

  const redraw = () => {
    container.innerHTML = renderQueue(state);
  };

  const decide = async (action: 'accept' | 'reject' | 'edit') => {
    let replacement: string | undefined;
    if (action === 'edit') {
      const entered = root.defaultView?.prompt(
        'replacement token or text',
        state.selected?.proposed_token ?? '[p]',
      );
      if (entered === null || entered === undefined) return;
      replacement = entered;
    }
    const outcome = await state.decide(action, replacement);
    if (outcome.kind === 'validation') {
      root.defaultView?.alert(outcome.message);
    } else if (outcome.kind === 'stale') {
      await state.refresh();
    }
    redraw();
  };

  for (const id of ['filter-status', 'filter-category', 'filter-lang']) {
    root.querySelector(`#${id}`)?.addEventListener('change', async () => {
      await state.setFilters(readFilters(root));
      redraw();
    });
  }
  container.addEventListener('click', async (event) => {
    const target = event.target as HTMLElement;
    if (target.dataset.action === 'retry') {
      await state.refresh();
      redraw();
    }
  });
  if (root.defaultView) {
    bindKeys(root.defaultView, (command) => {
      if (command.kind === 'decision') void decide(command.action);
      else if (command.kind === 'edit') void decide('edit');
      else if (command.delta === 1) {
        state.selectNext();
        redraw();
      } else {
        state.selectPrev();
        redraw();
      }
    });
  }

  await state.refresh();
  redraw();
  return state;
}

if (typeof document !== 'undefined' && document.querySelector('#queue')) {
  void boot();
}
