import { ApiError, type ReviewApi } from './api.js';
import { validateReplacement } from './placeholder.js';
import type {
  Action,
  Progress,
  QueueFilters,
  Suggestion,
} from './types.js';

export type DecisionOutcome =
  | { kind: 'ok'; suggestion: Suggestion }
  | { kind: 'validation'; message: string }
  | { kind: 'stale' }
  | { kind: 'busy' };

/** All queue state is derived from service responses; the only local
 * facts are the active filters, the page number and the cursor. */
export class QueueState {
  filters: QueueFilters = {};
  page = 1;
  readonly pageSize: number;
  items: Suggestion[] = [];
  totalFiltered = 0;
  progress: Progress | null = null;
  selectedIndex = -1;
  inFlight = false;
  banner: string | null = null;

  constructor(
    private readonly api: ReviewApi,
    pageSize = 20,
  ) {
    this.pageSize = pageSize;
  }

  get selected(): Suggestion | null {
    return this.items[this.selectedIndex] ?? null;
  }

  async refresh(): Promise<void> {
    try {
      const [pageData, progress] = await Promise.all([
        this.api.listSuggestions(this.filters, this.page, this.pageSize),
        this.api.progress(),
      ]);
      this.items = pageData.items;
      this.totalFiltered = pageData.total;
      this.progress = progress;
      this.banner = null;
      if (this.items.length === 0) {
        this.selectedIndex = -1;
      } else if (this.selectedIndex < 0) {
        this.selectedIndex = 0;
      } else if (this.selectedIndex >= this.items.length) {
        this.selectedIndex = this.items.length - 1;
      }
    } catch (err) {
      this.banner =
        err instanceof ApiError && err.status === 0
          ? 'review service unreachable — retry when it is back'
          : `failed to load queue: ${String(err)}`;
    }
  }

  async setFilters(filters: QueueFilters): Promise<void> {
    this.filters = filters;
    this.page = 1;
    this.selectedIndex = -1;
    await this.refresh();
  }

  async setPage(page: number): Promise<void> {
    this.page = Math.max(1, page);
    this.selectedIndex = -1;
    await this.refresh();
  }

  selectNext(): void {
    if (this.items.length === 0) return;
    this.selectedIndex = Math.min(this.selectedIndex + 1, this.items.length - 1);
  }

  selectPrev(): void {
    if (this.items.length === 0) return;
    this.selectedIndex = Math.max(this.selectedIndex - 1, 0);
  }

  private advanceToNextPending(): void {
    for (let i = this.selectedIndex + 1; i < this.items.length; i++) {
      const item = this.items[i];
      if (item && item.status === 'pending') {
        this.selectedIndex = i;
        return;
      }
    }
  }

  /** Single in-flight mutation; everything after the POST (row state,
   * progress counters) comes from the service, never local arithmetic. */
  async decide(action: Action, replacement?: string): Promise<DecisionOutcome> {
    const target = this.selected;
    if (target === null) return { kind: 'validation', message: 'nothing selected' };
    if (this.inFlight) return { kind: 'busy' };
    if (action === 'edit') {
      const problem = validateReplacement(replacement ?? '');
      if (problem !== null) return { kind: 'validation', message: problem };
    }
    this.inFlight = true;
    try {
      const { suggestion } = await this.api.submitDecision(
        target.suggestion_id,
        action,
        replacement,
      );
      this.items[this.selectedIndex] = suggestion;
      this.progress = await this.api.progress();
      this.advanceToNextPending();
      return { kind: 'ok', suggestion };
    } catch (err) {
      if (err instanceof ApiError && err.status === 404) {
        return { kind: 'stale' };
      }
      if (err instanceof ApiError && err.status === 400) {
        return { kind: 'validation', message: err.message };
      }
      throw err;
    } finally {
      this.inFlight = false;
    }
  }
}
