import type {
  Action,
  Progress,
  QueueFilters,
  Suggestion,
  SuggestionPage,
} from './types.js';

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = 'ApiError';
  }
}

export interface ReviewApi {
  progress(): Promise<Progress>;
  listSuggestions(
    filters: QueueFilters,
    page: number,
    pageSize: number,
  ): Promise<SuggestionPage>;
  submitDecision(
    suggestionId: string,
    action: Action,
    replacement?: string,
  ): Promise<{ suggestion: Suggestion }>;
}

/** Thin typed wrapper over the review service; the UI's only backend. */
export class ApiClient implements ReviewApi {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    let response: Response;
    try {
      response = await this.fetchFn(`${this.baseUrl}/api/v1${path}`, init);
    } catch (err) {
      throw new ApiError(0, `service unreachable: ${String(err)}`);
    }
    const body = (await response.json()) as T & { error?: string };
    if (!response.ok) {
      throw new ApiError(response.status, body.error ?? response.statusText);
    }
    return body;
  }

  health(): Promise<{ status: string; corpus_digest: string }> {
    return this.request('/health');
  }

  progress(): Promise<Progress> {
    return this.request('/progress');
  }

  listSuggestions(
    filters: QueueFilters,
    page: number,
    pageSize: number,
  ): Promise<SuggestionPage> {
    const params = new URLSearchParams();
    if (filters.status) params.set('status', filters.status);
    if (filters.category) params.set('category', filters.category);
    if (filters.lang) params.set('lang', filters.lang);
    params.set('page', String(page));
    params.set('page_size', String(pageSize));
    return this.request(`/suggestions?${params.toString()}`);
  }

  submitDecision(
    suggestionId: string,
    action: Action,
    replacement?: string,
  ): Promise<{ suggestion: Suggestion }> {
    return this.request(
      `/suggestions/${encodeURIComponent(suggestionId)}/decision`,
      {
        method: 'POST',
        headers: { 'Content-Type': 'application/json' },
        body: JSON.stringify(
          replacement === undefined ? { action } : { action, replacement },
        ),
      },
    );
  }
}
