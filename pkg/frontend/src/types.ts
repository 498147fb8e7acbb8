export type Side = 'en' | 'ja';
export type Category = 'M' | 'F' | 'A';
export type Status = 'pending' | 'accepted' | 'rejected' | 'edited';
export type Action = 'accept' | 'reject' | 'edit';

export type Suggestion = {
  suggestion_id: string;
  pair_id: string;
  side: Side;
  span: [number, number];
  surface: string;
  proposed_token: string;
  category: Category;
  paradigm_id: string | null;
  agreement_risk: boolean;
  status: Status;
  edited_text: string | null;
  context: { en_text: string; ja_text: string };
};

export type Progress = {
  pending: number;
  accepted: number;
  rejected: number;
  edited: number;
  total: number;
};

export type SuggestionPage = {
  page: number;
  page_size: number;
  total: number;
  items: Suggestion[];
};

export type QueueFilters = {
  status?: Status;
  category?: Category;
  lang?: Side;
};
