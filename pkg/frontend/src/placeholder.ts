// Client-side mirror of the service's placeholder token grammar:
//   [p] | [pN] | [pN:role] | [pN:role:list_id]
// Edits are validated here before any request is sent.

const TOKEN_RE = /^\[p([1-9][0-9]*)?(?::(subj|obj|poss|refl))?(?::([A-Za-z0-9_-]+))?\]$/;

export type ParsedToken = {
  index: number;
  role: string | null;
  listId: string | null;
};

export function parsePlaceholder(text: string): ParsedToken | null {
  const m = TOKEN_RE.exec(text);
  if (!m) return null;
  // a list id is only legal in the third slot, after an explicit role
  if (m[3] !== undefined && m[2] === undefined) return null;
  return {
    index: m[1] ? parseInt(m[1], 10) : 1,
    role: m[2] ?? null,
    listId: m[3] ?? null,
  };
}

/** A replacement is sendable if it is a valid token, or plain text that
 * does not pretend to be one. */
export function validateReplacement(text: string): string | null {
  if (text.length === 0) return 'replacement must not be empty';
  if (text.startsWith('[p') && parsePlaceholder(text) === null) {
    return `not a valid placeholder token: ${text}`;
  }
  return null;
}
