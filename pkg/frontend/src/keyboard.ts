export type KeyCommand =
  | { kind: 'decision'; action: 'accept' | 'reject' }
  | { kind: 'edit' }
  | { kind: 'move'; delta: 1 | -1 };

const IGNORED_TAGS = new Set(['INPUT', 'TEXTAREA', 'SELECT']);

/** Pure key -> command mapping so the bindings are unit-testable. */
export function commandForKey(
  key: string,
  targetTag: string | null,
  contentEditable = false,
): KeyCommand | null {
  if ((targetTag && IGNORED_TAGS.has(targetTag)) || contentEditable) {
    return null;
  }
  switch (key) {
    case 'a':
      return { kind: 'decision', action: 'accept' };
    case 'r':
      return { kind: 'decision', action: 'reject' };
    case 'e':
      return { kind: 'edit' };
    case 'j':
      return { kind: 'move', delta: 1 };
    case 'k':
      return { kind: 'move', delta: -1 };
    default:
      return null;
  }
}

export function bindKeys(
  target: Pick<Window, 'addEventListener' | 'removeEventListener'>,
  onCommand: (command: KeyCommand) => void,
): () => void {
  const handler = (event: Event) => {
    const keyEvent = event as KeyboardEvent;
    const element = keyEvent.target as HTMLElement | null;
    const command = commandForKey(
      keyEvent.key,
      element?.tagName ?? null,
      element?.isContentEditable ?? false,
    );
    if (command) {
      keyEvent.preventDefault();
      onCommand(command);
    }
  };
  target.addEventListener('keydown', handler);
  return () => target.removeEventListener('keydown', handler);
}
