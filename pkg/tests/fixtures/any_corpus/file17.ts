export const items = [1, 2, 3];
export const hasAny = items.some((n) => n > 2);
