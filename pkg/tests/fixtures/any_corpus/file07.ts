export const m = new Map<string, any>();
export const s = `template with any inside`;
