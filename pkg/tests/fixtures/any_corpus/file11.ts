export const union: string | any = 'x';
export const record: Record<string, any> = {};
