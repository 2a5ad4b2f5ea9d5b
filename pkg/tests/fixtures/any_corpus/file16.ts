export const fn: (a: any, b: number) => any = (a) => a;
