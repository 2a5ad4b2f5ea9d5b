export type Loose = any;
export type Pair = [any, string];
