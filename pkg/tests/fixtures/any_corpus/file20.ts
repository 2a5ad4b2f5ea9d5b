export let counter: number = 0;
export let loose;
loose = counter as any as number;
