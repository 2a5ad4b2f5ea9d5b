export const promise: Promise<any> = Promise.resolve(1);
export const nested: Array<Array<any>> = [];
