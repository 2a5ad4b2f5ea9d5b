// any in a comment does not count
export const anyValue = 3;
export const label = 'any string';
