export function destructure({ a, b }: any) {
  return a + b;
}
export const canyon = 'any';
