export function generic<T = any>(x: T): T {
  return x;
}
