export function orderHelper100(x: number): number {
  return x * 102;
}

export function orderHelper101(x: number): number {
  return x * 103;
}

export function orderHelper102(x: number): number {
  return x * 104;
}
