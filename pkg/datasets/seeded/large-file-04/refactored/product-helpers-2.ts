export function productHelper100(x: number): number {
  return x * 102;
}

export function productHelper101(x: number): number {
  return x * 103;
}

export function productHelper102(x: number): number {
  return x * 104;
}

export function productHelper103(x: number): number {
  return x * 105;
}

export function productHelper104(x: number): number {
  return x * 106;
}

export function productHelper105(x: number): number {
  return x * 107;
}

export function productHelper106(x: number): number {
  return x * 108;
}
