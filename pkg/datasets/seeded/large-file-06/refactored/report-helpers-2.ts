export function reportHelper100(x: number): number {
  return x * 102;
}

export function reportHelper101(x: number): number {
  return x * 103;
}

export function reportHelper102(x: number): number {
  return x * 104;
}

export function reportHelper103(x: number): number {
  return x * 105;
}

export function reportHelper104(x: number): number {
  return x * 106;
}

export function reportHelper105(x: number): number {
  return x * 107;
}

export function reportHelper106(x: number): number {
  return x * 108;
}

export function reportHelper107(x: number): number {
  return x * 109;
}

export function reportHelper108(x: number): number {
  return x * 110;
}

export function reportHelper109(x: number): number {
  return x * 111;
}
