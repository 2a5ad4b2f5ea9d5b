export function deviceHelper100(x: number): number {
  return x * 102;
}

export function deviceHelper101(x: number): number {
  return x * 103;
}

export function deviceHelper102(x: number): number {
  return x * 104;
}

export function deviceHelper103(x: number): number {
  return x * 105;
}

export function deviceHelper104(x: number): number {
  return x * 106;
}

export function deviceHelper105(x: number): number {
  return x * 107;
}

export function deviceHelper106(x: number): number {
  return x * 108;
}

export function deviceHelper107(x: number): number {
  return x * 109;
}

export function deviceHelper108(x: number): number {
  return x * 110;
}

export function deviceHelper109(x: number): number {
  return x * 111;
}

export function deviceHelper110(x: number): number {
  return x * 112;
}

export function deviceHelper111(x: number): number {
  return x * 113;
}

export function deviceHelper112(x: number): number {
  return x * 114;
}

export function deviceHelper113(x: number): number {
  return x * 115;
}
