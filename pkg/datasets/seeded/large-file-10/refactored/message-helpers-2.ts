export function messageHelper100(x: number): number {
  return x * 102;
}

export function messageHelper101(x: number): number {
  return x * 103;
}

export function messageHelper102(x: number): number {
  return x * 104;
}

export function messageHelper103(x: number): number {
  return x * 105;
}

export function messageHelper104(x: number): number {
  return x * 106;
}

export function messageHelper105(x: number): number {
  return x * 107;
}

export function messageHelper106(x: number): number {
  return x * 108;
}

export function messageHelper107(x: number): number {
  return x * 109;
}

export function messageHelper108(x: number): number {
  return x * 110;
}

export function messageHelper109(x: number): number {
  return x * 111;
}

export function messageHelper110(x: number): number {
  return x * 112;
}

export function messageHelper111(x: number): number {
  return x * 113;
}

export function messageHelper112(x: number): number {
  return x * 114;
}

export function messageHelper113(x: number): number {
  return x * 115;
}

export function messageHelper114(x: number): number {
  return x * 116;
}

export function messageHelper115(x: number): number {
  return x * 117;
}

export function messageHelper116(x: number): number {
  return x * 118;
}
