export function patientHelper100(x: number): number {
  return x * 102;
}

export function patientHelper101(x: number): number {
  return x * 103;
}

export function patientHelper102(x: number): number {
  return x * 104;
}

export function patientHelper103(x: number): number {
  return x * 105;
}

export function patientHelper104(x: number): number {
  return x * 106;
}

export function patientHelper105(x: number): number {
  return x * 107;
}

export function patientHelper106(x: number): number {
  return x * 108;
}

export function patientHelper107(x: number): number {
  return x * 109;
}

export function patientHelper108(x: number): number {
  return x * 110;
}

export function patientHelper109(x: number): number {
  return x * 111;
}

export function patientHelper110(x: number): number {
  return x * 112;
}

export function patientHelper111(x: number): number {
  return x * 113;
}

export function patientHelper112(x: number): number {
  return x * 114;
}

export function patientHelper113(x: number): number {
  return x * 115;
}

export function patientHelper114(x: number): number {
  return x * 116;
}

export function patientHelper115(x: number): number {
  return x * 117;
}

export function patientHelper116(x: number): number {
  return x * 118;
}

export function patientHelper117(x: number): number {
  return x * 119;
}

export function patientHelper118(x: number): number {
  return x * 120;
}

export function patientHelper119(x: number): number {
  return x * 121;
}

export function patientHelper120(x: number): number {
  return x * 122;
}
