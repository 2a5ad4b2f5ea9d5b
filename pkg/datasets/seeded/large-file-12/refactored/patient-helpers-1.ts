export function patientHelper50(x: number): number {
  return x * 52;
}

export function patientHelper51(x: number): number {
  return x * 53;
}

export function patientHelper52(x: number): number {
  return x * 54;
}

export function patientHelper53(x: number): number {
  return x * 55;
}

export function patientHelper54(x: number): number {
  return x * 56;
}

export function patientHelper55(x: number): number {
  return x * 57;
}

export function patientHelper56(x: number): number {
  return x * 58;
}

export function patientHelper57(x: number): number {
  return x * 59;
}

export function patientHelper58(x: number): number {
  return x * 60;
}

export function patientHelper59(x: number): number {
  return x * 61;
}

export function patientHelper60(x: number): number {
  return x * 62;
}

export function patientHelper61(x: number): number {
  return x * 63;
}

export function patientHelper62(x: number): number {
  return x * 64;
}

export function patientHelper63(x: number): number {
  return x * 65;
}

export function patientHelper64(x: number): number {
  return x * 66;
}

export function patientHelper65(x: number): number {
  return x * 67;
}

export function patientHelper66(x: number): number {
  return x * 68;
}

export function patientHelper67(x: number): number {
  return x * 69;
}

export function patientHelper68(x: number): number {
  return x * 70;
}

export function patientHelper69(x: number): number {
  return x * 71;
}

export function patientHelper70(x: number): number {
  return x * 72;
}

export function patientHelper71(x: number): number {
  return x * 73;
}

export function patientHelper72(x: number): number {
  return x * 74;
}

export function patientHelper73(x: number): number {
  return x * 75;
}

export function patientHelper74(x: number): number {
  return x * 76;
}

export function patientHelper75(x: number): number {
  return x * 77;
}

export function patientHelper76(x: number): number {
  return x * 78;
}

export function patientHelper77(x: number): number {
  return x * 79;
}

export function patientHelper78(x: number): number {
  return x * 80;
}

export function patientHelper79(x: number): number {
  return x * 81;
}

export function patientHelper80(x: number): number {
  return x * 82;
}

export function patientHelper81(x: number): number {
  return x * 83;
}

export function patientHelper82(x: number): number {
  return x * 84;
}

export function patientHelper83(x: number): number {
  return x * 85;
}

export function patientHelper84(x: number): number {
  return x * 86;
}

export function patientHelper85(x: number): number {
  return x * 87;
}

export function patientHelper86(x: number): number {
  return x * 88;
}

export function patientHelper87(x: number): number {
  return x * 89;
}

export function patientHelper88(x: number): number {
  return x * 90;
}

export function patientHelper89(x: number): number {
  return x * 91;
}

export function patientHelper90(x: number): number {
  return x * 92;
}

export function patientHelper91(x: number): number {
  return x * 93;
}

export function patientHelper92(x: number): number {
  return x * 94;
}

export function patientHelper93(x: number): number {
  return x * 95;
}

export function patientHelper94(x: number): number {
  return x * 96;
}

export function patientHelper95(x: number): number {
  return x * 97;
}

export function patientHelper96(x: number): number {
  return x * 98;
}

export function patientHelper97(x: number): number {
  return x * 99;
}

export function patientHelper98(x: number): number {
  return x * 100;
}

export function patientHelper99(x: number): number {
  return x * 101;
}
