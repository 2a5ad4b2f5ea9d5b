export function reportHelper50(x: number): number {
  return x * 52;
}

export function reportHelper51(x: number): number {
  return x * 53;
}

export function reportHelper52(x: number): number {
  return x * 54;
}

export function reportHelper53(x: number): number {
  return x * 55;
}

export function reportHelper54(x: number): number {
  return x * 56;
}

export function reportHelper55(x: number): number {
  return x * 57;
}

export function reportHelper56(x: number): number {
  return x * 58;
}

export function reportHelper57(x: number): number {
  return x * 59;
}

export function reportHelper58(x: number): number {
  return x * 60;
}

export function reportHelper59(x: number): number {
  return x * 61;
}

export function reportHelper60(x: number): number {
  return x * 62;
}

export function reportHelper61(x: number): number {
  return x * 63;
}

export function reportHelper62(x: number): number {
  return x * 64;
}

export function reportHelper63(x: number): number {
  return x * 65;
}

export function reportHelper64(x: number): number {
  return x * 66;
}

export function reportHelper65(x: number): number {
  return x * 67;
}

export function reportHelper66(x: number): number {
  return x * 68;
}

export function reportHelper67(x: number): number {
  return x * 69;
}

export function reportHelper68(x: number): number {
  return x * 70;
}

export function reportHelper69(x: number): number {
  return x * 71;
}

export function reportHelper70(x: number): number {
  return x * 72;
}

export function reportHelper71(x: number): number {
  return x * 73;
}

export function reportHelper72(x: number): number {
  return x * 74;
}

export function reportHelper73(x: number): number {
  return x * 75;
}

export function reportHelper74(x: number): number {
  return x * 76;
}

export function reportHelper75(x: number): number {
  return x * 77;
}

export function reportHelper76(x: number): number {
  return x * 78;
}

export function reportHelper77(x: number): number {
  return x * 79;
}

export function reportHelper78(x: number): number {
  return x * 80;
}

export function reportHelper79(x: number): number {
  return x * 81;
}

export function reportHelper80(x: number): number {
  return x * 82;
}

export function reportHelper81(x: number): number {
  return x * 83;
}

export function reportHelper82(x: number): number {
  return x * 84;
}

export function reportHelper83(x: number): number {
  return x * 85;
}

export function reportHelper84(x: number): number {
  return x * 86;
}

export function reportHelper85(x: number): number {
  return x * 87;
}

export function reportHelper86(x: number): number {
  return x * 88;
}

export function reportHelper87(x: number): number {
  return x * 89;
}

export function reportHelper88(x: number): number {
  return x * 90;
}

export function reportHelper89(x: number): number {
  return x * 91;
}

export function reportHelper90(x: number): number {
  return x * 92;
}

export function reportHelper91(x: number): number {
  return x * 93;
}

export function reportHelper92(x: number): number {
  return x * 94;
}

export function reportHelper93(x: number): number {
  return x * 95;
}

export function reportHelper94(x: number): number {
  return x * 96;
}

export function reportHelper95(x: number): number {
  return x * 97;
}

export function reportHelper96(x: number): number {
  return x * 98;
}

export function reportHelper97(x: number): number {
  return x * 99;
}

export function reportHelper98(x: number): number {
  return x * 100;
}

export function reportHelper99(x: number): number {
  return x * 101;
}
