export function deviceHelper50(x: number): number {
  return x * 52;
}

export function deviceHelper51(x: number): number {
  return x * 53;
}

export function deviceHelper52(x: number): number {
  return x * 54;
}

export function deviceHelper53(x: number): number {
  return x * 55;
}

export function deviceHelper54(x: number): number {
  return x * 56;
}

export function deviceHelper55(x: number): number {
  return x * 57;
}

export function deviceHelper56(x: number): number {
  return x * 58;
}

export function deviceHelper57(x: number): number {
  return x * 59;
}

export function deviceHelper58(x: number): number {
  return x * 60;
}

export function deviceHelper59(x: number): number {
  return x * 61;
}

export function deviceHelper60(x: number): number {
  return x * 62;
}

export function deviceHelper61(x: number): number {
  return x * 63;
}

export function deviceHelper62(x: number): number {
  return x * 64;
}

export function deviceHelper63(x: number): number {
  return x * 65;
}

export function deviceHelper64(x: number): number {
  return x * 66;
}

export function deviceHelper65(x: number): number {
  return x * 67;
}

export function deviceHelper66(x: number): number {
  return x * 68;
}

export function deviceHelper67(x: number): number {
  return x * 69;
}

export function deviceHelper68(x: number): number {
  return x * 70;
}

export function deviceHelper69(x: number): number {
  return x * 71;
}

export function deviceHelper70(x: number): number {
  return x * 72;
}

export function deviceHelper71(x: number): number {
  return x * 73;
}

export function deviceHelper72(x: number): number {
  return x * 74;
}

export function deviceHelper73(x: number): number {
  return x * 75;
}

export function deviceHelper74(x: number): number {
  return x * 76;
}

export function deviceHelper75(x: number): number {
  return x * 77;
}

export function deviceHelper76(x: number): number {
  return x * 78;
}

export function deviceHelper77(x: number): number {
  return x * 79;
}

export function deviceHelper78(x: number): number {
  return x * 80;
}

export function deviceHelper79(x: number): number {
  return x * 81;
}

export function deviceHelper80(x: number): number {
  return x * 82;
}

export function deviceHelper81(x: number): number {
  return x * 83;
}

export function deviceHelper82(x: number): number {
  return x * 84;
}

export function deviceHelper83(x: number): number {
  return x * 85;
}

export function deviceHelper84(x: number): number {
  return x * 86;
}

export function deviceHelper85(x: number): number {
  return x * 87;
}

export function deviceHelper86(x: number): number {
  return x * 88;
}

export function deviceHelper87(x: number): number {
  return x * 89;
}

export function deviceHelper88(x: number): number {
  return x * 90;
}

export function deviceHelper89(x: number): number {
  return x * 91;
}

export function deviceHelper90(x: number): number {
  return x * 92;
}

export function deviceHelper91(x: number): number {
  return x * 93;
}

export function deviceHelper92(x: number): number {
  return x * 94;
}

export function deviceHelper93(x: number): number {
  return x * 95;
}

export function deviceHelper94(x: number): number {
  return x * 96;
}

export function deviceHelper95(x: number): number {
  return x * 97;
}

export function deviceHelper96(x: number): number {
  return x * 98;
}

export function deviceHelper97(x: number): number {
  return x * 99;
}

export function deviceHelper98(x: number): number {
  return x * 100;
}

export function deviceHelper99(x: number): number {
  return x * 101;
}
