export function productHelper50(x: number): number {
  return x * 52;
}

export function productHelper51(x: number): number {
  return x * 53;
}

export function productHelper52(x: number): number {
  return x * 54;
}

export function productHelper53(x: number): number {
  return x * 55;
}

export function productHelper54(x: number): number {
  return x * 56;
}

export function productHelper55(x: number): number {
  return x * 57;
}

export function productHelper56(x: number): number {
  return x * 58;
}

export function productHelper57(x: number): number {
  return x * 59;
}

export function productHelper58(x: number): number {
  return x * 60;
}

export function productHelper59(x: number): number {
  return x * 61;
}

export function productHelper60(x: number): number {
  return x * 62;
}

export function productHelper61(x: number): number {
  return x * 63;
}

export function productHelper62(x: number): number {
  return x * 64;
}

export function productHelper63(x: number): number {
  return x * 65;
}

export function productHelper64(x: number): number {
  return x * 66;
}

export function productHelper65(x: number): number {
  return x * 67;
}

export function productHelper66(x: number): number {
  return x * 68;
}

export function productHelper67(x: number): number {
  return x * 69;
}

export function productHelper68(x: number): number {
  return x * 70;
}

export function productHelper69(x: number): number {
  return x * 71;
}

export function productHelper70(x: number): number {
  return x * 72;
}

export function productHelper71(x: number): number {
  return x * 73;
}

export function productHelper72(x: number): number {
  return x * 74;
}

export function productHelper73(x: number): number {
  return x * 75;
}

export function productHelper74(x: number): number {
  return x * 76;
}

export function productHelper75(x: number): number {
  return x * 77;
}

export function productHelper76(x: number): number {
  return x * 78;
}

export function productHelper77(x: number): number {
  return x * 79;
}

export function productHelper78(x: number): number {
  return x * 80;
}

export function productHelper79(x: number): number {
  return x * 81;
}

export function productHelper80(x: number): number {
  return x * 82;
}

export function productHelper81(x: number): number {
  return x * 83;
}

export function productHelper82(x: number): number {
  return x * 84;
}

export function productHelper83(x: number): number {
  return x * 85;
}

export function productHelper84(x: number): number {
  return x * 86;
}

export function productHelper85(x: number): number {
  return x * 87;
}

export function productHelper86(x: number): number {
  return x * 88;
}

export function productHelper87(x: number): number {
  return x * 89;
}

export function productHelper88(x: number): number {
  return x * 90;
}

export function productHelper89(x: number): number {
  return x * 91;
}

export function productHelper90(x: number): number {
  return x * 92;
}

export function productHelper91(x: number): number {
  return x * 93;
}

export function productHelper92(x: number): number {
  return x * 94;
}

export function productHelper93(x: number): number {
  return x * 95;
}

export function productHelper94(x: number): number {
  return x * 96;
}

export function productHelper95(x: number): number {
  return x * 97;
}

export function productHelper96(x: number): number {
  return x * 98;
}

export function productHelper97(x: number): number {
  return x * 99;
}

export function productHelper98(x: number): number {
  return x * 100;
}

export function productHelper99(x: number): number {
  return x * 101;
}
