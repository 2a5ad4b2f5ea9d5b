export function orderHelper50(x: number): number {
  return x * 52;
}

export function orderHelper51(x: number): number {
  return x * 53;
}

export function orderHelper52(x: number): number {
  return x * 54;
}

export function orderHelper53(x: number): number {
  return x * 55;
}

export function orderHelper54(x: number): number {
  return x * 56;
}

export function orderHelper55(x: number): number {
  return x * 57;
}

export function orderHelper56(x: number): number {
  return x * 58;
}

export function orderHelper57(x: number): number {
  return x * 59;
}

export function orderHelper58(x: number): number {
  return x * 60;
}

export function orderHelper59(x: number): number {
  return x * 61;
}

export function orderHelper60(x: number): number {
  return x * 62;
}

export function orderHelper61(x: number): number {
  return x * 63;
}

export function orderHelper62(x: number): number {
  return x * 64;
}

export function orderHelper63(x: number): number {
  return x * 65;
}

export function orderHelper64(x: number): number {
  return x * 66;
}

export function orderHelper65(x: number): number {
  return x * 67;
}

export function orderHelper66(x: number): number {
  return x * 68;
}

export function orderHelper67(x: number): number {
  return x * 69;
}

export function orderHelper68(x: number): number {
  return x * 70;
}

export function orderHelper69(x: number): number {
  return x * 71;
}

export function orderHelper70(x: number): number {
  return x * 72;
}

export function orderHelper71(x: number): number {
  return x * 73;
}

export function orderHelper72(x: number): number {
  return x * 74;
}

export function orderHelper73(x: number): number {
  return x * 75;
}

export function orderHelper74(x: number): number {
  return x * 76;
}

export function orderHelper75(x: number): number {
  return x * 77;
}

export function orderHelper76(x: number): number {
  return x * 78;
}

export function orderHelper77(x: number): number {
  return x * 79;
}

export function orderHelper78(x: number): number {
  return x * 80;
}

export function orderHelper79(x: number): number {
  return x * 81;
}

export function orderHelper80(x: number): number {
  return x * 82;
}

export function orderHelper81(x: number): number {
  return x * 83;
}

export function orderHelper82(x: number): number {
  return x * 84;
}

export function orderHelper83(x: number): number {
  return x * 85;
}

export function orderHelper84(x: number): number {
  return x * 86;
}

export function orderHelper85(x: number): number {
  return x * 87;
}

export function orderHelper86(x: number): number {
  return x * 88;
}

export function orderHelper87(x: number): number {
  return x * 89;
}

export function orderHelper88(x: number): number {
  return x * 90;
}

export function orderHelper89(x: number): number {
  return x * 91;
}

export function orderHelper90(x: number): number {
  return x * 92;
}

export function orderHelper91(x: number): number {
  return x * 93;
}

export function orderHelper92(x: number): number {
  return x * 94;
}

export function orderHelper93(x: number): number {
  return x * 95;
}

export function orderHelper94(x: number): number {
  return x * 96;
}

export function orderHelper95(x: number): number {
  return x * 97;
}

export function orderHelper96(x: number): number {
  return x * 98;
}

export function orderHelper97(x: number): number {
  return x * 99;
}

export function orderHelper98(x: number): number {
  return x * 100;
}

export function orderHelper99(x: number): number {
  return x * 101;
}
