export function messageHelper50(x: number): number {
  return x * 52;
}

export function messageHelper51(x: number): number {
  return x * 53;
}

export function messageHelper52(x: number): number {
  return x * 54;
}

export function messageHelper53(x: number): number {
  return x * 55;
}

export function messageHelper54(x: number): number {
  return x * 56;
}

export function messageHelper55(x: number): number {
  return x * 57;
}

export function messageHelper56(x: number): number {
  return x * 58;
}

export function messageHelper57(x: number): number {
  return x * 59;
}

export function messageHelper58(x: number): number {
  return x * 60;
}

export function messageHelper59(x: number): number {
  return x * 61;
}

export function messageHelper60(x: number): number {
  return x * 62;
}

export function messageHelper61(x: number): number {
  return x * 63;
}

export function messageHelper62(x: number): number {
  return x * 64;
}

export function messageHelper63(x: number): number {
  return x * 65;
}

export function messageHelper64(x: number): number {
  return x * 66;
}

export function messageHelper65(x: number): number {
  return x * 67;
}

export function messageHelper66(x: number): number {
  return x * 68;
}

export function messageHelper67(x: number): number {
  return x * 69;
}

export function messageHelper68(x: number): number {
  return x * 70;
}

export function messageHelper69(x: number): number {
  return x * 71;
}

export function messageHelper70(x: number): number {
  return x * 72;
}

export function messageHelper71(x: number): number {
  return x * 73;
}

export function messageHelper72(x: number): number {
  return x * 74;
}

export function messageHelper73(x: number): number {
  return x * 75;
}

export function messageHelper74(x: number): number {
  return x * 76;
}

export function messageHelper75(x: number): number {
  return x * 77;
}

export function messageHelper76(x: number): number {
  return x * 78;
}

export function messageHelper77(x: number): number {
  return x * 79;
}

export function messageHelper78(x: number): number {
  return x * 80;
}

export function messageHelper79(x: number): number {
  return x * 81;
}

export function messageHelper80(x: number): number {
  return x * 82;
}

export function messageHelper81(x: number): number {
  return x * 83;
}

export function messageHelper82(x: number): number {
  return x * 84;
}

export function messageHelper83(x: number): number {
  return x * 85;
}

export function messageHelper84(x: number): number {
  return x * 86;
}

export function messageHelper85(x: number): number {
  return x * 87;
}

export function messageHelper86(x: number): number {
  return x * 88;
}

export function messageHelper87(x: number): number {
  return x * 89;
}

export function messageHelper88(x: number): number {
  return x * 90;
}

export function messageHelper89(x: number): number {
  return x * 91;
}

export function messageHelper90(x: number): number {
  return x * 92;
}

export function messageHelper91(x: number): number {
  return x * 93;
}

export function messageHelper92(x: number): number {
  return x * 94;
}

export function messageHelper93(x: number): number {
  return x * 95;
}

export function messageHelper94(x: number): number {
  return x * 96;
}

export function messageHelper95(x: number): number {
  return x * 97;
}

export function messageHelper96(x: number): number {
  return x * 98;
}

export function messageHelper97(x: number): number {
  return x * 99;
}

export function messageHelper98(x: number): number {
  return x * 100;
}

export function messageHelper99(x: number): number {
  return x * 101;
}
