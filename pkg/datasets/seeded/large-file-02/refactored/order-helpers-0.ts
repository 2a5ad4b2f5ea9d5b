export function orderHelper0(x: number): number {
  return x * 2;
}

export function orderHelper1(x: number): number {
  return x * 3;
}

export function orderHelper2(x: number): number {
  return x * 4;
}

export function orderHelper3(x: number): number {
  return x * 5;
}

export function orderHelper4(x: number): number {
  return x * 6;
}

export function orderHelper5(x: number): number {
  return x * 7;
}

export function orderHelper6(x: number): number {
  return x * 8;
}

export function orderHelper7(x: number): number {
  return x * 9;
}

export function orderHelper8(x: number): number {
  return x * 10;
}

export function orderHelper9(x: number): number {
  return x * 11;
}

export function orderHelper10(x: number): number {
  return x * 12;
}

export function orderHelper11(x: number): number {
  return x * 13;
}

export function orderHelper12(x: number): number {
  return x * 14;
}

export function orderHelper13(x: number): number {
  return x * 15;
}

export function orderHelper14(x: number): number {
  return x * 16;
}

export function orderHelper15(x: number): number {
  return x * 17;
}

export function orderHelper16(x: number): number {
  return x * 18;
}

export function orderHelper17(x: number): number {
  return x * 19;
}

export function orderHelper18(x: number): number {
  return x * 20;
}

export function orderHelper19(x: number): number {
  return x * 21;
}

export function orderHelper20(x: number): number {
  return x * 22;
}

export function orderHelper21(x: number): number {
  return x * 23;
}

export function orderHelper22(x: number): number {
  return x * 24;
}

export function orderHelper23(x: number): number {
  return x * 25;
}

export function orderHelper24(x: number): number {
  return x * 26;
}

export function orderHelper25(x: number): number {
  return x * 27;
}

export function orderHelper26(x: number): number {
  return x * 28;
}

export function orderHelper27(x: number): number {
  return x * 29;
}

export function orderHelper28(x: number): number {
  return x * 30;
}

export function orderHelper29(x: number): number {
  return x * 31;
}

export function orderHelper30(x: number): number {
  return x * 32;
}

export function orderHelper31(x: number): number {
  return x * 33;
}

export function orderHelper32(x: number): number {
  return x * 34;
}

export function orderHelper33(x: number): number {
  return x * 35;
}

export function orderHelper34(x: number): number {
  return x * 36;
}

export function orderHelper35(x: number): number {
  return x * 37;
}

export function orderHelper36(x: number): number {
  return x * 38;
}

export function orderHelper37(x: number): number {
  return x * 39;
}

export function orderHelper38(x: number): number {
  return x * 40;
}

export function orderHelper39(x: number): number {
  return x * 41;
}

export function orderHelper40(x: number): number {
  return x * 42;
}

export function orderHelper41(x: number): number {
  return x * 43;
}

export function orderHelper42(x: number): number {
  return x * 44;
}

export function orderHelper43(x: number): number {
  return x * 45;
}

export function orderHelper44(x: number): number {
  return x * 46;
}

export function orderHelper45(x: number): number {
  return x * 47;
}

export function orderHelper46(x: number): number {
  return x * 48;
}

export function orderHelper47(x: number): number {
  return x * 49;
}

export function orderHelper48(x: number): number {
  return x * 50;
}

export function orderHelper49(x: number): number {
  return x * 51;
}
