export function productHelper0(x: number): number {
  return x * 2;
}

export function productHelper1(x: number): number {
  return x * 3;
}

export function productHelper2(x: number): number {
  return x * 4;
}

export function productHelper3(x: number): number {
  return x * 5;
}

export function productHelper4(x: number): number {
  return x * 6;
}

export function productHelper5(x: number): number {
  return x * 7;
}

export function productHelper6(x: number): number {
  return x * 8;
}

export function productHelper7(x: number): number {
  return x * 9;
}

export function productHelper8(x: number): number {
  return x * 10;
}

export function productHelper9(x: number): number {
  return x * 11;
}

export function productHelper10(x: number): number {
  return x * 12;
}

export function productHelper11(x: number): number {
  return x * 13;
}

export function productHelper12(x: number): number {
  return x * 14;
}

export function productHelper13(x: number): number {
  return x * 15;
}

export function productHelper14(x: number): number {
  return x * 16;
}

export function productHelper15(x: number): number {
  return x * 17;
}

export function productHelper16(x: number): number {
  return x * 18;
}

export function productHelper17(x: number): number {
  return x * 19;
}

export function productHelper18(x: number): number {
  return x * 20;
}

export function productHelper19(x: number): number {
  return x * 21;
}

export function productHelper20(x: number): number {
  return x * 22;
}

export function productHelper21(x: number): number {
  return x * 23;
}

export function productHelper22(x: number): number {
  return x * 24;
}

export function productHelper23(x: number): number {
  return x * 25;
}

export function productHelper24(x: number): number {
  return x * 26;
}

export function productHelper25(x: number): number {
  return x * 27;
}

export function productHelper26(x: number): number {
  return x * 28;
}

export function productHelper27(x: number): number {
  return x * 29;
}

export function productHelper28(x: number): number {
  return x * 30;
}

export function productHelper29(x: number): number {
  return x * 31;
}

export function productHelper30(x: number): number {
  return x * 32;
}

export function productHelper31(x: number): number {
  return x * 33;
}

export function productHelper32(x: number): number {
  return x * 34;
}

export function productHelper33(x: number): number {
  return x * 35;
}

export function productHelper34(x: number): number {
  return x * 36;
}

export function productHelper35(x: number): number {
  return x * 37;
}

export function productHelper36(x: number): number {
  return x * 38;
}

export function productHelper37(x: number): number {
  return x * 39;
}

export function productHelper38(x: number): number {
  return x * 40;
}

export function productHelper39(x: number): number {
  return x * 41;
}

export function productHelper40(x: number): number {
  return x * 42;
}

export function productHelper41(x: number): number {
  return x * 43;
}

export function productHelper42(x: number): number {
  return x * 44;
}

export function productHelper43(x: number): number {
  return x * 45;
}

export function productHelper44(x: number): number {
  return x * 46;
}

export function productHelper45(x: number): number {
  return x * 47;
}

export function productHelper46(x: number): number {
  return x * 48;
}

export function productHelper47(x: number): number {
  return x * 49;
}

export function productHelper48(x: number): number {
  return x * 50;
}

export function productHelper49(x: number): number {
  return x * 51;
}
