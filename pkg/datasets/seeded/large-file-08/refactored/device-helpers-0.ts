export function deviceHelper0(x: number): number {
  return x * 2;
}

export function deviceHelper1(x: number): number {
  return x * 3;
}

export function deviceHelper2(x: number): number {
  return x * 4;
}

export function deviceHelper3(x: number): number {
  return x * 5;
}

export function deviceHelper4(x: number): number {
  return x * 6;
}

export function deviceHelper5(x: number): number {
  return x * 7;
}

export function deviceHelper6(x: number): number {
  return x * 8;
}

export function deviceHelper7(x: number): number {
  return x * 9;
}

export function deviceHelper8(x: number): number {
  return x * 10;
}

export function deviceHelper9(x: number): number {
  return x * 11;
}

export function deviceHelper10(x: number): number {
  return x * 12;
}

export function deviceHelper11(x: number): number {
  return x * 13;
}

export function deviceHelper12(x: number): number {
  return x * 14;
}

export function deviceHelper13(x: number): number {
  return x * 15;
}

export function deviceHelper14(x: number): number {
  return x * 16;
}

export function deviceHelper15(x: number): number {
  return x * 17;
}

export function deviceHelper16(x: number): number {
  return x * 18;
}

export function deviceHelper17(x: number): number {
  return x * 19;
}

export function deviceHelper18(x: number): number {
  return x * 20;
}

export function deviceHelper19(x: number): number {
  return x * 21;
}

export function deviceHelper20(x: number): number {
  return x * 22;
}

export function deviceHelper21(x: number): number {
  return x * 23;
}

export function deviceHelper22(x: number): number {
  return x * 24;
}

export function deviceHelper23(x: number): number {
  return x * 25;
}

export function deviceHelper24(x: number): number {
  return x * 26;
}

export function deviceHelper25(x: number): number {
  return x * 27;
}

export function deviceHelper26(x: number): number {
  return x * 28;
}

export function deviceHelper27(x: number): number {
  return x * 29;
}

export function deviceHelper28(x: number): number {
  return x * 30;
}

export function deviceHelper29(x: number): number {
  return x * 31;
}

export function deviceHelper30(x: number): number {
  return x * 32;
}

export function deviceHelper31(x: number): number {
  return x * 33;
}

export function deviceHelper32(x: number): number {
  return x * 34;
}

export function deviceHelper33(x: number): number {
  return x * 35;
}

export function deviceHelper34(x: number): number {
  return x * 36;
}

export function deviceHelper35(x: number): number {
  return x * 37;
}

export function deviceHelper36(x: number): number {
  return x * 38;
}

export function deviceHelper37(x: number): number {
  return x * 39;
}

export function deviceHelper38(x: number): number {
  return x * 40;
}

export function deviceHelper39(x: number): number {
  return x * 41;
}

export function deviceHelper40(x: number): number {
  return x * 42;
}

export function deviceHelper41(x: number): number {
  return x * 43;
}

export function deviceHelper42(x: number): number {
  return x * 44;
}

export function deviceHelper43(x: number): number {
  return x * 45;
}

export function deviceHelper44(x: number): number {
  return x * 46;
}

export function deviceHelper45(x: number): number {
  return x * 47;
}

export function deviceHelper46(x: number): number {
  return x * 48;
}

export function deviceHelper47(x: number): number {
  return x * 49;
}

export function deviceHelper48(x: number): number {
  return x * 50;
}

export function deviceHelper49(x: number): number {
  return x * 51;
}
