export function reportHelper0(x: number): number {
  return x * 2;
}

export function reportHelper1(x: number): number {
  return x * 3;
}

export function reportHelper2(x: number): number {
  return x * 4;
}

export function reportHelper3(x: number): number {
  return x * 5;
}

export function reportHelper4(x: number): number {
  return x * 6;
}

export function reportHelper5(x: number): number {
  return x * 7;
}

export function reportHelper6(x: number): number {
  return x * 8;
}

export function reportHelper7(x: number): number {
  return x * 9;
}

export function reportHelper8(x: number): number {
  return x * 10;
}

export function reportHelper9(x: number): number {
  return x * 11;
}

export function reportHelper10(x: number): number {
  return x * 12;
}

export function reportHelper11(x: number): number {
  return x * 13;
}

export function reportHelper12(x: number): number {
  return x * 14;
}

export function reportHelper13(x: number): number {
  return x * 15;
}

export function reportHelper14(x: number): number {
  return x * 16;
}

export function reportHelper15(x: number): number {
  return x * 17;
}

export function reportHelper16(x: number): number {
  return x * 18;
}

export function reportHelper17(x: number): number {
  return x * 19;
}

export function reportHelper18(x: number): number {
  return x * 20;
}

export function reportHelper19(x: number): number {
  return x * 21;
}

export function reportHelper20(x: number): number {
  return x * 22;
}

export function reportHelper21(x: number): number {
  return x * 23;
}

export function reportHelper22(x: number): number {
  return x * 24;
}

export function reportHelper23(x: number): number {
  return x * 25;
}

export function reportHelper24(x: number): number {
  return x * 26;
}

export function reportHelper25(x: number): number {
  return x * 27;
}

export function reportHelper26(x: number): number {
  return x * 28;
}

export function reportHelper27(x: number): number {
  return x * 29;
}

export function reportHelper28(x: number): number {
  return x * 30;
}

export function reportHelper29(x: number): number {
  return x * 31;
}

export function reportHelper30(x: number): number {
  return x * 32;
}

export function reportHelper31(x: number): number {
  return x * 33;
}

export function reportHelper32(x: number): number {
  return x * 34;
}

export function reportHelper33(x: number): number {
  return x * 35;
}

export function reportHelper34(x: number): number {
  return x * 36;
}

export function reportHelper35(x: number): number {
  return x * 37;
}

export function reportHelper36(x: number): number {
  return x * 38;
}

export function reportHelper37(x: number): number {
  return x * 39;
}

export function reportHelper38(x: number): number {
  return x * 40;
}

export function reportHelper39(x: number): number {
  return x * 41;
}

export function reportHelper40(x: number): number {
  return x * 42;
}

export function reportHelper41(x: number): number {
  return x * 43;
}

export function reportHelper42(x: number): number {
  return x * 44;
}

export function reportHelper43(x: number): number {
  return x * 45;
}

export function reportHelper44(x: number): number {
  return x * 46;
}

export function reportHelper45(x: number): number {
  return x * 47;
}

export function reportHelper46(x: number): number {
  return x * 48;
}

export function reportHelper47(x: number): number {
  return x * 49;
}

export function reportHelper48(x: number): number {
  return x * 50;
}

export function reportHelper49(x: number): number {
  return x * 51;
}
