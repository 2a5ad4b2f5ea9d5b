export function messageHelper0(x: number): number {
  return x * 2;
}

export function messageHelper1(x: number): number {
  return x * 3;
}

export function messageHelper2(x: number): number {
  return x * 4;
}

export function messageHelper3(x: number): number {
  return x * 5;
}

export function messageHelper4(x: number): number {
  return x * 6;
}

export function messageHelper5(x: number): number {
  return x * 7;
}

export function messageHelper6(x: number): number {
  return x * 8;
}

export function messageHelper7(x: number): number {
  return x * 9;
}

export function messageHelper8(x: number): number {
  return x * 10;
}

export function messageHelper9(x: number): number {
  return x * 11;
}

export function messageHelper10(x: number): number {
  return x * 12;
}

export function messageHelper11(x: number): number {
  return x * 13;
}

export function messageHelper12(x: number): number {
  return x * 14;
}

export function messageHelper13(x: number): number {
  return x * 15;
}

export function messageHelper14(x: number): number {
  return x * 16;
}

export function messageHelper15(x: number): number {
  return x * 17;
}

export function messageHelper16(x: number): number {
  return x * 18;
}

export function messageHelper17(x: number): number {
  return x * 19;
}

export function messageHelper18(x: number): number {
  return x * 20;
}

export function messageHelper19(x: number): number {
  return x * 21;
}

export function messageHelper20(x: number): number {
  return x * 22;
}

export function messageHelper21(x: number): number {
  return x * 23;
}

export function messageHelper22(x: number): number {
  return x * 24;
}

export function messageHelper23(x: number): number {
  return x * 25;
}

export function messageHelper24(x: number): number {
  return x * 26;
}

export function messageHelper25(x: number): number {
  return x * 27;
}

export function messageHelper26(x: number): number {
  return x * 28;
}

export function messageHelper27(x: number): number {
  return x * 29;
}

export function messageHelper28(x: number): number {
  return x * 30;
}

export function messageHelper29(x: number): number {
  return x * 31;
}

export function messageHelper30(x: number): number {
  return x * 32;
}

export function messageHelper31(x: number): number {
  return x * 33;
}

export function messageHelper32(x: number): number {
  return x * 34;
}

export function messageHelper33(x: number): number {
  return x * 35;
}

export function messageHelper34(x: number): number {
  return x * 36;
}

export function messageHelper35(x: number): number {
  return x * 37;
}

export function messageHelper36(x: number): number {
  return x * 38;
}

export function messageHelper37(x: number): number {
  return x * 39;
}

export function messageHelper38(x: number): number {
  return x * 40;
}

export function messageHelper39(x: number): number {
  return x * 41;
}

export function messageHelper40(x: number): number {
  return x * 42;
}

export function messageHelper41(x: number): number {
  return x * 43;
}

export function messageHelper42(x: number): number {
  return x * 44;
}

export function messageHelper43(x: number): number {
  return x * 45;
}

export function messageHelper44(x: number): number {
  return x * 46;
}

export function messageHelper45(x: number): number {
  return x * 47;
}

export function messageHelper46(x: number): number {
  return x * 48;
}

export function messageHelper47(x: number): number {
  return x * 49;
}

export function messageHelper48(x: number): number {
  return x * 50;
}

export function messageHelper49(x: number): number {
  return x * 51;
}
