export function patientHelper0(x: number): number {
  return x * 2;
}

export function patientHelper1(x: number): number {
  return x * 3;
}

export function patientHelper2(x: number): number {
  return x * 4;
}

export function patientHelper3(x: number): number {
  return x * 5;
}

export function patientHelper4(x: number): number {
  return x * 6;
}

export function patientHelper5(x: number): number {
  return x * 7;
}

export function patientHelper6(x: number): number {
  return x * 8;
}

export function patientHelper7(x: number): number {
  return x * 9;
}

export function patientHelper8(x: number): number {
  return x * 10;
}

export function patientHelper9(x: number): number {
  return x * 11;
}

export function patientHelper10(x: number): number {
  return x * 12;
}

export function patientHelper11(x: number): number {
  return x * 13;
}

export function patientHelper12(x: number): number {
  return x * 14;
}

export function patientHelper13(x: number): number {
  return x * 15;
}

export function patientHelper14(x: number): number {
  return x * 16;
}

export function patientHelper15(x: number): number {
  return x * 17;
}

export function patientHelper16(x: number): number {
  return x * 18;
}

export function patientHelper17(x: number): number {
  return x * 19;
}

export function patientHelper18(x: number): number {
  return x * 20;
}

export function patientHelper19(x: number): number {
  return x * 21;
}

export function patientHelper20(x: number): number {
  return x * 22;
}

export function patientHelper21(x: number): number {
  return x * 23;
}

export function patientHelper22(x: number): number {
  return x * 24;
}

export function patientHelper23(x: number): number {
  return x * 25;
}

export function patientHelper24(x: number): number {
  return x * 26;
}

export function patientHelper25(x: number): number {
  return x * 27;
}

export function patientHelper26(x: number): number {
  return x * 28;
}

export function patientHelper27(x: number): number {
  return x * 29;
}

export function patientHelper28(x: number): number {
  return x * 30;
}

export function patientHelper29(x: number): number {
  return x * 31;
}

export function patientHelper30(x: number): number {
  return x * 32;
}

export function patientHelper31(x: number): number {
  return x * 33;
}

export function patientHelper32(x: number): number {
  return x * 34;
}

export function patientHelper33(x: number): number {
  return x * 35;
}

export function patientHelper34(x: number): number {
  return x * 36;
}

export function patientHelper35(x: number): number {
  return x * 37;
}

export function patientHelper36(x: number): number {
  return x * 38;
}

export function patientHelper37(x: number): number {
  return x * 39;
}

export function patientHelper38(x: number): number {
  return x * 40;
}

export function patientHelper39(x: number): number {
  return x * 41;
}

export function patientHelper40(x: number): number {
  return x * 42;
}

export function patientHelper41(x: number): number {
  return x * 43;
}

export function patientHelper42(x: number): number {
  return x * 44;
}

export function patientHelper43(x: number): number {
  return x * 45;
}

export function patientHelper44(x: number): number {
  return x * 46;
}

export function patientHelper45(x: number): number {
  return x * 47;
}

export function patientHelper46(x: number): number {
  return x * 48;
}

export function patientHelper47(x: number): number {
  return x * 49;
}

export function patientHelper48(x: number): number {
  return x * 50;
}

export function patientHelper49(x: number): number {
  return x * 51;
}
