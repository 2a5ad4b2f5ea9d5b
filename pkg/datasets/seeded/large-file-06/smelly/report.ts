import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-report-view', template: `<p>{{ title }}</p>` })
export class ReportViewComponent { title = 'Report view'; }

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

export function reportHelper50(x: number): number {
  return x * 52;
}

export function reportHelper51(x: number): number {
  return x * 53;
}

export function reportHelper52(x: number): number {
  return x * 54;
}

export function reportHelper53(x: number): number {
  return x * 55;
}

export function reportHelper54(x: number): number {
  return x * 56;
}

export function reportHelper55(x: number): number {
  return x * 57;
}

export function reportHelper56(x: number): number {
  return x * 58;
}

export function reportHelper57(x: number): number {
  return x * 59;
}

export function reportHelper58(x: number): number {
  return x * 60;
}

export function reportHelper59(x: number): number {
  return x * 61;
}

export function reportHelper60(x: number): number {
  return x * 62;
}

export function reportHelper61(x: number): number {
  return x * 63;
}

export function reportHelper62(x: number): number {
  return x * 64;
}

export function reportHelper63(x: number): number {
  return x * 65;
}

export function reportHelper64(x: number): number {
  return x * 66;
}

export function reportHelper65(x: number): number {
  return x * 67;
}

export function reportHelper66(x: number): number {
  return x * 68;
}

export function reportHelper67(x: number): number {
  return x * 69;
}

export function reportHelper68(x: number): number {
  return x * 70;
}

export function reportHelper69(x: number): number {
  return x * 71;
}

export function reportHelper70(x: number): number {
  return x * 72;
}

export function reportHelper71(x: number): number {
  return x * 73;
}

export function reportHelper72(x: number): number {
  return x * 74;
}

export function reportHelper73(x: number): number {
  return x * 75;
}

export function reportHelper74(x: number): number {
  return x * 76;
}

export function reportHelper75(x: number): number {
  return x * 77;
}

export function reportHelper76(x: number): number {
  return x * 78;
}

export function reportHelper77(x: number): number {
  return x * 79;
}

export function reportHelper78(x: number): number {
  return x * 80;
}

export function reportHelper79(x: number): number {
  return x * 81;
}

export function reportHelper80(x: number): number {
  return x * 82;
}

export function reportHelper81(x: number): number {
  return x * 83;
}

export function reportHelper82(x: number): number {
  return x * 84;
}

export function reportHelper83(x: number): number {
  return x * 85;
}

export function reportHelper84(x: number): number {
  return x * 86;
}

export function reportHelper85(x: number): number {
  return x * 87;
}

export function reportHelper86(x: number): number {
  return x * 88;
}

export function reportHelper87(x: number): number {
  return x * 89;
}

export function reportHelper88(x: number): number {
  return x * 90;
}

export function reportHelper89(x: number): number {
  return x * 91;
}

export function reportHelper90(x: number): number {
  return x * 92;
}

export function reportHelper91(x: number): number {
  return x * 93;
}

export function reportHelper92(x: number): number {
  return x * 94;
}

export function reportHelper93(x: number): number {
  return x * 95;
}

export function reportHelper94(x: number): number {
  return x * 96;
}

export function reportHelper95(x: number): number {
  return x * 97;
}

export function reportHelper96(x: number): number {
  return x * 98;
}

export function reportHelper97(x: number): number {
  return x * 99;
}

export function reportHelper98(x: number): number {
  return x * 100;
}

export function reportHelper99(x: number): number {
  return x * 101;
}

export function reportHelper100(x: number): number {
  return x * 102;
}

export function reportHelper101(x: number): number {
  return x * 103;
}

export function reportHelper102(x: number): number {
  return x * 104;
}

export function reportHelper103(x: number): number {
  return x * 105;
}

export function reportHelper104(x: number): number {
  return x * 106;
}

export function reportHelper105(x: number): number {
  return x * 107;
}

export function reportHelper106(x: number): number {
  return x * 108;
}

export function reportHelper107(x: number): number {
  return x * 109;
}

export function reportHelper108(x: number): number {
  return x * 110;
}

export function reportHelper109(x: number): number {
  return x * 111;
}
