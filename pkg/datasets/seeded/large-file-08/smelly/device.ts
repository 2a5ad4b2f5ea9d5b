import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-device-view', template: `<p>{{ title }}</p>` })
export class DeviceViewComponent { title = 'Device view'; }

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

export function deviceHelper50(x: number): number {
  return x * 52;
}

export function deviceHelper51(x: number): number {
  return x * 53;
}

export function deviceHelper52(x: number): number {
  return x * 54;
}

export function deviceHelper53(x: number): number {
  return x * 55;
}

export function deviceHelper54(x: number): number {
  return x * 56;
}

export function deviceHelper55(x: number): number {
  return x * 57;
}

export function deviceHelper56(x: number): number {
  return x * 58;
}

export function deviceHelper57(x: number): number {
  return x * 59;
}

export function deviceHelper58(x: number): number {
  return x * 60;
}

export function deviceHelper59(x: number): number {
  return x * 61;
}

export function deviceHelper60(x: number): number {
  return x * 62;
}

export function deviceHelper61(x: number): number {
  return x * 63;
}

export function deviceHelper62(x: number): number {
  return x * 64;
}

export function deviceHelper63(x: number): number {
  return x * 65;
}

export function deviceHelper64(x: number): number {
  return x * 66;
}

export function deviceHelper65(x: number): number {
  return x * 67;
}

export function deviceHelper66(x: number): number {
  return x * 68;
}

export function deviceHelper67(x: number): number {
  return x * 69;
}

export function deviceHelper68(x: number): number {
  return x * 70;
}

export function deviceHelper69(x: number): number {
  return x * 71;
}

export function deviceHelper70(x: number): number {
  return x * 72;
}

export function deviceHelper71(x: number): number {
  return x * 73;
}

export function deviceHelper72(x: number): number {
  return x * 74;
}

export function deviceHelper73(x: number): number {
  return x * 75;
}

export function deviceHelper74(x: number): number {
  return x * 76;
}

export function deviceHelper75(x: number): number {
  return x * 77;
}

export function deviceHelper76(x: number): number {
  return x * 78;
}

export function deviceHelper77(x: number): number {
  return x * 79;
}

export function deviceHelper78(x: number): number {
  return x * 80;
}

export function deviceHelper79(x: number): number {
  return x * 81;
}

export function deviceHelper80(x: number): number {
  return x * 82;
}

export function deviceHelper81(x: number): number {
  return x * 83;
}

export function deviceHelper82(x: number): number {
  return x * 84;
}

export function deviceHelper83(x: number): number {
  return x * 85;
}

export function deviceHelper84(x: number): number {
  return x * 86;
}

export function deviceHelper85(x: number): number {
  return x * 87;
}

export function deviceHelper86(x: number): number {
  return x * 88;
}

export function deviceHelper87(x: number): number {
  return x * 89;
}

export function deviceHelper88(x: number): number {
  return x * 90;
}

export function deviceHelper89(x: number): number {
  return x * 91;
}

export function deviceHelper90(x: number): number {
  return x * 92;
}

export function deviceHelper91(x: number): number {
  return x * 93;
}

export function deviceHelper92(x: number): number {
  return x * 94;
}

export function deviceHelper93(x: number): number {
  return x * 95;
}

export function deviceHelper94(x: number): number {
  return x * 96;
}

export function deviceHelper95(x: number): number {
  return x * 97;
}

export function deviceHelper96(x: number): number {
  return x * 98;
}

export function deviceHelper97(x: number): number {
  return x * 99;
}

export function deviceHelper98(x: number): number {
  return x * 100;
}

export function deviceHelper99(x: number): number {
  return x * 101;
}

export function deviceHelper100(x: number): number {
  return x * 102;
}

export function deviceHelper101(x: number): number {
  return x * 103;
}

export function deviceHelper102(x: number): number {
  return x * 104;
}

export function deviceHelper103(x: number): number {
  return x * 105;
}

export function deviceHelper104(x: number): number {
  return x * 106;
}

export function deviceHelper105(x: number): number {
  return x * 107;
}

export function deviceHelper106(x: number): number {
  return x * 108;
}

export function deviceHelper107(x: number): number {
  return x * 109;
}

export function deviceHelper108(x: number): number {
  return x * 110;
}

export function deviceHelper109(x: number): number {
  return x * 111;
}

export function deviceHelper110(x: number): number {
  return x * 112;
}

export function deviceHelper111(x: number): number {
  return x * 113;
}

export function deviceHelper112(x: number): number {
  return x * 114;
}

export function deviceHelper113(x: number): number {
  return x * 115;
}
