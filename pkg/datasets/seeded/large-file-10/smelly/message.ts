import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-message-view', template: `<p>{{ title }}</p>` })
export class MessageViewComponent { title = 'Message view'; }

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

export function messageHelper100(x: number): number {
  return x * 102;
}

export function messageHelper101(x: number): number {
  return x * 103;
}

export function messageHelper102(x: number): number {
  return x * 104;
}

export function messageHelper103(x: number): number {
  return x * 105;
}

export function messageHelper104(x: number): number {
  return x * 106;
}

export function messageHelper105(x: number): number {
  return x * 107;
}

export function messageHelper106(x: number): number {
  return x * 108;
}

export function messageHelper107(x: number): number {
  return x * 109;
}

export function messageHelper108(x: number): number {
  return x * 110;
}

export function messageHelper109(x: number): number {
  return x * 111;
}

export function messageHelper110(x: number): number {
  return x * 112;
}

export function messageHelper111(x: number): number {
  return x * 113;
}

export function messageHelper112(x: number): number {
  return x * 114;
}

export function messageHelper113(x: number): number {
  return x * 115;
}

export function messageHelper114(x: number): number {
  return x * 116;
}

export function messageHelper115(x: number): number {
  return x * 117;
}

export function messageHelper116(x: number): number {
  return x * 118;
}
