import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-order-view', template: `<p>{{ title }}</p>` })
export class OrderViewComponent { title = 'Order view'; }

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

export function orderHelper50(x: number): number {
  return x * 52;
}

export function orderHelper51(x: number): number {
  return x * 53;
}

export function orderHelper52(x: number): number {
  return x * 54;
}

export function orderHelper53(x: number): number {
  return x * 55;
}

export function orderHelper54(x: number): number {
  return x * 56;
}

export function orderHelper55(x: number): number {
  return x * 57;
}

export function orderHelper56(x: number): number {
  return x * 58;
}

export function orderHelper57(x: number): number {
  return x * 59;
}

export function orderHelper58(x: number): number {
  return x * 60;
}

export function orderHelper59(x: number): number {
  return x * 61;
}

export function orderHelper60(x: number): number {
  return x * 62;
}

export function orderHelper61(x: number): number {
  return x * 63;
}

export function orderHelper62(x: number): number {
  return x * 64;
}

export function orderHelper63(x: number): number {
  return x * 65;
}

export function orderHelper64(x: number): number {
  return x * 66;
}

export function orderHelper65(x: number): number {
  return x * 67;
}

export function orderHelper66(x: number): number {
  return x * 68;
}

export function orderHelper67(x: number): number {
  return x * 69;
}

export function orderHelper68(x: number): number {
  return x * 70;
}

export function orderHelper69(x: number): number {
  return x * 71;
}

export function orderHelper70(x: number): number {
  return x * 72;
}

export function orderHelper71(x: number): number {
  return x * 73;
}

export function orderHelper72(x: number): number {
  return x * 74;
}

export function orderHelper73(x: number): number {
  return x * 75;
}

export function orderHelper74(x: number): number {
  return x * 76;
}

export function orderHelper75(x: number): number {
  return x * 77;
}

export function orderHelper76(x: number): number {
  return x * 78;
}

export function orderHelper77(x: number): number {
  return x * 79;
}

export function orderHelper78(x: number): number {
  return x * 80;
}

export function orderHelper79(x: number): number {
  return x * 81;
}

export function orderHelper80(x: number): number {
  return x * 82;
}

export function orderHelper81(x: number): number {
  return x * 83;
}

export function orderHelper82(x: number): number {
  return x * 84;
}

export function orderHelper83(x: number): number {
  return x * 85;
}

export function orderHelper84(x: number): number {
  return x * 86;
}

export function orderHelper85(x: number): number {
  return x * 87;
}

export function orderHelper86(x: number): number {
  return x * 88;
}

export function orderHelper87(x: number): number {
  return x * 89;
}

export function orderHelper88(x: number): number {
  return x * 90;
}

export function orderHelper89(x: number): number {
  return x * 91;
}

export function orderHelper90(x: number): number {
  return x * 92;
}

export function orderHelper91(x: number): number {
  return x * 93;
}

export function orderHelper92(x: number): number {
  return x * 94;
}

export function orderHelper93(x: number): number {
  return x * 95;
}

export function orderHelper94(x: number): number {
  return x * 96;
}

export function orderHelper95(x: number): number {
  return x * 97;
}

export function orderHelper96(x: number): number {
  return x * 98;
}

export function orderHelper97(x: number): number {
  return x * 99;
}

export function orderHelper98(x: number): number {
  return x * 100;
}

export function orderHelper99(x: number): number {
  return x * 101;
}

export function orderHelper100(x: number): number {
  return x * 102;
}

export function orderHelper101(x: number): number {
  return x * 103;
}

export function orderHelper102(x: number): number {
  return x * 104;
}
