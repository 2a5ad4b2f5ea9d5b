import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-product-view', template: `<p>{{ title }}</p>` })
export class ProductViewComponent { title = 'Product view'; }

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

export function productHelper50(x: number): number {
  return x * 52;
}

export function productHelper51(x: number): number {
  return x * 53;
}

export function productHelper52(x: number): number {
  return x * 54;
}

export function productHelper53(x: number): number {
  return x * 55;
}

export function productHelper54(x: number): number {
  return x * 56;
}

export function productHelper55(x: number): number {
  return x * 57;
}

export function productHelper56(x: number): number {
  return x * 58;
}

export function productHelper57(x: number): number {
  return x * 59;
}

export function productHelper58(x: number): number {
  return x * 60;
}

export function productHelper59(x: number): number {
  return x * 61;
}

export function productHelper60(x: number): number {
  return x * 62;
}

export function productHelper61(x: number): number {
  return x * 63;
}

export function productHelper62(x: number): number {
  return x * 64;
}

export function productHelper63(x: number): number {
  return x * 65;
}

export function productHelper64(x: number): number {
  return x * 66;
}

export function productHelper65(x: number): number {
  return x * 67;
}

export function productHelper66(x: number): number {
  return x * 68;
}

export function productHelper67(x: number): number {
  return x * 69;
}

export function productHelper68(x: number): number {
  return x * 70;
}

export function productHelper69(x: number): number {
  return x * 71;
}

export function productHelper70(x: number): number {
  return x * 72;
}

export function productHelper71(x: number): number {
  return x * 73;
}

export function productHelper72(x: number): number {
  return x * 74;
}

export function productHelper73(x: number): number {
  return x * 75;
}

export function productHelper74(x: number): number {
  return x * 76;
}

export function productHelper75(x: number): number {
  return x * 77;
}

export function productHelper76(x: number): number {
  return x * 78;
}

export function productHelper77(x: number): number {
  return x * 79;
}

export function productHelper78(x: number): number {
  return x * 80;
}

export function productHelper79(x: number): number {
  return x * 81;
}

export function productHelper80(x: number): number {
  return x * 82;
}

export function productHelper81(x: number): number {
  return x * 83;
}

export function productHelper82(x: number): number {
  return x * 84;
}

export function productHelper83(x: number): number {
  return x * 85;
}

export function productHelper84(x: number): number {
  return x * 86;
}

export function productHelper85(x: number): number {
  return x * 87;
}

export function productHelper86(x: number): number {
  return x * 88;
}

export function productHelper87(x: number): number {
  return x * 89;
}

export function productHelper88(x: number): number {
  return x * 90;
}

export function productHelper89(x: number): number {
  return x * 91;
}

export function productHelper90(x: number): number {
  return x * 92;
}

export function productHelper91(x: number): number {
  return x * 93;
}

export function productHelper92(x: number): number {
  return x * 94;
}

export function productHelper93(x: number): number {
  return x * 95;
}

export function productHelper94(x: number): number {
  return x * 96;
}

export function productHelper95(x: number): number {
  return x * 97;
}

export function productHelper96(x: number): number {
  return x * 98;
}

export function productHelper97(x: number): number {
  return x * 99;
}

export function productHelper98(x: number): number {
  return x * 100;
}

export function productHelper99(x: number): number {
  return x * 101;
}

export function productHelper100(x: number): number {
  return x * 102;
}

export function productHelper101(x: number): number {
  return x * 103;
}

export function productHelper102(x: number): number {
  return x * 104;
}

export function productHelper103(x: number): number {
  return x * 105;
}

export function productHelper104(x: number): number {
  return x * 106;
}

export function productHelper105(x: number): number {
  return x * 107;
}

export function productHelper106(x: number): number {
  return x * 108;
}
