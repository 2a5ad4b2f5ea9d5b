import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-patient-view', template: `<p>{{ title }}</p>` })
export class PatientViewComponent { title = 'Patient view'; }

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

export function patientHelper50(x: number): number {
  return x * 52;
}

export function patientHelper51(x: number): number {
  return x * 53;
}

export function patientHelper52(x: number): number {
  return x * 54;
}

export function patientHelper53(x: number): number {
  return x * 55;
}

export function patientHelper54(x: number): number {
  return x * 56;
}

export function patientHelper55(x: number): number {
  return x * 57;
}

export function patientHelper56(x: number): number {
  return x * 58;
}

export function patientHelper57(x: number): number {
  return x * 59;
}

export function patientHelper58(x: number): number {
  return x * 60;
}

export function patientHelper59(x: number): number {
  return x * 61;
}

export function patientHelper60(x: number): number {
  return x * 62;
}

export function patientHelper61(x: number): number {
  return x * 63;
}

export function patientHelper62(x: number): number {
  return x * 64;
}

export function patientHelper63(x: number): number {
  return x * 65;
}

export function patientHelper64(x: number): number {
  return x * 66;
}

export function patientHelper65(x: number): number {
  return x * 67;
}

export function patientHelper66(x: number): number {
  return x * 68;
}

export function patientHelper67(x: number): number {
  return x * 69;
}

export function patientHelper68(x: number): number {
  return x * 70;
}

export function patientHelper69(x: number): number {
  return x * 71;
}

export function patientHelper70(x: number): number {
  return x * 72;
}

export function patientHelper71(x: number): number {
  return x * 73;
}

export function patientHelper72(x: number): number {
  return x * 74;
}

export function patientHelper73(x: number): number {
  return x * 75;
}

export function patientHelper74(x: number): number {
  return x * 76;
}

export function patientHelper75(x: number): number {
  return x * 77;
}

export function patientHelper76(x: number): number {
  return x * 78;
}

export function patientHelper77(x: number): number {
  return x * 79;
}

export function patientHelper78(x: number): number {
  return x * 80;
}

export function patientHelper79(x: number): number {
  return x * 81;
}

export function patientHelper80(x: number): number {
  return x * 82;
}

export function patientHelper81(x: number): number {
  return x * 83;
}

export function patientHelper82(x: number): number {
  return x * 84;
}

export function patientHelper83(x: number): number {
  return x * 85;
}

export function patientHelper84(x: number): number {
  return x * 86;
}

export function patientHelper85(x: number): number {
  return x * 87;
}

export function patientHelper86(x: number): number {
  return x * 88;
}

export function patientHelper87(x: number): number {
  return x * 89;
}

export function patientHelper88(x: number): number {
  return x * 90;
}

export function patientHelper89(x: number): number {
  return x * 91;
}

export function patientHelper90(x: number): number {
  return x * 92;
}

export function patientHelper91(x: number): number {
  return x * 93;
}

export function patientHelper92(x: number): number {
  return x * 94;
}

export function patientHelper93(x: number): number {
  return x * 95;
}

export function patientHelper94(x: number): number {
  return x * 96;
}

export function patientHelper95(x: number): number {
  return x * 97;
}

export function patientHelper96(x: number): number {
  return x * 98;
}

export function patientHelper97(x: number): number {
  return x * 99;
}

export function patientHelper98(x: number): number {
  return x * 100;
}

export function patientHelper99(x: number): number {
  return x * 101;
}

export function patientHelper100(x: number): number {
  return x * 102;
}

export function patientHelper101(x: number): number {
  return x * 103;
}

export function patientHelper102(x: number): number {
  return x * 104;
}

export function patientHelper103(x: number): number {
  return x * 105;
}

export function patientHelper104(x: number): number {
  return x * 106;
}

export function patientHelper105(x: number): number {
  return x * 107;
}

export function patientHelper106(x: number): number {
  return x * 108;
}

export function patientHelper107(x: number): number {
  return x * 109;
}

export function patientHelper108(x: number): number {
  return x * 110;
}

export function patientHelper109(x: number): number {
  return x * 111;
}

export function patientHelper110(x: number): number {
  return x * 112;
}

export function patientHelper111(x: number): number {
  return x * 113;
}

export function patientHelper112(x: number): number {
  return x * 114;
}

export function patientHelper113(x: number): number {
  return x * 115;
}

export function patientHelper114(x: number): number {
  return x * 116;
}

export function patientHelper115(x: number): number {
  return x * 117;
}

export function patientHelper116(x: number): number {
  return x * 118;
}

export function patientHelper117(x: number): number {
  return x * 119;
}

export function patientHelper118(x: number): number {
  return x * 120;
}

export function patientHelper119(x: number): number {
  return x * 121;
}

export function patientHelper120(x: number): number {
  return x * 122;
}
