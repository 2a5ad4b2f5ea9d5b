export class A {
  value: any;
  list: any[] = [];
}
