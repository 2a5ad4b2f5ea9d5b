export class B {
  constructor(private readonly dep: any) {}
  run(cb: (e: any) => void) { cb(this.dep); }
}
