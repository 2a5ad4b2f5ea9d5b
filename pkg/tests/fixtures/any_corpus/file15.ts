export class C {
  private cache: { [id: number]: any } = {};
  get(id: number): any { return this.cache[id]; }
}
