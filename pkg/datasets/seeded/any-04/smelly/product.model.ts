export interface Product {
  id: number;
  name: string;
}

export interface Api {
  get(id: number): { subscribe(cb: (v: Product) => void): void };
}
