export interface Invoice {
  id: number;
  name: string;
}

export interface Api {
  get(id: number): { subscribe(cb: (v: Invoice) => void): void };
}
