export interface Order {
  id: number;
  name: string;
}

export interface Api {
  get(id: number): { subscribe(cb: (v: Order) => void): void };
}
