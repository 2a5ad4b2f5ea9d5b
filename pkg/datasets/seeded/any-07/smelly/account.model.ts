export interface Account {
  id: number;
  name: string;
}

export interface Api {
  get(id: number): { subscribe(cb: (v: Account) => void): void };
}
