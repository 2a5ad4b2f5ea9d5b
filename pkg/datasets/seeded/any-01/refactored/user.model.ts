export interface User {
  id: number;
  name: string;
}

export interface Api {
  get(id: number): { subscribe(cb: (v: User) => void): void };
}
