export interface Report {
  id: number;
  name: string;
}

export interface Api {
  get(id: number): { subscribe(cb: (v: Report) => void): void };
}
