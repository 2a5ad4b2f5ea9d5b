export interface Ticket {
  id: number;
  name: string;
}

export interface Api {
  get(id: number): { subscribe(cb: (v: Ticket) => void): void };
}
