export interface Booking {
  id: number;
  name: string;
}

export interface Api {
  get(id: number): { subscribe(cb: (v: Booking) => void): void };
}
