export interface Patient {
  id: number;
  name: string;
}

export interface Api {
  get(id: number): { subscribe(cb: (v: Patient) => void): void };
}
