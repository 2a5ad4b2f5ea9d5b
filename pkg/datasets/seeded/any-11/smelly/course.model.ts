export interface Course {
  id: number;
  name: string;
}

export interface Api {
  get(id: number): { subscribe(cb: (v: Course) => void): void };
}
