export interface Device {
  id: number;
  name: string;
}

export interface Api {
  get(id: number): { subscribe(cb: (v: Device) => void): void };
}
