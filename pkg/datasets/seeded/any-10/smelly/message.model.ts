export interface Message {
  id: number;
  name: string;
}

export interface Api {
  get(id: number): { subscribe(cb: (v: Message) => void): void };
}
