import { Injectable } from '@angular/core';

export interface Greeting {
  text: string;
  audience: string;
}

@Injectable({ providedIn: 'root' })
export class GreetingService {
  greet(audience: string): Greeting {
    return { text: `Hello, ${audience}`, audience };
  }
}
