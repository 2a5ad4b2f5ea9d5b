import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class TicketSessionService {
  run(event: string) { return event + 'session'; }
}
