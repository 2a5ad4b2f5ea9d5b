import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class BookingSessionService {
  run(event: string) { return event + 'session'; }
}
