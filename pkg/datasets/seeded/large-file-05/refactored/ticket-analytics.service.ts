import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class TicketAnalyticsService {
  run(event: string) { return event + 'analytics'; }
}
