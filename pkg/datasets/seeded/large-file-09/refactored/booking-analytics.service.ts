import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class BookingAnalyticsService {
  run(event: string) { return event + 'analytics'; }
}
