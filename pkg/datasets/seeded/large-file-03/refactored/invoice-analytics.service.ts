import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class InvoiceAnalyticsService {
  run(event: string) { return event + 'analytics'; }
}
