import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class AccountAnalyticsService {
  run(event: string) { return event + 'analytics'; }
}
