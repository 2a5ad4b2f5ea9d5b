import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class UserAnalyticsService {
  run(event: string) { return event + 'analytics'; }
}
