import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class CourseAnalyticsService {
  run(event: string) { return event + 'analytics'; }
}
