import { Component, Injectable } from '@angular/core';

@Component({ selector: 'app-course-header', template: `<p>{{ title }}</p>` })
export class CourseHeaderComponent { title = 'Course header'; }

@Component({ selector: 'app-course-footer', template: `<p>{{ title }}</p>` })
export class CourseFooterComponent { title = 'Course footer'; }

@Injectable({ providedIn: 'root' })
export class CourseAnalyticsService {
  run(event: string) { return event + 'analytics'; }
}

@Injectable({ providedIn: 'root' })
export class CourseSessionService {
  run(event: string) { return event + 'session'; }
}
