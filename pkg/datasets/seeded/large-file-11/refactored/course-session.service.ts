import { Component, Injectable } from '@angular/core';

@Injectable({ providedIn: 'root' })
export class CourseSessionService {
  run(event: string) { return event + 'session'; }
}
