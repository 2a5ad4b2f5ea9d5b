import { Component } from '@angular/core';

@Component({
  selector: 'app-course-dashboard',
  template: `<app-course-load-panel></app-course-load-panel><app-course-log-panel></app-course-log-panel><app-course-chart-panel></app-course-chart-panel>`
})
export class CourseDashboardComponent {}
