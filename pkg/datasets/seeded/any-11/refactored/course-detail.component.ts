import { Component } from '@angular/core';
import { Course, Api } from './course.model';

@Component({
  selector: 'app-course-detail',
  template: `<p>{{ current?.name }}</p>`
})
export class CourseDetailComponent {
  current: Course | null = null;
  constructor(private api: Api) {}

  toView(x: Course) {
    return x.name;
  }

  meta: Record<string, string> = {};

}
