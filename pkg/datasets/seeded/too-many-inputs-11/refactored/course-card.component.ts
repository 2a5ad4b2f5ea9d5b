import { Component, Input, input } from '@angular/core';

export interface CourseCardConfig {
  name: string;
  age: number;
  email: string;
  role: string;
  isActive: boolean;
  showAvatar: boolean;
}

@Component({
  selector: 'app-course-card',
  template: `<div>{{ config.name }}</div>`
})
export class CourseCardComponent {
  @Input() config!: CourseCardConfig;
}
